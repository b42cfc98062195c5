from __future__ import annotations

from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qpoints.components import (
    PointVariety,
    ProjectivePoint,
    all_pairs,
    brute_force_components,
    coherence_graph,
    components,
    dimension,
    iter_maximal_cliques,
    maximal_cliques,
    membership,
    recursive_components,
    relabel,
)
from qpoints.errors import ComponentLimitExceeded, IndexOutOfRange, InvalidPoint, LengthMismatch, TooLarge
from qpoints.matrix import (
    Pool,
    example_p3_matrix,
    gauge_twist,
    is_rank_one,
    is_rank_one_subset,
    ones_matrix,
    random_matrix,
    sign_matrix,
)
from qpoints.scalar import ONE, symbol

from conftest import quantum_matrices, small_units, unit_monomials

a, c = symbol("a"), symbol("c")
EX = example_p3_matrix()


def brute_cliques(vertices, edges):
    def is_clique(S):
        return all(frozenset(p) in edges for p in combinations(S, 2))

    cliques = [set(S) for k in range(1, len(vertices) + 1) for S in combinations(vertices, k) if is_clique(S)]
    return {tuple(sorted(S)) for S in cliques if not any(S < T for T in cliques)}


def adjacency(vertices, edges):
    return {v: frozenset(u for u in vertices if frozenset((u, v)) in edges) for v in vertices}


def test_coherence_graph_examples():
    g = coherence_graph(ones_matrix(3), 0)
    assert g.vertices == (1, 2, 3)
    assert g.edges == {frozenset(p) for p in combinations((1, 2, 3), 2)}
    assert coherence_graph(sign_matrix(3), 0).edges == frozenset()
    assert coherence_graph(EX, 0).edges == {frozenset({1, 2})}
    with pytest.raises(IndexOutOfRange):
        coherence_graph(EX, 4)


def test_maximal_clique_examples():
    verts = (1, 2, 3, 4)
    complete = {frozenset(p) for p in combinations(verts, 2)}
    assert set(iter_maximal_cliques(adjacency(verts, complete))) == {verts}
    assert set(iter_maximal_cliques(adjacency(verts, set()))) == {(1,), (2,), (3,), (4,)}
    path = {frozenset({1, 2}), frozenset({2, 3})}
    assert set(iter_maximal_cliques(adjacency((1, 2, 3), path))) == {(1, 2), (2, 3)}
    assert maximal_cliques(coherence_graph(EX, 0)) == {(1, 2), (3,)}


@st.composite
def graphs(draw):
    k = draw(st.integers(0, 9))
    verts = tuple(range(k))
    edges = {frozenset(p) for p in combinations(verts, 2) if draw(st.booleans())}
    return verts, edges


@settings(max_examples=300)
@given(graphs())
def test_maximal_cliques_match_exhaustive(g):
    verts, edges = g
    found = list(iter_maximal_cliques(adjacency(verts, edges)))
    assert len(found) == len(set(found))
    assert set(found) == brute_cliques(verts, edges)


def test_components_examples():
    assert components(EX).components == {(0, 1, 2), (1, 2, 3), (0, 3)}
    assert components(example_p3_matrix(a * c)).components == {(0, 1, 2, 3)}
    assert components(sign_matrix(3)).components == all_pairs(3)
    assert components(ones_matrix(0)).components == {(0,)}


def test_oracle_examples():
    for Q in (EX, sign_matrix(3), example_p3_matrix(a * c)):
        assert brute_force_components(Q) == components(Q)
        assert recursive_components(Q) == components(Q)
    assert brute_force_components(ones_matrix(5)).components == {tuple(range(6))}
    assert recursive_components(ones_matrix(0)).components == {(0,)}
    with pytest.raises(TooLarge):
        brute_force_components(ones_matrix(17))


def test_membership_examples():
    one = ONE
    assert membership(EX, ProjectivePoint((one, None, None, one)))
    assert not membership(EX, ProjectivePoint((one, one, None, one)))
    assert membership(example_p3_matrix(a * c), ProjectivePoint((one, one, None, one)))
    for k in range(4):
        coords = [None] * 4
        coords[k] = a
        assert membership(sign_matrix(3), ProjectivePoint(tuple(coords)))
    with pytest.raises(InvalidPoint):
        ProjectivePoint((None, None))
    with pytest.raises(LengthMismatch):
        membership(EX, ProjectivePoint((one,)))


def test_dimension_examples():
    for n in range(1, 8):
        assert dimension(sign_matrix(n)) == 1
        assert dimension(ones_matrix(n)) == n
    assert dimension(EX) == 2
    assert dimension(ones_matrix(0)) == 0


def test_component_cap():
    assert len(components(sign_matrix(4), max_components=10).components) == 10
    with pytest.raises(ComponentLimitExceeded):
        components(sign_matrix(4), max_components=9)


def test_threads_same_result():
    for seed in range(30):
        Q = random_matrix(7, seed, Pool(max_denominator=2, symbols=1))
        assert components(Q, threads=4) == components(Q)


def test_point_variety_rejects_nested():
    with pytest.raises(ValueError):
        PointVariety(2, frozenset({(0, 1), (0, 1, 2)}))


def test_at_most_two_planes_in_proper_p3():
    # four coherence conditions of a tetrahedron: any three force the fourth
    for seed in range(300):
        Q = random_matrix(3, seed, Pool(max_denominator=2, symbols=1, zero_bias=0.7))
        planes = [S for S in combinations(range(4), 3) if is_rank_one_subset(Q, S)]
        assert len(planes) != 3
        if len(planes) == 4:
            assert is_rank_one(Q)


# --- invariants -------------------------------------------------------------

@settings(max_examples=150, deadline=None)
@given(quantum_matrices(min_n=0, max_n=7))
def test_three_algorithms_agree(Q):
    v = components(Q)
    assert brute_force_components(Q) == v
    assert recursive_components(Q) == v
    assert recursive_components(Q, eliminate="first") == v


@settings(max_examples=150, deadline=None)
@given(quantum_matrices(min_n=0, max_n=7))
def test_variety_invariants(Q):
    v = components(Q)
    comps = [set(S) for S in v.components]
    for S, T in combinations(comps, 2):
        assert not (S <= T or T <= S)
    for k in range(Q.size):
        assert any(k in S for S in comps)
    for pair in combinations(range(Q.size), 2):
        assert any(set(pair) <= S for S in comps)
    for S in v.components:
        assert is_rank_one_subset(Q, S)
        for k in set(range(Q.size)) - set(S):
            assert not is_rank_one_subset(Q, set(S) | {k})


@settings(max_examples=150, deadline=None)
@given(quantum_matrices(min_n=1, max_n=6), st.data())
def test_gauge_invariance(Q, data):
    w = data.draw(st.lists(unit_monomials(), min_size=Q.size, max_size=Q.size))
    assert components(gauge_twist(Q, w)) == components(Q)


@settings(max_examples=150, deadline=None)
@given(quantum_matrices(min_n=0, max_n=6), st.data())
def test_permutation_equivariance(Q, data):
    perm = data.draw(st.permutations(range(Q.size)))
    assert components(Q.permuted(perm)) == relabel(components(Q), perm)


@settings(max_examples=150, deadline=None)
@given(quantum_matrices(min_n=0, max_n=6))
def test_full_space_iff_rank_one(Q):
    assert components(Q).is_full_space == is_rank_one(Q)


@settings(max_examples=150, deadline=None)
@given(quantum_matrices(min_n=0, max_n=6), st.data())
def test_membership_consistent(Q, data):
    coords = data.draw(st.lists(st.one_of(st.none(), small_units()), min_size=Q.size, max_size=Q.size)
                       .filter(lambda cs: any(x is not None for x in cs)))
    p = ProjectivePoint(tuple(coords))
    assert membership(Q, p) == components(Q).contains_support(p.support)
