"""Irreducible components of the point variety.

The point variety is a union of coordinate subspaces ``P(S)`` over index sets
``S`` whose principal submatrix has rank one.  Its components are the maximal
such ``S``.  For a fixed base index ``i``, the rank-one sets containing ``i``
are exactly ``{i} | C`` for cliques ``C`` of the coherence graph at ``i``, so
the components are read off from maximal cliques, one graph per base.

:func:`components` is the production path.  :func:`brute_force_components`
(subset enumeration) and :func:`recursive_components` (split into the
hyperplane ``u_n = 0`` and its complement) are independent cross-checks.
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Literal, Sequence

from .errors import ComponentLimitExceeded, IndexOutOfRange, InvalidPoint, LengthMismatch, TooLarge
from .matrix import (
    IndexSubset,
    QuantumMatrix,
    coherent,
    delete_index,
    is_rank_one_subset,
    is_rank_one_subset_exhaustive,
    localize,
)
from .scalar import UnitMonomial

BRUTE_FORCE_MAX_N = 16


@dataclass(frozen=True)
class CoherenceGraph:
    base: int
    vertices: tuple[int, ...]
    adjacency: dict[int, frozenset[int]] = field(compare=False)

    @property
    def edges(self) -> frozenset[frozenset[int]]:
        return frozenset(frozenset((u, v)) for u in self.vertices for v in self.adjacency[u] if u < v)


def coherence_graph(Q: QuantumMatrix, i: int) -> CoherenceGraph:
    if not 0 <= i <= Q.n:
        raise IndexOutOfRange(f"index {i} outside 0..{Q.n}")
    vertices = tuple(k for k in range(Q.size) if k != i)
    adj: dict[int, set[int]] = {v: set() for v in vertices}
    for j, l in combinations(vertices, 2):
        if coherent(Q, i, j, l):
            adj[j].add(l)
            adj[l].add(j)
    return CoherenceGraph(i, vertices, {v: frozenset(s) for v, s in adj.items()})


def _degeneracy_order(adjacency: dict[int, frozenset[int]]) -> list[int]:
    """Repeatedly remove a vertex of minimum remaining degree (ties: smallest label)."""
    degree = {v: len(nb) for v, nb in adjacency.items()}
    remaining = set(adjacency)
    order = []
    while remaining:
        v = min(remaining, key=lambda u: (degree[u], u))
        order.append(v)
        remaining.remove(v)
        for u in adjacency[v]:
            if u in remaining:
                degree[u] -= 1
    return order


def _bron_kerbosch_pivot(
    adjacency: dict[int, frozenset[int]], R: list[int], P: set[int], X: set[int]
) -> Iterator[list[int]]:
    if not P and not X:
        yield list(R)
        return
    pivot = max(P | X, key=lambda u: (len(adjacency[u] & P), -u))
    for v in sorted(P - adjacency[pivot]):
        nb = adjacency[v]
        R.append(v)
        yield from _bron_kerbosch_pivot(adjacency, R, P & nb, X & nb)
        R.pop()
        P.discard(v)
        X.add(v)


def iter_maximal_cliques(adjacency: dict[int, frozenset[int]]) -> Iterator[IndexSubset]:
    """Maximal cliques of an undirected graph, Eppstein-Loffler-Strash style.

    The outer loop follows a degeneracy ordering; each inner call is
    Tomita-pivoted Bron-Kerbosch. Isolated vertices come out as singletons.
    """
    order = _degeneracy_order(adjacency)
    position = {v: k for k, v in enumerate(order)}
    for v in order:
        later = {u for u in adjacency[v] if position[u] > position[v]}
        earlier = {u for u in adjacency[v] if position[u] < position[v]}
        for clique in _bron_kerbosch_pivot(adjacency, [v], later, earlier):
            yield tuple(sorted(clique))


def maximal_cliques(g: CoherenceGraph) -> frozenset[IndexSubset]:
    return frozenset(iter_maximal_cliques(g.adjacency))


@dataclass(frozen=True)
class PointVariety:
    """Antichain of index sets; each set ``S`` stands for the coordinate subspace ``P(S)``."""

    n: int
    components: frozenset[IndexSubset]

    def __post_init__(self):
        comps = [frozenset(c) for c in self.components]
        for a, b in combinations(comps, 2):
            if a <= b or b <= a:
                raise ValueError(f"components {sorted(a)} and {sorted(b)} are nested")

    @classmethod
    def from_subsets(cls, n: int, subsets: Iterable[Iterable[int]]) -> PointVariety:
        """Keep only the maximal members of ``subsets``."""
        sets = {frozenset(s) for s in subsets}
        maximal = [s for s in sets if not any(s < t for t in sets)]
        return cls(n, frozenset(tuple(sorted(s)) for s in maximal))

    def sorted_components(self) -> list[IndexSubset]:
        return sorted(self.components, key=lambda c: (-len(c), c))

    @property
    def dimension(self) -> int:
        return max(len(c) for c in self.components) - 1

    @property
    def is_full_space(self) -> bool:
        return self.components == frozenset({tuple(range(self.n + 1))})

    def contains_support(self, support: Iterable[int]) -> bool:
        s = set(support)
        return any(s <= set(c) for c in self.components)


def _components_at(Q: QuantumMatrix, i: int) -> list[IndexSubset]:
    g = coherence_graph(Q, i)
    return [tuple(sorted((i,) + c)) for c in iter_maximal_cliques(g.adjacency)]


def components(Q: QuantumMatrix, max_components: int | None = None, threads: int = 1) -> PointVariety:
    """Maximal rank-one index sets, found by clique enumeration at every base index.

    The number of components can grow exponentially with ``n``; pass
    ``max_components`` to fail fast with :class:`ComponentLimitExceeded`.
    """
    if Q.n == 0:
        return PointVariety(0, frozenset({(0,)}))
    found: set[IndexSubset] = set()

    def merge(batch: Iterable[IndexSubset]) -> None:
        found.update(batch)
        if max_components is not None and len(found) > max_components:
            raise ComponentLimitExceeded(f"more than {max_components} components")

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            for batch in pool.map(lambda i: _components_at(Q, i), range(Q.size)):
                merge(batch)
    else:
        for i in range(Q.size):
            merge(_components_at(Q, i))
    return PointVariety(Q.n, frozenset(found))


def brute_force_components(Q: QuantumMatrix) -> PointVariety:
    """Test every subset with the all-triples criterion; keep the maximal ones."""
    if Q.n > BRUTE_FORCE_MAX_N:
        raise TooLarge(f"brute force limited to n <= {BRUTE_FORCE_MAX_N}, got n = {Q.n}")
    size = Q.size
    good = []
    for mask in range(1, 1 << size):
        S = [k for k in range(size) if mask >> k & 1]
        if is_rank_one_subset_exhaustive(Q, S):
            good.append(mask)
    good_set = set(good)
    # rank-one sets are closed under taking subsets, so maximality only needs one-element extensions
    maximal = [
        m for m in good if not any((m | 1 << k) in good_set for k in range(size) if not m >> k & 1)
    ]
    return PointVariety(Q.n, frozenset(tuple(k for k in range(size) if m >> k & 1) for m in maximal))


def _localized_supports(Q: QuantumMatrix, i: int) -> list[IndexSubset]:
    """Maximal supports ``{i} | T`` of points off the hyperplane ``u_i = 0``.

    Coordinates ``j, l`` in ``T`` may both be nonzero only if the localized
    parameter ``r[j, l]`` equals one.
    """
    R, index_map = localize(Q, i)
    back = {new: old for old, new in index_map.items()}
    adj = {
        new: frozenset(m for m in range(R.size) if m != new and R[new, m].is_one())
        for new in range(R.size)
    }
    return [tuple(sorted([i] + [back[k] for k in c])) for c in iter_maximal_cliques(adj)]


def recursive_components(Q: QuantumMatrix, eliminate: Literal["last", "first"] = "last") -> PointVariety:
    """Split along one coordinate hyperplane and recurse into it."""
    if Q.n == 0:
        return PointVariety(0, frozenset({(0,)}))
    i = Q.n if eliminate == "last" else 0
    Qbar, index_map = delete_index(Q, i)
    back = {new: old for old, new in index_map.items()}
    inside = [tuple(back[k] for k in c) for c in recursive_components(Qbar, eliminate).components]
    outside = _localized_supports(Q, i)
    return PointVariety.from_subsets(Q.n, inside + outside)


@dataclass(frozen=True)
class ProjectivePoint:
    """Homogeneous coordinates; ``None`` marks a zero coordinate."""

    coords: tuple[UnitMonomial | None, ...]

    def __post_init__(self):
        if not any(c is not None for c in self.coords):
            raise InvalidPoint("a projective point needs a nonzero coordinate")

    @property
    def support(self) -> IndexSubset:
        return tuple(k for k, c in enumerate(self.coords) if c is not None)


def membership(Q: QuantumMatrix, p: ProjectivePoint) -> bool:
    if len(p.coords) != Q.size:
        raise LengthMismatch(f"point has {len(p.coords)} coordinates, matrix has size {Q.size}")
    return is_rank_one_subset(Q, p.support)


def dimension(Q: QuantumMatrix) -> int:
    return components(Q).dimension


def all_pairs(n: int) -> frozenset[IndexSubset]:
    return frozenset(combinations(range(n + 1), 2))


def relabel(v: PointVariety, perm: Sequence[int]) -> PointVariety:
    return PointVariety(v.n, frozenset(tuple(sorted(perm[k] for k in c)) for c in v.components))
