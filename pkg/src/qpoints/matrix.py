"""Quantum parameter matrices and the constructions that act on them.

A :class:`QuantumMatrix` holds the commutation scalars ``q[i, j]`` of the
algebra with relations ``u_i u_j = q[i, j] u_j u_i``.  Rank-one questions are
answered with multiplicative identities between entries, never with
determinants: a principal submatrix on ``S`` has rank one iff every triple
``i, j, l`` in ``S`` is *coherent*, i.e. ``q[i, j] q[j, l] == q[i, l]``.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterable, NamedTuple, Sequence

from .errors import (
    CannotDeleteLast,
    EmptySubset,
    IndexOutOfRange,
    IndicesNotDistinct,
    InvalidMatrix,
    LengthMismatch,
)
from .scalar import MINUS_ONE, ONE, UnitMonomial, root_of_unity, symbol

IndexSubset = tuple[int, ...]


class QuantumMatrix:
    """Immutable ``(n+1) x (n+1)`` matrix of units with ``q[i,i] = 1`` and ``q[j,i] = q[i,j]^-1``.

    Instances built through :meth:`from_upper` are valid by construction; the
    plain constructor validates a full table of entries.
    """

    __slots__ = ("_rows",)

    def __init__(self, rows: Sequence[Sequence[UnitMonomial]]):
        self._rows = tuple(tuple(r) for r in rows)
        check_valid(self)

    @classmethod
    def from_upper(cls, n: int, upper: dict[tuple[int, int], UnitMonomial]) -> QuantumMatrix:
        rows = [[ONE] * (n + 1) for _ in range(n + 1)]
        for i, j in combinations(range(n + 1), 2):
            q = upper[i, j]
            rows[i][j] = q
            rows[j][i] = q.inv()
        return cls(rows)

    @property
    def n(self) -> int:
        return len(self._rows) - 1

    @property
    def size(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> tuple[tuple[UnitMonomial, ...], ...]:
        return self._rows

    def __getitem__(self, ij: tuple[int, int]) -> UnitMonomial:
        i, j = ij
        return self._rows[i][j]

    def upper(self) -> dict[tuple[int, int], UnitMonomial]:
        return {(i, j): self._rows[i][j] for i, j in combinations(range(self.size), 2)}

    def permuted(self, perm: Sequence[int]) -> QuantumMatrix:
        """Relabel index ``k`` as ``perm[k]``."""
        size = self.size
        if sorted(perm) != list(range(size)):
            raise ValueError("not a permutation of the index set")
        rows = [[ONE] * size for _ in range(size)]
        for i in range(size):
            for j in range(size):
                rows[perm[i]][perm[j]] = self._rows[i][j]
        return QuantumMatrix(rows)

    def __eq__(self, other) -> bool:
        return isinstance(other, QuantumMatrix) and self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        from .parser import format_scalar

        body = "; ".join(", ".join(format_scalar(x) for x in row) for row in self._rows)
        return f"QuantumMatrix([{body}])"


def check_valid(Q: QuantumMatrix) -> None:
    """Raise :class:`InvalidMatrix` unless ``Q`` is square with unit diagonal and reciprocal entries."""
    rows = Q.rows
    size = len(rows)
    if size == 0:
        raise InvalidMatrix("matrix must have at least one row")
    for i, row in enumerate(rows):
        if len(row) != size:
            raise InvalidMatrix(f"row {i} has length {len(row)}, expected {size}")
        for x in row:
            if not isinstance(x, UnitMonomial):
                raise InvalidMatrix(f"entry in row {i} is not a unit: {x!r}")
        if not row[i].is_one():
            raise InvalidMatrix(f"diagonal entry ({i},{i}) is not 1")
    for i, j in combinations(range(size), 2):
        if not (rows[i][j] * rows[j][i]).is_one():
            raise InvalidMatrix(f"entries ({i},{j}) and ({j},{i}) are not reciprocal")


def as_subset(indices: Iterable[int], n: int) -> IndexSubset:
    out = tuple(sorted(indices))
    if len(set(out)) != len(out):
        raise IndicesNotDistinct(f"repeated index in {out}")
    for k in out:
        if not 0 <= k <= n:
            raise IndexOutOfRange(f"index {k} outside 0..{n}")
    return out


def _check_index(Q: QuantumMatrix, i: int) -> None:
    if not 0 <= i <= Q.n:
        raise IndexOutOfRange(f"index {i} outside 0..{Q.n}")


class Reindexed(NamedTuple):
    """A smaller matrix together with the map from surviving old indices to new ones."""

    matrix: QuantumMatrix
    index_map: dict[int, int]


def _survivors(Q: QuantumMatrix, i: int) -> tuple[list[int], dict[int, int]]:
    keep = [k for k in range(Q.size) if k != i]
    return keep, {old: new for new, old in enumerate(keep)}


def delete_index(Q: QuantumMatrix, i: int) -> Reindexed:
    """Drop row and column ``i``: the parameters of the quotient by ``u_i``."""
    _check_index(Q, i)
    if Q.n == 0:
        raise CannotDeleteLast("cannot delete the only index of a 1x1 matrix")
    keep, index_map = _survivors(Q, i)
    rows = [[Q[j, l] for l in keep] for j in keep]
    return Reindexed(QuantumMatrix(rows), index_map)


def localize(Q: QuantumMatrix, i: int) -> Reindexed:
    """Parameters ``r[j, l] = q[i, j] q[j, l] q[i, l]^-1`` of the degree-zero part after inverting ``u_i``."""
    _check_index(Q, i)
    if Q.n == 0:
        raise CannotDeleteLast("nothing remains after localizing a 1x1 matrix")
    keep, index_map = _survivors(Q, i)
    rows = [[Q[i, j] * Q[j, l] * Q[i, l].inv() for l in keep] for j in keep]
    return Reindexed(QuantumMatrix(rows), index_map)


def coherent(Q: QuantumMatrix, i: int, j: int, l: int) -> bool:
    if len({i, j, l}) != 3:
        raise IndicesNotDistinct(f"indices {i}, {j}, {l} are not pairwise distinct")
    for k in (i, j, l):
        _check_index(Q, k)
    return (Q[i, j] * Q[j, l] * Q[i, l].inv()).is_one()


def is_rank_one_subset(Q: QuantumMatrix, S: Iterable[int]) -> bool:
    """Rank-one test for the principal submatrix on ``S``, anchored at ``min(S)``."""
    S = as_subset(S, Q.n)
    if not S:
        raise EmptySubset("rank of an empty submatrix is undefined")
    if len(S) <= 2:
        return True
    b, rest = S[0], S[1:]
    return all(coherent(Q, b, j, l) for j, l in combinations(rest, 2))


def is_rank_one_subset_based(Q: QuantumMatrix, S: Iterable[int], base: int) -> bool:
    """Same test as :func:`is_rank_one_subset` but anchored at an arbitrary member ``base``."""
    S = as_subset(S, Q.n)
    if base not in S:
        raise ValueError(f"base {base} not in {S}")
    rest = [k for k in S if k != base]
    return all(coherent(Q, base, j, l) for j, l in combinations(rest, 2))


def is_rank_one_subset_exhaustive(Q: QuantumMatrix, S: Iterable[int]) -> bool:
    """Check coherence of every ordered triple in ``S``."""
    S = as_subset(S, Q.n)
    if not S:
        raise EmptySubset("rank of an empty submatrix is undefined")
    return all(coherent(Q, i, j, l) for i, j, l in permutations(S, 3))


def is_rank_one_subset_minors(Q: QuantumMatrix, S: Iterable[int]) -> bool:
    """Vanishing of every 2x2 minor: ``q[j,k] q[l,m] == q[j,m] q[l,k]`` for rows j,l and columns k,m."""
    S = as_subset(S, Q.n)
    if not S:
        raise EmptySubset("rank of an empty submatrix is undefined")
    for j, l in combinations(S, 2):
        for k, m in combinations(S, 2):
            if Q[j, k] * Q[l, m] != Q[j, m] * Q[l, k]:
                return False
    return True


def is_rank_one(Q: QuantumMatrix) -> bool:
    return is_rank_one_subset(Q, range(Q.size))


def rank_one_from_weights(weights: Sequence[UnitMonomial]) -> QuantumMatrix:
    """The rank-one matrix ``q[i, j] = a_i / a_j``."""
    if not weights:
        raise EmptySubset("need at least one weight")
    n = len(weights) - 1
    return QuantumMatrix.from_upper(
        n, {(i, j): weights[i] / weights[j] for i, j in combinations(range(n + 1), 2)}
    )


def gauge_twist(Q: QuantumMatrix, weights: Sequence[UnitMonomial]) -> QuantumMatrix:
    if len(weights) != Q.size:
        raise LengthMismatch(f"{len(weights)} weights for a matrix of size {Q.size}")
    return QuantumMatrix.from_upper(
        Q.n, {(i, j): weights[i] / weights[j] * q for (i, j), q in Q.upper().items()}
    )


def ones_matrix(n: int) -> QuantumMatrix:
    return QuantumMatrix.from_upper(n, {(i, j): ONE for i, j in combinations(range(n + 1), 2)})


def sign_matrix(n: int) -> QuantumMatrix:
    """All off-diagonal entries equal to -1."""
    return QuantumMatrix.from_upper(n, {(i, j): MINUS_ONE for i, j in combinations(range(n + 1), 2)})


@dataclass(frozen=True)
class Pool:
    """Distribution of random upper-triangle entries.

    Each entry is ``zeta(d)^k * prod(s_m ** e_m)`` with ``d <= max_denominator``
    and exponents ``e_m`` in ``[-max_exponent, max_exponent]`` over ``symbols``
    shared symbols (``s0``, ``s1``, ...).  ``zero_bias`` is the probability that
    a given exponent is forced to zero, which keeps coherent triples common.
    With ``fresh=True`` each entry is additionally multiplied by a nonzero
    power of its own symbol ``t<i>_<j>``, so no triple can be coherent.
    """

    max_denominator: int = 6
    symbols: int = 4
    max_exponent: int = 1
    zero_bias: float = 0.5
    fresh: bool = False

    def __post_init__(self):
        if self.max_denominator < 1 or self.symbols < 0 or self.max_exponent < 0:
            raise ValueError(f"invalid pool {self}")


def random_matrix(n: int, seed: int, pool: Pool = Pool()) -> QuantumMatrix:
    rng = random.Random(seed)
    upper: dict[tuple[int, int], UnitMonomial] = {}
    for i, j in combinations(range(n + 1), 2):
        d = rng.randint(1, pool.max_denominator)
        x = root_of_unity(d, rng.randrange(d))
        for m in range(pool.symbols):
            if rng.random() < pool.zero_bias:
                continue
            e = rng.randint(-pool.max_exponent, pool.max_exponent)
            if e:
                x = x * symbol(f"s{m}", e)
        if pool.fresh:
            x = x * symbol(f"t{i}_{j}", rng.choice((-3, -2, -1, 1, 2, 3)))
        upper[i, j] = x
    return QuantumMatrix.from_upper(n, upper)


def random_weights(size: int, seed: int, pool: Pool = Pool()) -> list[UnitMonomial]:
    """Weights drawn from the same entry distribution as :func:`random_matrix`."""
    rng = random.Random(seed)
    out = []
    for _ in range(size):
        d = rng.randint(1, pool.max_denominator)
        x = root_of_unity(d, rng.randrange(d))
        for m in range(pool.symbols):
            e = rng.randint(-pool.max_exponent, pool.max_exponent)
            if e:
                x = x * symbol(f"s{m}", e)
        out.append(x)
    return out


def example_p3_matrix(x: UnitMonomial | None = None) -> QuantumMatrix:
    """Four-variable example with entries in ``a, b, c, x``.

    Rows 0-2 and rows 1-3 are rank one; the triples through 0 and 3 are
    coherent only when ``x == a*c``.  Pass ``x`` to specialize it.
    """
    a, b, c = symbol("a"), symbol("b"), symbol("c")
    x = symbol("x") if x is None else x
    return QuantumMatrix.from_upper(3, {
        (0, 1): a,
        (0, 2): b,
        (0, 3): x,
        (1, 2): a.inv() * b,
        (1, 3): c,
        (2, 3): a * b.inv() * c,
    })
