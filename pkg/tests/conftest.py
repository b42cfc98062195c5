from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from pathlib import Path

import pytest
from hypothesis import strategies as st

from qpoints.matrix import QuantumMatrix
from qpoints.scalar import Prime, Symbol, UnitMonomial

DATA = Path(__file__).parent / "data"

SYMBOLS = [Symbol(s) for s in ("a", "b", "c", "d", "x1", "y_2")]
PRIMES = [Prime(p) for p in (2, 3, 5, 7, 101)]

phases = st.builds(
    lambda d, k: Fraction(k % d, d),
    st.integers(min_value=1, max_value=12),
    st.integers(min_value=0, max_value=11),
)
exponent_values = st.one_of(
    st.integers(min_value=-3, max_value=3).map(Fraction),
    st.builds(Fraction, st.integers(-5, 5), st.integers(1, 4)),
)


@st.composite
def unit_monomials(draw, generators=SYMBOLS + PRIMES):
    gens = draw(st.lists(st.sampled_from(generators), max_size=4, unique=True))
    exps = {g: draw(exponent_values) for g in gens}
    return UnitMonomial.make(draw(phases), exps)


@st.composite
def small_units(draw):
    """Entries from a deliberately small group so that coherent triples are common."""
    phase = Fraction(draw(st.integers(0, 3)), 4)
    exps = {g: draw(st.integers(-1, 1)) for g in SYMBOLS[:2]}
    return UnitMonomial.make(phase, exps)


@st.composite
def quantum_matrices(draw, min_n=0, max_n=6, entries=None):
    entries = entries if entries is not None else small_units()
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    upper = {ij: draw(entries) for ij in combinations(range(n + 1), 2)}
    return QuantumMatrix.from_upper(n, upper)


@pytest.fixture
def example_text() -> str:
    return (DATA / "example.qm").read_text()


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
