"""Irreducible components of point varieties of quantum polynomial algebras."""
from .components import (
    CoherenceGraph,
    PointVariety,
    ProjectivePoint,
    brute_force_components,
    coherence_graph,
    components,
    dimension,
    maximal_cliques,
    membership,
    recursive_components,
)
from .matrix import (
    Pool,
    QuantumMatrix,
    coherent,
    delete_index,
    example_p3_matrix,
    gauge_twist,
    is_rank_one,
    is_rank_one_subset,
    localize,
    random_matrix,
    rank_one_from_weights,
    sign_matrix,
)
from .parser import format_scalar, parse_matrix_file, parse_scalar, variety_to_json
from .scalar import UnitMonomial, from_rational, inv, is_one, mul, power, symbol

__version__ = "0.1.0"
