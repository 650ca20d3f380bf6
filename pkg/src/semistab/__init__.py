"""Exact computations with Hilbert points, Kempf states and GIT-semistability."""

from .action import (
    MatrixElement,
    act_on_exterior,
    act_on_poly,
    lower_unipotent,
    pair,
    permutation_matrix,
    state,
    symbolic_unipotent,
)
from .decision import (
    Verdict,
    candidate_covectors,
    coefficient_ideal,
    delta_contains_xi,
    in_hull,
    is_semistable,
    solve_esc,
    solve_sc,
    xi_point,
)
from .exterior import ExteriorVector, wedge_basis, wedge_from_factors, weight_of
from .groebner import GroebnerBasis, buchberger, divide, is_solvable
from .hilbert import gotzmann_number, hilbert_point, q_of_d
from .poly import Monomial, Polynomial, binomial, parse_poly
from .reduction import (
    ESCInstance,
    PolySystem,
    SCInstance,
    alternating_sum,
    reduce_sysal_to_sc,
    witness_from_root,
)

__version__ = "0.1.0"

__all__ = [
    "act_on_exterior",
    "act_on_poly",
    "alternating_sum",
    "binomial",
    "buchberger",
    "candidate_covectors",
    "coefficient_ideal",
    "delta_contains_xi",
    "divide",
    "ESCInstance",
    "ExteriorVector",
    "gotzmann_number",
    "GroebnerBasis",
    "hilbert_point",
    "in_hull",
    "is_semistable",
    "is_solvable",
    "lower_unipotent",
    "MatrixElement",
    "Monomial",
    "pair",
    "parse_poly",
    "permutation_matrix",
    "Polynomial",
    "PolySystem",
    "q_of_d",
    "reduce_sysal_to_sc",
    "SCInstance",
    "solve_esc",
    "solve_sc",
    "state",
    "symbolic_unipotent",
    "Verdict",
    "wedge_basis",
    "wedge_from_factors",
    "weight_of",
    "witness_from_root",
    "xi_point",
]
