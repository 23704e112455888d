"""Littlewood-Richardson polynomials for double Schur functions."""

from .double_schur import (
    ASequencePoint,
    double_schur,
    double_schur_supertableau,
    eval_at_point,
    reindex_a_to_u,
    vanishing_product,
)
from .lr_rule import (
    ExpansionResult,
    classical_lr,
    expand_product,
    lr_ab,
    lr_ab_supertableau,
    lr_polynomial,
)
from .oracle import OracleError, expand_in_basis, recurrence_check, verify_expansion
from .partitions import ChainR, Partition, conjugate, enumerate_chains, parse_partition
from .polyring import FactoredTerm, NotDivisibleError, Polynomial, divide_exact_linear, format_factored
from .specializations import GrassmannianContext, immanant_coeff, schubert_coeff, specialize_to_schubert
from .tableaux import (
    enumerate_barred,
    enumerate_barred_supertableaux,
    enumerate_reverse_supertableaux,
    enumerate_reverse_tableaux,
)

__all__ = [
    "ASequencePoint",
    "ChainR",
    "ExpansionResult",
    "FactoredTerm",
    "GrassmannianContext",
    "NotDivisibleError",
    "OracleError",
    "Partition",
    "Polynomial",
    "classical_lr",
    "conjugate",
    "divide_exact_linear",
    "double_schur",
    "double_schur_supertableau",
    "enumerate_barred",
    "enumerate_barred_supertableaux",
    "enumerate_chains",
    "enumerate_reverse_supertableaux",
    "enumerate_reverse_tableaux",
    "eval_at_point",
    "expand_in_basis",
    "expand_product",
    "format_factored",
    "immanant_coeff",
    "lr_ab",
    "lr_ab_supertableau",
    "lr_polynomial",
    "parse_partition",
    "recurrence_check",
    "reindex_a_to_u",
    "schubert_coeff",
    "specialize_to_schubert",
    "vanishing_product",
    "verify_expansion",
]

__version__ = "0.1.0"
