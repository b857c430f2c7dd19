"""Generalized q-Dyson constant terms and the identities around them."""

from .constant_terms import (
    d_brute,
    d_closed,
    d_recursive,
    dt_brute,
    dt_kadell,
    dyson_product,
    qdyson_rhs,
)
from .lemma31 import check_lemma31, lemma31_cases
from .orders import (
    dominance_leq,
    is_partition,
    partitions,
    prec_leq,
    prec_lt,
    revlex_leq,
    revlex_lt,
    vplus,
)
from .splitting import (
    FactorExpr,
    PochSpec,
    f_eval,
    f_expr,
    random_point,
    split_terms,
    verify_splitting,
)

__all__ = [
    "FactorExpr",
    "PochSpec",
    "check_lemma31",
    "d_brute",
    "d_closed",
    "d_recursive",
    "dominance_leq",
    "dt_brute",
    "dt_kadell",
    "dyson_product",
    "f_eval",
    "f_expr",
    "is_partition",
    "lemma31_cases",
    "partitions",
    "prec_leq",
    "prec_lt",
    "qdyson_rhs",
    "random_point",
    "revlex_leq",
    "revlex_lt",
    "split_terms",
    "verify_splitting",
    "vplus",
]
