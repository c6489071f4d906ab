"""Exact neutrosophic logic over the nonarchimedean field Q(X)."""

from ._core import (
    Element,
    NSet,
    NValue,
    ParseError,
    clamp_to_unit,
    elem_add,
    elem_mul,
    elem_sub,
    eval,
    finite_set,
    format_formula,
    left_monad,
    monad,
    obslash,
    obslash_prime,
    owedge,
    ovee,
    ovee_prime,
    refute,
    right_monad,
    run_cli,
    singleton,
    unit_interval,
    unit_interval_def1,
)

__all__ = [
    "Element",
    "NSet",
    "NValue",
    "ParseError",
    "clamp_to_unit",
    "elem_add",
    "elem_mul",
    "elem_sub",
    "eval",
    "finite_set",
    "format_formula",
    "left_monad",
    "monad",
    "obslash",
    "obslash_prime",
    "owedge",
    "ovee",
    "ovee_prime",
    "refute",
    "right_monad",
    "run_cli",
    "singleton",
    "unit_interval",
    "unit_interval_def1",
]
