"""Doubles of free groups amalgamated over finitely generated subgroups."""

from .derived import derived_eq, exponent_vector, fox_derivative, in_derived, magnus_matrix, ring_is_zero
from .doubles import A, ABAR, DoubleElement, DoubleGroup, make_double
from .errors import BudgetError
from .stallings import FiniteQuotientMap, SubgroupGraph, build_subgroup_graph, kernel_of_finite_quotient
from .witness import Budget, build_perfect_quotient_double, negative_demo, witness_search
from .words import Alphabet, commutator, format_word, inv, mul, parse_word, reduce

__all__ = [
    "A", "ABAR", "Alphabet", "Budget", "BudgetError", "DoubleElement", "DoubleGroup",
    "FiniteQuotientMap", "SubgroupGraph", "build_perfect_quotient_double", "build_subgroup_graph",
    "commutator", "derived_eq", "exponent_vector", "format_word", "fox_derivative", "in_derived",
    "inv", "kernel_of_finite_quotient", "magnus_matrix", "make_double", "mul", "negative_demo",
    "parse_word", "reduce", "ring_is_zero", "witness_search",
]
