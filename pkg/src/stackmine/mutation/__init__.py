"""Grammar-aware single-defect mutation of C/C++ sources with byte-exact revert."""

from stackmine.mutation.mutators import MutatorKind, REPLACEMENT_SETS
from stackmine.mutation.parser import SyntaxIndex, FunctionSpan, parse_source
from stackmine.mutation.sites import (
    Mutation,
    MutationSite,
    apply_mutation,
    enclosing_function,
    enumerate_sites,
    revert_mutation,
)
from stackmine.mutation.planio import read_plan, write_plan

__all__ = [
    "MutatorKind",
    "REPLACEMENT_SETS",
    "SyntaxIndex",
    "FunctionSpan",
    "parse_source",
    "MutationSite",
    "Mutation",
    "enumerate_sites",
    "apply_mutation",
    "revert_mutation",
    "enclosing_function",
    "read_plan",
    "write_plan",
]
