"""Mutator kinds and their replacement sets."""

from __future__ import annotations

from enum import Enum


class MutatorKind(Enum):
    ASSIGNMENT = "Assignment"
    NUMBER = "Number"
    LINE_ORDER = "LineOrder"
    BOOLEAN_ASSIGNMENT = "BooleanAssignment"
    DELETE = "Delete"
    COMPARISON = "Comparison"
    SYMBOL = "Symbol"
    ARITHMETIC = "Arithmetic"
    INCREMENT_DECREMENT = "IncrementDecrement"
    BOOLEAN_ARITHMETIC = "BooleanArithmetic"
    LOGICAL = "Logical"

    @classmethod
    def from_name(cls, name: str) -> "MutatorKind":
        for kind in cls:
            if kind.value == name:
                return kind
        raise ValueError(f"unknown mutator kind: {name!r}")


# Fixed replacement sets. Number holds increment descriptors applied to the
# literal's value; LineOrder/Delete/Symbol have no fixed set.
REPLACEMENT_SETS: dict[MutatorKind, tuple[str, ...]] = {
    MutatorKind.ASSIGNMENT: ("=", "+=", "-=", "*=", "/=", "%="),
    MutatorKind.NUMBER: ("+255", "+1", "-1", "-255", "*(-1)"),
    MutatorKind.LINE_ORDER: (),
    MutatorKind.BOOLEAN_ASSIGNMENT: ("=", "&=", "|=", "^="),
    MutatorKind.DELETE: (),
    MutatorKind.COMPARISON: ("==", "!=", "<", ">", "<=", ">="),
    MutatorKind.SYMBOL: (),
    MutatorKind.ARITHMETIC: ("+", "-", "*", "/", "%"),
    MutatorKind.INCREMENT_DECREMENT: ("++", "--"),
    MutatorKind.BOOLEAN_ARITHMETIC: ("&", "|", "^", "<<", ">>"),
    MutatorKind.LOGICAL: ("&&", "and", "||", "or", "!=", "not"),
}

# Canonical ordering used for deterministic site sorting.
KIND_ORDER: dict[MutatorKind, int] = {k: i for i, k in enumerate(MutatorKind)}

SET_BASED_KINDS: tuple[MutatorKind, ...] = tuple(
    k for k, s in REPLACEMENT_SETS.items() if s
)


def number_increments(value: int) -> list[tuple[str, int]]:
    """(descriptor, resulting value) pairs for the Number increment set."""
    return [
        ("+255", value + 255),
        ("+1", value + 1),
        ("-1", value - 1),
        ("-255", value - 255),
        ("*(-1)", -value),
    ]
