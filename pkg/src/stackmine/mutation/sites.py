"""Mutation site enumeration and byte-exact apply/revert.

A MutationSite is a candidate edit location; a Mutation fixes one concrete
replacement. Every edit is a splice of declared byte spans, so apply followed
by revert restores the original buffer bit for bit, and any drift is caught
as StaleSite rather than silently corrupting the tree.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

from stackmine.errors import StaleSite
from stackmine.mutation.lexer import TokKind, Token, integer_suffix, integer_value
from stackmine.mutation.mutators import (
    KIND_ORDER,
    MutatorKind,
    REPLACEMENT_SETS,
    number_increments,
)
from stackmine.mutation.parser import FunctionSpan, LineSpan, SyntaxIndex

# Operator occurrences eligible per kind.
_OPERATOR_KINDS = {
    MutatorKind.ASSIGNMENT,
    MutatorKind.BOOLEAN_ASSIGNMENT,
    MutatorKind.COMPARISON,
    MutatorKind.ARITHMETIC,
    MutatorKind.INCREMENT_DECREMENT,
    MutatorKind.BOOLEAN_ARITHMETIC,
    MutatorKind.LOGICAL,
}

_LOGICAL_WORDS = frozenset(("and", "or", "not"))


@dataclass(frozen=True)
class MutationSite:
    file: str
    offset: int
    length: int
    original: str
    kind: MutatorKind
    enclosing_function: str
    enclosing_file: str
    # lexeme strings for set-based kinds and Symbol; (offset, length) pairs of
    # swap-partner lines for LineOrder; empty for Delete
    candidates: tuple = ()


@dataclass(frozen=True)
class Mutation:
    id: str
    site: MutationSite
    replacement: str = ""
    swap_offset: int = -1
    swap_length: int = -1

    @property
    def is_swap(self) -> bool:
        return self.site.kind is MutatorKind.LINE_ORDER


def site_sort_key(site: MutationSite):
    return (site.file, site.offset, KIND_ORDER[site.kind])


def enumerate_sites(
    index: SyntaxIndex, kinds: set[MutatorKind] | None = None
) -> list[MutationSite]:
    """All mutation sites in clean function bodies, ordered by
    (file, byte offset, kind)."""
    if kinds is None:
        kinds = set(MutatorKind)
    sites: list[MutationSite] = []
    for fn in index.functions:
        if fn.malformed:
            continue
        toks = index.function_tokens(fn)
        sites.extend(_function_sites(index, fn, toks, kinds))
    sites.sort(key=site_sort_key)
    return sites


def _function_sites(
    index: SyntaxIndex,
    fn: FunctionSpan,
    toks: tuple[Token, ...],
    kinds: set[MutatorKind],
) -> list[MutationSite]:
    out: list[MutationSite] = []
    path = index.path

    def make(offset, length, original, kind, candidates) -> MutationSite:
        return MutationSite(
            file=path,
            offset=offset,
            length=length,
            original=original,
            kind=kind,
            enclosing_function=fn.qualified_name,
            enclosing_file=path,
            candidates=tuple(candidates),
        )

    for kind in _OPERATOR_KINDS & kinds:
        universe = REPLACEMENT_SETS[kind]
        members = set(universe)
        for t in toks:
            if t.kind is TokKind.OPERATOR and t.text in members:
                pass
            elif (
                kind is MutatorKind.LOGICAL
                and t.kind in (TokKind.KEYWORD, TokKind.IDENT)
                and t.text in _LOGICAL_WORDS
            ):
                pass
            else:
                continue
            cands = [c for c in universe if c != t.text]
            out.append(make(t.start, t.end - t.start, t.text, kind, cands))

    if MutatorKind.NUMBER in kinds:
        for t in toks:
            if t.kind is not TokKind.NUMBER or t.is_float:
                continue
            value = integer_value(t.text)
            if value is None:
                continue
            suffix = integer_suffix(t.text)
            cands = [
                str(v) + suffix
                for _, v in number_increments(value)
                if str(v) + suffix != t.text
            ]
            if cands:
                out.append(
                    make(t.start, t.end - t.start, t.text, MutatorKind.NUMBER, cands)
                )

    if MutatorKind.SYMBOL in kinds:
        idents = [t for t in toks if t.kind is TokKind.IDENT]
        distinct: list[str] = []
        for t in idents:
            if t.text not in distinct:
                distinct.append(t.text)
        if len(distinct) >= 2:
            for t in idents:
                cands = [name for name in distinct if name != t.text]
                out.append(
                    make(t.start, t.end - t.start, t.text, MutatorKind.SYMBOL, cands)
                )

    stmt_lines = fn.statement_lines
    if MutatorKind.DELETE in kinds:
        for ls in stmt_lines:
            original = _slice(index.text, ls)
            out.append(make(ls.start, ls.length, original, MutatorKind.DELETE, ()))

    if MutatorKind.LINE_ORDER in kinds and len(stmt_lines) >= 2:
        for ls in stmt_lines:
            original = _slice(index.text, ls)
            partners = tuple(
                (p.start, p.length)
                for p in stmt_lines
                if p != ls and _slice(index.text, p) != original
            )
            if partners:
                out.append(
                    make(ls.start, ls.length, original, MutatorKind.LINE_ORDER, partners)
                )

    return out


def _slice(text: bytes, ls: LineSpan) -> str:
    return text[ls.start : ls.start + ls.length].decode("utf-8", errors="replace")


def make_mutation(site: MutationSite, replacement, mutation_id: str | None = None) -> Mutation:
    """Bind a site to one chosen replacement (a lexeme, or a partner span
    pair for LineOrder)."""
    if site.kind is MutatorKind.LINE_ORDER:
        swap_offset, swap_length = replacement
        mid = mutation_id or _mutation_id(site, f"swap@{swap_offset}+{swap_length}")
        return Mutation(id=mid, site=site, swap_offset=swap_offset, swap_length=swap_length)
    rep = "" if site.kind is MutatorKind.DELETE else str(replacement)
    mid = mutation_id or _mutation_id(site, rep)
    return Mutation(id=mid, site=site, replacement=rep)


def _mutation_id(site: MutationSite, replacement: str) -> str:
    digest = hashlib.sha1(
        f"{site.file}|{site.offset}|{site.kind.value}|{site.original}|{replacement}".encode()
    ).hexdigest()[:12]
    return f"{site.kind.value.lower()}-{digest}"


def apply_mutation(text: bytes, m: Mutation) -> bytes:
    """Splice the edit into the buffer; StaleSite if the declared original is
    no longer present at the declared span."""
    site = m.site
    if m.is_swap:
        return _apply_swap(text, m)
    original = site.original.encode("utf-8")
    found = text[site.offset : site.offset + site.length]
    if found != original:
        raise StaleSite(
            f"{m.id}: expected {original!r} at {site.offset}, found {found!r}"
        )
    return (
        text[: site.offset]
        + m.replacement.encode("utf-8")
        + text[site.offset + site.length :]
    )


def revert_mutation(text: bytes, m: Mutation) -> bytes:
    """Inverse of apply_mutation; StaleSite if the buffer does not look like
    the result of applying m."""
    site = m.site
    if m.is_swap:
        return _revert_swap(text, m)
    original = site.original.encode("utf-8")
    replacement = m.replacement.encode("utf-8")
    found = text[site.offset : site.offset + len(replacement)]
    if found != replacement:
        raise StaleSite(
            f"{m.id}: expected {replacement!r} at {site.offset}, found {found!r}"
        )
    if site.kind is MutatorKind.DELETE:
        # blanked line: offset must now sit on the preserved newline (or EOF)
        if site.offset < len(text) and text[site.offset : site.offset + 1] != b"\n":
            raise StaleSite(f"{m.id}: line at {site.offset} is not blank")
    return (
        text[: site.offset] + original + text[site.offset + len(replacement) :]
    )


def _swap_spans(m: Mutation) -> tuple[int, int, int, int]:
    """Normalized (first_off, first_len, second_off, second_len); the site
    line may precede or follow its partner."""
    a0, la = m.site.offset, m.site.length
    b0, lb = m.swap_offset, m.swap_length
    if a0 <= b0:
        return a0, la, b0, lb
    return b0, lb, a0, la


def _apply_swap(text: bytes, m: Mutation) -> bytes:
    a0, la, b0, lb = _swap_spans(m)
    if a0 + la > b0:
        raise StaleSite(f"{m.id}: swap regions overlap")
    site_orig = m.site.original.encode("utf-8")
    site_found = text[m.site.offset : m.site.offset + m.site.length]
    if site_found != site_orig:
        raise StaleSite(
            f"{m.id}: expected {site_orig!r} at {m.site.offset}, found {site_found!r}"
        )
    first = text[a0 : a0 + la]
    second = text[b0 : b0 + lb]
    return text[:a0] + second + text[a0 + la : b0] + first + text[b0 + lb :]


def _revert_swap(text: bytes, m: Mutation) -> bytes:
    # pre-swap coordinates: first region (f0, lf), second region (s0, ls);
    # after the swap the first region holds the second's text and vice versa,
    # so post-swap: [f0, f0+ls) = old second, [s0+ls-lf, s0+ls) = old first
    f0, lf, s0, ls = _swap_spans(m)
    site_orig = m.site.original.encode("utf-8")
    first_now = text[f0 : f0 + ls]
    second_now = text[s0 + ls - lf : s0 + ls]
    inner = text[f0 + ls : s0 + ls - lf]
    tail = text[s0 + ls :]
    if m.site.offset <= m.swap_offset:
        if second_now != site_orig:
            raise StaleSite(f"{m.id}: swapped line not found at {s0 + ls - lf}")
        return text[:f0] + site_orig + inner + first_now + tail
    if first_now != site_orig:
        raise StaleSite(f"{m.id}: swapped line not found at {f0}")
    return text[:f0] + second_now + inner + site_orig + tail


def enclosing_function(index: SyntaxIndex, offset: int) -> tuple[str, str] | None:
    """(qualified name, file path) of the innermost function containing the
    byte offset; None at file scope."""
    fn = index.function_at(offset)
    if fn is None:
        return None
    return (fn.qualified_name, index.path)
