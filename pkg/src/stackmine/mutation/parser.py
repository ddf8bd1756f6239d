"""Function-span indexing for C/C++ sources.

Builds a SyntaxIndex: function body spans with qualified names, the token
stream, a line table, and per-function statement lines. Classification is
heuristic (scope-stack with a pending-signature state machine) and degrades
gracefully: regions it cannot make sense of simply yield no mutation sites.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass, field
from enum import Enum

from stackmine.errors import UnsupportedLanguage
from stackmine.mutation.lexer import TokKind, Token, tokenize


class Language(Enum):
    C = "c"
    CPP = "cpp"


# Keywords that take parentheses but never name a function definition.
_CONTROL_BEFORE_PAREN = frozenset(
    "if while for switch catch return sizeof alignof decltype typeid "
    "static_assert _Alignas _Static_assert".split()
)

# Tokens allowed between a parameter list's ')' and the body '{'.
_TRAILING_QUALIFIERS = frozenset(
    "const noexcept override final mutable volatile try throw & && inline".split()
)

# Identifier-form qualifiers that may carry their own parenthesized payload.
_PAREN_QUALIFIERS = frozenset(
    "__attribute__ __declspec __asm __asm__ __restrict _Noreturn".split()
)


@dataclass(frozen=True)
class LineSpan:
    start: int  # byte offset of first character on the line
    length: int  # content length, newline excluded


@dataclass(frozen=True)
class FunctionSpan:
    qualified_name: str
    body_start: int  # offset of '{'
    body_end: int  # offset one past '}'
    signature_start: int
    malformed: bool = False
    statement_lines: tuple[LineSpan, ...] = ()


@dataclass(frozen=True)
class SyntaxIndex:
    path: str
    language: Language
    text: bytes
    tokens: tuple[Token, ...]
    functions: tuple[FunctionSpan, ...]
    line_starts: tuple[int, ...]

    def function_tokens(self, fn: FunctionSpan) -> tuple[Token, ...]:
        """Tokens strictly inside a function body (braces excluded)."""
        starts = [t.start for t in self.tokens]
        lo = bisect.bisect_right(starts, fn.body_start)
        hi = bisect.bisect_left(starts, fn.body_end - 1)
        return self.tokens[lo:hi]

    def function_at(self, offset: int) -> FunctionSpan | None:
        """Innermost function whose body span contains the offset."""
        best: FunctionSpan | None = None
        for fn in self.functions:
            if fn.body_start <= offset < fn.body_end:
                if best is None or (fn.body_end - fn.body_start) < (
                    best.body_end - best.body_start
                ):
                    best = fn
        return best


@dataclass
class _Scope:
    kind: str  # namespace | class | function | other | transparent
    names: tuple[str, ...]
    open_offset: int
    sig_start: int = 0


def _line_table(src: bytes) -> tuple[int, ...]:
    starts = [0]
    pos = src.find(b"\n")
    while pos != -1:
        starts.append(pos + 1)
        pos = src.find(b"\n", pos + 1)
    return tuple(starts)


def _line_span(line_starts: tuple[int, ...], src: bytes, index: int) -> LineSpan:
    start = line_starts[index]
    end = line_starts[index + 1] - 1 if index + 1 < len(line_starts) else len(src)
    return LineSpan(start, end - start)


def _collect_name(sig: list[Token], at: int) -> tuple[tuple[str, ...], int]:
    """Walk backwards from sig[at] collecting `A::B::name`, `~name` or
    `operator<sym>`. Returns (name parts, index of first name token)."""
    j = at
    parts: list[str] = []
    tok = sig[j]
    if tok.kind == TokKind.OPERATOR and j > 0 and sig[j - 1].text == "operator":
        return (("operator" + tok.text,), j - 1)
    if tok.text == "operator":
        return (("operator",), j)
    if tok.kind != TokKind.IDENT:
        return ((), at)
    name = tok.text
    if j > 0 and sig[j - 1].text == "~":
        name = "~" + name
        j -= 1
    parts.append(name)
    j -= 1
    while j >= 1 and sig[j].text == "::" and sig[j - 1].kind == TokKind.IDENT:
        parts.insert(0, sig[j - 1].text)
        j -= 2
    return (tuple(parts), j + 1)


def _balanced(tokens: tuple[Token, ...]) -> bool:
    """Parens and brackets inside a body must nest properly."""
    depth_paren = 0
    depth_brack = 0
    for t in tokens:
        if t.kind not in (TokKind.PUNCT,):
            continue
        if t.text == "(":
            depth_paren += 1
        elif t.text == ")":
            depth_paren -= 1
        elif t.text == "[":
            depth_brack += 1
        elif t.text == "]":
            depth_brack -= 1
        if depth_paren < 0 or depth_brack < 0:
            return False
    return depth_paren == 0 and depth_brack == 0


def _statement_lines(
    src: bytes,
    line_starts: tuple[int, ...],
    tokens: tuple[Token, ...],
    body_start: int,
    body_end: int,
) -> tuple[LineSpan, ...]:
    """Lines fully inside the body that carry code (not blank, preprocessor,
    comment-only, or brace-only)."""
    code_lines: set[int] = set()
    for t in tokens:
        if t.kind in (TokKind.COMMENT, TokKind.PREPROC):
            continue
        code_lines.add(bisect.bisect_right(line_starts, t.start) - 1)
    out: list[LineSpan] = []
    first = bisect.bisect_right(line_starts, body_start)  # line after '{' line start
    for idx in range(first, len(line_starts)):
        span = _line_span(line_starts, src, idx)
        if span.start <= body_start:
            continue
        if span.start + span.length > body_end - 1:
            break
        if idx not in code_lines:
            continue
        content = src[span.start : span.start + span.length]
        stripped = content.strip()
        if not stripped or stripped.startswith(b"#"):
            continue
        if all(ch in b"{};" for ch in stripped):
            continue
        out.append(span)
    return tuple(out)


def parse_source(text: bytes, language: Language, path: str = "<memory>") -> SyntaxIndex:
    """Index a source buffer. Malformed subregions yield no sites instead of
    failing the whole file."""
    if not isinstance(language, Language):
        raise UnsupportedLanguage(f"unsupported language: {language!r}")
    if isinstance(text, str):
        text = text.encode("utf-8")
    tokens = tuple(tokenize(text))
    line_starts = _line_table(text)
    sig = [t for t in tokens if t.kind not in (TokKind.COMMENT, TokKind.PREPROC)]

    functions: list[FunctionSpan] = []
    scopes: list[_Scope] = []
    fn_brace_depth = 0  # brace nesting inside the currently open function body
    paren_depth = 0
    head_start = 0
    # pending function signature: (name_parts, sig_start_offset, state)
    pending: tuple[tuple[str, ...], int] | None = None
    pending_in_init = False
    pending_qualifier_parens = 0

    def scope_prefix() -> tuple[str, ...]:
        parts: list[str] = []
        for s in scopes:
            if s.kind in ("namespace", "class"):
                parts.extend(s.names)
        return tuple(parts)

    def close_function(scope: _Scope, close_off: int, malformed: bool = False) -> None:
        body_start = scope.open_offset
        body_end = close_off + 1
        starts = [t.start for t in tokens]
        lo = bisect.bisect_right(starts, body_start)
        hi = bisect.bisect_left(starts, body_end - 1)
        body_toks = tokens[lo:hi]
        bad = malformed or not _balanced(body_toks)
        stmts = () if bad else _statement_lines(text, line_starts, body_toks, body_start, body_end)
        functions.append(
            FunctionSpan(
                qualified_name="::".join(scope.names),
                body_start=body_start,
                body_end=body_end,
                signature_start=scope.sig_start,
                malformed=bad,
                statement_lines=stmts,
            )
        )

    i = 0
    n = len(sig)
    while i < n:
        t = sig[i]
        inside_fn = any(s.kind == "function" for s in scopes)

        if inside_fn:
            # opaque: only track braces until the innermost function closes
            if t.text == "{" and t.kind == TokKind.PUNCT:
                fn_brace_depth += 1
            elif t.text == "}" and t.kind == TokKind.PUNCT:
                if fn_brace_depth > 0:
                    fn_brace_depth -= 1
                else:
                    scope = scopes.pop()
                    close_function(scope, t.start)
                    head_start = i + 1
            i += 1
            continue

        if t.kind == TokKind.PUNCT and t.text == "(":
            paren_depth += 1
            i += 1
            continue
        if t.kind == TokKind.PUNCT and t.text == ")":
            paren_depth = max(0, paren_depth - 1)
            if pending is not None and pending_qualifier_parens > 0:
                pending_qualifier_parens -= 1
                i += 1
                continue
            if paren_depth == 0 and pending is None and not pending_in_init:
                # just closed a top-level paren group: look for `name (`
                open_idx = _matching_open(sig, i)
                if open_idx is not None and open_idx > 0:
                    before = sig[open_idx - 1]
                    if (
                        before.kind in (TokKind.IDENT, TokKind.OPERATOR)
                        or before.text == "operator"
                    ) and before.text not in _CONTROL_BEFORE_PAREN:
                        name_parts, first_idx = _collect_name(sig, open_idx - 1)
                        if name_parts and name_parts[-1] not in _PAREN_QUALIFIERS:
                            pending = (name_parts, sig[first_idx].start)
            i += 1
            continue

        if pending is not None:
            if t.kind == TokKind.PUNCT and t.text == "{":
                if pending_in_init:
                    prev = sig[i - 1]
                    if prev.text not in (")", "}"):
                        # braced member initializer: skip to matching close
                        j = _skip_balanced_braces(sig, i)
                        i = j + 1
                        continue
                name_parts, sig_start = pending
                scopes.append(
                    _Scope("function", scope_prefix() + name_parts, t.start, sig_start)
                )
                fn_brace_depth = 0
                pending = None
                pending_in_init = False
                head_start = i + 1
                i += 1
                continue
            if t.text == ":" and not pending_in_init:
                pending_in_init = True
                i += 1
                continue
            if t.text == ";" or t.text == "=":
                pending = None  # declaration, not a definition
                pending_in_init = False
                if t.text == ";":
                    head_start = i + 1
                i += 1
                continue
            if pending_in_init or t.text in _TRAILING_QUALIFIERS or t.text == "->":
                i += 1
                continue
            if t.text in _PAREN_QUALIFIERS:
                pending_qualifier_parens += 1  # consume its paren payload
                i += 1
                continue
            if t.kind in (TokKind.IDENT, TokKind.KEYWORD, TokKind.NUMBER, TokKind.STRING):
                i += 1  # macro-ish qualifier between ')' and '{'
                continue
            pending = None  # anything else: give up on this signature

        if t.kind == TokKind.PUNCT:
            if t.text == "{":
                head = sig[head_start:i]
                scopes.append(_classify_brace(head, t.start))
                head_start = i + 1
            elif t.text == "}":
                if scopes:
                    scopes.pop()
                head_start = i + 1
            elif t.text == ";" and paren_depth == 0:
                head_start = i + 1
            i += 1
            continue

        i += 1

    # EOF with open function scopes: record them as malformed
    while scopes:
        scope = scopes.pop()
        if scope.kind == "function":
            close_function(scope, len(text) - 1 if text else 0, malformed=True)

    functions.sort(key=lambda f: f.body_start)
    return SyntaxIndex(
        path=path,
        language=language,
        text=text,
        tokens=tokens,
        functions=tuple(functions),
        line_starts=line_starts,
    )


def _matching_open(sig: list[Token], close_idx: int) -> int | None:
    depth = 0
    for j in range(close_idx, -1, -1):
        t = sig[j]
        if t.kind != TokKind.PUNCT:
            continue
        if t.text == ")":
            depth += 1
        elif t.text == "(":
            depth -= 1
            if depth == 0:
                return j
    return None


def _skip_balanced_braces(sig: list[Token], open_idx: int) -> int:
    depth = 0
    for j in range(open_idx, len(sig)):
        t = sig[j]
        if t.kind != TokKind.PUNCT:
            continue
        if t.text == "{":
            depth += 1
        elif t.text == "}":
            depth -= 1
            if depth == 0:
                return j
    return len(sig) - 1


def _classify_brace(head: list[Token], open_offset: int) -> _Scope:
    texts = [t.text for t in head]
    if "namespace" in texts:
        return _Scope("namespace", _namespace_names(head), open_offset)
    if "extern" in texts and any(t.kind == TokKind.STRING for t in head):
        return _Scope("transparent", (), open_offset)
    if "enum" in texts:
        return _Scope("other", (), open_offset)
    for kw in ("class", "struct", "union"):
        if kw in texts and "=" not in texts:
            idx = texts.index(kw)
            for t in head[idx + 1 :]:
                if t.kind == TokKind.IDENT:
                    return _Scope("class", (t.text,), open_offset)
            return _Scope("class", (), open_offset)  # anonymous
    return _Scope("other", (), open_offset)


def _namespace_names(head: list[Token]) -> tuple[str, ...]:
    names: list[str] = []
    seen_kw = False
    for t in head:
        if t.text == "namespace":
            seen_kw = True
            continue
        if not seen_kw:
            continue
        if t.kind == TokKind.IDENT:
            names.append(t.text)
        elif t.text != "::":
            break
    return tuple(names)
