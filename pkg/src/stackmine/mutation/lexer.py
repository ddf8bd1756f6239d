"""Byte-offset tokenizer for C and C++ source.

All positions are byte offsets into the original buffer, so edits computed
from token spans splice back losslessly even for non-UTF-8 input.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class TokKind(Enum):
    IDENT = "ident"
    KEYWORD = "keyword"
    NUMBER = "number"
    OPERATOR = "operator"
    PUNCT = "punct"
    STRING = "string"
    CHAR = "char"
    COMMENT = "comment"
    PREPROC = "preproc"


@dataclass(frozen=True)
class Token:
    kind: TokKind
    start: int
    end: int
    text: str
    is_float: bool = False


# Keywords shared by C and C++; the C++ extras do no harm when lexing C.
_KEYWORDS = frozenset(
    """
    alignas alignof asm auto bool break case catch char class const constexpr
    const_cast continue decltype default delete do double dynamic_cast else
    enum explicit export extern false float for friend goto if inline int long
    mutable namespace new noexcept nullptr operator private protected public
    register reinterpret_cast restrict return short signed sizeof static
    static_assert static_cast struct switch template this thread_local throw
    true try typedef typeid typename union unsigned using virtual void
    volatile wchar_t while
    and and_eq bitand bitor compl not not_eq or or_eq xor xor_eq
    """.split()
)

# Longest-match-first operator table.
_OPERATORS = (
    "<<=", ">>=", "->*", "...",
    "::", "->", "++", "--", "<<", ">>", "<=", ">=", "==", "!=", "&&", "||",
    "+=", "-=", "*=", "/=", "%=", "&=", "|=", "^=", ".*",
    "+", "-", "*", "/", "%", "=", "<", ">", "!", "&", "|", "^", "~", "?", ".",
)

_PUNCT = frozenset(b"{}()[];,:")

_IDENT_START = frozenset(b"abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ_$")
_IDENT_CONT = _IDENT_START | frozenset(b"0123456789")
_DIGITS = frozenset(b"0123456789")
_WS = frozenset(b" \t\r\n\f\v")

_RAW_PREFIXES = frozenset(("R", "LR", "uR", "UR", "u8R"))


def _scan_string(src: bytes, i: int, quote: int) -> int:
    """Return the offset just past a quoted literal starting at src[i]."""
    n = len(src)
    j = i + 1
    while j < n:
        c = src[j]
        if c == 0x5C:  # backslash
            j += 2
            continue
        if c == quote:
            return j + 1
        if c == 0x0A:  # unterminated literal: stop at end of line
            return j
        j += 1
    return n


def _scan_raw_string(src: bytes, i: int) -> int:
    """Scan a C++ raw string literal R"delim( ... )delim" starting at the quote."""
    n = len(src)
    j = i + 1
    delim_start = j
    while j < n and src[j : j + 1] != b"(" and j - delim_start < 16:
        j += 1
    delim = src[delim_start:j]
    closer = b")" + delim + b'"'
    end = src.find(closer, j)
    if end == -1:
        return n
    return end + len(closer)


def _scan_number(src: bytes, i: int) -> tuple[int, bool]:
    """Scan a numeric literal; returns (end offset, is_float)."""
    n = len(src)
    j = i
    is_float = False
    is_hex = src[j : j + 2].lower() == b"0x"
    if is_hex:
        j += 2
    while j < n:
        c = src[j]
        if c in _DIGITS or c in _IDENT_START or c == 0x27:  # 0x27 = digit separator '
            if c in b"eE" and not is_hex and j + 1 < n and src[j + 1] in b"+-":
                is_float = True
                j += 2
                continue
            if c in b"pP" and is_hex and j + 1 < n and src[j + 1] in b"+-":
                is_float = True
                j += 2
                continue
            j += 1
            continue
        if c == 0x2E:  # '.'
            is_float = True
            j += 1
            continue
        break
    text = src[i:j]
    if not is_hex and (b"e" in text.lower() and not text.lower().endswith(b"e")):
        # exponent without sign, e.g. 1e9 (hex digits excluded above)
        is_float = True
    if not is_hex and text.rstrip(b"fFlLuU").lower().endswith(b"f"):
        is_float = True
    if text.lower().endswith(b"f") and not is_hex:
        is_float = True
    return j, is_float


def _at_line_start(src: bytes, i: int) -> bool:
    j = i - 1
    while j >= 0 and src[j] in b" \t":
        j -= 1
    return j < 0 or src[j] == 0x0A


def tokenize(src: bytes) -> list[Token]:
    """Tokenize a source buffer. Never raises on malformed input; unknown
    bytes are skipped so downstream indexing can degrade per-region."""
    toks: list[Token] = []
    n = len(src)
    i = 0
    while i < n:
        c = src[i]
        if c in _WS:
            i += 1
            continue
        if c == 0x2F and i + 1 < n:  # '/'
            nxt = src[i + 1]
            if nxt == 0x2F:
                j = src.find(b"\n", i)
                j = n if j == -1 else j
                toks.append(Token(TokKind.COMMENT, i, j, _dec(src[i:j])))
                i = j
                continue
            if nxt == 0x2A:
                j = src.find(b"*/", i + 2)
                j = n if j == -1 else j + 2
                toks.append(Token(TokKind.COMMENT, i, j, _dec(src[i:j])))
                i = j
                continue
        if c == 0x23 and _at_line_start(src, i):  # '#'
            j = i
            while j < n:
                eol = src.find(b"\n", j)
                if eol == -1:
                    j = n
                    break
                # honor backslash-newline continuation
                k = eol - 1
                while k > j and src[k] in b" \t\r":
                    k -= 1
                if src[k] == 0x5C:
                    j = eol + 1
                    continue
                j = eol
                break
            toks.append(Token(TokKind.PREPROC, i, j, _dec(src[i:j])))
            i = j
            continue
        if c == 0x22:  # '"'
            j = _scan_string(src, i, 0x22)
            toks.append(Token(TokKind.STRING, i, j, _dec(src[i:j])))
            i = j
            continue
        if c == 0x27:  # "'"
            j = _scan_string(src, i, 0x27)
            toks.append(Token(TokKind.CHAR, i, j, _dec(src[i:j])))
            i = j
            continue
        if c in _IDENT_START:
            j = i + 1
            while j < n and src[j] in _IDENT_CONT:
                j += 1
            text = _dec(src[i:j])
            if j < n and src[j] == 0x22 and text in _RAW_PREFIXES:
                k = _scan_raw_string(src, j)
                toks.append(Token(TokKind.STRING, i, k, _dec(src[i:k])))
                i = k
                continue
            kind = TokKind.KEYWORD if text in _KEYWORDS else TokKind.IDENT
            toks.append(Token(kind, i, j, text))
            i = j
            continue
        if c in _DIGITS or (c == 0x2E and i + 1 < n and src[i + 1] in _DIGITS):
            j, is_float = _scan_number(src, i)
            toks.append(Token(TokKind.NUMBER, i, j, _dec(src[i:j]), is_float=is_float))
            i = j
            continue
        matched = False
        for op in _OPERATORS:
            ob = op.encode()
            if src.startswith(ob, i):
                toks.append(Token(TokKind.OPERATOR, i, i + len(ob), op))
                i += len(ob)
                matched = True
                break
        if matched:
            continue
        if c in _PUNCT:
            toks.append(Token(TokKind.PUNCT, i, i + 1, chr(c)))
            i += 1
            continue
        i += 1  # unknown byte: skip
    return toks


def _dec(b: bytes) -> str:
    return b.decode("utf-8", errors="replace")


def integer_value(lexeme: str) -> int | None:
    """Parse a C integer literal's value; None when not parseable."""
    body = lexeme.replace("'", "")
    while body and body[-1] in "uUlLzZ":
        body = body[:-1]
    if not body:
        return None
    try:
        if body.lower().startswith(("0x", "0b")):
            return int(body, 0)
        if len(body) > 1 and body.startswith("0") and body.isdigit():
            return int(body, 8)
        return int(body, 10)
    except ValueError:
        return None


def integer_suffix(lexeme: str) -> str:
    suffix = ""
    body = lexeme.replace("'", "")
    while body and body[-1] in "uUlLzZ":
        suffix = body[-1] + suffix
        body = body[:-1]
    return suffix
