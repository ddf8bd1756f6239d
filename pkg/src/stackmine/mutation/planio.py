"""Mutation plan serialization: one JSON object per line.

Fields: id, file, offset, length, original, kind, replacement,
enclosing_function, enclosing_file. LineOrder mutations carry a swap
descriptor object in `replacement`.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Iterable

from stackmine.errors import MalformedRow
from stackmine.mutation.mutators import MutatorKind
from stackmine.mutation.sites import Mutation, MutationSite


def mutation_to_dict(m: Mutation) -> dict:
    replacement: object
    if m.is_swap:
        replacement = {"swap_offset": m.swap_offset, "swap_length": m.swap_length}
    else:
        replacement = m.replacement
    return {
        "id": m.id,
        "file": m.site.file,
        "offset": m.site.offset,
        "length": m.site.length,
        "original": m.site.original,
        "kind": m.site.kind.value,
        "replacement": replacement,
        "enclosing_function": m.site.enclosing_function,
        "enclosing_file": m.site.enclosing_file,
    }


def mutation_from_dict(d: dict) -> Mutation:
    kind = MutatorKind.from_name(d["kind"])
    site = MutationSite(
        file=d["file"],
        offset=int(d["offset"]),
        length=int(d["length"]),
        original=d["original"],
        kind=kind,
        enclosing_function=d["enclosing_function"],
        enclosing_file=d["enclosing_file"],
    )
    rep = d["replacement"]
    if kind is MutatorKind.LINE_ORDER:
        return Mutation(
            id=d["id"],
            site=site,
            swap_offset=int(rep["swap_offset"]),
            swap_length=int(rep["swap_length"]),
        )
    return Mutation(id=d["id"], site=site, replacement=rep or "")


def write_plan(path: str | Path, mutations: Iterable[Mutation]) -> int:
    count = 0
    with open(path, "w", encoding="utf-8") as fh:
        for m in mutations:
            fh.write(json.dumps(mutation_to_dict(m), ensure_ascii=False) + "\n")
            count += 1
    return count


def read_plan(path: str | Path) -> list[Mutation]:
    out: list[Mutation] = []
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                out.append(mutation_from_dict(json.loads(line)))
            except (json.JSONDecodeError, KeyError, ValueError) as exc:
                raise MalformedRow(lineno, f"bad plan entry: {exc}") from exc
    return out
