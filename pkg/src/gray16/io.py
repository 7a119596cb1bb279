"""Text formats: group tables, survey TSV/JSON and group-name resolution."""

from __future__ import annotations

import json

from .errors import UnknownGroupError
from .extensions import build_extension, parse_extension_literal
from .groups import GroupTable, build_builtin


def dumps_group(G: GroupTable) -> str:
    """``order N``, the labels, then one row of indices per element."""
    lines = [f"order {G.order}", " ".join(G.labels)]
    lines += [" ".join(str(int(v)) for v in row) for row in G.table]
    return "\n".join(lines) + "\n"


def loads_group(text: str, name: str = "") -> GroupTable:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    head = lines[0].split()
    if len(head) != 2 or head[0] != "order":
        raise ValueError(f"bad header {lines[0]!r}")
    n = int(head[1])
    labels = lines[1].split()
    rows = [[int(v) for v in ln.split()] for ln in lines[2:]]
    if len(labels) != n or len(rows) != n:
        raise ValueError(f"expected {n} labels and {n} rows")
    # single-letter labels double as generator symbols
    symbols = {lab: i for i, lab in enumerate(labels) if len(lab) == 1 and lab.isalpha() and lab != "e"}
    return GroupTable(tuple(labels), rows, symbols, name)


def resolve_group(name: str) -> GroupTable:
    """A builtin name such as ``G8`` or an extension literal ``(N=D8, n=2, ...)``."""
    name = name.strip()
    if name.startswith("(") or name.startswith("N="):
        return build_extension(parse_extension_literal(name), name=name).group
    return build_builtin(name)


def survey_tsv(rows, fields) -> str:
    lines = ["\t".join(fields)]
    for r in rows:
        rec = r.record()
        lines.append("\t".join(str(rec[f]).replace("\t", " ") for f in fields))
    return "\n".join(lines) + "\n"


def survey_json(rows) -> str:
    return json.dumps([r.record() for r in rows], indent=2, ensure_ascii=False) + "\n"


__all__ = ["dumps_group", "loads_group", "resolve_group", "survey_tsv", "survey_json",
           "UnknownGroupError"]
