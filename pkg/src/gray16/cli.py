"""Command line front end.

    gray16 groups list
    gray16 groups show D8
    gray16 aut K8
    gray16 classify
    gray16 graymap type1 G1
    gray16 graymap type2 G9 [--decomp "(N=K8, n=2, tau=x->xy;y->y, v=e)"]
    gray16 verify map.txt
    gray16 survey [--exhaustive] [--format tsv]
    gray16 feasible C8 --length 3

Exit status: 0 success, 1 a mathematical refutation, 2 bad usage or input.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import catalog
from .automorphisms import automorphism_group, automorphism_order
from .errors import Gray16Error
from .extensions import build_extension, classify_order16, format_extension, parse_extension_literal
from .graymaps import (GrayMapTable, base_gray_map, dumps_graymap, loads_graymap, transport,
                       type2_construct, verify_gray_map, weight_parity_feasible)
from .groups import BUILTIN_NAMES, build_builtin, count_involutions, subgroup_table
from .io import dumps_group, resolve_group, survey_json, survey_tsv


@dataclass
class CommandResult:
    status: int
    output: str = ""
    error: str = ""


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.format_usage()}{self.prog}: error: {message}\n")


def _table(headers, rows, fmt: str) -> str:
    rows = [[str(c) for c in r] for r in rows]
    if fmt == "tsv":
        return "\n".join("\t".join(r) for r in [list(headers)] + rows) + "\n"
    if fmt == "json":
        return json.dumps([dict(zip(headers, r)) for r in rows], indent=2, ensure_ascii=False) + "\n"
    widths = [max(len(str(h)), *(len(r[i]) for r in rows)) if rows else len(h)
              for i, h in enumerate(headers)]
    out = []
    for r in rows:
        out.append("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip())
    return "\n".join(out) + "\n"


def _map_output(phi: GrayMapTable, name: str, fmt: str) -> str:
    if fmt == "map":
        return dumps_graymap(phi, name)
    G = phi.group
    return _table(("element", "word"), [(G.labels[g], phi.word(g)) for g in G], fmt)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="gray16", description="Gray maps over groups of order at most 16")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("groups", help="list or show builtin groups")
    gs = g.add_subparsers(dest="action", required=True, parser_class=_Parser)
    gs.add_parser("list")
    show = gs.add_parser("show")
    show.add_argument("name")

    a = sub.add_parser("aut", help="automorphism group by generator images")
    a.add_argument("group")

    sub.add_parser("classify", help="the fourteen groups of order 16")

    m = sub.add_parser("graymap", help="build a Type 1 or Type 2 map")
    m.add_argument("kind", choices=("type1", "type2"))
    m.add_argument("group")
    m.add_argument("--decomp", help='extension literal, e.g. "(N=K8, n=2, tau=x->x^3;y->y, v=e)"')

    v = sub.add_parser("verify", help="verify a map file")
    v.add_argument("mapfile")

    s = sub.add_parser("survey", help="Type 2 survey over order 16")
    s.add_argument("--exhaustive", action="store_true")

    f = sub.add_parser("feasible", help="weight-parity test for bijective maps")
    f.add_argument("group")
    f.add_argument("--length", type=int, required=True)

    for leaf in (*gs.choices.values(), a, sub.choices["classify"], s, f):
        leaf.add_argument("--format", choices=("table", "tsv", "json"), default="table")
    m.add_argument("--format", choices=("table", "tsv", "json", "map"), default="table")
    return p


def _cmd_groups(args) -> CommandResult:
    if args.action == "list":
        rows = []
        for name in BUILTIN_NAMES:
            G = build_builtin(name)
            rows.append((name, G.order, count_involutions(G), "abelian" if G.is_abelian else "non-abelian"))
        return CommandResult(0, _table(("group", "order", "involutions", "type"), rows, args.format))
    G = resolve_group(args.name)
    if args.format == "json":
        body = {"order": G.order, "labels": list(G.labels), "table": G.table.tolist()}
        return CommandResult(0, json.dumps(body) + "\n")
    return CommandResult(0, dumps_group(G))


def _cmd_aut(args) -> CommandResult:
    G = resolve_group(args.group)
    auts = automorphism_group(G)
    gens = list(auts[0].images())
    rows = []
    for i, f in enumerate(auts, 1):
        im = f.images()
        rows.append((i, *(im[g] for g in gens), automorphism_order(f)))
    headers = ("#", *(f"effect on {g}" for g in gens), "order")
    return CommandResult(0, _table(headers, rows, args.format))


def _cmd_classify(args) -> CommandResult:
    rows = [(c.name, c.description, format_extension(c.extension)) for c in classify_order16()]
    return CommandResult(0, _table(("group", "structure", "extension type"), rows, args.format))


def _type2_from_literal(literal: str):
    E = parse_extension_literal(literal)
    ext = build_extension(E, name=literal)
    base = E.base.name
    if base not in catalog.SHORT_MAP_TYPES:
        raise Gray16Error(f"no short Gray map for N={base}")
    if E.degree not in (2, 4):
        raise Gray16Error("only degrees 2 and 4 have a base map for <a>")
    theta1 = catalog.natural_c2("a") if E.degree == 2 else catalog.relabel_map(base_gray_map("C4"), {"x": "a"})
    theta2 = transport(catalog.short_map(base), subgroup_table(ext.group, ext.embedding),
                       tuple(range(len(ext.embedding))))
    return type2_construct(ext.decomposition(), theta1, theta2), literal


def _cmd_graymap(args) -> CommandResult:
    name = args.group
    if args.kind == "type1":
        if args.decomp:
            raise UsageError("--decomp applies to type2 only\n")
        if name in catalog.ORDER16:
            phi = catalog.type1_map_order16(name)
        elif name == "C4":
            phi = catalog.type1_map_c4()
        else:
            phi = catalog.type1_map_order8(name)
    elif args.decomp:
        phi, name = _type2_from_literal(args.decomp)
    elif name in ("K8", "D8", "Q8"):
        phi = catalog.type2_candidate_order8(name)
    elif name in catalog.ORDER16:
        row = catalog.type2_map(name)
        if row.map is None:
            return CommandResult(1, "", f"{name}: {row.verdict}: {row.witness}\n")
        phi = row.map
        if not _same_table(phi.group, build_builtin(name)):
            # the map lives on the table built from this row's extension literal
            name = row.decomposition
    else:
        raise Gray16Error(f"no Type 2 construction for {name!r}")
    report = verify_gray_map(phi)
    out = _map_output(phi, name, args.format)
    if not report.passed:
        return CommandResult(1, out, report.summary() + "\n")
    return CommandResult(0, out)


def _same_table(A, B) -> bool:
    return A.labels == B.labels and bool((A.table == B.table).all())


def _cmd_verify(args) -> CommandResult:
    try:
        with open(args.mapfile, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise Gray16Error(str(exc)) from None
    name, phi = loads_graymap(text, resolve_group)
    report = verify_gray_map(phi)
    header = f"{name}: {'Gray map' if report.passed else 'not a Gray map'}\n"
    return CommandResult(0 if report.passed else 1, header + report.summary() + "\n")


def _cmd_survey(args) -> CommandResult:
    rows = catalog.type2_survey(exhaustive=args.exhaustive)
    fields = catalog.SURVEY_FIELDS
    if args.format == "tsv":
        out = survey_tsv(rows, fields)
    elif args.format == "json":
        out = survey_json(rows)
    else:
        out = _table(fields, [[r.record()[f] for f in fields] for r in rows], "table")
        out += "feasible: " + ", ".join(sorted(catalog.feasible_set(rows), key=lambda s: int(s[1:]))) + "\n"
    return CommandResult(0, out)


def _cmd_feasible(args) -> CommandResult:
    G = resolve_group(args.group)
    res = weight_parity_feasible(G, args.length)
    verdict = "feasible" if res.feasible else "infeasible"
    if args.format == "json":
        out = json.dumps({"group": args.group, "length": args.length, "feasible": res.feasible,
                          "involutions": res.involutions, "odd_classes": list(res.odd_classes)}) + "\n"
    else:
        out = f"{args.group} length {args.length}: {verdict} ({res.reason})\n"
    return CommandResult(0 if res.feasible else 1, out)


COMMANDS = {
    "groups": _cmd_groups, "aut": _cmd_aut, "classify": _cmd_classify, "graymap": _cmd_graymap,
    "verify": _cmd_verify, "survey": _cmd_survey, "feasible": _cmd_feasible,
}


def run(argv: list[str]) -> CommandResult:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return COMMANDS[args.command](args)
    except UsageError as exc:
        return CommandResult(2, "", str(exc))
    except (Gray16Error, KeyError, ValueError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        return CommandResult(2, "", f"gray16: error: {msg}\n")


def main(argv: list[str] | None = None) -> int:
    res = run(sys.argv[1:] if argv is None else argv)
    if res.output:
        sys.stdout.write(res.output)
    if res.error:
        sys.stderr.write(res.error)
    return res.status


if __name__ == "__main__":
    sys.exit(main())
