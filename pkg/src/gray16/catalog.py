"""Gray maps for the groups of order 8 and 16, and the Type 2 survey.

The survey lists a fixed set of decompositions and recomputes every verdict
from the constructions; nothing here stores a precomputed answer.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field
from functools import lru_cache

from .automorphisms import automorphism_group
from .extensions import (ORDER16_TYPES, SemidirectDecomposition, build_extension,
                         coset_decomposition, extension_type, format_extension,
                         order16_extension, order16_group)
from .graymaps import (GrayMapTable, VerificationReport, base_gray_map, compatible,
                       transport, type1_extend, type2_construct, verify_gray_map,
                       weight_parity_feasible)
from .groups import (GroupTable, build_builtin, contains_subgroup_isomorphic_to, generated,
                     is_isomorphic, is_normal, order_profile, subgroup_table, subgroups,
                     with_symbols)

ORDER16 = tuple(ORDER16_TYPES)


def relabel_map(phi: GrayMapTable, mapping: dict[str, str]) -> GrayMapTable:
    """Same words on the same group, with generator symbols renamed."""
    return GrayMapTable(with_symbols(phi.group, mapping), phi.bits)


def on_subgroup(G: GroupTable, elements, base: GrayMapTable, images: dict[str, str]) -> GrayMapTable:
    """Transport ``base`` onto the subgroup ``elements`` of ``G`` via generator images."""
    H = subgroup_table(G, [G.element(e) for e in elements])
    return transport(base, H, images)


# ---------------------------------------------------------------------------
# order 8


@lru_cache(maxsize=None)
def type1_map_c4() -> GrayMapTable:
    """The length-2 map on ``C4`` obtained by doubling the natural map on ``{e, x^2}``."""
    C4 = build_builtin("C4")
    H = [C4.element("e"), C4.element("x^2")]
    phi0 = on_subgroup(C4, H, base_gray_map("C2"), {"x": "x^2"})
    return type1_extend(C4, H, "x", phi0)


# default index-2 subgroup for each order-8 group, by generator words
TYPE1_SUBGROUPS = {"C8": ("x^2",), "K8": ("x",), "D8": ("x",), "Q8": ("x",), "E8": ("x", "y")}


@lru_cache(maxsize=None)
def type1_map_order8(name: str, over: tuple[str, ...] | None = None) -> GrayMapTable:
    """Length-4 Type 1 map on an order-8 group, doubling a short map on ``<over>``.

    By default ``C8`` doubles ``C4`` on ``<x^2>``; ``K8``, ``D8``, ``Q8`` double
    ``C4`` on ``<x>``; ``E8`` doubles ``K4`` on ``<x, y>``. ``over`` names other
    generators, e.g. ``("x^2", "y")`` for the Klein subgroup of ``K8``.
    """
    if name not in TYPE1_SUBGROUPS:
        raise KeyError(f"no Type 1 map for {name!r}")
    G = build_builtin(name)
    gens = TYPE1_SUBGROUPS[name] if over is None else tuple(over)
    H = generated(G, [G.element(w) for w in gens])
    if len(H) * 2 != G.order:
        raise KeyError(f"<{', '.join(gens)}> is not of index 2 in {name}")
    Ht = subgroup_table(G, H)
    kind = next((n for n in ("C4", "K4") if is_isomorphic(Ht, build_builtin(n))), None)
    if kind is None:
        raise KeyError(f"<{', '.join(gens)}> has no short base map")
    images = dict(zip(("x", "y"), gens))
    phi = on_subgroup(G, H, base_gray_map(kind), images)
    return type1_extend(G, H, canonical_representative(G, H), phi)


def canonical_representative(G: GroupTable, H) -> int:
    """Lowest element index outside ``H``."""
    H = set(H)
    return next(g for g in G if g not in H)


def order8_decomposition(name: str) -> SemidirectDecomposition:
    """``<x>`` as kernel with transversal ``{e, y}``; split for ``K8`` and ``D8``."""
    G = build_builtin(name)
    return coset_decomposition(G, generated(G, [G.element("x")]), ["e", "y"])


def natural_c2(symbol: str) -> GrayMapTable:
    return relabel_map(base_gray_map("C2"), {"x": symbol})


def type2_candidate_order8(name: str) -> GrayMapTable:
    """``theta(y^j x^i) = (j | phi_C4(x^i))`` on ``K8``, ``D8`` or ``Q8``."""
    d = order8_decomposition(name)
    return type2_construct(d, natural_c2("y"), base_gray_map("C4"))


@lru_cache(maxsize=None)
def type2_map_order8(name: str) -> GrayMapTable:
    """Bijective length-3 maps: ``K8`` and ``D8`` by concatenation, ``E8`` by coordinates."""
    if name == "E8":
        return base_gray_map("E8")
    if name not in ("K8", "D8"):
        raise KeyError(f"no length-3 Gray map for {name!r}")
    return type2_candidate_order8(name)


# Short (bijective) maps for the factors of a Type 2 construction.
def short_map(name: str) -> GrayMapTable:
    if name in ("C2", "C4", "K4"):
        return base_gray_map(name)
    return type2_map_order8(name)


def order8_base_maps() -> dict[str, list[tuple[str, GrayMapTable]]]:
    """Every catalog Gray map on a group of order 8, keyed by group."""
    t1 = type1_map_order8
    return {
        "C8": [("type1", t1("C8"))],
        "K8": [("type1", t1("K8")), ("type1 over <x^2, y>", t1("K8", ("x^2", "y"))),
               ("type2", type2_map_order8("K8"))],
        "D8": [("type1", t1("D8")), ("type2", type2_map_order8("D8"))],
        "Q8": [("type1", t1("Q8"))],
        "E8": [("type1", t1("E8")), ("linear", short_map("E8"))],
    }


SHORT_MAP_TYPES = ("C2", "C4", "K4", "K8", "D8", "E8")


# ---------------------------------------------------------------------------
# order 16, Type 1


# K8-based groups take the K8 map over its Klein subgroup <x^2, y>.
ORDER16_TYPE1_OVER = {"K8": ("x^2", "y")}


def type1_map_order16(name: str) -> GrayMapTable:
    """Type 1 map on ``G_i`` over ``N`` (the first |N| elements), coset ``N a``.

    The coset is written ``k a`` to match the ``x^i y^j a`` labels; with
    ``a k`` instead the G10 table would fail, since ``a`` moves ``y`` to
    ``x^2 y``.
    """
    ext = order16_extension(name)
    base = ORDER16_TYPES[name][1]
    x = canonical_representative(ext.group, ext.embedding)
    phi = _onto_kernel(type1_map_order8(base, ORDER16_TYPE1_OVER.get(base)), ext)
    return type1_extend(ext.group, ext.embedding, x, phi, side="right")


def _onto_kernel(phi: GrayMapTable, ext) -> GrayMapTable:
    # N occupies the first |N| indices of the extension with N's own labels.
    H = subgroup_table(ext.group, ext.embedding)
    return transport(phi, H, tuple(range(H.order)))


@lru_cache(maxsize=None)
def _type1_catalog() -> dict[str, GrayMapTable]:
    return {name: type1_map_order16(name) for name in ORDER16}


def type1_catalog() -> dict[str, GrayMapTable]:
    """Length-8 Type 1 maps for ``G0``..``G13``."""
    return dict(_type1_catalog())


# ---------------------------------------------------------------------------
# order 16, Type 2 survey


@dataclass
class SurveyRow:
    group: str
    decomposition: str
    type: str
    verdict: str
    witness: str
    locus: str
    map: GrayMapTable | None = field(default=None, repr=False, compare=False)
    report: VerificationReport | None = field(default=None, repr=False, compare=False)
    decomp: SemidirectDecomposition | None = field(default=None, repr=False, compare=False)

    @property
    def valid(self) -> bool:
        return self.verdict == "valid"

    def record(self) -> dict[str, str]:
        d = asdict(self)
        for k in ("map", "report", "decomp"):
            d.pop(k)
        return d


SURVEY_FIELDS = ("group", "decomposition", "type", "verdict", "witness", "locus")


def _witness_text(report: VerificationReport) -> str:
    c = report.first_failure()
    if c is None:
        return ""
    w = c.witness
    if c.name == "C2":
        g = w["g"] if len(w["g"]) == 1 else f"({w['g']})"
        return (f"{g}^-1 = {w['g^-1']}: w(theta({w['g']}))={w['w(g)']} "
                f"vs w(theta({w['g^-1']}))={w['w(g^-1)']}")
    return c.witness_text()


def _row_from_map(group, descr, decomp, theta1, theta2, locus) -> SurveyRow:
    theta = type2_construct(decomp, theta1, theta2)
    report = verify_gray_map(theta)
    construction = "candidate"
    notes = ""
    if decomp.split:
        comp = compatible(decomp, theta2)
        if comp:
            construction = "type2"
        else:
            w = comp.witness
            notes = f"incompatible at h={w['h']}, k={w['k']}: w={w['w(k)']} vs {w['w(hkh^-1)']}"
    else:
        notes = "non-split transversal"
    verdict = "valid" if report.passed else f"fails {report.first_failure().name}"
    witness = _witness_text(report)
    if notes and not report.passed:
        witness = f"{witness} ({notes})"
    return SurveyRow(group, descr, construction, verdict, witness, locus, theta, report, decomp)


# (group, N, generator images of tau, v) for the C2-over-order-8 rows
EXTENSION_ROWS = (
    ("G7", "K8", {"x": "x", "y": "y"}, "e"),
    ("G8", "K8", {"x": "x^3", "y": "y"}, "e"),
    ("G8", "D8", {"x": "x^3", "y": "y"}, "e"),
    ("G9", "K8", {"x": "xy", "y": "y"}, "e"),
    ("G10", "K8", {"x": "x^3", "y": "x^2y"}, "e"),
    ("G10", "D8", {"x": "x", "y": "x^2y"}, "e"),
    ("G11", "K8", {"x": "x^3", "y": "y"}, "x^2"),
    ("G12", "K8", {"x": "xy", "y": "y"}, "x^2"),
    ("G13", "K8", {"x": "x", "y": "y"}, "y"),
)

# (group, extension-type literal, kernel elements, base map, generator images into the kernel)
CYCLIC_COMPLEMENT_ROWS = (
    ("G7", "(N=K4, n=4, tau=x->x;y->y, v=e)", ["e", "a", "y", "ya"], "K4", {"x": "a", "y": "y"}),
    ("G9", "(N=K4, n=4, tau=x->xy;y->y, v=e)", ["e", "a", "y", "ya"], "K4", {"x": "a", "y": "y"}),
    ("G12", "(N=C4, n=4, tau=x->x^3, v=e)", ["e", "xa", "y", "xya"], "C4", {"x": "xa"}),
    ("G13", "(N=C4, n=4, tau=x->x, v=e)", ["e", "a", "y", "ya"], "C4", {"x": "a"}),
)


def extension_row(group: str, base: str, images: dict[str, str], v: str) -> SurveyRow:
    E = extension_type(base, 2, images, v)
    ext = build_extension(E, name=group)
    decomp = ext.decomposition()
    theta2 = _onto_kernel(short_map(base), ext)
    row = _row_from_map(group, format_extension(E), decomp, natural_c2("a"), theta2,
                        f"C2 over {base}")
    return row


def cyclic_complement_row(group, literal, kernel, base, images) -> SurveyRow:
    G = order16_group(group)
    decomp = coset_decomposition(G, kernel, ["e", "x", "x^2", "x^3"])
    theta1 = on_subgroup(G, generated(G, [G.element("x")]), base_gray_map("C4"), {"x": "x"})
    theta2 = on_subgroup(G, kernel, base_gray_map(base), images)
    return _row_from_map(group, literal, decomp, theta1, theta2, f"C4 over {base}")


def elementary_row() -> SurveyRow:
    ext = order16_extension("G0")
    theta2 = _onto_kernel(base_gray_map("E8"), ext)
    return _row_from_map("G0", "(N=E8, n=2, tau=x->x;y->y;z->z, v=e)", ext.decomposition(),
                         natural_c2("a"), theta2, "C2 over E8")


def blocked_rows() -> list[SurveyRow]:
    feas = weight_parity_feasible(build_builtin("C8"), 3)
    rows = []
    for name in ("G1", "G2", "G3", "G4", "G5", "G6"):
        E = extension_type("C8", 2, ORDER16_TYPES[name][2], ORDER16_TYPES[name][3])
        rows.append(SurveyRow(name, format_extension(E), "blocked", "blocked",
                              f"C8 has no length-3 Gray map: {feas.reason}", "C2 over C8"))
    return rows


def type2_survey(exhaustive: bool = False) -> list[SurveyRow]:
    """Type 2 attempts over the decompositions considered for order 16.

    With ``exhaustive`` every split decomposition into factors with a short
    base map is tried as well (see :func:`exhaustive_rows`).
    """
    rows = blocked_rows()
    rows += [extension_row(*spec) for spec in EXTENSION_ROWS]
    rows += [cyclic_complement_row(*spec) for spec in CYCLIC_COMPLEMENT_ROWS]
    rows.append(elementary_row())
    if exhaustive:
        rows += exhaustive_rows()
    return rows


def feasible_set(rows) -> set[str]:
    return {r.group for r in rows if r.valid}


def _short_type(G: GroupTable, S) -> tuple[str, GroupTable] | None:
    T = subgroup_table(G, S)
    for name in SHORT_MAP_TYPES:
        B = build_builtin(name)
        if B.order == T.order and order_profile(B) == order_profile(T) and is_isomorphic(B, T):
            return name, T
    return None


def exhaustive_rows(names=ORDER16) -> list[SurveyRow]:
    """Try every split ``H x| K`` whose factors are ``C2, C4, K4, K8, D8`` or ``E8``.

    Each row stands for one (kernel, complement) pair; it is valid when some
    choice of isomorphism from the base groups onto the factors gives a Gray
    map.  This goes beyond the fixed list and reports whatever it finds.
    """
    rows = []
    for name in names:
        G = order16_group(name)
        subs = subgroups(G)
        for K in subs:
            if len(K) in (1, G.order) or not is_normal(G, K):
                continue
            kt = _short_type(G, K)
            if kt is None:
                continue
            for H in subs:
                if len(H) * len(K) != G.order or set(H) & set(K) != {0}:
                    continue
                ht = _short_type(G, H)
                if ht is None:
                    continue
                rows.append(_exhaustive_pair(name, G, K, H, kt, ht))
    return rows


def _exhaustive_pair(name, G, K, H, kt, ht) -> SurveyRow:
    kname, KT = kt
    hname, HT = ht
    decomp = coset_decomposition(G, K, list(H))
    theta1 = transport(short_map(hname), HT, is_isomorphic(build_builtin(hname), HT))
    base = build_builtin(kname)
    iso = is_isomorphic(base, KT)
    descr = (f"{hname} x| {kname}: H={{{','.join(G.labels[h] for h in H)}}}, "
             f"K={{{','.join(G.labels[k] for k in K)}}}")
    first = None
    for f in automorphism_group(base):
        twisted = tuple(iso.map[f.map[g]] for g in range(base.order))
        theta2 = transport(short_map(kname), KT, twisted)
        row = _row_from_map(name, descr, decomp, theta1, theta2, "exhaustive")
        if row.valid:
            return row
        if first is None:
            first = row
    return first


# ---------------------------------------------------------------------------
# necessary conditions


@dataclass
class ConditionRow:
    group: str
    contains_c8: bool
    contains_q8: bool
    type2_feasible: bool

    @property
    def consistent(self) -> bool:
        """Feasible groups contain neither ``C8`` nor ``Q8``."""
        return not self.type2_feasible or not (self.contains_c8 or self.contains_q8)


def necessary_conditions_report(rows=None) -> list[ConditionRow]:
    rows = type2_survey() if rows is None else rows
    feasible = feasible_set(rows)
    C8, Q8 = build_builtin("C8"), build_builtin("Q8")
    out = []
    for name in ORDER16:
        G = order16_group(name)
        out.append(ConditionRow(name, contains_subgroup_isomorphic_to(G, C8),
                                contains_subgroup_isomorphic_to(G, Q8), name in feasible))
    return out


def type2_map(name: str) -> SurveyRow:
    """The survey row used for ``name``: the first valid one, else the first attempt."""
    rows = [r for r in type2_survey() if r.group == name]
    if not rows:
        raise KeyError(f"no Type 2 attempt for {name!r}")
    return next((r for r in rows if r.valid), rows[0])


__all__ = [
    "ORDER16", "SurveyRow", "ConditionRow", "type1_map_c4", "type1_map_order8",
    "type2_candidate_order8", "type2_map_order8", "short_map", "type1_map_order16",
    "type1_catalog", "type2_survey", "exhaustive_rows", "feasible_set",
    "necessary_conditions_report", "type2_map", "canonical_representative", "on_subgroup",
    "relabel_map", "natural_c2", "order8_decomposition",
]
