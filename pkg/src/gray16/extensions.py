"""Cyclic extensions, semidirect products and coset decompositions.

An extension type ``(N, n, tau, v)`` describes the group generated by ``N``
and one extra element ``a`` subject to ``a k a^-1 = tau(k)`` and ``a^n = v``.
Elements are stored as ``k a^i`` with the ``N`` part varying fastest, so the
first ``|N|`` indices are ``N`` itself and index ``|N|`` is ``a``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Mapping, Sequence

import numpy as np

from .automorphisms import (Automorphism, automorphism_from_images, identity_automorphism,
                            inner_automorphism, parse_images)
from .errors import (DegreeMismatch, InvalidExtension, NotHomomorphism, NotNormal,
                     NotTransversal, UnknownGroupError)
from .groups import (GroupTable, Isomorphism, build_builtin,
                     generating_set, is_isomorphic, is_normal, is_subgroup, isomorphisms)


@dataclass(frozen=True, eq=False)
class ExtensionType:
    base: GroupTable
    degree: int
    tau: Automorphism
    v: int

    def describe(self) -> str:
        return format_extension(self)


@dataclass
class Check:
    name: str
    passed: bool
    witness: str | None = None


@dataclass
class ExtensionReport:
    checks: list[Check] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return all(c.passed for c in self.checks)

    def __bool__(self):
        return self.valid

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]


def extension_type(base: GroupTable | str, degree: int, tau: Mapping[str, str] | Automorphism,
                   v: int | str = "e") -> ExtensionType:
    """Convenience constructor taking generator images and a word for ``v``."""
    if isinstance(base, str):
        base = build_builtin(base)
    if not isinstance(tau, Automorphism):
        tau = automorphism_from_images(base, dict(tau))
    return ExtensionType(base, degree, tau, base.element(v))


def validate_extension_type(E: ExtensionType) -> ExtensionReport:
    N = E.base
    report = ExtensionReport()
    if E.degree < 1:
        report.checks.append(Check("degree >= 1", False, str(E.degree)))
        return report
    ok = E.tau.group is N and E.tau.is_valid()
    report.checks.append(Check("tau is an automorphism of N", ok, None if ok else "tau"))
    if not ok:
        return report
    tv = E.tau(E.v)
    report.checks.append(Check(
        "tau(v) = v", tv == E.v,
        None if tv == E.v else f"tau({N.labels[E.v]}) = {N.labels[tv]}"))
    power = E.tau.power(E.degree)
    conj = inner_automorphism(N, E.v)
    bad = next((k for k in N if power(k) != conj(k)), None)
    report.checks.append(Check(
        "tau^n = t_v", bad is None,
        None if bad is None else
        f"tau^{E.degree}({N.labels[bad]}) = {N.labels[power(bad)]} but "
        f"v{N.labels[bad]}v^-1 = {N.labels[conj(bad)]}"))
    return report


@dataclass(frozen=True, eq=False)
class Extension:
    """An extension group, the embedding of ``N`` and the coset generator ``a``."""

    group: GroupTable
    type: ExtensionType
    embedding: tuple[int, ...]
    a: int

    @property
    def kernel(self) -> tuple[int, ...]:
        return self.embedding

    def transversal(self) -> list[int]:
        return [self.group.power(self.a, i) for i in range(self.type.degree)]

    def decomposition(self) -> "SemidirectDecomposition":
        return coset_decomposition(self.group, self.embedding, self.transversal())


def build_extension(E: ExtensionType, symbol: str = "a", name: str = "") -> Extension:
    """Realise an extension type as a multiplication table.

    ``(k1 a^i)(k2 a^j) = k1 tau^i(k2) a^(i+j)``, reducing ``a^n`` to ``v``.
    """
    report = validate_extension_type(E)
    if not report.valid:
        raise InvalidExtension(
            "; ".join(f"{c.name} fails ({c.witness})" for c in report.failures()), report)
    N, n = E.base, E.degree
    if symbol in N.symbols:
        raise InvalidExtension(f"symbol {symbol!r} already names a generator of N")
    m = N.order
    tau_pow = np.array([E.tau.power(i).map for i in range(n)])
    NT = N.table
    size = m * n
    k = np.arange(size) % m
    i = np.arange(size) // m
    K1, K2 = k[:, None], k[None, :]
    I1, I2 = i[:, None], i[None, :]
    prod = NT[K1, tau_pow[I1, K2]]
    wrap = I1 + I2 >= n
    prod = np.where(wrap, NT[prod, E.v], prod)
    table = prod + m * ((I1 + I2) % n)

    labels = []
    for idx in range(size):
        kl = N.labels[k[idx]]
        ap = "" if i[idx] == 0 else (symbol if i[idx] == 1 else f"{symbol}^{i[idx]}")
        labels.append((("" if kl == "e" else kl) + ap) or "e")
    symbols = dict(N.symbols)
    if n > 1:
        symbols[symbol] = m
    G = GroupTable(tuple(labels), table, symbols, name)
    return Extension(G, E, tuple(range(m)), m if n > 1 else 0)


def extension_equivalent(E1: ExtensionType, E2: ExtensionType) -> tuple[bool, Isomorphism | None]:
    """Search all isomorphisms ``phi: N -> N'`` with ``phi tau = sigma phi`` and ``phi(v) = w``."""
    if E1.degree != E2.degree:
        raise DegreeMismatch(f"degrees {E1.degree} and {E2.degree} differ")
    for phi in isomorphisms(E1.base, E2.base):
        if phi(E1.v) != E2.v:
            continue
        if all(phi(E1.tau(k)) == E2.tau(phi(k)) for k in E1.base):
            return True, phi
    return False, None


# ---------------------------------------------------------------------------
# semidirect products and decompositions


@dataclass(frozen=True, eq=False)
class SemidirectDecomposition:
    """Every ``g`` written uniquely as ``h k`` with ``h`` in the complement and ``k`` in the kernel.

    ``complement`` is a transversal of the normal subgroup ``kernel``; it is a
    subgroup exactly when ``split`` is true.
    """

    whole: GroupTable
    complement: tuple[int, ...]
    kernel: tuple[int, ...]
    split: bool
    h_of: tuple[int, ...]
    k_of: tuple[int, ...]

    def factor(self, g: int) -> tuple[int, int]:
        return self.h_of[g], self.k_of[g]

    def compose(self, h: int, k: int) -> int:
        return self.whole.mul(h, k)

    def describe(self) -> str:
        G = self.whole
        comp = ",".join(G.labels[h] for h in self.complement)
        ker = ",".join(G.labels[k] for k in self.kernel)
        sep = "split" if self.split else "non-split"
        return f"{{{comp}}} . {{{ker}}} ({sep})"


def coset_decomposition(G: GroupTable, K: Iterable[int | str],
                        transversal: Sequence[int | str]) -> SemidirectDecomposition:
    kernel = tuple(sorted({G.element(k) for k in K}))
    reps = tuple(G.element(t) for t in transversal)
    if not is_subgroup(G, kernel):
        raise NotNormal("kernel is not a subgroup")
    if not is_normal(G, kernel):
        raise NotNormal("kernel is not normal")
    if not reps or reps[0] != 0:
        raise NotTransversal("transversal must start with the identity")
    if len(reps) * len(kernel) != G.order:
        raise NotTransversal(f"{len(reps)} representatives for index {G.order // len(kernel)}")
    kset = set(kernel)
    h_of = [-1] * G.order
    k_of = [-1] * G.order
    for h in reps:
        hinv = G.inv(h)
        for g in range(G.order):
            k = G.mul(hinv, g)
            if k in kset:
                if h_of[g] != -1:
                    raise NotTransversal(
                        f"{G.labels[h]} and {G.labels[h_of[g]]} lie in the same coset")
                h_of[g], k_of[g] = h, k
    split = is_subgroup(G, reps)
    return SemidirectDecomposition(G, reps, kernel, split, tuple(h_of), tuple(k_of))


def action_from_generators(H: GroupTable, K: GroupTable,
                           images: Mapping[str, Automorphism]) -> list[Automorphism]:
    """Extend generator actions to a full homomorphism ``H -> Aut(K)``."""
    action = {0: identity_automorphism(K)}
    gens = [(H.element(g), f) for g, f in images.items()]
    frontier = [0]
    while frontier:
        nxt = []
        for u in frontier:
            for s, f in gens:
                w = H.mul(u, s)
                fw = action[u].compose(f)
                if w not in action:
                    action[w] = fw
                    nxt.append(w)
                elif action[w].map != fw.map:
                    raise NotHomomorphism(
                        f"action not well defined at {H.labels[w]}", (H.labels[u], H.labels[s]))
        frontier = nxt
    if len(action) != H.order:
        raise NotHomomorphism("generator images do not cover H")
    return [action[h] for h in H]


def semidirect_product(H: GroupTable, K: GroupTable,
                       psi: Sequence[Automorphism] | Mapping[str, Automorphism] | Callable,
                       name: str = "") -> tuple[GroupTable, SemidirectDecomposition]:
    """Build ``H x| K`` with ``h k h^-1 = psi_h(k)``.

    Element ``h k`` sits at index ``k + |K| h``.  ``psi`` may be a list indexed
    by ``H``, a mapping from generator labels of ``H``, or a callable.
    """
    if isinstance(psi, Mapping):
        action = action_from_generators(H, K, psi)
    elif callable(psi):
        action = [psi(h) for h in H]
    else:
        action = list(psi)
    if len(action) != H.order:
        raise NotHomomorphism("psi must give one automorphism per element of H")
    for h1 in H:
        for h2 in H:
            if action[H.mul(h1, h2)].map != action[h1].compose(action[h2]).map:
                raise NotHomomorphism(
                    f"psi({H.labels[h1]}{H.labels[h2]}) != psi({H.labels[h1]}) psi({H.labels[h2]})",
                    (h1, h2))
    nK = K.order
    size = H.order * nK
    act = np.array([f.map for f in action])
    h = np.arange(size) // nK
    k = np.arange(size) % nK
    H1, H2 = h[:, None], h[None, :]
    K1, K2 = k[:, None], k[None, :]
    hinv = H.inverses
    table = nK * H.table[H1, H2] + K.table[act[hinv[H2], K1], K2]

    disjoint = not (set(H.symbols) & set(K.symbols))
    labels = []
    for idx in range(size):
        hl, kl = H.labels[h[idx]], K.labels[k[idx]]
        if disjoint:
            labels.append("".join(p for p in (hl, kl) if p != "e") or "e")
        else:
            labels.append("e" if idx == 0 else f"({hl},{kl})")
    symbols = {}
    if disjoint:
        symbols = {s: i for s, i in K.symbols.items()}
        symbols.update({s: nK * i for s, i in H.symbols.items()})
    G = GroupTable(tuple(labels), table, symbols, name)
    comp = tuple(nK * i for i in range(H.order))
    kern = tuple(range(nK))
    decomp = SemidirectDecomposition(G, comp, kern, True, tuple(int(x) * nK for x in h),
                                     tuple(int(x) for x in k))
    return G, decomp


# ---------------------------------------------------------------------------
# extension-type literals: "(N=K8, n=2, tau=x->x^3;y->y, v=e)"

_LITERAL = re.compile(r"^\(?\s*N\s*=\s*(?P<N>[A-Za-z0-9]+)\s*,\s*n\s*=\s*(?P<n>\d+)\s*,"
                      r"\s*tau\s*=\s*(?P<tau>[^,]+?)\s*,\s*v\s*=\s*(?P<v>[^,)]+?)\s*\)?$")


def parse_extension_literal(text: str) -> ExtensionType:
    m = _LITERAL.match(text.strip())
    if m is None:
        raise ValueError(f"malformed extension literal {text!r}; "
                         "expected '(N=K8, n=2, tau=x->x^3;y->y, v=e)'")
    base = build_builtin(m["N"])
    images = parse_images(m["tau"])
    return extension_type(base, int(m["n"]), images, m["v"])


def format_extension(E: ExtensionType) -> str:
    N = E.base
    tau = ";".join(f"{N.labels[g]}->{N.labels[E.tau(g)]}" for g in generating_set(N))
    return f"(N={N.name}, n={E.degree}, tau={tau}, v={N.labels[E.v]})"


# ---------------------------------------------------------------------------
# the groups of order 16

ORDER16_TYPES: dict[str, tuple[str, str, dict[str, str], str]] = {
    "G0": ("C2 x C2 x C2 x C2", "E8", {"x": "x", "y": "y", "z": "z"}, "e"),
    "G1": ("C2 x C8", "C8", {"x": "x"}, "e"),
    "G2": ("C2 x| C8 (x->x^3)", "C8", {"x": "x^3"}, "e"),
    "G3": ("C2 x| C8 (x->x^5)", "C8", {"x": "x^5"}, "e"),
    "G4": ("C2 x| C8 (x->x^7)", "C8", {"x": "x^7"}, "e"),
    "G5": ("Q16", "C8", {"x": "x^7"}, "x^4"),
    "G6": ("C16", "C8", {"x": "x"}, "x"),
    "G7": ("K4 x C4", "K8", {"x": "x", "y": "y"}, "e"),
    "G8": ("D8 x C2", "K8", {"x": "x^3", "y": "y"}, "e"),
    "G9": ("C4 x| K4", "K8", {"x": "xy", "y": "y"}, "e"),
    "G10": ("C2 x| Q8", "K8", {"x": "x^3", "y": "x^2y"}, "e"),
    "G11": ("C2 x Q8", "K8", {"x": "x^3", "y": "y"}, "x^2"),
    "G12": ("C4 x| C4", "K8", {"x": "xy", "y": "y"}, "x^2"),
    "G13": ("C4 x C4", "K8", {"x": "x", "y": "y"}, "y"),
}


def order16_type(name: str) -> ExtensionType:
    if name not in ORDER16_TYPES:
        raise UnknownGroupError(f"unknown order-16 group {name!r}")
    _, base, images, v = ORDER16_TYPES[name]
    return extension_type(base, 2, images, v)


@lru_cache(maxsize=None)
def order16_extension(name: str) -> Extension:
    return build_extension(order16_type(name), name=name)


def order16_group(name: str) -> GroupTable:
    return order16_extension(name).group


@dataclass
class ClassifiedGroup:
    name: str
    description: str
    extension: ExtensionType
    group: GroupTable


def classify_order16(verify: bool = True) -> list[ClassifiedGroup]:
    """The fourteen groups of order 16, each from its extension type.

    With ``verify`` the 91 pairs are checked to be non-isomorphic.
    """
    out = [ClassifiedGroup(name, ORDER16_TYPES[name][0], order16_type(name), order16_group(name))
           for name in ORDER16_TYPES]
    if verify:
        for i, A in enumerate(out):
            for B in out[i + 1:]:
                iso = is_isomorphic(A.group, B.group)
                if iso is not None:
                    raise AssertionError(f"{A.name} and {B.name} are isomorphic")
    return out


def conjugation_action(G: GroupTable, complement: Iterable[int], kernel: Sequence[int]) -> dict[int, tuple[int, ...]]:
    """For each ``h``, the permutation of ``kernel`` (by position) induced by ``k -> h k h^-1``."""
    pos = {k: i for i, k in enumerate(kernel)}
    return {h: tuple(pos[G.conjugate(h, k)] for k in kernel) for h in complement}


__all__ = [
    "ExtensionType", "ExtensionReport", "Extension", "SemidirectDecomposition",
    "extension_type", "validate_extension_type", "build_extension", "extension_equivalent",
    "coset_decomposition", "semidirect_product", "action_from_generators",
    "parse_extension_literal", "format_extension", "ORDER16_TYPES", "order16_type",
    "order16_extension", "order16_group", "classify_order16", "ClassifiedGroup",
    "conjugation_action",
]
