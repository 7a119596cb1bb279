"""Binary words, Gray-map tables and their verification.

A Gray map sends each group element to a binary word so that
``d(a, b) = w(phi(a b^-1))`` is a metric on the group which agrees with the
Hamming distance between images.  :func:`verify_gray_map` checks four
conditions exhaustively:

* ``C1``: ``w(phi(g)) == 0`` iff ``g == e``
* ``C2``: ``w(phi(g)) == w(phi(g^-1))``
* ``C3``: ``w(phi(gh)) <= w(phi(g)) + w(phi(h))``
* ``C4``: ``w(phi(a b^-1)) == d_H(phi(a), phi(b))``

The first three together are equivalent to ``d`` being a metric.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import (ElementInH, InvalidBaseMap, LengthMismatch, NotIndexTwo, NotSplit,
                     WeightsNotInvariant,
                     SizeMismatch, UnknownGroupError)
from .extensions import SemidirectDecomposition
from .groups import (GroupTable, Isomorphism, build_builtin, count_involutions,
                     elementary_abelian, homomorphism_from_labels, is_subgroup)


@dataclass(frozen=True)
class BinaryWord:
    bits: tuple[int, ...]

    def __post_init__(self):
        if not self.bits or any(b not in (0, 1) for b in self.bits):
            raise ValueError(f"not a non-empty binary word: {self.bits!r}")

    @classmethod
    def parse(cls, text: "str | BinaryWord | Sequence[int]") -> "BinaryWord":
        if isinstance(text, BinaryWord):
            return text
        if isinstance(text, str):
            return cls(tuple(int(c) for c in text.strip()))
        return cls(tuple(int(b) for b in text))

    @classmethod
    def zeros(cls, n: int) -> "BinaryWord":
        return cls((0,) * n)

    @classmethod
    def ones(cls, n: int) -> "BinaryWord":
        return cls((1,) * n)

    @property
    def length(self) -> int:
        return len(self.bits)

    def __len__(self):
        return len(self.bits)

    def __add__(self, other: "BinaryWord") -> "BinaryWord":
        other = BinaryWord.parse(other)
        if len(other) != len(self):
            raise LengthMismatch(f"cannot add words of length {len(self)} and {len(other)}")
        return BinaryWord(tuple(a ^ b for a, b in zip(self.bits, other.bits)))

    def __or__(self, other: "BinaryWord") -> "BinaryWord":
        """Concatenation ``(u | v)``."""
        return BinaryWord(self.bits + BinaryWord.parse(other).bits)

    @property
    def weight(self) -> int:
        return sum(self.bits)

    def __str__(self):
        return "".join(map(str, self.bits))


def hamming_weight(u) -> int:
    return BinaryWord.parse(u).weight


def hamming_distance(u, v) -> int:
    u, v = BinaryWord.parse(u), BinaryWord.parse(v)
    if len(u) != len(v):
        raise LengthMismatch(f"words of length {len(u)} and {len(v)}")
    return sum(a != b for a, b in zip(u.bits, v.bits))


def _as_bits(words: Iterable) -> np.ndarray:
    rows = [BinaryWord.parse(w).bits for w in words]
    lengths = {len(r) for r in rows}
    if len(lengths) != 1:
        raise LengthMismatch(f"inconsistent word lengths {sorted(lengths)}")
    return np.array(rows, dtype=np.uint8)


@dataclass(frozen=True, eq=False)
class GrayMapTable:
    """One binary word per element of ``group``, stored row-wise in ``bits``.

    Nothing beyond shape is enforced here; whether the table is a Gray map is
    the verifier's business, so refuted candidates can be represented too.
    """

    group: GroupTable
    bits: np.ndarray

    def __post_init__(self):
        bits = np.array(self.bits, dtype=np.uint8)
        if bits.ndim != 2 or bits.shape[0] != self.group.order or bits.shape[1] < 1:
            raise LengthMismatch(f"need {self.group.order} words of equal positive length")
        if bits.max(initial=0) > 1:
            raise ValueError("bits must be 0 or 1")
        bits.setflags(write=False)
        object.__setattr__(self, "bits", bits)

    @classmethod
    def from_words(cls, group: GroupTable, words: Sequence) -> "GrayMapTable":
        return cls(group, _as_bits(words))

    @classmethod
    def from_mapping(cls, group: GroupTable, mapping: Mapping[str, str]) -> "GrayMapTable":
        """Words keyed by element labels or words in the group's symbols."""
        rows: list = [None] * group.order
        for key, w in mapping.items():
            g = group.element(key)
            if rows[g] is not None:
                raise ValueError(f"element {group.labels[g]} assigned twice")
            rows[g] = w
        missing = [group.labels[g] for g, r in enumerate(rows) if r is None]
        if missing:
            if missing == ["e"]:
                rows[0] = "0" * len(BinaryWord.parse(next(iter(mapping.values()))))
            else:
                raise ValueError(f"no word for {', '.join(missing)}")
        return cls.from_words(group, rows)

    @property
    def length(self) -> int:
        return int(self.bits.shape[1])

    def word(self, g: int | str) -> str:
        return "".join(map(str, self.bits[self.group.element(g)]))

    def __getitem__(self, g: int | str) -> str:
        return self.word(g)

    def binary_word(self, g: int | str) -> BinaryWord:
        return BinaryWord(tuple(int(b) for b in self.bits[self.group.element(g)]))

    @property
    def weights(self) -> np.ndarray:
        return self.bits.sum(axis=1).astype(np.int64)

    def weight(self, g: int | str) -> int:
        return int(self.weights[self.group.element(g)])

    def as_dict(self) -> dict[str, str]:
        return {self.group.labels[g]: self.word(g) for g in self.group}

    def distances(self) -> np.ndarray:
        """Pairwise Hamming distances between images."""
        return (self.bits[:, None, :] != self.bits[None, :, :]).sum(axis=2)

    def is_injective(self) -> bool:
        return len({row.tobytes() for row in self.bits}) == self.group.order


# ---------------------------------------------------------------------------
# verification


@dataclass
class ConditionResult:
    name: str
    description: str
    passed: bool
    witness: dict | None = None

    def witness_text(self) -> str:
        if not self.witness:
            return ""
        return ", ".join(f"{k}={v}" for k, v in self.witness.items())


@dataclass
class VerificationReport:
    conditions: list[ConditionResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.conditions)

    def __bool__(self):
        return self.passed

    def __getitem__(self, name: str) -> ConditionResult:
        for c in self.conditions:
            if c.name == name:
                return c
        raise KeyError(name)

    @property
    def metric(self) -> bool:
        """C1, C2 and C3 hold, i.e. ``d(a, b) = w(phi(a b^-1))`` is a distance."""
        return all(self[n].passed for n in ("C1", "C2", "C3"))

    def failures(self) -> list[ConditionResult]:
        return [c for c in self.conditions if not c.passed]

    def first_failure(self) -> ConditionResult | None:
        return next(iter(self.failures()), None)

    def summary(self) -> str:
        lines = []
        for c in self.conditions:
            status = "pass" if c.passed else "FAIL"
            extra = f"  [{c.witness_text()}]" if not c.passed else ""
            lines.append(f"{c.name} {status}  {c.description}{extra}")
        return "\n".join(lines)


def verify_gray_map(phi: GrayMapTable) -> VerificationReport:
    """Check C1..C4 over all elements and pairs, recording the first counterexample of each."""
    G = phi.group
    lab = G.labels
    w = phi.weights
    T = G.table
    inv = G.inverses
    report = VerificationReport()

    zero = w == 0
    zero[0] = not zero[0]
    bad = np.flatnonzero(zero)
    report.conditions.append(ConditionResult(
        "C1", "w(phi(g)) = 0 iff g = e", not bad.size,
        None if not bad.size else {"g": lab[bad[0]], "w(g)": int(w[bad[0]])}))

    bad = np.flatnonzero(w != w[inv])
    wit = None
    if bad.size:
        g = int(bad[0])
        wit = {"g": lab[g], "g^-1": lab[inv[g]], "w(g)": int(w[g]), "w(g^-1)": int(w[inv[g]])}
    report.conditions.append(ConditionResult(
        "C2", "w(phi(g)) = w(phi(g^-1))", not bad.size, wit))

    viol = w[T] > w[:, None] + w[None, :]
    wit = None
    if viol.any():
        a, b = (int(t) for t in np.argwhere(viol)[0])
        wit = {"g": lab[a], "h": lab[b], "gh": lab[T[a, b]],
               "w(gh)": int(w[T[a, b]]), "w(g)+w(h)": int(w[a] + w[b])}
    report.conditions.append(ConditionResult(
        "C3", "w(phi(gh)) <= w(phi(g)) + w(phi(h))", not viol.any(), wit))

    dist = phi.distances()
    wab = w[T[:, inv]]  # wab[a, b] = w(phi(a b^-1))
    viol = wab != dist
    wit = None
    if viol.any():
        a, b = (int(t) for t in np.argwhere(viol)[0])
        wit = {"a": lab[a], "b": lab[b], "w(ab^-1)": int(wab[a, b]), "d_H": int(dist[a, b])}
    report.conditions.append(ConditionResult(
        "C4", "w(phi(ab^-1)) = d_H(phi(a), phi(b))", not viol.any(), wit))
    return report


def is_gray_map(phi: GrayMapTable) -> bool:
    """Same verdict as :func:`verify_gray_map` without building a report."""
    G = phi.group
    w = phi.weights
    T = G.table
    inv = G.inverses
    if w[0] != 0 or not w[1:].all() or (w != w[inv]).any():
        return False
    if (w[T] > w[:, None] + w[None, :]).any():
        return False
    return bool((w[T[:, inv]] == phi.distances()).all())


# ---------------------------------------------------------------------------
# base maps and transport


def elementary_gray_map(rank: int) -> GrayMapTable:
    """Coordinate map of ``C2^rank``: ``x^i y^j z^k -> ijk``."""
    G = elementary_abelian(rank)
    # normal_form_group puts the first symbol fastest, so element g has exponents g's binary digits
    words = [[(g >> p) & 1 for p in range(rank)] for g in G]
    return GrayMapTable.from_words(G, words)


def base_gray_map(name: str) -> GrayMapTable:
    """Base maps: natural ``C2``; the length-2 maps on ``C4`` and ``K4``; ``E(rank)``."""
    if name == "C2":
        G = build_builtin("C2")
        return GrayMapTable.from_mapping(G, {"e": "0", "x": "1"})
    if name == "C4":
        G = build_builtin("C4")
        return GrayMapTable.from_mapping(G, {"e": "00", "x": "01", "x^2": "11", "x^3": "10"})
    if name == "K4":
        G = build_builtin("K4")
        return GrayMapTable.from_mapping(G, {"e": "00", "x": "01", "y": "11", "xy": "10"})
    if name == "E8":
        return elementary_gray_map(3)
    if name.startswith("E(") and name.endswith(")") and name[2:-1].isdigit():
        return elementary_gray_map(int(name[2:-1]))
    raise UnknownGroupError(f"no base Gray map named {name!r}")


def transport(phi: GrayMapTable, target: GroupTable,
              images: Mapping[str, str] | Isomorphism | Sequence[int]) -> GrayMapTable:
    """Push ``phi`` forward along an isomorphism ``phi.group -> target``.

    The isomorphism may be given by generator images, e.g. ``{"x": "x^2"}``.
    """
    if isinstance(images, Isomorphism):
        m = images.map
    elif isinstance(images, Mapping):
        m = homomorphism_from_labels(phi.group, target, dict(images))
    else:
        m = tuple(images)
    if m is None or sorted(m) != list(range(target.order)) or len(m) != phi.group.order:
        raise InvalidBaseMap("generator images do not give an isomorphism onto the target")
    arr = np.asarray(m)
    if not (target.table[arr[:, None], arr[None, :]] == arr[phi.group.table]).all():
        raise InvalidBaseMap("the element map is not a homomorphism")
    bits = np.empty((target.order, phi.length), dtype=np.uint8)
    for g, tg in enumerate(m):
        bits[tg] = phi.bits[g]
    return GrayMapTable(target, bits)


def _link(phi: GrayMapTable, G: GroupTable, part: Sequence[int], what: str) -> dict[int, int]:
    """Match ``phi``'s elements to ``part`` of ``G`` by label; returns G-index -> phi-index."""
    link = {}
    for i, label in enumerate(phi.group.labels):
        try:
            g = G.element(label)
        except KeyError:
            raise InvalidBaseMap(f"{what} map has element {label!r} unknown in the group") from None
        link[g] = i
    if set(link) != set(part):
        raise InvalidBaseMap(f"{what} map is not defined on exactly the {what}")
    return link


def _check_structure(phi: GrayMapTable, G: GroupTable, link: dict[int, int], what: str) -> None:
    src = np.fromiter(link, dtype=np.int64)
    dst = np.fromiter(link.values(), dtype=np.int64)
    to_phi = np.full(G.order, -1, dtype=np.int64)
    to_phi[src] = dst
    bad = np.argwhere(to_phi[G.table[np.ix_(src, src)]] != phi.group.table[np.ix_(dst, dst)])
    if bad.size:
        g, h = (int(src[t]) for t in bad[0])
        raise InvalidBaseMap(
            f"{what} map's group does not multiply like the {what} "
            f"({G.labels[g]}*{G.labels[h]})")


def doubling_obstruction(G: GroupTable, H: Iterable[int | str], x: int | str,
                         phi: GrayMapTable) -> dict | None:
    """First ``h`` in ``H`` with ``w(phi(x h x^-1)) != w(phi(h))``, or None.

    Doubling ``phi`` along the left coset ``xH`` gives a Gray map exactly
    when there is none:
    for two elements of the coset ``xH`` the quotient is ``x (h1 h2^-1) x^-1``
    while their images differ in twice ``d(phi(h1), phi(h2))`` positions.
    """
    H = sorted({G.element(h) for h in H})
    x = G.element(x)
    link = _link(phi, G, H, "subgroup")
    w = phi.weights
    for h in H:
        c = G.conjugate(x, h)
        if w[link[h]] != w[link[c]]:
            return {"x": G.labels[x], "h": G.labels[h], "xhx^-1": G.labels[c],
                    "w(h)": int(w[link[h]]), "w(xhx^-1)": int(w[link[c]])}
    return None


def type1_extend(G: GroupTable, H: Iterable[int | str], x: int | str, phi: GrayMapTable,
                 strict: bool = True, side: str = "left") -> GrayMapTable:
    """Double a Gray map on an index-2 subgroup.

    ``h -> (phi(h) | phi(h))`` and ``x h -> (phi(h) | phi(h) + 1)``.  ``phi``
    must live on the induced table of ``H`` (labels shared with ``G``); use
    :func:`transport` to move a base map there.

    Since ``d(a, b) = w(phi(a b^-1))`` the quotient of ``x h1`` and ``x h2``
    is ``x (h1 h2^-1) x^-1``, so the left-coset table is a Gray map iff
    conjugation by ``x`` preserves the weights of ``phi``.  With ``strict`` a
    violation raises :class:`WeightsNotInvariant`, otherwise the (failing)
    table is returned anyway.  ``side="right"`` writes the coset as ``h x``
    instead; there the quotient is ``h1 h2^-1`` and the result is always a
    Gray map.
    """
    if side not in ("left", "right"):
        raise ValueError(f"side must be 'left' or 'right', not {side!r}")
    H = sorted({G.element(h) for h in H})
    x = G.element(x)
    if not is_subgroup(G, H) or 2 * len(H) != G.order:
        raise NotIndexTwo(f"subgroup of order {len(H)} does not have index 2 in a group of order {G.order}")
    if x in H:
        raise ElementInH(f"{G.labels[x]} lies in H")
    link = _link(phi, G, H, "subgroup")
    _check_structure(phi, G, link, "subgroup")
    if not is_gray_map(phi):
        raise InvalidBaseMap("the base map is not a Gray map")
    if strict and side == "left":
        wit = doubling_obstruction(G, H, x, phi)
        if wit is not None:
            raise WeightsNotInvariant(
                f"conjugation by {wit['x']} sends {wit['h']} (weight {wit['w(h)']}) "
                f"to {wit['xhx^-1']} (weight {wit['w(xhx^-1)']})", wit)
    n = phi.length
    bits = np.empty((G.order, 2 * n), dtype=np.uint8)
    src = np.fromiter(link, dtype=np.int64)
    w = phi.bits[np.fromiter(link.values(), dtype=np.int64)]
    bits[src] = np.concatenate([w, w], axis=1)
    coset = G.table[x, src] if side == "left" else G.table[src, x]
    bits[coset] = np.concatenate([w, 1 - w], axis=1)
    return GrayMapTable(G, bits)


@dataclass
class CompatibilityResult:
    compatible: bool
    witness: dict | None = None

    def __bool__(self):
        return self.compatible


def compatible(decomp: SemidirectDecomposition, theta2: GrayMapTable) -> CompatibilityResult:
    """Does conjugation by the complement preserve kernel weights?"""
    if not decomp.split:
        raise NotSplit("compatibility needs a split decomposition")
    G = decomp.whole
    link = _link(theta2, G, decomp.kernel, "kernel")
    w = theta2.weights
    for h in decomp.complement:
        for k in decomp.kernel:
            c = G.conjugate(h, k)
            if w[link[k]] != w[link[c]]:
                return CompatibilityResult(False, {
                    "h": G.labels[h], "k": G.labels[k], "hkh^-1": G.labels[c],
                    "w(k)": int(w[link[k]]), "w(hkh^-1)": int(w[link[c]])})
    return CompatibilityResult(True)


def type2_construct(decomp: SemidirectDecomposition, theta1: GrayMapTable,
                    theta2: GrayMapTable) -> GrayMapTable:
    """Concatenate ``theta(hk) = (theta1(h) | theta2(k))``.

    On a non-split transversal ``theta1`` is matched to the representatives by
    label only, which yields a candidate map for the verifier to judge.
    """
    G = decomp.whole
    l1 = _link(theta1, G, decomp.complement, "complement")
    l2 = _link(theta2, G, decomp.kernel, "kernel")
    if decomp.split:
        _check_structure(theta1, G, l1, "complement")
    _check_structure(theta2, G, l2, "kernel")
    bits = np.empty((G.order, theta1.length + theta2.length), dtype=np.uint8)
    for g in G:
        h, k = decomp.factor(g)
        bits[g] = np.concatenate([theta1.bits[l1[h]], theta2.bits[l2[k]]])
    return GrayMapTable(G, bits)


# ---------------------------------------------------------------------------
# the weight-parity obstruction


@dataclass
class FeasibilityResult:
    feasible: bool
    involutions: int
    odd_classes: tuple[int, ...]
    reason: str

    def __bool__(self):
        return self.feasible


def weight_census(n: int) -> list[int]:
    """Number of words of each weight in ``Z_2^n``."""
    return [comb(n, k) for k in range(n + 1)]


def weight_parity_feasible(G: GroupTable, n: int) -> FeasibilityResult:
    """Can any bijection ``G -> Z_2^n`` satisfy C2?

    Non-involutions pair off with their inverses inside one weight class, so
    each odd-sized class of nonzero weight needs its own involution.  This is a
    necessary condition only.
    """
    if G.order != 2 ** n:
        raise SizeMismatch(f"|G| = {G.order} but 2^{n} = {2 ** n}")
    census = weight_census(n)
    odd = tuple(k for k in range(1, n + 1) if census[k] % 2)
    t = count_involutions(G)
    feasible = t >= len(odd)
    reason = (f"{t} involution(s); weight classes {list(odd)} of Z_2^{n} have odd size "
              f"(census {census}) and need {len(odd)}")
    return FeasibilityResult(feasible, t, odd, reason)


# ---------------------------------------------------------------------------
# file format: "group <name> length <n>", then "label<TAB>word" lines


def dumps_graymap(phi: GrayMapTable, name: str | None = None) -> str:
    name = name or phi.group.name
    if not name:
        raise ValueError("a group name is needed for the map header")
    lines = [f"group {name} length {phi.length}"]
    lines += [f"{phi.group.labels[g]}\t{phi.word(g)}" for g in phi.group]
    return "\n".join(lines) + "\n"


def loads_graymap(text: str, resolve=None) -> tuple[str, GrayMapTable]:
    """Parse a map file; ``resolve`` turns the header's group name into a table."""
    if resolve is None:
        resolve = build_builtin
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty map file")
    head = lines[0]
    if not head.startswith("group ") or " length " not in head:
        raise ValueError(f"bad header {head!r}")
    name, _, length = head[len("group "):].rpartition(" length ")
    length = int(length)
    G = resolve(name.strip())
    mapping = {}
    for ln in lines[1:]:
        label, sep, word = ln.partition("\t")
        if not sep:
            raise ValueError(f"expected 'label<TAB>word', got {ln!r}")
        if len(word.strip()) != length:
            raise LengthMismatch(f"word {word!r} for {label} is not of length {length}")
        mapping[label] = word.strip()
    if len(mapping) != G.order:
        raise ValueError(f"{len(mapping)} words for a group of order {G.order}")
    return name.strip(), GrayMapTable.from_mapping(G, mapping)
