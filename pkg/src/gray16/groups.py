"""Finite groups as dense multiplication tables.

Elements are integers ``0..order-1`` with the identity at index 0.  Every
group carries human-readable labels in the normal form ``x^i y^j a^k`` and,
where it makes sense, a dictionary of named generator *symbols* so that
words such as ``"x^3ya"`` or ``"yx^2"`` can be evaluated in the group.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Iterator, Sequence

import numpy as np

from .errors import InvalidGroupTable, UnknownGroupError

MAX_ORDER = 32

_TOKEN = re.compile(r"([A-Za-z])(?:\^\{?(-?\d+)\}?)?")


@dataclass(frozen=True, eq=False)
class GroupTable:
    """A finite group given by its Cayley table.

    ``table[i, j]`` is the index of ``element i * element j``.  Construction
    validates the group axioms, so an existing instance is always a group.
    """

    labels: tuple[str, ...]
    table: np.ndarray
    symbols: dict[str, int] = field(default_factory=dict)
    name: str = ""

    def __post_init__(self):
        table = np.array(self.table, dtype=np.int64)
        table.setflags(write=False)
        object.__setattr__(self, "table", table)
        object.__setattr__(self, "labels", tuple(self.labels))
        object.__setattr__(self, "symbols", dict(self.symbols))
        validate_table(self.labels, table)
        for s, idx in self.symbols.items():
            if not (len(s) == 1 and 0 <= idx < len(self.labels)):
                raise InvalidGroupTable(f"bad generator symbol {s!r} -> {idx}")

    @property
    def order(self) -> int:
        return len(self.labels)

    def __len__(self):
        return self.order

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.order))

    def __repr__(self):
        name = self.name or "group"
        return f"<GroupTable {name} of order {self.order}>"

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def product(self, *elements: int) -> int:
        acc = 0
        for g in elements:
            acc = int(self.table[acc, g])
        return acc

    @cached_property
    def inverses(self) -> np.ndarray:
        inv = np.argmin(self.table, axis=1)  # the unique j with table[i, j] == 0
        inv.setflags(write=False)
        return inv

    def inv(self, a: int) -> int:
        return int(self.inverses[a])

    def power(self, g: int, k: int) -> int:
        if k < 0:
            g, k = self.inv(g), -k
        acc = 0
        for _ in range(k):
            acc = int(self.table[acc, g])
        return acc

    def conjugate(self, a: int, g: int) -> int:
        """Return ``a g a^-1``."""
        return int(self.table[self.table[a, g], self.inverses[a]])

    @cached_property
    def orders(self) -> np.ndarray:
        out = np.zeros(self.order, dtype=np.int64)
        for g in range(self.order):
            k, acc = 1, g
            while acc != 0:
                acc = int(self.table[acc, g])
                k += 1
            out[g] = k
        out.setflags(write=False)
        return out

    @cached_property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    @cached_property
    def _label_index(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels)}

    def label(self, g: int) -> str:
        return self.labels[g]

    def element(self, word: str | int) -> int:
        """Resolve a label or a word in the generator symbols to an index.

        >>> d8 = build_builtin("D8")
        >>> d8.label(d8.element("yx"))
        'x^3y'
        """
        if isinstance(word, (int, np.integer)):
            if not 0 <= word < self.order:
                raise KeyError(f"element index {word} out of range")
            return int(word)
        word = word.strip().replace(" ", "").replace("*", "")
        if word in self._label_index:
            return self._label_index[word]
        if word in ("e", "1", ""):
            return 0
        pos, acc = 0, 0
        while pos < len(word):
            m = _TOKEN.match(word, pos)
            if m is None or m.group(1) not in self.symbols:
                raise KeyError(f"cannot evaluate {word!r} in {self.name or 'group'}")
            exp = int(m.group(2)) if m.group(2) is not None else 1
            acc = self.mul(acc, self.power(self.symbols[m.group(1)], exp))
            pos = m.end()
        return acc


def validate_table(labels: Sequence[str], table: np.ndarray) -> None:
    n = len(labels)
    if n < 1 or n > MAX_ORDER:
        raise InvalidGroupTable(f"order {n} outside 1..{MAX_ORDER}")
    if table.shape != (n, n):
        raise InvalidGroupTable(f"table shape {table.shape} does not match {n} labels")
    if labels[0] != "e":
        raise InvalidGroupTable("the identity must be labelled 'e'")
    if len(set(labels)) != n:
        raise InvalidGroupTable("labels are not unique")
    if table.min() < 0 or table.max() >= n:
        raise InvalidGroupTable("table entries out of range")
    ref = np.arange(n)
    if not (np.array_equal(table[0], ref) and np.array_equal(table[:, 0], ref)):
        raise InvalidGroupTable("index 0 is not a two-sided identity")
    rows = np.sort(table, axis=1)
    cols = np.sort(table, axis=0)
    if not (np.all(rows == ref) and np.all(cols == ref[:, None])):
        raise InvalidGroupTable("table is not a Latin square")
    if not np.array_equal(table[table], table[:, table]):
        bad = np.argwhere(table[table] != table[:, table])[0]
        raise InvalidGroupTable(f"associativity fails at {tuple(int(b) for b in bad)}")
    # Latin square rows give right inverses; check they are two-sided.
    inv = np.argmin(table, axis=1)
    if not np.all(table[inv, ref] == 0):
        raise InvalidGroupTable("some element lacks a two-sided inverse")


# ---------------------------------------------------------------------------
# construction helpers


def monomial(parts: Iterable[tuple[str, int]]) -> str:
    """Render ``[("x", 3), ("y", 1)]`` as ``"x^3y"``; the empty word is ``"e"``."""
    out = []
    for sym, exp in parts:
        if exp == 0:
            continue
        out.append(sym if exp == 1 else f"{sym}^{exp}")
    return "".join(out) or "e"


def from_elements(elements: Sequence, mul: Callable, labels: Sequence[str],
                  symbols: dict[str, int] | None = None, name: str = "") -> GroupTable:
    """Tabulate a group from hashable elements and a product function.

    ``elements[0]`` must be the identity.
    """
    index = {g: i for i, g in enumerate(elements)}
    n = len(elements)
    table = np.empty((n, n), dtype=np.int64)
    for i, a in enumerate(elements):
        for j, b in enumerate(elements):
            table[i, j] = index[mul(a, b)]
    return GroupTable(tuple(labels), table, symbols or {}, name)


def normal_form_group(gens: Sequence[tuple[str, int]], mul: Callable, name: str = "") -> GroupTable:
    """Group on exponent vectors ``(i, j, ...)`` with the first generator varying fastest.

    ``gens`` lists ``(symbol, exponent_bound)``; ``mul`` multiplies exponent tuples.
    """
    bounds = [b for _, b in gens]
    elements = [tuple(reversed(t)) for t in itertools.product(*(range(b) for b in reversed(bounds)))]
    labels = [monomial(zip((s for s, _ in gens), e)) for e in elements]
    symbols = {}
    for pos, (s, b) in enumerate(gens):
        unit = tuple(1 if p == pos else 0 for p in range(len(gens)))
        if b > 1:
            symbols[s] = elements.index(unit)
    return from_elements(elements, mul, labels, symbols, name)


def cyclic(n: int, symbol: str = "x") -> GroupTable:
    return normal_form_group([(symbol, n)], lambda a, b: ((a[0] + b[0]) % n,), name=f"C{n}")


def elementary_abelian(rank: int, symbols: str = "xyzw") -> GroupTable:
    gens = [(s, 2) for s in symbols[:rank]]
    return normal_form_group(gens, lambda a, b: tuple((p + q) % 2 for p, q in zip(a, b)),
                             name=f"E{2 ** rank}")


def _dihedral_like(square_of_y: int, name: str) -> GroupTable:
    # x^4 = e, y x = x^3 y, y^2 = x^square_of_y
    def mul(a, b):
        i, j = a
        k, l = b
        xi = i + (k if j == 0 else -k) + (square_of_y if j and l else 0)
        return (xi % 4, (j + l) % 2)

    return normal_form_group([("x", 4), ("y", 2)], mul, name=name)


def with_symbols(G: GroupTable, mapping: dict[str, str], name: str | None = None) -> GroupTable:
    """Rename generator symbols, e.g. ``{"x": "a"}`` turns ``x^3`` into ``a^3``."""
    trans = str.maketrans(mapping)
    labels = tuple(lab if lab == "e" else lab.translate(trans) for lab in G.labels)
    symbols = {mapping.get(s, s): i for s, i in G.symbols.items()}
    return GroupTable(labels, G.table, symbols, G.name if name is None else name)


def _abelian(gens, name):
    bounds = [b for _, b in gens]
    return normal_form_group(
        gens, lambda a, b: tuple((p + q) % m for p, q, m in zip(a, b, bounds)), name=name)


BUILTIN_NAMES = ("C2", "C4", "K4", "C8", "K8", "D8", "Q8", "C16", "Q16", "E8",
                 "G0", "G1", "G2", "G3", "G4", "G5", "G6", "G7", "G8", "G9", "G10",
                 "G11", "G12", "G13")


def build_builtin(name: str) -> GroupTable:
    """Construct a named group.

    ``K8`` is ``C4 x C2`` written ``x^i y^j``; ``E8`` is ``C2^3`` on ``x, y, z``;
    ``G0``..``G13`` are the fourteen groups of order 16, built as extensions
    of an order-8 group by an element ``a``.
    """
    if name in ("C2", "C4", "C8", "C16"):
        return cyclic(int(name[1:]))
    if name == "K4":
        return _abelian([("x", 2), ("y", 2)], "K4")
    if name == "K8":
        return _abelian([("x", 4), ("y", 2)], "K8")
    if name == "E8":
        return elementary_abelian(3)
    if name == "D8":
        return _dihedral_like(0, "D8")
    if name == "Q8":
        return _dihedral_like(2, "Q8")
    if name == "Q16" or re.fullmatch(r"G(\d|1[0-3])", name):
        from .extensions import order16_group

        if name == "Q16":
            return with_symbols(order16_group("G5"), {}, name="Q16")
        return order16_group(name)
    raise UnknownGroupError(f"unknown group {name!r}; expected one of {', '.join(BUILTIN_NAMES)}")


def direct_product(A: GroupTable, B: GroupTable) -> GroupTable:
    """Componentwise product; the ``A`` coordinate varies fastest.

    Labels concatenate as ``label_A + label_B`` when the factors use disjoint
    generator symbols (so ``K8 x <a>`` gives ``x^3ya``); otherwise pairs are
    written ``(a,b)``.
    """
    nA, nB = A.order, B.order
    disjoint = not (set(A.symbols) & set(B.symbols)) and _name_safe(A, B)
    labels = []
    for ib in range(nB):
        for ia in range(nA):
            if disjoint:
                parts = [lab for lab in (A.labels[ia], B.labels[ib]) if lab != "e"]
                labels.append("".join(parts) or "e")
            else:
                labels.append("e" if ia == 0 and ib == 0 else f"({A.labels[ia]},{B.labels[ib]})")
    ta = A.table
    tb = B.table
    ia = np.arange(nA * nB) % nA
    ib = np.arange(nA * nB) // nA
    table = ta[ia[:, None], ia[None, :]] + nA * tb[ib[:, None], ib[None, :]]
    symbols = {}
    if disjoint:
        symbols = dict(A.symbols)
        symbols.update({s: nA * i for s, i in B.symbols.items()})
    name = f"{A.name}x{B.name}" if A.name and B.name else ""
    return GroupTable(tuple(labels), table, symbols, name)


def _name_safe(A: GroupTable, B: GroupTable) -> bool:
    # Concatenated labels are only readable if both factors use symbol words.
    return all(lab == "e" or lab[0].isalpha() for lab in A.labels + B.labels)


def element_order(G: GroupTable, g: int | str) -> int:
    return int(G.orders[G.element(g)])


def inverse(G: GroupTable, g: int | str) -> int:
    return G.inv(G.element(g))


def count_involutions(G: GroupTable) -> int:
    return int(np.count_nonzero(G.orders == 2))


def order_profile(G: GroupTable) -> tuple[int, ...]:
    return tuple(sorted(int(k) for k in G.orders))


# ---------------------------------------------------------------------------
# subgroups


def generated(G: GroupTable, elements: Iterable[int]) -> frozenset[int]:
    """The subgroup generated by ``elements``."""
    gens = [int(g) for g in elements]
    seen = {0}
    frontier = [0]
    while frontier:
        nxt = []
        for u in frontier:
            for s in gens:
                w = int(G.table[u, s])
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return frozenset(seen)


def generating_set(G: GroupTable) -> list[int]:
    """A small generating set.

    The named symbols are used when they generate ``G``; otherwise elements are
    scanned by decreasing order and kept when they enlarge the span.
    """
    named = sorted(G.symbols.values())
    if named and len(generated(G, named)) == G.order:
        span, keep = {0}, []
        for g in named:
            if g not in span:
                keep.append(g)
                span = generated(G, keep)
        return keep
    ranked = sorted(range(1, G.order), key=lambda g: (-int(G.orders[g]), g))
    keep: list[int] = []
    span = frozenset({0})
    for g in ranked:
        if len(span) == G.order:
            break
        if g not in span:
            keep.append(g)
            span = generated(G, keep)
    return keep


def is_subgroup(G: GroupTable, H: Iterable[int]) -> bool:
    H = np.unique(np.fromiter((int(h) for h in H), dtype=np.int64))
    if H.size == 0 or H[0] != 0:
        return False
    mask = np.zeros(G.order, dtype=bool)
    mask[H] = True
    return bool(mask[G.table[np.ix_(H, G.inverses[H])]].all())


def is_normal(G: GroupTable, H: Iterable[int]) -> bool:
    H = set(int(h) for h in H)
    return is_subgroup(G, H) and all(G.conjugate(g, h) in H for g in range(G.order) for h in H)


def subgroups(G: GroupTable) -> list[tuple[int, ...]]:
    """Every subgroup of ``G`` as a sorted tuple of indices.

    Breadth-first search from the trivial subgroup, adjoining one element at a
    time; every subgroup is reachable this way.
    """
    found = {frozenset({0})}
    frontier = [frozenset({0})]
    while frontier:
        nxt = []
        for H in frontier:
            for g in range(G.order):
                if g in H:
                    continue
                K = generated(G, list(H) + [g])
                if K not in found:
                    found.add(K)
                    nxt.append(K)
        frontier = nxt
    return sorted((tuple(sorted(H)) for H in found), key=lambda t: (len(t), t))


def subgroup_table(G: GroupTable, H: Iterable[int], name: str = "") -> GroupTable:
    """The induced table on a subgroup, keeping the parent's labels.

    Local index ``i`` corresponds to ``sorted(H)[i]`` in ``G``; parent symbols
    whose element lies in ``H`` remain usable for word evaluation.
    """
    elems = sorted(int(h) for h in H)
    if not is_subgroup(G, elems):
        raise InvalidGroupTable("element set is not a subgroup")
    local = {g: i for i, g in enumerate(elems)}
    idx = np.array(elems)
    table = np.vectorize(local.__getitem__)(G.table[np.ix_(idx, idx)])
    symbols = {s: local[i] for s, i in G.symbols.items() if i in local}
    return GroupTable(tuple(G.labels[g] for g in elems), table, symbols, name)


def contains_subgroup_isomorphic_to(G: GroupTable, H: GroupTable) -> bool:
    return any(
        is_isomorphic(subgroup_table(G, S), H) is not None
        for S in subgroups(G) if len(S) == H.order
    )


# ---------------------------------------------------------------------------
# homomorphisms and isomorphisms


def extend_homomorphism(A: GroupTable, B: GroupTable, gens: Sequence[int],
                        images: Sequence[int]) -> tuple[int, ...] | None:
    """Extend ``gens[i] -> images[i]`` to a homomorphism ``A -> B``.

    Returns the full map as a tuple, or ``None`` when the assignment is not
    consistent or ``gens`` does not generate ``A``.
    """
    f = {0: 0}
    frontier = [0]
    while frontier:
        nxt = []
        for u in frontier:
            fu = f[u]
            for s, t in zip(gens, images):
                w = int(A.table[u, s])
                fw = int(B.table[fu, t])
                got = f.get(w)
                if got is None:
                    f[w] = fw
                    nxt.append(w)
                elif got != fw:
                    return None
        frontier = nxt
    if len(f) != A.order:
        return None
    return tuple(f[g] for g in range(A.order))


def homomorphism_from_labels(A: GroupTable, B: GroupTable, images: dict[str, str]) -> tuple[int, ...] | None:
    gens = [A.element(g) for g in images]
    imgs = [B.element(w) for w in images.values()]
    return extend_homomorphism(A, B, gens, imgs)


@dataclass(frozen=True, eq=False)
class Isomorphism:
    source: GroupTable
    target: GroupTable
    map: tuple[int, ...]

    def __call__(self, g: int) -> int:
        return self.map[g]

    def inverse(self) -> "Isomorphism":
        inv = [0] * len(self.map)
        for a, b in enumerate(self.map):
            inv[b] = a
        return Isomorphism(self.target, self.source, tuple(inv))

    def then(self, other: "Isomorphism") -> "Isomorphism":
        """``other`` applied after ``self``."""
        return Isomorphism(self.source, other.target, tuple(other.map[b] for b in self.map))

    def is_valid(self) -> bool:
        m = np.array(self.map)
        n = self.source.order
        if self.target.order != n or sorted(self.map) != list(range(n)) or m[0] != 0:
            return False
        return bool(np.array_equal(m[self.source.table], self.target.table[m[:, None], m[None, :]]))


def isomorphisms(A: GroupTable, B: GroupTable) -> Iterator[Isomorphism]:
    """Enumerate every isomorphism ``A -> B``."""
    if A.order != B.order or order_profile(A) != order_profile(B):
        return
    gens = generating_set(A)
    candidates = [[b for b in range(B.order) if B.orders[b] == A.orders[g]] for g in gens]
    for imgs in itertools.product(*candidates):
        m = extend_homomorphism(A, B, gens, imgs)
        if m is not None and len(set(m)) == B.order:
            yield Isomorphism(A, B, m)


def is_isomorphic(A: GroupTable, B: GroupTable) -> Isomorphism | None:
    """A witness isomorphism ``A -> B``, or ``None`` when the groups differ."""
    return next(isomorphisms(A, B), None)
