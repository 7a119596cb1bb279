"""Automorphism groups by exhaustive search over generator images."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import NotHomomorphism
from .groups import GroupTable, extend_homomorphism, generated, generating_set


@dataclass(frozen=True, eq=False)
class Automorphism:
    group: GroupTable
    map: tuple[int, ...]

    def __call__(self, g: int) -> int:
        return self.map[g]

    def __eq__(self, other):
        return isinstance(other, Automorphism) and other.group is self.group and other.map == self.map

    def __hash__(self):
        return hash(self.map)

    def compose(self, other: "Automorphism") -> "Automorphism":
        """``self o other``: apply ``other`` first."""
        return Automorphism(self.group, tuple(self.map[b] for b in other.map))

    def inverse(self) -> "Automorphism":
        inv = [0] * len(self.map)
        for a, b in enumerate(self.map):
            inv[b] = a
        return Automorphism(self.group, tuple(inv))

    def power(self, k: int) -> "Automorphism":
        f = identity_automorphism(self.group)
        base = self if k >= 0 else self.inverse()
        for _ in range(abs(k)):
            f = base.compose(f)
        return f

    @property
    def is_identity(self) -> bool:
        return self.map == tuple(range(len(self.map)))

    def images(self) -> dict[str, str]:
        """Generator images keyed by generator label."""
        G = self.group
        return {G.labels[g]: G.labels[self.map[g]] for g in generating_set(G)}

    def describe(self, sep: str = ", ") -> str:
        return sep.join(f"{g}->{w}" for g, w in self.images().items())

    def is_valid(self) -> bool:
        G = self.group
        m = np.array(self.map)
        if sorted(self.map) != list(range(G.order)) or m[0] != 0:
            return False
        return bool(np.array_equal(m[G.table], G.table[m[:, None], m[None, :]]))


def identity_automorphism(G: GroupTable) -> Automorphism:
    return Automorphism(G, tuple(range(G.order)))


def automorphism_from_images(G: GroupTable, images: dict[str, str]) -> Automorphism:
    """Build the automorphism with the given generator images.

    ``images`` maps generators to words, e.g. ``{"x": "x^3y", "y": "x^2y"}``.
    """
    gens = [G.element(g) for g in images]
    imgs = [G.element(w) for w in images.values()]
    m = extend_homomorphism(G, G, gens, imgs)
    if m is None or len(set(m)) != G.order:
        raise NotHomomorphism(f"generator images {images} do not define an automorphism")
    return Automorphism(G, m)


def automorphism_order(f: Automorphism) -> int:
    k, g = 1, f
    while not g.is_identity:
        g = f.compose(g)
        k += 1
    return k


def inner_automorphism(G: GroupTable, a: int | str) -> Automorphism:
    """Conjugation ``g -> a g a^-1``."""
    a = G.element(a)
    return Automorphism(G, tuple(G.conjugate(a, g) for g in range(G.order)))


@lru_cache(maxsize=64)
def _automorphism_maps(G: GroupTable) -> tuple[tuple[int, ...], ...]:
    gens = generating_set(G)
    orders = G.orders
    found = []

    def search(pos, imgs, span):
        if pos == len(gens):
            m = extend_homomorphism(G, G, gens, imgs)
            if m is not None and len(set(m)) == G.order:
                found.append(m)
            return
        want = orders[gens[pos]]
        for t in range(1, G.order):
            # images of an automorphism's generators are independent
            if orders[t] != want or t in span:
                continue
            search(pos + 1, imgs + [t], generated(G, imgs + [t]))

    search(0, [], frozenset({0}))
    ident = tuple(range(G.order))
    found.sort(key=lambda m: (m != ident, m))
    return tuple(found)


def automorphism_group(G: GroupTable) -> list[Automorphism]:
    """All automorphisms of ``G``, identity first."""
    return [Automorphism(G, m) for m in _automorphism_maps(G)]


def aut_as_group(G: GroupTable) -> GroupTable:
    """Multiplication table of Aut(G) under composition.

    Entry ``[i, j]`` is ``auts[i] o auts[j]``.  Labels list generator images.
    """
    auts = automorphism_group(G)
    index = {f.map: i for i, f in enumerate(auts)}
    n = len(auts)
    table = np.empty((n, n), dtype=np.int64)
    for i, f in enumerate(auts):
        for j, g in enumerate(auts):
            table[i, j] = index[f.compose(g).map]
    labels = ["e"] + [f.describe() for f in auts[1:]]
    return GroupTable(tuple(labels), table, {}, f"Aut({G.name})" if G.name else "")


def inner_automorphism_group(G: GroupTable) -> list[Automorphism]:
    seen = {}
    for a in range(G.order):
        f = inner_automorphism(G, a)
        seen.setdefault(f.map, f)
    return sorted(seen.values(), key=lambda f: (not f.is_identity, f.map))


def automorphisms_of_order(G: GroupTable, k: int) -> list[Automorphism]:
    return [f for f in automorphism_group(G) if automorphism_order(f) == k]


def dumps_automorphism(f: Automorphism) -> str:
    """One ``gen -> image`` line per generator."""
    return "".join(f"{g} -> {w}\n" for g, w in f.images().items())


def loads_automorphism(G: GroupTable, text: str) -> Automorphism:
    images = {}
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        src, _, dst = line.partition("->")
        images[src.strip()] = dst.strip()
    return automorphism_from_images(G, images)


def parse_images(text: str) -> dict[str, str]:
    """Parse ``"x->x^3;y->y"`` into ``{"x": "x^3", "y": "y"}``."""
    images = {}
    for part in text.replace(",", ";").split(";"):
        part = part.strip()
        if not part:
            continue
        src, sep, dst = part.partition("->")
        if not sep:
            raise ValueError(f"expected 'gen->image' in {part!r}")
        images[src.strip()] = dst.strip()
    return images


__all__ = [
    "Automorphism", "automorphism_group", "aut_as_group", "automorphism_order",
    "automorphism_from_images", "identity_automorphism", "inner_automorphism",
    "inner_automorphism_group", "automorphisms_of_order", "dumps_automorphism",
    "loads_automorphism", "parse_images",
]
