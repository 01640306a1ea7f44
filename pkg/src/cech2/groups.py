"""Finite groups as multiplication tables, with homomorphisms and actions.

Elements are dense integer indices 0..n-1 and index 0 is always the identity.
Every higher structure in the package (crossed modules, cocycles, nerves)
stores these indices only, so exhaustive loops and hashing stay cheap.

Products of groups use a fixed, documented pair encoding:

    semidirect / direct product on pairs (h, g):  (h, g) -> h * |G| + g

so element identities are reproducible across runs and across the JSON
formats.
"""

from __future__ import annotations

import itertools
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    MissingInverse,
    NoIdentityAtZero,
    NotActionHom,
    NotAssociative,
    NotAutomorphism,
    NotHomomorphism,
)


class FiniteGroup:
    """A finite group given by its multiplication table.

    Use :func:`validate_group` (or one of the named builders below) rather
    than the constructor; the constructor trusts its input.
    """

    def __init__(self, table: np.ndarray, name: str = "G"):
        self.name = name
        self.table = np.asarray(table, dtype=np.int64)
        self.order = len(self.table)
        self.inverse = np.empty(self.order, dtype=np.int64)
        for x in range(self.order):
            hits = np.flatnonzero(self.table[x] == 0)
            self.inverse[x] = hits[0] if len(hits) else -1

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverse[a])

    def conj(self, g: int, x: int) -> int:
        """g x g^-1."""
        return int(self.table[self.table[g, x], self.inverse[g]])

    def elements(self) -> range:
        return range(self.order)

    def prod(self, xs: Iterable[int]) -> int:
        out = 0
        for x in xs:
            out = int(self.table[out, x])
        return out

    def power(self, a: int, n: int) -> int:
        out = 0
        for _ in range(n):
            out = int(self.table[out, a])
        return out

    def element_order(self, a: int) -> int:
        x, n = a, 1
        while x != 0:
            x = int(self.table[x, a])
            n += 1
        return n

    def order_census(self) -> dict[int, int]:
        """Map from element order to how many elements have it."""
        census: dict[int, int] = {}
        for a in self.elements():
            o = self.element_order(a)
            census[o] = census.get(o, 0) + 1
        return census

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def same_table(self, other: "FiniteGroup") -> bool:
        return self.order == other.order and bool(np.array_equal(self.table, other.table))

    def __repr__(self):
        return f"FiniteGroup({self.name!r}, order={self.order})"


class GroupHom:
    """Group homomorphism dom -> cod stored as an index map."""

    def __init__(self, dom: FiniteGroup, cod: FiniteGroup, map: Sequence[int]):
        self.dom = dom
        self.cod = cod
        self.map = np.asarray(map, dtype=np.int64)

    def __call__(self, x: int) -> int:
        return int(self.map[x])

    def kernel(self) -> list[int]:
        return [int(x) for x in np.flatnonzero(self.map == 0)]

    def image(self) -> list[int]:
        return sorted(int(x) for x in set(self.map.tolist()))

    def is_injective(self) -> bool:
        return len(set(self.map.tolist())) == self.dom.order

    def is_surjective(self) -> bool:
        return len(set(self.map.tolist())) == self.cod.order

    def preimage(self, y: int) -> list[int]:
        return [int(x) for x in np.flatnonzero(self.map == y)]

    def __repr__(self):
        return f"GroupHom({self.dom.name} -> {self.cod.name})"


class GroupAction:
    """Action of ``actor`` on ``target`` by automorphisms.

    ``perms[g]`` is the permutation of target elements implementing the
    automorphism for g; g -> perms[g] is a homomorphism into Aut(target),
    i.e. perms[g1 g2] = perms[g1] o perms[g2].
    """

    def __init__(self, actor: FiniteGroup, target: FiniteGroup, perms: Sequence[Sequence[int]]):
        self.actor = actor
        self.target = target
        self.perms = np.asarray(perms, dtype=np.int64)

    def apply(self, g: int, h: int) -> int:
        return int(self.perms[g, h])

    def is_trivial(self) -> bool:
        ident = np.arange(self.target.order)
        return all(np.array_equal(self.perms[g], ident) for g in self.actor.elements())

    def __repr__(self):
        return f"GroupAction({self.actor.name} on {self.target.name})"


def validate_group(table: Sequence[Sequence[int]], name: str = "G") -> FiniteGroup:
    """Check the three group axioms exhaustively and wrap the table.

    Raises NoIdentityAtZero, NotAssociative (with a witness triple) or
    MissingInverse (with a witness element).
    """
    t = np.asarray(table, dtype=np.int64)
    if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
        raise NoIdentityAtZero("table must be a nonempty square array")
    n = t.shape[0]
    if t.min() < 0 or t.max() >= n:
        raise NoIdentityAtZero(f"table entries must lie in 0..{n - 1}")
    idx = np.arange(n)
    if not (np.array_equal(t[0], idx) and np.array_equal(t[:, 0], idx)):
        raise NoIdentityAtZero("row/column 0 must act as the identity")
    # (ab)c == a(bc), all triples at once
    left = t[t, :]          # left[a, b, c]  = (ab)c
    right = t[:, t]         # right[a, b, c] = a(bc)
    if not np.array_equal(left, right):
        bad = np.argwhere(left != right)[0]
        raise NotAssociative(tuple(int(x) for x in bad))
    for a in range(n):
        row_hits = np.flatnonzero(t[a] == 0)
        if len(row_hits) == 0 or t[row_hits[0], a] != 0:
            raise MissingInverse(a)
    return FiniteGroup(t, name=name)


def validate_hom(dom: FiniteGroup, cod: FiniteGroup, map: Sequence[int]) -> GroupHom:
    """Check map(xy) = map(x) map(y) for all pairs; raises NotHomomorphism."""
    m = np.asarray(map, dtype=np.int64)
    if len(m) != dom.order:
        raise NotHomomorphism(("length", len(m)))
    if m.min() < 0 or m.max() >= cod.order:
        raise NotHomomorphism(("range", int(m.max())))
    lhs = m[dom.table]                 # map(xy)
    rhs = cod.table[np.ix_(m, m)]      # map(x) map(y)
    if not np.array_equal(lhs, rhs):
        bad = np.argwhere(lhs != rhs)[0]
        raise NotHomomorphism(tuple(int(x) for x in bad))
    return GroupHom(dom, cod, m)


def validate_action(
    actor: FiniteGroup, target: FiniteGroup, perms: Sequence[Sequence[int]]
) -> GroupAction:
    """Check each perms[g] is an automorphism and g -> perms[g] is a hom."""
    p = np.asarray(perms, dtype=np.int64)
    if p.shape != (actor.order, target.order):
        raise NotActionHom(("shape", p.shape))
    for g in actor.elements():
        perm = p[g]
        if len(set(perm.tolist())) != target.order:
            raise NotAutomorphism(g, ("not a permutation",))
        lhs = perm[target.table]
        rhs = target.table[np.ix_(perm, perm)]
        if not np.array_equal(lhs, rhs):
            bad = np.argwhere(lhs != rhs)[0]
            raise NotAutomorphism(g, tuple(int(x) for x in bad))
    if not np.array_equal(p[0], np.arange(target.order)):
        raise NotActionHom((0, 0))
    for g1 in actor.elements():
        for g2 in actor.elements():
            if not np.array_equal(p[actor.mul(g1, g2)], p[g1][p[g2]]):
                raise NotActionHom((g1, g2))
    return GroupAction(actor, target, p)


def trivial_action(actor: FiniteGroup, target: FiniteGroup) -> GroupAction:
    perms = np.tile(np.arange(target.order), (actor.order, 1))
    return GroupAction(actor, target, perms)


def inversion_action(actor: FiniteGroup, target: FiniteGroup) -> GroupAction:
    """Order-2 actor element 1 acts on an abelian target by inversion."""
    perms = [list(range(target.order)), [target.inv(h) for h in target.elements()]]
    return validate_action(actor, target, perms)


def conjugation_action(group: FiniteGroup) -> GroupAction:
    perms = [[group.conj(g, x) for x in group.elements()] for g in group.elements()]
    return GroupAction(group, group, perms)


def semidirect_product(actor: FiniteGroup, target: FiniteGroup, action: GroupAction) -> FiniteGroup:
    """Semidirect product target x| actor on pairs (h, g).

    Multiplication is (h, g) (h', g') = (h * action(g)(h'), g g') and the
    pair encoding is (h, g) -> h * |actor| + g.
    """
    nh, ng = target.order, actor.order
    n = nh * ng
    table = np.empty((n, n), dtype=np.int64)
    for h1 in target.elements():
        for g1 in actor.elements():
            a = h1 * ng + g1
            for h2 in target.elements():
                hpart = target.mul(h1, action.apply(g1, h2))
                row = hpart * ng
                for g2 in actor.elements():
                    table[a, h2 * ng + g2] = row + actor.mul(g1, g2)
    name = f"{target.name}x|{actor.name}"
    return FiniteGroup(table, name=name)


def direct_product(a: FiniteGroup, b: FiniteGroup) -> FiniteGroup:
    """Direct product on pairs (x, y) -> x * |b| + y."""
    prod = semidirect_product(b, a, trivial_action(b, a))
    prod.name = f"{a.name}x{b.name}"
    return prod


def pair_encode(h: int, g: int, actor_order: int) -> int:
    return h * actor_order + g


def pair_decode(x: int, actor_order: int) -> tuple[int, int]:
    return divmod(x, actor_order)


def conjugacy_classes(group: FiniteGroup) -> list[list[int]]:
    """Partition of elements under x ~ g x g^-1, classes sorted by minimum."""
    seen = [False] * group.order
    classes = []
    for x in group.elements():
        if seen[x]:
            continue
        orbit = {group.conj(g, x) for g in group.elements()}
        for y in orbit:
            seen[y] = True
        classes.append(sorted(orbit))
    return sorted(classes, key=lambda c: c[0])


def conjugacy_class_index(group: FiniteGroup, x: int, classes=None) -> int:
    classes = conjugacy_classes(group) if classes is None else classes
    for i, c in enumerate(classes):
        if x in c:
            return i
    raise ValueError(f"element {x} not in any class")


def hom_kernel_image(f: GroupHom) -> tuple[list[int], list[int]]:
    """Kernel and image as sorted element lists, verified closed."""
    ker = f.kernel()
    img = f.image()
    for s, grp in ((ker, f.dom), (img, f.cod)):
        members = set(s)
        for x in s:
            if grp.inv(x) not in members:
                raise MissingInverse(x)
            for y in s:
                if grp.mul(x, y) not in members:
                    raise NotHomomorphism((x, y))
    return ker, img


def identity_hom(group: FiniteGroup) -> GroupHom:
    return GroupHom(group, group, np.arange(group.order))


def compose_homs(second: GroupHom, first: GroupHom) -> GroupHom:
    """second o first."""
    return GroupHom(first.dom, second.cod, second.map[first.map])


def subgroup_as_group(group: FiniteGroup, elements: Sequence[int], name: str = "sub") -> tuple[FiniteGroup, GroupHom]:
    """Reindex a subgroup (identity first, then ascending) as its own group.

    Returns the subgroup and its inclusion homomorphism.
    """
    elems = sorted(set(int(x) for x in elements))
    if 0 not in elems:
        raise NoIdentityAtZero("subgroup must contain the identity")
    pos = {x: i for i, x in enumerate(elems)}
    n = len(elems)
    table = np.empty((n, n), dtype=np.int64)
    for i, x in enumerate(elems):
        for j, y in enumerate(elems):
            z = group.mul(x, y)
            if z not in pos:
                raise NotHomomorphism((x, y))
            table[i, j] = pos[z]
    sub = FiniteGroup(table, name=name)
    incl = GroupHom(sub, group, np.asarray(elems, dtype=np.int64))
    return sub, incl


# named builders used by fixtures and tests

def trivial_group() -> FiniteGroup:
    return FiniteGroup(np.zeros((1, 1), dtype=np.int64), name="Z1")


def cyclic_group(n: int) -> FiniteGroup:
    table = (np.arange(n)[:, None] + np.arange(n)[None, :]) % n
    return FiniteGroup(table, name=f"Z{n}")


def symmetric_group(n: int) -> FiniteGroup:
    """S_n on permutation tuples in lexicographic order; identity is first."""
    perms = sorted(itertools.permutations(range(n)))
    pos = {p: i for i, p in enumerate(perms)}
    size = len(perms)
    table = np.empty((size, size), dtype=np.int64)
    for i, p in enumerate(perms):
        for j, q in enumerate(perms):
            table[i, j] = pos[tuple(p[q[x]] for x in range(n))]
    return FiniteGroup(table, name=f"S{n}")


def klein_four_group() -> FiniteGroup:
    g = direct_product(cyclic_group(2), cyclic_group(2))
    g.name = "K4"
    return g
