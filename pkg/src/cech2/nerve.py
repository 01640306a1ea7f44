"""Truncated nerves of 2-groups as simplicial groups.

Level p of the nerve is the group of composable p-strings of morphisms.  A
string is determined by its start object together with the kernel parts of
its arrows, so level p is stored as tuples (g, h_1, ..., h_p) encoded as
g * |H|^p + (h_1 ... h_p in base |H|), with the levelwise multiplication

    (g, h_i) (g', h_i') = (g g', h_i * alpha(sigma_i)(h_i'))
    sigma_i = t(h_{i-1} ... h_1) g

Faces drop an end morphism or compose adjacent ones; degeneracies insert
identity morphisms.  The definitional string model is rebuilt independently
by ``check_level_iso`` and compared against this compact representation.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .crossed_modules import (
    CrossedModule,
    TwoGroup,
    segal_bar_two_group,
    semidirect_two_group,
    two_group_from_crossed_module,
)
from .errors import BudgetExceeded
from .groups import FiniteGroup, GroupAction, GroupHom, validate_group, validate_hom

DEFAULT_LEVEL_CAP = 4


@dataclass
class TruncatedSimplicialGroup:
    levels: list[FiniteGroup]
    faces: dict[int, list[GroupHom]]          # level p -> [d_0 .. d_p], p >= 1
    degeneracies: dict[int, list[GroupHom]]   # level p -> [s_0 .. s_p], p < top

    @property
    def depth(self) -> int:
        return len(self.levels) - 1


def _decode(x: int, p: int, nh: int) -> tuple[int, list[int]]:
    hs = []
    for _ in range(p):
        x, r = divmod(x, nh)
        hs.append(r)
    return x, hs[::-1]


def _encode(g: int, hs, nh: int) -> int:
    x = g
    for h in hs:
        x = x * nh + h
    return x


def _level_table(xm: CrossedModule, p: int) -> FiniteGroup:
    G, H, t, alpha = xm.G, xm.H, xm.t, xm.alpha
    nh = H.order
    n = G.order * nh**p
    table = np.empty((n, n), dtype=np.int64)
    for x in range(n):
        g1, hs1 = _decode(x, p, nh)
        # sources sigma_i of the arrows of x
        sigmas = []
        acc = g1
        for h in hs1:
            sigmas.append(acc)
            acc = G.mul(t(h), acc)
        for y in range(n):
            g2, hs2 = _decode(y, p, nh)
            ks = [H.mul(h1, alpha.apply(s, h2)) for h1, s, h2 in zip(hs1, sigmas, hs2)]
            table[x, y] = _encode(G.mul(g1, g2), ks, nh)
    grp = validate_group(table, name=f"N({xm.name})_{p}")
    return grp


def nerve_two_group(xm: CrossedModule, depth: int = DEFAULT_LEVEL_CAP, cap: int = DEFAULT_LEVEL_CAP) -> TruncatedSimplicialGroup:
    """Levels 0..depth with all faces and degeneracies, each a verified hom."""
    if depth > cap:
        raise BudgetExceeded(depth, cap)
    G, H, t = xm.G, xm.H, xm.t
    nh = H.order
    levels = [_level_table(xm, p) for p in range(depth + 1)]
    faces: dict[int, list[GroupHom]] = {}
    degeneracies: dict[int, list[GroupHom]] = {}
    for p in range(1, depth + 1):
        maps = []
        for i in range(p + 1):
            col = []
            for x in range(levels[p].order):
                g, hs = _decode(x, p, nh)
                if i == 0:
                    col.append(_encode(G.mul(t(hs[0]), g), hs[1:], nh))
                elif i == p:
                    col.append(_encode(g, hs[:-1], nh))
                else:
                    merged = hs[:i - 1] + [H.mul(hs[i], hs[i - 1])] + hs[i + 1:]
                    col.append(_encode(g, merged, nh))
            maps.append(validate_hom(levels[p], levels[p - 1], col))
        faces[p] = maps
    for p in range(depth):
        maps = []
        for i in range(p + 1):
            col = []
            for x in range(levels[p].order):
                g, hs = _decode(x, p, nh)
                col.append(_encode(g, hs[:i] + [0] + hs[i:], nh))
            maps.append(validate_hom(levels[p], levels[p + 1], col))
        degeneracies[p] = maps
    return TruncatedSimplicialGroup(levels, faces, degeneracies)


def check_simplicial_identities(nsg: TruncatedSimplicialGroup) -> dict:
    """All identities among faces and degeneracies, wherever both sides exist."""
    failures = []
    N = nsg.depth

    def maps_equal(f, g, label):
        if not np.array_equal(f.map, g.map):
            failures.append(label)

    for p in range(2, N + 1):
        d = nsg.faces[p]
        dlow = nsg.faces[p - 1]
        for j in range(p + 1):
            for i in range(j):
                lhs = dlow[i].map[d[j].map]
                rhs = dlow[j - 1].map[d[i].map]
                if not np.array_equal(lhs, rhs):
                    failures.append(f"d{i} d{j} != d{j-1} d{i} at level {p}")
    for p in range(N - 1):
        s = nsg.degeneracies[p]
        shigh = nsg.degeneracies[p + 1]
        for j in range(p + 1):
            for i in range(j + 1):
                lhs = shigh[j + 1].map[s[i].map]
                rhs = shigh[i].map[s[j].map]
                if not np.array_equal(lhs, rhs):
                    failures.append(f"s{j+1} s{i} != s{i} s{j} at level {p}")
    for p in range(N):
        s = nsg.degeneracies[p]
        d = nsg.faces[p + 1]
        ident = np.arange(nsg.levels[p].order)
        for j in range(p + 1):
            for i in range(p + 2):
                composite = d[i].map[s[j].map]
                if i == j or i == j + 1:
                    if not np.array_equal(composite, ident):
                        failures.append(f"d{i} s{j} != id at level {p}")
                elif i < j:
                    if p >= 1:
                        expect = nsg.degeneracies[p - 1][j - 1].map[nsg.faces[p][i].map]
                        if not np.array_equal(composite, expect):
                            failures.append(f"d{i} s{j} != s{j-1} d{i} at level {p}")
                else:
                    if p >= 1:
                        expect = nsg.degeneracies[p - 1][j].map[nsg.faces[p][i - 1].map]
                        if not np.array_equal(composite, expect):
                            failures.append(f"d{i} s{j} != s{j} d{i-1} at level {p}")
    return {"ok": not failures, "failures": failures, "levels": [g.order for g in nsg.levels]}


def _strings(tg: TwoGroup, p: int) -> list[tuple[int, tuple[int, ...]]]:
    """Composable p-strings (start object, morphisms), the definitional model."""
    if p == 0:
        return [(x, ()) for x in tg.ob.elements()]
    by_src: dict[int, list[int]] = {}
    for m in tg.mor.elements():
        by_src.setdefault(tg.src(m), []).append(m)
    out = [(x, (m,)) for x in tg.ob.elements() for m in by_src.get(x, [])]
    for _ in range(p - 1):
        out = [
            (x, ms + (m,))
            for (x, ms) in out
            for m in by_src.get(tg.tgt(ms[-1]), [])
        ]
    return out


def check_level_iso(nsg: TruncatedSimplicialGroup, xm: CrossedModule) -> dict:
    """Match every level against composable strings of the associated 2-group.

    A string maps to (start object, kernel parts of its arrows); the check
    confirms this is a bijection onto the stored level, turns string
    concatenation products into level products, and that the face maps do
    what faces of a nerve do (drop an end, compose in the middle).
    """
    tg = two_group_from_crossed_module(xm)
    ng, nh = xm.G.order, xm.H.order
    failures = []
    string_elems: list[dict] = []
    for p in range(nsg.depth + 1):
        strings = _strings(tg, p)
        if len(strings) != nsg.levels[p].order:
            failures.append(f"level {p}: {len(strings)} strings vs order {nsg.levels[p].order}")
            continue
        codes = {}
        for (x, ms) in strings:
            code = _encode(x, [m // ng for m in ms], nh)
            codes[(x, ms)] = code
        if len(set(codes.values())) != len(strings):
            failures.append(f"level {p}: string coordinates collide")
            continue
        index = {s: c for s, c in codes.items()}
        # componentwise string product realizes the level multiplication
        for (x1, ms1) in strings:
            for (x2, ms2) in strings:
                prod = (
                    tg.ob.mul(x1, x2),
                    tuple(tg.mor.mul(a, b) for a, b in zip(ms1, ms2)),
                )
                if index[prod] != nsg.levels[p].mul(index[(x1, ms1)], index[(x2, ms2)]):
                    failures.append(f"level {p}: product mismatch")
                    break
            else:
                continue
            break
        # faces against the string model
        if p >= 1:
            for (x, ms) in strings:
                code = index[(x, ms)]
                d0 = (tg.tgt(ms[0]), ms[1:])
                if _encode(d0[0], [m // ng for m in d0[1]], nh) != nsg.faces[p][0](code):
                    failures.append(f"level {p}: d0 disagrees with string model")
                    break
                dp = (x, ms[:-1])
                if _encode(x, [m // ng for m in dp[1]], nh) != nsg.faces[p][p](code):
                    failures.append(f"level {p}: d{p} disagrees with string model")
                    break
                bad = False
                for i in range(1, p):
                    mid = ms[:i - 1] + (tg.compose(ms[i - 1], ms[i]),) + ms[i + 1:]
                    if _encode(x, [m // ng for m in mid], nh) != nsg.faces[p][i](code):
                        failures.append(f"level {p}: d{i} disagrees with string model")
                        bad = True
                        break
                if bad:
                    break
    return {
        "ok": not failures,
        "failures": failures,
        "levels": [g.order for g in nsg.levels],
    }


def check_bar_multiplication(
    G: FiniteGroup, H: FiniteGroup, alpha: GroupAction, p: int, cap: int = DEFAULT_LEVEL_CAP
) -> dict:
    """Nerve levels of G |x bar(H) multiply by the twisted componentwise rule.

    Level q strings decode to (g, (h_0, ..., h_q)); the product of two such
    must be (g g', (h_i alpha(g)(h_i'))).  Checked on every pair of strings
    for every level up to p.
    """
    if p > cap:
        raise BudgetExceeded(p, cap)
    tg = semidirect_two_group(G, segal_bar_two_group(H), alpha)
    ng, nh = G.order, H.order
    failures = []
    pairs_checked = []

    def decode_string(x, ms):
        h0, g = divmod(x, ng)
        chain = [h0]
        for m in ms:
            ab, gm = divmod(m, ng)
            a, b = divmod(ab, nh)
            if gm != g or a != chain[-1]:
                raise AssertionError("string decode out of step")
            chain.append(b)
        return g, chain

    for q in range(p + 1):
        strings = _strings(tg, q)
        count = 0
        for s1 in strings:
            g1, c1 = decode_string(*s1)
            for s2 in strings:
                g2, c2 = decode_string(*s2)
                prod = (
                    tg.ob.mul(s1[0], s2[0]),
                    tuple(tg.mor.mul(a, b) for a, b in zip(s1[1], s2[1])),
                )
                gp, cp = decode_string(*prod)
                want = [H.mul(a, alpha.apply(g1, b)) for a, b in zip(c1, c2)]
                if gp != G.mul(g1, g2) or cp != want:
                    failures.append(f"level {q}: bar multiplication mismatch")
                    break
                count += 1
            else:
                continue
            break
        pairs_checked.append(count)
    return {"ok": not failures, "failures": failures, "pairs": pairs_checked}
