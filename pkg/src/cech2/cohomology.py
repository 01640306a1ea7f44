"""Cech 1-cocycles valued in a 2-group, coboundaries, and H^1 by brute force.

A cocycle assigns a G element g_ij to every increasing edge and an H element
h_ijk to every increasing triangle, subject to

    triangle law:     t(h_ijk) g_ij g_jk = g_ik
    tetrahedron law:  alpha(g_ij)(h_jkl) h_ijl = h_ijk h_ikl

Values on repeated or descending index tuples are never stored; the usual
normalization (g_ii = 1, g_ji = g_ij^-1, h trivial on degenerate triples)
defines the rest of the Cech datum.

Two cocycles are cohomologous when vertex data f_i and edge data k_ij satisfy
the square law t(k_ij) g_ij f_j = f_i g'_ij together with a coherence
condition on triangles; solving that condition for h' gives the closed form
used by ``apply_coboundary``:

    g'_ij  = f_i^-1 t(k_ij) g_ij f_j
    h'_ijk = alpha(f_i^-1)( k_ik h_ijk alpha(g_ij)(k_jk)^-1 k_ij^-1 )

Witnesses form a group under composition and are generated by the elementary
ones supported on a single vertex or a single edge, so orbits (= cohomology
classes) are computed by closing each representative under elementary moves.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .complexes import SimplicialComplex, barycentric_subdivide
from .crossed_modules import CrossedModule, _generating_set
from .errors import (
    BudgetExceeded,
    NotAbelian,
    NotACycle,
    TetrahedronViolation,
    TriangleViolation,
)

DEFAULT_BUDGET = 10**6
DEFAULT_WITNESS_BUDGET = 10**6

# instances at or below this many enumerated cocycles are classified by the
# plain dictionary walker; larger ones go through the vectorized paths
_PYTHON_STATE_LIMIT = 3000


@dataclass
class Cocycle:
    """Edge data g and triangle data h, on increasing tuples only."""

    g: dict[tuple[int, int], int]
    h: dict[tuple[int, int, int], int]

    def is_trivial(self) -> bool:
        return all(v == 0 for v in self.g.values()) and all(v == 0 for v in self.h.values())


@dataclass
class CoboundaryWitness:
    """Vertex data f and edge data k relating two cocycles."""

    f: dict[int, int]
    k: dict[tuple[int, int], int]

    def is_identity(self) -> bool:
        return all(v == 0 for v in self.f.values()) and all(v == 0 for v in self.k.values())


@dataclass
class Classification:
    """H^1 as a pointed set: orbits of valid cocycles under all witnesses."""

    classes: list
    representatives: list[Cocycle]
    base_class: int
    num_cocycles: int
    witness_log: Optional[dict] = None
    _system: object = field(default=None, repr=False)
    _labels: object = field(default=None, repr=False)
    _id_lookup: object = field(default=None, repr=False)

    @property
    def class_count(self) -> int:
        return len(self.classes)

    def sizes(self) -> list[int]:
        return [len(c) for c in self.classes]

    def class_of(self, c: Cocycle) -> int:
        sys = self._system
        cid = sys.id_of_digits(*sys.cocycle_to_digits(c)) if self._id_lookup is None else self._id_lookup(c)
        return int(self._labels[cid])

    def to_report(self) -> dict:
        sys = self._system
        return {
            "classes": self.class_count,
            "sizes": self.sizes(),
            "base_class": self.base_class,
            "representatives": [sys.cocycle_json(r) for r in self.representatives],
        }


class _System:
    """Index bookkeeping for one (complex, coefficients) pair."""

    def __init__(self, cx: SimplicialComplex, xm: CrossedModule):
        self.cx = cx
        self.xm = xm
        self.G, self.H = xm.G, xm.H
        self.edges = cx.simplices_of_dim(1)
        self.tris = cx.simplices_of_dim(2)
        self.tets = cx.simplices_of_dim(3)
        self.eidx = {e: i for i, e in enumerate(self.edges)}
        self.tidx = {t: i for i, t in enumerate(self.tris)}
        self.tri_edges = [
            (self.eidx[(i, j)], self.eidx[(j, k)], self.eidx[(i, k)]) for (i, j, k) in self.tris
        ]
        # per tetrahedron: triangle slots (jkl, ikl, ijl, ijk) and the ij edge
        self.tet_parts = [
            (
                self.tidx[(j, k, l)],
                self.tidx[(i, k, l)],
                self.tidx[(i, j, l)],
                self.tidx[(i, j, k)],
                self.eidx[(i, j)],
            )
            for (i, j, k, l) in self.tets
        ]
        self.kernel_t = xm.t.kernel()
        im = xm.t.image()
        self.in_image_t = np.zeros(self.G.order, dtype=bool)
        self.in_image_t[im] = True
        # minimal t-preimage per image element, -1 off the image
        self.t_section = np.full(self.G.order, -1, dtype=np.int64)
        for h in range(self.H.order - 1, -1, -1):
            self.t_section[xm.t(h)] = h

    # conversions

    def cocycle_to_digits(self, c: Cocycle) -> tuple[tuple[int, ...], tuple[int, ...]]:
        if set(c.g) != set(self.edges) or set(c.h) != set(self.tris):
            raise ValueError("cocycle maps must be total on edges and triangles")
        return tuple(c.g[e] for e in self.edges), tuple(c.h[t] for t in self.tris)

    def digits_to_cocycle(self, gds, hds) -> Cocycle:
        return Cocycle(
            g={e: int(v) for e, v in zip(self.edges, gds)},
            h={t: int(v) for t, v in zip(self.tris, hds)},
        )

    def witness_to_digits(self, w: CoboundaryWitness):
        if set(w.f) != set(range(self.cx.vertex_count)) or set(w.k) != set(self.edges):
            raise ValueError("witness maps must be total on vertices and edges")
        return (
            tuple(w.f[v] for v in range(self.cx.vertex_count)),
            tuple(w.k[e] for e in self.edges),
        )

    def digits_to_witness(self, fds, kds) -> CoboundaryWitness:
        return CoboundaryWitness(
            f={v: int(x) for v, x in enumerate(fds)},
            k={e: int(x) for e, x in zip(self.edges, kds)},
        )

    def cocycle_json(self, c: Cocycle) -> dict:
        return {
            "g": {",".join(map(str, e)): v for e, v in sorted(c.g.items())},
            "h": {",".join(map(str, t)): v for t, v in sorted(c.h.items())},
        }

    # laws

    def check_digits(self, gds, hds) -> None:
        G, H, t, alpha = self.G, self.H, self.xm.t, self.xm.alpha
        for tri, (e_ij, e_jk, e_ik) in zip(self.tris, self.tri_edges):
            if G.mul(t(hds[self.tidx[tri]]), G.mul(gds[e_ij], gds[e_jk])) != gds[e_ik]:
                raise TriangleViolation(tri)
        for tet, (t_jkl, t_ikl, t_ijl, t_ijk, e_ij) in zip(self.tets, self.tet_parts):
            lhs = H.mul(alpha.apply(gds[e_ij], hds[t_jkl]), hds[t_ijl])
            rhs = H.mul(hds[t_ijk], hds[t_ikl])
            if lhs != rhs:
                raise TetrahedronViolation(tet)

    # coboundary action on digit tuples

    def apply_digits(self, gds, hds, fds, kds):
        G, H, t, alpha = self.G, self.H, self.xm.t, self.xm.alpha
        g2 = tuple(
            G.prod([G.inv(fds[i]), t(kds[e]), gds[e], fds[j]])
            for e, (i, j) in enumerate(self.edges)
        )
        h2 = []
        for (i, j, k), (e_ij, e_jk, e_ik) in zip(self.tris, self.tri_edges):
            inner = H.prod(
                [
                    kds[e_ik],
                    hds[self.tidx[(i, j, k)]],
                    H.inv(alpha.apply(gds[e_ij], kds[e_jk])),
                    H.inv(kds[e_ij]),
                ]
            )
            h2.append(alpha.apply(G.inv(fds[i]), inner))
        return g2, tuple(h2)

    # elementary witness moves: values drawn from generating sets suffice
    # because witnesses compose

    def moves(self):
        out = []
        for v in range(self.cx.vertex_count):
            for a in _generating_set(self.G):
                out.append(("v", v, a))
        for e in range(len(self.edges)):
            for kv in _generating_set(self.H):
                out.append(("e", e, kv))
        return out

    def move_witness_digits(self, move):
        fds = [0] * self.cx.vertex_count
        kds = [0] * len(self.edges)
        kind, pos, val = move
        if kind == "v":
            fds[pos] = val
        else:
            kds[pos] = val
        return tuple(fds), tuple(kds)

    def compile_move(self, move):
        """Closure applying one elementary move to (g digits, h digits)."""
        G, H, alpha, t = self.G, self.H, self.xm.alpha, self.xm.t
        kind, pos, val = move
        if kind == "v":
            ainv = G.inv(val)
            left = [e for e, (i, j) in enumerate(self.edges) if i == pos]
            right = [e for e, (i, j) in enumerate(self.edges) if j == pos]
            tris_at = [ti for ti, (i, j, k) in enumerate(self.tris) if i == pos]

            def act(gds, hds):
                g2 = list(gds)
                for e in left:
                    g2[e] = G.mul(ainv, g2[e])
                for e in right:
                    g2[e] = G.mul(g2[e], val)
                if tris_at:
                    h2 = list(hds)
                    for ti in tris_at:
                        h2[ti] = alpha.apply(ainv, h2[ti])
                    return tuple(g2), tuple(h2)
                return tuple(g2), hds

        else:
            tk = t(val)
            kinv = H.inv(val)
            roles = []  # (triangle, which slot carries this edge, ij-edge index)
            for ti, (e_ij, e_jk, e_ik) in enumerate(self.tri_edges):
                if e_ik == pos:
                    roles.append((ti, "ik", e_ij))
                elif e_jk == pos:
                    roles.append((ti, "jk", e_ij))
                elif e_ij == pos:
                    roles.append((ti, "ij", e_ij))

            def act(gds, hds):
                g2 = list(gds)
                h2 = list(hds)
                for ti, role, e_ij in roles:
                    if role == "ik":
                        h2[ti] = H.mul(val, h2[ti])
                    elif role == "jk":
                        h2[ti] = H.mul(h2[ti], H.inv(alpha.apply(gds[e_ij], val)))
                    else:
                        h2[ti] = H.mul(h2[ti], kinv)
                g2[pos] = G.mul(tk, g2[pos])
                return tuple(g2), tuple(h2)

        return act

    # enumeration

    def candidate_count(self) -> int:
        return self.G.order ** len(self.edges) * max(1, len(self.kernel_t)) ** len(self.tris)

    def id_weights(self):
        E, T = len(self.edges), len(self.tris)
        gw = self.G.order ** np.arange(E - 1, -1, -1, dtype=np.int64) if E else np.zeros(0, np.int64)
        hw = self.H.order ** np.arange(T - 1, -1, -1, dtype=np.int64) if T else np.zeros(0, np.int64)
        return gw, hw

    def id_of_digits(self, gds, hds) -> int:
        """Rank in lexicographic candidate order; a valid cocycle id whenever
        the whole candidate space is valid (the vectorized classify paths)."""
        gw, hw = self.id_weights()
        g_rank = int(np.dot(np.asarray(gds, dtype=np.int64), gw)) if len(gw) else 0
        h_rank = int(np.dot(np.asarray(hds, dtype=np.int64), hw)) if len(hw) else 0
        return g_rank * self.H.order ** len(self.tris) + h_rank


def _mixed_radix(count: int, width: int, base: int) -> np.ndarray:
    """count x width matrix of base-`base` digits of 0..count-1, lex order."""
    if width == 0:
        return np.zeros((count, 1), dtype=np.int64)[:, :0]
    weights = base ** np.arange(width - 1, -1, -1, dtype=np.int64)
    return (np.arange(count, dtype=np.int64)[:, None] // weights) % base


def _enumerate_digit_arrays(sys: _System, budget: int) -> tuple[np.ndarray, np.ndarray]:
    """All valid cocycles as (g digits, h digits) arrays in lexicographic order."""
    G, H = sys.G, sys.H
    E, T = len(sys.edges), len(sys.tris)
    if sys.candidate_count() > budget:
        raise BudgetExceeded(sys.candidate_count(), budget)

    g_all = _mixed_radix(G.order**E, E, G.order)
    if T == 0:
        return g_all, np.zeros((len(g_all), 0), dtype=np.int64)

    defects = np.empty((len(g_all), T), dtype=np.int64)
    for ti, (e_ij, e_jk, e_ik) in enumerate(sys.tri_edges):
        prod = G.table[g_all[:, e_ij], g_all[:, e_jk]]
        defects[:, ti] = G.table[g_all[:, e_ik], G.inverse[prod]]
    mask = sys.in_image_t[defects].all(axis=1)
    g_valid = g_all[mask]
    defects = defects[mask]

    nker = len(sys.kernel_t)
    if nker == 1:
        h_valid = sys.t_section[defects]
        g_valid, h_valid = _filter_tets(sys, g_valid, h_valid)
        return g_valid, h_valid

    if G.order == 1:
        # single trivial g row; h ranges over all of H on each triangle
        h_all = _mixed_radix(H.order**T, T, H.order)
        _, h_all = _filter_tets(
            sys, np.zeros((len(h_all), 0), dtype=np.int64), h_all, g_row=np.zeros(E, dtype=np.int64)
        )
        return np.zeros((len(h_all), E), dtype=np.int64), h_all

    # general case: per valid g row, walk the t-preimage cosets triangle by
    # triangle and keep rows passing the tetrahedron law
    kernel = sorted(sys.kernel_t)
    rows_g, rows_h = [], []
    for row, drow in zip(g_valid, defects):
        choices = [sorted(H.mul(k, int(sys.t_section[d])) for k in kernel) for d in drow]
        for combo in itertools.product(*choices):
            if _tets_ok(sys, row, combo):
                rows_g.append(row)
                rows_h.append(combo)
    g_out = np.asarray(rows_g, dtype=np.int64).reshape(len(rows_h), E)
    h_out = np.asarray(rows_h, dtype=np.int64).reshape(len(rows_h), T)
    return g_out, h_out


def _tets_ok(sys: _System, gds, hds) -> bool:
    H, alpha = sys.H, sys.xm.alpha
    for (t_jkl, t_ikl, t_ijl, t_ijk, e_ij) in sys.tet_parts:
        lhs = H.mul(alpha.apply(gds[e_ij], hds[t_jkl]), hds[t_ijl])
        if lhs != H.mul(hds[t_ijk], hds[t_ikl]):
            return False
    return True


def _filter_tets(sys: _System, g_mat, h_mat, g_row=None):
    if not sys.tet_parts:
        return g_mat, h_mat
    H, alpha = sys.H, sys.xm.alpha
    mask = np.ones(len(h_mat), dtype=bool)
    for (t_jkl, t_ikl, t_ijl, t_ijk, e_ij) in sys.tet_parts:
        gcol = np.full(len(h_mat), g_row[e_ij]) if g_row is not None else g_mat[:, e_ij]
        lhs = H.table[alpha.perms[gcol, h_mat[:, t_jkl]], h_mat[:, t_ijl]]
        rhs = H.table[h_mat[:, t_ijk], h_mat[:, t_ikl]]
        mask &= lhs == rhs
    return g_mat[mask], h_mat[mask]


# public operations


def trivial_cocycle(cx: SimplicialComplex, xm: CrossedModule) -> Cocycle:
    """All-identity edge and triangle data; the basepoint of H^1."""
    return Cocycle(
        g={e: 0 for e in cx.simplices_of_dim(1)},
        h={t: 0 for t in cx.simplices_of_dim(2)},
    )


def identity_witness(cx: SimplicialComplex) -> CoboundaryWitness:
    return CoboundaryWitness(
        f={v: 0 for v in range(cx.vertex_count)},
        k={e: 0 for e in cx.simplices_of_dim(1)},
    )


def validate_cocycle(c: Cocycle, cx: SimplicialComplex, xm: CrossedModule) -> dict:
    """Check both laws on every increasing triangle and tetrahedron.

    Raises TriangleViolation or TetrahedronViolation with the offending
    simplex; returns a small summary when the cocycle is valid.
    """
    sys = _System(cx, xm)
    gds, hds = sys.cocycle_to_digits(c)
    sys.check_digits(gds, hds)
    return {"ok": True, "triangles": len(sys.tris), "tetrahedra": len(sys.tets)}


def apply_coboundary(
    c: Cocycle, w: CoboundaryWitness, cx: SimplicialComplex, xm: CrossedModule
) -> Cocycle:
    """The cocycle on the far side of the witness; output is again valid."""
    sys = _System(cx, xm)
    gds, hds = sys.cocycle_to_digits(c)
    fds, kds = sys.witness_to_digits(w)
    g2, h2 = sys.apply_digits(gds, hds, fds, kds)
    sys.check_digits(g2, h2)  # closure is an invariant, not a branch
    return sys.digits_to_cocycle(g2, h2)


def compose_witnesses(
    first: CoboundaryWitness, then: CoboundaryWitness, cx: SimplicialComplex, xm: CrossedModule
) -> CoboundaryWitness:
    """Witness equal to applying ``first`` and then ``then``.

    f_i = first.f_i * then.f_i and k_ij = alpha(first.f_i)(then.k_ij) * first.k_ij.
    """
    G, H, alpha = xm.G, xm.H, xm.alpha
    f = {v: G.mul(first.f[v], then.f[v]) for v in first.f}
    k = {
        e: H.mul(alpha.apply(first.f[e[0]], then.k[e]), first.k[e])
        for e in first.k
    }
    return CoboundaryWitness(f=f, k=k)


def invert_witness(w: CoboundaryWitness, cx: SimplicialComplex, xm: CrossedModule) -> CoboundaryWitness:
    G, H, alpha = xm.G, xm.H, xm.alpha
    f = {v: G.inv(a) for v, a in w.f.items()}
    k = {e: alpha.apply(f[e[0]], H.inv(kv)) for e, kv in w.k.items()}
    return CoboundaryWitness(f=f, k=k)


def cohomologous_check(
    c: Cocycle,
    c2: Cocycle,
    cx: SimplicialComplex,
    xm: CrossedModule,
    witness_budget: int = DEFAULT_WITNESS_BUDGET,
) -> Optional[CoboundaryWitness]:
    """First witness (f lexicographically major, then k) carrying c to c2.

    Exhaustive over G^V x H^E; returns None when the cocycles are not
    cohomologous.
    """
    sys = _System(cx, xm)
    V, E = cx.vertex_count, len(sys.edges)
    total = xm.G.order**V * xm.H.order**E
    if total > witness_budget:
        raise BudgetExceeded(total, witness_budget)
    gds, hds = sys.cocycle_to_digits(c)
    target = sys.cocycle_to_digits(c2)
    for fds in itertools.product(range(xm.G.order), repeat=V):
        for kds in itertools.product(range(xm.H.order), repeat=E):
            if sys.apply_digits(gds, hds, fds, kds) == target:
                return sys.digits_to_witness(fds, kds)
    return None


def enumerate_cocycles(
    cx: SimplicialComplex, xm: CrossedModule, budget: int = DEFAULT_BUDGET
) -> list[Cocycle]:
    """All valid cocycles in lexicographic (edge digits, triangle digits) order."""
    sys = _System(cx, xm)
    g_mat, h_mat = _enumerate_digit_arrays(sys, budget)
    return [sys.digits_to_cocycle(g_mat[i], h_mat[i]) for i in range(len(g_mat))]


def _classify_python(sys: _System, g_mat, h_mat) -> Classification:
    states = [
        (tuple(int(x) for x in g_mat[i]), tuple(int(x) for x in h_mat[i]))
        for i in range(len(g_mat))
    ]
    index = {s: i for i, s in enumerate(states)}
    acts = [sys.compile_move(m) for m in sys.moves()]
    labels = [-1] * len(states)
    classes: list[list[int]] = []
    for seed in range(len(states)):
        if labels[seed] >= 0:
            continue
        label = len(classes)
        labels[seed] = label
        frontier = [states[seed]]
        members = [seed]
        while frontier:
            nxt = []
            for st in frontier:
                for act in acts:
                    other = act(*st)
                    oid = index[other]
                    if labels[oid] < 0:
                        labels[oid] = label
                        members.append(oid)
                        nxt.append(other)
            frontier = nxt
        classes.append(sorted(members))
    trivial_id = index[(tuple([0] * g_mat.shape[1]), tuple([0] * h_mat.shape[1]))]
    reps = [sys.digits_to_cocycle(g_mat[c[0]], h_mat[c[0]]) for c in classes]
    out = Classification(
        classes=[np.asarray(c, dtype=np.int64) for c in classes],
        representatives=reps,
        base_class=labels[trivial_id],
        num_cocycles=len(states),
        _system=sys,
        _labels=np.asarray(labels, dtype=np.int64),
    )
    out._id_lookup = lambda c: index[sys.cocycle_to_digits(c)]
    return out


def _classify_shift_translation(sys: _System, budget: int) -> Classification:
    """Fast path: trivial G and no tetrahedra, so every move is a translation.

    Each elementary move ships the triangle data by a fixed delta vector;
    the orbit of any cocycle is its coset under the subgroup generated by the
    deltas.  The deltas come from the general coboundary action applied to
    the basepoint, and a sample of states cross-checks the translation claim
    against the general action.
    """
    H = sys.H
    T = len(sys.tris)
    n = H.order**T
    if n > budget:
        raise BudgetExceeded(n, budget)
    _, hw = sys.id_weights()
    table = H.table.astype(np.uint8)

    def encode(mat) -> np.ndarray:
        ids = np.zeros(len(mat), dtype=np.int64)
        for col in range(T):
            ids += mat[:, col].astype(np.int64) * int(hw[col])
        return ids

    def decode(x: int) -> np.ndarray:
        digits = np.empty(T, dtype=np.uint8)
        for pos in range(T - 1, -1, -1):
            x, r = divmod(x, H.order)
            digits[pos] = r
        return digits

    moves = sys.moves()
    acts = [sys.compile_move(m) for m in moves]
    zero_g = tuple([0] * len(sys.edges))
    zero_h = tuple([0] * T)
    deltas = []
    for act in acts:
        g2, h2 = act(zero_g, zero_h)
        assert g2 == zero_g
        deltas.append(np.asarray(h2, dtype=np.uint8))
    # translation cross-check against the general action, on a spread of states
    for sid in range(0, n, max(1, n // 13)):
        sample = tuple(int(x) for x in decode(sid))
        for act, d in zip(acts, deltas):
            expected = tuple(int(table[s, dv]) for s, dv in zip(sample, d))
            assert act(zero_g, sample)[1] == expected

    # close the delta subgroup
    visited = np.zeros(n, dtype=bool)
    visited[0] = True
    frontier = np.zeros((1, T), dtype=np.uint8)
    sub_rows = [frontier]
    while len(frontier):
        nxt = []
        for d in deltas:
            cand = table[frontier, d[None, :]]
            ids = encode(cand)
            fresh = ~visited[ids]
            if fresh.any():
                cand = cand[fresh]
                ids = ids[fresh]
                # first occurrence wins when ids repeat inside one batch
                uniq, first = np.unique(ids, return_index=True)
                visited[uniq] = True
                nxt.append(cand[first])
        frontier = np.concatenate(nxt) if nxt else np.zeros((0, T), dtype=np.uint8)
        if len(frontier):
            sub_rows.append(frontier)
    subgroup = np.concatenate(sub_rows)

    # orbits are cosets of the subgroup
    labels = np.full(n, -1, dtype=np.int64)
    classes = []
    seed = 0
    while seed < n:
        if labels[seed] >= 0:
            seed += 1
            continue
        coset = table[subgroup, decode(seed)[None, :]]
        ids = np.sort(encode(coset))
        labels[ids] = len(classes)
        classes.append(ids)
        seed += 1
    reps = [
        sys.digits_to_cocycle([0] * len(sys.edges), [int(x) for x in decode(int(ids[0]))])
        for ids in classes
    ]
    return Classification(
        classes=classes,
        representatives=reps,
        base_class=int(labels[0]),
        num_cocycles=n,
        _system=sys,
        _labels=labels,
        _id_lookup=None,
    )


def _classify_dense_edges(sys: _System, budget: int) -> Classification:
    """Vectorized path for one-dimensional complexes: every g assignment is
    valid, moves act column-by-column through lookup tables."""
    G = sys.G
    E = len(sys.edges)
    n = G.order**E
    if n > budget:
        raise BudgetExceeded(n, budget)
    gw, _ = sys.id_weights()
    digits = _mixed_radix(n, E, G.order)

    neighbor_arrays = []
    for move in sys.moves():
        kind, pos, val = move
        cols = digits.copy()
        if kind == "v":
            ainv = G.inv(val)
            for e, (i, j) in enumerate(sys.edges):
                if i == pos:
                    cols[:, e] = G.table[ainv, cols[:, e]]
                if j == pos:
                    cols[:, e] = G.table[cols[:, e], val]
        else:
            tk = sys.xm.t(val)
            cols[:, pos] = G.table[tk, cols[:, pos]]
        neighbor_arrays.append(cols @ gw)

    labels = np.arange(n, dtype=np.int64)
    changed = True
    while changed:
        changed = False
        for nbr in neighbor_arrays:
            np.minimum(labels, labels[nbr], out=labels)
        labels = labels[labels]
        for nbr in neighbor_arrays:
            if not np.array_equal(labels, np.minimum(labels, labels[nbr])):
                changed = True
                break

    roots, labels = np.unique(labels, return_inverse=True)
    classes = [np.flatnonzero(labels == i).astype(np.int64) for i in range(len(roots))]
    reps = [sys.digits_to_cocycle(digits[int(c[0])], []) for c in classes]
    return Classification(
        classes=classes,
        representatives=reps,
        base_class=int(labels[0]),
        num_cocycles=n,
        _system=sys,
        _labels=labels.astype(np.int64),
        _id_lookup=None,
    )


def classify_h1(
    cx: SimplicialComplex, xm: CrossedModule, budget: int = DEFAULT_BUDGET
) -> Classification:
    """Partition all valid cocycles into cohomology classes.

    Orbits are generated by applying elementary witnesses (vertex moves
    valued in a generating set of G, edge moves in a generating set of H) to
    each representative until closed; witnesses compose, so this reaches the
    full orbit of the witness group.
    """
    sys = _System(cx, xm)
    count = sys.candidate_count()
    if count > _PYTHON_STATE_LIMIT:
        if sys.G.order == 1 and not sys.tets:
            return _classify_shift_translation(sys, budget)
        if not sys.tris:
            return _classify_dense_edges(sys, budget)
    g_mat, h_mat = _enumerate_digit_arrays(sys, budget)
    return _classify_python(sys, g_mat, h_mat)


def relation_matrix(
    cx: SimplicialComplex,
    xm: CrossedModule,
    budget: int = DEFAULT_BUDGET,
    witness_budget: int = DEFAULT_WITNESS_BUDGET,
) -> tuple[np.ndarray, list[Cocycle]]:
    """Boolean matrix R[a, b] = "some witness carries cocycle a to cocycle b".

    Built by sweeping the full witness group from every cocycle; feasible on
    instances with a few hundred cocycles, where the equivalence-relation
    axioms can be checked directly.
    """
    sys = _System(cx, xm)
    g_mat, h_mat = _enumerate_digit_arrays(sys, budget)
    n = len(g_mat)
    states = [
        (tuple(int(x) for x in g_mat[i]), tuple(int(x) for x in h_mat[i])) for i in range(n)
    ]
    index = {s: i for i, s in enumerate(states)}
    V, E = cx.vertex_count, len(sys.edges)
    total = xm.G.order**V * xm.H.order**E
    if total > witness_budget:
        raise BudgetExceeded(total, witness_budget)
    rel = np.zeros((n, n), dtype=bool)
    witnesses = [
        (fds, kds)
        for fds in itertools.product(range(xm.G.order), repeat=V)
        for kds in itertools.product(range(xm.H.order), repeat=E)
    ]
    for a, (gds, hds) in enumerate(states):
        for fds, kds in witnesses:
            rel[a, index[sys.apply_digits(gds, hds, fds, kds)]] = True
    return rel, [sys.digits_to_cocycle(g_mat[i], h_mat[i]) for i in range(n)]


# independent oracles


def _smith_diagonal(rows: list[list[int]]) -> list[int]:
    """Nonzero diagonal of a Smith-equivalent form of an integer matrix."""
    a = [row[:] for row in rows]
    m = len(a)
    n = len(a[0]) if m else 0
    diag = []
    top = 0
    while top < m and top < n:
        # locate a nonzero pivot of least magnitude
        best = None
        for i in range(top, m):
            for j in range(top, n):
                if a[i][j] != 0 and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        bi, bj = best
        a[top], a[bi] = a[bi], a[top]
        for row in a:
            row[top], row[bj] = row[bj], row[top]
        # clear the pivot row and column, restarting if remainders appear
        while True:
            p = a[top][top]
            done = True
            for i in range(top + 1, m):
                q = a[i][top] // p
                if q:
                    for j in range(top, n):
                        a[i][j] -= q * a[top][j]
                if a[i][top] != 0:
                    a[top], a[i] = a[i], a[top]
                    done = False
                    break
            if not done:
                continue
            for j in range(top + 1, n):
                q = a[top][j] // p
                if q:
                    for i in range(top, m):
                        a[i][j] -= q * a[i][top]
                if a[top][j] != 0:
                    for i in range(m):
                        a[i][top], a[i][j] = a[i][j], a[i][top]
                    done = False
                    break
            if done:
                break
        diag.append(abs(a[top][top]))
        top += 1
    return [d for d in diag if d != 0]


def _torsion_count(H, d: int) -> int:
    return sum(1 for x in H.elements() if H.power(x, d) == 0)


def _hom_sizes(H, rows: list[list[int]], cols: int) -> tuple[int, int]:
    """(|kernel|, |image|) of an integer matrix acting on H^cols."""
    diag = _smith_diagonal(rows) if rows and cols else []
    image = 1
    kernel = H.order ** (cols - len(diag))
    for d in diag:
        tor = _torsion_count(H, d)
        kernel *= tor
        image *= H.order // tor
    return kernel, image


def abelian_oracle_h2(cx: SimplicialComplex, H) -> int:
    """|H^2(cx; H)| for abelian H, by integer linear algebra on the cochain
    complex (Smith form of the coboundary matrices plus torsion counts).

    Independent of the cocycle enumeration machinery: this is the oracle the
    one-object coefficient case must reproduce.
    """
    if not H.is_abelian():
        for a in H.elements():
            for b in H.elements():
                if H.mul(a, b) != H.mul(b, a):
                    raise NotAbelian((a, b))
    edges = cx.simplices_of_dim(1)
    tris = cx.simplices_of_dim(2)
    tets = cx.simplices_of_dim(3)
    eidx = {e: i for i, e in enumerate(edges)}
    tidx = {t: i for i, t in enumerate(tris)}
    d1 = []
    for (i, j, k) in tris:
        row = [0] * len(edges)
        row[eidx[(j, k)]] += 1
        row[eidx[(i, k)]] -= 1
        row[eidx[(i, j)]] += 1
        d1.append(row)
    d2 = []
    for (i, j, k, l) in tets:
        row = [0] * len(tris)
        row[tidx[(j, k, l)]] += 1
        row[tidx[(i, k, l)]] -= 1
        row[tidx[(i, j, l)]] += 1
        row[tidx[(i, j, k)]] -= 1
        d2.append(row)
    kernel2, _ = _hom_sizes(H, d2, len(tris))
    _, image1 = _hom_sizes(H, d1, len(edges))
    if kernel2 % image1:
        raise ValueError("cochain complex is not a complex; check the coboundaries")
    return kernel2 // image1


def holonomy_oracle(cx: SimplicialComplex, c: Cocycle, xm: CrossedModule) -> int:
    """Conjugacy class of the ordered edge product around a cycle graph.

    The traversal starts at vertex 0 toward its smaller neighbor; edges met
    against their increasing orientation contribute inverses.  Coefficients
    must be discrete (trivial H).
    """
    from .groups import conjugacy_class_index

    if not xm.is_discrete():
        raise ValueError("holonomy oracle needs discrete coefficients")
    edges = cx.simplices_of_dim(1)
    if cx.simplices_of_dim(2) or not edges:
        raise NotACycle("complex must be a bare cycle graph")
    nbrs: dict[int, list[int]] = {}
    for (i, j) in edges:
        nbrs.setdefault(i, []).append(j)
        nbrs.setdefault(j, []).append(i)
    if len(nbrs) != cx.vertex_count or any(len(v) != 2 for v in nbrs.values()):
        raise NotACycle("every vertex must have exactly two neighbors")
    G = xm.G
    hol = 0
    prev, at = None, 0
    nxt = min(nbrs[0])
    steps = 0
    while True:
        edge = (at, nxt) if at < nxt else (nxt, at)
        val = c.g[edge]
        hol = G.mul(hol, val if at < nxt else G.inv(val))
        prev, at = at, nxt
        steps += 1
        if at == 0:
            break
        a, b = nbrs[at]
        nxt = b if a == prev else a
        if steps > len(edges):
            raise NotACycle("edges do not form a single cycle")
    if steps != len(edges):
        raise NotACycle("edges do not form a single cycle")
    return conjugacy_class_index(G, hol)


def refine_compare(
    cx: SimplicialComplex, xm: CrossedModule, budget: int = DEFAULT_BUDGET
) -> tuple[int, int]:
    """Class counts on the complex and on its barycentric subdivision."""
    first = classify_h1(cx, xm, budget=budget).class_count
    second = classify_h1(barycentric_subdivide(cx), xm, budget=budget).class_count
    return first, second
