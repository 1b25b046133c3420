"""Greedy chains of left add-Q approximations.

The engine behind relative dominant dimension, quasi-generator degrees and
injective coresolutions: iterate C -> Q^t along lifts of a basis of
Hom(C, Q) / J(End Q) Hom(C, Q) (a minimal-size left approximation by
Nakayama), record injectivity, and stop when a cokernel lands in add Q.
The chain stays exact under Hom(-, Q) by the approximation property, which
is asserted by an explicit rank check at every step.
"""

from dataclasses import dataclass, field

import numpy as np

from .linalg import FpMatrix, QuotientSpace, rank
from .modules import (
    ModuleRep,
    direct_sum,
    end_algebra,
    hom,
    in_add,
    quotient_module,
)
from .values import DimValue


class DomdimError(RuntimeError):
    pass


class MethodDisagreement(DomdimError):
    """The greedy chain and the Tor criterion produced inconsistent values:
    the characterisation under test failed on a concrete instance."""


@dataclass
class ApproxStep:
    """One left add-Q approximation C -> Q^t."""

    source_dim: int
    hom_dim: int
    injective: bool
    cokernel_dim: int
    components: int = 0


@dataclass
class ChainResult:
    """Outcome of iterating universal approximations from M."""

    kind: str  # "closed" | "failed" | "capped" | "blowup"
    steps: list
    closure_step: int = -1  # kind == closed: first k with C_k in add Q
    failed_step: int = -1   # kind == failed: k of the non-injective map u_k

    def to_json(self):
        return {
            "kind": self.kind,
            "closure_step": self.closure_step,
            "failed_step": self.failed_step,
            "steps": [vars(s) for s in self.steps],
        }


def universal_approximation(c: ModuleRep, q: ModuleRep, check_property: bool = True,
                            minimal: bool = True):
    """A left add-Q approximation u: C -> T with T a sum of blocks of Q.

    With ``minimal`` the generating maps are lifts of a basis of
    Hom(C, Q) / J(End Q) Hom(C, Q); by Nakayama these still generate
    Hom(C, Q) over End(Q).  Each lift is then split along the recorded
    direct-sum blocks of Q and zero blocks are dropped, which keeps the
    cokernel close to the genuinely minimal one.  The approximation
    property (Hom(T, Q) -> Hom(C, Q) surjective under precomposition) is
    asserted by an explicit rank check.

    Returns (hom space, map u, ambient module T).
    """
    h = hom(c, q)
    p = c.algebra.p
    lifts = h.basis
    if minimal and h.dim:
        rad_mats = _end_radical_mats(q)
        if rad_mats:
            cols = np.zeros((q.dim * c.dim, len(rad_mats) * h.dim), dtype=np.int64)
            k = 0
            for j in rad_mats:
                for f in h.basis:
                    cols[:, k] = (j @ f).vec()
                    k += 1
            # coordinates of J(E).H inside H, then lift a complement basis
            jh = _solve_or_fail(h.matrix(), FpMatrix(cols, p), "radical reduction")
            quot = QuotientSpace(jh)
            lifts = [h.element(quot.section.a[:, t]) for t in range(quot.dim)]
    block_mods, offsets = _block_modules(q)
    comps = []  # (block index, block component of a lift)
    for f in lifts:
        for bi, (off, sz) in enumerate(offsets):
            sub = f.a[off:off + sz, :]
            if sub.any():
                comps.append((bi, FpMatrix(sub, p)))
    if comps:
        u = FpMatrix.vstack([mat for _, mat in comps])
        ambient = direct_sum([block_mods[bi] for bi, _ in comps])
    else:
        u = FpMatrix.zeros(0, c.dim, p)
        ambient = ModuleRep.zero(q.algebra, q.side)
    if check_property and h.dim:
        cols = []
        for bi, mat in comps:
            for g in _block_hom_cached(q, bi).basis:
                cols.append((g @ mat).vec())
        stacked = np.stack(cols, axis=1) if cols else np.zeros((q.dim * c.dim, 0), dtype=np.int64)
        if rank(FpMatrix(stacked, p)) != h.dim:
            raise DomdimError("approximation property failed the rank check")
    return h, u, ambient


def _block_modules(q: ModuleRep):
    """Direct-sum blocks of Q as modules, with (offset, size) slices."""
    if "blockmods" not in q._cache:
        blocks = [b for b in (q.blocks or [q.dim])]
        mods = []
        offsets = []
        off = 0
        for sz in blocks:
            mods.append(ModuleRep(q.algebra, q.side,
                                  q.action[:, off:off + sz, off:off + sz]))
            offsets.append((off, sz))
            off += sz
        q._cache["blockmods"] = (mods, offsets)
    return q._cache["blockmods"]


def _block_hom_cached(q: ModuleRep, bi: int):
    """Hom(Q_block, Q), cached per block."""
    key = ("blockhom", bi)
    if key not in q._cache:
        block_mods, _ = _block_modules(q)
        q._cache[key] = hom(block_mods[bi], q)
    return q._cache[key]


def _end_radical_mats(q: ModuleRep):
    """Matrices on Q of a basis of the radical of End(Q), cached."""
    if "endrad" not in q._cache:
        e_alg, q_over_e = _q_package(q)
        rad = e_alg.radical()
        mats = [q_over_e.act_of(rad.basis.a[:, s]) for s in range(rad.dim)]
        q._cache["endrad"] = mats
    return q._cache["endrad"]


def addq_chain(q: ModuleRep, m: ModuleRep, cap: int, dim_guard: int = 4096) -> ChainResult:
    """Greedy chain of universal approximations; stops at closure (C_k in
    add Q), a non-injective universal map, the cap, or a dimension blowup."""
    if q.algebra != m.algebra or q.side != m.side:
        raise DomdimError("Q and M must live over one algebra on one side")
    if q.is_zero():
        raise DomdimError("Q must be nonzero")
    steps = []
    c = m
    for k in range(cap + 1):
        if in_add(c, q):
            return ChainResult("closed", steps, closure_step=k)
        h, u, ambient = universal_approximation(c, q)
        t = len(ambient.blocks or []) if not ambient.is_zero() else 0
        injective = rank(u) == c.dim
        if not injective:
            steps.append(ApproxStep(c.dim, h.dim, False, -1, components=t))
            return ChainResult("failed", steps, failed_step=k + 1)
        coker, _ = quotient_module(ambient, u)
        steps.append(ApproxStep(c.dim, h.dim, True, coker.dim, components=t))
        c = coker
        if c.dim > dim_guard:
            return ChainResult("blowup", steps)
    return ChainResult("capped", steps)


# -- the evaluation map and the Tor criterion ---------------------------

def _q_package(q: ModuleRep):
    """End algebra data shared by alpha and the criterion, cached on Q."""
    if "qpkg" not in q._cache:
        e_alg, q_over_e = end_algebra(q)
        q._cache["qpkg"] = (e_alg, q_over_e)
    return q._cache["qpkg"]


def _hom_as_end_module(m: ModuleRep, q: ModuleRep, e_alg, q_over_e):
    """Hom_A(M, Q) as a left module over E = End_A(Q) via postcomposition."""
    h = hom(m, q)
    r = h.dim
    p = m.algebra.p
    act = np.zeros((e_alg.dim, r, r), dtype=np.int64)
    if r:
        mat = h.matrix()
        for gi in range(e_alg.dim):
            g = FpMatrix(q_over_e.action[gi], p)
            cols = np.zeros((q.dim * m.dim, r), dtype=np.int64)
            for j in range(r):
                cols[:, j] = (g @ h.basis[j]).vec()
            coords = _solve_or_fail(mat, FpMatrix(cols, p), "postcomposition")
            act[gi] = coords.a
    return ModuleRep(e_alg, "left", act), h


def _solve_or_fail(a, b, what):
    from .linalg import solve
    x = solve(a, b)
    if x is None:  # pragma: no cover - the maps are linear by construction
        raise DomdimError(f"{what} escaped its hom basis")
    return x


def alpha_map(m: ModuleRep, q: ModuleRep):
    """The map M -> Hom_B(Hom_A(M, Q), Q), m -> (f -> f(m)).

    Returns (matrix, is_isomorphism).  Bijectivity here is equivalent to
    the evaluation pairing Hom_A(DQ, DM) (x)_B DQ -> DM being one, which is
    the degree-2 gate of the criterion.
    """
    e_alg, q_over_e = _q_package(q)
    h_mod, h = _hom_as_end_module(m, q, e_alg, q_over_e)
    target = hom(h_mod, q_over_e)  # Hom over E = Hom over B of right modules
    p = m.algebra.p
    alpha = np.zeros((target.dim, m.dim), dtype=np.int64)
    if target.dim and h.dim:
        vecs = np.zeros((q.dim * h.dim, m.dim), dtype=np.int64)
        for vm in range(m.dim):
            w = np.zeros((q.dim, h.dim), dtype=np.int64)
            for j in range(h.dim):
                w[:, j] = h.basis[j].a[:, vm]
            vecs[:, vm] = w.reshape(-1)
        coords = _solve_or_fail(target.matrix(), FpMatrix(vecs, p), "evaluation map")
        alpha = coords.a
    mat = FpMatrix(alpha, p)
    is_iso = target.dim == m.dim and rank(mat) == m.dim
    return mat, is_iso


def _criterion_modules(q: ModuleRep, m: ModuleRep):
    """The B-modules of the criterion: Hom_A(M,Q) and Hom_A(DQ,DM) as right
    B-modules and DQ as a left B-module, B = End_A(Q)^op."""
    e_alg, q_over_e = _q_package(q)
    b_alg = e_alg.opposite()
    p = q.algebra.p

    h_mod, _ = _hom_as_end_module(m, q, e_alg, q_over_e)
    h_right_b = ModuleRep(b_alg, "right", h_mod.action, name="Hom(M,Q)")

    dq_act = np.transpose(q_over_e.action, (0, 2, 1))
    dq_left_b = ModuleRep(b_alg, "left", dq_act, name="DQ")

    dq_a = q.dual()
    dm_a = m.dual()
    h2 = hom(dq_a, dm_a)
    r2 = h2.dim
    act2 = np.zeros((b_alg.dim, r2, r2), dtype=np.int64)
    if r2:
        mat2 = h2.matrix()
        for gi in range(b_alg.dim):
            gt = FpMatrix(dq_act[gi], p)
            cols = np.zeros((dm_a.dim * dq_a.dim, r2), dtype=np.int64)
            for j in range(r2):
                cols[:, j] = (h2.basis[j] @ gt).vec()
            coords = _solve_or_fail(mat2, FpMatrix(cols, p), "dualised hom action")
            act2[gi] = coords.a
    h2_right_b = ModuleRep(b_alg, "right", act2, name="Hom(DQ,DM)")
    return h_right_b, h2_right_b, dq_left_b
