"""Finite-dimensional modules as representations, Hom spaces, duality, tensors.

A right A-module is stored with the same matrix data as a left module over
the opposite algebra; the ``side`` flag records the presentation.  All
operations below are side-agnostic: the stored action matrices satisfy

    left:  act(i) @ act(j) == act(b_i * b_j)
    right: act(i) @ act(j) == act(b_j * b_i)

and every formula used here is uniform in that law.
"""

import numpy as np

from .algebra import Algebra
from .linalg import (
    FpMatrix,
    QuotientSpace,
    column_space_basis,
    kernel_basis,
    membership,
    solve,
)


class ModuleError(ValueError):
    pass


def _flip(side: str) -> str:
    return "right" if side == "left" else "left"


class ModuleRep:
    """A left or right module given by one action matrix per algebra basis
    element."""

    __slots__ = ("algebra", "side", "dim", "action", "name", "blocks", "_cache")

    def __init__(self, algebra: Algebra, side: str, action, name: str = "",
                 validate: bool = False, blocks=None):
        if side not in ("left", "right"):
            raise ModuleError(f"side must be left or right, got {side!r}")
        self.algebra = algebra
        self.side = side
        action = np.asarray(action, dtype=np.int64) % algebra.p
        if action.ndim != 3 or action.shape[0] != algebra.dim or action.shape[1] != action.shape[2]:
            raise ModuleError(f"action tensor has shape {action.shape}")
        action.setflags(write=False)
        self.action = action
        self.dim = int(action.shape[1])
        self.name = name
        self.blocks = blocks  # direct-sum block dims, when known
        self._cache = {}
        if validate:
            self.validate()

    def validate(self):
        a, p, t = self.algebra, self.algebra.p, self.algebra.table
        n, d = self.dim, self.algebra.dim
        ident = np.eye(n, dtype=np.int64)
        unit_act = np.tensordot(a.unit, self.action, axes=(0, 0)) % p
        if not np.array_equal(unit_act, ident):
            raise ModuleError("unit does not act as the identity")
        for i in range(d):
            for j in range(d):
                lhs = FpMatrix(self.action[i], p) @ FpMatrix(self.action[j], p)
                coeff = t[i, j] if self.side == "left" else t[j, i]
                rhs = np.tensordot(coeff, self.action, axes=(0, 0)) % p
                if not np.array_equal(lhs.a, rhs):
                    raise ModuleError(
                        f"action violates the {self.side}-module law at basis pair ({i}, {j})")

    # -- constructors ---------------------------------------------------
    @classmethod
    def zero(cls, algebra: Algebra, side: str) -> "ModuleRep":
        return cls(algebra, side, np.zeros((algebra.dim, 0, 0), dtype=np.int64), name="0")

    @classmethod
    def regular(cls, algebra: Algebra, side: str) -> "ModuleRep":
        act = algebra.left_mult_matrices() if side == "left" else algebra.right_mult_matrices()
        return cls(algebra, side, act, name="A" if side == "left" else "A_r")

    @classmethod
    def projective(cls, algebra: Algebra, i: int, side: str) -> "ModuleRep":
        """A*e_i as a left module (resp. e_i*A on the right)."""
        e = algebra.idempotents[i]
        image = algebra.element_matrix(e, side="right" if side == "left" else "left")
        reg = cls.regular(algebra, side)
        sub = submodule(reg, image)
        sub.name = f"P{i}" if side == "left" else f"P{i}_r"
        return sub

    def act(self, i: int) -> FpMatrix:
        return FpMatrix(self.action[i], self.algebra.p)

    def act_of(self, coords) -> FpMatrix:
        coords = np.asarray(coords, dtype=np.int64) % self.algebra.p
        return FpMatrix(np.tensordot(coords, self.action, axes=(0, 0)) % self.algebra.p, self.algebra.p)

    def is_zero(self) -> bool:
        return self.dim == 0

    def dual(self) -> "ModuleRep":
        """Vector-space dual: side flips, action matrices transpose."""
        act = np.transpose(self.action, (0, 2, 1))
        return ModuleRep(self.algebra, _flip(self.side), act,
                         name=f"D({self.name})" if self.name else "",
                         blocks=self.blocks)

    def __eq__(self, other):
        if not isinstance(other, ModuleRep):
            return NotImplemented
        return (self.algebra == other.algebra and self.side == other.side
                and self.dim == other.dim and np.array_equal(self.action, other.action))

    def __hash__(self):
        return hash((self.algebra.digest(), self.side, self.dim, self.action.tobytes()))

    def __repr__(self):
        nm = f" {self.name!r}" if self.name else ""
        return f"ModuleRep({self.side},{nm} dim {self.dim} over {self.algebra!r})"


def direct_sum(mods) -> ModuleRep:
    """Block-diagonal direct sum; all summands over one algebra and side."""
    mods = list(mods)
    if not mods:
        raise ModuleError("direct sum of an empty list needs an algebra; use ModuleRep.zero")
    a, side = mods[0].algebra, mods[0].side
    for m in mods:
        if m.algebra != a or m.side != side:
            raise ModuleError("direct sum requires one algebra and one side")
    n = sum(m.dim for m in mods)
    act = np.zeros((a.dim, n, n), dtype=np.int64)
    blocks = []
    off = 0
    for m in mods:
        act[:, off:off + m.dim, off:off + m.dim] = m.action
        off += m.dim
        blocks.extend(m.blocks if m.blocks else [m.dim])
    name = "+".join(m.name or "?" for m in mods)
    return ModuleRep(a, side, act, name=name, blocks=blocks)


def submodule(m: ModuleRep, columns: FpMatrix) -> ModuleRep:
    """Restriction of the action to the span of ``columns`` (must be stable)."""
    basis = column_space_basis(columns)
    acts = np.zeros((m.algebra.dim, basis.cols, basis.cols), dtype=np.int64)
    for i in range(m.algebra.dim):
        img = m.act(i) @ basis
        coords = solve(basis, img)
        if coords is None:
            raise ModuleError("subspace is not stable under the action")
        acts[i] = coords.a
    return ModuleRep(m.algebra, m.side, acts)


def quotient_module(m: ModuleRep, columns: FpMatrix):
    """M / span(columns) (must be a submodule); returns (Q, projection)."""
    q = QuotientSpace(columns)
    acts = np.zeros((m.algebra.dim, q.dim, q.dim), dtype=np.int64)
    for i in range(m.algebra.dim):
        acts[i] = (q.pi @ m.act(i) @ q.section).a
    return ModuleRep(m.algebra, m.side, acts), q.pi


class HomSpace:
    """Basis of all A-linear maps source -> target (matrices target x source)."""

    __slots__ = ("source", "target", "basis", "_mat")

    def __init__(self, source: ModuleRep, target: ModuleRep, basis):
        self.source = source
        self.target = target
        self.basis = list(basis)
        self._mat = None

    @property
    def dim(self) -> int:
        return len(self.basis)

    def matrix(self) -> FpMatrix:
        """(target.dim * source.dim) x dim matrix of vectorised basis maps."""
        if self._mat is None:
            p = self.source.algebra.p
            nm = self.target.dim * self.source.dim
            cols = np.zeros((nm, self.dim), dtype=np.int64)
            for k, f in enumerate(self.basis):
                cols[:, k] = f.vec()
            self._mat = FpMatrix(cols, p)
        return self._mat

    def coords_of(self, f: FpMatrix):
        """Coordinates of a map in this basis, or None if it is not A-linear
        combination of the basis (never for genuine homs)."""
        return solve(self.matrix(), FpMatrix.column(f.vec(), f.p))

    def element(self, coords) -> FpMatrix:
        p = self.source.algebra.p
        out = FpMatrix.zeros(self.target.dim, self.source.dim, p)
        for k, c in enumerate(np.asarray(coords, dtype=np.int64) % p):
            if c:
                out = out + int(c) * self.basis[k]
        return out


def hom(m: ModuleRep, n: ModuleRep) -> HomSpace:
    """All A-linear maps M -> N via the intertwining linear system."""
    if m.algebra != n.algebra:
        raise ModuleError("hom requires modules over the same algebra")
    if m.side != n.side:
        raise ModuleError("hom requires modules on the same side")
    p = m.algebra.p
    nm = n.dim * m.dim
    if nm == 0:
        return HomSpace(m, n, [])
    gens = _generator_indices(m.algebra)
    blocks = []
    eye_n = np.eye(n.dim, dtype=np.int64)
    eye_m = np.eye(m.dim, dtype=np.int64)
    for i in gens:
        k = (np.kron(eye_n, m.action[i].T) - np.kron(n.action[i], eye_m)) % p
        blocks.append(k)
    big = FpMatrix(np.vstack(blocks) if blocks else np.zeros((0, nm), dtype=np.int64), p)
    ker = kernel_basis(big)
    basis = [FpMatrix(ker.a[:, k].reshape(n.dim, m.dim), p) for k in range(ker.cols)]
    return HomSpace(m, n, basis)


def _generator_indices(a: Algebra):
    """Basis indices whose intertwining constraints imply all others."""
    return a.generator_indices()


def end_algebra(m: ModuleRep):
    """Endomorphism algebra B (multiplication = composition) and M as a left
    B-module via f . x = f(x)."""
    if m.is_zero():
        raise ModuleError("endomorphism algebra of the zero module")
    h = hom(m, m)
    r = h.dim
    p = m.algebra.p
    table = np.zeros((r, r, r), dtype=np.int64)
    mat = h.matrix()
    prods = np.zeros((m.dim * m.dim, r * r), dtype=np.int64)
    for i in range(r):
        for j in range(r):
            prods[:, i * r + j] = (h.basis[i] @ h.basis[j]).vec()
    coords = solve(mat, FpMatrix(prods, p))
    if coords is None:  # pragma: no cover - End is closed under composition
        raise ModuleError("endomorphism composition escaped the hom basis")
    for i in range(r):
        for j in range(r):
            table[i, j] = coords.a[:, i * r + j]
    unit = solve(mat, FpMatrix.column(np.eye(m.dim, dtype=np.int64).reshape(-1), p))
    if unit is None:  # pragma: no cover
        raise ModuleError("identity map missing from End basis")
    idems = _block_projector_idempotents(m, h) or [unit.a[:, 0]]
    labels = [f"f{k}" for k in range(r)]
    b = Algebra(p, labels, table, unit.a[:, 0], idems)
    act = np.stack([f.a for f in h.basis]) if r else np.zeros((0, m.dim, m.dim), dtype=np.int64)
    m_over_b = ModuleRep(b, "left", act, name=m.name)
    return b, m_over_b


def in_add(x: ModuleRep, m: ModuleRep) -> bool:
    """Is X a direct summand of a finite direct sum of copies of M?

    Tests id_X against the span of {f o g} over hom-bases f: M->X, g: X->M;
    that span is a two-sided ideal of End(X), so the linear test is exact.
    """
    if x.algebra != m.algebra or x.side != m.side:
        raise ModuleError("in_add requires one algebra and one side")
    if x.is_zero():
        return True
    fs = hom(m, x).basis
    gs = hom(x, m).basis
    if not fs or not gs:
        return False
    p = x.algebra.p
    # all composites f o g in one blocked product: stack the f's as rows of
    # blocks and the g's as columns of blocks
    fstack = np.vstack([f.a for f in fs])            # (r*nx, nm)
    gstack = np.hstack([g.a for g in gs])            # (nm, s*nx)
    from ._kernels import matmul_mod
    prod = matmul_mod(fstack, gstack, p)             # blocks (t,u) = f_t @ g_u
    r, s, nx = len(fs), len(gs), x.dim
    cols = prod.reshape(r, nx, s, nx).transpose(0, 2, 1, 3).reshape(r * s, nx * nx).T
    ident = FpMatrix.column(np.eye(nx, dtype=np.int64).reshape(-1), p)
    return membership(ident, FpMatrix._wrap(np.ascontiguousarray(cols), p))


def injective_cogenerator(a: Algebra, side: str) -> ModuleRep:
    """D(regular module of the other side); add of it = injectives."""
    key = ("injcogen", side)
    if key not in a._injcogen:
        m = ModuleRep.regular(a, _flip(side)).dual()
        m.name = "DA"
        a._injcogen[key] = m
    return a._injcogen[key]


def is_projective(m: ModuleRep) -> bool:
    if "is_projective" not in m._cache:
        m._cache["is_projective"] = in_add(m, ModuleRep.regular(m.algebra, m.side))
    return m._cache["is_projective"]


def is_injective(m: ModuleRep) -> bool:
    return in_add(m, injective_cogenerator(m.algebra, m.side))


def projective_cover_data(m: ModuleRep, minimal: bool = True):
    """A surjection P -> M from a direct sum of idempotent projectives.

    Returns (P, map matrix).  With ``minimal`` the generators are lifted
    from top(M) = M/JM split along the distinguished idempotents; otherwise
    every basis vector of M is used as a generator of type "unit".
    """
    a = m.algebra
    p = a.p
    gens = []  # (idempotent index, generating vector)
    if minimal and not m.is_zero():
        j = a.radical()
        if j.dim:
            jm_cols = []
            for s in range(j.basis.cols):
                jm_cols.append((m.act_of(j.basis.a[:, s])).a)
            jm = FpMatrix(np.hstack(jm_cols), p) if jm_cols else FpMatrix.zeros(m.dim, 0, p)
        else:
            jm = FpMatrix.zeros(m.dim, 0, p)
        quot = QuotientSpace(jm)
        for ei, e in enumerate(a.idempotents):
            egate = m.act_of(e)
            proj_top = quot.pi @ egate  # columns = classes of e.M in top(M)
            tbasis = column_space_basis(proj_top)
            if tbasis.cols == 0:
                continue
            w = solve(proj_top, tbasis)
            if w is None:  # pragma: no cover - tbasis sits in the column space
                raise ModuleError("projective cover lift failed")
            lifted = egate @ w  # generators inside e.M covering e.top(M)
            for t in range(lifted.cols):
                gens.append((ei, lifted.a[:, t]))
    else:
        for t in range(m.dim):
            v = np.zeros(m.dim, dtype=np.int64)
            v[t] = 1
            gens.append((None, v))

    summands = []
    cols = []
    for ei, v in gens:
        if ei is None:
            pr = ModuleRep.regular(a, m.side)
        else:
            pr = _projective_cached(a, ei, m.side)
        summands.append(pr)
        # map a |-> a . v on this summand; column for each basis vector of pr
        colmap = np.zeros((m.dim, pr.dim), dtype=np.int64)
        emb = _projective_embedding(a, ei, m.side)
        for t in range(pr.dim):
            coords = emb.a[:, t]  # algebra coordinates of the t-th basis vector
            colmap[:, t] = (m.act_of(coords) @ FpMatrix.column(v, p)).a[:, 0]
        cols.append(colmap)
    if summands:
        cover = direct_sum(summands)
        d0 = FpMatrix(np.hstack(cols), p)
    else:
        cover = ModuleRep.zero(a, m.side)
        d0 = FpMatrix.zeros(m.dim, 0, p)
    return cover, d0


def _projective_cached(a: Algebra, i: int, side: str) -> ModuleRep:
    key = ("proj", i, side)
    if key not in a._regular:
        a._regular[key] = ModuleRep.projective(a, i, side)
    return a._regular[key]


def _projective_embedding(a: Algebra, i, side: str) -> FpMatrix:
    """Columns = algebra coordinates of the chosen basis of A*e_i (or A)."""
    key = ("projemb", i, side)
    if key not in a._regular:
        if i is None:
            a._regular[key] = FpMatrix.identity(a.dim, a.p)
        else:
            e = a.idempotents[i]
            image = a.element_matrix(e, side="right" if side == "left" else "left")
            a._regular[key] = column_space_basis(image)
    return a._regular[key]


def split_surjection_has_section(pi: FpMatrix, source: ModuleRep, target: ModuleRep) -> bool:
    """Does the A-linear surjection pi: source -> target split?"""
    h = hom(target, source)
    if h.dim == 0:
        return target.is_zero()
    p = pi.p
    cols = np.zeros((target.dim * target.dim, h.dim), dtype=np.int64)
    for k, s in enumerate(h.basis):
        cols[:, k] = (pi @ s).vec()
    ident = FpMatrix.column(np.eye(target.dim, dtype=np.int64).reshape(-1), p)
    return membership(ident, FpMatrix(cols, p))


def is_projective_by_section(m: ModuleRep) -> bool:
    """Independent projectivity test: a generic cover splits iff M is
    projective."""
    cover, d0 = projective_cover_data(m, minimal=False)
    return split_surjection_has_section(d0, cover, m)


class BimoduleTensor:
    """M tensor_A N for a right module M and left module N over A."""

    __slots__ = ("left", "right", "dim", "quot")

    def __init__(self, left: ModuleRep, right: ModuleRep):
        if left.side != "right" or right.side != "left":
            raise ModuleError("tensor needs a right module and a left module")
        if left.algebra != right.algebra:
            raise ModuleError("tensor factors live over different algebras")
        a = left.algebra
        p = a.p
        mm, nn = left.dim, right.dim
        eye_m = np.eye(mm, dtype=np.int64)
        eye_n = np.eye(nn, dtype=np.int64)
        blocks = []
        for i in _generator_indices(a):
            k = (np.kron(left.action[i], eye_n) - np.kron(eye_m, right.action[i])) % p
            blocks.append(k)
        if blocks and mm * nn:
            rel = FpMatrix(np.hstack(blocks), p)
        else:
            rel = FpMatrix.zeros(mm * nn, 0, p)
        self.left = left
        self.right = right
        self.quot = QuotientSpace(rel)
        self.dim = self.quot.dim

    def induced_from_right(self, f: FpMatrix, other: "BimoduleTensor") -> FpMatrix:
        """Matrix of M tensor f : M(x)N -> M(x)N' given f: N -> N'."""
        p = f.p
        eye_m = np.eye(self.left.dim, dtype=np.int64)
        plain = FpMatrix(np.kron(eye_m, f.a) % p, p)
        return other.quot.pi @ plain @ self.quot.section


def tensor_over_algebra(left: ModuleRep, right: ModuleRep) -> BimoduleTensor:
    return BimoduleTensor(left, right)


def _block_projector_idempotents(m: ModuleRep, h: HomSpace):
    """Direct-sum block projectors as idempotents of End(M), when M carries
    a recorded block structure with more than one nonzero block."""
    if not m.blocks or len([b for b in m.blocks if b]) < 2:
        return None
    p = m.algebra.p
    out = []
    off = 0
    for b in m.blocks:
        if b:
            proj = np.zeros((m.dim, m.dim), dtype=np.int64)
            for k in range(off, off + b):
                proj[k, k] = 1
            coords = h.coords_of(FpMatrix(proj, p))
            if coords is None:  # pragma: no cover - projectors are A-linear
                raise ModuleError("block projector escaped the End basis")
            out.append(coords.a[:, 0])
        off += b
    return out
