"""Projective resolutions, Ext and Tor, projective/injective dimension.

Dimensions are computed Schanuel-style: the n-th syzygy of any projective
presentation is projective iff pdim <= n, so correctness never depends on
minimality.  Minimal covers (built on top(M) via the distinguished
idempotents) are an optimization that keeps resolutions small.

Every value that a cap could not decide is reported as an explicit
">= cap"; "infinite" is only returned with a certificate (here: a repeated
syzygy up to split equivalence, which forces the syzygy support sets to
cycle forever).
"""

import numpy as np

from .linalg import FpMatrix, kernel_basis, rank, solve
from .modules import (
    HomSpace,
    ModuleRep,
    direct_sum,
    hom,
    in_add,
    injective_cogenerator,
    is_injective,
    is_projective,
    projective_cover_data,
    quotient_module,
    submodule,
    tensor_over_algebra,
)
from .values import DimValue


class HomologyError(RuntimeError):
    pass


class Resolution:
    """A chain ... -> P_1 -> P_0 -> M -> 0 extended lazily by covers.

    ``maps[0]`` is the augmentation P_0 -> M; ``maps[i]`` is d_i: P_i ->
    P_{i-1}.  ``syzygies[k]`` is the kernel of maps[k] as a module (the
    (k+1)-st syzygy).  Once the kernel vanishes the resolution is finished
    and all later terms are zero.
    """

    def __init__(self, module: ModuleRep, minimal: bool = True):
        self.module = module
        self.minimal = minimal
        self.terms = []
        self.maps = []
        self.syzygies = []
        self._kernel_cols = []  # embedding of syzygy k+1 into P_k
        self.finished = module.is_zero()

    def __len__(self):
        return len(self.terms)

    def extend_to(self, depth: int):
        """Ensure terms P_0..P_depth exist (or the resolution finished)."""
        while not self.finished and len(self.terms) <= depth:
            self._step()
        return self

    def _step(self):
        target = self.module if not self.terms else self.syzygies[-1]
        if is_projective(target):
            # close the resolution exactly: 0 -> target -> target -> ...
            cover = target
            if self.terms:
                d = self._kernel_cols[-1]
            else:
                d = FpMatrix.identity(target.dim, target.algebra.p)
        else:
            cover, d = projective_cover_data(target, minimal=self.minimal)
            if self.terms:
                # re-express the map into the previous term's coordinates
                d = self._kernel_cols[-1] @ d
        if rank(d) != target.dim:  # pragma: no cover - covers are surjective
            raise HomologyError("cover failed to surject")
        if self.maps:
            comp = self.maps[-1] @ d
            if not comp.is_zero():  # pragma: no cover
                raise HomologyError("differential does not square to zero")
        ker = kernel_basis(d)
        syz = submodule(cover, ker) if ker.cols else ModuleRep.zero(cover.algebra, cover.side)
        self.terms.append(cover)
        self.maps.append(d)
        self.syzygies.append(syz)
        self._kernel_cols.append(ker)
        if syz.is_zero():
            self.finished = True

    def term(self, i: int) -> ModuleRep:
        if i < len(self.terms):
            return self.terms[i]
        return ModuleRep.zero(self.module.algebra, self.module.side)

    def dmap(self, i: int) -> FpMatrix:
        """d_i: P_i -> P_{i-1} (the augmentation for i = 0)."""
        if i < len(self.maps):
            return self.maps[i]
        prev = self.term(i - 1).dim if i >= 1 else self.module.dim
        return FpMatrix.zeros(prev, 0, self.module.algebra.p)

    def syzygy(self, k: int) -> ModuleRep:
        """Omega^k(M); k = 0 is M itself."""
        if k == 0:
            return self.module
        self.extend_to(k - 1)
        if k - 1 < len(self.syzygies):
            return self.syzygies[k - 1]
        return ModuleRep.zero(self.module.algebra, self.module.side)


def resolution_of(m: ModuleRep, minimal: bool = True) -> Resolution:
    key = ("res", minimal)
    if key not in m._cache:
        m._cache[key] = Resolution(m, minimal=minimal)
    return m._cache[key]


def split_equivalent(x: ModuleRep, y: ModuleRep) -> bool:
    """Same dimension and mutual add-membership (same indecomposable
    support)."""
    return x.dim == y.dim and in_add(x, y) and in_add(y, x)


def pdim(m: ModuleRep, cap: int = 16, certify_periodic: bool = False) -> DimValue:
    """Projective dimension, exact up to ``cap``.

    With ``certify_periodic`` a repeated syzygy (up to split equivalence)
    certifies an infinite answer: syzygy supports then cycle forever, so no
    syzygy is ever projective.
    """
    if m.is_zero():
        return DimValue.exact(0)
    res = resolution_of(m)
    seen = [m]
    for k in range(cap + 1):
        omega = res.syzygy(k)
        if is_projective(omega):
            return DimValue.exact(k)
        if certify_periodic and k > 0:
            for old in seen:
                if split_equivalent(old, omega):
                    return DimValue.infinite()
            seen.append(omega)
    return DimValue.at_least(cap)


def idim(m: ModuleRep, cap: int = 16, certify_periodic: bool = False) -> DimValue:
    """Injective dimension as pdim of the dual over the opposite side."""
    key = ("idim", cap, certify_periodic)
    if key not in m._cache:
        m._cache[key] = pdim(m.dual(), cap, certify_periodic)
    return m._cache[key]


def idim_by_coresolution(m: ModuleRep, cap: int = 16) -> DimValue:
    """Independent route: cosyzygies along approximations into copies of the
    injective cogenerator; idim <= n iff the n-th cokernel is injective."""
    from .approx import addq_chain
    cog = injective_cogenerator(m.algebra, m.side)
    chain = addq_chain(cog, m, cap)
    if chain.kind == "closed":
        return DimValue.exact(chain.closure_step)
    if chain.kind == "failed":  # pragma: no cover - cogenerator embeddings inject
        raise HomologyError("embedding into the injective cogenerator failed")
    return DimValue.at_least(min(len(chain.steps), cap))


def _hom_dims_and_deltas(res: Resolution, n: ModuleRep, i: int):
    """Hom(P_j, N) dimensions and connecting ranks needed for Ext^i."""
    res.extend_to(i + 1)
    spaces = {}
    for j in (i - 1, i, i + 1):
        if j >= 0:
            spaces[j] = hom(res.term(j), n)
    return spaces


def _delta_rank(res: Resolution, spaces, j: int, n: ModuleRep) -> int:
    """Rank of Hom(P_j, N) -> Hom(P_{j+1}, N), f |-> f o d_{j+1}."""
    hj = spaces[j]
    hj1 = spaces.get(j + 1)
    if hj is None or hj.dim == 0:
        return 0
    if hj1 is None or hj1.dim == 0:
        return 0
    d = res.dmap(j + 1)
    p = n.algebra.p
    cols = np.zeros((n.dim * res.term(j + 1).dim, hj.dim), dtype=np.int64)
    for t, h in enumerate(hj.basis):
        cols[:, t] = (h @ d).vec()
    coords = solve(hj1.matrix(), FpMatrix(cols, p))
    if coords is None:  # pragma: no cover - f o d is always a hom
        raise HomologyError("hom complex map escaped the hom basis")
    return rank(coords)


def ext(m: ModuleRep, n: ModuleRep, i: int) -> int:
    """dim Ext^i(M, N) from a projective resolution of M."""
    if i < 0:
        raise ValueError("ext degree must be non-negative")
    if m.is_zero() or n.is_zero():
        return 0
    if i == 0:
        return hom(m, n).dim
    res = resolution_of(m)
    spaces = _hom_dims_and_deltas(res, n, i)
    hi = spaces[i].dim
    r_i = _delta_rank(res, spaces, i, n)
    r_prev = _delta_rank(res, spaces, i - 1, n)
    return hi - r_i - r_prev


def tor(m_right: ModuleRep, n_left: ModuleRep, i: int) -> int:
    """dim Tor_i(M, N) from M tensor a projective resolution of N."""
    if i < 0:
        raise ValueError("tor degree must be non-negative")
    if m_right.side != "right" or n_left.side != "left":
        raise ValueError("tor needs a right module and a left module")
    if m_right.is_zero() or n_left.is_zero():
        return 0
    res = resolution_of(n_left)
    res.extend_to(i + 1)
    tens = {}
    for j in (i - 1, i, i + 1):
        if j >= 0:
            tens[j] = tensor_over_algebra(m_right, res.term(j))

    def boundary_rank(j):
        # rank of M (x) P_j -> M (x) P_{j-1}
        if j <= 0 or j not in tens or tens[j].dim == 0:
            return 0
        target = tens[j - 1]
        if target.dim == 0:
            return 0
        mat = tens[j].induced_from_right(res.dmap(j), target)
        return rank(mat)

    return tens[i].dim - boundary_rank(i) - boundary_rank(i + 1)


class SelfOrthogonality:
    """Verdict for Ext^{i>0}(M, M) = 0 with explicit certification."""

    __slots__ = ("holds", "certified", "checked_up_to", "witness_degree")

    def __init__(self, holds, certified, checked_up_to, witness_degree=None):
        self.holds = holds
        self.certified = certified
        self.checked_up_to = checked_up_to
        self.witness_degree = witness_degree

    def __repr__(self):
        state = "certified" if self.certified else "uncertified"
        return f"SelfOrthogonality({self.holds}, {state}, up to {self.checked_up_to})"


def is_self_orthogonal(m: ModuleRep, cap: int = 16) -> SelfOrthogonality:
    """Certified when pdim is finite (all degrees checked) or when a nonzero
    self-extension is found; otherwise an explicitly uncertified 'true so
    far'."""
    # a nonzero Ext^1 certifies failure without touching pdim
    if not m.is_zero() and ext(m, m, 1) != 0:
        return SelfOrthogonality(False, True, 1, witness_degree=1)
    pd = pdim(m, cap)
    bound = pd.n if pd.is_finite_exact else cap
    for i in range(2, bound + 1):
        if ext(m, m, i) != 0:
            return SelfOrthogonality(False, True, i, witness_degree=i)
    return SelfOrthogonality(True, pd.is_finite_exact, bound)
