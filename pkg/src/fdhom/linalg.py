"""Exact dense linear algebra over the prime field GF(p).

Everything downstream (algebras, modules, resolutions) reduces to rref,
kernels and solving on FpMatrix.  Arithmetic is exact; there are no
tolerances anywhere.
"""

import numpy as np

from . import _kernels


class ModulusMismatch(ValueError):
    """Raised when operands over different prime fields are combined."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


_CHECKED_MODULI = set()


def _check_modulus(p: int):
    if p in _CHECKED_MODULI:
        return
    if not is_prime(p):
        raise ValueError(f"modulus {p} is not prime")
    if p >= 2**31:
        raise ValueError(f"modulus {p} too large (need p < 2^31)")
    _CHECKED_MODULI.add(p)


class FpMatrix:
    """Immutable dense matrix over GF(p), entries stored as int64 in [0, p)."""

    __slots__ = ("a", "p")

    def __init__(self, data, p: int):
        _check_modulus(p)
        a = np.asarray(data, dtype=np.int64)
        if a.ndim != 2:
            raise ValueError(f"expected a 2-d array, got shape {a.shape}")
        a = a % p
        a.setflags(write=False)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "p", p)

    def __setattr__(self, name, value):
        raise AttributeError("FpMatrix is immutable")

    @classmethod
    def _wrap(cls, a, p):
        """Internal fast path: ``a`` is int64, already reduced mod p."""
        self = object.__new__(cls)
        if a.flags.writeable:
            a.setflags(write=False)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "p", p)
        return self

    # -- constructors -------------------------------------------------
    @classmethod
    def zeros(cls, rows: int, cols: int, p: int) -> "FpMatrix":
        return cls(np.zeros((rows, cols), dtype=np.int64), p)

    @classmethod
    def identity(cls, n: int, p: int) -> "FpMatrix":
        return cls(np.eye(n, dtype=np.int64), p)

    @classmethod
    def column(cls, vec, p: int) -> "FpMatrix":
        v = np.asarray(vec, dtype=np.int64).reshape(-1, 1)
        return cls(v, p)

    @classmethod
    def hstack(cls, mats, p=None):
        mats = list(mats)
        if not mats:
            raise ValueError("hstack of no matrices needs an explicit modulus")
        p = mats[0].p if p is None else p
        for m in mats:
            if m.p != p:
                raise ModulusMismatch(f"mixing GF({m.p}) with GF({p})")
        return cls(np.hstack([m.a for m in mats]), p)

    @classmethod
    def vstack(cls, mats, p=None):
        mats = list(mats)
        if not mats:
            raise ValueError("vstack of no matrices needs an explicit modulus")
        p = mats[0].p if p is None else p
        for m in mats:
            if m.p != p:
                raise ModulusMismatch(f"mixing GF({m.p}) with GF({p})")
        return cls(np.vstack([m.a for m in mats]), p)

    # -- basics --------------------------------------------------------
    @property
    def shape(self):
        return self.a.shape

    @property
    def rows(self) -> int:
        return self.a.shape[0]

    @property
    def cols(self) -> int:
        return self.a.shape[1]

    @property
    def T(self) -> "FpMatrix":
        return FpMatrix._wrap(self.a.T.copy(), self.p)

    def _coerce(self, other) -> "FpMatrix":
        if not isinstance(other, FpMatrix):
            raise TypeError(f"expected FpMatrix, got {type(other).__name__}")
        if other.p != self.p:
            raise ModulusMismatch(f"mixing GF({self.p}) with GF({other.p})")
        return other

    def __add__(self, other):
        other = self._coerce(other)
        return FpMatrix((self.a + other.a) % self.p, self.p)

    def __sub__(self, other):
        other = self._coerce(other)
        return FpMatrix((self.a - other.a) % self.p, self.p)

    def __neg__(self):
        return FpMatrix((-self.a) % self.p, self.p)

    def __mul__(self, scalar: int):
        return FpMatrix(self.a * (int(scalar) % self.p) % self.p, self.p)

    __rmul__ = __mul__

    def __matmul__(self, other):
        other = self._coerce(other)
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        return FpMatrix._wrap(_kernels.matmul_mod(self.a, other.a, self.p), self.p)

    def __eq__(self, other):
        if not isinstance(other, FpMatrix):
            return NotImplemented
        return self.p == other.p and self.shape == other.shape and np.array_equal(self.a, other.a)

    def __hash__(self):
        return hash((self.p, self.shape, self.a.tobytes()))

    def __repr__(self):
        return f"FpMatrix(GF({self.p}), {self.rows}x{self.cols})\n{self.a}"

    def is_zero(self) -> bool:
        return not self.a.any()

    def kron(self, other) -> "FpMatrix":
        other = self._coerce(other)
        return FpMatrix(np.kron(self.a, other.a) % self.p, self.p)

    def take_columns(self, idx) -> "FpMatrix":
        return FpMatrix._wrap(self.a[:, list(idx)], self.p)

    def take_rows(self, idx) -> "FpMatrix":
        return FpMatrix._wrap(self.a[list(idx), :], self.p)

    def vec(self) -> np.ndarray:
        """Row-major flattening as a plain int64 vector."""
        return self.a.reshape(-1)

    def tolist(self):
        return self.a.tolist()


# -- elimination ------------------------------------------------------

def rref(m: FpMatrix):
    """Reduced row echelon form and pivot column list."""
    work = np.array(m.a, dtype=np.int64)
    rank, piv = _kernels.rref_inplace(work, m.p)
    return FpMatrix(work, m.p), [int(c) for c in piv]


def rank(m: FpMatrix) -> int:
    work = np.array(m.a, dtype=np.int64)
    r, _ = _kernels.rref_inplace(work, m.p)
    return int(r)


def kernel_basis(m: FpMatrix) -> FpMatrix:
    """Columns form a basis of the right null space of m."""
    red, piv = rref(m)
    n = m.cols
    free = [j for j in range(n) if j not in set(piv)]
    out = np.zeros((n, len(free)), dtype=np.int64)
    for k, j in enumerate(free):
        out[j, k] = 1
        for r, c in enumerate(piv):
            out[c, k] = (-red.a[r, j]) % m.p
    return FpMatrix(out, m.p)


def solve(a: FpMatrix, b: FpMatrix):
    """Some X with a @ X == b, or None when the system is inconsistent.

    Free variables are set to zero, so the result is deterministic.
    """
    a._coerce(b)
    if a.rows != b.rows:
        raise ValueError(f"row mismatch: {a.shape} vs {b.shape}")
    aug = np.hstack([a.a, b.a])
    rk, piv = _kernels.rref_inplace(aug, a.p)
    na = a.cols
    piv = [int(c) for c in piv]
    if any(c >= na for c in piv):
        return None
    x = np.zeros((na, b.cols), dtype=np.int64)
    for r, c in enumerate(piv):
        x[c, :] = aug[r, na:]
    return FpMatrix(x, a.p)


def membership(v: FpMatrix, span: FpMatrix) -> bool:
    """Is each column of v inside the column span of ``span``?"""
    return solve(span, v) is not None


def column_space_basis(m: FpMatrix) -> FpMatrix:
    """Basis of the column space, picked from the original columns."""
    _, piv = rref(m)
    return m.take_columns(piv)


def extend_to_basis(cols: FpMatrix) -> FpMatrix:
    """Standard vectors completing the column span of ``cols`` to GF(p)^n.

    Returns the (n x (n - rank)) complement matrix whose columns are
    standard basis vectors at the non-pivot coordinates.
    """
    n = cols.rows
    _, piv = rref(cols.T)
    free = [j for j in range(n) if j not in set(piv)]
    out = np.zeros((n, len(free)), dtype=np.int64)
    for k, j in enumerate(free):
        out[j, k] = 1
    return FpMatrix(out, cols.p)


class QuotientSpace:
    """Coordinates for GF(p)^n / span(W): projection and a linear section.

    ``pi`` maps ambient vectors to quotient coordinates, ``section`` embeds
    quotient coordinates back (pi @ section = identity, pi kills span(W)).
    """

    __slots__ = ("dim", "pi", "section")

    def __init__(self, subspace: FpMatrix):
        n = subspace.rows
        p = subspace.p
        red, piv = rref(subspace.T)
        free = [j for j in range(n) if j not in set(piv)]
        self.dim = len(free)
        sec = np.zeros((n, self.dim), dtype=np.int64)
        pi = np.zeros((self.dim, n), dtype=np.int64)
        for k, j in enumerate(free):
            sec[j, k] = 1
            pi[k, j] = 1
        # subtract the row-space contribution at pivot coordinates
        if piv and free:
            pi[:, piv] = (-red.a[:len(piv), :][:, free].T) % p
        self.pi = FpMatrix(pi, p)
        self.section = FpMatrix(sec, p)


def backend_name() -> str:
    return _kernels.BACKEND
