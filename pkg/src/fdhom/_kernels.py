"""Hot elimination kernels over GF(p).

Two interchangeable implementations are kept side by side: numba-jitted
loops and a pure-numpy path.  The active backend is picked at import time;
set ``FDHOM_PURE_NUMPY=1`` to force the numpy path even when numba is
installed.  Both are exposed unconditionally (when available) so tests and
``benchmarks/bench_kernels.py`` can compare them directly.

All kernels work on int64 arrays with entries already reduced into [0, p).
"""

import os

import numpy as np

_FORCE_NUMPY = os.environ.get("FDHOM_PURE_NUMPY", "").strip() not in ("", "0")

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

BACKEND = "numba" if (HAVE_NUMBA and not _FORCE_NUMPY) else "numpy"


def _modinv_py(a, p):
    return pow(int(a), -1, p)


def rref_numpy(a, p):
    """Reduced row echelon form of ``a`` in place; returns (rank, pivot cols).

    Row operations are vectorised per pivot via an outer product, which is
    the best numpy can do without per-element loops.
    """
    rows, cols = a.shape
    piv = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        inv = _modinv_py(a[r, c], p)
        if inv != 1:
            a[r, c:] = a[r, c:] * inv % p
        other = np.nonzero(a[:, c])[0]
        other = other[other != r]
        if other.size:
            a[np.ix_(other, range(c, cols))] = (
                a[np.ix_(other, range(c, cols))]
                - np.outer(a[other, c], a[r, c:])
            ) % p
        piv.append(c)
        r += 1
    return r, np.asarray(piv, dtype=np.int64)


def charpoly_numpy(a, p):
    """Characteristic polynomial coefficients of ``a`` modulo p.

    Returns ``coeffs`` with ``coeffs[j]`` the coefficient of lambda^(n-j),
    so ``coeffs[0] == 1``.  Uses similarity reduction to Hessenberg form
    followed by the leading-minor recurrence; valid over any field.
    """
    h = a % p
    n = h.shape[0]
    for m in range(1, n - 1):
        nz = np.nonzero(h[m:, m - 1])[0]
        if nz.size == 0:
            continue
        i = m + int(nz[0])
        if i != m:
            h[[m, i]] = h[[i, m]]
            h[:, [m, i]] = h[:, [i, m]]
        inv = _modinv_py(h[m, m - 1], p)
        for k in range(m + 1, n):
            f = h[k, m - 1] * inv % p
            if f:
                h[k, :] = (h[k, :] - f * h[m, :]) % p
                h[:, m] = (h[:, m] + f * h[:, k]) % p
    # polys[m] = charpoly of leading m x m block, coefficients low degree last
    polys = [np.array([1], dtype=np.int64)]
    for m in range(1, n + 1):
        prev = polys[m - 1]
        cur = np.zeros(m + 1, dtype=np.int64)
        cur[:m] = (cur[:m] + prev) % p  # lambda * prev
        cur[1:] = (cur[1:] - h[m - 1, m - 1] * prev) % p
        run = 1
        for k in range(1, m):
            run = run * h[m - k, m - k - 1] % p
            term = run * h[m - k - 1, m - 1] % p
            if term:
                q = polys[m - k - 1]
                cur[m + 1 - q.size:] = (cur[m + 1 - q.size:] - term * q) % p
        polys.append(cur)
    return polys[n]


if HAVE_NUMBA:

    @njit(cache=True)
    def _modinv_nb(a, p):
        x0, x1 = 1, 0
        g0, g1 = a, p
        while g1 != 0:
            q = g0 // g1
            x0, x1 = x1, x0 - q * x1
            g0, g1 = g1, g0 - q * g1
        return x0 % p

    @njit(cache=True)
    def rref_numba(a, p):
        rows, cols = a.shape
        piv = np.empty(cols if cols < rows else rows, np.int64)
        r = 0
        for c in range(cols):
            if r == rows:
                break
            pr = -1
            for i in range(r, rows):
                if a[i, c] != 0:
                    pr = i
                    break
            if pr < 0:
                continue
            if pr != r:
                for j in range(cols):
                    t = a[r, j]
                    a[r, j] = a[pr, j]
                    a[pr, j] = t
            inv = _modinv_nb(a[r, c], p)
            if inv != 1:
                for j in range(c, cols):
                    a[r, j] = a[r, j] * inv % p
            for i in range(rows):
                if i != r and a[i, c] != 0:
                    f = a[i, c]
                    for j in range(c, cols):
                        a[i, j] = (a[i, j] - f * a[r, j]) % p
            piv[r] = c
            r += 1
        return r, piv[:r].copy()

    @njit(cache=True)
    def charpoly_numba(a, p):
        h = a % p
        n = h.shape[0]
        for m in range(1, n - 1):
            pr = -1
            for i in range(m, n):
                if h[i, m - 1] != 0:
                    pr = i
                    break
            if pr < 0:
                continue
            if pr != m:
                for j in range(n):
                    t = h[m, j]
                    h[m, j] = h[pr, j]
                    h[pr, j] = t
                for j in range(n):
                    t = h[j, m]
                    h[j, m] = h[j, pr]
                    h[j, pr] = t
            inv = _modinv_nb(h[m, m - 1], p)
            for k in range(m + 1, n):
                f = h[k, m - 1] * inv % p
                if f:
                    for j in range(n):
                        h[k, j] = (h[k, j] - f * h[m, j]) % p
                    for j in range(n):
                        h[j, m] = (h[j, m] + f * h[j, k]) % p
        polys = np.zeros((n + 1, n + 1), np.int64)
        polys[0, 0] = 1
        for m in range(1, n + 1):
            for j in range(m):
                polys[m, j] = polys[m - 1, j]
            for j in range(1, m + 1):
                polys[m, j] = (polys[m, j] - h[m - 1, m - 1] * polys[m - 1, j - 1]) % p
            run = 1
            for k in range(1, m):
                run = run * h[m - k, m - k - 1] % p
                term = run * h[m - k - 1, m - 1] % p
                if term:
                    off = k + 1  # align polys[m-k-1] (m-k coeffs) at the low end
                    for j in range(m - k):
                        polys[m, j + off] = (polys[m, j + off] - term * polys[m - k - 1, j]) % p
        return polys[n].copy()

else:  # pragma: no cover
    rref_numba = None
    charpoly_numba = None


if BACKEND == "numba":
    rref_inplace = rref_numba
    charpoly = charpoly_numba
else:
    rref_inplace = rref_numpy
    charpoly = charpoly_numpy

# Float64 matmul is exact while accumulated sums stay below 2^53.
_F64_SAFE = 2.0**53


def matmul_mod(a, b, p):
    """Exact ``(a @ b) % p`` on int64 inputs reduced mod p."""
    inner = a.shape[1]
    if inner == 0:
        return np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    if inner * float(p - 1) * float(p - 1) < _F64_SAFE:
        c = np.rint(a.astype(np.float64) @ b.astype(np.float64)).astype(np.int64)
        return c % p
    # large-p fallback: chunk the inner dimension so int64 cannot overflow
    step = max(1, int((2**62) // (int(p - 1) ** 2)))
    acc = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for k in range(0, inner, step):
        acc = (acc + a[:, k:k + step] @ b[k:k + step, :]) % p
    return acc


def warmup():
    """Trigger jit compilation of the active kernels (no-op on numpy path)."""
    a = np.array([[1, 1], [1, 0]], dtype=np.int64)
    rref_inplace(a.copy(), 3)
    charpoly(a.copy(), 3)
