"""Built-in algebra/module families and corpus enumeration.

Families: linear A_n quivers with interval modules, Nakayama algebras from
a Kupisch series with their uniserial modules, truncated polynomial rings
k[x]/(x^t) with the modules k[x]/(x^s).  Corpora are the base modules plus
direct sums within declared bounds.
"""

from dataclasses import dataclass, field
from itertools import combinations_with_replacement

import numpy as np

from .algebra import Algebra, AlgebraError, Quiver, build_path_algebra
from .modules import ModuleRep, direct_sum


class CatalogError(ValueError):
    pass


def quiver_module(alg: Algebra, side: str, dims_by_vertex, arrow_mats, name: str = "") -> ModuleRep:
    """Module over a quiver-presented algebra from vertex dimensions and
    per-arrow matrices.

    Left modules: the matrix of arrow a: s -> t has shape (dim_t, dim_s) and
    is applied first along a path.  Right modules: shape (dim_s, dim_t).
    The result is validated against the full action law.
    """
    if alg.quiver is None or alg.basis_paths is None:
        raise CatalogError("algebra carries no quiver presentation")
    q = alg.quiver
    p = alg.p
    dims = [int(dims_by_vertex.get(v, 0)) for v in q.vertices]
    offs = np.concatenate([[0], np.cumsum(dims)])
    n = int(offs[-1])

    glob = {}
    for aname, s, t in q.arrows:
        si, ti = q.vertex_index(s), q.vertex_index(t)
        want = (dims[ti], dims[si]) if side == "left" else (dims[si], dims[ti])
        mat = np.asarray(arrow_mats.get(aname, np.zeros(want, dtype=np.int64)), dtype=np.int64) % p
        if mat.shape != want:
            raise CatalogError(f"arrow {aname}: matrix shape {mat.shape}, expected {want}")
        g = np.zeros((n, n), dtype=np.int64)
        if side == "left":
            g[offs[ti]:offs[ti + 1], offs[si]:offs[si + 1]] = mat
        else:
            g[offs[si]:offs[si + 1], offs[ti]:offs[ti + 1]] = mat
        glob[aname] = g

    action = np.zeros((alg.dim, n, n), dtype=np.int64)
    for bi, (word, src) in enumerate(alg.basis_paths):
        if not word:
            vi = q.vertex_index(src)
            blk = np.zeros((n, n), dtype=np.int64)
            for k in range(offs[vi], offs[vi + 1]):
                blk[k, k] = 1
            action[bi] = blk
        else:
            if side == "left":
                rho = glob[word[0]]
                for aname in word[1:]:
                    rho = glob[aname] @ rho % p
            else:
                rho = glob[word[-1]]
                for aname in reversed(word[:-1]):
                    rho = glob[aname] @ rho % p
            action[bi] = rho
    return ModuleRep(alg, side, action, name=name, validate=True)


def table_module(alg: Algebra, side: str, dim: int, action_by_basis, name: str = "") -> ModuleRep:
    """Module over a table algebra from one n x n matrix per basis label."""
    p = alg.p
    action = np.zeros((alg.dim, dim, dim), dtype=np.int64)
    for i, lbl in enumerate(alg.labels):
        if lbl not in action_by_basis:
            raise CatalogError(f"missing action matrix for basis element {lbl!r}")
        mat = np.asarray(action_by_basis[lbl], dtype=np.int64) % p
        if mat.shape != (dim, dim):
            raise CatalogError(f"basis {lbl!r}: matrix shape {mat.shape}, expected {(dim, dim)}")
        action[i] = mat
    return ModuleRep(alg, side, action, name=name, validate=True)


# -- algebra families ---------------------------------------------------

def linear_an_algebra(n: int, p: int) -> Algebra:
    """Path algebra of the linear quiver 1 -> 2 -> ... -> n."""
    if n < 1:
        raise CatalogError("linear quiver needs at least one vertex")
    vertices = [str(i + 1) for i in range(n)]
    arrows = [(f"a{i + 1}", str(i + 1), str(i + 2)) for i in range(n - 1)]
    return build_path_algebra(Quiver(vertices, arrows), [], p, length_bound=n + 1)


def truncated_algebra(t: int, p: int) -> Algebra:
    """k[x]/(x^t); for t = 1 this is the ground field."""
    if t < 1:
        raise CatalogError("truncation degree must be positive")
    if t == 1:
        return build_path_algebra(Quiver(["1"], []), [], p, length_bound=2)
    q = Quiver(["1"], [("x", "1", "1")])
    return build_path_algebra(q, [[(1, ["x"] * t)]], p, length_bound=t + 1)


def validate_kupisch(series, cyclic: bool):
    series = [int(c) for c in series]
    n = len(series)
    if n == 0 or any(c < 1 for c in series):
        raise CatalogError(f"invalid Kupisch series {series}")
    if cyclic:
        if any(c < 2 for c in series):
            raise CatalogError(f"cyclic Kupisch series needs all entries >= 2: {series}")
        for i in range(n):
            if series[i] > series[(i + 1) % n] + 1:
                raise CatalogError(f"invalid Kupisch series {series}: entry {i} too large")
    else:
        if series[-1] != 1:
            raise CatalogError(f"linear Kupisch series must end in 1: {series}")
        for i in range(n - 1):
            if series[i] > series[i + 1] + 1:
                raise CatalogError(f"invalid Kupisch series {series}: entry {i} too large")
    return series


def nakayama_algebra(series, p: int, cyclic: bool = False) -> Algebra:
    """Nakayama algebra with the given Kupisch series (projective lengths)."""
    series = validate_kupisch(series, cyclic)
    n = len(series)
    vertices = [str(i + 1) for i in range(n)]
    arrows = []
    for i in range(n - 1):
        arrows.append((f"a{i + 1}", str(i + 1), str(i + 2)))
    if cyclic:
        arrows.append((f"a{n}", str(n), "1"))
    q = Quiver(vertices, arrows)

    def arrow_from(v):  # arrow leaving vertex index v, or None
        if v < n - 1:
            return f"a{v + 1}"
        return f"a{n}" if cyclic else None

    relations = []
    for i, c in enumerate(series):
        # kill the length-c path starting at vertex i when it exists
        path = []
        v = i
        ok = True
        for _ in range(c):
            a = arrow_from(v)
            if a is None:
                ok = False
                break
            path.append(a)
            v = (v + 1) % n
        if ok:
            relations.append([(1, path)])
    bound = max(series) + 1
    alg = build_path_algebra(q, relations, p, length_bound=bound)
    expected = sum(series)
    if alg.dim != expected:  # pragma: no cover - construction sanity
        raise CatalogError(f"Kupisch series {series}: got dimension {alg.dim}, expected {expected}")
    return alg


# -- module families -----------------------------------------------------

def interval_modules(alg: Algebra, side: str = "left"):
    """All interval representations of a linear A_n algebra."""
    n = len(alg.quiver.vertices)
    out = []
    for lo in range(n):
        for hi in range(lo, n):
            dims = {v: (1 if lo <= k <= hi else 0) for k, v in enumerate(alg.quiver.vertices)}
            action = {}
            for aname, s, t in alg.quiver.arrows:
                if dims[s] and dims[t]:
                    action[aname] = [[1]]
            out.append(quiver_module(alg, side, dims, action, name=f"I[{lo + 1},{hi + 1}]"))
    return out


def uniserial_modules(alg: Algebra, side: str = "left"):
    """k[x]/(x^s) for s = 1..t over a truncated polynomial algebra."""
    t = alg.dim
    out = []
    for s in range(1, t + 1):
        shift = np.zeros((s, s), dtype=np.int64)
        for k in range(s - 1):
            shift[k + 1, k] = 1
        action = {"x": shift if side == "left" else shift.T}
        if t == 1:
            action = {}
        out.append(quiver_module(alg, side, {"1": s}, action, name=f"M{s}"))
    return out


def nakayama_uniserials(alg: Algebra, series, cyclic: bool, side: str = "left"):
    """The standard uniserial modules P_i / rad^l for 1 <= l <= c_i."""
    n = len(series)
    q = alg.quiver
    out = []
    for i in range(n):
        for ell in range(1, series[i] + 1):
            verts = [(i + j) % n if cyclic else i + j for j in range(ell)]
            dims = {v: 0 for v in q.vertices}
            slot = []
            for j, v in enumerate(verts):
                vn = q.vertices[v]
                slot.append((vn, dims[vn]))
                dims[vn] += 1
            action = {}
            for aname, s, t in q.arrows:
                ds, dt = dims[s], dims[t]
                if ds and dt:
                    want = (dt, ds) if side == "left" else (ds, dt)
                    action[aname] = np.zeros(want, dtype=np.int64)
            for j in range(ell - 1):
                vn, row = slot[j]
                wn, col = slot[j + 1]
                aname = _arrow_between(q, vn, wn)
                if side == "left":
                    action[aname][col, row] = 1
                else:
                    action[aname][row, col] = 1
            out.append(quiver_module(alg, side, dims, action, name=f"U({i + 1},{ell})"))
    return out


def _arrow_between(q: Quiver, s, t):
    for aname, a, b in q.arrows:
        if a == s and b == t:
            return aname
    raise CatalogError(f"no arrow {s} -> {t}")  # pragma: no cover


# -- corpus enumeration ---------------------------------------------------

@dataclass(frozen=True)
class FamilySpec:
    """Parameters selecting a built-in family and its module bounds."""

    family: str  # "linear-An" | "nakayama-kupisch" | "truncated-polynomial"
    p: int
    n: int = 0
    kupisch: tuple = ()
    cyclic: bool = False
    t: int = 0
    max_total_dim: int = 5
    max_summands: int = 2
    side: str = "left"


def enumerate_corpus(spec: FamilySpec):
    """(algebra, modules): base family members plus bounded direct sums."""
    if spec.family == "linear-An":
        alg = linear_an_algebra(spec.n, spec.p)
        base = interval_modules(alg, spec.side)
    elif spec.family == "nakayama-kupisch":
        series = validate_kupisch(list(spec.kupisch), spec.cyclic)
        alg = nakayama_algebra(series, spec.p, spec.cyclic)
        base = nakayama_uniserials(alg, series, spec.cyclic, spec.side)
    elif spec.family == "truncated-polynomial":
        alg = truncated_algebra(spec.t, spec.p)
        base = uniserial_modules(alg, spec.side)
    else:
        raise CatalogError(f"unknown family {spec.family!r}")

    base = [m for m in base if m.dim <= spec.max_total_dim]
    modules = list(base)
    for k in range(2, spec.max_summands + 1):
        for combo in combinations_with_replacement(range(len(base)), k):
            total = sum(base[i].dim for i in combo)
            if 0 < total <= spec.max_total_dim:
                modules.append(direct_sum([base[i] for i in combo]))
    return alg, modules


# the shipped scan corpus: linear quivers up to A_4, Nakayama algebras of
# dimension <= 10, truncated polynomial rings up to degree 4, over GF(2)
# and GF(3)
SHIPPED_KUPISCH = [
    ((2, 1), False), ((2, 2, 1), False), ((3, 2, 1), False), ((2, 2, 2, 1), False),
    ((2, 2), True), ((3, 3), True), ((2, 2, 2), True), ((3, 2), True),
]


def standard_scan_families(primes=(2, 3), max_total_dim=5, max_summands=2):
    specs = []
    for p in primes:
        for n in (1, 2, 3, 4):
            specs.append(FamilySpec(family="linear-An", p=p, n=n,
                                    max_total_dim=max_total_dim,
                                    max_summands=max_summands))
        for series, cyclic in SHIPPED_KUPISCH:
            specs.append(FamilySpec(family="nakayama-kupisch", p=p, kupisch=series,
                                    cyclic=cyclic, max_total_dim=max_total_dim,
                                    max_summands=max_summands))
        for t in (1, 2, 3, 4):
            specs.append(FamilySpec(family="truncated-polynomial", p=p, t=t,
                                    max_total_dim=max_total_dim,
                                    max_summands=max_summands))
    return specs
