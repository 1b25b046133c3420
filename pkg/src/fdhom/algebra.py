"""Finite-dimensional associative algebras over GF(p).

Algebras are built either from a quiver presentation (basis = irreducible
paths under rewriting by the relations) or from a raw structure-constant
table.  Every algebra carries a distinguished complete set of orthogonal
idempotents; quiver algebras use the vertex idempotents, table algebras
default to {1}.

Multiplication convention: ``a * b`` means "apply b first, then a", i.e.
path concatenation composes right to left, matching composition of maps.
Input files list the arrows of a path in traversal order (first arrow
first).
"""

import numpy as np

from . import _kernels
from .linalg import (
    FpMatrix,
    QuotientSpace,
    column_space_basis,
    is_prime,
    kernel_basis,
    membership,
    rank,
    rref,
    solve,
)


class AlgebraError(ValueError):
    pass


class PresentationError(AlgebraError):
    """Quiver presentation could not be completed to a finite basis."""


class Quiver:
    """A finite quiver: named vertices and named arrows between them."""

    __slots__ = ("vertices", "arrows")

    def __init__(self, vertices, arrows):
        self.vertices = tuple(str(v) for v in vertices)
        self.arrows = tuple((str(n), str(s), str(t)) for (n, s, t) in arrows)
        if len(set(self.vertices)) != len(self.vertices):
            raise AlgebraError("duplicate vertex names")
        names = [a[0] for a in self.arrows]
        if len(set(names)) != len(names):
            raise AlgebraError("duplicate arrow names")
        if set(names) & set(self.vertices):
            raise AlgebraError("arrow and vertex names must be distinct")
        vs = set(self.vertices)
        for n, s, t in self.arrows:
            if s not in vs or t not in vs:
                raise AlgebraError(f"arrow {n}: undeclared endpoint {s if s not in vs else t}")

    def arrow(self, name):
        for a in self.arrows:
            if a[0] == name:
                return a
        raise AlgebraError(f"unknown arrow {name!r}")

    def vertex_index(self, name):
        return self.vertices.index(name)


class Relation:
    """A linear combination of parallel paths of length >= 2, set to zero."""

    __slots__ = ("terms",)

    def __init__(self, terms, quiver: Quiver, p: int):
        cleaned = []
        src = tgt = None
        for coeff, path in terms:
            coeff = int(coeff) % p
            path = tuple(str(a) for a in path)
            if len(path) < 2:
                raise AlgebraError(f"non-admissible relation: path {path} has length < 2")
            for k in range(len(path) - 1):
                if quiver.arrow(path[k])[2] != quiver.arrow(path[k + 1])[1]:
                    raise AlgebraError(f"path {path} is not composable at step {k}")
            s, t = quiver.arrow(path[0])[1], quiver.arrow(path[-1])[2]
            if src is None:
                src, tgt = s, t
            elif (s, t) != (src, tgt):
                raise AlgebraError("relation mixes paths with different endpoints")
            if coeff:
                cleaned.append((coeff, path))
        self.terms = tuple(cleaned)


class RadicalIdeal:
    """Basis of the Jacobson radical J(A) plus its verified nilpotency index."""

    __slots__ = ("basis", "nilpotency_index")

    def __init__(self, basis: FpMatrix, nilpotency_index: int):
        self.basis = basis
        self.nilpotency_index = nilpotency_index

    @property
    def dim(self) -> int:
        return self.basis.cols


class Algebra:
    """Associative unital algebra by structure constants over GF(p).

    ``table[i, j, :]`` holds the coordinates of basis_i * basis_j.
    """

    __slots__ = (
        "p", "dim", "labels", "table", "unit", "idempotents",
        "path_lengths", "quiver", "basis_paths",
        "_op", "_radical", "_left_mult", "_right_mult", "_regular", "_injcogen",
    )

    def __init__(self, p, labels, table, unit, idempotents, *,
                 path_lengths=None, quiver=None, basis_paths=None, validate=True):
        if not is_prime(p):
            raise AlgebraError(f"characteristic {p} is not prime")
        self.p = int(p)
        self.labels = tuple(str(x) for x in labels)
        self.dim = len(self.labels)
        table = np.asarray(table, dtype=np.int64) % p
        if table.shape != (self.dim, self.dim, self.dim):
            raise AlgebraError(f"structure constants have shape {table.shape}")
        table.setflags(write=False)
        self.table = table
        unit = np.asarray(unit, dtype=np.int64) % p
        unit.setflags(write=False)
        self.unit = unit
        self.idempotents = tuple(np.asarray(e, dtype=np.int64) % p for e in idempotents)
        for e in self.idempotents:
            e.setflags(write=False)
        self.path_lengths = None if path_lengths is None else np.asarray(path_lengths, dtype=np.int64)
        self.quiver = quiver
        self.basis_paths = basis_paths
        self._op = None
        self._radical = None
        self._left_mult = None
        self._right_mult = None
        self._regular = {}
        self._injcogen = {}
        if validate:
            self._validate()

    # -- construction helpers -----------------------------------------
    def left_mult_matrices(self) -> np.ndarray:
        """L[i] = matrix of left multiplication by basis_i (d x d)."""
        if self._left_mult is None:
            lm = np.transpose(self.table, (0, 2, 1)).copy()  # L[i][:, j] = table[i, j, :]
            lm.setflags(write=False)
            self._left_mult = lm
        return self._left_mult

    def right_mult_matrices(self) -> np.ndarray:
        """R[i] = matrix of right multiplication by basis_i (d x d)."""
        if self._right_mult is None:
            rm = np.transpose(self.table, (1, 2, 0)).copy()  # R[i][:, j] = table[j, i, :]
            rm.setflags(write=False)
            self._right_mult = rm
        return self._right_mult

    def multiply(self, u, v) -> np.ndarray:
        """Product of two coordinate vectors."""
        u = np.asarray(u, dtype=np.int64) % self.p
        v = np.asarray(v, dtype=np.int64) % self.p
        return np.einsum("i,j,ijl->l", u, v, self.table) % self.p

    def element_matrix(self, coords, side="left") -> FpMatrix:
        mats = self.left_mult_matrices() if side == "left" else self.right_mult_matrices()
        coords = np.asarray(coords, dtype=np.int64) % self.p
        return FpMatrix(np.tensordot(coords, mats, axes=(0, 0)) % self.p, self.p)

    def _validate(self):
        p, d, c = self.p, self.dim, self.table
        if d == 0:
            raise AlgebraError("zero-dimensional algebra is not unital")
        lm = self.left_mult_matrices()
        # associativity: L[i] @ L[j] must equal the left-mult matrix of b_i b_j
        for i in range(d):
            li = lm[i]
            for j in range(d):
                lhs = _kernels.matmul_mod(li, lm[j], p)
                rhs = np.tensordot(c[i, j], lm, axes=(0, 0)) % p
                if not np.array_equal(lhs, rhs):
                    k = _first_assoc_witness(lhs, rhs, p)
                    raise AlgebraError(
                        f"associativity fails: ({self.labels[i]}*{self.labels[j]})*{self.labels[k]}"
                        f" != {self.labels[i]}*({self.labels[j]}*{self.labels[k]})")
        # unit axioms
        u = self.unit
        if not np.array_equal(np.tensordot(u, lm, axes=(0, 0)) % p, np.eye(d, dtype=np.int64)):
            raise AlgebraError("unit fails 1*b = b")
        rm = self.right_mult_matrices()
        if not np.array_equal(np.tensordot(u, rm, axes=(0, 0)) % p, np.eye(d, dtype=np.int64)):
            raise AlgebraError("unit fails b*1 = b")
        # idempotent axioms
        for a, ea in enumerate(self.idempotents):
            if not np.array_equal(self.multiply(ea, ea), ea % p):
                raise AlgebraError(f"idempotent {a} is not idempotent")
            for b, eb in enumerate(self.idempotents):
                if a != b and self.multiply(ea, eb).any():
                    raise AlgebraError(f"idempotents {a}, {b} are not orthogonal")
        total = np.zeros(d, dtype=np.int64)
        for ea in self.idempotents:
            total = (total + ea) % p
        if not np.array_equal(total, self.unit):
            raise AlgebraError("idempotents do not sum to the unit")

    # -- derived structure --------------------------------------------
    def opposite(self) -> "Algebra":
        """Same space, reversed multiplication; unit and idempotents kept."""
        if self._op is None:
            op = Algebra(
                self.p, self.labels, np.transpose(self.table, (1, 0, 2)),
                self.unit, self.idempotents,
                path_lengths=self.path_lengths, validate=False)
            op._op = self
            self._op = op
        return self._op

    def radical(self) -> RadicalIdeal:
        """Jacobson radical; graded span for quiver algebras, trace forms else.

        The result is always verified: J must be a nilpotent two-sided ideal
        and A/J must have zero computed radical.  Failure aborts, since a
        wrong radical would silently corrupt every minimal cover downstream.
        """
        if self._radical is None:
            if self.path_lengths is not None:
                idx = [i for i in range(self.dim) if self.path_lengths[i] >= 1]
                basis = np.zeros((self.dim, len(idx)), dtype=np.int64)
                for k, i in enumerate(idx):
                    basis[i, k] = 1
                j = FpMatrix(basis, self.p)
                nil = _nilpotency_index(self, j)
                if nil is None:  # pragma: no cover - admissibility guarantees this
                    raise AlgebraError("graded radical is not nilpotent")
                self._radical = RadicalIdeal(j, nil)
            else:
                j = radical_by_trace_forms(self)
                nil = _nilpotency_index(self, j)
                if nil is None:
                    raise AlgebraError("radical verification failed: not nilpotent")
                if not _is_two_sided_ideal(self, j):
                    raise AlgebraError("radical verification failed: not an ideal")
                quot, _, _ = quotient_algebra(self, j)
                if radical_by_trace_forms(quot).cols != 0:
                    raise AlgebraError("radical verification failed: quotient not semisimple")
                self._radical = RadicalIdeal(j, nil)
        return self._radical

    def generator_indices(self):
        """A small set of basis indices generating A as a unital algebra.

        Intertwining constraints for these indices imply the constraints for
        every basis element.  Quiver algebras use the paths of length <= 1;
        table algebras use a greedy closure.
        """
        if "gens" not in self._regular:
            if self.path_lengths is not None:
                gens = [i for i in range(self.dim) if self.path_lengths[i] <= 1]
            else:
                gens = self._greedy_generators()
            self._regular["gens"] = gens
        return self._regular["gens"]

    def _greedy_generators(self):
        p, d = self.p, self.dim
        gens = []
        span = FpMatrix.column(self.unit, p)
        for i in range(d):
            e = np.zeros(d, dtype=np.int64)
            e[i] = 1
            if membership(FpMatrix.column(e, p), span):
                continue
            gens.append(i)
            # close the span under right multiplication by the generators
            while True:
                cols = [span.a]
                for g in gens:
                    rg = self.element_matrix(
                        np.eye(d, dtype=np.int64)[g], side="right")
                    cols.append((rg @ span).a)
                bigger = column_space_basis(FpMatrix(np.hstack(cols), p))
                if bigger.cols == span.cols:
                    break
                span = bigger
        return gens

    def digest(self):
        return (self.p, self.dim, self.table.tobytes(), self.unit.tobytes())

    def __eq__(self, other):
        if not isinstance(other, Algebra):
            return NotImplemented
        return self.digest() == other.digest()

    def __hash__(self):
        return hash(self.digest())

    def __repr__(self):
        return f"Algebra(GF({self.p}), dim {self.dim})"


def _first_assoc_witness(lhs, rhs, p):
    """Column where L_i L_j and L_(b_i b_j) disagree = offending third factor."""
    diff = np.nonzero((lhs - rhs) % p)
    return int(diff[1][0])


# -- table construction ------------------------------------------------

def build_table_algebra(p, labels, products, unit, idempotents=None) -> Algebra:
    """Validated algebra from an explicit multiplication table.

    ``products[i][j]`` is the coordinate vector of basis_i * basis_j.  When
    no idempotent list is given, {1} is used.
    """
    table = np.asarray(products, dtype=np.int64)
    unit = np.asarray(unit, dtype=np.int64)
    if idempotents is None:
        idempotents = [unit]
    return Algebra(p, labels, table, unit, idempotents)


# -- path algebra construction ------------------------------------------

def _path_source(word, quiver):
    return word[1] if not word[0] else quiver.arrow(word[0][0])[1]


class _Rewriter:
    """Length-lex rewriting system from admissible relations.

    Words are tuples of arrow names in traversal order.  Each rule maps its
    leading word (the length-lex largest path of a relation) to a combination
    of smaller words, so rewriting terminates; a step bound guards anyway.
    """

    def __init__(self, quiver, relations, p, step_bound=100_000):
        self.quiver = quiver
        self.p = p
        self.step_bound = step_bound
        self.arrow_order = {a[0]: k for k, a in enumerate(quiver.arrows)}
        rules = {}
        pending = [dict(((tuple(path), int(c) % p) for c, path in rel.terms)) for rel in relations]
        pending = [t for t in pending if any(v % p for v in t.values())]
        while pending:
            terms = pending.pop()
            terms = {w: c % p for w, c in terms.items() if c % p}
            if not terms:
                continue
            lead = max(terms, key=self._word_key)
            inv = pow(terms[lead], -1, p)
            rest = {w: (-c * inv) % p for w, c in terms.items() if w != lead}
            if lead in rules:
                # same leading word twice: subtract and re-normalise
                diff = dict(rules[lead])
                for w, c in rest.items():
                    diff[w] = (diff.get(w, 0) - c) % p
                pending.append(diff)
            else:
                rules[lead] = rest
        self.rules = rules
        self.lead_lengths = sorted({len(w) for w in rules}) if rules else []

    def _word_key(self, word):
        return (len(word), tuple(self.arrow_order[a] for a in word))

    def is_reducible(self, word):
        for ln in self.lead_lengths:
            if ln > len(word):
                break
            for s in range(len(word) - ln + 1):
                if word[s:s + ln] in self.rules:
                    return True
        return False

    def _find_redex(self, word):
        for s in range(len(word)):
            for ln in self.lead_lengths:
                if s + ln > len(word):
                    break
                if word[s:s + ln] in self.rules:
                    return s, ln
        return None

    def normal_form(self, word):
        """Rewrite a single word to a dict {irreducible word: coefficient}."""
        result = {}
        work = [(word, 1)]
        steps = 0
        while work:
            w, c = work.pop()
            hit = self._find_redex(w)
            if hit is None:
                result[w] = (result.get(w, 0) + c) % self.p
                continue
            steps += 1
            if steps > self.step_bound:
                raise PresentationError(
                    "rewriting failed to terminate within bound; "
                    "possibly infinite-dimensional or non-confluent presentation")
            s, ln = hit
            rep = self.rules[w[s:s + ln]]
            for sub, sc in rep.items():
                work.append((w[:s] + sub + w[s + ln:], c * sc % self.p))
        return {w: c for w, c in result.items() if c}


def build_path_algebra(quiver: Quiver, relations, p: int, length_bound: int = 16) -> Algebra:
    """Path algebra of the quiver modulo admissible relations.

    Basis: irreducible paths ordered by length then lexicographically (arrow
    declaration order).  Structure constants come from concatenation followed
    by exhaustive rewriting.  Raises PresentationError when irreducible paths
    still exist at the length bound (possibly infinite-dimensional) and
    reports confluence failures found by the associativity check.
    """
    rels = [r if isinstance(r, Relation) else Relation(r, quiver, p) for r in relations]
    rw = _Rewriter(quiver, rels, p)

    # paths carried as (word of arrow names, source vertex)
    trivial = [((), v) for v in quiver.vertices]
    levels = [trivial]
    while True:
        cur = levels[-1]
        if not cur:
            break
        if len(levels) - 1 >= length_bound:
            raise PresentationError(
                f"irreducible paths of length {length_bound} exist; "
                "possibly infinite-dimensional or non-confluent presentation")
        nxt = []
        for word, src in cur:
            end = src if not word else quiver.arrow(word[-1])[2]
            for name, s, t in quiver.arrows:
                if s != end:
                    continue
                w2 = word + (name,)
                if not rw.is_reducible(w2):
                    nxt.append((w2, src))
        levels.append(nxt)

    basis = [pth for lvl in levels for pth in lvl]
    # nonempty words are globally unique; trivial paths live at indices 0..#vertices-1
    order = {w: k for k, (w, _) in enumerate(basis) if w}
    d = len(basis)

    def basis_index(w, src):
        if not w:
            return quiver.vertices.index(src)
        if w not in order:
            raise PresentationError(
                f"normal form {w} escapes the computed basis; non-confluent presentation")
        return order[w]

    table = np.zeros((d, d, d), dtype=np.int64)
    tgt = [src if not w else quiver.arrow(w[-1])[2] for (w, src) in basis]
    srcs = [src for (_, src) in basis]
    for j, (wj, sj) in enumerate(basis):  # right factor acts first
        for i, (wi, si) in enumerate(basis):
            if tgt[j] != srcs[i]:
                continue
            nf = rw.normal_form(wj + wi)
            vec = np.zeros(d, dtype=np.int64)
            for w, c in nf.items():
                vec[basis_index(w, sj)] = c
            table[i, j] = vec

    labels = []
    for w, src in basis:
        labels.append(f"e_{src}" if not w else "*".join(reversed(w)))
    unit = np.zeros(d, dtype=np.int64)
    idems = []
    for v in quiver.vertices:
        e = np.zeros(d, dtype=np.int64)
        e[quiver.vertices.index(v)] = 1
        idems.append(e)
        unit[quiver.vertices.index(v)] = 1
    lengths = [len(w) for (w, _) in basis]

    try:
        alg = Algebra(p, labels, table, unit, idems,
                      path_lengths=lengths, quiver=quiver, basis_paths=tuple(basis))
    except AlgebraError as exc:
        raise PresentationError(f"non-confluent presentation: {exc}") from exc
    return alg


# -- radical machinery ---------------------------------------------------

def radical_by_trace_forms(alg: Algebra) -> FpMatrix:
    """Radical of a GF(p)-algebra by iterated modified trace forms.

    Works on the regular representation.  Level k uses the p^k-th elementary
    symmetric function of eigenvalues (a characteristic polynomial
    coefficient); on the previous level's kernel these forms are additive,
    and after all levels with p^k <= dim the common kernel is J(A).
    """
    d, p = alg.dim, alg.p
    lm = alg.left_mult_matrices()
    current = np.eye(d, dtype=np.int64)
    k = 0
    while p**k <= d and current.shape[1] > 0:
        r = current.shape[1]
        mats = [np.tensordot(current[:, s], lm, axes=(0, 0)) % p for s in range(r)]
        t = np.zeros((r, r), dtype=np.int64)
        e_index = p**k
        for yt in range(r):
            for xs in range(r):
                prod = _kernels.matmul_mod(mats[xs], mats[yt], p)
                if e_index == 1:
                    val = int(np.trace(prod) % p)
                else:
                    coeffs = _kernels.charpoly(prod, p)
                    val = int(coeffs[e_index]) * (-1) ** e_index % p
                t[yt, xs] = val
        ker = kernel_basis(FpMatrix(t, p))
        current = (current @ ker.a) % p
        k += 1
    return FpMatrix(current, p)


def _nilpotency_index(alg: Algebra, basis: FpMatrix):
    """Smallest m with J^m = 0, or None if J is not nilpotent."""
    if basis.cols == 0:
        return 1
    p = alg.p
    power = basis
    for m in range(2, alg.dim + 2):
        prods = []
        for s in range(power.cols):
            for t in range(basis.cols):
                prods.append(alg.multiply(power.a[:, s], basis.a[:, t]))
        mat = FpMatrix(np.array(prods).T if prods else np.zeros((alg.dim, 0)), p)
        power = column_space_basis(mat)
        if power.cols == 0:
            return m
    return None


def _is_two_sided_ideal(alg: Algebra, basis: FpMatrix) -> bool:
    for i in range(alg.dim):
        e = np.zeros(alg.dim, dtype=np.int64)
        e[i] = 1
        for s in range(basis.cols):
            x = basis.a[:, s]
            left = FpMatrix.column(alg.multiply(e, x), alg.p)
            right = FpMatrix.column(alg.multiply(x, e), alg.p)
            if not membership(left, basis) or not membership(right, basis):
                return False
    return True


def quotient_algebra(alg: Algebra, ideal_basis: FpMatrix):
    """A / I for a two-sided ideal: returns (quotient, projection, section)."""
    q = QuotientSpace(ideal_basis)
    d2 = q.dim
    p = alg.p
    table = np.zeros((d2, d2, d2), dtype=np.int64)
    reps = q.section.a
    for i in range(d2):
        for j in range(d2):
            prod = alg.multiply(reps[:, i], reps[:, j])
            table[i, j] = (q.pi.a @ prod) % p
    unit = (q.pi.a @ alg.unit) % p
    idems = []
    for e in alg.idempotents:
        ebar = (q.pi.a @ e) % p
        if ebar.any():
            idems.append(ebar)
    if not idems:
        idems = [unit]
    labels = [f"q{i}" for i in range(d2)]
    quot = Algebra(p, labels, table, unit, idems, validate=False)
    return quot, q.pi, q.section
