"""Rank <= 5 normed lattices: minima, duals, reduction, transference.

Basis vectors are rows of a nonsingular rational matrix.  Norms are either
Euclidean (an ambient positive-definite rational Gram form) or polytope
(Minkowski functional of a centrally symmetric vertex list).  All reported
quantities are exact: Euclidean minima as squared rationals, polytope minima
as rationals.

Enumeration is exact Fincke-Pohst over Fractions with integer range bounds
derived from integer square roots; an exact LLL pass keeps the search tree
small.  For polytope norms the search region comes from an inscribed
ellipsoid whose sandwich certificate (E inside the ball, ball inside
sqrt(r) E) is verified in rational arithmetic; the ellipsoid itself may be
found by floating-point iteration since only the certificate matters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import (BoundViolated, EuclideanizationFailed, PreconditionUnmet,
                     RankTooLarge)

MAX_RANK = 5


# ---------------------------------------------------------------------------
# small exact linear algebra
# ---------------------------------------------------------------------------


def _mat(rows):
    return [[Fraction(x) for x in row] for row in rows]


def _identity(r):
    return [[Fraction(1 if i == j else 0) for j in range(r)] for i in range(r)]


def _mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    out = [[Fraction(0)] * m for _ in range(n)]
    for i in range(n):
        for l in range(k):
            ail = a[i][l]
            if not ail:
                continue
            for j in range(m):
                out[i][j] += ail * b[l][j]
    return out


def _transpose(a):
    return [list(col) for col in zip(*a)]


def _mat_inv(a):
    n = len(a)
    aug = [list(row) + [Fraction(1 if i == j else 0) for j in range(n)]
           for i, row in enumerate(_mat(a))]
    for col in range(n):
        pivot = next((i for i in range(col, n) if aug[i][col]), None)
        if pivot is None:
            raise PreconditionUnmet("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col]:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    return [row[n:] for row in aug]


def _det(a):
    a = _mat(a)
    n = len(a)
    det = Fraction(1)
    for col in range(n):
        pivot = next((i for i in range(col, n) if a[i][col]), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        inv = Fraction(1) / a[col][col]
        for i in range(col + 1, n):
            if a[i][col]:
                f = a[i][col] * inv
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return det


def _is_positive_definite(g):
    n = len(g)
    for i in range(n):
        for j in range(n):
            if g[i][j] != g[j][i]:
                return False
    for k in range(1, n + 1):
        minor = [row[:k] for row in g[:k]]
        if _det(minor) <= 0:
            return False
    return True


def _quad(g, x):
    n = len(x)
    total = Fraction(0)
    for i in range(n):
        if not x[i]:
            continue
        for j in range(n):
            if x[j]:
                total += x[i] * g[i][j] * x[j]
    return total


def _gram_of_basis(basis, form):
    bg = _mat_mul(_mat(basis), _mat(form))
    return _mat_mul(bg, _transpose(_mat(basis)))


# ---------------------------------------------------------------------------
# the lattice type
# ---------------------------------------------------------------------------


@dataclass
class NormedLattice:
    """A rank-r lattice with a Euclidean or polytope norm.

    ``basis`` rows generate the lattice in ambient coordinates.  Exactly one
    of ``gram`` (ambient Euclidean form) and ``vertices`` (unit-ball vertex
    list, closed under negation) must be given.
    """

    basis: list
    gram: list | None = None
    vertices: list | None = None

    def __post_init__(self):
        self.basis = _mat(self.basis)
        r = len(self.basis)
        if r > MAX_RANK:
            raise RankTooLarge("rank %d exceeds the desk-scale cap %d"
                               % (r, MAX_RANK))
        if any(len(row) != r for row in self.basis):
            raise PreconditionUnmet("basis must be a square matrix")
        if _det(self.basis) == 0:
            raise PreconditionUnmet("basis must be nonsingular")
        if (self.gram is None) == (self.vertices is None):
            raise PreconditionUnmet("give exactly one of gram and vertices")
        if self.gram is not None:
            self.gram = _mat(self.gram)
            if not _is_positive_definite(self.gram):
                raise PreconditionUnmet(
                    "the Euclidean form must be symmetric positive-definite "
                    "(leading principal minors positive)")
            self._normals = None
        else:
            self.vertices = [[Fraction(x) for x in v] for v in self.vertices]
            vset = {tuple(v) for v in self.vertices}
            if {tuple(-x for x in v) for v in self.vertices} != vset:
                raise PreconditionUnmet(
                    "polytope vertex list must be closed under negation")
            self._normals = _facet_normals(self.vertices, r)
        self._euclid_form_cache = None

    # -- norms ------------------------------------------------------------

    @property
    def rank(self):
        return len(self.basis)

    @property
    def kind(self):
        return "euclidean" if self.gram is not None else "polytope"

    def lattice_gram(self):
        """Gram matrix of the basis vectors (Euclidean norm only)."""
        if self.gram is None:
            raise PreconditionUnmet("polytope lattices have no Gram matrix")
        return _gram_of_basis(self.basis, self.gram)

    def vector(self, coeffs):
        """Ambient coordinates of an integer coefficient vector."""
        r = self.rank
        return [sum(Fraction(coeffs[i]) * self.basis[i][j] for i in range(r))
                for j in range(r)]

    def norm_sq(self, ambient_vec):
        if self.gram is None:
            raise PreconditionUnmet("polytope norms are not squared-rational")
        return _quad(self.gram, [Fraction(x) for x in ambient_vec])

    def norm(self, ambient_vec):
        """Exact polytope norm (Minkowski functional)."""
        if self._normals is None:
            raise PreconditionUnmet("Euclidean norms are reported squared")
        v = [Fraction(x) for x in ambient_vec]
        return max(sum(a * x for a, x in zip(normal, v))
                   for normal in self._normals)

    def euclidean_form(self):
        """An ambient quadratic form comparable to the norm.

        Euclidean lattices return their own form.  Polytope lattices return a
        certified inscribed-ellipsoid form Q with
        (1/sqrt(r)) |v|_Q <= ||v|| <= |v|_Q.
        """
        if self.gram is not None:
            return self.gram
        if self._euclid_form_cache is None:
            self._euclid_form_cache = _certified_ellipsoid_form(
                self.vertices, self._normals, self.rank)
        return self._euclid_form_cache


# ---------------------------------------------------------------------------
# polytopes: facets and inscribed ellipsoid
# ---------------------------------------------------------------------------


def _solve_linear(rows, rhs):
    n = len(rows)
    aug = [list(map(Fraction, row)) + [Fraction(rhs[i])] for i, row in enumerate(rows)]
    for col in range(n):
        pivot = next((i for i in range(col, n) if aug[i][col]), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = Fraction(1) / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for i in range(n):
            if i != col and aug[i][col]:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[col])]
    return [aug[i][n] for i in range(n)]


def _facet_normals(vertices, r):
    """Supporting functionals a with <a, v> <= 1, exhaustively at rank <= 5."""
    normals = set()
    for subset in combinations(range(len(vertices)), r):
        rows = [vertices[i] for i in subset]
        a = _solve_linear(rows, [1] * r)
        if a is None:
            continue
        if all(sum(ai * vi for ai, vi in zip(a, v)) <= 1 for v in vertices):
            normals.add(tuple(a))
    if not normals:
        raise PreconditionUnmet("polytope is not full-dimensional")
    span = [list(a) for a in normals]
    if len(span) < r or _rank_of(span) < r:
        raise PreconditionUnmet("polytope is not full-dimensional")
    return sorted(normals)


def _certified_ellipsoid_form(vertices, normals, r):
    """Rational PD form Q with E_Q inside K inside sqrt(r) E_Q.

    A floating-point Frank-Wolfe iteration fits the minimal enclosing
    ellipsoid of the polar vertex set (the facet normals); the result is
    rationalized, rescaled so E_Q is exactly inscribed, and the sqrt(r)
    containment is then checked exactly on the vertices.
    """
    import numpy as np

    pts = np.array([[float(x) for x in a] for a in normals], dtype=float)
    m = len(normals)
    u = np.full(m, 1.0 / m)
    for rounds in range(6):
        for _ in range(400 * (rounds + 1)):
            mform = pts.T @ (pts * u[:, None])
            try:
                minv = np.linalg.inv(mform)
            except np.linalg.LinAlgError:
                raise EuclideanizationFailed("polar vertex set is degenerate")
            kappa = np.einsum("ij,jk,ik->i", pts, minv, pts)
            j = int(np.argmax(kappa))
            kmax = kappa[j]
            if kmax <= r * (1.0 + 1e-12):
                break
            step = (kmax - r) / (r * (kmax - 1.0))
            u *= (1.0 - step)
            u[j] += step
        mform = pts.T @ (pts * u[:, None])
        w_float = np.linalg.inv(mform) / r  # enclosing form of the polar set
        limit = 10 ** (6 + 2 * rounds)
        w = [[Fraction(float(w_float[i][j])).limit_denominator(limit)
              for j in range(r)] for i in range(r)]
        w = [[(w[i][j] + w[j][i]) / 2 for j in range(r)] for i in range(r)]
        scale = max(_quad(w, list(a)) for a in normals)
        if scale <= 0:
            continue
        w = [[x / scale for x in row] for row in w]
        if not _is_positive_definite(w):
            continue
        q = _mat_inv(w)
        # certificate: every vertex satisfies v^T Q v <= r
        if all(_quad(q, v) <= r for v in vertices):
            return q
    raise EuclideanizationFailed(
        "no inscribed ellipsoid with a sqrt(r) sandwich certificate found")


# ---------------------------------------------------------------------------
# exact enumeration
# ---------------------------------------------------------------------------


def _decompose(g):
    """g = U^T D U with U unit upper triangular, D positive diagonal."""
    r = len(g)
    d = [Fraction(0)] * r
    u = [[Fraction(0)] * r for _ in range(r)]
    for i in range(r):
        u[i][i] = Fraction(1)
        d[i] = g[i][i] - sum(d[k] * u[k][i] ** 2 for k in range(i))
        if d[i] <= 0:
            raise PreconditionUnmet("form is not positive definite")
        for j in range(i + 1, r):
            u[i][j] = (g[i][j] - sum(d[k] * u[k][i] * u[k][j] for k in range(i))) / d[i]
    return d, u


def _floor_sqrt(value: Fraction) -> int:
    if value < 0:
        return -1
    return math.isqrt(value.numerator // value.denominator)


def _int_range(center: Fraction, budget: Fraction):
    """Integers x with (x + center)^2 <= budget."""
    if budget < 0:
        return range(0, 0)
    p, q = center.numerator, center.denominator
    w = _floor_sqrt(budget * q * q)
    lo = -(p + w)
    hi = w - p
    return range(-((-lo) // q) if lo < 0 else (lo + q - 1) // q, hi // q + 1)


def enumerate_short_vectors(gram, bound: Fraction):
    """All nonzero x in Z^r with x^T G x <= bound, one per +-pair."""
    r = len(gram)
    d, u = _decompose(gram)
    out = []
    coords = [0] * r

    def descend(level, remaining):
        if level < 0:
            if any(coords):
                vec = list(coords)
                for x in vec:
                    if x > 0:
                        out.append((tuple(vec), bound - remaining))
                        break
                    if x < 0:
                        break
            return
        center = sum(u[level][j] * coords[j] for j in range(level + 1, r))
        for x in _int_range(center, remaining / d[level]):
            coords[level] = x
            spent = d[level] * (x + center) ** 2
            descend(level - 1, remaining - spent)
        coords[level] = 0

    descend(r - 1, bound)
    out.sort(key=lambda item: item[1])
    return out


# ---------------------------------------------------------------------------
# exact LLL and KZ reduction (on Gram matrices, tracking the transform)
# ---------------------------------------------------------------------------


def _round_half(x: Fraction) -> int:
    return (2 * x.numerator + x.denominator) // (2 * x.denominator)


def _gram_from_rows(rows, g):
    return _gram_of_basis(rows, g)


def _gs_data(gram):
    r = len(gram)
    mu = [[Fraction(0)] * r for _ in range(r)]
    bstar = [Fraction(0)] * r
    for i in range(r):
        mu[i][i] = Fraction(1)
        bstar[i] = gram[i][i]
        for j in range(i):
            num = gram[i][j] - sum(mu[i][k] * mu[j][k] * bstar[k] for k in range(j))
            mu[i][j] = num / bstar[j]
            bstar[i] -= mu[i][j] ** 2 * bstar[j]
    return mu, bstar


def lll_transform(gram, delta=Fraction(3, 4)):
    """Integer row transform W with W * basis LLL-reduced; exact arithmetic."""
    r = len(gram)
    w = [[1 if i == j else 0 for j in range(r)] for i in range(r)]

    def inner(i, j):
        return sum(w[i][a] * gram[a][b] * w[j][b]
                   for a in range(r) for b in range(r))

    def current_gram():
        return [[inner(i, j) for j in range(r)] for i in range(r)]

    k = 1
    guard = 0
    while k < r:
        guard += 1
        if guard > 10_000:
            raise PreconditionUnmet("LLL failed to terminate")
        mu, bstar = _gs_data(current_gram())
        for j in range(k - 1, -1, -1):
            q = _round_half(mu[k][j])
            if q:
                w[k] = [a - q * b for a, b in zip(w[k], w[j])]
                mu, bstar = _gs_data(current_gram())
        if bstar[k] >= (delta - mu[k][k - 1] ** 2) * bstar[k - 1]:
            k += 1
        else:
            w[k], w[k - 1] = w[k - 1], w[k]
            k = max(k - 1, 1)
    return w


def _xgcd(a, b):
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    return old_r, old_s, old_t


def _complete_unimodular(v):
    """Integer matrix with first row v (primitive), determinant +-1."""
    r = len(v)
    t = [[1 if i == j else 0 for j in range(r)] for i in range(r)]
    w = list(v)
    # chain 2x2 steps turning w into (g, 0, ..., 0); accumulate the inverse
    for i in range(r - 1, 0, -1):
        a, b = w[i - 1], w[i]
        if b == 0:
            continue
        g, s, tt = _xgcd(a, b)
        # rows i-1, i of the inverse operation [[a/g, -tt], [b/g, s]]
        row_a = [(a // g) * t[i - 1][j] + (b // g) * t[i][j] for j in range(r)]
        row_b = [-tt * t[i - 1][j] + s * t[i][j] for j in range(r)]
        t[i - 1], t[i] = row_a, row_b
        w[i - 1], w[i] = g, 0
    if w[0] == -1:
        t[0] = [-x for x in t[0]]
        w[0] = 1
    if w[0] != 1:
        raise PreconditionUnmet("vector is not primitive")
    return t


def shortest_vector(gram):
    """A shortest nonzero coefficient vector and its squared norm."""
    w = lll_transform(gram)
    reduced = _gram_from_rows(w, gram)
    bound = min(reduced[i][i] for i in range(len(gram)))
    best_vec, best_norm = None, None
    for vec, norm in enumerate_short_vectors(reduced, bound):
        best_vec, best_norm = vec, norm
        break
    assert best_vec is not None
    r = len(gram)
    coeffs = [sum(best_vec[i] * w[i][j] for i in range(r)) for j in range(r)]
    g = 0
    for c in coeffs:
        g = math.gcd(g, abs(c))
    assert g == 1, "shortest vector must be primitive"
    return coeffs, best_norm


def kz_transform(gram):
    """Integer row transform W with W * basis KZ-reduced.

    The first vector is a shortest vector; recursively, each Gram-Schmidt
    vector is shortest in the projected lattice, and the final basis is
    size-reduced (|mu_ij| <= 1/2).
    """
    r = len(gram)
    if r == 1:
        return [[1]]
    v, _ = shortest_vector(gram)
    t1 = _complete_unimodular(v)
    g1 = _gram_from_rows(t1, gram)
    g11 = g1[0][0]
    projected = [[g1[i][j] - g1[i][0] * g1[j][0] / g11
                  for j in range(1, r)] for i in range(1, r)]
    sub = kz_transform(projected)
    w = [t1[0]]
    for row in sub:
        w.append([sum(row[i] * t1[i + 1][j] for i in range(r - 1))
                  for j in range(r)])
    # size reduction
    mu, _ = _gs_data(_gram_from_rows(w, gram))
    for i in range(1, r):
        for j in range(i - 1, -1, -1):
            q = _round_half(mu[i][j])
            if q:
                w[i] = [a - q * b for a, b in zip(w[i], w[j])]
                mu, _ = _gs_data(_gram_from_rows(w, gram))
    assert abs(_det(_mat(w))) == 1
    return w


# ---------------------------------------------------------------------------
# public operations
# ---------------------------------------------------------------------------


def successive_minima(lattice: NormedLattice, j: int) -> Fraction:
    """The j-th successive minimum: exact lambda_j^2 (Euclidean norm) or
    exact lambda_j (polytope norm)."""
    r = lattice.rank
    if not 1 <= j <= r:
        raise PreconditionUnmet("index j must satisfy 1 <= j <= rank")
    return _minima(lattice)[j - 1]


def _independent_scan(vectors, r, upto):
    """Values at which the span dimension increments, scanning by norm."""
    basis_rows = []
    minima = []
    for coeffs, value in vectors:
        candidate = basis_rows + [[Fraction(c) for c in coeffs]]
        if _rank_of(candidate) > len(basis_rows):
            basis_rows = candidate
            minima.append(value)
            if len(minima) == upto:
                break
    return minima


def _rank_of(rows):
    m = [list(r) for r in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    for col in range(cols):
        pivot = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if pivot is None:
            continue
        m[rank], m[pivot] = m[pivot], m[rank]
        inv = Fraction(1) / m[rank][col]
        m[rank] = [x * inv for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][col]:
                f = m[i][col]
                m[i] = [x - f * y for x, y in zip(m[i], m[rank])]
        rank += 1
    return rank


def _minima(lattice: NormedLattice):
    r = lattice.rank
    if lattice.kind == "euclidean":
        gram = lattice.lattice_gram()
        w = lll_transform(gram)
        reduced = _gram_from_rows(w, gram)
        bound = max(reduced[i][i] for i in range(r))
        vectors = enumerate_short_vectors(reduced, bound)
        back = [(tuple(sum(vec[i] * w[i][j] for i in range(r)) for j in range(r)), n)
                for vec, n in vectors]
        minima = _independent_scan(back, r, r)
        assert len(minima) == r
        return minima
    # polytope: search in the certified ellipsoid metric, filter exactly
    q = lattice.euclidean_form()
    gram_q = _gram_of_basis(lattice.basis, q)
    w = lll_transform(gram_q)
    reduced = _gram_from_rows(w, gram_q)
    radius = max(lattice.norm(lattice.vector(
        [w[i][j] for j in range(r)])) for i in range(r))
    while True:
        budget = Fraction(r) * radius ** 2
        vectors = enumerate_short_vectors(reduced, budget)
        scored = []
        for vec, _ in vectors:
            coeffs = [sum(vec[i] * w[i][j] for i in range(r)) for j in range(r)]
            value = lattice.norm(lattice.vector(coeffs))
            if value <= radius:
                scored.append((tuple(coeffs), value))
        scored.sort(key=lambda item: item[1])
        minima = _independent_scan(scored, r, r)
        if len(minima) == r:
            return minima
        radius *= 2


def dual_lattice(lattice: NormedLattice) -> NormedLattice:
    """The dual lattice with the dual norm.

    Euclidean: inverse-transpose basis with the inverse ambient form (so the
    lattice Gram inverts exactly).  Polytope: the polar polytope, whose
    vertex list is the facet-normal list of the primal unit ball.
    """
    dual_basis = _transpose(_mat_inv(lattice.basis))
    if lattice.kind == "euclidean":
        return NormedLattice(basis=dual_basis, gram=_mat_inv(lattice.gram))
    return NormedLattice(basis=dual_basis,
                         vertices=[list(a) for a in lattice._normals])


@dataclass(frozen=True)
class TransferenceReport:
    lambda1_sq: Fraction
    dual_lambda_r_sq: Fraction
    product_sq: Fraction
    rank: int

    @property
    def ok(self):
        return self.product_sq <= Fraction(self.rank) ** 2


def transference_check(lattice: NormedLattice) -> TransferenceReport:
    """lambda_1(L) * lambda_r(L^*) <= r, checked on exact squared values."""
    if lattice.kind != "euclidean":
        raise PreconditionUnmet("the transference check runs on Euclidean norms")
    r = lattice.rank
    l1 = successive_minima(lattice, 1)
    lr = successive_minima(dual_lattice(lattice), r)
    report = TransferenceReport(lambda1_sq=l1, dual_lambda_r_sq=lr,
                                product_sq=l1 * lr, rank=r)
    if not report.ok:
        raise BoundViolated(
            "transference product exceeded the rank bound: %s > %s^2"
            % (report.product_sq, r))
    return report


@dataclass(frozen=True)
class ReducedDualBasis:
    """A Z-basis of the dual lattice with certified norm bounds.

    ``dual_norms`` are exact squared dual norms for Euclidean lattices and
    exact dual norms for polytope lattices; ``lambda1`` follows the same
    convention for the primal shortest vector.  ``achieved`` lists the
    scale-invariant products ||u_i||* lambda_1 (squared in the Euclidean
    case), each certified <= rank^2 (rank^4 squared).
    """

    vectors: tuple
    dual_norms: tuple
    lambda1: Fraction
    squared: bool
    rank: int

    @property
    def achieved(self):
        return tuple(n * self.lambda1 for n in self.dual_norms)


def reduced_dual_basis(lattice: NormedLattice) -> ReducedDualBasis:
    """KZ-reduce the dual lattice and certify ||u_i||* <= r^2 / lambda_1.

    The certificate compares against a lambda_1 obtained by independent
    exhaustive enumeration, not against any by-product of the reduction.
    """
    r = lattice.rank
    dual = dual_lattice(lattice)
    if lattice.kind == "euclidean":
        gram = dual.lattice_gram()
        w = kz_transform(gram)
        vectors = [tuple(dual.vector(row)) for row in w]
        norms = tuple(_quad(dual.gram, list(v)) for v in vectors)
        l1 = successive_minima(lattice, 1)
        bound = Fraction(r) ** 4
        for nsq in norms:
            if nsq * l1 > bound:
                raise BoundViolated(
                    "reduced dual vector with ||u||^2 lambda1^2 = %s > r^4 = %s"
                    % (nsq * l1, bound))
        return ReducedDualBasis(vectors=vectors, dual_norms=norms, lambda1=l1,
                                squared=True, rank=r)
    # polytope path: reduce in the dual of the certified ellipsoid metric
    q = lattice.euclidean_form()
    q_dual = _mat_inv(q)
    gram = _gram_of_basis(dual.basis, q_dual)
    w = kz_transform(gram)
    vectors = [tuple(dual.vector(row)) for row in w]
    norms = tuple(dual.norm(list(v)) for v in vectors)
    l1 = successive_minima(lattice, 1)
    bound = Fraction(r) ** 2
    for n in norms:
        if n * l1 > bound:
            raise BoundViolated(
                "reduced dual vector with ||u||* lambda1 = %s > r^2 = %s"
                % (n * l1, bound))
    return ReducedDualBasis(vectors=vectors, dual_norms=norms, lambda1=l1,
                            squared=False, rank=r)


def random_basis(rank: int, rng, low=-5, high=5):
    """A random nonsingular integer basis with entries in [low, high]."""
    while True:
        rows = [[rng.randint(low, high) for _ in range(rank)]
                for _ in range(rank)]
        if _det(rows) != 0:
            return rows
