"""Exact optimization on rank <= 2 nef cones and contraction enumeration.

The nef cones of the catalog families are supplied in closed form (two-ray
descriptions with their extremal curve classes); no general cone machinery is
attempted.  The volume functional is optimized on the normalized segment
between the rays with exact critical-point arithmetic: the critical equation
is solved by rational-root extraction certified complete by Sturm counting.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import roots
from .catalog import Space, integrate
from .errors import (DegenerateClass, DimensionTooLow, InvalidNormalization,
                     IrrationalCriticalPoint, PreconditionUnmet, UnsupportedRank)
from .graded import GradedClass


@dataclass(frozen=True)
class ConeProblem:
    """A space of Picard rank <= 2 with its nef rays and extremal curves."""

    space: Space
    rays: tuple
    curves: tuple


@dataclass(frozen=True)
class Unbounded:
    """Verdict of phi_sup on a cone containing a non-big nef direction."""

    witness: GradedClass

    def __str__(self):
        return "UNBOUNDED"


def cone_problem(space: Space) -> ConeProblem:
    space.require_ring()
    if not space.is_complex or space.c1 is None:
        raise UnsupportedRank("%s is not a complex catalog space with c1 data"
                              % space.name)
    if space.b2 > 2:
        raise UnsupportedRank("nef-cone optimization is catalogued for "
                              "Picard rank <= 2 only (b2 = %d)" % space.b2)
    if not space.nef_rays or not space.curves:
        raise UnsupportedRank("%s has no recorded nef-cone description"
                              % space.name)
    return ConeProblem(space=space, rays=tuple(space.nef_rays),
                       curves=tuple(space.curves))


# ---------------------------------------------------------------------------
# the volume functional
# ---------------------------------------------------------------------------


def phi(space: Space, alpha: GradedClass) -> Fraction:
    """(c1 . alpha^(n-1))^n / (alpha^n)^(n-1); homogeneous of degree zero."""
    space.require_ring()
    if space.c1 is None or space.complex_dim is None:
        raise PreconditionUnmet("%s has no first Chern class data" % space.name)
    if not alpha.is_homogeneous(2):
        raise DegenerateClass("the argument must be homogeneous of degree 2")
    n = space.complex_dim
    top = integrate(space, alpha ** n)
    if top == 0:
        raise DegenerateClass("alpha^n = 0: the volume functional is undefined")
    mixed = integrate(space, space.c1 * alpha ** (n - 1))
    if mixed < 0:
        mixed = Fraction(0)
    return mixed ** n / top ** (n - 1)


def _ray_coordinates(problem: ConeProblem, alpha: GradedClass):
    """Coordinates of a degree-2 class in the ray basis, or None."""
    rays = problem.rays
    ring = problem.space.ring
    # collect degree-2 monomial coordinates
    monos = sorted({m for r in rays for m in r.terms} | set(alpha.terms))
    rows = [[r.coefficient(m) for r in rays] for m in monos]
    target = [alpha.coefficient(m) for m in monos]
    if len(rays) == 1:
        base = next((i for i, row in enumerate(rows) if row[0]), None)
        if base is None:
            return None
        c = target[base] / rows[base][0]
        if any(target[i] != c * rows[i][0] for i in range(len(monos))):
            return None
        return (c,)
    # two rays: solve the 2-variable linear system
    for i in range(len(monos)):
        for j in range(i + 1, len(monos)):
            det = rows[i][0] * rows[j][1] - rows[i][1] * rows[j][0]
            if det:
                c0 = (target[i] * rows[j][1] - target[j] * rows[i][1]) / det
                c1 = (rows[i][0] * target[j] - rows[j][0] * target[i]) / det
                for k in range(len(monos)):
                    if target[k] != c0 * rows[k][0] + c1 * rows[k][1]:
                        return None
                return (c0, c1)
    return None

def _require_open_cone(problem: ConeProblem, alpha: GradedClass):
    if not alpha.is_homogeneous(2):
        raise DegenerateClass("a cone class must be homogeneous of degree 2")
    coords = _ray_coordinates(problem, alpha)
    if coords is None or any(c <= 0 for c in coords):
        raise DegenerateClass(
            "the class is not in the open nef cone of %s (positive "
            "combination of the extremal rays required)" % problem.space.name)
    return coords


def nef_threshold(problem: ConeProblem, alpha: GradedClass) -> Fraction:
    """Smallest t with K_X + t alpha nef, by the two-ray curve pairings."""
    _require_open_cone(problem, alpha)
    space = problem.space
    threshold = Fraction(0)
    for curve in problem.curves:
        k_dot = -curve.dot(space.c1)        # K_X . C
        a_dot = curve.dot(alpha)
        if a_dot <= 0:
            raise PreconditionUnmet(
                "class pairs nonpositively with the extremal curve %s"
                % curve.name)
        if k_dot < 0:
            threshold = max(threshold, -k_dot / a_dot)
    if threshold == 0:
        raise PreconditionUnmet(
            "K_X pairs nonnegatively with every extremal curve; no finite "
            "positive threshold")
    return threshold


def s_alpha(problem: ConeProblem, alpha: GradedClass) -> Fraction:
    """The ratio (c1 . alpha^(n-1)) / alpha^n; always <= nef_threshold."""
    _require_open_cone(problem, alpha)
    space = problem.space
    n = space.complex_dim
    top = integrate(space, alpha ** n)
    if top == 0:
        raise DegenerateClass("alpha^n = 0")
    value = integrate(space, space.c1 * alpha ** (n - 1)) / top
    assert value <= nef_threshold(problem, alpha), \
        "s(alpha) exceeded the nef threshold"
    return value


# ---------------------------------------------------------------------------
# supremum of the volume functional over the nef cone
# ---------------------------------------------------------------------------


def _interp_coeffs(values):
    """Coefficients of the polynomial through (i, values[i]), i = 0..len-1."""
    n = len(values)
    coeffs = [Fraction(0)] * n
    for i in range(n):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j in range(n):
            if j == i:
                continue
            denom *= Fraction(i - j)
            new = [Fraction(0)] * (len(basis) + 1)
            for k, b in enumerate(basis):
                new[k] += -Fraction(j) * b
                new[k + 1] += b
            basis = new
        scale = values[i] / denom
        for k, b in enumerate(basis):
            coeffs[k] += scale * b
    return roots.trim(coeffs)


def phi_sup(problem: ConeProblem):
    """Supremum of the volume functional on the nef cone.

    Returns an exact Fraction, or :class:`Unbounded` with a witness nef class
    alpha0 != 0 with alpha0^n = 0 whose c1-pairing stays positive.
    """
    space = problem.space
    n = space.complex_dim
    rays = problem.rays

    if len(rays) == 1:
        return phi(space, rays[0])
    if len(rays) != 2:
        raise UnsupportedRank("phi_sup handles one or two extremal rays")

    interior = rays[0] + rays[1]
    for ray in rays:
        top = integrate(space, ray ** n)
        if top < 0:
            raise PreconditionUnmet("nef ray with negative top power")
        if top == 0:
            # non-big direction: certify the positive c1-asymptotics
            d = None
            for k in range(n - 1, -1, -1):
                if integrate(space, ray ** k * interior ** (n - k)) != 0:
                    d = k
                    break
            if d is None or d == 0:
                raise PreconditionUnmet(
                    "degenerate nef ray on %s" % space.name)
            c2 = integrate(space, space.c1 * ray ** d * interior ** (n - 1 - d))
            if c2 <= 0:
                raise PreconditionUnmet(
                    "non-big ray with nonpositive c1 pairing; outside the "
                    "catalogued Fano families")
            return Unbounded(witness=ray)

    # both rays big: optimize on the segment alpha_t = (1-t) R0 + t R1
    def at(t):
        return (1 - t) * rays[0] + t * rays[1]

    num_vals = [integrate(space, space.c1 * at(Fraction(t)) ** (n - 1))
                for t in range(n)]
    den_vals = [integrate(space, at(Fraction(t)) ** n) for t in range(n + 1)]
    num = _interp_coeffs(num_vals)        # degree <= n-1
    den = _interp_coeffs(den_vals)        # degree <= n

    crit = roots.multiply([Fraction(n)] , roots.multiply(roots.derivative(num), den))
    crit2 = roots.multiply([Fraction(n - 1)], roots.multiply(num, roots.derivative(den)))
    g = roots.trim([a - b for a, b in
                    zip(crit + [Fraction(0)] * len(crit2),
                        crit2 + [Fraction(0)] * len(crit))])

    candidates = [Fraction(0), Fraction(1)]
    if g:
        try:
            candidates += roots.roots_in_unit_interval(g)
        except ValueError as exc:
            raise IrrationalCriticalPoint(
                "the critical equation on the nef segment of %s has a "
                "non-rational root; refusing to approximate (%s)"
                % (space.name, exc)) from None

    best = Fraction(0)
    for t in candidates:
        d_val = roots.evaluate(den, t)
        if d_val <= 0:
            raise PreconditionUnmet("non-big class in the interior of the "
                                    "nef cone of %s" % space.name)
        n_val = roots.evaluate(num, t)
        if n_val <= 0:
            continue
        best = max(best, n_val ** n / d_val ** (n - 1))
    return best


# ---------------------------------------------------------------------------
# projective-bundle systole profiles
# ---------------------------------------------------------------------------


def bundle_systole_profile(degrees, genus: int, a, b):
    """Systole-times-curvature profile of a projective bundle over a curve.

    Returns ``(sys_value, product_with_s)`` where sys_value is min(a, b) for
    genus 0 and a for genus >= 1, and the product multiplies it with
    s(alpha) for alpha = a xi + b f.  Genus 0 expects the normalization
    0 = d_1 <= d_2 <= ... of the splitting degrees.
    """
    from .catalog import proj_bundle_over_curve

    a, b = Fraction(a), Fraction(b)
    if a <= 0 or b <= 0:
        raise InvalidNormalization("the class a xi + b f needs a, b > 0")
    degrees = [int(d) for d in degrees]
    if genus == 0:
        if degrees != sorted(degrees) or degrees[0] != 0:
            raise InvalidNormalization(
                "genus-0 bundles must be normalized 0 = d_1 <= d_2 <= ...")
    space = proj_bundle_over_curve(degrees, genus)
    n = space.complex_dim
    e = sum(degrees)
    xi = space.ring.gen("xi")
    f = space.ring.gen("f")
    alpha = a * xi + b * f
    top = integrate(space, alpha ** n)
    if top == 0:
        raise DegenerateClass("alpha^n = 0 for the chosen (a, b)")
    s_val = integrate(space, space.c1 * alpha ** (n - 1)) / top

    # closed forms used as an internal consistency check
    expected_a_s = (n - 1) - Fraction(2 * (genus - 1) * a, a * e + n * b)
    assert a * s_val == expected_a_s, "bundle profile disagrees with closed form"

    sys_value = min(a, b) if genus == 0 else a
    return sys_value, sys_value * s_val


def bundle_profile_sup(n: int) -> Fraction:
    """Supremum of min(1, x)(n - 1 + 2/(e + n x)) over x > 0, e >= 0.

    Certified by the two monotone branches plus a rational grid sweep; the
    value is n - 1 + 2/n, attained at (x, e) = (1, 0).
    """
    if n < 2:
        raise PreconditionUnmet("bundle profiles need fiber dimension >= 1")
    sup = Fraction(n - 1) + Fraction(2, n)

    def profile(x, e):
        return min(Fraction(1), x) * (n - 1 + Fraction(2, e + n * x))

    assert profile(Fraction(1), 0) == sup
    # branch x >= 1: value = n-1+2/(e+nx), decreasing in x and e
    # branch x <= 1: value = x(n-1) + 2x/(e+nx), increasing in x
    grid = [Fraction(p, q) for q in range(1, 8) for p in range(1, 5 * q + 1)]
    for e in range(0, 6):
        last = None
        for x in sorted(set(grid)):
            val = profile(x, e)
            assert val <= sup, "grid point exceeded the certified supremum"
            if x <= 1 and last is not None:
                assert val >= last, "profile not increasing below x = 1"
            if x <= 1:
                last = val
    return sup


# ---------------------------------------------------------------------------
# contraction enumeration for multiprojective complete intersections
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FactorReport:
    factor: int
    ambient_dim: int
    degree_sum: int
    k_negative: bool
    fiber_dim: int
    anticanonical_coeff: int


@dataclass(frozen=True)
class ContractionReport:
    dim: int
    fano: bool
    admissible_p: int
    factors: tuple


def multiproj_contractions(ambient, multidegrees) -> ContractionReport:
    """Coordinate-projection report for a multiprojective complete intersection.

    A projection is K-negative exactly when the column degree sum is at most
    the factor dimension; the intersection is Fano when every projection is.
    """
    ns = [int(N) for N in ambient]
    rows = [[int(d) for d in row] for row in multidegrees]
    m = len(ns)
    r = len(rows)
    if r == 0 or m == 0:
        raise PreconditionUnmet("need at least one hypersurface and one factor")
    for row in rows:
        if len(row) != m:
            raise PreconditionUnmet("each multidegree row needs %d entries" % m)
        if any(d < 0 for d in row) or not any(row):
            raise PreconditionUnmet("multidegrees must be nonnegative and "
                                    "each row nonzero")
    dim = sum(ns) - r
    if dim < 3:
        raise DimensionTooLow(
            "the contraction enumeration needs complex dimension >= 3 "
            "(degree <= 2 cohomology must restrict from the ambient space)")
    factors = []
    for i, N in enumerate(ns):
        dsum = sum(row[i] for row in rows)
        factors.append(FactorReport(
            factor=i + 1, ambient_dim=N, degree_sum=dsum,
            k_negative=dsum <= N, fiber_dim=N - r,
            anticanonical_coeff=N + 1 - dsum))
    fano = all(f.k_negative for f in factors)
    return ContractionReport(
        dim=dim, fano=fano,
        admissible_p=min(f.fiber_dim for f in factors),
        factors=tuple(factors))
