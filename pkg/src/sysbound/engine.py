"""Index polynomials, the length invariant, and the closed-form bounds.

All outputs are exact: rationals, rational polynomials, or :class:`PiScaled`
values q * pi^k.  Decimal rendering is left entirely to the CLI.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import catalog
from .catalog import Space, integrate
from .errors import (DegenerateClass, KunnethViolation, LichnerowiczObstruction,
                     MetadataOnlySpace, MissingOddClass, NoPrimitiveClass,
                     PreconditionUnmet, WindowExhausted)
from .graded import GradedClass, exp_class


@dataclass(frozen=True)
class PiScaled:
    """An exact value q * pi^k with q rational.

    The exponent may go negative in intermediate arithmetic; every bound and
    volume produced by this module ends up with k >= 0.
    """

    q: Fraction
    k: int = 0

    @staticmethod
    def of(q, k=0) -> "PiScaled":
        return PiScaled(Fraction(q), int(k))

    def __mul__(self, other):
        if isinstance(other, PiScaled):
            return PiScaled(self.q * other.q, self.k + other.k)
        return PiScaled(self.q * Fraction(other), self.k)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, PiScaled):
            return PiScaled(self.q / other.q, self.k - other.k)
        return PiScaled(self.q / Fraction(other), self.k)

    def __pow__(self, n: int):
        return PiScaled(self.q ** n, self.k * n)

    def __eq__(self, other):
        if isinstance(other, PiScaled):
            if self.q == 0 and other.q == 0:
                return True
            return self.q == other.q and self.k == other.k
        return self.q == Fraction(other) and (self.k == 0 or self.q == 0)

    def __hash__(self):
        return hash((self.q, self.k if self.q else 0))

    def is_zero(self):
        return self.q == 0

    def approx(self) -> float:
        return float(self.q) * math.pi ** self.k

    def __str__(self):
        if self.k == 0 or self.q == 0:
            return str(self.q)
        pi = "pi" if self.k == 1 else "pi^%d" % self.k
        if self.q == 1:
            return pi
        return "%s * %s" % (self.q, pi)

    __repr__ = __str__


ONE = PiScaled(Fraction(1), 0)
PI = PiScaled(Fraction(1), 1)


class RationalPolynomial:
    """Dense univariate polynomial with Fraction coefficients."""

    def __init__(self, coeffs):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, value):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * Fraction(value) + c
        return acc

    def __eq__(self, other):
        if isinstance(other, RationalPolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def is_zero(self):
        return not self.coeffs

    def __str__(self, var="a"):
        if not self.coeffs:
            return "0"
        bits = []
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            if j == 0:
                bits.append(str(c))
            else:
                mono = var if j == 1 else "%s^%d" % (var, j)
                bits.append(mono if c == 1 else ("-" + mono if c == -1
                                                 else "%s*%s" % (c, mono)))
        return " + ".join(bits).replace("+ -", "- ")

    __repr__ = __str__


class IndexPolynomial(RationalPolynomial):
    """The twist polynomial a -> <[X], xi e^(ax) e^(c/2) A-hat(TX)>."""

    def __init__(self, coeffs, q0: int):
        super().__init__(coeffs)
        self.q0 = q0


def _interpolate(points) -> RationalPolynomial:
    """Exact Lagrange interpolation through (x, y) pairs with distinct x."""
    coeffs = [Fraction(0)] * len(points)
    for i, (xi, yi) in enumerate(points):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for j, (xj, _) in enumerate(points):
            if j == i:
                continue
            denom *= Fraction(xi) - Fraction(xj)
            new = [Fraction(0)] * (len(basis) + 1)
            for k, b in enumerate(basis):
                new[k] += -Fraction(xj) * b
                new[k + 1] += b
            basis = new
        scale = Fraction(yi) / denom
        for k, b in enumerate(basis):
            coeffs[k] += scale * b
    return RationalPolynomial(coeffs)


# ---------------------------------------------------------------------------
# genera and index polynomials
# ---------------------------------------------------------------------------


def todd_genus(space: Space) -> Fraction:
    """Integral of the Todd class; the holomorphic Euler characteristic."""
    space.require_ring()
    if not space.is_complex or space.todd_cls is None:
        raise MetadataOnlySpace(
            "%s carries no complex tangent data for a Todd genus" % space.name)
    return integrate(space, space.todd_cls)


def _xi_factor(space: Space) -> GradedClass:
    if space.real_dim % 2 == 1:
        if space.odd_xi is None:
            raise MissingOddClass(
                "%s is odd-dimensional but carries no degree-1 class with "
                "xi * x^n nonzero" % space.name)
        return space.odd_xi
    return space.ring.one()


def index_polynomial(space: Space) -> IndexPolynomial:
    """Exact coefficients of P(a) = <[X], xi e^(ax) e^(c/2) A-hat(TX)>."""
    space.require_ring()
    if space.primitive_x is None:
        raise NoPrimitiveClass(
            "%s has no recorded primitive degree-2 class (b2 = 1 required)"
            % space.name)
    if space.a_hat_cls is None:
        raise MetadataOnlySpace("%s carries no A-hat data" % space.name)
    xi = _xi_factor(space)
    x = space.primitive_x
    base = xi * exp_class(space.spin_c * Fraction(1, 2)) * space.a_hat_cls
    n = space.half_dim
    coeffs = []
    xpow = space.ring.one()
    for k in range(n + 1):
        coeffs.append(integrate(space, base * xpow) / math.factorial(k))
        xpow = xpow * x
    return IndexPolynomial(coeffs, _spin_c_multiple(space))


def _spin_c_multiple(space: Space) -> int:
    """The integer q0 with c = q0 * x in real cohomology."""
    x = space.primitive_x
    c = space.spin_c
    if c.is_zero():
        return 0
    for mono, xc in x.terms.items():
        cc = c.coefficient(mono)
        if cc:
            q0 = cc / xc
            break
    else:
        raise NoPrimitiveClass("characteristic class is not a multiple of x")
    if c != q0 * x:
        raise NoPrimitiveClass(
            "characteristic class of %s is not proportional to the primitive "
            "generator" % space.name)
    if q0.denominator != 1:
        raise NoPrimitiveClass("characteristic class must be an integral "
                               "multiple of the primitive generator")
    return int(q0)


def length(space: Space) -> int:
    """min |q0 + 2a| over integer twists with nonvanishing index pairing.

    Returns 0 in the even-q0 case where the untwisted pairing is already
    nonzero: that is the obstruction case, and callers asking for a positive
    bound must surface it instead of quoting 0.
    """
    poly = index_polynomial(space)
    q0 = poly.q0
    n = space.half_dim
    if poly.is_zero():
        raise WindowExhausted(
            "index polynomial of %s vanishes identically; the space does not "
            "satisfy the nonvanishing hypothesis" % space.name)
    best = None
    # window |q0 + 2a| <= n + 1 suffices: the polynomial has degree <= n, and
    # the window contains more twist points than possible zeros
    for value in range(0, n + 2):
        for sign in ((1,) if value == 0 else (1, -1)):
            target = sign * value
            if (target - q0) % 2:
                continue
            a = (target - q0) // 2
            if poly(a) != 0:
                best = value
                break
        if best is not None:
            break
    if best is None:
        raise WindowExhausted(
            "no nonvanishing twist with |q0 + 2a| <= %d on %s; this "
            "contradicts the parity argument" % (n + 1, space.name))
    return best


def product_length_bound(x: Space, n_factor: Space) -> int:
    """Length of the product, asserted against the bound length(x).

    Hypotheses: b2(x) = 1, b2(N) = 0, at most one factor odd-dimensional, and
    the N-factor must have a nonzero index pairing (eta e^(c/2) A-hat against
    its fundamental class).
    """
    if x.b2 != 1:
        raise PreconditionUnmet("b2(X) = 1 is required for the product bound")
    if n_factor.b2 != 0:
        raise PreconditionUnmet("b2(N) = 0 is required for the product bound")
    if x.real_dim % 2 == 1 and n_factor.real_dim % 2 == 1:
        raise PreconditionUnmet(
            "dim X and dim N cannot both be odd for the product bound")
    if not _n_factor_admissible(n_factor):
        raise PreconditionUnmet(
            "the factor %s has vanishing index pairing "
            "<eta e^(c/2) A-hat(TN), [N]>; the product bound does not apply"
            % n_factor.name)
    prod = catalog.product(x, n_factor)
    if prod.b2 != 1:
        raise KunnethViolation("b2(X x N) = %d, expected 1" % prod.b2)
    ell = length(prod)
    ell_x = length(x)
    if ell > ell_x:
        raise WindowExhausted(
            "product length %d exceeded the factor length %d" % (ell, ell_x))
    return ell


def _n_factor_admissible(n_factor: Space) -> bool:
    """Nonvanishing of <eta e^(c/2) A-hat(TN), [N]> for the second factor."""
    if n_factor.metadata_only or n_factor.a_hat_cls is None:
        return False
    if n_factor.real_dim == 0:
        return True
    if n_factor.real_dim % 2 == 1:
        if n_factor.odd_xi is None:
            return False
        eta = n_factor.odd_xi
    else:
        eta = n_factor.ring.one()
    cls = eta * exp_class(n_factor.spin_c * Fraction(1, 2)) * n_factor.a_hat_cls
    return integrate(n_factor, cls) != 0


# ---------------------------------------------------------------------------
# curvature, volume, width
# ---------------------------------------------------------------------------


def _check_kahler_input(space: Space, alpha: GradedClass):
    space.require_ring()
    if not alpha.is_homogeneous(2):
        raise DegenerateClass("a Kaehler class must be homogeneous of degree 2")
    if space.c1 is None:
        raise MetadataOnlySpace("%s has no first Chern class data" % space.name)


def avg_scalar_curvature(space: Space, alpha: GradedClass,
                         scale: PiScaled = ONE) -> PiScaled:
    """Average scalar curvature 4 pi n (c1 . alpha^(n-1)) / alpha^n.

    ``scale`` multiplies the class: passing scale=PI evaluates at pi*alpha,
    which is how the catalog normalizes Kaehler-Einstein classes.
    """
    _check_kahler_input(space, alpha)
    n = space.complex_dim
    top = integrate(space, alpha ** n)
    if top == 0:
        raise DegenerateClass("alpha^n = 0: the class is degenerate")
    mixed = integrate(space, space.c1 * alpha ** (n - 1))
    ratio = PiScaled(Fraction(mixed, 1) / top) / scale
    return PiScaled(Fraction(4 * n), 1) * ratio


def volume(space: Space, alpha: GradedClass, scale: PiScaled = ONE) -> PiScaled:
    """Symplectic volume alpha^n / n! of the scaled class."""
    _check_kahler_input(space, alpha)
    n = space.complex_dim
    top = integrate(space, alpha ** n)
    if top == 0:
        raise DegenerateClass("alpha^n = 0: the class is degenerate")
    return (scale ** n) * PiScaled(Fraction(top, math.factorial(n)))


def gromov_width_bound(space: Space, alpha: GradedClass,
                       scale: PiScaled = ONE) -> PiScaled:
    """The width bound 8 pi n^2 / Rbar(alpha)."""
    n = space.complex_dim
    rbar = avg_scalar_curvature(space, alpha, scale)
    if rbar.q <= 0:
        raise DegenerateClass("the width bound needs positive average "
                              "scalar curvature")
    return PiScaled(Fraction(8 * n * n), 1) / rbar


def hilbert_polynomial(space: Space, line_class: GradedClass) -> RationalPolynomial:
    """Polynomial k -> <[X], e^(k L) Td(TX)> with exact coefficients."""
    space.require_ring()
    if not space.is_complex or space.todd_cls is None:
        raise MetadataOnlySpace("%s has no Todd data" % space.name)
    if not line_class.is_homogeneous(2):
        raise DegenerateClass("the twisting class must be of degree 2")
    n = space.complex_dim
    coeffs = []
    lpow = space.ring.one()
    for k in range(n + 1):
        coeffs.append(integrate(space, lpow * space.todd_cls) / math.factorial(k))
        lpow = lpow * line_class
    return RationalPolynomial(coeffs)


# ---------------------------------------------------------------------------
# the closed-form systolic bounds
# ---------------------------------------------------------------------------

#: selector tokens accepted by systolic_bound (and the CLI)
SELECTORS = ("thm1.1", "thm1.2", "thm1.3", "prop5.1", "thm4.5", "thm5.6")


def systolic_bound(space: Space, n_factor: Space | None = None,
                   theorem: str = "thm1.3") -> PiScaled:
    """Exact right-hand side of the selected systolic inequality.

    Selector tokens (the second factor N defaults to a point):

    - ``thm1.1``: 4 pi n (n+1) for Kaehler X of complex dimension n.
    - ``thm1.2``: 4 pi n^2, for Kaehler X not projective space.
    - ``thm1.3``: 4 pi (n + floor(dim N / 2)) (n+1) for spin^c X x N with
      b2 = 1, X carrying u with u^n nonzero (and xi in odd dimension), N with
      nonzero index pairing.
    - ``prop5.1``: 4 pi n length(X) for b2(X) = 1 spin^c X.
    - ``thm4.5``: 4 pi (n(n-1) + 2) for Kaehler X neither projective space
      nor a quadric.
    - ``thm5.6``: 4 pi (n + floor(dim N / 2)) i_X for X diffeomorphic to a
      b2 = 1 Fano manifold of index i_X.
    """
    if theorem not in SELECTORS:
        raise PreconditionUnmet("unknown bound selector %r (expected one of %s)"
                                % (theorem, ", ".join(SELECTORS)))

    if theorem == "thm1.1":
        _require_point(n_factor, theorem)
        n = _require_kahler(space)
        return PiScaled(Fraction(4 * n * (n + 1)), 1)

    if theorem == "thm1.2":
        _require_point(n_factor, theorem)
        n = _require_kahler(space)
        if space.family == "CP":
            raise PreconditionUnmet(
                "the 4 pi n^2 bound requires X not biholomorphic to "
                "projective space")
        return PiScaled(Fraction(4 * n * n), 1)

    if theorem == "thm1.3":
        n = _require_condition_a(space)
        half_n = _require_condition_b(n_factor)
        _require_parity(space, n_factor)
        return PiScaled(Fraction(4 * (n + half_n) * (n + 1)), 1)

    if theorem == "prop5.1":
        _require_point(n_factor, theorem)
        ell = length(space)
        if ell == 0:
            raise LichnerowiczObstruction(
                "the untwisted A-hat pairing of %s is nonzero: no metric of "
                "positive scalar curvature exists, so no positive systolic "
                "bound applies" % space.name)
        n = space.half_dim
        return PiScaled(Fraction(4 * n * ell), 1)

    if theorem == "thm4.5":
        _require_point(n_factor, theorem)
        n = _require_kahler(space)
        if space.family in ("CP", "Q"):
            raise PreconditionUnmet(
                "the 4 pi (n(n-1)+2) bound requires X biholomorphic to "
                "neither projective space nor a quadric")
        return PiScaled(Fraction(4 * (n * (n - 1) + 2)), 1)

    # thm5.6
    if space.fano_index is None or space.b2 != 1:
        raise PreconditionUnmet(
            "the index-refined bound needs X diffeomorphic to a Fano "
            "manifold with b2 = 1 and recorded Fano index")
    if space.real_dim % 2:
        raise PreconditionUnmet("a Fano manifold is even-dimensional")
    n = space.half_dim
    half_n = _require_condition_b(n_factor)
    _require_parity(space, n_factor)
    return PiScaled(Fraction(4 * (n + half_n) * space.fano_index), 1)


def _require_point(n_factor, theorem):
    if n_factor is not None and n_factor.real_dim > 0:
        raise PreconditionUnmet(
            "selector %s takes a single space (N must be a point)" % theorem)


def _require_kahler(space: Space) -> int:
    space.require_ring()
    if not space.is_complex or space.complex_dim is None:
        raise PreconditionUnmet(
            "%s is not a complex (Kaehler) catalog space" % space.name)
    return space.complex_dim


def _require_condition_a(space: Space) -> int:
    """u^n nonzero (with xi in odd dimension); returns n = half_dim."""
    space.require_ring()
    n = space.half_dim
    if space.b2 != 1 or space.primitive_x is None:
        raise PreconditionUnmet(
            "%s must have b2 = 1 with a degree-2 class u, u^n nonzero"
            % space.name)
    xi = _xi_factor(space)
    if integrate(space, xi * space.primitive_x ** n) == 0:
        raise PreconditionUnmet(
            "the top pairing of the degree-2 class of %s vanishes"
            % space.name)
    return n


def _require_condition_b(n_factor: Space | None) -> int:
    """Index nonvanishing for the N factor; returns floor(dim N / 2)."""
    if n_factor is None:
        return 0
    if n_factor.b2 != 0:
        raise PreconditionUnmet(
            "b2(N) = 0 is required so that b2(X x N) = 1 (got b2 = %d on %s)"
            % (n_factor.b2, n_factor.name))
    if not _n_factor_admissible(n_factor):
        raise PreconditionUnmet(
            "the factor %s has vanishing index pairing "
            "<eta e^(c/2) A-hat(TN), [N]>" % n_factor.name)
    return n_factor.real_dim // 2


def _require_parity(space: Space, n_factor: Space | None):
    if n_factor is not None and space.real_dim % 2 and n_factor.real_dim % 2:
        raise PreconditionUnmet(
            "dim X and dim N cannot both be odd (the product would have "
            "b2 > 1 or lose the degree-1 class)")
