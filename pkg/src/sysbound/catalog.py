"""Constructors for the manifold catalog.

A :class:`Space` bundles a ring presentation with the topological data the
bound calculators consume: fundamental-class pairing, tangent Chern data (or
an explicit A-hat class for non-complex factors), the distinguished
characteristic class ``spin_c``, a primitive degree-2 generator when b2 = 1,
an optional degree-1 class for odd dimensions, nef-cone data for the rank <= 2
families, and Betti/index metadata.

Weighted-projective hypersurfaces and the Grassmannian linear section enter
the catalog as metadata-only spaces (dimension and index, no ring); the
operations that need a ring reject them.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from fractions import Fraction

from .characteristic import ChernData, a_hat, todd, total_inverse, whitney_quotient
from .errors import (EmptyIntersection, MetadataOnlySpace, NoPrimitiveClass,
                     PreconditionUnmet, RingMismatch)
from .graded import (GradedClass, Generator, Ring, RingPresentation, make_ring,
                     tensor_ring, truncated_polynomial_ring)


@dataclass(frozen=True)
class Curve:
    """An extremal curve class as a linear functional on degree-2 classes."""

    name: str
    pairings: dict

    def dot(self, cls: GradedClass) -> Fraction:
        if not cls.is_homogeneous(2):
            raise PreconditionUnmet(
                "curve classes pair with homogeneous degree-2 classes only")
        ring = cls.ring
        total = Fraction(0)
        for m, c in cls.terms.items():
            support = [(i, e) for i, e in enumerate(m) if e]
            if len(support) != 1 or support[0][1] != 1 \
                    or ring.generators[support[0][0]].degree != 2:
                raise PreconditionUnmet(
                    "curve pairing needs a class linear in the degree-2 generators")
            gname = ring.generators[support[0][0]].name
            total += c * self.pairings.get(gname, Fraction(0))
        return total

    def __hash__(self):
        return hash((self.name, tuple(sorted(self.pairings.items()))))


@dataclass
class Space:
    """A catalog manifold; immutable by convention after construction."""

    name: str
    family: str
    real_dim: int
    b1: int
    b2: int
    ring: Ring | None = None
    is_complex: bool = False
    complex_dim: int | None = None
    tangent: ChernData | None = None
    c1: GradedClass | None = None
    a_hat_cls: GradedClass | None = None
    todd_cls: GradedClass | None = None
    spin_c: GradedClass | None = None
    primitive_x: GradedClass | None = None
    odd_xi: GradedClass | None = None
    fano_index: int | None = None
    metadata_only: bool = False
    fundamental_twist: GradedClass | None = None
    nef_rays: tuple = ()
    curves: tuple = ()
    kahler_einstein: bool | None = None
    notes: str = ""
    factor_embeddings: tuple = ()  # (left, right) class maps on products

    def require_ring(self) -> Ring:
        if self.metadata_only or self.ring is None:
            raise MetadataOnlySpace(
                "%s is stored as index data only (no cohomology ring)" % self.name)
        return self.ring

    @property
    def half_dim(self) -> int:
        return self.real_dim // 2

    def __post_init__(self):
        if self.metadata_only:
            return
        if self.odd_xi is not None and self.real_dim % 2 == 0:
            raise PreconditionUnmet(
                "%s: a degree-1 class is only recorded in odd dimensions" % self.name)


def integrate(space: Space, cls: GradedClass) -> Fraction:
    """Fundamental-class pairing <cls, [space]>; zero below the top degree."""
    ring = space.require_ring()
    if cls.ring is not ring:
        raise RingMismatch("class does not live on %s" % space.name)
    if space.fundamental_twist is not None:
        cls = cls * space.fundamental_twist
    return ring.integrate_top(cls)


def _attach_tangent(space: Space, tangent: ChernData) -> None:
    space.tangent = tangent
    space.c1 = tangent.chern(1)
    space.a_hat_cls = a_hat(tangent)
    space.todd_cls = todd(tangent)


# ---------------------------------------------------------------------------
# basic families
# ---------------------------------------------------------------------------


def projective_space(n: int) -> Space:
    """Complex projective n-space: Q[H]/(H^(n+1)), <H^n> = 1, c1 = (n+1)H."""
    if n < 1:
        raise PreconditionUnmet("projective space needs n >= 1; the point "
                                "enters through the product identity instead")
    ring = truncated_polynomial_ring("H", 2, n, 1)
    H = ring.gen("H")
    space = Space(
        name="CP(%d)" % n, family="CP", real_dim=2 * n, b1=0, b2=1,
        ring=ring, is_complex=True, complex_dim=n,
        spin_c=(n + 1) * H, primitive_x=H, fano_index=n + 1,
        nef_rays=(H,), curves=(Curve("line", {"H": Fraction(1)}),),
        kahler_einstein=True,
    )
    _attach_tangent(space, ChernData(rank=n, total=(1 + H) ** (n + 1)))
    return space


def quadric(n: int) -> Space:
    """Smooth n-dimensional quadric, modelled on its H-subring with <H^n> = 2.

    The primitive middle cohomology of even quadrics is omitted: every class
    integrated here is a polynomial in the hyperplane class (all tangent data
    restrict from the ambient projective space).
    """
    if n < 2:
        raise PreconditionUnmet("quadric needs n >= 2")
    ring = truncated_polynomial_ring("H", 2, n, 2)
    H = ring.gen("H")
    ambient = ChernData(rank=n + 1, total=(1 + H) ** (n + 2))
    normal = ChernData(rank=1, total=1 + 2 * H)
    space = Space(
        name="Q(%d)" % n, family="Q", real_dim=2 * n, b1=0, b2=1,
        ring=ring, is_complex=True, complex_dim=n,
        spin_c=n * H, primitive_x=H, fano_index=n,
        nef_rays=(H,), curves=(Curve("line", {"H": Fraction(1)}),),
        kahler_einstein=True,
        notes="H-subring model; middle cohomology omitted",
    )
    _attach_tangent(space, whitney_quotient(ambient, normal))
    return space


def circle() -> Space:
    """The circle, with its degree-1 generator normalized to <t> = 1."""
    ring = truncated_polynomial_ring("t", 1, 1, 1)
    t = ring.gen("t")
    return Space(
        name="S1", family="S", real_dim=1, b1=1, b2=0,
        ring=ring, spin_c=ring.zero(), odd_xi=t,
        a_hat_cls=ring.one(),
    )


def sphere(k: int) -> Space:
    """The k-sphere: trivial ring except the fundamental class; A-hat = 1."""
    if k < 1:
        raise PreconditionUnmet("sphere needs k >= 1")
    if k == 1:
        return circle()
    gname = "x" if k == 2 else "v"
    ring = truncated_polynomial_ring(gname, k, 1, 1)
    g = ring.gen(gname)
    return Space(
        name="S(%d)" % k, family="S", real_dim=k, b1=0,
        b2=1 if k == 2 else 0,
        ring=ring, spin_c=ring.zero(),
        primitive_x=g if k == 2 else None,
        odd_xi=None,
        a_hat_cls=ring.one(),
        notes="stably trivial tangent bundle",
    )


# ---------------------------------------------------------------------------
# products
# ---------------------------------------------------------------------------


def product(x: Space, y: Space) -> Space:
    """Product space with tensor ring and Kuenneth pairing.

    Odd x odd products are allowed at construction time; the parity
    hypothesis of the product length bound is enforced where a length is
    actually requested.
    """
    xr, yr = x.require_ring(), y.require_ring()
    ring, lmap, rmap, lnames, rnames = tensor_ring(xr, yr)

    b1 = x.b1 + y.b1
    b2 = x.b2 + y.b2 + x.b1 * y.b1
    both_complex = x.is_complex and y.is_complex

    tangent = None
    todd_cls = None
    c1 = None
    if both_complex and x.tangent is not None and y.tangent is not None:
        tangent = ChernData(rank=x.tangent.rank + y.tangent.rank,
                            total=lmap(x.tangent.total) * rmap(y.tangent.total))
    a_hat_cls = None
    if x.a_hat_cls is not None and y.a_hat_cls is not None:
        a_hat_cls = lmap(x.a_hat_cls) * rmap(y.a_hat_cls)
    if x.todd_cls is not None and y.todd_cls is not None and both_complex:
        todd_cls = lmap(x.todd_cls) * rmap(y.todd_cls)
    if both_complex and x.c1 is not None and y.c1 is not None:
        c1 = lmap(x.c1) + rmap(y.c1)

    spin_c = lmap(x.spin_c) + rmap(y.spin_c)

    primitive_x = None
    if x.b2 == 1 and y.b2 == 0 and x.primitive_x is not None and x.b1 * y.b1 == 0:
        primitive_x = lmap(x.primitive_x)
    elif y.b2 == 1 and x.b2 == 0 and y.primitive_x is not None and x.b1 * y.b1 == 0:
        primitive_x = rmap(y.primitive_x)
    elif x.b2 == y.b2 == 0 and x.b1 == y.b1 == 1 \
            and x.odd_xi is not None and y.odd_xi is not None:
        primitive_x = lmap(x.odd_xi) * rmap(y.odd_xi)

    odd_xi = None
    if (x.real_dim + y.real_dim) % 2 == 1:
        if x.odd_xi is not None and y.real_dim % 2 == 0:
            odd_xi = lmap(x.odd_xi)
        elif y.odd_xi is not None and x.real_dim % 2 == 0:
            odd_xi = rmap(y.odd_xi)

    twist = None
    if x.fundamental_twist is not None or y.fundamental_twist is not None:
        twist = ring.one()
        if x.fundamental_twist is not None:
            twist = twist * lmap(x.fundamental_twist)
        if y.fundamental_twist is not None:
            twist = twist * rmap(y.fundamental_twist)

    nef_rays = ()
    curves = ()
    if both_complex and x.b2 + y.b2 <= 2 and x.nef_rays and y.nef_rays \
            and x.curves and y.curves:
        nef_rays = tuple(lmap(r) for r in x.nef_rays) + tuple(rmap(r) for r in y.nef_rays)
        curves = tuple(
            Curve(c.name + "_1", {lnames[k]: v for k, v in c.pairings.items()})
            for c in x.curves
        ) + tuple(
            Curve(c.name + "_2", {rnames[k]: v for k, v in c.pairings.items()})
            for c in y.curves
        )

    space = Space(
        name="%s * %s" % (x.name, y.name), family="product",
        real_dim=x.real_dim + y.real_dim, b1=b1, b2=b2,
        ring=ring, is_complex=both_complex,
        complex_dim=(x.complex_dim + y.complex_dim) if both_complex else None,
        tangent=tangent, c1=c1, a_hat_cls=a_hat_cls, todd_cls=todd_cls,
        spin_c=spin_c, primitive_x=primitive_x, odd_xi=odd_xi,
        fundamental_twist=twist, nef_rays=nef_rays, curves=curves,
        factor_embeddings=(lmap, rmap),
    )
    return space


# ---------------------------------------------------------------------------
# projective bundles over a curve
# ---------------------------------------------------------------------------


def proj_bundle_over_curve(degrees, genus: int = 0) -> Space:
    """Projectivization of a sum of line bundles over a genus-g curve.

    ``degrees`` lists n line-bundle degrees; the total space has complex
    dimension n.  Ring: generators xi, f of degree 2 with f^2 = 0 and
    xi^n = e * xi^(n-1) f for e the total degree, normalized so that
    (a xi + b f)^n = a^(n-1) (a e + n b) with <xi^(n-1) f> = 1.
    """
    degrees = [int(d) for d in degrees]
    n = len(degrees)
    if n < 2:
        raise PreconditionUnmet("projective bundle needs at least two degrees")
    if genus < 0:
        raise PreconditionUnmet("genus must be nonnegative")
    e = sum(degrees)
    gens = [Generator("xi", 2, False), Generator("f", 2, False)]
    top = (n - 1, 1)
    rhs = {top: Fraction(e)} if e else {}
    ring = make_ring(RingPresentation(
        generators=gens,
        truncation=2 * n,
        power_rules={"xi": (n, rhs), "f": (2, {})},
        pairing={top: Fraction(1)},
    ))
    xi, f = ring.gen("xi"), ring.gen("f")
    total = 1 + (2 - 2 * genus) * f
    for d in degrees:
        total = total * (1 + xi - d * f)
    tangent = ChernData(rank=n, total=total)
    space = Space(
        name="PB(degrees=%s; genus=%d)" % (degrees, genus), family="PB",
        real_dim=2 * n, b1=2 * genus, b2=2,
        ring=ring, is_complex=True, complex_dim=n,
        spin_c=tangent.chern(1),
        nef_rays=(xi, f),
        curves=(Curve("fiber_line", {"xi": Fraction(1)}),
                Curve("section", {"f": Fraction(1)})),
        notes="ring ignores the odd cohomology of the base curve",
    )
    _attach_tangent(space, tangent)
    expected_c1 = n * xi + (2 - 2 * genus - e) * f
    assert space.c1 == expected_c1
    return space


# ---------------------------------------------------------------------------
# complete intersections in products of projective spaces
# ---------------------------------------------------------------------------


def complete_intersection(multidegrees, ambient) -> Space:
    """Smooth complete intersection in a product of projective spaces.

    ``multidegrees`` is an r x m matrix (one row per hypersurface) and
    ``ambient`` the list of factor dimensions [N_1..N_m].  Classes live in the
    ambient truncated ring; the pairing against the fundamental class twists
    by the product of the defining divisors.  Lefschetz makes the degree <= 2
    data faithful once the intersection has complex dimension >= 3, so the
    b2/index metadata and the primitive class are only claimed there.
    """
    rows = [[int(d) for d in row] for row in multidegrees]
    ns = [int(N) for N in ambient]
    if not ns or any(N < 1 for N in ns):
        raise PreconditionUnmet("ambient factors must have positive dimension")
    m = len(ns)
    r = len(rows)
    if r == 0:
        raise PreconditionUnmet("need at least one hypersurface")
    for row in rows:
        if len(row) != m:
            raise PreconditionUnmet("each multidegree row needs %d entries" % m)
        if any(d < 0 for d in row):
            raise PreconditionUnmet("multidegrees must be nonnegative")
        if not any(row):
            raise PreconditionUnmet("each hypersurface needs a nonzero multidegree")
    dim = sum(ns) - r
    if dim < 1:
        raise EmptyIntersection(
            "codimension %d leaves nothing of the %d-dimensional ambient space"
            % (r, sum(ns)))

    if m == 1:
        ring = truncated_polynomial_ring("H", 2, ns[0], 1)
        hs = [ring.gen("H")]
    else:
        gens = [Generator("H%d" % (i + 1), 2, False) for i in range(m)]
        rules = {"H%d" % (i + 1): (ns[i] + 1, {}) for i in range(m)}
        top = tuple(ns)
        ring = make_ring(RingPresentation(
            generators=gens, truncation=2 * sum(ns),
            power_rules=rules, pairing={top: Fraction(1)}))
        hs = [ring.gen("H%d" % (i + 1)) for i in range(m)]

    twist = ring.one()
    for row in rows:
        divisor = ring.zero()
        for d, h in zip(row, hs):
            divisor = divisor + d * h
        twist = twist * divisor

    ambient_tangent = ring.one()
    for N, h in zip(ns, hs):
        ambient_tangent = ambient_tangent * (1 + h) ** (N + 1)
    normal_total = ring.one()
    for row in rows:
        divisor = ring.zero()
        for d, h in zip(row, hs):
            divisor = divisor + d * h
        normal_total = normal_total * (1 + divisor)
    tangent = whitney_quotient(ChernData(rank=sum(ns), total=ambient_tangent),
                               ChernData(rank=r, total=normal_total))

    anticanonical = [ns[i] + 1 - sum(row[i] for row in rows) for i in range(m)]
    lefschetz = dim >= 3
    index = None
    if m == 1 and lefschetz and anticanonical[0] >= 1:
        index = anticanonical[0]

    if m == 1:
        degree_names = ",".join(str(sum(row)) for row in rows)
        name = "X_{%s} in CP(%d)" % (degree_names, ns[0])
    else:
        degree_names = ";".join("(%s)" % ",".join(str(d) for d in row) for row in rows)
        name = "X_{%s} in %s" % (degree_names, "x".join("CP(%d)" % N for N in ns))

    ke = None
    if m == 1 and lefschetz:
        degs = sorted(sum(row) for row in rows)
        if degs in ([3], [4]):
            ke = True          # general member
        elif degs == [2, 2]:
            ke = True          # every smooth member

    space = Space(
        name=name, family="CI", real_dim=2 * dim, b1=0, b2=m,
        ring=ring, is_complex=True, complex_dim=dim,
        spin_c=tangent.chern(1),
        primitive_x=hs[0] if (m == 1 and lefschetz) else None,
        fano_index=index,
        fundamental_twist=twist,
        nef_rays=tuple(hs) if (m <= 2 and lefschetz) else (),
        curves=(
            tuple(Curve("line_%d" % (i + 1),
                        {hs[i].ring.generators[j].name:
                         Fraction(1 if j == i else 0) for j in range(m)})
                  for i in range(m))
            if (m <= 2 and lefschetz) else ()),
        kahler_einstein=ke,
        notes="" if lefschetz else
              "ambient H-subring model; b2/index metadata unreliable below "
              "complex dimension 3",
    )
    _attach_tangent(space, tangent)
    return space


# ---------------------------------------------------------------------------
# blowup of projective space at a point
# ---------------------------------------------------------------------------


def blowup_point(n: int) -> Space:
    """Blowup of CP^n at one point.

    Ring Q[H,E]/(HE, H^(n+1), E^(n+1)) with <H^n> = 1 and
    <E^n> = (-1)^(n+1), so that (aH - bE)^n integrates to a^n - b^n.
    """
    if n < 2:
        raise PreconditionUnmet("point blowup needs n >= 2")
    gens = [Generator("H", 2, False), Generator("E", 2, False)]
    ring = make_ring(RingPresentation(
        generators=gens, truncation=2 * n,
        power_rules={"H": (n + 1, {}), "E": (n + 1, {})},
        pair_rules=[("H", "E")],
        pairing={(n, 0): Fraction(1), (0, n): Fraction((-1) ** (n + 1))},
    ))
    H, E = ring.gen("H"), ring.gen("E")
    c1 = (n + 1) * H - (n - 1) * E
    return Space(
        name="BlP(%d)" % n, family="BlP", real_dim=2 * n, b1=0, b2=2,
        ring=ring, is_complex=True, complex_dim=n,
        c1=c1, spin_c=c1,
        nef_rays=(H, H - E),
        curves=(Curve("exceptional_line", {"H": Fraction(0), "E": Fraction(-1)}),
                Curve("strict_line", {"H": Fraction(1), "E": Fraction(1)})),
        notes="tangent Chern data beyond c1 not tracked",
    )


# ---------------------------------------------------------------------------
# spin^c twisting
# ---------------------------------------------------------------------------


def twist_spin_c(space: Space, k: int) -> Space:
    """Replace the characteristic class c by c + 2k x; parity is preserved."""
    space.require_ring()
    if space.b2 != 1 or space.primitive_x is None:
        raise NoPrimitiveClass(
            "twisting needs b2 = 1 with a recorded primitive degree-2 class")
    if k == 0:
        return space
    new_c = space.spin_c + (2 * k) * space.primitive_x
    return dataclasses.replace(
        space, spin_c=new_c,
        name="%s twist(%d)" % (space.name, k),
        notes=(space.notes + "; " if space.notes else "") + "twisted spin^c class",
    )


# ---------------------------------------------------------------------------
# metadata-only spaces (index data without a ring)
# ---------------------------------------------------------------------------


def _metadata_space(name, n, index, ke, notes=""):
    return Space(
        name=name, family="weighted", real_dim=2 * n, b1=0, b2=1,
        ring=None, is_complex=True, complex_dim=n,
        fano_index=index, metadata_only=True, kahler_einstein=ke, notes=notes,
    )


def weighted_del_pezzo_x6(n: int) -> Space:
    """Degree-6 hypersurface in P(1^n, 2, 3); index n-1."""
    if n < 3:
        raise PreconditionUnmet("weighted del Pezzo X6 catalogued for n >= 3")
    return _metadata_space("X6 in P(1^%d,2,3)" % n, n, n - 1, True,
                           "orbifold Riemann-Roch out of scope")


def weighted_del_pezzo_x4(n: int) -> Space:
    """Degree-4 hypersurface in P(1^(n+1), 2); index n-1."""
    if n < 3:
        raise PreconditionUnmet("weighted del Pezzo X4 catalogued for n >= 3")
    return _metadata_space("X4 in P(1^%d,2)" % (n + 1), n, n - 1, True,
                           "orbifold Riemann-Roch out of scope")


def weighted_mukai_x6(n: int) -> Space:
    """Degree-6 hypersurface in P(1^(n+1), 3); index n-2."""
    if n < 3:
        raise PreconditionUnmet("weighted Mukai X6 catalogued for n >= 3")
    return _metadata_space("X6 in P(1^%d,3)" % (n + 1), n, n - 2, True,
                           "orbifold Riemann-Roch out of scope")


def grassmann_section(n: int) -> Space:
    """Linear section of the Pluecker-embedded G(2, C^5); index n-1."""
    if not 3 <= n <= 6:
        raise PreconditionUnmet("the Grassmannian section exists for 3 <= n <= 6")
    ke = {3: True, 4: False, 5: False, 6: True}[n]
    return _metadata_space("G(2,C^5) cap CP(%d)" % (n + 3), n, n - 1, ke,
                           "cohomology ring not catalogued; index data only")
