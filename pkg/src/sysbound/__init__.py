"""Exact-arithmetic bound calculator for a catalog of explicit manifolds.

The package evaluates sharp curvature-systole, volume, and width constants
through characteristic-class calculus in truncated rational cohomology rings,
twist (index) polynomials, nef-cone optimization, Grassmannian-bundle Gysin
pushforwards, and exact lattice reduction.
"""

from .catalog import (Space, blowup_point, circle, complete_intersection,
                      grassmann_section, integrate, product,
                      proj_bundle_over_curve, projective_space, quadric,
                      sphere, twist_spin_c, weighted_del_pezzo_x4,
                      weighted_del_pezzo_x6, weighted_mukai_x6)
from .characteristic import (ChernData, PowerSums, a_hat, chern_character,
                             chern_from_power_sums, newton_power_sums, todd,
                             whitney_quotient)
from .cones import (ConeProblem, ContractionReport, Unbounded,
                    bundle_profile_sup, bundle_systole_profile, cone_problem,
                    multiproj_contractions, nef_threshold, phi, phi_sup,
                    s_alpha)
from .engine import (IndexPolynomial, PiScaled, RationalPolynomial,
                     avg_scalar_curvature, gromov_width_bound,
                     hilbert_polynomial, index_polynomial, length,
                     product_length_bound, systolic_bound, todd_genus, volume)
from .graded import (GradedClass, Generator, Ring, RingPresentation,
                     exp_class, make_ring, tensor_ring)
from .lattices import (NormedLattice, ReducedDualBasis, TransferenceReport,
                       dual_lattice, reduced_dual_basis, successive_minima,
                       transference_check)
from .pushforward import (SymmetricPolynomial, localization_pushforward,
                          primitive_coefficient, segre_pushforward)

__version__ = "0.1.0"
