"""Exact computations on the threefold x + y*(x^d + z^a2)^l + t^a3 = 0.

X = {x + y*(x^d + z^a2)^l + t^a3 = 0} in affine 4-space. The package covers
the coordinate ring and its normal forms, the locally nilpotent derivation
and its exponentials, Aut(X) as pairs (p, mu), and the orbit classification.
"""

from .autgroup import (Automorphism, SubstitutionData, act_on_point, apply_aut, compose,
                       decompose, generator_images, inverse, lift_from_A)
from .coordring import (RingElement, ThreefoldParams, ideal_I_membership, ideal_J_membership,
                        make_params, normal_form, ring_eq)
from .geometry import SurfacePoint, fiber_type, make_point, orbit_classify, same_orbit
from .lnd import Derivation, exp_lnd, jacobian_check, nilpotency_index
from .parsing import parse_poly, parse_scalar
from .polynomials import Poly
from .scalars import Cyclo, zeta

__version__ = "0.1.0"
