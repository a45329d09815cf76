from .helper import DEFAULTS, Parameters
from .quadint import (
    EUCLIDEAN,
    HEEGNER,
    INFINITY,
    Discriminant,
    QuadInt,
    QuadRat,
    qi_approximate,
    qi_arith,
    qi_coprime,
    qi_floor_frac,
    qi_gcd,
    qi_norm,
    qi_sea,
    qi_units,
)
from .circles import FordCircle, circle_parents, circle_tangent, gen_circles, sea_pair
from .spheres import (
    FordSphere,
    MobiusMap,
    NormalSphere,
    Region,
    mobius_apply,
    mutual_radii,
    sphere_completions,
    sphere_tangent,
)
from .eisenstein import bary_to_eis, eis_to_bary, gen_G_omega, gen_P_omega, gsea
from .gaussian import gauss_parents, gauss_to_bary, gen_G_i, gen_P_i, mobius_octahedron
from .general import SigmaBary, XiFrame, gen_P_sigma, mu_apply, mu_inverse, secant_add, secant_enumerate

__version__ = "0.1"
