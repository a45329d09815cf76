"""
Octahedral Ford spheres
=======================

Over the Gaussian integers the Ford spheres do not form tetrahedra but
octahedra. For a tangent triangle S[U], S[U+V], S[V] (U, V pairs with a unit
determinant) and rho = +-i the six spheres

    X_rho = {U, U+V, V, U+V+rho*V, U+rho*V, U+rho*(U+V)}

are mutually tangent except for the three antipodal pairs, listed here in the
order A, B, C, D, E, F with antipodes A-D, B-E, C-F. Each of the eight faces
is again a tangent triangle, which drives the recursion.

The barycentric description uses Descartes triples: with
u + v*i = conj(alpha)*beta,

    a = |beta|^2 + v,  b = |alpha|^2 + v,  c = -v,  m = u,

and m^2 = ab + ac + bc.
"""

from __future__ import annotations

import cmath
import logging
from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from math import ceil, floor, gcd, isqrt
from typing import NamedTuple

from .helper import DEFAULTS
from .quadint import INFINITY, QuadInt, QuadRat, exact_div, qi_coprime, qi_sea, sea_replay
from .spheres import (
    FordSphere,
    NormalSphere,
    Region,
    enumerate_ford_spheres,
    mutual_spheres,
    sphere_tangent,
)

logger = logging.getLogger(__name__)

I = QuadInt(0, 1, 1)
ONE = QuadInt(1, 0, 1)
ZERO = QuadInt(0, 0, 1)


def _check_gaussian(alpha: QuadInt, beta: QuadInt) -> None:
    if alpha.D != 1 or beta.D != 1:
        raise ValueError(f"Gaussian pairs need D=1, got D={alpha.D} and D={beta.D}.")
    if not qi_coprime(alpha, beta):
        raise ValueError(f"({alpha}, {beta}) is not a coprime pair.")


"""
Parents
-------

The slow Euclidean run of a coprime pair ends with a step that turns
[rho1, rho2], two units, into a pair with a zero. Replaying the other steps
backwards on [rho1, 0] and [0, rho2] gives two tangent pairs that sum to
[alpha, beta].
"""


def sea_rank(alpha: QuadInt, beta: QuadInt) -> int:
    return len(qi_sea(alpha, beta).steps)


def gauss_parents(alpha: QuadInt, beta: QuadInt):
    _check_gaussian(alpha, beta)
    run = qi_sea(alpha, beta)
    steps = run.steps
    if not steps:
        raise ValueError(f"({alpha}, {beta}) has rank 0 and no parents.")
    rho1, rho2 = sea_replay(steps[-1:], run.terminal)
    first = sea_replay(steps[:-1], (rho1, ZERO))
    second = sea_replay(steps[:-1], (ZERO, rho2))
    return first, second


"""
Generation
----------
"""


def gen_P_i(norm_bound=None, window=None) -> list[FordSphere]:
    norm_bound = DEFAULTS.gaussian_norm_bound if norm_bound is None else norm_bound
    window = Region.square() if window is None else window
    return enumerate_ford_spheres(1, norm_bound, window)


def octahedron(U, V, rho: QuadInt) -> tuple:
    """
    The six pairs of X_rho in the order A, B, C, D, E, F.
    """
    W = (U[0] + V[0], U[1] + V[1])
    return (
        U,
        W,
        V,
        (W[0] + rho * V[0], W[1] + rho * V[1]),
        (U[0] + rho * V[0], U[1] + rho * V[1]),
        (U[0] + rho * W[0], U[1] + rho * W[1]),
    )


ANTIPODES = ((0, 3), (1, 4), (2, 5))


def _det(X, Y) -> QuadInt:
    return X[0] * Y[1] - X[1] * Y[0]


def face_triangle(X, Y, Z):
    """
    Writes a tangent triple as (X, Y') with Z a unit multiple of X + Y'.
    """
    d = _det(X, Y)
    x = exact_div(_det(Z, Y), d)
    y = exact_div(_det(X, Z), d)
    t = exact_div(y, x)
    return X, (t * Y[0], t * Y[1])


def faces(octa):
    """
    The eight faces: one vertex from each antipodal pair.
    """
    for i, j, k in product(*ANTIPODES):
        yield octa[i], octa[j], octa[k]


def _passes(s: FordSphere, norm_bound: int, reach: Region) -> bool:
    return s.is_plane or (s.beta.norm() <= norm_bound and reach.contains(s.tangent))


ROOT_TRIANGLE = ((ZERO, ONE), (ONE, ZERO))


def iter_octahedra(depth=None, norm_bound=None, window=None, margin=1):
    """
    Yields the six Ford spheres (A, ..., F) of every octahedron of the
    recursion. Faces with a sphere beyond the norm bound or farther than
    ``margin`` from the window are not expanded.
    """
    norm_bound = DEFAULTS.gaussian_norm_bound if norm_bound is None else norm_bound
    window = Region.square() if window is None else window
    reach = window.expanded(margin)

    seen = set()
    front = [ROOT_TRIANGLE]
    level = 0
    while front and (depth is None or level < depth):
        level += 1
        new_front = []
        for U, V in front:
            for rho in (I, -I):
                pairs = octahedron(U, V, rho)
                spheres = tuple(FordSphere(*p) for p in pairs)
                key = frozenset(spheres)
                if key in seen:
                    continue
                seen.add(key)
                yield spheres
                ok = [_passes(s, norm_bound, reach) for s in spheres]
                for i, j, k in product(*ANTIPODES):
                    if ok[i] and ok[j] and ok[k]:
                        new_front.append(face_triangle(pairs[i], pairs[j], pairs[k]))
        front = new_front
    logger.debug(f"{len(seen)} octahedra after {level} levels")


def gen_G_i(depth=None, norm_bound=None, window=None, margin=1, include_plane=False):
    """
    Octahedral recursion from {S_{0,1}, S_{1,1}, S_{1,0}}.
    """
    norm_bound = DEFAULTS.gaussian_norm_bound if norm_bound is None else norm_bound
    window = Region.square() if window is None else window
    found = {FordSphere(ZERO, ONE), FordSphere(ONE, ONE), FordSphere.plane(1)}
    for octa in iter_octahedra(depth, norm_bound, window, margin):
        found.update(octa)
    result = [
        s
        for s in found
        if (s.is_plane and include_plane)
        or (not s.is_plane and s.beta.norm() <= norm_bound and window.contains(s.tangent))
    ]
    result.sort(key=FordSphere.sort_key)
    logger.debug(f"G_i: {len(result)} spheres")
    return result


def gen_R_i(depth=None, norm_bound=None, window=None, margin=1) -> list[FordSphere]:
    """
    Pair recursion: start with S_{0,1} and the plane, add S[U + rho*V] for
    tangent S[U], S[V] and every unit rho.
    """
    norm_bound = DEFAULTS.gaussian_norm_bound if norm_bound is None else norm_bound
    window = Region.square() if window is None else window
    reach = window.expanded(margin)
    units = (ONE, I, -ONE, -I)

    found = [FordSphere(ZERO, ONE), FordSphere.plane(1)]
    known = set(found)
    level = 0
    while depth is None or level < depth:
        level += 1
        new = []
        for s in found:
            for t in found:
                if not sphere_tangent(s, t):
                    continue
                for rho in units:
                    child = FordSphere(s.alpha + rho * t.alpha, s.beta + rho * t.beta)
                    if child not in known and _passes(child, norm_bound, reach):
                        known.add(child)
                        new.append(child)
        if not new:
            break
        found.extend(new)
    result = [s for s in found if not s.is_plane and window.contains(s.tangent)]
    result.sort(key=FordSphere.sort_key)
    return result


"""
Cross ratio and Moebius octahedra
---------------------------------

[z, q, r, s] = (z - q)(r - s) / ((z - s)(r - q)), the factors holding the
point at infinity cancel. The Moebius map sending 0, 1, infinity to q, r, s
is, in homogeneous coordinates,

    (-s1 [rq], q1 [rs]; -s2 [rq], q2 [rs]),    [xy] = x1 y2 - x2 y1.
"""


def cross_ratio(z, q, r, s):
    if q == r or r == s or q == s:
        raise ValueError(f"Degenerate cross ratio, q={q}, r={r}, s={s} are not distinct.")
    d = next(p.d for p in (z, q, r, s) if p is not INFINITY)
    if z == q:
        return QuadRat(QuadInt(0, 0, d))
    if z == r:
        return QuadRat(QuadInt(1, 0, d))
    if z == s:
        return INFINITY
    num = den = QuadRat(QuadInt(1, 0, d))
    for x, y in ((z, q), (r, s)):
        if x is not INFINITY and y is not INFINITY:
            num = num * (x - y)
    for x, y in ((z, s), (r, q)):
        if x is not INFINITY and y is not INFINITY:
            den = den * (x - y)
    return num / den


def _hom(z, d):
    one = QuadRat(QuadInt(1, 0, d))
    if z is INFINITY:
        return one, one - one
    return z, one


def moebius_through(q, r, s):
    """
    Matrix with entries in Q(sigma) mapping 0, 1, infinity to q, r, s.
    """
    d = next(p.d for p in (q, r, s) if p is not INFINITY)
    q1, q2 = _hom(q, d)
    r1, r2 = _hom(r, d)
    s1, s2 = _hom(s, d)
    rq = r1 * q2 - r2 * q1
    rs = r1 * s2 - r2 * s1
    if not rq or not rs or not (q1 * s2 - q2 * s1):
        raise ValueError(f"The points {q}, {r}, {s} are not distinct.")
    return (-s1 * rq, q1 * rs, -s2 * rq, q2 * rs)


def apply_matrix(m, z):
    a, b, c, d = m
    if z is INFINITY:
        return INFINITY if not c else a / c
    den = c * z + d
    if not den:
        return INFINITY
    return (a * z + b) / den


def canonical_octahedron(branch: int = 1) -> tuple:
    """
    0, (1+i)/2, 1, 1+i, infinity, i for branch +1, conjugated for -1.
    """
    points = (
        QuadRat(ZERO),
        QuadRat(QuadInt(1, 1, 1), 2),
        QuadRat(ONE),
        QuadRat(QuadInt(1, 1, 1)),
        INFINITY,
        QuadRat(I),
    )
    if branch == 1:
        return points
    if branch == -1:
        return tuple(p if p is INFINITY else p.conj() for p in points)
    raise ValueError(f"branch must be +1 or -1, got {branch}.")


class MobiusOctahedron(NamedTuple):
    points: tuple  # A, B, C, D, E, F

    def is_finite(self) -> bool:
        return all(p is not INFINITY for p in self.points)


def mobius_octahedron(p1, p2, p3, branch: int = 1) -> MobiusOctahedron:
    m = moebius_through(p1, p2, p3)
    return MobiusOctahedron(tuple(apply_matrix(m, z) for z in canonical_octahedron(branch)))


def octahedron_spheres(o: MobiusOctahedron) -> list:
    """
    The six spheres at the points of o: the mutually tangent triples on
    A, B, C and D, E, F, or Ford spheres when a point is at infinity.
    """
    points = o.points
    if o.is_finite():
        return mutual_spheres(*points[:3]) + mutual_spheres(*points[3:])
    return [FordSphere.plane(1) if p is INFINITY else FordSphere.from_tangent(p) for p in points]


"""
The distance identity
---------------------

For a Moebius octahedron, with XY = |X - Y|,

    (AE)^2 = (AB)(AC)(ED)(EF) / ((BC)(DF)).

Both sides pick up the same factor under a Moebius map, so it suffices that
it holds in the limit E -> infinity of the canonical octahedron, where it
reads (AB)(AC) = (BC)(DF). We compare squares of squared distances.
"""

LABELS = "ABCDEF"


def _sq(points, x: str, y: str) -> Fraction:
    return (points[LABELS.index(x)] - points[LABELS.index(y)]).norm()


def _eq9_holds(points, denominator: str) -> bool:
    lhs = _sq(points, "A", "E") ** 2 * _sq(points, "B", "C") * _sq(points, *denominator)
    rhs = _sq(points, "A", "B") * _sq(points, "A", "C") * _sq(points, "E", "D") * _sq(points, "E", "F")
    return lhs == rhs


def relabelings():
    """
    The 48 relabelings that keep antipodes opposite.
    """
    for perm in permutations(range(3)):
        for flips in product((0, 1), repeat=3):
            slots = [None] * 6
            for pair, (target, flip) in enumerate(zip(perm, flips)):
                i, j = ANTIPODES[pair]
                ti, tj = ANTIPODES[target]
                if flip:
                    ti, tj = tj, ti
                slots[ti], slots[tj] = i, j
            yield tuple(slots)


def eq9_check(o: MobiusOctahedron, denominator: str = "DF") -> bool:
    if not o.is_finite():
        raise ValueError("The distance identity needs six finite points.")
    for slots in relabelings():
        points = [o.points[i] for i in slots]
        if not _eq9_holds(points, denominator):
            return False
    return True


def resolve_eq9_denominator(o: MobiusOctahedron) -> str:
    """
    "DF", "BF", "both" or "neither", depending on which denominator holds.
    """
    if not o.is_finite():
        raise ValueError("The distance identity needs six finite points.")
    df = _eq9_holds(o.points, "DF")
    bf = _eq9_holds(o.points, "BF")
    verdict = {(True, True): "both", (True, False): "DF", (False, True): "BF"}.get((df, bf), "neither")
    logger.info(f"distance identity: (BC)(DF) {df}, (BC)(BF) {bf} -> {verdict}")
    return verdict


"""
Descartes triples
-----------------
"""


def descartes_convert(triple, sign: int = 1) -> tuple:
    a, b, c = triple
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}.")
    k = a * b + a * c + b * c
    root = isqrt(k) if k >= 0 else -1
    if root * root != k:
        raise ValueError(f"{tuple(triple)}: ab+ac+bc = {k} is not a perfect square.")
    return a, b, c, a + b + c + sign * 2 * root


def is_descartes_quad(q) -> bool:
    return sum(q) ** 2 == 2 * sum(x * x for x in q)


def gauss_to_bary(alpha: QuadInt, beta: QuadInt) -> tuple:
    _check_gaussian(alpha, beta)
    p = alpha.conj() * beta
    u, v = p.x, p.y
    return beta.norm() + v, alpha.norm() + v, -v, u


def bary_to_gauss(a: int, b: int, c: int, m: int) -> tuple[QuadInt, QuadInt]:
    """
    The pair with gauss_to_bary(alpha, beta) = (a, b, c, m).
    """
    if m * m != a * b + a * c + b * c:
        raise ValueError(f"({a},{b},{c},{m}): m^2 = ab+ac+bc fails.")
    n = a + c
    if n <= 0:
        raise ValueError(f"({a},{b},{c},{m}): a+c = |beta|^2 must be positive.")
    s = FordSphere.from_tangent(QuadRat.from_coords(Fraction(m, n), Fraction(c, n), 1))
    if s.beta.norm() != n:
        raise ValueError(f"({a},{b},{c},{m}): gcd(a, b, c, m) is not 1.")
    return s.alpha, s.beta


def gen_M_B_i(norm_bound=None, window=None) -> list[tuple]:
    """
    Signed triples (a, b, c, m) whose sphere has |beta|^2 = a+c <= norm_bound
    and tangent point (m + ci)/(a+c) in the window.
    """
    norm_bound = DEFAULTS.gaussian_norm_bound if norm_bound is None else norm_bound
    window = Region.square() if window is None else window
    result = []
    for n in range(1, norm_bound + 1):
        for c in range(ceil(window.y_lo * n), floor(window.y_hi * n) + 1):
            a = n - c
            for m in range(ceil(window.x_lo * n), floor(window.x_hi * n) + 1):
                top = m * m - a * c
                if top % n:
                    continue
                q = (a, top // n, c, m)
                if gcd(*q) == 1:
                    result.append(q)
    result.sort(key=lambda q: (Fraction(q[3], q[0] + q[2]), Fraction(q[2], q[0] + q[2]), q[0] + q[2]))
    logger.debug(f"M(B_i): {len(result)} signed triples with a+c <= {norm_bound}")
    return result


def signed_quads(entry_bound: int) -> list[tuple]:
    """
    Primitive (a, b, c, m) with m^2 = ab+ac+bc, a+c > 0 and every |entry| <=
    entry_bound, whatever the tangent point.

    With n = a+c, b = (m^2 - ac)/n, so m runs over the square roots of ac mod n.
    """
    e = entry_bound
    result = []
    for n in range(1, 2 * e + 1):
        roots = {}
        for m in range(-e, e + 1):
            roots.setdefault(m * m % n, []).append(m)
        for a in range(max(-e, n - e), min(e, n + e) + 1):
            c = n - a
            for m in roots.get(a * c % n, ()):
                b = (m * m - a * c) // n
                if abs(b) <= e and gcd(a, b, c, m) == 1:
                    result.append((a, b, c, m))
    result.sort()
    logger.debug(f"{len(result)} signed triples with |entries| <= {entry_bound}")
    return result


def pair_norm_descartes(t1, t2) -> int:
    a, b, c, m = t1
    A, B, C, M = t2
    for t in (t1, t2):
        if t[3] ** 2 != t[0] * t[1] + t[0] * t[2] + t[1] * t[2]:
            raise ValueError(f"{tuple(t)}: m^2 = ab+ac+bc fails.")
    return a * B + a * C + b * A + b * C + c * A + c * B - 2 * m * M


"""
Representations
---------------

With alpha = a1 + a2*i, beta = b1 + b2*i:

    a + b     = (a1 + b2)^2 + (a2 - b1)^2
    a + b + c = (a1^2 + a1*b2 + b2^2) + (a2^2 - a2*b1 + b1^2).
"""


@lru_cache(maxsize=None)
def _two_squares(n: int) -> bool:
    if n < 0:
        return False
    for x in range(isqrt(n) + 1):
        y = isqrt(n - x * x)
        if x * x + y * y == n:
            return True
    return False


def _eisenstein_norms(bound: int) -> set:
    k = isqrt(bound) + 1
    return {
        m * m + m * j + j * j
        for m in range(-k, k + 1)
        for j in range(-k, k + 1)
        if m * m + m * j + j * j <= bound
    }


@lru_cache(maxsize=None)
def _two_eisenstein_norms(n: int) -> bool:
    if n < 0:
        return False
    norms = _eisenstein_norms(n)
    return any(n - x in norms for x in norms)


def cor510_check(q) -> bool:
    a, b, c = q[:3]
    return _two_squares(a + b) and _two_eisenstein_norms(a + b + c)


def cor510_witness(alpha: QuadInt, beta: QuadInt):
    a1, a2 = alpha.x, alpha.y
    b1, b2 = beta.x, beta.y
    return (a1 + b2, a2 - b1), ((a1, b2), (a2, -b1))


"""
The map M
---------

M(z) = iz/((1 - z) omega) takes the Eisenstein frame to the Gaussian one. It
is only evaluated in floating point, to compare M^-1(S_{alpha,beta}) with the
sphere <a + m/sqrt3, b + m/sqrt3, c + m/sqrt3>.
"""

OMEGA = cmath.exp(2j * cmath.pi / 3)


def m_map(z: complex) -> complex:
    return 1j * z / ((1 - z) * OMEGA)


def m_map_inverse(z: complex) -> complex:
    return OMEGA * z / (OMEGA * z + 1j)


def m_map_sphere(center: complex, radius: float):
    """
    Poincare extension: S(z, r) -> S(M(z), |M'(z)| r), |M'(z)| = 1/|1-z|^2.
    """
    return m_map(center), radius / abs(1 - center) ** 2


def m_inverse_pair(alpha: QuadInt, beta: QuadInt):
    """
    M^-1(S_{alpha,beta}) as (center, radius), from the pair
    (omega*alpha, omega*alpha + i*beta).
    """
    top = OMEGA * complex(alpha)
    bottom = top + 1j * complex(beta)
    return top / bottom, 1 / (2 * abs(bottom) ** 2)


def bary_float_sphere(a: float, b: float, c: float):
    """
    <a, b, c> over the frame 0, 1, 1+omega as (center, radius).
    """
    n = a + b + c
    return (b + c * (1 + OMEGA)) / n, 1 / (2 * n)


def shifted_weights(a: int, b: int, c: int, m: int):
    shift = m / 3 ** 0.5
    return a + shift, b + shift, c + shift


"""
Spheres over circle tangencies
------------------------------

Over the contact point of two externally tangent circles sits the normal
sphere of curvature c1 + c2.
"""


def sphere_over_tangency(center1: QuadRat, curv1, center2: QuadRat, curv2, point: QuadRat) -> NormalSphere:
    curv1, curv2 = Fraction(curv1), Fraction(curv2)
    if curv1 <= 0 or curv2 <= 0:
        raise ValueError(f"Curvatures must be positive, got {curv1} and {curv2}.")
    r1, r2 = 1 / curv1, 1 / curv2
    if (center1 - center2).norm() != (r1 + r2) ** 2:
        raise ValueError(f"The circles around {center1} and {center2} are not externally tangent.")
    if center1 + (center2 - center1) * (r1 / (r1 + r2)) != point:
        raise ValueError(f"{point} is not the contact point of the two circles.")
    return NormalSphere(point, 1 / (curv1 + curv2))
