"""
Ford spheres over every Heegner ring
====================================

For all nine Heegner numbers D the Ford spheres S_{alpha,beta} with
alpha, beta coprime in Z[sigma] have disjoint interiors and fill the upper
half space densely. To describe them by integers we move them with the
Moebius map

    mu(z) = omega*z / (omega*z + 1),    mu: 0, 1, infinity -> 0, 1+omega, 1,

onto the equilateral frame 0, 1, 1+omega. With conj(alpha)*beta = u + v*sigma
the image has the barycentric weights

    class A:  (|beta|^2 - u, |alpha|^2 - u, u + v, -v)
    class B:  (|beta|^2 - u, |alpha|^2 - u, u,      v)

read as the sphere <a + m*xi, b + m*xi, c + m*xi> with

    xi = (sqrt3 - sqrtD) / sqrt12  (class A),   xi = sqrtD / sqrt3  (class B).

The integer quadruples (a, b, c, m) are exactly the primitive solutions of

    class A:  ab + ac + bc + (a+b+c)m = (D-3)/4 * m^2
    class B:  ab + ac + bc = D * m^2

with |beta|^2 > 0, plus the plane (0, 1, 0, 0). Exact paths only ever touch
the integers, xi is evaluated in floats for numerical cross checks.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from itertools import product
from math import gcd, isqrt, lcm, sqrt
from typing import NamedTuple

from .gaussian import OMEGA, bary_float_sphere
from .helper import DEFAULTS
from .quadint import INFINITY, Discriminant, QuadInt, QuadRat, qi_approximate
from .spheres import FordSphere, Region, enumerate_ford_spheres

logger = logging.getLogger(__name__)


class SigmaBary(NamedTuple):
    a: int
    b: int
    c: int
    m: int
    D: int

    @property
    def klass(self) -> str:
        return Discriminant(self.D).klass

    def coords(self) -> tuple[int, int, int, int]:
        return self.a, self.b, self.c, self.m

    def beta_norm(self) -> int:
        """
        |beta|^2 of the preimage, a linear form in the weights.
        """
        if self.klass == "A":
            return self.a + self.c + self.m
        return self.a + self.c

    def alpha_norm(self) -> int:
        if self.klass == "A":
            return self.b + self.c + self.m
        return self.b + self.c

    def canonical(self) -> SigmaBary:
        """
        Divided by the gcd, with the sign that makes |beta|^2 (then
        |alpha|^2) positive.
        """
        g = gcd(*self.coords())
        if g == 0:
            raise ValueError("(0, 0, 0, 0) has no canonical form.")
        if (self.beta_norm(), self.alpha_norm()) < (0, 0):
            g = -g
        return SigmaBary(self.a // g, self.b // g, self.c // g, self.m // g, self.D)

    def validate(self) -> SigmaBary:
        if not eq11_verify(self):
            raise ValueError(f"{self.coords()} is not on the D={self.D} quadric {_quadric(self.D)}.")
        if gcd(*self.coords()) != 1:
            raise ValueError(f"{self.coords()}: gcd(a, b, c, m) is not 1.")
        return self


def _quadric(D: int) -> str:
    if Discriminant(D).klass == "A":
        return "ab+ac+bc+(a+b+c)m = (D-3)/4 m^2"
    return "ab+ac+bc = D m^2"


def eq11_verify(b: SigmaBary) -> bool:
    d = Discriminant(b.D)
    a, b_, c, m = b.coords()
    pairs = a * b_ + a * c + b_ * c
    if d.klass == "A":
        return 4 * (pairs + (a + b_ + c) * m) == (d.D - 3) * m * m
    return pairs == d.D * m * m


class XiFrame(NamedTuple):
    D: int

    @property
    def xi(self) -> float:
        if Discriminant(self.D).klass == "A":
            return (sqrt(3) - sqrt(self.D)) / sqrt(12)
        return sqrt(self.D) / sqrt(3)

    def weights(self, b: SigmaBary) -> tuple[float, float, float]:
        shift = b.m * self.xi
        return b.a + shift, b.b + shift, b.c + shift

    def sphere(self, b: SigmaBary):
        """
        (center, radius) of the shifted barycentric sphere, in floats.
        """
        return bary_float_sphere(*self.weights(b))


"""
The map mu
----------
"""


def mu_apply(s) -> SigmaBary:
    """
    s:
        FordSphere or a pair (alpha, beta), coprime
    """
    if not isinstance(s, FordSphere):
        s = FordSphere(*s)
    if s.is_plane:
        return SigmaBary(0, 1, 0, 0, s.D)
    p = s.alpha.conj() * s.beta
    u, v = p.x, p.y
    nb, na = s.beta.norm(), s.alpha.norm()
    if s.d.klass == "A":
        return SigmaBary(nb - u, na - u, u + v, -v, s.D)
    return SigmaBary(nb - u, na - u, u, v, s.D)


def mu_inverse(b) -> FordSphere:
    b = SigmaBary(*b).validate()
    d = Discriminant(b.D)
    n = b.beta_norm()
    if n < 0:
        raise ValueError(f"{b.coords()}: |beta|^2 = {n} is negative, use the canonical sign.")
    if n == 0:
        if b.coords() != (0, 1, 0, 0):
            raise ValueError(f"{b.coords()}: |beta|^2 = 0 but this is not the plane (0, 1, 0, 0).")
        return FordSphere.plane(d)
    # alpha/beta = conj(u + v*sigma)/|beta|^2
    if d.klass == "A":
        z = QuadRat(QuadInt(b.c, b.m, d), n)
    else:
        z = QuadRat(QuadInt(b.c, -b.m, d), n)
    s = FordSphere.from_tangent(z)
    if mu_apply(s) != b:
        raise RuntimeError(f"{b.coords()} inverts to {s}, which maps to {mu_apply(s).coords()}.")
    return s


def mu_image_approx(s: FordSphere):
    """
    mu(S_{alpha,beta}) = S_{omega*alpha, omega*alpha + beta} as floats.
    """
    top = OMEGA * complex(s.alpha)
    bottom = top + complex(s.beta)
    return top / bottom, 1 / (2 * abs(bottom) ** 2)


def pair_norm_general(b1: SigmaBary, b2: SigmaBary) -> int:
    """
    |alpha*delta - beta*gamma|^2 for the preimages, computed from the weights.
    """
    if b1.D != b2.D:
        raise ValueError(f"discriminant mismatch: {b1.D} and {b2.D}")
    a, b, c, m = b1.coords()
    A, B, C, M = b2.coords()
    cross = a * (B + C) + b * (A + C) + c * (A + B)
    if Discriminant(b1.D).klass == "A":
        return cross + m * (A + B + C) + M * (a + b + c) - (b1.D - 3) // 2 * m * M
    return cross - 2 * b1.D * m * M


"""
Secant addition
---------------

The quadratic f(x) = x^2 - x + (D+1)/4 (class A) or x^2 + D (class B) has no
rational roots, and

    x + y := (x f(y) - y f(x)) / (f(y) - f(x))

is an abelian group law on Q and infinity, infinity being the identity. With
z the inverse of x + y, so that x + y + z = infinity, and m the least
positive integer clearing the denominators of x, y and z,

    (a, b, c) = (-m*x, -m*y, -m*z)

solves the quadric above for the slot m. Every such weight triple yields all
integer roots m of the quadric, which is quadratic in m.
"""


def secant_add(x, y, D):
    d = Discriminant(D)
    if x is INFINITY:
        return y
    if y is INFINITY:
        return x
    x, y = Fraction(x), Fraction(y)
    if d.klass == "A":
        num, den = x * y - d.k, x + y - 1
    else:
        num, den = x * y - d.D, x + y
    if den == 0:
        return INFINITY
    return num / den


def secant_inverse(w, D):
    if w is INFINITY:
        return INFINITY
    if Discriminant(D).klass == "A":
        return 1 - Fraction(w)
    return -Fraction(w)


def rationals(height: int) -> list[Fraction]:
    """
    All p/q with max(|p|, q) <= height.
    """
    found = {Fraction(p, q) for q in range(1, height + 1) for p in range(-height, height + 1)}
    return sorted(found)


def height(x: Fraction) -> int:
    x = Fraction(x)
    return max(abs(x.numerator), x.denominator)


def secant_height(b: SigmaBary) -> int:
    """
    The height bound at which secant_enumerate produces b directly.
    """
    if b.m == 0:
        return max(abs(b.a), abs(b.b))
    return max(height(Fraction(-b.a, b.m)), height(Fraction(-b.b, b.m)))


def m_roots(a: int, b: int, c: int, D) -> list[int]:
    d = Discriminant(D)
    s1, s2 = a + b + c, a * b + a * c + b * c
    if d.klass == "B":
        if s2 < 0 or s2 % d.D:
            return []
        r = isqrt(s2 // d.D)
        return sorted({r, -r}) if r * r == s2 // d.D else []
    e = (d.D - 3) // 4
    if e == 0:
        # D = 3: the quadric is linear in m
        if s1 == 0 and s2 == 0:
            # a = b = c = 0: every m works, keep the primitive m = 1
            return [1]
        if s1 == 0 or s2 % s1:
            return []
        return [-s2 // s1]
    disc = s1 * s1 + 4 * e * s2
    if disc < 0:
        return []
    r = isqrt(disc)
    if r * r != disc:
        return []
    return sorted({(s1 + t) // (2 * e) for t in (r, -r) if (s1 + t) % (2 * e) == 0})


def secant_solutions(x, y, D) -> set:
    """
    The canonical quadric points generated by the secant parameters x, y.
    """
    w = secant_add(x, y, D)
    if w is INFINITY:
        return set()
    z = secant_inverse(w, D)
    x, y = Fraction(x), Fraction(y)
    m = lcm(x.denominator, y.denominator, z.denominator)
    a, b, c = (int(-m * t) for t in (x, y, z))
    found = set()
    for root in m_roots(a, b, c, D):
        if a or b or c or root:
            found.add(SigmaBary(a, b, c, root, Discriminant(D).D).canonical())
    return found


def _m_zero_point(a: int, b: int, D: int):
    """
    The point (a, b, c, 0) with ab + ac + bc = 0, if c is an integer.
    """
    if a + b == 0:
        return SigmaBary(0, 0, 1, 0, D) if a == 0 else None
    if (a * b) % (a + b):
        return None
    return SigmaBary(a, b, -a * b // (a + b), 0, D).canonical()


def _m_zero_solutions(height_bound: int, D: int) -> set:
    """
    ab + ac + bc = 0, the points of the real circle through 0, 1, 1+omega.
    """
    found = {SigmaBary(0, 0, 1, 0, D)}
    for a, b in product(range(-height_bound, height_bound + 1), repeat=2):
        point = _m_zero_point(a, b, D)
        if point is not None:
            found.add(point)
    return found


def secant_enumerate(D, height_bound=None) -> set:
    d = Discriminant(D)
    height_bound = DEFAULTS.secant_height_bound if height_bound is None else height_bound
    rs = rationals(height_bound)
    found = _m_zero_solutions(height_bound, d.D)
    for x, y in product(rs, repeat=2):
        found |= secant_solutions(x, y, d)
    found = {b for b in found if eq11_verify(b) and gcd(*b.coords()) == 1}
    logger.debug(f"secant enumeration D={d.D}: {len(found)} solutions from {len(rs)} parameters")
    return found


def secant_generated(b: SigmaBary) -> bool:
    """
    Whether the secant construction produces b from its own parameters
    x = -a/m, y = -b/m (or from the m = 0 branch), whatever their height.
    """
    b = SigmaBary(*b)
    if not eq11_verify(b) or gcd(*b.coords()) != 1:
        return False
    b = b.canonical()
    if b.m == 0:
        return _m_zero_point(b.a, b.b, b.D) == b
    return b in secant_solutions(Fraction(-b.a, b.m), Fraction(-b.b, b.m), b.D)


"""
Generation and maximality
-------------------------
"""


def gen_P_sigma(D, norm_bound=None, window=None) -> list[FordSphere]:
    norm_bound = DEFAULTS.sigma_norm_bound if norm_bound is None else norm_bound
    window = Region.cell() if window is None else window
    return enumerate_ford_spheres(Discriminant(D), norm_bound, window)


def maximality_probe(z, r, D) -> FordSphere:
    """
    A Ford sphere whose interior meets S(z, r).

    An approximation |beta*z - alpha|^2 < 2r puts alpha/beta inside the
    tangency distance sqrt(4 r / (2|beta|^2)). Cancelling a common factor only
    grows the Ford sphere.
    """
    d = Discriminant(D)
    r = Fraction(r)
    if r <= 0:
        raise ValueError(f"The probe radius must be positive, got {r}.")
    if isinstance(z, QuadRat):
        if z.d != d:
            raise ValueError(f"discriminant mismatch: {z.D} and {d.D}")
        return FordSphere.from_tangent(z)
    approx = qi_approximate(z, min(r, Fraction(1)), d)
    sphere = FordSphere.from_tangent(QuadRat(approx.alpha, approx.beta.x))
    logger.debug(f"probe S({z}, {float(r)}) met by {sphere}")
    return sphere
