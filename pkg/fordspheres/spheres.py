"""
Normal spheres
==============

A normal sphere S(z, r) sits on the complex plane, touching it at z, with
radius r. Two of them are tangent iff

    |z - w|^2 = 4rs

and their interiors overlap iff |z - w|^2 < 4rs. The horizontal plane at height
h is treated as a sphere touching at infinity, it is tangent to S(z, r) iff
2r = h.

For coprime alpha, beta in Z[sigma] the Ford sphere is

    S_{alpha,beta} = S(alpha/beta, 1/(2|beta|^2)),

S_{1,0} being the plane at height 1. Two Ford spheres are tangent iff
|alpha*delta - beta*gamma| = 1, and a matrix (a, b; c, d) over Z[sigma] with a
unit determinant maps S_{alpha,beta} to S_{a*alpha + b*beta, c*alpha + d*beta}.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from math import ceil, floor, isqrt
from typing import NamedTuple

import numpy as np
from sympy.ntheory.factor_ import core

from .quadint import (
    INFINITY,
    Discriminant,
    QuadInt,
    QuadRat,
    canonical_unit,
    elements_of_norm,
    qi_coprime,
    qi_units,
    reduce_pair,
    same_discriminant,
)

logger = logging.getLogger(__name__)


class SurdRadius:
    """
    coeff * sqrt(radicand) with a squarefree radicand.

    Products and quotients stay surds. Comparisons square both sides, so any
    two surds compare exactly.
    """

    __slots__ = ("_coeff", "_radicand")

    def __init__(self, coeff, radicand: int = 1) -> None:
        coeff = Fraction(coeff)
        if coeff <= 0 or radicand <= 0:
            raise ValueError(f"A radius must be positive, got {coeff}*sqrt({radicand}).")
        if core(radicand) != radicand:
            raise ValueError(f"The radicand {radicand} is not squarefree.")
        self._coeff = coeff
        self._radicand = radicand

    @classmethod
    def sqrt(cls, square) -> SurdRadius:
        square = Fraction(square)
        if square <= 0:
            raise ValueError(f"Cannot take a radius from the square {square}.")
        n = square.numerator * square.denominator
        radicand = core(n)
        return cls(Fraction(isqrt(n // radicand), square.denominator), radicand)

    @property
    def coeff(self) -> Fraction:
        return self._coeff

    @property
    def radicand(self) -> int:
        return self._radicand

    def square(self) -> Fraction:
        return self._coeff * self._coeff * self._radicand

    def is_rational(self) -> bool:
        return self._radicand == 1

    def as_fraction(self) -> Fraction:
        if self._radicand != 1:
            raise ValueError(f"{self} is irrational.")
        return self._coeff

    def __mul__(self, other) -> SurdRadius:
        if isinstance(other, SurdRadius):
            return SurdRadius.sqrt(self.square() * other.square())
        return SurdRadius(self._coeff * Fraction(other), self._radicand)

    __rmul__ = __mul__

    def __truediv__(self, other) -> SurdRadius:
        if isinstance(other, SurdRadius):
            return SurdRadius.sqrt(self.square() / other.square())
        return SurdRadius(self._coeff / Fraction(other), self._radicand)

    def _other_square(self, other) -> Fraction:
        if isinstance(other, SurdRadius):
            return other.square()
        other = Fraction(other)
        return other * other if other > 0 else Fraction(-1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, (SurdRadius, int, Fraction)):
            return False
        return self.square() == self._other_square(other)

    def __lt__(self, other) -> bool:
        return self.square() < self._other_square(other)

    def __hash__(self) -> int:
        return hash((self._coeff, self._radicand))

    def __float__(self) -> float:
        return float(self._coeff) * self._radicand ** 0.5

    def __repr__(self) -> str:
        if self._radicand == 1:
            return f"SurdRadius({self._coeff})"
        return f"SurdRadius({self._coeff}*sqrt({self._radicand}))"


def _as_surd(value) -> SurdRadius:
    return value if isinstance(value, SurdRadius) else SurdRadius(value)


class NormalSphere:
    """
    tangent:
        QuadRat, or INFINITY for a horizontal plane
    size:
        radius of the sphere, or the height of the plane
    """

    __slots__ = ("_tangent", "_size")

    def __init__(self, tangent, size) -> None:
        if tangent is not INFINITY and not isinstance(tangent, QuadRat):
            raise ValueError(f"A tangent point must be a QuadRat or INFINITY, got {tangent!r}.")
        self._tangent = tangent
        self._size = _as_surd(size)

    @classmethod
    def plane(cls, height=1) -> NormalSphere:
        return cls(INFINITY, height)

    @property
    def tangent(self):
        return self._tangent

    @property
    def is_plane(self) -> bool:
        return self._tangent is INFINITY

    @property
    def radius(self) -> SurdRadius:
        if self.is_plane:
            raise ValueError("A plane has no radius, use height.")
        return self._size

    @property
    def height(self) -> SurdRadius:
        if not self.is_plane:
            raise ValueError("A sphere has no height, use radius.")
        return self._size

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NormalSphere):
            return False
        return self._tangent == other.tangent and self._size == other._size

    def __hash__(self) -> int:
        return hash((self._tangent, self._size.square()))

    def __repr__(self) -> str:
        if self.is_plane:
            return f"NormalSphere(plane, height={self._size})"
        return f"NormalSphere({self._tangent}, r={self._size})"


class FordSphere:
    """
    The canonical representative of S_{alpha,beta}: beta is moved into the
    unit sector by a unit, the plane is stored as (1, 0).
    """

    __slots__ = ("_alpha", "_beta")

    def __init__(self, alpha: QuadInt, beta: QuadInt) -> None:
        d = same_discriminant(alpha, beta)
        if not beta:
            if alpha.norm() != 1:
                raise ValueError(f"S_{{{alpha},0}}: alpha must be a unit for the plane.")
            alpha = QuadInt(1, 0, d)
        elif not qi_coprime(alpha, beta):
            raise ValueError(f"S_{{{alpha},{beta}}}: alpha and beta are not coprime.")
        else:
            u = canonical_unit(beta)
            alpha, beta = u * alpha, u * beta
        self._alpha = alpha
        self._beta = beta

    @classmethod
    def plane(cls, d) -> FordSphere:
        return cls(QuadInt(1, 0, d), QuadInt(0, 0, d))

    @classmethod
    def from_tangent(cls, z: QuadRat) -> FordSphere:
        return cls(*reduce_pair(z.num, QuadInt(z.den, 0, z.d)))

    @classmethod
    def from_normal(cls, s: NormalSphere, d=None) -> FordSphere:
        if s.is_plane:
            if s.height != 1:
                raise ValueError(f"{s} is not a Ford sphere, the plane must be at height 1.")
            if d is None:
                raise ValueError("The discriminant of a plane must be given.")
            return cls.plane(d)
        ford = cls.from_tangent(s.tangent)
        if s.radius != ford.radius:
            raise ValueError(f"{s} is not a Ford sphere, expected radius {ford.radius}.")
        return ford

    @property
    def alpha(self) -> QuadInt:
        return self._alpha

    @property
    def beta(self) -> QuadInt:
        return self._beta

    @property
    def d(self):
        return self._alpha.d

    @property
    def D(self) -> int:
        return self._alpha.D

    @property
    def is_plane(self) -> bool:
        return not self._beta

    @property
    def tangent(self):
        if self.is_plane:
            return INFINITY
        return QuadRat(self._alpha) / QuadRat(self._beta)

    @property
    def radius(self) -> Fraction:
        if self.is_plane:
            raise ValueError("The plane S_{1,0} has no radius.")
        return Fraction(1, 2 * self._beta.norm())

    @property
    def curvature(self) -> int:
        return 2 * self._beta.norm()

    def to_normal(self) -> NormalSphere:
        if self.is_plane:
            return NormalSphere.plane(1)
        return NormalSphere(self.tangent, self.radius)

    def sort_key(self):
        if self.is_plane:
            return (0, Fraction(0), Fraction(0), 0)
        z = self.tangent
        return (1, z.x, z.y, self.curvature)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FordSphere):
            return False
        return (self._alpha, self._beta) == (other.alpha, other.beta)

    def __hash__(self) -> int:
        return hash((self._alpha, self._beta))

    def __repr__(self) -> str:
        return f"S_{{{self._alpha},{self._beta}}}[D={self.D}]"


def ford_det(s1: FordSphere, s2: FordSphere) -> QuadInt:
    return s1.alpha * s2.beta - s1.beta * s2.alpha


def _normal(s) -> NormalSphere:
    return s.to_normal() if isinstance(s, FordSphere) else s


def normal_tangent(s1: NormalSphere, s2: NormalSphere) -> bool:
    if s1.is_plane and s2.is_plane:
        return False
    if s1.is_plane or s2.is_plane:
        plane, sphere = (s1, s2) if s1.is_plane else (s2, s1)
        return 4 * sphere.radius.square() == plane.height.square()
    same_discriminant(s1.tangent, s2.tangent)
    distance = (s1.tangent - s2.tangent).norm()
    return distance * distance == 16 * s1.radius.square() * s2.radius.square()


def sphere_tangent(s1, s2) -> bool:
    if isinstance(s1, FordSphere) and isinstance(s2, FordSphere):
        same_discriminant(s1.alpha, s2.alpha)
        return ford_det(s1, s2).norm() == 1
    return normal_tangent(_normal(s1), _normal(s2))


def overlaps(s1, s2) -> bool:
    """
    True iff the open balls (half-spaces for planes) intersect.
    """
    s1, s2 = _normal(s1), _normal(s2)
    if s1.is_plane and s2.is_plane:
        return True
    if s1.is_plane or s2.is_plane:
        plane, sphere = (s1, s2) if s1.is_plane else (s2, s1)
        return 4 * sphere.radius.square() > plane.height.square()
    same_discriminant(s1.tangent, s2.tangent)
    distance = (s1.tangent - s2.tangent).norm()
    return distance * distance < 16 * s1.radius.square() * s2.radius.square()


"""
Mutually tangent triples
------------------------

Three distinct points p1, p2, p3 carry exactly one triple of mutually tangent
normal spheres, with

    r1 = |p1 - p2| |p1 - p3| / (2 |p2 - p3|)

and cyclic permutations. The radii are square roots of rationals.
"""


def mutual_radii(p1: QuadRat, p2: QuadRat, p3: QuadRat):
    d12 = (p1 - p2).norm()
    d13 = (p1 - p3).norm()
    d23 = (p2 - p3).norm()
    if not (d12 and d13 and d23):
        raise ValueError(f"Coincident points among {p1}, {p2}, {p3}.")
    return (
        SurdRadius.sqrt(d12 * d13 / (4 * d23)),
        SurdRadius.sqrt(d12 * d23 / (4 * d13)),
        SurdRadius.sqrt(d13 * d23 / (4 * d12)),
    )


def mutual_spheres(p1: QuadRat, p2: QuadRat, p3: QuadRat) -> list[NormalSphere]:
    return [NormalSphere(p, r) for p, r in zip((p1, p2, p3), mutual_radii(p1, p2, p3))]


"""
Moebius maps
------------
"""


class MobiusMap:
    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a: QuadInt, b: QuadInt, c: QuadInt, d: QuadInt) -> None:
        same_discriminant(a, b, c, d)
        self.a, self.b, self.c, self.d = a, b, c, d

    @classmethod
    def from_ints(cls, entries, D) -> MobiusMap:
        return cls(*(QuadInt(e, 0, D) if isinstance(e, int) else QuadInt(*e, D) for e in entries))

    @property
    def det(self) -> QuadInt:
        return self.a * self.d - self.b * self.c

    def is_unimodular(self) -> bool:
        return self.det.norm() == 1

    def compose(self, other: MobiusMap) -> MobiusMap:
        """
        self after other.
        """
        return MobiusMap(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> MobiusMap:
        if not self.is_unimodular():
            raise ValueError(f"{self} is not invertible over the ring, det = {self.det}.")
        u = self.det.conj()
        return MobiusMap(u * self.d, -u * self.b, -u * self.c, u * self.a)

    def apply(self, s: FordSphere) -> FordSphere:
        if not self.is_unimodular():
            raise ValueError(f"The determinant {self.det} of {self} is not a unit.")
        return FordSphere(
            self.a * s.alpha + self.b * s.beta, self.c * s.alpha + self.d * s.beta
        )

    def apply_point(self, z):
        if z is INFINITY:
            if not self.c:
                return INFINITY
            return QuadRat(self.a) / QuadRat(self.c)
        num = QuadRat(self.a) * z + self.b
        den = QuadRat(self.c) * z + self.d
        if not den:
            return INFINITY
        return num / den

    def apply_general(self, s: FordSphere) -> NormalSphere:
        """
        Image under any invertible matrix. Radii pick up sqrt|det|, the plane
        goes to the height |a|^2/sqrt|det| when c = 0.
        """
        n_det = self.det.norm()
        if n_det == 0:
            raise ValueError(f"{self} is singular.")
        top = self.a * s.alpha + self.b * s.beta
        bottom = self.c * s.alpha + self.d * s.beta
        scale = SurdRadius.sqrt(n_det)
        if not bottom:
            return NormalSphere(INFINITY, SurdRadius.sqrt(Fraction(top.norm() ** 2, n_det)))
        return NormalSphere(QuadRat(top) / QuadRat(bottom), scale / (2 * bottom.norm()))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MobiusMap):
            return False
        return (self.a, self.b, self.c, self.d) == (other.a, other.b, other.c, other.d)

    def __repr__(self) -> str:
        return f"MobiusMap({self.a}, {self.b}; {self.c}, {self.d})"


def mobius_apply(m: MobiusMap, s: FordSphere) -> FordSphere:
    return m.apply(s)


"""
Barycentric spheres
-------------------

Over the equilateral frame 0, 1, sigma of Z[sigma] with D = 3, the weights
(a, b, c) with a+b+c > 0 give the sphere

    <a, b, c> = S((b + c*sigma)/(a+b+c), 1/(2(a+b+c))).

Quadruples on (a+b+c+d)^2 = a^2+b^2+c^2+d^2 give Ford spheres, and two of
them are tangent exactly when Q(u, v) = (sum u)(sum v) - u.v equals 1.
"""


def q_form(u, v) -> int:
    return sum(u) * sum(v) - sum(x * y for x, y in zip(u, v))


def on_quadric(u) -> bool:
    return q_form(u, u) == 0


def bary_to_sphere(a: int, b: int, c: int) -> NormalSphere:
    n = a + b + c
    if n <= 0:
        raise ValueError(f"<{a},{b},{c}>: a+b+c = {n} must be positive.")
    return NormalSphere(QuadRat(QuadInt(b, c, 3), n), Fraction(1, 2 * n))


def sphere_from_quad(u) -> NormalSphere:
    if len(u) != 4 or not on_quadric(u):
        raise ValueError(f"{tuple(u)} is not on the quadric (a+b+c+d)^2 = a^2+b^2+c^2+d^2.")
    return bary_to_sphere(*u[:3])


"""
Completions
-----------

If S[U], S[V] are tangent Ford spheres (U, V coprime pairs with a unit
determinant), every Ford sphere tangent to both is S[U + rho*V] for a unit rho.
Two of those, for rho and rho', are tangent iff rho - rho' is a unit. Over the
Eisenstein integers every rho has two such neighbours, over Z[i] none.
"""


def sphere_completions(s1: FordSphere, s2: FordSphere, s3: FordSphere):
    same_discriminant(s1.alpha, s2.alpha, s3.alpha)
    for x, y in ((s1, s2), (s1, s3), (s2, s3)):
        if not sphere_tangent(x, y):
            raise ValueError(f"{x} and {y} are not tangent.")
    if s1.D == 1:
        raise ValueError(
            "Over Z[i] no Ford sphere touches all three spheres of a tangent triple, "
            "use the octahedral rule or completions_approx."
        )
    if s1.D != 3:
        raise ValueError(f"Completions need six units, D={s1.D} has only +-1.")

    U = (s1.alpha, s1.beta)
    V = (s2.alpha, s2.beta)
    units = qi_units(s1.d)
    for rho in units:
        if FordSphere(U[0] + rho * V[0], U[1] + rho * V[1]) == s3:
            break
    else:
        raise RuntimeError(f"{s3} is not of the form S[U + rho V] for {s1}, {s2}.")

    result = []
    for u in units:
        if u != rho and (u - rho).norm() == 1:
            result.append(FordSphere(U[0] + u * V[0], U[1] + u * V[1]))
    result.sort(key=FordSphere.sort_key)
    return tuple(result)


def completions_approx(points, radii):
    """
    Floating point spheres (center, radius) tangent to three given normal
    spheres, for arbitrary tangent points. Approximate, for drawing only.

    A radius of numpy.inf stands for the plane.
    """
    p = np.array([[complex(z).real, complex(z).imag] for z in points], dtype=float)
    r = np.array([float(x) for x in radii], dtype=float)
    A = 2 * (p[1:] - p[0])
    if abs(np.linalg.det(A)) < 1e-12:
        raise ValueError(f"The tangent points {points} are collinear.")
    sq = (p * p).sum(axis=1)
    w0 = np.linalg.solve(A, sq[1:] - sq[0])
    w1 = np.linalg.solve(A, -4 * (r[1:] - r[0]))
    # |w0 + rho*w1 - p0|^2 = 4*rho*r0
    e = w0 - p[0]
    coeffs = [w1 @ w1, 2 * e @ w1 - 4 * r[0], e @ e]
    result = []
    if abs(coeffs[0]) < 1e-12:
        result.append((complex(np.nan, np.nan), np.inf))
        roots = np.array([-coeffs[2] / coeffs[1]])
    else:
        roots = np.roots(coeffs)
    for rho in roots:
        if abs(rho.imag) < 1e-12 and rho.real > 0:
            w = w0 + rho.real * w1
            result.append((complex(w[0], w[1]), float(rho.real)))
    return result


"""
Contact graph
-------------
"""


class ContactGraph(NamedTuple):
    n: int
    edges: tuple

    def degrees(self) -> list[int]:
        deg = [0] * self.n
        for i, j in self.edges:
            deg[i] += 1
            deg[j] += 1
        return deg

    def is_octahedron(self) -> bool:
        """
        6 vertices, 4-regular: the complement is a perfect matching.
        """
        return self.n == 6 and len(self.edges) == 12 and set(self.degrees()) == {4}


def contact_graph(spheres) -> ContactGraph:
    spheres = list(spheres)
    edges = []
    for i in range(len(spheres)):
        for j in range(i + 1, len(spheres)):
            if sphere_tangent(spheres[i], spheres[j]):
                edges.append((i, j))
    return ContactGraph(len(spheres), tuple(edges))


"""
Windows
-------

Generation windows are given in sigma coordinates, z = x + y*sigma.
"""


class Region:
    def __init__(self, x_range=(0, 1), y_range=(0, 1), triangle=False, name=None):
        self.x_lo, self.x_hi = (Fraction(v) for v in x_range)
        self.y_lo, self.y_hi = (Fraction(v) for v in y_range)
        if self.x_hi < self.x_lo or self.y_hi < self.y_lo:
            raise ValueError(f"Empty window {x_range} x {y_range}.")
        self.triangle = triangle
        self.name = name

    @classmethod
    def cell(cls) -> Region:
        return cls(name="cell")

    # for D=1 the cell is the unit square
    square = cell

    @classmethod
    def fundamental_triangle(cls) -> Region:
        """
        The triangle 0, 1, sigma.
        """
        return cls(triangle=True, name="triangle")

    def contains(self, z) -> bool:
        if z is INFINITY:
            return False
        x, y = z.x, z.y
        if not (self.x_lo <= x <= self.x_hi and self.y_lo <= y <= self.y_hi):
            return False
        return not self.triangle or x + y <= 1

    def expanded(self, margin) -> Region:
        """
        The bounding box grown by margin on every side.
        """
        return Region(
            (self.x_lo - margin, self.x_hi + margin),
            (self.y_lo - margin, self.y_hi + margin),
        )

    def corners(self):
        return [(x, y) for x in (self.x_lo, self.x_hi) for y in (self.y_lo, self.y_hi)]

    def __repr__(self) -> str:
        if self.name:
            return f"Region.{self.name}"
        return f"Region([{self.x_lo}, {self.x_hi}] x [{self.y_lo}, {self.y_hi}])"


def integer_box(region: Region, beta: QuadInt):
    """
    Bounding box (in sigma coordinates) of {z*beta : z in region}.
    """
    xs, ys = [], []
    for x, y in region.corners():
        w = QuadRat.from_coords(x, y, beta.d) * beta
        xs.append(w.x)
        ys.append(w.y)
    return (min(xs), max(xs)), (min(ys), max(ys))


def beta_candidates(norm_bound: int, d):
    """
    One representative per unit class of the nonzero elements of norm at
    most norm_bound.
    """
    for n in range(1, norm_bound + 1):
        for beta in elements_of_norm(n, d):
            if canonical_unit(beta) == 1:
                yield beta


def enumerate_ford_spheres(d, norm_bound: int, region: Region) -> list[FordSphere]:
    """
    All Ford spheres (the plane excluded) with |beta|^2 <= norm_bound and
    tangent point in the region, ordered by FordSphere.sort_key.
    """
    result = []
    for beta in beta_candidates(norm_bound, d):
        (x0, x1), (y0, y1) = integer_box(region, beta)
        for y in range(floor(y0), ceil(y1) + 1):
            for x in range(floor(x0), ceil(x1) + 1):
                alpha = QuadInt(x, y, beta.d)
                if not region.contains(QuadRat(alpha) / QuadRat(beta)):
                    continue
                if qi_coprime(alpha, beta):
                    result.append(FordSphere(alpha, beta))
    result.sort(key=FordSphere.sort_key)
    logger.debug(f"P: {len(result)} Ford spheres for D={Discriminant(d).D} with |beta|^2 <= {norm_bound}")
    return result
