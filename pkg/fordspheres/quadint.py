"""
Exact arithmetic in the Heegner rings
=====================================

For each of the nine Heegner numbers D the ring of integers of Q(sqrt(-D)) is
Z[sigma] with

    sigma = (1 + sqrt(-D)) / 2    if D = 3 (mod 4)   ("class A")
    sigma = sqrt(-D)              otherwise          ("class B").

An element x + y*sigma is stored by its two integer coordinates in that basis,
so all norms are integers,

    N(x + y*sigma) = x^2 + x*y + (D+1)/4*y^2    (class A)
    N(x + y*sigma) = x^2 + D*y^2                (class B).

For D = 3 the Eisenstein unit omega = (-1 + sqrt(-3))/2 equals sigma - 1, for
D = 1 sigma is the imaginary unit.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from math import floor, gcd, isqrt, sqrt
from typing import NamedTuple

from sympy import divisors

from .helper import DEFAULTS

logger = logging.getLogger(__name__)

HEEGNER = (1, 2, 3, 7, 11, 19, 43, 67, 163)
EUCLIDEAN = (1, 2, 3, 7, 11)


class Discriminant:
    def __init__(self, D: int) -> None:
        if isinstance(D, Discriminant):
            D = D.D
        if D not in HEEGNER:
            raise ValueError(f"D={D} is not one of the Heegner numbers {HEEGNER}.")
        self._D = D

    @property
    def D(self) -> int:
        return self._D

    @property
    def klass(self) -> str:
        return "A" if self._D % 4 == 3 else "B"

    @property
    def euclidean(self) -> bool:
        return self._D in EUCLIDEAN

    @property
    def k(self) -> int:
        """
        Class A: sigma^2 = sigma - k with k = (D+1)/4. Unused in class B.
        """
        return (self._D + 1) // 4

    @property
    def unit_count(self) -> int:
        return {1: 4, 3: 6}.get(self._D, 2)

    def form(self, x, y):
        """
        The norm form evaluated on coordinates, also for rationals.
        """
        if self.klass == "A":
            return x * x + x * y + self.k * y * y
        return x * x + self._D * y * y

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Discriminant):
            return self._D == other.D
        if isinstance(other, int):
            return self._D == other
        return False

    def __hash__(self) -> int:
        return hash(self._D)

    def __repr__(self) -> str:
        return f"Discriminant({self._D})"


def same_discriminant(*values) -> Discriminant:
    ds = {v.d for v in values}
    if len(ds) != 1:
        raise ValueError(f"discriminant mismatch: {sorted(d.D for d in ds)}")
    return values[0].d


class QuadInt:
    __slots__ = ("_x", "_y", "_d")

    def __init__(self, x: int, y: int, d: int | Discriminant) -> None:
        self._x = int(x)
        self._y = int(y)
        self._d = d if isinstance(d, Discriminant) else Discriminant(d)

    @property
    def x(self) -> int:
        return self._x

    @property
    def y(self) -> int:
        return self._y

    @property
    def d(self) -> Discriminant:
        return self._d

    @property
    def D(self) -> int:
        return self._d.D

    @classmethod
    def sigma(cls, d: int | Discriminant) -> QuadInt:
        return cls(0, 1, d)

    @classmethod
    def from_omega(cls, a: int, b: int) -> QuadInt:
        """
        a + b*omega for D=3, omega = sigma - 1.
        """
        return cls(a - b, b, 3)

    def omega_coords(self) -> tuple[int, int]:
        if self.D != 3:
            raise ValueError(f"omega coordinates only exist for D=3, not D={self.D}.")
        return self._x + self._y, self._y

    def _lift(self, other) -> QuadInt:
        if isinstance(other, int):
            return QuadInt(other, 0, self._d)
        if isinstance(other, QuadInt):
            if other.d != self._d:
                raise ValueError(f"discriminant mismatch: {self.D} and {other.D}")
            return other
        return NotImplemented

    def __repr__(self) -> str:
        return f"QuadInt({self._x}, {self._y}, D={self.D})"

    def __str__(self) -> str:
        return f"{self._x}{self._y:+}σ"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return self._x == other and self._y == 0
        if isinstance(other, QuadInt):
            return (self._x, self._y, self._d) == (other.x, other.y, other.d)
        return False

    def __hash__(self) -> int:
        return hash((self._x, self._y, self.D))

    def __bool__(self) -> bool:
        return bool(self._x or self._y)

    def __neg__(self) -> QuadInt:
        return QuadInt(-self._x, -self._y, self._d)

    def __add__(self, other) -> QuadInt:
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadInt(self._x + other.x, self._y + other.y, self._d)

    def __radd__(self, other) -> QuadInt:
        return self + other

    def __sub__(self, other) -> QuadInt:
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadInt(self._x - other.x, self._y - other.y, self._d)

    def __rsub__(self, other) -> QuadInt:
        return (-self) + other

    def __mul__(self, other) -> QuadInt:
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        x1, y1, x2, y2 = self._x, self._y, other.x, other.y
        if self._d.klass == "A":
            return QuadInt(
                x1 * x2 - self._d.k * y1 * y2, x1 * y2 + x2 * y1 + y1 * y2, self._d
            )
        return QuadInt(x1 * x2 - self.D * y1 * y2, x1 * y2 + x2 * y1, self._d)

    def __rmul__(self, other) -> QuadInt:
        return self * other

    def conj(self) -> QuadInt:
        if self._d.klass == "A":
            # conj(sigma) = 1 - sigma
            return QuadInt(self._x + self._y, -self._y, self._d)
        return QuadInt(self._x, -self._y, self._d)

    def norm(self) -> int:
        return self._d.form(self._x, self._y)

    def __complex__(self) -> complex:
        if self._d.klass == "A":
            return complex(self._x + self._y / 2, self._y * sqrt(self.D) / 2)
        return complex(self._x, self._y * sqrt(self.D))


def qi_arith(a: QuadInt, b: QuadInt, kind: str) -> QuadInt:
    if kind == "conj":
        return a.conj()
    same_discriminant(a, b)
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    raise ValueError(f"Unknown ring operation {kind!r}; use add, sub, mul or conj.")


def qi_norm(a: QuadInt) -> int:
    return a.norm()


def qi_units(d: int | Discriminant) -> list[QuadInt]:
    """
    Units in counterclockwise order starting at 1.
    """
    d = Discriminant(d)
    if d.D == 1:
        coords = [(1, 0), (0, 1), (-1, 0), (0, -1)]
    elif d.D == 3:
        coords = [(1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1)]
    else:
        coords = [(1, 0), (-1, 0)]
    return [QuadInt(x, y, d) for x, y in coords]


def _in_sector(z: QuadInt) -> bool:
    if z.d.unit_count == 2:
        return z.y > 0 or (z.y == 0 and z.x > 0)
    return z.x > 0 and z.y >= 0


def canonical_associate(z: QuadInt) -> QuadInt:
    """
    The unique u*z, u a unit, whose argument lies in [0, 2*pi/#units).
    """
    return canonical_unit(z) * z


def canonical_unit(z: QuadInt) -> QuadInt:
    if not z:
        return QuadInt(1, 0, z.d)
    for u in qi_units(z.d):
        if _in_sector(u * z):
            return u
    raise RuntimeError(f"No associate of {z!r} in the canonical sector.")


def qi_divides(a: QuadInt, b: QuadInt) -> bool:
    same_discriminant(a, b)
    if not a:
        return not b
    p, n = b * a.conj(), a.norm()
    return p.x % n == 0 and p.y % n == 0


def exact_div(b: QuadInt, a: QuadInt) -> QuadInt:
    if not qi_divides(a, b):
        raise ValueError(f"{a} does not divide {b}.")
    p, n = b * a.conj(), a.norm()
    return QuadInt(p.x // n, p.y // n, a.d)


def elements_of_norm(n: int, d: int | Discriminant):
    """
    Yields every element of norm n, ordered by (y, x).
    """
    d = Discriminant(d)
    if n < 0:
        return
    if n == 0:
        yield QuadInt(0, 0, d)
        return
    if d.klass == "A":
        # (2x + y)^2 + D*y^2 = 4n
        y_max = isqrt(4 * n // d.D)
        for y in range(-y_max, y_max + 1):
            rest = 4 * n - d.D * y * y
            w = isqrt(rest)
            if w * w != rest:
                continue
            for ww in sorted({-w, w}):
                if (ww - y) % 2 == 0:
                    yield QuadInt((ww - y) // 2, y, d)
    else:
        y_max = isqrt(n // d.D)
        for y in range(-y_max, y_max + 1):
            rest = n - d.D * y * y
            x = isqrt(rest)
            if x * x != rest:
                continue
            for xx in sorted({-x, x}):
                yield QuadInt(xx, y, d)


"""
Hermitian parts
---------------

For conj(a)*b = u + v*sigma we store 2s and the integer t/sqrt(D) (class B)
or 2t/sqrt(D) (class A), where s + it is the same number as a complex value.
In both classes this is (2u + v, v) respectively (2u, v).
"""


class HermitianParts(NamedTuple):
    two_s: int
    t_over_root: int


def _hermitian_uv(a: QuadInt, b: QuadInt) -> tuple[int, int]:
    same_discriminant(a, b)
    p = a.conj() * b
    return p.x, p.y


def qi_hermitian(a: QuadInt, b: QuadInt) -> HermitianParts:
    u, v = _hermitian_uv(a, b)
    if a.d.klass == "A":
        return HermitianParts(2 * u + v, v)
    return HermitianParts(2 * u, v)


def cor66_vector(a: QuadInt, b: QuadInt) -> tuple[int, int, int, int]:
    """
    The integer quadruple whose gcd decides coprimality.

    Class B: (|a|^2, |b|^2, s, t/sqrt(D)).
    Class A: (|b|^2 - s + t/sqrt(D), |a|^2 - s + t/sqrt(D), s + t/sqrt(D), -2t/sqrt(D)),
    all integers although s and t/sqrt(D) may be halves.
    """
    u, v = _hermitian_uv(a, b)
    if a.d.klass == "A":
        return b.norm() - u, a.norm() - u, u + v, -v
    return a.norm(), b.norm(), u, v


def qi_coprime(a: QuadInt, b: QuadInt) -> bool:
    if not a and not b:
        raise ValueError("Coprimality of (0, 0) is undefined.")
    return gcd(*cor66_vector(a, b)) == 1


"""
Slow Euclidean algorithm
------------------------

The entry of larger norm e is replaced by e - q*f, f being the other entry. For
D = 1 and D = 3 the digit q is the unit that minimizes the new norm (the "slow"
variant), for D = 2, 7, 11 it is the lattice point closest to e/f. Every step
is logged so that it can be replayed backwards.
"""


class SeaStep(NamedTuple):
    index: int
    digit: QuadInt


class SeaResult(NamedTuple):
    gcd: QuadInt
    steps: tuple[SeaStep, ...]
    terminal: tuple[QuadInt, QuadInt]


def _unit_digit(e: QuadInt, f: QuadInt) -> QuadInt:
    best, best_norm = None, None
    for u in qi_units(e.d):
        n = (e - u * f).norm()
        if best_norm is None or n < best_norm:
            best, best_norm = u, n
    return best


def _nearest_quotient(e: QuadInt, f: QuadInt) -> QuadInt:
    z = QuadRat(e) / QuadRat(f)
    X, Y = z.x, z.y
    candidates = []
    for y in range(floor(Y) - 1, floor(Y) + 3):
        for x in range(floor(X) - 1, floor(X) + 3):
            n = e.d.form(X - x, Y - y)
            candidates.append((n, abs(x), abs(y), x, y))
    _, _, _, x, y = min(candidates)
    return QuadInt(x, y, e.d)


def qi_sea(a: QuadInt, b: QuadInt, guard: int | None = None) -> SeaResult:
    d = same_discriminant(a, b)
    if not d.euclidean:
        raise ValueError(f"D={d.D} is not norm-Euclidean, no Euclidean algorithm.")
    if not a and not b:
        raise ValueError("The Euclidean algorithm needs a nonzero entry.")
    guard = DEFAULTS.sea_guard if guard is None else guard

    pair = [a, b]
    steps = []
    while pair[0] and pair[1]:
        i = 0 if pair[0].norm() >= pair[1].norm() else 1
        e, f = pair[i], pair[1 - i]
        if d.D in (1, 3):
            digit = _unit_digit(e, f)
        else:
            digit = _nearest_quotient(e, f)
        r = e - digit * f
        if r.norm() >= e.norm():
            raise RuntimeError(f"Euclidean step on ({pair[0]}, {pair[1]}) does not reduce.")
        pair[i] = r
        steps.append(SeaStep(i, digit))
        if len(steps) > guard:
            raise RuntimeError(f"Euclidean run on ({a}, {b}) exceeded {guard} steps.")

    g = pair[0] if pair[0] else pair[1]
    return SeaResult(canonical_associate(g), tuple(steps), (pair[0], pair[1]))


def sea_replay(steps, pair):
    """
    Runs the steps backwards, starting from ``pair``.
    """
    pair = list(pair)
    for step in reversed(steps):
        pair[step.index] = pair[step.index] + step.digit * pair[1 - step.index]
    return pair[0], pair[1]


def qi_gcd(a: QuadInt, b: QuadInt) -> QuadInt:
    d = same_discriminant(a, b)
    if not a and not b:
        raise ValueError("gcd(0, 0) is undefined.")
    if d.euclidean:
        return qi_sea(a, b).gcd
    if not a or not b:
        return canonical_associate(a if a else b)
    # class number one: the common divisor of largest norm generates the ideal
    for n in reversed(divisors(gcd(a.norm(), b.norm()))):
        for g in elements_of_norm(n, d):
            if qi_divides(g, a) and qi_divides(g, b):
                return canonical_associate(g)
    raise RuntimeError(f"No common divisor of {a} and {b} found.")


def reduce_pair(a: QuadInt, b: QuadInt) -> tuple[QuadInt, QuadInt]:
    g = qi_gcd(a, b)
    return exact_div(a, g), exact_div(b, g)


"""
Rational points
---------------

Elements of Q(sigma) are kept as num/den with num in Z[sigma] and a positive
integer den that shares no prime with both coordinates of num.
"""


class PointAtInfinity:
    def __repr__(self) -> str:
        return "INFINITY"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PointAtInfinity)

    def __hash__(self) -> int:
        return hash("INFINITY")


INFINITY = PointAtInfinity()


class QuadRat:
    __slots__ = ("_num", "_den")

    def __init__(self, num: QuadInt, den: int = 1) -> None:
        if den == 0:
            raise ZeroDivisionError(f"QuadRat({num}, 0)")
        if den < 0:
            num, den = -num, -den
        g = gcd(num.x, num.y, den)
        self._num = QuadInt(num.x // g, num.y // g, num.d)
        self._den = den // g

    @classmethod
    def from_coords(cls, x, y, d: int | Discriminant) -> QuadRat:
        x, y = Fraction(x), Fraction(y)
        den = x.denominator * y.denominator // gcd(x.denominator, y.denominator)
        return cls(QuadInt(x * den, y * den, d), den)

    @property
    def num(self) -> QuadInt:
        return self._num

    @property
    def den(self) -> int:
        return self._den

    @property
    def d(self) -> Discriminant:
        return self._num.d

    @property
    def D(self) -> int:
        return self._num.D

    @property
    def x(self) -> Fraction:
        return Fraction(self._num.x, self._den)

    @property
    def y(self) -> Fraction:
        return Fraction(self._num.y, self._den)

    def real(self) -> Fraction:
        if self.d.klass == "A":
            return self.x + self.y / 2
        return self.x

    def imag_over_root(self) -> Fraction:
        """
        Im(z) / sqrt(D).
        """
        if self.d.klass == "A":
            return self.y / 2
        return self.y

    def _lift(self, other):
        if isinstance(other, QuadRat):
            if other.d != self.d:
                raise ValueError(f"discriminant mismatch: {self.D} and {other.D}")
            return other
        if isinstance(other, QuadInt):
            return QuadRat(self._num._lift(other))
        if isinstance(other, Fraction):
            return QuadRat(QuadInt(other.numerator, 0, self.d), other.denominator)
        if isinstance(other, int):
            return QuadRat(QuadInt(other, 0, self.d))
        return NotImplemented

    def __repr__(self) -> str:
        return f"QuadRat({self._num!r}, {self._den})"

    def __str__(self) -> str:
        return f"({self._num})/{self._den}"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (QuadInt, int, Fraction)):
            other = self._lift(other)
        if isinstance(other, QuadRat):
            return self._num == other.num and self._den == other.den
        return False

    def __hash__(self) -> int:
        return hash((self._num, self._den))

    def __bool__(self) -> bool:
        return bool(self._num)

    def __neg__(self) -> QuadRat:
        return QuadRat(-self._num, self._den)

    def __add__(self, other) -> QuadRat:
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadRat(self._num * other.den + other.num * self._den, self._den * other.den)

    def __radd__(self, other) -> QuadRat:
        return self + other

    def __sub__(self, other) -> QuadRat:
        return self + (-self._lift(other))

    def __rsub__(self, other) -> QuadRat:
        return (-self) + other

    def __mul__(self, other) -> QuadRat:
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return QuadRat(self._num * other.num, self._den * other.den)

    def __rmul__(self, other) -> QuadRat:
        return self * other

    def inverse(self) -> QuadRat:
        if not self._num:
            raise ZeroDivisionError(f"{self!r} has no inverse.")
        return QuadRat(self._num.conj() * self._den, self._num.norm())

    def __truediv__(self, other) -> QuadRat:
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other) -> QuadRat:
        return self._lift(other) * self.inverse()

    def conj(self) -> QuadRat:
        return QuadRat(self._num.conj(), self._den)

    def norm(self) -> Fraction:
        return Fraction(self._num.norm(), self._den * self._den)

    def __complex__(self) -> complex:
        return complex(self._num) / self._den


def floor_frac(x, y, d: int | Discriminant) -> tuple[QuadInt, tuple[Fraction, Fraction]]:
    x, y = Fraction(x), Fraction(y)
    fx, fy = floor(x), floor(y)
    return QuadInt(fx, fy, d), (x - fx, y - fy)


def qi_floor_frac(z: QuadRat) -> tuple[QuadInt, tuple[Fraction, Fraction]]:
    return floor_frac(z.x, z.y, z.d)


"""
Density probe
-------------

For any complex z and bound > 0 there are alpha, beta with |beta*z - alpha| <
bound. Following the pigeonhole argument we split [0,1)^2 into n x n cells
(in sigma coordinates) and visit the fractional parts of j*z, j = 0, 1, ...;
two visits to the same cell give beta = j2 - j1.
"""


class Approximation(NamedTuple):
    alpha: QuadInt
    beta: QuadInt
    residual: Fraction  # |beta*z - alpha|^2


def sigma_coords(z: complex, d: int | Discriminant) -> tuple[Fraction, Fraction]:
    """
    Exact sigma coordinates of the float point z.
    """
    d = Discriminant(d)
    z = complex(z)
    if d.klass == "A":
        y = 2 * z.imag / sqrt(d.D)
        x = z.real - y / 2
    else:
        y = z.imag / sqrt(d.D)
        x = z.real
    return Fraction(x), Fraction(y)


def qi_approximate(z, bound, d: int | Discriminant, cap: int | None = None) -> Approximation:
    d = Discriminant(d)
    bound = Fraction(bound)
    if bound <= 0:
        raise ValueError(f"The approximation bound must be positive, got {bound}.")
    if isinstance(z, QuadRat):
        return Approximation(z.num, QuadInt(z.den, 0, d), Fraction(0))
    cap = DEFAULTS.approximation_cap if cap is None else cap

    X, Y = sigma_coords(z, d)
    # residual coordinates lie in (-1/n, 1/n), so the norm stays below C/n^2
    C = 2 + d.k if d.klass == "A" else 1 + d.D
    ratio = C / (bound * bound)
    n = isqrt(-(-ratio.numerator // ratio.denominator)) + 1

    seen = {(0, 0): 0}
    for j in range(1, cap + 1):
        fl, (fx, fy) = floor_frac(j * X, j * Y, d)
        cell = (floor(fx * n), floor(fy * n))
        if cell in seen:
            i = seen[cell]
            fl_i, (gx, gy) = floor_frac(i * X, i * Y, d)
            residual = d.form(fx - gx, fy - gy)
            logger.debug(f"pigeonhole hit after {j} multiples on a {n}x{n} grid")
            return Approximation(fl - fl_i, QuadInt(j - i, 0, d), residual)
        seen[cell] = j
    raise RuntimeError(f"No approximation within {bound} after {cap} multiples; raise the cap.")
