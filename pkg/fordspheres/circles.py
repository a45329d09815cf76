"""
Ford circles
============

The Ford circle of the reduced fraction a/b (b > 0) touches the real axis at
a/b and has radius 1/(2b^2). Two normal circles C(t, r) and C(t', r') are
tangent iff (t - t')^2 = 4rr', which for Ford circles reduces to |ad - bc| = 1.

The same set of circles arises in three ways:

- P: from all coprime pairs (a, b),
- G: from the integer roots C_{n,1} by repeatedly inserting the mediant
  circle between two tangent ones (the Stern-Brocot recursion),
- B: from the integer solutions of (s+t+u)^2 = s^2+t^2+u^2, read as the
  circle <s, t> with tangent point t/(s+t) and radius 1/(2(s+t)).
"""

import logging
from fractions import Fraction
from math import ceil, floor, gcd, isqrt, prod
from typing import NamedTuple

from sympy import factorint

from .helper import DEFAULTS

logger = logging.getLogger(__name__)


class FordCircle:
    __slots__ = ("_a", "_b")

    def __init__(self, a: int, b: int) -> None:
        if b <= 0:
            raise ValueError(f"C_{{{a},{b}}}: the denominator must be positive.")
        if gcd(a, b) != 1:
            raise ValueError(f"C_{{{a},{b}}}: gcd(a, b) = {gcd(a, b)} is not 1.")
        self._a = a
        self._b = b

    @property
    def a(self) -> int:
        return self._a

    @property
    def b(self) -> int:
        return self._b

    @property
    def tangent(self) -> Fraction:
        return Fraction(self._a, self._b)

    @property
    def radius(self) -> Fraction:
        return Fraction(1, 2 * self._b * self._b)

    def sort_key(self):
        return self.tangent, self._b

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FordCircle):
            return False
        return (self._a, self._b) == (other.a, other.b)

    def __hash__(self) -> int:
        return hash((self._a, self._b))

    def __repr__(self) -> str:
        return f"C_{{{self._a},{self._b}}}"


def tangent_normal_circles(t1, r1, t2, r2) -> bool:
    """
    Exact test for two circles above the real axis, tangent to it at t1, t2.
    """
    return (Fraction(t1) - Fraction(t2)) ** 2 == 4 * Fraction(r1) * Fraction(r2)


def overlapping_normal_circles(t1, r1, t2, r2) -> bool:
    return (Fraction(t1) - Fraction(t2)) ** 2 < 4 * Fraction(r1) * Fraction(r2)


def circle_tangent(c1: FordCircle, c2: FordCircle) -> bool:
    return abs(c1.a * c2.b - c1.b * c2.a) == 1


def circle_overlaps(c1: FordCircle, c2: FordCircle) -> bool:
    return overlapping_normal_circles(c1.tangent, c1.radius, c2.tangent, c2.radius)


def circle_child(c1: FordCircle, c2: FordCircle) -> FordCircle:
    if not circle_tangent(c1, c2):
        raise ValueError(f"{c1} and {c2} are not tangent, they have no child.")
    return FordCircle(c1.a + c2.a, c1.b + c2.b)


"""
Slow Euclidean algorithm
------------------------

[a, b] -> [a-b, b] (letter L) if a > b and [a, b-a] (letter R) if b > a, until
both entries agree. Undoing the letters in reverse order from the terminal
pair (g, g) gives back the start.
"""


class SeaWord(NamedTuple):
    letters: str

    def replay(self, pair):
        x, y = pair
        for letter in reversed(self.letters):
            if letter == "L":
                x = x + y
            else:
                y = y + x
        return x, y

    def __len__(self):
        return len(self.letters)


def sea_pair(a: int, b: int) -> tuple[SeaWord, tuple[int, int]]:
    if a <= 0 or b <= 0:
        raise ValueError(f"The slow Euclidean algorithm needs positive entries, got [{a}, {b}].")
    letters = []
    while a != b:
        if a > b:
            a -= b
            letters.append("L")
        else:
            b -= a
            letters.append("R")
    return SeaWord("".join(letters)), (a, b)


def sea_trace(a: int, b: int) -> list[str]:
    """
    One line per step, e.g. "[14,5] --L--> [9,5]".
    """
    word, _ = sea_pair(a, b)
    lines = []
    for letter in word.letters:
        before = f"[{a},{b}]"
        if letter == "L":
            a -= b
        else:
            b -= a
        lines.append(f"{before} --{letter}--> [{a},{b}]")
    return lines


def circle_parents(c: FordCircle) -> tuple[FordCircle, FordCircle]:
    """
    The two tangent circles whose child is c, ordered by tangent point.
    """
    if c.b == 1:
        raise ValueError(f"{c} is a root of the recursion and has no parents.")
    shift, a = divmod(c.a, c.b)
    word, _ = sea_pair(a, c.b)
    parents = []
    for start in ((1, 0), (0, 1)):
        x, y = word.replay(start)
        parents.append(FordCircle(x + shift * y, y))
    parents.sort(key=FordCircle.sort_key)
    return parents[0], parents[1]


"""
Barycentric circles
-------------------
"""


class BaryTriple(NamedTuple):
    s: int
    t: int
    u: int

    def validate(self):
        s, t, u = self
        if (s + t + u) ** 2 != s * s + t * t + u * u:
            raise ValueError(f"{tuple(self)} is not on (s+t+u)^2 = s^2+t^2+u^2.")
        if gcd(s, t, u) != 1:
            raise ValueError(f"{tuple(self)}: gcd(s, t, u) is not 1.")
        if s + t <= 0:
            raise ValueError(f"{tuple(self)}: s+t must be positive.")
        return self

    @property
    def tangent(self) -> Fraction:
        return Fraction(self.t, self.s + self.t)

    @property
    def radius(self) -> Fraction:
        return Fraction(1, 2 * (self.s + self.t))


def circle_to_bary(c: FordCircle) -> BaryTriple:
    a, b = c.a, c.b
    return BaryTriple(b * b - a * b, a * b, a * a - a * b)


def bary_to_circle(triple) -> FordCircle:
    triple = BaryTriple(*triple).validate()
    n = triple.s + triple.t
    b = isqrt(n)
    if b * b != n:
        raise ValueError(f"{tuple(triple)}: s+t = {n} is not a perfect square.")
    return FordCircle(triple.t // b, b)


def check_square(triple) -> bool:
    n = abs(triple[0] + triple[1])
    return isqrt(n) ** 2 == n


def cone_triples(entry_bound: int) -> list[BaryTriple]:
    """
    Every primitive solution, of either sign, with all |entries| <= entry_bound.
    """
    r = range(-entry_bound, entry_bound + 1)
    result = [BaryTriple(0, 0, 1), BaryTriple(0, 0, -1)]
    for s in r:
        for t in r:
            n = s + t
            if n == 0 or (s * t) % n:
                continue
            u = -s * t // n
            if abs(u) <= entry_bound and gcd(s, t, u) == 1:
                result.append(BaryTriple(s, t, u))
    return result


"""
Generation
----------

All generators take a closed window (lo, hi) of tangent points and return
circles ordered by (tangent point, denominator).
"""


def _window(window):
    lo, hi = (Fraction(v) for v in window)
    if hi < lo:
        raise ValueError(f"Empty window [{lo}, {hi}].")
    return lo, hi


def gen_circles(depth=None, window=(0, 1), max_den=None) -> list[FordCircle]:
    depth = DEFAULTS.circle_depth if depth is None else depth
    lo, hi = _window(window)
    row = [FordCircle(n, 1) for n in range(floor(lo), ceil(hi) + 1)]
    for level in range(depth):
        new_row = [row[0]]
        for left, right in zip(row, row[1:]):
            if max_den is None or left.b + right.b <= max_den:
                new_row.append(circle_child(left, right))
            new_row.append(right)
        if len(new_row) == len(row):
            logger.debug(f"Stern-Brocot recursion saturated at level {level}")
            break
        row = new_row
    result = [c for c in row if lo <= c.tangent <= hi]
    logger.debug(f"G: {len(result)} circles at depth {depth} in [{lo}, {hi}]")
    return result


def gen_P_circles(max_den: int, window=(0, 1)) -> list[FordCircle]:
    lo, hi = _window(window)
    result = []
    for b in range(1, max_den + 1):
        for a in range(ceil(lo * b), floor(hi * b) + 1):
            if gcd(a, b) == 1:
                result.append(FordCircle(a, b))
    result.sort(key=FordCircle.sort_key)
    logger.debug(f"P: {len(result)} circles with b <= {max_den}")
    return result


def _square_root_step(n: int) -> int:
    """
    Smallest m > 0 such that n | t^2 iff m | t.
    """
    return prod(p ** ((e + 1) // 2) for p, e in factorint(n).items())


def gen_bary_triples(sum_bound: int, window=(0, 1)) -> list[BaryTriple]:
    """
    All solutions with 0 < s+t <= sum_bound and t/(s+t) in the window.

    With n = s+t the equation forces u = -st/n, an integer iff n | t^2.
    """
    lo, hi = _window(window)
    result = []
    for n in range(1, sum_bound + 1):
        m = _square_root_step(n)
        t = ceil(lo * n / m) * m
        while t <= hi * n:
            s = n - t
            u = -s * t // n
            if gcd(s, t, u) == 1:
                result.append(BaryTriple(s, t, u))
            t += m
    result.sort(key=lambda tr: (tr.tangent, tr.s + tr.t))
    logger.debug(f"B: {len(result)} triples with s+t <= {sum_bound}")
    return result


"""
Maximality
----------

Every circle C(x, r) above the real axis meets the interior of some Ford
circle. For irrational x a convergent p/q with q^2 >= 1/(2r) does the job since
(x - p/q)^2 < 1/q^4 <= 2r/q^2.
"""


def convergents(x):
    x = Fraction(x)
    h0, h1, k0, k1 = 0, 1, 1, 0
    while True:
        a = floor(x)
        h0, h1 = h1, a * h1 + h0
        k0, k1 = k1, a * k1 + k0
        yield Fraction(h1, k1)
        if x == a:
            return
        x = 1 / (x - a)


def density_probe(x, r) -> FordCircle:
    x, r = Fraction(x), Fraction(r)
    if r <= 0:
        raise ValueError(f"The probe radius must be positive, got {r}.")
    for p in convergents(x):
        c = FordCircle(p.numerator, p.denominator)
        if overlapping_normal_circles(x, r, c.tangent, c.radius):
            return c
    raise RuntimeError(f"No convergent of {x} meets C({x}, {r}).")
