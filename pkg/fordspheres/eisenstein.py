"""
Tetrahedral Ford spheres
========================

Over the Eisenstein integers Z[omega] every Ford sphere is the barycentric
sphere <a, b, c> of an integer quadruple on

    (a+b+c+d)^2 = a^2+b^2+c^2+d^2,    gcd(a, b, c, d) = 1,    a+b+c > 0,

and four mutually tangent spheres form a tetrahedron. Replacing one of them by
the other sphere tangent to the remaining three is the tetrahedral rule
d' = a+b+c-d, as a linear map the reflection M_k.

Generalized slow Euclidean algorithm
------------------------------------

While some entry is negative, pick the first minimal entry q_k, negate it and
add it to the three others. This is the row action q -> q M_k, each step
lowers the entry sum by |q_k| and the run ends at g*e_t. The number of steps
is the rank, and replaying the steps backwards on the three other basis
vectors yields the three parents.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from functools import lru_cache
from math import ceil, floor, gcd, isqrt
from typing import NamedTuple

import numpy as np
from sympy import divisors
from sympy.ntheory.factor_ import core

from .helper import DEFAULTS
from .quadint import QuadInt, qi_coprime
from .spheres import (
    FordSphere,
    Region,
    enumerate_ford_spheres,
    on_quadric,
    q_form,
    sphere_completions,
    sphere_from_quad,
    sphere_tangent,
)

logger = logging.getLogger(__name__)

BASIS = ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))


def check_quad(q, positive=True) -> tuple:
    q = tuple(int(v) for v in q)
    if len(q) != 4 or not on_quadric(q):
        raise ValueError(f"{q} is not on the quadric (a+b+c+d)^2 = a^2+b^2+c^2+d^2.")
    if gcd(*q) != 1:
        raise ValueError(f"{q}: gcd(a, b, c, d) is not 1.")
    if positive and q[0] + q[1] + q[2] <= 0:
        raise ValueError(f"{q}: a+b+c must be positive.")
    return q


def eis_to_bary(alpha: QuadInt, beta: QuadInt) -> tuple:
    if alpha.D != 3 or beta.D != 3:
        raise ValueError(f"Eisenstein pairs need D=3, got D={alpha.D} and D={beta.D}.")
    if not qi_coprime(alpha, beta):
        raise ValueError(f"({alpha}, {beta}) is not a coprime pair.")
    x, y = alpha.omega_coords()
    u, v = beta.omega_coords()
    return (
        u * u + v * v - u * v + x * v - x * u - y * v,
        x * u - y * u + y * v,
        y * u - x * v,
        x * x + y * y - x * y + x * v - x * u - y * v,
    )


def sphere_to_quad(s: FordSphere) -> tuple:
    return eis_to_bary(s.alpha, s.beta)


def quad_to_sphere(q) -> FordSphere:
    """
    The Ford sphere <a, b, c> of a quadruple, (0, 0, 0, 1) being the plane.
    """
    if tuple(q) == BASIS[3]:
        return FordSphere.plane(3)
    return FordSphere.from_normal(sphere_from_quad(q))


"""
Reflections
-----------
"""


def reflection_matrix(k: int) -> np.ndarray:
    if k not in (1, 2, 3, 4):
        raise ValueError(f"There are four reflections, k={k} is not in 1..4.")
    M = np.identity(4, dtype=int).astype(object)
    M[k - 1, :] += 1
    M[k - 1, k - 1] -= 3
    return M


_M = {k: reflection_matrix(k) for k in (1, 2, 3, 4)}


def reflect(q, k: int) -> tuple:
    """
    q -> q M_k, negate slot k and add it to the others.
    """
    return tuple(int(v) for v in np.array(q, dtype=object) @ _M[k])


def tetra_rule(a, b, c, d) -> tuple:
    tetra = (a, b, c, d)
    for i in range(4):
        for j in range(i + 1, 4):
            if q_form(tetra[i], tetra[j]) != 1:
                raise ValueError(f"{tetra[i]} and {tetra[j]} are not tangent, Q = {q_form(tetra[i], tetra[j])}.")
    return tuple(w + x + y - z for w, x, y, z in zip(a, b, c, d))


def reflect_tetrahedron(tetra, k: int) -> tuple:
    """
    M_k applied to the stacked tetrahedron: slot k by the tetrahedral rule.
    """
    rows = _M[k] @ np.array(tetra, dtype=object)
    return tuple(tuple(int(v) for v in row) for row in rows)


class GseaTrace(NamedTuple):
    codes: tuple
    states: tuple
    terminal: tuple


def gsea(q, guard=None) -> GseaTrace:
    q = tuple(q)
    if sum(q) <= 0:
        raise ValueError(f"The generalized Euclidean algorithm needs a positive entry sum, got {q}.")
    guard = DEFAULTS.sea_guard if guard is None else guard
    codes, states = [], [q]
    while min(q) < 0:
        k = q.index(min(q)) + 1
        q = reflect(q, k)
        codes.append(k)
        states.append(q)
        if len(codes) > guard:
            raise RuntimeError(f"Generalized Euclidean run on {states[0]} exceeded {guard} steps.")
    return GseaTrace(tuple(codes), tuple(states), q)


def gsea_trace(q) -> list[str]:
    """
    One line per step, e.g. "(12,12,3,-8) --4--> (4,4,-5,8)".
    """
    trace = gsea(q)
    return [
        f"{format_quad(a)} --{k}--> {format_quad(b)}"
        for k, a, b in zip(trace.codes, trace.states, trace.states[1:])
    ]


def format_quad(q) -> str:
    return "(" + ",".join(str(v) for v in q) + ")"


def quad_rank(q) -> int:
    return len(gsea(q).codes)


def quad_parents(q) -> tuple:
    trace = gsea(check_quad(q))
    if not trace.codes:
        raise ValueError(f"{tuple(q)} has rank 0, it is a root of the recursion.")
    t = trace.terminal.index(max(trace.terminal))
    parents = []
    for i, e in enumerate(BASIS):
        if i == t:
            continue
        for k in reversed(trace.codes):
            e = reflect(e, k)
        parents.append(e)
    return tuple(parents)


"""
Barycentric coordinates to ring pairs
-------------------------------------

Descend to the roots through the parents, then rebuild each sphere as the
completion of its three parents that has the right coordinates.
"""

ROOTS = {
    BASIS[0]: (QuadInt(0, 0, 3), QuadInt(1, 0, 3)),
    BASIS[1]: (QuadInt(1, 0, 3), QuadInt(1, 0, 3)),
    BASIS[2]: (QuadInt(0, 1, 3), QuadInt(1, 0, 3)),
    BASIS[3]: (QuadInt(1, 0, 3), QuadInt(0, 0, 3)),
}


@lru_cache(maxsize=None)
def _bary_to_eis(q: tuple) -> FordSphere:
    if q in ROOTS:
        return FordSphere(*ROOTS[q])
    parents = [_bary_to_eis(p) for p in quad_parents(q)]
    for s in sphere_completions(*parents):
        if not s.is_plane and sphere_to_quad(s) == q:
            return s
    raise RuntimeError(f"No completion of the parents of {q} has these coordinates.")


def bary_to_eis(q) -> tuple[QuadInt, QuadInt]:
    q = check_quad(q)
    s = _bary_to_eis(q)
    return s.alpha, s.beta


"""
The three descriptions
----------------------
"""


def gen_P_omega(norm_bound=None, window=None) -> list[FordSphere]:
    norm_bound = DEFAULTS.eisenstein_norm_bound if norm_bound is None else norm_bound
    window = Region.fundamental_triangle() if window is None else window
    return enumerate_ford_spheres(3, norm_bound, window)


def gen_B_omega(norm_bound=None, window=None) -> list[tuple]:
    """
    Quadruples with a+b+c <= norm_bound whose sphere touches the window.

    With n = a+b+c the quadric reads d = (a^2+b^2+c^2-n^2)/(2n), and the
    tangent point is b/n + (c/n)*sigma.
    """
    norm_bound = DEFAULTS.eisenstein_norm_bound if norm_bound is None else norm_bound
    window = Region.fundamental_triangle() if window is None else window
    result = []
    for n in range(1, norm_bound + 1):
        for b in range(ceil(window.x_lo * n), floor(window.x_hi * n) + 1):
            for c in range(ceil(window.y_lo * n), floor(window.y_hi * n) + 1):
                if window.triangle and b + c > n:
                    continue
                a = n - b - c
                top = a * a + b * b + c * c - n * n
                if top % (2 * n):
                    continue
                q = (a, b, c, top // (2 * n))
                if gcd(*q) == 1:
                    result.append(q)
    result.sort(key=lambda q: (Fraction(q[1], sum(q[:3])), Fraction(q[2], sum(q[:3])), sum(q[:3])))
    logger.debug(f"B_omega: {len(result)} quadruples with a+b+c <= {norm_bound}")
    return result


def quadric_quadruples(entry_bound: int) -> list[tuple]:
    """
    Primitive quadric points with a+b+c > 0 and every |entry| <= entry_bound.

    With n = a+b+c and k = a^2+ab+b^2 the quadric reads d = k/n - a - b, so
    n runs over the divisors of k.
    """
    e = entry_bound
    result = []
    for a in range(-e, e + 1):
        for b in range(-e, e + 1):
            k = a * a + a * b + b * b
            for n in divisors(k) if k else (1,):
                c, d = n - a - b, k // n - a - b
                if abs(c) <= e and abs(d) <= e and gcd(a, b, c, d) == 1:
                    result.append((a, b, c, d))
    result.sort()
    logger.debug(f"{len(result)} quadric points with |entries| <= {entry_bound}")
    return result


def tangency_disagreements(quads) -> list[tuple]:
    """
    Pairs (u, v) for which Q(u, v) = 1 and the exact tangency of <u>, <v>
    disagree.

    The tangent points differ by (X + Y*sigma)/(n n') and the spheres touch iff
    X^2 + XY + Y^2 = n n'. Pairs further apart than that, with Q(u, v) != 1,
    agree without the exact test.
    """
    quads = [tuple(u) for u in quads]
    q = np.array(quads, dtype=np.int64).reshape(-1, 4)
    n = q[:, :3].sum(axis=1)
    sums = q.sum(axis=1)
    spheres = [sphere_from_quad(u) for u in quads]
    bad = []
    for i in range(len(quads) - 1):
        j = np.arange(i + 1, len(quads))
        x = q[i, 1] * n[j] - q[j, 1] * n[i]
        y = q[i, 2] * n[j] - q[j, 2] * n[i]
        near = x * x + x * y + y * y <= n[i] * n[j]
        unit = sums[i] * sums[j] - q[j] @ q[i] == 1
        for k in np.flatnonzero(near | unit):
            other = int(j[k])
            if sphere_tangent(spheres[i], spheres[other]) != bool(unit[k]):
                bad.append((quads[i], quads[other]))
    logger.debug(f"tangency bridge: {len(bad)} disagreements among {len(quads)} quadruples")
    return bad


def _tangent_in(q, region: Region) -> bool:
    n = q[0] + q[1] + q[2]
    x, y = Fraction(q[1], n), Fraction(q[2], n)
    if not (region.x_lo <= x <= region.x_hi and region.y_lo <= y <= region.y_hi):
        return False
    return not region.triangle or x + y <= 1


def gen_G_omega(depth=None, norm_bound=None, window=None, margin=1) -> list[FordSphere]:
    """
    Tetrahedral recursion from {S_{0,1}, S_{1,1}, S_{sigma,1}, plane}.

    depth=None runs until no tetrahedron with a new sphere of a+b+c <=
    norm_bound and tangent point within ``margin`` of the window is left. The
    plane is not part of the result.
    """
    norm_bound = DEFAULTS.eisenstein_norm_bound if norm_bound is None else norm_bound
    window = Region.fundamental_triangle() if window is None else window
    reach = window.expanded(margin)

    spheres = {BASIS[0], BASIS[1], BASIS[2]}
    seen = {frozenset(BASIS)}
    front = [BASIS]
    level = 0
    while front and (depth is None or level < depth):
        level += 1
        new_front = []
        for tetra in front:
            for k in (1, 2, 3, 4):
                child = reflect_tetrahedron(tetra, k)
                q = child[k - 1]
                n = q[0] + q[1] + q[2]
                if n <= 0:
                    logger.debug(f"plane child {q} from {tetra}")
                    continue
                if n > norm_bound or not _tangent_in(q, reach):
                    continue
                key = frozenset(child)
                if key in seen:
                    continue
                seen.add(key)
                spheres.add(q)
                new_front.append(child)
        front = new_front
    result = [quad_to_sphere(q) for q in spheres if _tangent_in(q, window)]
    result.sort(key=FordSphere.sort_key)
    logger.debug(f"G_omega: {len(result)} spheres after {level} levels, {len(seen)} tetrahedra")
    return result


"""
Corollaries
-----------

|a+b+c| = |beta|^2 is always an Eisenstein norm m^2 + mn + n^2; with
beta = u + v*omega one may take (m, n) = (u, -v).
"""


@lru_cache(maxsize=None)
def eisenstein_norm_witness(n: int):
    n = abs(n)
    bound = isqrt(n) + 1
    for m in range(-bound, bound + 1):
        for k in range(-bound, bound + 1):
            if m * m + m * k + k * k == n:
                return m, k
    return None


def cor46_check(q) -> bool:
    return eisenstein_norm_witness(q[0] + q[1] + q[2]) is not None


def cor46_witness(alpha: QuadInt, beta: QuadInt) -> tuple[int, int]:
    u, v = beta.omega_coords()
    return u, -v


"""
The f-map
---------

For q = (1, x, x^2, -x) two gSEA steps give (1, y, y^2, -y) up to scaling, with
y = f(x) = x - 1 for x > 1 and x/(1 - x) for 0 < x < 1. The orbit of x comes
back to an earlier value iff x is a quadratic surd, rationals reach 1.
"""


class QuadSurd:
    """
    (p + q*sqrt(n)) / r with r > 0, n squarefree and gcd(p, q, r) = 1.
    """

    __slots__ = ("p", "q", "r", "n")

    def __init__(self, p: int, q: int = 0, r: int = 1, n: int = 1) -> None:
        if r == 0:
            raise ZeroDivisionError(f"({p}+{q}*sqrt({n}))/0")
        if n <= 0:
            raise ValueError(f"sqrt({n}) is not real.")
        square = core(n)
        q *= isqrt(n // square)
        n = square
        if n == 1:
            p, q = p + q, 0
        if q == 0:
            n = 1
        if r < 0:
            p, q, r = -p, -q, -r
        g = gcd(p, q, r)
        self.p, self.q, self.r, self.n = p // g, q // g, r // g, n

    @classmethod
    def from_fraction(cls, x) -> QuadSurd:
        x = Fraction(x)
        return cls(x.numerator, 0, x.denominator)

    def sign_minus(self, k: int) -> int:
        """
        Sign of self - k.
        """
        a, q = self.p - k * self.r, self.q
        if q == 0:
            return (a > 0) - (a < 0)
        if a >= 0 and q >= 0:
            return 1
        if a <= 0 and q <= 0:
            return -1
        # opposite signs: compare a^2 with q^2 n
        big = a * a > q * q * self.n
        return (1 if a > 0 else -1) if big else (1 if q > 0 else -1)

    def f(self) -> QuadSurd:
        p, q, r, n = self.p, self.q, self.r, self.n
        if self.sign_minus(1) > 0:
            return QuadSurd(p - r, q, r, n)
        # x/(1-x), rationalized with the conjugate of the denominator
        return QuadSurd(p * (r - p) + q * q * n, q * r, (r - p) ** 2 - q * q * n, n)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, QuadSurd):
            return False
        return (self.p, self.q, self.r, self.n) == (other.p, other.q, other.r, other.n)

    def __hash__(self) -> int:
        return hash((self.p, self.q, self.r, self.n))

    def __float__(self) -> float:
        return (self.p + self.q * self.n ** 0.5) / self.r

    def __repr__(self) -> str:
        if self.q == 0:
            return f"QuadSurd({self.p}/{self.r})"
        return f"QuadSurd(({self.p}{self.q:+}*sqrt({self.n}))/{self.r})"


class FMapOrbit(NamedTuple):
    orbit: tuple
    verdict: str  # "periodic", "terminates" or "cap"
    period: int


def f_map_orbit(x, max_steps=None) -> FMapOrbit:
    max_steps = DEFAULTS.f_map_steps if max_steps is None else max_steps
    if not isinstance(x, QuadSurd):
        x = QuadSurd.from_fraction(x)
    if x.sign_minus(0) <= 0 or x.sign_minus(1) == 0:
        raise ValueError(f"The f-map is defined for 0 < x != 1, got {x}.")

    orbit = [x]
    seen = {x: 0}
    for _ in range(max_steps):
        x = x.f()
        orbit.append(x)
        if x.sign_minus(1) == 0 or x.sign_minus(0) <= 0:
            return FMapOrbit(tuple(orbit), "terminates", 0)
        if x in seen:
            return FMapOrbit(tuple(orbit), "periodic", len(orbit) - 1 - seen[x])
        seen[x] = len(orbit) - 1
    logger.debug(f"f-map orbit of {orbit[0]} hit the cap of {max_steps} steps")
    return FMapOrbit(tuple(orbit), "cap", 0)
