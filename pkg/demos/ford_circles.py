"""
Ford circles
============

A Ford circle touches the real line at a reduced fraction $a/b$ and has
radius $1/(2b^2)$. We build the packing over $[0, 1]$ in the three ways
the package offers and check that they agree.
"""

from fordspheres.circles import (
    FordCircle,
    bary_to_circle,
    circle_parents,
    circle_tangent,
    circle_to_bary,
    gen_bary_triples,
    gen_circles,
    gen_P_circles,
    sea_trace,
)

"""
Direct listing and mediant recursion
------------------------------------

`gen_P_circles` lists every reduced fraction with denominator at most
the bound. `gen_circles` starts from $C_{0,1}$ and $C_{1,1}$ and adds the
child $C_{a+c,b+d}$ of every tangent pair.
"""

P = gen_P_circles(30)
G = gen_circles(depth=30, max_den=30)
assert P == G
print(f"{len(P)} circles with denominator <= 30")

"""
Barycentric triples
-------------------

$C_{a,b}$ corresponds to the integer triple $(b^2 - ab, ab, a^2 - ab)$ on
the cone $(s+t+u)^2 = s^2+t^2+u^2$. The triples with $s + t \le 900$ give
back the same set.
"""

B = [bary_to_circle(t) for t in gen_bary_triples(900)]
assert B == P
print(circle_to_bary(FordCircle(1, 4)))

"""
Tangency and parents
--------------------

Two circles are tangent iff $|ad - bc| = 1$. Every circle apart from the
roots has exactly two parents, which the slow Euclidean algorithm finds.
"""

left, right = circle_parents(FordCircle(7, 5))
assert circle_tangent(left, right)
print(left, right)

for line in sea_trace(14, 5):
    print(line)
