"""
Ford spheres
============

Over the ring of integers of $\mathbb Q(\sqrt{-D})$ the Ford sphere
$S_{\alpha,\beta}$ touches the complex plane at $\alpha/\beta$ and has
radius $1/(2|\beta|^2)$. Tangency is decided exactly by
$|\alpha\delta - \beta\gamma| = 1$.
"""

from fordspheres.eisenstein import (
    bary_to_eis,
    eis_to_bary,
    gen_B_omega,
    gen_G_omega,
    gen_P_omega,
    gsea_trace,
    quad_parents,
    quad_to_sphere,
)
from fordspheres.gaussian import gen_G_i, gen_P_i
from fordspheres.general import gen_P_sigma, mu_apply, mu_inverse, secant_enumerate
from fordspheres.quadint import QuadInt
from fordspheres.spheres import FordSphere, sphere_completions

"""
Eisenstein integers
-------------------

For $D = 3$ the spheres over the fundamental triangle can be listed
directly, grown by tetrahedral reflections, or read off integer points
$(a, b, c, d)$ of a quadric. All three agree.
"""

n = 12
P = gen_P_omega(n)
assert P == gen_G_omega(norm_bound=n)
assert P == [quad_to_sphere(q) for q in gen_B_omega(n)]
print(f"{len(P)} Eisenstein spheres with |beta|^2 <= {n}")

sigma = QuadInt.sigma(3)
one = QuadInt(1, 0, 3)
q = eis_to_bary(one, 2 * one - sigma)
print(q, bary_to_eis(q))

"""
The generalized Euclidean algorithm walks a quadruple back to a basis
vector, one reflection per step. The parents are the three spheres of the
tetrahedron it came from.
"""

for line in gsea_trace((12, 12, 3, -8)):
    print(line)
print(quad_parents((12, 12, 3, -8)))

"""
A tangent triple of Eisenstein spheres has exactly two completions, one
on each side.
"""

zero = QuadInt(0, 0, 3)
print(sphere_completions(FordSphere(zero, one), FordSphere(one, one), FordSphere(sigma, one)))

"""
Gaussian integers
-----------------

For $D = 1$ the recursion runs over octahedra instead of tetrahedra.
"""

assert gen_P_i(10) == gen_G_i(norm_bound=10)

"""
Every Heegner number
--------------------

The map $\mu$ sends $S_{\alpha,\beta}$ to an integer point of a quadric of
signature $(3, 1)$ that depends on $D$. It is invertible on Ford spheres.
The secant group law on the rationals enumerates these points by height.
"""

for D in (2, 7, 43):
    spheres = gen_P_sigma(D, 6)
    assert all(mu_inverse(mu_apply(s)) == s for s in spheres)
    print(f"D={D}: {len(spheres)} spheres, {len(secant_enumerate(D, 4))} points of height <= 4")
