import unittest
from fractions import Fraction
from functools import lru_cache

from hypothesis import given, settings
from hypothesis import strategies as st

from fordspheres.eisenstein import gen_P_omega
from fordspheres.gaussian import gen_P_i
from fordspheres.general import (
    SigmaBary,
    XiFrame,
    eq11_verify,
    gen_P_sigma,
    height,
    m_roots,
    maximality_probe,
    mu_apply,
    mu_image_approx,
    mu_inverse,
    pair_norm_general,
    rationals,
    secant_add,
    secant_enumerate,
    secant_generated,
    secant_height,
    secant_inverse,
    secant_solutions,
)
from fordspheres.quadint import HEEGNER, INFINITY, QuadInt, QuadRat
from fordspheres.spheres import FordSphere, Region, ford_det, q_form

ROUND_TRIP = (1, 2, 3, 7, 11, 19, 43)

fractions = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 20))


def sigma(D):
    return QuadInt.sigma(D)


@lru_cache(maxsize=None)
def sampled_spheres(D):
    return gen_P_sigma(D, 20, Region((-1, 2), (-1, 2))) + [FordSphere.plane(D)]


class TestQuadric(unittest.TestCase):
    def test_examples(self):
        self.assertTrue(eq11_verify(SigmaBary(0, 1, 0, 1, 7)))
        self.assertTrue(eq11_verify(SigmaBary(2, 1, 0, 1, 2)))
        self.assertTrue(eq11_verify(SigmaBary(0, 1, 0, 0, 163)))
        self.assertFalse(eq11_verify(SigmaBary(1, 1, 1, 1, 7)))

    def test_validate(self):
        with self.assertRaises(ValueError):
            SigmaBary(1, 1, 1, 1, 7).validate()
        with self.assertRaises(ValueError):
            SigmaBary(0, 2, 0, 2, 7).validate()
        with self.assertRaises(ValueError):
            SigmaBary(0, 1, 0, 1, 5).validate()

    def test_canonical(self):
        self.assertEqual(SigmaBary(0, -2, 0, -2, 7).canonical(), SigmaBary(0, 1, 0, 1, 7))
        self.assertEqual(SigmaBary(0, -1, 0, 0, 2).canonical(), SigmaBary(0, 1, 0, 0, 2))
        with self.assertRaises(ValueError):
            SigmaBary(0, 0, 0, 0, 7).canonical()


class TestMu(unittest.TestCase):
    def test_examples(self):
        one7, one2 = QuadInt(1, 0, 7), QuadInt(1, 0, 2)
        self.assertEqual(mu_apply((sigma(7), one7)), SigmaBary(0, 1, 0, 1, 7))
        self.assertEqual(mu_apply((one2, sigma(2))), SigmaBary(2, 1, 0, 1, 2))
        self.assertEqual(mu_apply(FordSphere.plane(7)), SigmaBary(0, 1, 0, 0, 7))
        expected = FordSphere(QuadInt(-1, 0, 2), QuadInt(1, -1, 2))
        self.assertEqual(mu_apply(expected), SigmaBary(4, 2, -1, 1, 2))
        self.assertEqual(mu_inverse(SigmaBary(4, 2, -1, 1, 2)), expected)
        self.assertEqual(mu_inverse(SigmaBary(0, 1, 0, 0, 7)), FordSphere.plane(7))

    def test_round_trip(self):
        for D in ROUND_TRIP:
            for s in gen_P_sigma(D, 6):
                b = mu_apply(s)
                self.assertEqual(b.validate(), b.canonical())
                self.assertEqual(b.beta_norm(), s.beta.norm())
                self.assertEqual(b.alpha_norm(), s.alpha.norm())
                self.assertEqual(mu_inverse(b), s)

    def test_invalid(self):
        with self.assertRaises(ValueError):
            mu_inverse(SigmaBary(1, 1, 1, 1, 7))
        with self.assertRaises(ValueError):
            mu_inverse(SigmaBary(0, -1, 0, -1, 7))

    def test_pair_norm(self):
        for D in (1, 2, 7, 19):
            spheres = gen_P_sigma(D, 4) + [FordSphere.plane(D)]
            for s in spheres:
                for t in spheres:
                    self.assertEqual(pair_norm_general(mu_apply(s), mu_apply(t)), ford_det(s, t).norm())
        with self.assertRaises(ValueError):
            pair_norm_general(SigmaBary(0, 1, 0, 0, 7), SigmaBary(0, 1, 0, 0, 2))

    @settings(deadline=None)
    @given(st.sampled_from((1, 2, 3, 7, 11, 19)), st.integers(0, 10**6), st.integers(0, 10**6))
    def test_pair_norm_random_pairs(self, D, i, j):
        spheres = sampled_spheres(D)
        s, t = spheres[i % len(spheres)], spheres[j % len(spheres)]
        self.assertEqual(pair_norm_general(mu_apply(s), mu_apply(t)), ford_det(s, t).norm())
        self.assertEqual(pair_norm_general(mu_apply(t), mu_apply(s)), pair_norm_general(mu_apply(s), mu_apply(t)))

    def test_eisenstein_pair_norm_is_q_form(self):
        images = [mu_apply(s) for s in gen_P_sigma(3, 7)]
        for b1 in images:
            for b2 in images:
                self.assertEqual(pair_norm_general(b1, b2), q_form(b1.coords(), b2.coords()))

    def test_xi(self):
        self.assertAlmostEqual(XiFrame(7).xi, -0.26376, places=5)
        self.assertAlmostEqual(XiFrame(2).xi, 0.81650, places=5)
        self.assertEqual(XiFrame(3).xi, 0)

    def test_float_image(self):
        for D in (1, 2, 7, 43):
            frame = XiFrame(D)
            for s in gen_P_sigma(D, 5) + [FordSphere.plane(D)]:
                center, radius = frame.sphere(mu_apply(s))
                c2, r2 = mu_image_approx(s)
                self.assertAlmostEqual(abs(center - c2), 0)
                self.assertAlmostEqual(radius, r2)


class TestSecant(unittest.TestCase):
    def test_addition(self):
        self.assertEqual(secant_add(1, 1, 2), Fraction(-1, 2))
        self.assertEqual(secant_add(INFINITY, 3, 2), 3)
        self.assertEqual(secant_add(Fraction(1, 2), INFINITY, 7), Fraction(1, 2))
        self.assertIs(secant_add(2, secant_inverse(2, 7), 7), INFINITY)
        self.assertIs(secant_inverse(INFINITY, 1), INFINITY)

    @given(fractions, fractions, fractions, st.sampled_from(HEEGNER))
    def test_group_law(self, x, y, z, D):
        self.assertEqual(secant_add(x, y, D), secant_add(y, x, D))
        self.assertEqual(secant_add(secant_add(x, y, D), z, D), secant_add(x, secant_add(y, z, D), D))
        self.assertIs(secant_add(x, secant_inverse(x, D), D), INFINITY)

    def test_heights(self):
        self.assertEqual(rationals(1), [-1, 0, 1])
        self.assertEqual(height(Fraction(-3, 2)), 3)
        self.assertEqual(secant_height(SigmaBary(0, 1, 0, 1, 7)), 1)
        self.assertEqual(secant_height(SigmaBary(0, 1, 0, 0, 7)), 1)

    def test_roots(self):
        self.assertEqual(m_roots(1, 1, 0, 1), [-1, 1])
        self.assertEqual(m_roots(1, 1, 1, 1), [])
        self.assertEqual(m_roots(0, 0, 0, 7), [0])
        self.assertEqual(m_roots(0, 0, 0, 3), [1])
        self.assertEqual(m_roots(1, 1, -1, 3), [1])
        self.assertEqual(m_roots(1, -1, 0, 3), [])

    def test_solutions(self):
        self.assertEqual(secant_solutions(-1, -1, 1), {SigmaBary(1, 1, 0, 1, 1), SigmaBary(1, 1, 0, -1, 1)})
        self.assertEqual(secant_solutions(1, -1, 1), set())
        self.assertEqual(secant_solutions(0, 0, 3), {SigmaBary(0, 0, 0, 1, 3)})

    def test_enumeration_covers_images(self):
        H = 5
        for D in (1, 2, 3, 7):
            found = secant_enumerate(D, H)
            self.assertIn(SigmaBary(0, 1, 0, 0, D), found)
            images = {mu_apply(s) for s in gen_P_sigma(D, 10)}
            small = {b for b in images if secant_height(b) <= H}
            self.assertTrue(small)
            self.assertLessEqual(small, found)

    def test_enumerated_points_invert(self):
        for D in (1, 3, 11):
            for b in secant_enumerate(D, 4):
                s = mu_inverse(b)
                self.assertEqual(mu_apply(s), b)

    def test_generated(self):
        self.assertTrue(secant_generated(mu_apply((sigma(3), QuadInt(1, 0, 3)))))
        self.assertTrue(secant_generated(SigmaBary(0, 1, 0, 0, 7)))
        self.assertTrue(secant_generated(SigmaBary(0, 0, 1, 0, 2)))
        self.assertFalse(secant_generated(SigmaBary(1, 1, 1, 1, 7)))
        self.assertFalse(secant_generated(SigmaBary(2, 2, 0, 2, 1)))

    def test_images_are_generated(self):
        for D in (1, 2, 3, 7, 11, 19):
            images = [mu_apply(s) for s in gen_P_sigma(D, 30)]
            self.assertTrue(images)
            self.assertTrue(all(map(secant_generated, images)), D)


class TestGeneration(unittest.TestCase):
    def test_specialisations(self):
        self.assertEqual(gen_P_sigma(1, 8), gen_P_i(8))
        self.assertEqual(gen_P_sigma(3, 8, Region.fundamental_triangle()), gen_P_omega(8))

    def test_maximality(self):
        z, r = complex(0.3, 0.7), Fraction(1, 100)
        for D in (1, 7, 19):
            s = maximality_probe(z, r, D)
            self.assertLess(abs(z - complex(s.tangent)) ** 2, 4 * float(r) * float(s.radius))
        exact = QuadRat(QuadInt(1, 1, 7), 3)
        self.assertEqual(maximality_probe(exact, r, 7).tangent, exact)
        with self.assertRaises(ValueError):
            maximality_probe(exact, r, 11)
        with self.assertRaises(ValueError):
            maximality_probe(z, 0, 7)


if __name__ == "__main__":
    unittest.main()
