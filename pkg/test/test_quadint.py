import unittest
from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from fordspheres.quadint import (
    EUCLIDEAN,
    HEEGNER,
    INFINITY,
    Discriminant,
    QuadInt,
    QuadRat,
    canonical_associate,
    elements_of_norm,
    exact_div,
    qi_approximate,
    qi_arith,
    qi_coprime,
    qi_divides,
    qi_floor_frac,
    qi_gcd,
    qi_hermitian,
    qi_sea,
    qi_units,
    reduce_pair,
    sea_replay,
)

coords = st.integers(min_value=-30, max_value=30)


@st.composite
def elements(draw, discriminants=HEEGNER):
    d = draw(st.sampled_from(discriminants))
    return QuadInt(draw(coords), draw(coords), d)


@st.composite
def pairs(draw, discriminants=EUCLIDEAN):
    d = draw(st.sampled_from(discriminants))
    a = QuadInt(draw(coords), draw(coords), d)
    b = QuadInt(draw(coords), draw(coords), d)
    if not b:
        b = QuadInt(1, 0, d)
    return a, b


class TestDiscriminant(unittest.TestCase):
    def test_heegner_only(self):
        with self.assertRaises(ValueError):
            Discriminant(5)
        with self.assertRaises(ValueError):
            QuadInt(1, 0, 6)

    def test_classes(self):
        self.assertEqual([Discriminant(D).klass for D in HEEGNER], ["B", "B"] + ["A"] * 7)
        self.assertEqual(Discriminant(7).k, 2)
        self.assertEqual([Discriminant(D).unit_count for D in (1, 2, 3, 7)], [4, 2, 6, 2])
        self.assertTrue(Discriminant(11).euclidean)
        self.assertFalse(Discriminant(19).euclidean)
        self.assertEqual(Discriminant(3), 3)


class TestRing(unittest.TestCase):
    def test_gaussian(self):
        self.assertEqual(QuadInt(1, 1, 1) * QuadInt(1, -1, 1), 2)
        self.assertEqual(QuadInt.sigma(1) * QuadInt.sigma(1), -1)

    def test_eisenstein(self):
        sigma = QuadInt.sigma(3)
        self.assertEqual(sigma * sigma, QuadInt(-1, 1, 3))
        omega = QuadInt.from_omega(0, 1)
        self.assertEqual(omega, sigma - 1)
        self.assertEqual(omega * omega * omega, 1)
        self.assertEqual(QuadInt(2, 3, 3).omega_coords(), (5, 3))
        self.assertEqual(sigma.conj(), QuadInt(1, -1, 3))

    def test_norms(self):
        self.assertEqual(QuadInt.sigma(7).norm(), 2)
        self.assertEqual(QuadInt.sigma(2).norm(), 2)
        self.assertEqual(QuadInt.sigma(163).norm(), 41)
        self.assertEqual(QuadInt(3, -2, 1).norm(), 13)

    def test_mixed_discriminants(self):
        with self.assertRaises(ValueError):
            QuadInt(1, 0, 1) + QuadInt(1, 0, 3)
        with self.assertRaises(ValueError):
            qi_arith(QuadInt(1, 0, 1), QuadInt(1, 0, 2), "mul")
        with self.assertRaises(ValueError):
            qi_arith(QuadInt(1, 0, 1), QuadInt(1, 0, 1), "div")

    @given(elements(), st.data())
    def test_norm_is_multiplicative(self, a, data):
        b = QuadInt(data.draw(coords), data.draw(coords), a.d)
        self.assertEqual((a * b).norm(), a.norm() * b.norm())
        self.assertEqual(a * a.conj(), a.norm())

    @given(elements())
    def test_complex_embedding(self, a):
        self.assertAlmostEqual(abs(complex(a)) ** 2, a.norm(), delta=1e-9 * (1 + a.norm()))

    def test_units(self):
        for D in HEEGNER:
            units = qi_units(D)
            self.assertEqual(len(units), Discriminant(D).unit_count)
            self.assertTrue(all(u.norm() == 1 for u in units))
        self.assertEqual(qi_units(1)[1], QuadInt.sigma(1))

    def test_elements_of_norm(self):
        self.assertEqual(len(list(elements_of_norm(5, 1))), 8)
        self.assertEqual(len(list(elements_of_norm(1, 3))), 6)
        self.assertEqual(list(elements_of_norm(2, 19)), [])
        self.assertTrue(all(z.norm() == 11 for z in elements_of_norm(11, 7)))

    def test_divisibility(self):
        two, one_plus_i = QuadInt(2, 0, 1), QuadInt(1, 1, 1)
        self.assertTrue(qi_divides(one_plus_i, two))
        self.assertFalse(qi_divides(two, one_plus_i))
        self.assertEqual(exact_div(two, one_plus_i), QuadInt(1, -1, 1))
        with self.assertRaises(ValueError):
            exact_div(one_plus_i, two)

    def test_canonical_associate(self):
        z = QuadInt(-2, -1, 1)
        c = canonical_associate(z)
        self.assertEqual(c.norm(), z.norm())
        self.assertTrue(c.x > 0 and c.y >= 0)
        self.assertEqual(canonical_associate(QuadInt(-3, 0, 7)), QuadInt(3, 0, 7))


class TestEuclid(unittest.TestCase):
    def test_gcd(self):
        self.assertEqual(qi_gcd(QuadInt(2, 0, 1), QuadInt(1, 1, 1)), QuadInt(1, 1, 1))
        self.assertEqual(qi_gcd(QuadInt(2, 0, 19), QuadInt(0, 2, 19)), QuadInt(2, 0, 19))
        self.assertEqual(qi_gcd(QuadInt(0, 0, 2), QuadInt(-3, 0, 2)), QuadInt(3, 0, 2))
        with self.assertRaises(ValueError):
            qi_gcd(QuadInt(0, 0, 1), QuadInt(0, 0, 1))

    def test_non_euclidean(self):
        with self.assertRaises(ValueError):
            qi_sea(QuadInt(1, 0, 19), QuadInt(0, 1, 19))

    def test_reduce_pair(self):
        a, b = reduce_pair(QuadInt(2, 2, 1), QuadInt(0, 4, 1))
        self.assertTrue(qi_coprime(a, b))
        self.assertEqual(QuadRat(a) / QuadRat(b), QuadRat(QuadInt(2, 2, 1)) / QuadRat(QuadInt(0, 4, 1)))

    @given(pairs())
    def test_replay_undoes_the_run(self, pair):
        run = qi_sea(*pair)
        self.assertEqual(sea_replay(run.steps, run.terminal), pair)
        self.assertTrue(qi_divides(run.gcd, pair[0]) and qi_divides(run.gcd, pair[1]))

    @settings(max_examples=300)
    @given(pairs())
    def test_coprime_vector_matches_gcd(self, pair):
        self.assertEqual(qi_coprime(*pair), qi_gcd(*pair).norm() == 1)

    def test_coprime(self):
        self.assertFalse(qi_coprime(QuadInt(2, 0, 1), QuadInt(1, 1, 1)))
        self.assertTrue(qi_coprime(QuadInt(1, 0, 1), QuadInt(1, 0, 1)))
        self.assertFalse(qi_coprime(QuadInt(1, 1, 2), QuadInt(3, 0, 2)))
        with self.assertRaises(ValueError):
            qi_coprime(QuadInt(0, 0, 3), QuadInt(0, 0, 3))

    def test_hermitian(self):
        self.assertEqual(tuple(qi_hermitian(QuadInt(1, 0, 1), QuadInt(1, 0, 1))), (2, 0))
        self.assertEqual(tuple(qi_hermitian(QuadInt(1, 0, 3), QuadInt.sigma(3))), (1, 1))


class TestQuadRat(unittest.TestCase):
    def test_reduced(self):
        z = QuadRat(QuadInt(2, 4, 1), 6)
        self.assertEqual((z.num, z.den), (QuadInt(1, 2, 1), 3))
        self.assertEqual(QuadRat(QuadInt(1, 1, 1), -2), QuadRat(QuadInt(-1, -1, 1), 2))
        with self.assertRaises(ZeroDivisionError):
            QuadRat(QuadInt(1, 0, 1), 0)

    def test_field(self):
        one_plus_i = QuadRat(QuadInt(1, 1, 1))
        self.assertEqual(one_plus_i.inverse(), QuadRat(QuadInt(1, -1, 1), 2))
        self.assertEqual(one_plus_i * one_plus_i.inverse(), 1)
        self.assertEqual(QuadRat.from_coords(Fraction(1, 2), Fraction(1, 2), 1), one_plus_i / 2)
        self.assertEqual(one_plus_i.norm(), 2)
        self.assertEqual(QuadRat(QuadInt(1, 1, 3), 3).real(), Fraction(1, 2))
        self.assertEqual(QuadRat(QuadInt(1, 1, 3), 3).imag_over_root(), Fraction(1, 6))

    def test_infinity(self):
        self.assertNotEqual(QuadRat(QuadInt(1, 0, 1)), INFINITY)
        self.assertEqual(len({INFINITY, INFINITY, QuadRat(QuadInt(0, 0, 1))}), 2)

    def test_floor_frac(self):
        z = QuadRat.from_coords(Fraction(7, 2), Fraction(-1, 3), 2)
        self.assertEqual(qi_floor_frac(z), (QuadInt(3, -1, 2), (Fraction(1, 2), Fraction(2, 3))))


class TestApproximate(unittest.TestCase):
    def test_float_point(self):
        z = complex(0.3, 0.7)
        for D in (1, 2, 7):
            approx = qi_approximate(z, Fraction(1, 10), D)
            self.assertLess(approx.residual, Fraction(1, 100))
            self.assertEqual(approx.beta.y, 0)
            self.assertGreater(approx.beta.x, 0)
            self.assertLess(abs(complex(approx.beta) * z - complex(approx.alpha)) ** 2, 0.01 + 1e-9)

    def test_exact_point(self):
        z = QuadRat(QuadInt(1, 1, 3), 3)
        approx = qi_approximate(z, Fraction(1, 10), 3)
        self.assertEqual(approx.residual, 0)
        self.assertEqual(QuadRat(approx.alpha) / QuadRat(approx.beta), z)

    def test_bad_bound(self):
        with self.assertRaises(ValueError):
            qi_approximate(complex(0.5, 0.5), 0, 1)
        with self.assertRaises(RuntimeError):
            qi_approximate(complex(0.3141, 0.2718), Fraction(1, 1000), 1, cap=10)


if __name__ == "__main__":
    unittest.main()
