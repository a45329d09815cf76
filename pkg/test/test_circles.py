import unittest
from fractions import Fraction
from math import gcd

from hypothesis import assume, given
from hypothesis import strategies as st

from fordspheres.circles import (
    BaryTriple,
    FordCircle,
    bary_to_circle,
    check_square,
    circle_child,
    circle_overlaps,
    circle_parents,
    circle_tangent,
    circle_to_bary,
    cone_triples,
    convergents,
    density_probe,
    gen_bary_triples,
    gen_circles,
    gen_P_circles,
    sea_pair,
    sea_trace,
    tangent_normal_circles,
)


class TestFordCircle(unittest.TestCase):
    def test_geometry(self):
        c = FordCircle(1, 2)
        self.assertEqual(c.tangent, Fraction(1, 2))
        self.assertEqual(c.radius, Fraction(1, 8))
        self.assertEqual(repr(c), "C_{1,2}")

    def test_invalid(self):
        with self.assertRaises(ValueError):
            FordCircle(2, 4)
        with self.assertRaises(ValueError):
            FordCircle(1, 0)

    def test_tangency(self):
        self.assertTrue(circle_tangent(FordCircle(0, 1), FordCircle(1, 2)))
        self.assertTrue(circle_tangent(FordCircle(1, 2), FordCircle(1, 3)))
        self.assertFalse(circle_tangent(FordCircle(1, 3), FordCircle(2, 3)))
        self.assertFalse(circle_overlaps(FordCircle(1, 3), FordCircle(2, 3)))
        self.assertTrue(tangent_normal_circles(0, Fraction(1, 2), 1, Fraction(1, 2)))

    def test_child(self):
        self.assertEqual(circle_child(FordCircle(0, 1), FordCircle(1, 1)), FordCircle(1, 2))
        with self.assertRaises(ValueError):
            circle_child(FordCircle(0, 1), FordCircle(2, 3))


class TestSlowEuclid(unittest.TestCase):
    def test_golden_trace(self):
        word, terminal = sea_pair(14, 5)
        self.assertEqual(word.letters, "LLRLLL")
        self.assertEqual(terminal, (1, 1))
        lines = sea_trace(14, 5)
        self.assertEqual(len(lines), 6)
        self.assertEqual(lines[0], "[14,5] --L--> [9,5]")
        self.assertEqual(lines[2], "[4,5] --R--> [4,1]")
        self.assertEqual(lines[-1], "[2,1] --L--> [1,1]")

    def test_positive_entries_only(self):
        with self.assertRaises(ValueError):
            sea_pair(0, 3)

    @given(st.integers(1, 500), st.integers(1, 500))
    def test_replay(self, a, b):
        word, terminal = sea_pair(a, b)
        self.assertEqual(terminal, (gcd(a, b), gcd(a, b)))
        self.assertEqual(word.replay(terminal), (a, b))

    def test_parents(self):
        self.assertEqual(circle_parents(FordCircle(1, 2)), (FordCircle(0, 1), FordCircle(1, 1)))
        self.assertEqual(circle_parents(FordCircle(2, 3)), (FordCircle(1, 2), FordCircle(1, 1)))
        self.assertEqual(circle_parents(FordCircle(7, 5)), (FordCircle(4, 3), FordCircle(3, 2)))
        with self.assertRaises(ValueError):
            circle_parents(FordCircle(3, 1))

    @given(st.integers(-50, 50), st.integers(2, 80))
    def test_parents_are_tangent(self, a, b):
        assume(gcd(a, b) == 1)
        c = FordCircle(a, b)
        left, right = circle_parents(c)
        self.assertTrue(circle_tangent(left, right))
        self.assertEqual(circle_child(left, right), c)
        self.assertLess(left.tangent, c.tangent)
        self.assertLess(c.tangent, right.tangent)


class TestBarycentric(unittest.TestCase):
    def test_conversion(self):
        self.assertEqual(circle_to_bary(FordCircle(1, 2)), (2, 2, -1))
        self.assertEqual(bary_to_circle((2, 2, -1)), FordCircle(1, 2))
        self.assertEqual(BaryTriple(2, 2, -1).tangent, Fraction(1, 2))
        self.assertEqual(BaryTriple(2, 2, -1).radius, Fraction(1, 8))

    def test_invalid(self):
        with self.assertRaises(ValueError):
            bary_to_circle((1, 1, 1))
        with self.assertRaises(ValueError):
            bary_to_circle((0, 0, 0))
        with self.assertRaises(ValueError):
            bary_to_circle((-2, -2, 1))

    @given(st.integers(-40, 40), st.integers(1, 40))
    def test_round_trip(self, a, b):
        assume(gcd(a, b) == 1)
        c = FordCircle(a, b)
        triple = circle_to_bary(c).validate()
        self.assertTrue(check_square(triple))
        self.assertEqual(bary_to_circle(triple), c)


class TestGeneration(unittest.TestCase):
    def test_first_level(self):
        self.assertEqual(gen_circles(depth=1), [FordCircle(0, 1), FordCircle(1, 2), FordCircle(1, 1)])

    def test_three_descriptions_agree(self):
        n = 30
        P = gen_P_circles(n)
        G = gen_circles(depth=n, max_den=n)
        B = [bary_to_circle(t) for t in gen_bary_triples(n * n)]
        self.assertEqual(P, G)
        self.assertEqual(P, B)
        self.assertEqual(P[0], FordCircle(0, 1))
        self.assertEqual(P[-1], FordCircle(1, 1))

    def test_window(self):
        circles = gen_P_circles(6, window=(Fraction(1, 3), Fraction(1, 2)))
        self.assertEqual(circles[0], FordCircle(1, 3))
        self.assertEqual(circles[-1], FordCircle(1, 2))
        with self.assertRaises(ValueError):
            gen_P_circles(6, window=(1, 0))

    def test_disjoint_interiors(self):
        circles = gen_P_circles(12)
        for i, c in enumerate(circles):
            for d in circles[i + 1:]:
                self.assertFalse(circle_overlaps(c, d))

    def test_squares(self):
        self.assertTrue(all(check_square(t) for t in gen_bary_triples(200)))

    def test_squares_of_either_sign(self):
        triples = cone_triples(100)
        self.assertIn(BaryTriple(4, -3, 12), triples)
        self.assertIn(BaryTriple(-4, 3, -12), triples)
        self.assertEqual(len(triples), len(set(triples)))
        for s, t, u in triples[::50]:
            self.assertEqual((s + t + u) ** 2, s * s + t * t + u * u)
        self.assertTrue(all(map(check_square, triples)))


class TestDensity(unittest.TestCase):
    def test_convergents(self):
        self.assertEqual(list(convergents(Fraction(355, 113))), [3, Fraction(22, 7), Fraction(355, 113)])

    def test_probe(self):
        x, r = Fraction(314159, 100000), Fraction(1, 10 ** 6)
        c = density_probe(x, r)
        self.assertTrue((x - c.tangent) ** 2 < 4 * r * c.radius)
        with self.assertRaises(ValueError):
            density_probe(x, 0)


if __name__ == "__main__":
    unittest.main()
