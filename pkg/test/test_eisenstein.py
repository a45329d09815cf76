import unittest

from hypothesis import given
from hypothesis import strategies as st

from fordspheres.eisenstein import (
    BASIS,
    QuadSurd,
    bary_to_eis,
    check_quad,
    cor46_check,
    cor46_witness,
    eis_to_bary,
    eisenstein_norm_witness,
    f_map_orbit,
    gen_B_omega,
    gen_G_omega,
    gen_P_omega,
    gsea,
    gsea_trace,
    quad_parents,
    quadric_quadruples,
    quad_rank,
    quad_to_sphere,
    reflect,
    reflect_tetrahedron,
    reflection_matrix,
    sphere_to_quad,
    tetra_rule,
    tangency_disagreements,
)
from fordspheres.quadint import QuadInt, QuadRat
from fordspheres.spheres import FordSphere, q_form, sphere_tangent

GOLDEN = (12, 12, 3, -8)


def eis(x, y=0):
    return QuadInt(x, y, 3)


class TestConversion(unittest.TestCase):
    def test_examples(self):
        self.assertEqual(eis_to_bary(eis(1), eis(2, -1)), (1, 1, 1, -1))
        self.assertEqual(eis_to_bary(eis(1), eis(1)), (0, 1, 0, 0))
        self.assertEqual(eis_to_bary(eis(0, 1), eis(1)), (0, 0, 1, 0))
        self.assertEqual(eis_to_bary(eis(1), eis(0)), (0, 0, 0, 1))
        self.assertEqual(eis_to_bary(eis(0), eis(1)), (1, 0, 0, 0))

    def test_invalid(self):
        with self.assertRaises(ValueError):
            eis_to_bary(QuadInt(1, 0, 1), QuadInt(1, 0, 1))
        with self.assertRaises(ValueError):
            eis_to_bary(eis(2), eis(0, 2))

    def test_check_quad(self):
        self.assertEqual(check_quad([1, 1, 1, -1]), (1, 1, 1, -1))
        with self.assertRaises(ValueError):
            check_quad((1, 1, 1, 1))
        with self.assertRaises(ValueError):
            check_quad((2, 2, 2, -2))
        with self.assertRaises(ValueError):
            check_quad((0, 0, 0, 1))
        self.assertEqual(check_quad((0, 0, 0, 1), positive=False), (0, 0, 0, 1))

    def test_quad_to_sphere(self):
        self.assertEqual(quad_to_sphere(BASIS[3]), FordSphere.plane(3))
        self.assertEqual(quad_to_sphere((1, 1, 1, -1)), FordSphere.from_tangent(QuadRat(eis(1, 1), 3)))

    def test_round_trip(self):
        for s in gen_P_omega(12):
            q = sphere_to_quad(s)
            self.assertEqual(q_form(q, q), 0)
            self.assertEqual(sum(q[:3]), s.beta.norm())
            self.assertEqual(bary_to_eis(q), (s.alpha, s.beta))

    def test_tangency_is_q_form(self):
        spheres = gen_P_omega(7)
        for s in spheres:
            for t in spheres:
                if s != t:
                    self.assertEqual(sphere_tangent(s, t), q_form(sphere_to_quad(s), sphere_to_quad(t)) == 1)


class TestReflections(unittest.TestCase):
    def test_matrix(self):
        self.assertEqual(reflection_matrix(1)[0].tolist(), [-1, 1, 1, 1])
        with self.assertRaises(ValueError):
            reflection_matrix(5)

    @given(st.lists(st.integers(-100, 100), min_size=4, max_size=4), st.integers(1, 4))
    def test_involution(self, q, k):
        self.assertEqual(reflect(reflect(q, k), k), tuple(q))

    def test_tetrahedral_rule(self):
        self.assertEqual(tetra_rule(*BASIS), (1, 1, 1, -1))
        with self.assertRaises(ValueError):
            tetra_rule(BASIS[0], BASIS[0], BASIS[1], BASIS[2])

    def test_column_action(self):
        child = reflect_tetrahedron(BASIS, 4)
        self.assertEqual(child, BASIS[:3] + ((1, 1, 1, -1),))
        self.assertEqual(reflect_tetrahedron(child, 4), BASIS)


class TestGeneralizedEuclid(unittest.TestCase):
    def test_golden_trace(self):
        trace = gsea(GOLDEN)
        self.assertEqual(trace.codes, (4, 3, 1, 2, 1, 4))
        self.assertEqual(
            trace.states,
            (GOLDEN, (4, 4, -5, 8), (-1, -1, 5, 3), (1, -2, 4, 2), (-1, 2, 2, 0), (1, 1, 1, -1), (0, 0, 0, 1)),
        )
        self.assertEqual(trace.terminal, (0, 0, 0, 1))
        self.assertEqual(quad_rank(GOLDEN), 6)
        lines = gsea_trace(GOLDEN)
        self.assertEqual(lines[0], "(12,12,3,-8) --4--> (4,4,-5,8)")
        self.assertEqual(lines[-1], "(1,1,1,-1) --4--> (0,0,0,1)")

    def test_parents(self):
        parents = quad_parents(GOLDEN)
        self.assertEqual(set(parents), {(2, 2, 0, -1), (5, 6, 2, -4), (6, 5, 2, -4)})
        for p in parents:
            self.assertEqual(q_form(p, GOLDEN), 1)
        self.assertEqual(quad_parents((1, 1, 1, -1)), BASIS[:3])
        with self.assertRaises(ValueError):
            quad_parents(BASIS[0])

    def test_errors(self):
        with self.assertRaises(ValueError):
            gsea((0, 0, 0, 0))
        with self.assertRaises(RuntimeError):
            gsea(GOLDEN, guard=2)

    def test_terminal_is_basis_vector(self):
        for q in gen_B_omega(15):
            terminal = gsea(q).terminal
            self.assertEqual(sorted(terminal), [0, 0, 0, 1])


class TestDescriptions(unittest.TestCase):
    def test_first_level(self):
        spheres = gen_G_omega(depth=1)
        self.assertEqual(len(spheres), 4)
        self.assertIn(FordSphere.from_tangent(QuadRat(eis(1, 1), 3)), spheres)

    def test_three_descriptions_agree(self):
        n = 50
        P = gen_P_omega(n)
        G = gen_G_omega(norm_bound=n)
        B = [quad_to_sphere(q) for q in gen_B_omega(n)]
        self.assertEqual(P, G)
        self.assertEqual(P, B)

    def test_norm_witness(self):
        for q in gen_B_omega(12):
            self.assertTrue(cor46_check(q))
        for s in gen_P_omega(12):
            m, n = cor46_witness(s.alpha, s.beta)
            self.assertEqual(m * m + m * n + n * n, s.beta.norm())
        self.assertEqual(cor46_witness(eis(1), eis(2, -1)), (1, 1))
        self.assertIsNone(eisenstein_norm_witness(2))

    def test_quadric_quadruples(self):
        quads = quadric_quadruples(20)
        self.assertIn((1, 1, 1, -1), quads)
        self.assertIn(GOLDEN, quads)
        self.assertIn((0, 0, 1, 0), quads)
        self.assertEqual(len(quads), len(set(quads)))
        for q in quads:
            self.assertEqual(q_form(q, q), 0)
            self.assertGreater(sum(q[:3]), 0)
            self.assertLessEqual(max(map(abs, q)), 20)
        self.assertLessEqual({sphere_to_quad(s) for s in gen_P_omega(4)}, set(quads))

    def test_tangency_bridge(self):
        self.assertEqual(tangency_disagreements(quadric_quadruples(20)), [])
        self.assertEqual(tangency_disagreements([(0, 0, 1, 0)]), [])

    def test_norm_witness_sweep(self):
        quads = quadric_quadruples(100)
        self.assertTrue(all(cor46_check(q) for q in quads))
        self.assertIn((-1, 2, 0, 2), quads)


class TestFMap(unittest.TestCase):
    def test_normal_form(self):
        self.assertEqual(QuadSurd(2, 2, 4, 8), QuadSurd(1, 2, 2, 2))
        self.assertEqual(QuadSurd(1, 1, 1, 4), QuadSurd(3))
        self.assertEqual(QuadSurd(1, 0, -2), QuadSurd(-1, 0, 2))
        with self.assertRaises(ZeroDivisionError):
            QuadSurd(1, 0, 0)

    def test_orbits(self):
        root2 = f_map_orbit(QuadSurd(0, 1, 1, 2))
        self.assertEqual((root2.verdict, root2.period), ("periodic", 4))
        self.assertEqual(root2.orbit[3], QuadSurd(1, 1, 1, 2))
        golden = f_map_orbit(QuadSurd(1, 1, 2, 5))
        self.assertEqual((golden.verdict, golden.period), ("periodic", 2))
        self.assertEqual(f_map_orbit("3/2").verdict, "terminates")
        self.assertEqual(f_map_orbit(QuadSurd(0, 1, 1, 2), max_steps=2).verdict, "cap")
        with self.assertRaises(ValueError):
            f_map_orbit(1)


if __name__ == "__main__":
    unittest.main()
