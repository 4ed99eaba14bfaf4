import unittest
from fractions import Fraction

from modules.errors import NotJDominantError, PoleAtPointError, PreconditionError
from modules.hecke import EpsilonChar
from modules.laurent import LaurentPoly, leading_term
from modules.macpoly import MacdonaldFamily, b_eval, c_eval
from modules.rootdata import weyl_group
from modules.weights import inner1, series_expand, steps_for


class FamilyCase(unittest.TestCase):
    type_name = 'A1'

    def setUp(self):
        self.group = weyl_group(self.type_name)
        self.data = self.group.data
        self.space = self.data.space
        self.k = self.data.formal_labelling()
        self.family = MacdonaldFamily(self.group, self.k)
        self.tau = self.data.tau(self.k, 1)

    def poly(self, terms):
        return LaurentPoly(self.space, self.data.rank, terms)


class TestCFunctions(FamilyCase):
    def test_c_symmetry(self):
        t, u = self.tau, self.tau * self.space.q(1)
        x = self.space.q(1) * self.tau
        self.assertEqual(c_eval(t.inverse(), u.inverse(), x.inverse()), c_eval(t, u, x))
        self.assertEqual(b_eval(t.inverse(), u.inverse(), x), -b_eval(t, u, x))

    def test_b_star(self):
        t, u, x = self.tau, self.space.q(1), self.space.q(2)
        b = b_eval(t, u, x)
        self.assertEqual(b.star(), b - t + t.inverse())

    def test_pole(self):
        with self.assertRaises(PoleAtPointError):
            b_eval(self.tau, self.tau, self.space.one)


class TestA1Polynomials(FamilyCase):
    def test_e_zero(self):
        self.assertEqual(self.family.compute_e((0,)).poly, self.poly({(0,): 1}))

    def test_e_dominant(self):
        self.assertEqual(self.family.compute_e((1,)).poly, self.poly({(1,): 1}))

    def test_e_antidominant(self):
        t = self.tau * self.tau
        qt = self.space.q(1) * t
        expected = self.poly({(-1,): 1, (1,): (1 - t) / (1 - qt)})
        self.assertEqual(self.family.compute_e((-1,)).poly, expected)

    def test_eigenvalues(self):
        record = self.family.compute_e((1,))
        self.assertEqual(record.eigen[(1,)], self.space.q(Fraction(-1, 2)) * self.tau.inverse())
        self.assertEqual(self.family.eigenvalue((1,), (0,)), self.tau)

    def test_recursion(self):
        report = self.family.ti_on_e(1, (1,))
        self.assertEqual(report['case'], 'raised')
        self.assertEqual(report['target'], (-1,))
        self.assertTrue(report['holds'])
        stabilized = self.family.ti_on_e(1, (0,))
        self.assertEqual(stabilized['case'], 'stabilized')
        self.assertTrue(stabilized['holds'])
        with self.assertRaises(PreconditionError):
            self.family.ti_on_e(1, (-1,))

    def test_symmetric_p(self):
        P = self.family.compute_p((1,), EpsilonChar.trivial((1,)), (1,))
        self.assertEqual(P, self.poly({(1,): 1, (-1,): 1}))
        self.assertEqual(self.family.compute_p((), EpsilonChar.trivial(()), (-1,)),
                         self.family.compute_e((-1,)).poly)

    def test_p_requires_dominance(self):
        with self.assertRaises(NotJDominantError):
            self.family.compute_p((1,), EpsilonChar.trivial((1,)), (-1,))

    def test_norm_check(self):
        for eps in (EpsilonChar.trivial((1,)), EpsilonChar.sign((1,))):
            report = self.family.norm_check((1,), eps, (1,), 1)
            self.assertTrue(report['holds'], eps)

    def test_gram_schmidt(self):
        self.assertTrue(self.family.gram_schmidt_check((-1,), 2))


class TestA1HermitianSymmetry(FamilyCase):
    def c_coefficient(self):
        t = self.tau * self.tau
        return (1 - t) / (1 - self.space.q(1) * t)

    def test_orbit_norms(self):
        c = self.c_coefficient()
        norms = self.family.orbit_norms((1,))
        self.assertEqual(set(norms), {(1,), (-1,)})
        self.assertTrue(norms[(1,)].is_one())
        self.assertEqual(norms[(-1,)], 1 - c * c.star())

    def test_orbit_norms_needs_monomial(self):
        with self.assertRaises(PreconditionError):
            self.family.orbit_norms((-1,))

    def test_swapped_arguments_conjugate(self):
        c = self.c_coefficient()
        prec = steps_for(self.space, 2)
        low, high = self.poly({(-1,): 1}), self.poly({(1,): 1})
        forward = inner1(self.group, self.k, low, high, 2)
        backward = inner1(self.group, self.k, high, low, 2)
        self.assertTrue(forward.agrees(series_expand(-c, prec), prec))
        self.assertTrue(backward.agrees(series_expand((-c).star(), prec), prec))

    def test_hermitian_check(self):
        one = self.space.one
        report = self.family.hermitian_check((1,), {(1,): one + self.tau, (-1,): one},
                                             {(1,): -self.tau, (-1,): one + one}, 2)
        self.assertTrue(report['holds'])


class TestA2Polynomials(FamilyCase):
    type_name = 'A2'

    def test_e_zero(self):
        self.assertEqual(self.family.compute_e((0, 0)).poly.text(), "1")

    def test_recursion(self):
        self.assertEqual(self.family.ti_on_e(2, (1, 0))['case'], 'stabilized')
        self.assertTrue(self.family.ti_on_e(2, (1, 0))['holds'])
        raised = self.family.ti_on_e(1, (1, 0))
        self.assertEqual(raised['target'], (-1, 1))
        self.assertTrue(raised['holds'])

    def test_p_leading_term(self):
        P = self.family.compute_p((2,), EpsilonChar.trivial((2,)), (1, 0))
        mu, coeff = leading_term(self.group, P)
        self.assertEqual(mu, (1, 0))
        self.assertTrue(coeff.is_one())

    def test_sign_character_on_stabilizer(self):
        P = self.family.compute_p((1, 2), EpsilonChar.sign((1, 2)), (1, 0))
        self.assertTrue(P.is_zero())

    def test_orbit_relation(self):
        for eps in (EpsilonChar.trivial((2,)), EpsilonChar.sign((2,))):
            base = self.family.compute_f((2,), eps, (0, 1))
            self.assertTrue(self.family.orbit_relation((2,), eps, (0, 1), (0, 1)).is_one())
            scalar = self.family.orbit_relation((2,), eps, (0, 1), (1, -1))
            self.assertEqual(self.family.compute_f((2,), eps, (1, -1)), base.scale(scalar))

    def test_orbit_norms(self):
        self.assertEqual(set(self.family.orbit_norms((1, 0))), {(1, 0), (-1, 1), (0, -1)})

    def test_hermitian_check(self):
        one = self.space.one
        coeffs_f = {(1, 0): one + self.tau, (-1, 1): one + one, (0, -1): -self.tau}
        coeffs_g = {(1, 0): self.tau, (0, -1): one - self.tau}
        self.assertTrue(self.family.hermitian_check((1, 0), coeffs_f, coeffs_g, 1)['holds'])


if __name__ == '__main__':
    unittest.main()
