import unittest
from fractions import Fraction

import numpy as np

from modules.errors import InvalidCharacterError
from modules.hecke import (
    EpsilonChar, HeckeAction, coset_poincare, finite_poincare, hecke_word_check, tau_label, y_bernstein_check,
)
from modules.laurent import LaurentPoly, random_poly
from modules.rootdata import weyl_group


class HeckeCase(unittest.TestCase):
    type_name = 'A1'

    def setUp(self):
        self.group = weyl_group(self.type_name)
        self.data = self.group.data
        self.space = self.data.space
        self.k = self.data.formal_labelling()
        self.hecke = HeckeAction(self.group, self.k)
        self.rng = np.random.default_rng(7)

    def poly(self, terms):
        return LaurentPoly(self.space, self.data.rank, terms)


class TestA1Operators(HeckeCase):
    def test_t1_on_constants(self):
        one = self.poly({(0,): 1})
        self.assertEqual(self.hecke.T(1, one), one.scale(self.hecke.tau[1]))

    def test_t1_on_fundamental_weight(self):
        tau = self.hecke.tau[1]
        image = self.hecke.T(1, self.poly({(1,): 1}))
        self.assertEqual(image, self.poly({(-1,): tau.inverse()}))

    def test_y_eigenvalue_on_dominant_monomial(self):
        tau = self.hecke.tau[1]
        x = self.poly({(1,): 1})
        self.assertEqual(self.hecke.Y((1,), x), x.scale(self.space.q(Fraction(-1, 2)) * tau.inverse()))

    def test_symmetrise(self):
        tau = self.hecke.tau[1]
        x = self.poly({(1,): 1})
        U = self.hecke.symmetrise((1,), EpsilonChar.trivial((1,)), x)
        self.assertEqual(U, self.poly({(1,): 1, (-1,): 1}).scale(tau.inverse()))

    def test_inverse(self):
        for f in (random_poly(self.data, self.rng) for _ in range(3)):
            for i in self.data.indices:
                self.assertEqual(self.hecke.T_inv(i, self.hecke.T(i, f)), f)


class TestQuadraticRelation(unittest.TestCase):
    def test_all_types(self):
        rng = np.random.default_rng(5)
        for name in ('A1', 'A2', 'C1v-C1'):
            group = weyl_group(name)
            data = group.data
            hecke = HeckeAction(group, data.formal_labelling())
            for i in data.indices:
                f = random_poly(data, rng)
                t = hecke.tau[i]
                lhs = hecke.T(i, hecke.T(i, f))
                rhs = hecke.T(i, f).scale(t - t.inverse()) + f
                self.assertEqual(lhs, rhs, f"{name} T{i}")


class TestA2Hecke(HeckeCase):
    type_name = 'A2'

    def test_braid_relation(self):
        f = random_poly(self.data, self.rng)
        self.assertTrue(hecke_word_check(self.hecke, [(1, 2, 1), (2, 1, 2)], f))
        self.assertTrue(hecke_word_check(self.hecke, [(0, 1, 0), (1, 0, 1)], f))

    def test_finite_poincare(self):
        t2 = self.hecke.tau[1] ** 2
        expected = 1 + 2 * t2 + 2 * t2 * t2 + t2 * t2 * t2
        self.assertEqual(finite_poincare(self.group, self.k), expected)
        self.assertEqual(finite_poincare(self.group, self.k, (2,)), 1 + t2)

    def test_coset_poincare(self):
        label = tau_label(self.group, self.k).squared()
        t2 = self.hecke.tau[1] ** 2
        self.assertEqual(coset_poincare(self.group, label, (2,), (1, 2)), 1 + t2 + t2 * t2)

    def test_character_validation(self):
        with self.assertRaises(InvalidCharacterError):
            EpsilonChar.from_map({1: 1, 2: -1}).validate(self.group)
        sign = EpsilonChar.sign((1, 2)).validate(self.group)
        self.assertEqual(sign.value(self.group, self.group.longest((1, 2))), -1)

    def test_y_operators_commute(self):
        f = random_poly(self.data, self.rng, terms=2, radius=1)
        lhs = self.hecke.Y((1, 0), self.hecke.Y((0, 1), f))
        rhs = self.hecke.Y((0, 1), self.hecke.Y((1, 0), f))
        self.assertEqual(lhs, rhs)



class TestYBernstein(unittest.TestCase):
    def check_type(self, name, **sizes):
        rng = np.random.default_rng(11)
        group = weyl_group(name)
        data = group.data
        hecke = HeckeAction(group, data.formal_labelling())
        basis = [tuple(int(i == j) for j in range(data.rank)) for i in range(data.rank)]
        f = random_poly(data, rng, **sizes)
        for i in data.finite_indices:
            for lam in basis:
                self.assertTrue(y_bernstein_check(hecke, i, lam, f), f"{name} T{i} Y^{lam}")

    def test_a1(self):
        self.check_type('A1')

    def test_c1_non_reduced(self):
        self.check_type('C1v-C1')

    def test_a2(self):
        self.check_type('A2', terms=2, radius=1)

    def test_degenerate_case_commutes(self):
        group = weyl_group('A2')
        hecke = HeckeAction(group, group.data.formal_labelling())
        f = random_poly(group.data, np.random.default_rng(2), terms=2, radius=1)
        self.assertEqual(hecke.T(2, hecke.Y((1, 0), f)), hecke.Y((1, 0), hecke.T(2, f)))


if __name__ == '__main__':
    unittest.main()
