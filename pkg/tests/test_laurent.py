import unittest

import numpy as np

from modules.errors import NotDivisibleError, NotJDominantError, NoUniqueMaximumError, UnsupportedTypeError
from modules.laurent import (
    LaurentPoly, exact_div, f_poly, leading_term, monomial_symmetric, orbit_sum, random_poly, weyl_act,
    weyl_denominator,
)
from modules.rootdata import weyl_group


def poly(group, terms):
    return LaurentPoly(group.data.space, group.data.rank, terms)


class TestLaurentPoly(unittest.TestCase):
    def setUp(self):
        self.group = weyl_group('A1')
        self.space = self.group.data.space

    def test_arithmetic(self):
        x = poly(self.group, {(1,): 1})
        self.assertEqual((x + 1) * (x - 1), poly(self.group, {(2,): 1, (0,): -1}))
        self.assertTrue((x - x).is_zero())
        self.assertEqual(x ** 3, poly(self.group, {(3,): 1}))

    def test_star(self):
        f = poly(self.group, {(1,): self.space.q(1), (-2,): 3})
        self.assertEqual(f.star(), poly(self.group, {(-1,): self.space.q(-1), (2,): 3}))
        self.assertEqual(f.star().star(), f)

    def test_text(self):
        self.assertEqual(LaurentPoly.constant(self.space, 1).text(), "1")
        self.assertEqual(poly(self.group, {(1,): 1}).text(), "e[1]")
        self.assertEqual(LaurentPoly.zero(self.space, 1).text(), "0")

    def test_exact_div(self):
        x = poly(self.group, {(1,): 1})
        self.assertEqual(exact_div(x * x - 1, x - 1), x + 1)
        with self.assertRaises(NotDivisibleError):
            exact_div(x * x + 1, x - 1)
        with self.assertRaises(NotDivisibleError):
            exact_div(x, LaurentPoly.zero(self.space, 1))

    def test_random_poly_shape(self):
        f = random_poly(self.group.data, np.random.default_rng(3))
        self.assertEqual(f.rank, 1)
        self.assertTrue(all(abs(mu[0]) <= 2 for mu in f.terms))


class TestWeylAction(unittest.TestCase):
    def test_affine_reflection_carries_q(self):
        group = weyl_group('A1')
        space = group.data.space
        image = weyl_act(group.data, group.s(0), poly(group, {(1,): 1}))
        self.assertEqual(image, poly(group, {(-1,): space.q(1)}))

    def test_group_action(self):
        group = weyl_group('A2')
        f = random_poly(group.data, np.random.default_rng(11))
        s1, s2 = group.s(1), group.s(2)
        lhs = weyl_act(group.data, s1 * s2, f)
        rhs = weyl_act(group.data, s1, weyl_act(group.data, s2, f))
        self.assertEqual(lhs, rhs)


class TestSymmetricPolys(unittest.TestCase):
    def test_orbit_sum(self):
        group = weyl_group('A2')
        m = orbit_sum(group, (1, 2), (1, 0))
        self.assertEqual(set(m.terms), {(1, 0), (-1, 1), (0, -1)})
        self.assertEqual(monomial_symmetric(group, (0, -1)), m)
        with self.assertRaises(NotJDominantError):
            orbit_sum(group, (1, 2), (-1, 0))

    def test_weyl_denominator(self):
        group = weyl_group('A1')
        self.assertEqual(weyl_denominator(group), poly(group, {(1,): 1, (-1,): -1}))

    def test_f_poly(self):
        group = weyl_group('A1')
        tau = group.data.tau(group.data.formal_labelling(), 1)
        self.assertEqual(f_poly(group, tau), poly(group, {(1,): 1, (-1,): -(tau * tau)}))
        c1 = weyl_group('C1v-C1')
        with self.assertRaises(UnsupportedTypeError):
            f_poly(c1, c1.data.space.one)

    def test_leading_term(self):
        group = weyl_group('A1')
        mu, coeff = leading_term(group, poly(group, {(1,): 1, (-1,): 2}))
        self.assertEqual(mu, (-1,))
        self.assertEqual(coeff, group.data.space.from_rational(2))
        with self.assertRaises(NoUniqueMaximumError):
            leading_term(group, LaurentPoly.zero(group.data.space, 1))


if __name__ == '__main__':
    unittest.main()
