import unittest

from modules.errors import NonExpandableError, PreconditionError
from modules.hecke import finite_poincare
from modules.laurent import LaurentPoly, f_poly
from modules.rootdata import Labelling, weyl_group
from modules.weights import (
    TruncSeries, WeightFunction, delta0_symmetry_check, inner, nabla_constant_term, nabla_series, series_expand,
    steps_for, weight_polynomial,
)


class TestTruncSeries(unittest.TestCase):
    def setUp(self):
        self.space = weyl_group('A1').data.space

    def test_inverse_of_geometric(self):
        one = self.space.one
        series = TruncSeries(self.space, {0: one, 1: -one}, 4)
        inverse = series.inverse()
        self.assertEqual(inverse.prec, 4)
        self.assertTrue(all(inverse.coefficient(d) == one for d in range(5)))
        self.assertTrue((series * inverse).agrees(TruncSeries.constant(self.space, one, 4)))

    def test_zero_has_no_inverse(self):
        with self.assertRaises(NonExpandableError):
            TruncSeries.zero(self.space, 3).inverse()

    def test_coefficient_beyond_precision(self):
        with self.assertRaises(PreconditionError):
            TruncSeries.zero(self.space, 2).coefficient(3)

    def test_series_expand(self):
        value = self.space.one / (1 - self.space.q(1))
        series = series_expand(value, 4)
        self.assertEqual([series.coefficient(d).is_one() for d in range(5)], [True, False, True, False, True])
        self.assertTrue(series.coefficient(1).is_zero())

    def test_steps_for(self):
        self.assertEqual(steps_for(self.space, 3), 6)
        self.assertEqual(steps_for(weyl_group('C1v-C1').data.space, 3), 6)
        self.assertEqual(steps_for(weyl_group('A2').data.space, 1), 6)


class TestWeightPolynomial(unittest.TestCase):
    def test_a1_matches_closed_form(self):
        group = weyl_group('A1')
        k = group.data.formal_labelling()
        tau = group.data.tau(k, 1)
        self.assertEqual(weight_polynomial(group, k), f_poly(group, tau))

    def test_a2_product_form(self):
        group = weyl_group('A2')
        space = group.data.space
        k = group.data.formal_labelling()
        t2 = group.data.tau(k, 1) ** 2
        expected = LaurentPoly.monomial(space, (1, 1))
        for alpha in group.data.positive_finite_roots:
            expected = expected * (1 - LaurentPoly.monomial(space, tuple(-a for a in alpha), t2))
        self.assertEqual(weight_polynomial(group, k), expected)

    def test_delta0_symmetrisation(self):
        for name in ('A1', 'A2'):
            group = weyl_group(name)
            k = group.data.formal_labelling()
            self.assertTrue(delta0_symmetry_check(group, k, finite_poincare(group, k)), name)


class TestInnerProduct(unittest.TestCase):
    def test_a1_norm_of_one(self):
        group = weyl_group('A1')
        k = group.data.formal_labelling()
        one = LaurentPoly.constant(group.data.space, 1)
        series = inner(group, k, one, one, 1)
        t2 = group.data.tau(k, 1) ** 2
        self.assertTrue(series.coefficient(0).is_one())
        self.assertTrue(series.coefficient(1).is_zero())
        self.assertEqual(series.coefficient(2), (t2 - 1) * (t2 - 1))

    def test_nabla_is_symmetric(self):
        for name in ('A1', 'C1v-C1'):
            group = weyl_group(name)
            nabla = nabla_series(group, group.data.formal_labelling(), 2)
            self.assertTrue(nabla.is_w0_invariant(group), name)

    def test_nabla_constant_term_needs_invariant(self):
        group = weyl_group('A1')
        k = group.data.formal_labelling()
        with self.assertRaises(PreconditionError):
            nabla_constant_term(group, k, LaurentPoly.monomial(group.data.space, (1,)), 1,
                                finite_poincare(group, k))

    def test_negative_label_rejected(self):
        group = weyl_group('A1')
        with self.assertRaises(PreconditionError):
            WeightFunction(group, Labelling.specialized({'O1': -1}))
        WeightFunction(group, Labelling.specialized({'O1': 1}))


if __name__ == '__main__':
    unittest.main()
