import unittest
from fractions import Fraction

from modules.errors import LatticeMismatchError, UnknownTypeError
from modules.rootdata import (
    AffineRoot, askey_wilson_parameters, catalog, catalog_json, dual_label, dual_label_lemmas, weyl_group,
)


class TestCatalog(unittest.TestCase):
    def test_unknown_type(self):
        with self.assertRaises(UnknownTypeError):
            catalog('B2')

    def test_pairing(self):
        data = catalog('A2')
        self.assertEqual(data.pairing((2, -1), (2, -1)), 2)
        self.assertEqual(data.pairing((1, 0), (2, -1)), 1)
        self.assertEqual(data.coroot((2, -1)), (2, -1))

    def test_positivity(self):
        data = catalog('C1v-C1')
        self.assertTrue(data.is_positive(AffineRoot((-1,), Fraction(1, 2))))
        self.assertFalse(data.is_positive(AffineRoot((-2,), Fraction(0))))
        self.assertTrue(data.is_indivisible(AffineRoot((1,), Fraction(0))))
        self.assertFalse(data.is_indivisible(AffineRoot((2,), Fraction(0))))

    def test_catalog_json(self):
        payload = catalog_json('A1')
        self.assertEqual(payload['type'], 'A1')
        self.assertEqual(payload['rank'], 1)


class TestAffineWeylGroup(unittest.TestCase):
    def test_finite_groups(self):
        self.assertEqual(len(weyl_group('A1').finite_group()), 2)
        self.assertEqual(len(weyl_group('A2').finite_group()), 6)
        self.assertEqual(len(weyl_group('C1v-C1').finite_group()), 2)
        group = weyl_group('A2')
        self.assertEqual(group.length(group.longest((1, 2))), 3)

    def test_reflections(self):
        group = weyl_group('A1')
        self.assertEqual(group.s(1).act_linear((1,)), (-1,))
        self.assertEqual(group.s(0).translation, (2,))

    def test_c1_translation_factorisation(self):
        group = weyl_group('C1v-C1')
        self.assertEqual(group.s(0) * group.s(1), group.translation((1,)))
        self.assertEqual(group.length(group.translation((1,))), 2)
        self.assertEqual(len(group.omega), 1)

    def test_a1_omega(self):
        group = weyl_group('A1')
        self.assertEqual(len(group.omega), 2)
        self.assertEqual(group.length(group.translation((1,))), 1)

    def test_translation_rejects_fractions(self):
        with self.assertRaises(LatticeMismatchError):
            weyl_group('A1').translation((Fraction(1, 2),))

    def test_coxeter_exponents(self):
        self.assertEqual(weyl_group('A2').coxeter_exponent(1, 2), 3)
        self.assertEqual(weyl_group('A2').coxeter_exponent(0, 1), 3)

    def test_inversion_set_size(self):
        group = weyl_group('A2')
        w0 = group.longest((1, 2))
        roots = group.inversion_set(w0)
        self.assertEqual(len(roots), 3)
        self.assertTrue(all(group.data.is_positive(r) for r in roots))

    def test_bruhat(self):
        group = weyl_group('A2')
        s1, s2 = group.s(1), group.s(2)
        self.assertTrue(group.bruhat_leq(s1, s1 * s2))
        self.assertFalse(group.bruhat_leq(s1 * s2, s2 * s1))

    def test_down_set_and_order(self):
        group = weyl_group('A1')
        self.assertEqual(group.down_set((-1,)), [(-1,), (1,)])
        self.assertEqual(group.down_set((1,)), [(1,)])
        self.assertTrue(group.order_leq((1,), (-1,)))
        self.assertFalse(group.order_leq((-1,), (1,)))

    def test_minimal_coset_reps(self):
        group = weyl_group('A2')
        reps = group.minimal_coset_reps((2,))
        self.assertEqual(len(reps), 3)
        self.assertEqual(sorted(group.length(v) for v in reps), [0, 1, 2])

    def test_coset_decompose(self):
        group = weyl_group('A2')
        w = group.s(1) * group.s(2)
        v, m = group.coset_decompose(w, (2,))
        self.assertEqual(v, group.s(1))
        self.assertEqual(m, group.s(2))

    def test_j_dominant_rep(self):
        group = weyl_group('A2')
        lam0, v = group.j_dominant_rep((-1, 0), (1,))
        self.assertEqual(lam0, (1, -1))
        self.assertEqual(v, group.s(1))
        self.assertEqual(group.stabilizer((1, 0), (1, 2)), (2,))
        self.assertEqual(set(group.orbit((1, 0), (1, 2))), {(1, 0), (-1, 1), (0, -1)})


class TestDualLabels(unittest.TestCase):
    def test_c1_dual_is_involution(self):
        data = catalog('C1v-C1')
        k = data.formal_labelling()
        self.assertEqual(dual_label(data, dual_label(data, k)), k)

    def test_lemmas(self):
        for name in ('A1', 'A2', 'C1v-C1'):
            data = catalog(name)
            report = dual_label_lemmas(data, data.formal_labelling())
            self.assertTrue(all(report.values()), name)

    def test_askey_wilson(self):
        data = catalog('C1v-C1')
        k = data.formal_labelling()
        params = askey_wilson_parameters(data, k)
        self.assertEqual(params['a'] * params['b'], -(data.tau(k, 1) ** 2))
        with self.assertRaises(UnknownTypeError):
            askey_wilson_parameters(catalog('A1'), catalog('A1').formal_labelling())


if __name__ == '__main__':
    unittest.main()
