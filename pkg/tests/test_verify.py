import unittest

from modules.errors import UsageError
from modules.rootdata import weyl_group
from modules.verify import InvariantVerifier, characters, parabolic_choices, run_suite


class TestHelpers(unittest.TestCase):
    def test_parabolic_choices(self):
        self.assertEqual(parabolic_choices(weyl_group('A1')), [(), (1,)])
        self.assertEqual(parabolic_choices(weyl_group('A2')), [(), (2,), (1, 2)])

    def test_characters(self):
        group = weyl_group('A2')
        self.assertEqual(len(characters(group, ())), 1)
        signs = [[eps[j] for j in (1, 2)] for eps in characters(group, (1, 2))]
        self.assertEqual(signs, [[1, 1], [-1, -1]])


class TestSuites(unittest.TestCase):
    def run_type(self, type_name, suite, samples=2, ideal_size=None):
        group = weyl_group(type_name)
        return run_suite(group, group.data.formal_labelling(), suite, order=1, samples=samples, seed=3,
                         ideal_size=ideal_size)

    def assertAllPassed(self, records):
        self.assertTrue(records)
        failed = [f"{r.name}: {r.detail}" for r in records if not r.passed]
        self.assertEqual(failed, [])

    def test_combinatorics(self):
        for name in ('A1', 'A2', 'C1v-C1'):
            self.assertAllPassed(self.run_type(name, 'combinatorics'))

    def test_operators_a1(self):
        self.assertAllPassed(self.run_type('A1', 'operators'))

    def test_eigen_a1(self):
        self.assertAllPassed(self.run_type('A1', 'eigen'))

    def test_spherical_a1(self):
        self.assertAllPassed(self.run_type('A1', 'spherical'))

    def test_operators_c1_cleared_relation(self):
        records = self.run_type('C1v-C1', 'operators', samples=1)
        self.assertAllPassed(records)
        self.assertTrue(any('y-bernstein cleared' in r.name for r in records))

    def test_orthogonality_c1(self):
        records = self.run_type('C1v-C1', 'orthogonality', samples=1)
        self.assertAllPassed(records)
        self.assertTrue(any('hermitian symmetry' in r.name for r in records))

    def test_norms_c1(self):
        self.assertAllPassed(self.run_type('C1v-C1', 'norms', samples=1))

    def test_unitarity_c1(self):
        records = self.run_type('C1v-C1', 'unitarity', samples=1)
        self.assertAllPassed(records)
        self.assertTrue(any(r.name.startswith('T0 unitary') for r in records))

    def test_matrix_weights_c1(self):
        self.assertAllPassed(self.run_type('C1v-C1', 'matrix-weights', samples=1))

    def test_gram_schmidt_a1(self):
        self.assertAllPassed(self.run_type('A1', 'gram-schmidt', samples=1))

    def test_unitarity_a1_covers_omega(self):
        records = self.run_type('A1', 'unitarity', samples=1)
        self.assertAllPassed(records)
        self.assertTrue(any(r.name.startswith('T(u1) unitary') for r in records))

    def test_unitarity_a2(self):
        records = self.run_type('A2', 'unitarity', samples=1)
        self.assertAllPassed(records)
        names = [r.name for r in records]
        self.assertTrue(any(n.startswith('T0 unitary') for n in names))
        self.assertTrue(any(n.startswith('T(u') for n in names))
        self.assertTrue(any('J=[1, 2] eps=[-1, -1]' in n for n in names))

    def test_orthogonality_a2(self):
        self.assertAllPassed(self.run_type('A2', 'orthogonality', samples=1, ideal_size=3))

    def test_norms_a2(self):
        self.assertAllPassed(self.run_type('A2', 'norms', samples=1, ideal_size=3))

    def test_matrix_weights_a2(self):
        self.assertAllPassed(self.run_type('A2', 'matrix-weights', samples=1))

    def test_gram_schmidt_a2(self):
        self.assertAllPassed(self.run_type('A2', 'gram-schmidt', samples=1))

    def test_unknown_suite(self):
        group = weyl_group('A1')
        verifier = InvariantVerifier(group, group.data.formal_labelling(), order=1, samples=1)
        with self.assertRaises(UsageError):
            verifier.run('symmetry')

    def test_records_serialise(self):
        record = self.run_type('A1', 'combinatorics')[0]
        payload = record.to_json()
        self.assertEqual(set(payload), {'suite', 'name', 'passed', 'detail'})


class TestDominantIdeal(unittest.TestCase):
    def ideal(self, type_name, J):
        group = weyl_group(type_name)
        verifier = InvariantVerifier(group, group.data.formal_labelling(), order=1, samples=1, ideal_size=6)
        return group, verifier.dominant_ideal(J)

    def assertClosedIdeal(self, type_name, J):
        group, ideal = self.ideal(type_name, J)
        self.assertGreaterEqual(len(ideal), 6)
        self.assertEqual(len(set(ideal)), len(ideal))
        for lam in ideal:
            self.assertEqual(group.j_dominant_rep(lam, J)[0], lam)
            for mu in group.down_set(lam):
                if group.j_dominant_rep(mu, J)[0] == mu:
                    self.assertIn(mu, ideal)

    def test_a1_symmetric(self):
        self.assertClosedIdeal('A1', (1,))

    def test_a2_full(self):
        self.assertClosedIdeal('A2', (1, 2))

    def test_a2_empty(self):
        self.assertClosedIdeal('A2', ())


if __name__ == '__main__':
    unittest.main()
