import unittest

import numpy as np

from modules.errors import NotSphericalError, NotWJInvariantError
from modules.hecke import finite_poincare
from modules.induced import InducedModule
from modules.laurent import LaurentPoly, orbit_sum, random_poly
from modules.rootdata import weyl_group


class InducedCase(unittest.TestCase):
    J = (2,)

    def setUp(self):
        self.group = weyl_group('A2')
        self.data = self.group.data
        self.space = self.data.space
        self.k = self.data.formal_labelling()
        self.module = InducedModule(self.group, self.J, self.k)
        self.tau = self.data.tau(self.k, 1)
        self.one = LaurentPoly.constant(self.space, 2)


class TestModuleStructure(InducedCase):
    def test_cocycle(self):
        s1, s2 = self.group.s(1), self.group.s(2)
        self.assertEqual(self.module.cocycle(2, self.group.one), (self.group.one, s2))
        self.assertEqual(self.module.cocycle(1, self.group.one), (s1, self.group.one))

    def test_generator_action(self):
        h = self.module.basis_vector(self.one)
        self.assertEqual(self.module.act_Ti(2, h), h.scale(self.tau))
        self.assertEqual(self.module.act_Ti(1, h), self.module.basis_vector(self.one, self.group.s(1)))

    def test_quadratic_relation(self):
        rng = np.random.default_rng(2)
        coords = {v: random_poly(self.data, rng, terms=2, radius=1) for v in self.module.reps}
        h = self.module.element(coords)
        for i in self.data.finite_indices:
            lhs = self.module.act_Ti(i, self.module.act_Ti(i, h))
            rhs = self.module.act_Ti(i, h).scale(self.tau - self.tau.inverse()) + h
            self.assertEqual(lhs, rhs)
            self.assertEqual(self.module.act_Ti_inv(i, self.module.act_Ti(i, h)), h)

    def test_x_action(self):
        h = self.module.basis_vector(self.one)
        shifted = self.module.act_X((1, 0), h)
        self.assertEqual(shifted.coordinate(self.group.one), LaurentPoly.monomial(self.space, (1, 0)))


class TestGamma(InducedCase):
    def test_gamma_of_one_is_spherical(self):
        image = self.module.gamma(self.one)
        self.assertTrue(self.module.is_spherical(image))
        report = self.module.spherical_project(image)
        self.assertEqual(report['f'], self.one)
        self.assertTrue(report['in_AJ'])
        self.assertTrue(report['gamma_matches'])
        self.assertTrue(report['top_symmetric'])

    def test_gamma_of_orbit_sum(self):
        f = orbit_sum(self.group, self.J, (0, 1))
        report = self.module.spherical_project(self.module.gamma(f))
        self.assertEqual(report['f'], f)
        self.assertTrue(report['gamma_matches'])

    def test_highest_scalar(self):
        self.assertEqual(self.module.highest_scalar(), (1 + self.tau * self.tau) / self.tau)

    def test_rejects_non_invariant(self):
        with self.assertRaises(NotWJInvariantError):
            self.module.gamma(LaurentPoly.monomial(self.space, (0, 1)))

    def test_rejects_non_spherical(self):
        with self.assertRaises(NotSphericalError):
            self.module.spherical_project(self.module.basis_vector(self.one))


class TestFullParabolic(InducedCase):
    J = (1, 2)

    def test_single_coordinate(self):
        self.assertEqual(len(self.module.reps), 1)
        image = self.module.gamma(self.one)
        w0 = self.group.longest((1, 2))
        scalar = finite_poincare(self.group, self.k) / self.module.tau(w0)
        self.assertEqual(image, self.module.basis_vector(self.one).scale(scalar))
        self.assertEqual(self.module.highest_scalar(), scalar)


if __name__ == '__main__':
    unittest.main()
