import unittest
from fractions import Fraction

from modules.errors import DenominatorOverflowError, DivisionByZeroError, UnknownTypeError
from modules.params import ExponentVector, ScalarField


class TestExponentVector(unittest.TestCase):
    def test_arithmetic(self):
        x = ExponentVector.of(1, {'O1': 2})
        y = ExponentVector.of(Fraction(-1, 2), {'O1': -2})
        self.assertEqual(x + y, ExponentVector.of(Fraction(1, 2)))
        self.assertTrue((x - x).is_zero())
        self.assertEqual(x.scale(Fraction(1, 2)).label('O1'), 1)

    def test_symbol(self):
        self.assertEqual(ExponentVector.symbol('O2').label('O2'), 1)
        self.assertEqual(ExponentVector.symbol('O2').unit, 0)


class TestScalarField(unittest.TestCase):
    def setUp(self):
        self.space = ScalarField(['O1'], 2)

    def test_q_powers_multiply(self):
        space = self.space
        self.assertTrue((space.q(1) * space.q(-1)).is_one())
        self.assertEqual(space.q(Fraction(1, 2)) ** 2, space.q(1))

    def test_denominator_bound(self):
        with self.assertRaises(DenominatorOverflowError):
            self.space.q(Fraction(1, 3))

    def test_unknown_label(self):
        with self.assertRaises(UnknownTypeError):
            self.space.qpow(ExponentVector.symbol('O7'))

    def test_division_by_zero(self):
        with self.assertRaises(DivisionByZeroError):
            self.space.one / self.space.zero

    def test_rational_coercion(self):
        half = self.space.one / 2
        self.assertEqual(half + Fraction(1, 2), self.space.one)
        self.assertEqual(1 - half, half)


class TestKScalar(unittest.TestCase):
    def setUp(self):
        self.space = ScalarField(['O1'], 2)
        self.t = self.space.qpow(ExponentVector.symbol('O1').scale(Fraction(1, 2)))

    def test_star_inverts_monomials(self):
        space = self.space
        self.assertEqual(space.q(Fraction(1, 2)).star(), space.q(Fraction(-1, 2)))
        self.assertEqual(self.t.star(), self.t.inverse())

    def test_star_is_involution(self):
        value = (1 - self.t * self.space.q(1)) / (1 + self.t)
        self.assertEqual(value.star().star(), value)

    def test_specialize(self):
        symbol = self.space.qpow(ExponentVector.symbol('O1'))
        self.assertEqual(symbol.specialize({'O1': 1}), self.space.q(1))
        self.assertTrue(symbol.specialize({'O1': 0}).is_one())

    def test_text(self):
        self.assertEqual(self.space.one.text(), "1")
        self.assertEqual(self.space.zero.text(), "0")

    def test_q_grading(self):
        numer, denom = (self.space.q(1) + 1).q_grading()
        self.assertEqual(set(numer), {0, 2})
        self.assertEqual(set(denom), {0})
        self.assertTrue(self.t.is_label_only())
        self.assertFalse(self.space.q(1).is_label_only())


if __name__ == '__main__':
    unittest.main()
