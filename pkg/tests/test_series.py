import random
import unittest
from fractions import Fraction

from genbern.errors import NonInvertibleLeadingCoefficient, OrderMismatch
from genbern.poly import Poly
from genbern.rings import POLY, RATIONAL
from genbern.series import (Series, series_exp_minus_one, series_exp_xt, series_from_egf, series_h,
                            series_mul, series_pow, series_recip)


def random_unit_series(rng, order):
    """常数项为 1 的随机有理系数级数"""
    coeffs = [Fraction(1)] + [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(order)]
    return Series(coeffs, order=order, ring=RATIONAL)


class TestSeriesProduct(unittest.TestCase):

    def test_difference_of_squares(self):
        """(1 + t)(1 - t) = 1 - t^2"""
        f = Series([1, 1], order=2)
        g = Series([1, -1], order=2)
        self.assertEqual(series_mul(f, g), Series([1, 0, -1], order=2))

    def test_identity(self):
        f = Series([Fraction(1, 2), 3, Fraction(-1, 5)], order=2)
        self.assertEqual(f * Series.one(2), f)

    def test_truncation(self):
        f = Series([1, 1], order=1)
        self.assertEqual((f * f).coeffs, (1, 2))

    def test_order_mismatch(self):
        with self.assertRaises(OrderMismatch):
            series_mul(Series([1, 1], order=2), Series([1, 1], order=3))
        with self.assertRaises(OrderMismatch):
            Series([1], order=1) + Series([1], order=2)


class TestSeriesReciprocal(unittest.TestCase):

    def test_geometric(self):
        """1/(1 + t) = 1 - t + t^2 - t^3 + t^4"""
        self.assertEqual(series_recip(Series([1, 1], order=4)), Series([1, -1, 1, -1, 1], order=4))

    def test_bernoulli_generating_function(self):
        """t/(e^t - 1) 的前五项"""
        expected = Series([1, Fraction(-1, 2), Fraction(1, 12), 0, Fraction(-1, 720)], order=4)
        self.assertEqual(series_recip(series_h(4)), expected)

    def test_product_with_reciprocal(self):
        for order in (0, 1, 6, 40):
            h = series_h(order)
            self.assertEqual(series_mul(h, series_recip(h)), Series.one(order))

    def test_double_reciprocal(self):
        rng = random.Random(11)
        for _ in range(10):
            f = random_unit_series(rng, 8)
            self.assertEqual(series_recip(series_recip(f)), f)

    def test_non_invertible(self):
        with self.assertRaises(NonInvertibleLeadingCoefficient):
            series_recip(Series([0, 1], order=3))
        with self.assertRaises(NonInvertibleLeadingCoefficient):
            series_recip(Series([Poly.constant(2), Poly.x()], order=2, ring=POLY))
        with self.assertRaises(NonInvertibleLeadingCoefficient):
            series_recip(Series([Poly.x()], order=2, ring=POLY))

    def test_polynomial_coefficients(self):
        """1/e^{xt} = e^{-xt}"""
        reciprocal = series_recip(series_exp_xt(5))
        for k in range(6):
            self.assertEqual(reciprocal.egf_coeff(k), Poly.monomial(k).scale((-1) ** k))


class TestSeriesPower(unittest.TestCase):

    def test_binomial_expansion(self):
        self.assertEqual(series_pow(Series([1, 1], order=3), 3), Series([1, 3, 3, 1], order=3))

    def test_trivial_exponents(self):
        f = Series([2, 3, 5], order=2)
        self.assertEqual(series_pow(f, 0), Series.one(2))
        self.assertEqual(series_pow(f, 1), f)

    def test_exponent_addition(self):
        rng = random.Random(3)
        f = random_unit_series(rng, 6)
        for a in range(5):
            for b in range(5):
                self.assertEqual(series_pow(f, a) * series_pow(f, b), series_pow(f, a + b))

    def test_negative_exponent(self):
        with self.assertRaises(ValueError):
            series_pow(Series([1, 1], order=2), -1)


class TestNamedSeries(unittest.TestCase):

    def test_h(self):
        self.assertEqual(series_h(0).coeffs, (1,))
        self.assertEqual(series_h(2).coeffs, (1, Fraction(1, 2), Fraction(1, 6)))

    def test_exp_minus_one(self):
        self.assertEqual(series_exp_minus_one(3).coeffs, (0, 1, Fraction(1, 2), Fraction(1, 6)))

    def test_exp_xt(self):
        e = series_exp_xt(3)
        self.assertEqual(e.coeff(0), Poly.one())
        self.assertEqual(e.coeff(1), Poly.x())
        self.assertEqual(e.coeff(3), Poly([0, 0, 0, Fraction(1, 6)]))
        self.assertEqual(e.egf_coeff(3), Poly.monomial(3))

    def test_from_egf(self):
        f = series_from_egf([1, 1, 2, 6], order=3)
        self.assertEqual(f.coeffs, (1, 1, 1, 1))
        self.assertEqual(f.egf_coeffs(), [1, 1, 2, 6])

    def test_lift(self):
        lifted = series_h(2).lift(POLY)
        self.assertIs(lifted.ring, POLY)
        self.assertEqual(lifted.coeff(1), Poly.constant(Fraction(1, 2)))


if __name__ == '__main__':
    unittest.main()
