import unittest
from fractions import Fraction

from genbern.bell import BellTable, _closed_sum, bell_closed, bell_enum, bell_generating_series, bell_rec
from genbern.bernoulli import BernoulliEngine, lambda_seq
from genbern.combinatorics import StirlingTable
from genbern.errors import InsufficientSequence, UnsupportedOrder
from genbern.poly import Poly
from genbern.rings import POLY, RATIONAL
from genbern.series import series_from_egf


class TestBellDefinition(unittest.TestCase):

    def setUp(self):
        self.seq = [Fraction(v) for v in (2, 3, 5, 7, 11, 13)]

    def test_boundaries(self):
        for fn in (bell_enum, bell_rec):
            self.assertEqual(fn(0, 0, self.seq), 1)
            self.assertEqual(fn(3, 0, self.seq), 0)
            self.assertEqual(fn(2, 3, self.seq), 0)

    def test_single_block(self):
        """B_{n,1} = λ_n"""
        for n in range(1, 7):
            self.assertEqual(bell_enum(n, 1, self.seq), self.seq[n - 1])
            self.assertEqual(bell_rec(n, 1, self.seq), self.seq[n - 1])

    def test_all_singletons(self):
        """B_{n,n} = λ_1^n"""
        for n in range(1, 7):
            self.assertEqual(bell_rec(n, n, self.seq), self.seq[0] ** n)

    def test_small_examples(self):
        # B_{3,2} = 3λ1λ2，B_{4,2} = 4λ1λ3 + 3λ2^2
        self.assertEqual(bell_enum(3, 2, self.seq), 18)
        self.assertEqual(bell_rec(3, 2, self.seq), 18)
        self.assertEqual(bell_enum(4, 2, self.seq), 67)
        self.assertEqual(bell_rec(4, 2, self.seq), 67)

    def test_enum_matches_recurrence(self):
        for n in range(7):
            for k in range(n + 1):
                self.assertEqual(bell_enum(n, k, self.seq), bell_rec(n, k, self.seq), f"n={n}, k={k}")

    def test_homogeneity(self):
        """B_{n,k}(cλ) = c^k B_{n,k}(λ)"""
        c = Fraction(3, 2)
        scaled = [c * v for v in self.seq]
        table, scaled_table = BellTable(self.seq), BellTable(scaled)
        for n in range(7):
            for k in range(n + 1):
                self.assertEqual(scaled_table.value(n, k), c ** k * table.value(n, k))

    def test_insufficient_sequence(self):
        with self.assertRaises(InsufficientSequence):
            bell_enum(5, 1, self.seq[:2])
        with self.assertRaises(InsufficientSequence):
            bell_rec(5, 2, self.seq[:3])

    def test_negative_indices(self):
        with self.assertRaises(ValueError):
            bell_rec(-1, 0, self.seq)

    def test_table_extension(self):
        table = BellTable(self.seq[:2], RATIONAL)
        self.assertEqual(table.value(3, 2), 18)
        table.extend(self.seq[2:])
        self.assertEqual(table.value(4, 2), 67)


class TestBellForBernoulliSequence(unittest.TestCase):

    def setUp(self):
        self.engine = BernoulliEngine()

    def test_closed_form_examples(self):
        self.assertEqual(bell_closed(2, 1, 1, at_x=0), Poly.constant(Fraction(1, 3)))
        self.assertEqual(bell_closed(0, 0, 2), Poly.one())
        self.assertTrue(bell_closed(2, 3, 2).is_zero())
        self.assertEqual(bell_closed(1, 1, 1), Poly([Fraction(1, 2), 1]))

    def test_lambda_seq_accepted_directly(self):
        """LambdaSeq 可以直接作为 Bell 多项式的参数序列"""
        seq = lambda_seq(1, 3)
        expected = (seq[1] * seq[2]).scale(3)
        self.assertEqual(bell_rec(3, 2, seq), expected)
        self.assertEqual(bell_enum(3, 2, seq), expected)

        table = BellTable(lambda_seq(2, 2))
        table.extend(lambda_seq(2, 4).terms[2:])
        self.assertEqual(table.value(4, 1), lambda_seq(2, 4)[4])
        self.assertEqual(bell_generating_series(1, seq, 3).egf_coeff(3), seq[3])

    def test_homogeneity_for_lambda_seq(self):
        """B_{n,k}(cλ) = c^k B_{n,k}(λ)，λ 为多项式序列"""
        c = Fraction(3, 2)
        seq = lambda_seq(2, 6)
        scaled = seq.scaled(c)
        for n in range(7):
            for k in range(n + 1):
                self.assertEqual(bell_enum(n, k, scaled, POLY), bell_enum(n, k, seq, POLY).scale(c ** k))

    def test_closed_form_large_k_is_cheap(self):
        """k > n 时直接返回 0，不扩展 Stirling 表"""
        table = StirlingTable(initial_rows=8)
        self.assertTrue(bell_closed(2, 800, 5, table=table).is_zero())
        self.assertTrue(bell_closed(2, 800, 5, at_x=Fraction(1, 2), table=table).is_zero())
        self.assertEqual(table.cap, 7)

    def test_closed_sum_vanishes_beyond_n(self):
        """不短路的交错和在 k > n 时也精确为 0"""
        table = StirlingTable()
        for a in (1, 2, 3):
            for n in range(5):
                for k in range(n + 1, n + 4):
                    self.assertTrue(_closed_sum(n, k, a, table).is_zero(), f"n={n}, k={k}, a={a}")

    def test_closed_form_rejects_order_zero(self):
        with self.assertRaises(UnsupportedOrder):
            bell_closed(2, 1, 0)

    def test_three_way_agreement(self):
        for a in (1, 2, 3):
            seq = self.engine.lambda_seq(a, 12)
            table = BellTable(seq, POLY)
            for n in range(13):
                for k in range(n + 1):
                    rec = table.value(n, k)
                    self.assertEqual(rec, bell_closed(n, k, a), f"closed n={n}, k={k}, a={a}")
                    self.assertEqual(rec, bell_enum(n, k, seq, POLY), f"enum n={n}, k={k}, a={a}")

    def test_recurrence_matches_closed_form_further(self):
        for a in (1, 2, 3):
            table = self.engine.bell_table(a, 25)
            for n in range(13, 26):
                for k in range(1, n + 1):
                    self.assertEqual(table.value(n, k), bell_closed(n, k, a), f"n={n}, k={k}, a={a}")

    def test_evaluated_closed_form(self):
        value = Fraction(-2, 3)
        for n in range(6):
            for k in range(n + 1):
                self.assertEqual(bell_closed(n, k, 2, at_x=value),
                                 Poly.constant(bell_closed(n, k, 2).evaluate(value)))

    def test_generating_function(self):
        """Σ_n B_{n,k} t^n/n! = (Σ_j λ_j t^j/j!)^k / k!"""
        order = 15
        for a in (1, 2):
            seq = self.engine.lambda_seq(a, order).terms
            table = BellTable(seq, POLY)
            for k in range(6):
                lhs = series_from_egf([table.value(n, k) for n in range(order + 1)], order, POLY)
                self.assertEqual(lhs, bell_generating_series(k, seq, order, POLY), f"k={k}, a={a}")

    def test_generating_function_rational(self):
        seq = [Fraction(1, m + 1) for m in range(1, 11)]
        table = BellTable(seq, RATIONAL)
        for k in range(5):
            lhs = series_from_egf([table.value(n, k) for n in range(11)], 10, RATIONAL)
            self.assertEqual(lhs, bell_generating_series(k, seq, 10, RATIONAL))


if __name__ == '__main__':
    unittest.main()
