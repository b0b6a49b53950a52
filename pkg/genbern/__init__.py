# 使 genbern 成为可导入的 Python 包
from .exact import Rational, factorial, binomial, parse_rational, format_rational
from .poly import Poly
from .series import Series, series_mul, series_recip, series_pow, series_h, series_exp_xt
from .combinatorics import StirlingTable, stirling2, stirling2_gf_check, enumerate_partitions, PartitionVector
from .bell import BellTable, bell_enum, bell_rec, bell_closed
from .bernoulli import (BernMethod, BernResult, BernoulliEngine, LambdaSeq, lambda_seq,
                        bern, bern_bell, bern_doublesum, bern_series, bernoulli_number)
from .verification import VerificationSuite, VerifyReport, CheckResult, run_verification

__all__ = [
    'Rational', 'factorial', 'binomial', 'parse_rational', 'format_rational',
    'Poly',
    'Series', 'series_mul', 'series_recip', 'series_pow', 'series_h', 'series_exp_xt',
    'StirlingTable', 'stirling2', 'stirling2_gf_check', 'enumerate_partitions', 'PartitionVector',
    'BellTable', 'bell_enum', 'bell_rec', 'bell_closed',
    'BernMethod', 'BernResult', 'BernoulliEngine', 'LambdaSeq', 'lambda_seq',
    'bern', 'bern_bell', 'bern_doublesum', 'bern_series', 'bernoulli_number',
    'VerificationSuite', 'VerifyReport', 'CheckResult', 'run_verification',
]
