"""
三重指数和上界的单项式表。

每一项写作 X^{e_X} H^{e_H} M^{e_M} N^{e_N}, 指数为精确有理数:
twelve_term_bound 给出十二项主上界 (T1..T12), wu_terms 给出用于对比的七项 (W1..W7),
small_x_terms 给出 X <= MN 时的三项 (L1..L3)。
"""
import math
from dataclasses import dataclass
from fractions import Fraction as F

import numpy as np

from pslab.exponents import ExponentPair, format_rational
from pslab.exponents.pairs import require_valid_pair

VARIABLES = ('X', 'H', 'M', 'N')

# Wu 上界只在该条件下成立, 仅由经验对比器检查
WU_RESTRICTION = 'X <= min(H^2, H^2 N / M)'
SMALL_X_RESTRICTION = 'X <= M N'

@dataclass(frozen=True)
class MonomialTerm:
    label: str
    e_X: F
    e_H: F
    e_M: F
    e_N: F

    @property
    def exponents(self) -> tuple:
        return (self.e_X, self.e_H, self.e_M, self.e_N)

    def exponent(self, variable: str) -> F:
        return getattr(self, f'e_{variable}')

    def __mul__(self, other: 'MonomialTerm') -> 'MonomialTerm':
        # 单项式相乘即指数逐项相加
        return MonomialTerm(
            f'{self.label}*{other.label}',
            *(a + b for a, b in zip(self.exponents, other.exponents)),
        )

    def log_value(self, X: float, H: float, M: float, N: float) -> float:
        """返回 log(该项的值), X 必须为正。"""
        return sum(float(e) * math.log(v) for e, v in zip(self.exponents, (X, H, M, N)) if e != 0)

    def evaluate(self, X: float, H: float, M: float, N: float) -> float:
        return math.exp(self.log_value(X, H, M, N))

    def to_dict(self) -> dict:
        return {
            'label': self.label,
            'e_X': format_rational(self.e_X),
            'e_H': format_rational(self.e_H),
            'e_M': format_rational(self.e_M),
            'e_N': format_rational(self.e_N),
        }

def twelve_term_bound(pair: ExponentPair) -> list:
    """
    十二项三重和上界, 按原展示顺序给出 T1..T12。

    :param pair: 有效指数对 (kappa, lambda)
    :return: MonomialTerm 列表, 恰好 12 项
    """
    require_valid_pair(pair)
    k, l = pair.kappa, pair.lambda_
    s = 2 + k + l
    t = 1 + k + l
    half = F(1, 2)
    rows = [
        ('T1', (1 + 2 * k) / (2 * s), (k + l + 1) / s, (k + l + 4) / (2 * s), (2 - k + 3 * l) / (2 * s)),
        ('T2', (3 * k + l + 1) / (4 * t), half, F(1), (1 + l - k) / (2 * t)),
        ('T3', (k - l + 1) / (4 * t), half, F(1), (k + 3 * l + 1) / (2 * t)),
        ('T4', (5 * k + l + 2) / (4 * s), half, (3 * k + 3 * l + 8) / (4 * s), (4 + 5 * l - 3 * k) / (4 * s)),
        ('T5', F(1, 4), half, F(13, 12), F(1, 12)),
        ('T6', F(0), F(1), F(2, 3), F(2, 3)),
        ('T7', F(-1, 4), half, F(13, 12), F(13, 12)),
        ('T8', F(1, 4), half, F(11, 12), F(5, 12)),
        ('T9', (1 + 2 * k) / 4, half, (4 - k - l) / 4, (2 + l - 3 * k) / 4),
        ('T10', F(1, 4), half, half, F(1)),
        ('T11', F(0), half, F(1), F(1)),
        ('T12', F(-1, 2), F(1), F(1), F(1)),
    ]
    return [MonomialTerm(label, *exponents) for label, *exponents in rows]

def wu_terms(k: int) -> list:
    """
    Wu 的七项上界 (K = 2^k), 仅在 X <= min(H^2, H^2 N / M) 时成立。

    :param k: 整数, k >= 2
    """
    if not isinstance(k, int) or k < 2:
        raise ValueError(f"wu_terms 需要整数 k >= 2, 收到 {k!r}")
    K = 2 ** k
    D = 6 * K - 2 * k - 8
    half = F(1, 2)
    rows = [
        ('W1', F(K, D), F(4 * K - 2 * k - 4, D), F(5 * K - k - 8, D), F(5 * K - 3 * k - 8, D)),
        ('W2', F(1, 4), half, half, F(1)),
        ('W3', F(1, 4), half, F(1), half),
        ('W4', F(0), F(1), F(1), F(0)),
        ('W5', F(0), F(1), half, half),
        ('W6', F(0), half, F(1), F(1)),
        ('W7', F(-1, 2), F(1), F(1), F(1)),
    ]
    return [MonomialTerm(label, *exponents) for label, *exponents in rows]

def small_x_terms() -> list:
    """X <= MN 时的三项上界 H M^{1/2} N^{1/2} + X^{-1/2} H M N + H^{1/2} M N。"""
    half = F(1, 2)
    return [
        MonomialTerm('L1', F(0), F(1), half, half),
        MonomialTerm('L2', F(-1, 2), F(1), F(1), F(1)),
        MonomialTerm('L3', F(0), half, F(1), F(1)),
    ]

def wu_restriction_holds(X: float, H: float, M: float, N: float) -> bool:
    return X <= min(H * H, H * H * N / M)

def small_x_restriction_holds(X: float, H: float, M: float, N: float) -> bool:
    return X <= M * N

def log_envelope(terms: list, X: float, H: float, M: float, N: float) -> float:
    """log(项之和), 用 logsumexp 的方式避免大 X 时溢出。"""
    logs = np.array([term.log_value(X, H, M, N) for term in terms])
    return float(np.logaddexp.reduce(logs))
