"""
psi 差分和

    sum_{x/2 < n <= x} Lambda(n) (psi(-n^gamma) - psi(-(n+1)^gamma))

整数部分由精确整数根给出, 小数部分用 mpmath 高精度计算, 避免大 n 时的相消误差。
"""
import logging
import math
from dataclasses import dataclass

import mpmath
import numpy as np

from pslab import get_config
from pslab.exceptions import BudgetExceededError
from pslab.expsum.accumulator import CompensatedSum

from .arithmetic import RationalExponent, floor_pow
from .sieve import small_primes, von_mangoldt_segment

logger = logging.getLogger(__name__)

@dataclass(frozen=True)
class PsiSumReport:
    x: int
    c: RationalExponent
    value: float
    normalized: float
    terms: int

    def to_dict(self) -> dict:
        return {
            'x': self.x,
            'c': str(self.c),
            'value': self.value,
            'normalized': self.normalized,
            'terms': self.terms,
        }

def psi_of_negative_power(m: int, c: RationalExponent) -> float:
    """
    psi(-m^gamma), gamma = q/p。

    m^gamma 为整数时等于 -1/2, 否则等于 1/2 - {m^gamma}。
    """
    r = floor_pow(m, c.q, c.p)
    if r ** c.p == m ** c.q:
        return -0.5
    with mpmath.workdps(get_config().MPMATH_DPS):
        fractional = mpmath.power(m, mpmath.mpf(c.q) / c.p) - r
        return float(mpmath.mpf(0.5) - fractional)

def psi_difference_terms(ns, weights, c: RationalExponent) -> float:
    """
    sum weights[i] * (psi(-n_i^gamma) - psi(-(n_i+1)^gamma)), 权重为 0 的项直接跳过。
    """
    total = CompensatedSum()
    for n, weight in zip(ns, weights):
        if weight == 0:
            continue
        n = int(n)
        total.add(float(weight) * (psi_of_negative_power(n, c) - psi_of_negative_power(n + 1, c)))
    return total.value

def psi_difference_sum(x: int, c: RationalExponent) -> PsiSumReport:
    """
    :param x: 求和区间 (x/2, x] 的上端, x >= 2
    :param c: 有理指数 c = p/q
    :return: PsiSumReport, normalized = value / x^gamma
    """
    if x < 2:
        raise ValueError(f"psi_difference_sum 需要 x >= 2, 收到 {x}")
    cfg = get_config()
    if x > cfg.PSI_SUM_BUDGET:
        raise BudgetExceededError('psi_difference_sum', x, cfg.PSI_SUM_BUDGET)

    low, high = x // 2 + 1, x + 1
    primes = small_primes(math.isqrt(high) + 1)
    width = cfg.SIEVE_SEGMENT_WIDTH

    total = CompensatedSum()
    terms = 0
    # 按固定宽度分段筛, 控制内存
    for start in range(low, high, width):
        stop = min(start + width, high)
        weights = von_mangoldt_segment(start, stop, primes)
        nonzero = np.flatnonzero(weights)
        terms += len(nonzero)
        total.add(psi_difference_terms(nonzero + start, weights[nonzero], c))

    normalized = total.value / float(x) ** (c.q / c.p)
    logger.info(f"psi_difference_sum(x={x}, c={c}) = {total.value:.6f}, normalized {normalized:.6f} ({terms} terms)")
    return PsiSumReport(x, c, total.value, normalized, terms)
