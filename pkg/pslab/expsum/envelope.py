"""
经验包络对比: 直接计算的 |T| 与十二项上界 (隐含常数取 1) 乘以 L = log(2 + XHMN) 的比值。
"""
import itertools
import logging
import math
from dataclasses import dataclass

import numpy as np
import pandas as pd

from pslab import get_config
from pslab.bounds.terms import (
    log_envelope,
    small_x_restriction_holds,
    small_x_terms,
    twelve_term_bound,
    wu_restriction_holds,
    wu_terms,
)
from pslab.exponents import ExponentPair

from .trilinear import TrilinearSpec, random_spec, trilinear_sum

logger = logging.getLogger(__name__)

def check_hypotheses(alpha: float, beta: float, gamma: float) -> list:
    """
    检查 alpha beta gamma (1 - alpha) != 0 以及 (gamma - 1)/(1 - alpha) 不是正整数。

    不满足时抛出 ValueError 并指明失败的条件; 接近违反时返回警告列表。
    """
    cfg = get_config()
    tolerance = cfg.HYPOTHESIS_TOLERANCE
    for name, value in (('alpha', alpha), ('beta', beta), ('gamma', gamma), ('1 - alpha', 1.0 - alpha)):
        if abs(value) < tolerance:
            raise ValueError(f"不满足 alpha*beta*gamma*(1-alpha) != 0: {name} = {value}")

    warnings = []
    quotient = (gamma - 1.0) / (1.0 - alpha)
    nearest = round(quotient)
    distance = abs(quotient - nearest)
    if nearest >= 1:
        if distance < tolerance:
            raise ValueError(f"不满足 (gamma-1)/(1-alpha) 不属于 N: 该值为 {quotient}, 距整数 {nearest} 仅 {distance:.2e}")
        if distance < cfg.HYPOTHESIS_WARN_MARGIN:
            message = f"(gamma-1)/(1-alpha) = {quotient} 接近整数 {nearest} (距离 {distance:.2e})"
            logger.warning(message)
            warnings.append(message)
    return warnings

@dataclass
class EnvelopeReport:
    t_abs: float
    log_factor: float
    envelope: float
    ratio: float
    envelope_twelve_term: float
    envelope_small_x: float = None
    envelope_wu: float = None
    wu_k: int = None
    ratio_wu: float = None
    warnings: list = None

    def to_dict(self) -> dict:
        return {
            't_abs': self.t_abs,
            'log_factor': self.log_factor,
            'envelope': self.envelope,
            'ratio': self.ratio,
            'envelope_twelve_term': self.envelope_twelve_term,
            'envelope_small_x': self.envelope_small_x,
            'envelope_wu': self.envelope_wu,
            'wu_k': self.wu_k,
            'ratio_wu': self.ratio_wu,
            'warnings': self.warnings or [],
        }

def _wu_envelope(X, H, M, N, log_factor) -> tuple:
    """对 k = 2..WU_MAX_K 取最小的 Wu 包络, 返回 (包络, k)。"""
    best, best_k = None, None
    for k in range(2, get_config().WU_MAX_K + 1):
        value = log_factor * math.exp(log_envelope(wu_terms(k), X, H, M, N))
        if best is None or value < best:
            best, best_k = value, k
    return best, best_k

def envelope_ratio(spec: TrilinearSpec, pair: ExponentPair, wu_compare: bool = False,
                   workers: int = None) -> EnvelopeReport:
    """
    计算 |T|、包络与比值。X <= MN 时包络取十二项与三项小 X 上界中较小者。

    :param spec: TrilinearSpec, 需满足 X > 0 与定理的假设
    :param pair: 指数对
    :param wu_compare: 是否同时计算 Wu 包络 (仅在 X <= min(H^2, H^2 N/M) 时)
    :param workers: 直接求和的线程数
    """
    if spec.X <= 0:
        raise ValueError(f"包络比较需要 X > 0, 收到 {spec.X}")
    warnings = check_hypotheses(spec.alpha, spec.beta, spec.gamma_exp)

    X, H, M, N = spec.X, spec.H, spec.M, spec.N
    log_factor = math.log(2.0 + X * H * M * N)
    t_abs = abs(trilinear_sum(spec, workers=workers))

    envelope_twelve_term = log_factor * math.exp(log_envelope(twelve_term_bound(pair), X, H, M, N))
    envelope = envelope_twelve_term
    envelope_small_x = None
    if small_x_restriction_holds(X, H, M, N):
        envelope_small_x = log_factor * math.exp(log_envelope(small_x_terms(), X, H, M, N))
        envelope = min(envelope, envelope_small_x)

    report = EnvelopeReport(t_abs, log_factor, envelope, t_abs / envelope, envelope_twelve_term, envelope_small_x,
                            warnings=warnings)
    if wu_compare:
        if wu_restriction_holds(X, H, M, N):
            report.envelope_wu, report.wu_k = _wu_envelope(X, H, M, N, log_factor)
            report.ratio_wu = t_abs / report.envelope_wu
        else:
            report.warnings.append("Wu 上界的条件 X <= min(H^2, H^2 N/M) 不成立, 跳过对比")
    return report

def sweep_grid(pair: ExponentPair, X_values, H_values, M_values, N_values,
               alpha: float, beta: float, gamma: float, seed: int, wu_compare: bool = False,
               workers: int = None) -> pd.DataFrame:
    """
    在参数网格上逐格计算包络比值, 每一格用同一个种子生成系数。

    :return: DataFrame, 列为参数、t_abs、envelope、ratio
    """
    rows = []
    for X, H, M, N in itertools.product(X_values, H_values, M_values, N_values):
        spec = random_spec(X, H, M, N, alpha, beta, gamma, seed)
        report = envelope_ratio(spec, pair, wu_compare=wu_compare, workers=workers)
        rows.append({
            'X': X, 'H': H, 'M': M, 'N': N,
            'alpha': alpha, 'beta': beta, 'gamma': gamma, 'seed': seed,
            't_abs': report.t_abs,
            'envelope': report.envelope,
            'ratio': report.ratio,
            'ratio_wu': report.ratio_wu,
        })
    frame = pd.DataFrame(rows)
    logger.info(f"sweep_grid: {len(frame)} cells, max ratio {frame['ratio'].max():.4e}")
    return frame

def max_ratio(frame: pd.DataFrame) -> float:
    return float(np.max(frame['ratio'].to_numpy()))
