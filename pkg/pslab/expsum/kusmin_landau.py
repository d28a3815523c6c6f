"""
Kusmin-Landau 不等式的数值检验: 若 f' 单调且 ||f'|| >= lambda > 0, 则 |sum e(f(n))| <= 1/lambda。

常数取 1, 因为精确常数 cot(pi lambda / 2) <= 2/(pi lambda) < 1/lambda。
"""
import logging
import math
from dataclasses import dataclass

import numpy as np

from pslab import get_config

from .sawtooth import distance_to_integer, e

logger = logging.getLogger(__name__)

@dataclass(frozen=True)
class MonomialPhase:
    """f(n) = A * n^theta"""
    A: float
    theta: float

    def value(self, n):
        return self.A * np.power(np.asarray(n, dtype=float), self.theta)

    def derivative(self, n):
        return self.A * self.theta * np.power(np.asarray(n, dtype=float), self.theta - 1.0)

@dataclass(frozen=True)
class KusminLandauResult:
    A: float
    theta: float
    n0: int
    n1: int
    sum_abs: float = None
    lambda_bound: float = None
    passed: bool = None
    skipped: bool = False
    diagnostic: str = None

    @property
    def bound(self) -> float:
        return 1.0 / self.lambda_bound if self.lambda_bound else math.inf

    def to_dict(self) -> dict:
        return {
            'A': self.A,
            'theta': self.theta,
            'n0': self.n0,
            'n1': self.n1,
            'sum_abs': self.sum_abs,
            'lambda': self.lambda_bound,
            'bound': None if self.skipped else self.bound,
            'pass': self.passed,
            'skipped': self.skipped,
            'diagnostic': self.diagnostic,
        }

def compute_lambda(phase: MonomialPhase, n0: int, n1: int) -> float:
    """
    f' 单调, 因此只要两端的 f' 落在同一个整数区间内, ||f'|| 的最小值就在端点处取得。
    跨过整数时返回 0。
    """
    d0, d1 = float(phase.derivative(n0)), float(phase.derivative(n1))
    if math.floor(d0) != math.floor(d1):
        return 0.0
    return min(distance_to_integer(d0), distance_to_integer(d1))

def kusmin_landau_check(phase: MonomialPhase, n0: int, n1: int) -> KusminLandauResult:
    """
    计算 |sum_{n0 <= n <= n1} e(f(n))| 与 lambda, 检查 sum_abs <= 1/lambda。

    lambda 为 0 时跳过并给出诊断信息, 不算失败。
    """
    if not 1 <= n0 <= n1:
        raise ValueError(f"区间必须满足 1 <= n0 <= n1, 收到 ({n0}, {n1})")
    lam = compute_lambda(phase, n0, n1)
    if lam <= 0.0:
        message = f"f' 在 [{n0}, {n1}] 上接近或跨过整数, lambda = 0"
        logger.warning(f"kusmin_landau_check 跳过: {message}")
        return KusminLandauResult(phase.A, phase.theta, n0, n1, lambda_bound=0.0, skipped=True, diagnostic=message)

    n = np.arange(n0, n1 + 1)
    sum_abs = float(np.abs(np.sum(e(phase.value(n)))))
    passed = sum_abs <= 1.0 / lam
    return KusminLandauResult(phase.A, phase.theta, n0, n1, sum_abs, lam, passed)

def default_suite(size: int = None, seed: int = None, min_lambda: float = None) -> list:
    """
    确定性生成的单项式相位用例。

    每个用例随机取 theta, n0, n1 与目标导数 f'(n0) in (0.1, 0.9), 再解出 A;
    只保留两端导数整数部分相同且 lambda >= min_lambda 的用例。
    """
    cfg = get_config()
    size = size or cfg.KL_SUITE_SIZE
    seed = cfg.KL_SUITE_SEED if seed is None else seed
    min_lambda = cfg.KL_MIN_LAMBDA if min_lambda is None else min_lambda

    rng = np.random.default_rng(seed)
    cases = []
    while len(cases) < size:
        theta = float(rng.uniform(0.3, 1.7))
        if abs(theta - 1.0) < 1e-3:
            continue
        n0 = int(rng.integers(1, 1000))
        n1 = n0 + int(rng.integers(10, 5000))
        target = float(rng.uniform(0.1, 0.9))
        A = target / (theta * n0 ** (theta - 1.0))
        phase = MonomialPhase(A, theta)
        if compute_lambda(phase, n0, n1) >= min_lambda:
            cases.append((phase, n0, n1))
    return cases

def run_suite(cases: list = None) -> list:
    cases = cases if cases is not None else default_suite()
    results = [kusmin_landau_check(phase, n0, n1) for phase, n0, n1 in cases]
    failed = [r for r in results if r.passed is False]
    logger.info(f"Kusmin-Landau suite: {len(results)} cases, {len(failed)} failed")
    return results
