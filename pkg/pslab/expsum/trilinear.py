"""
三重指数和的直接计算

    T = sum_{h~H} sum_{m~M} sum_{n~N} a_h b_m e(X h^alpha m^beta n^gamma / (H^alpha M^beta N^gamma))

其中 h in (H, 2H], m in (M, 2M], n in (N, 2N]。
"""
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from pslab import get_config
from pslab.exceptions import BudgetExceededError

from .accumulator import ComplexCompensatedSum

logger = logging.getLogger(__name__)

# 随机系数的生成器, 写入运行清单
GENERATOR_NAME = 'numpy.random.default_rng (PCG64)'

@dataclass
class TrilinearSpec:
    X: float
    H: int
    M: int
    N: int
    alpha: float
    beta: float
    gamma_exp: float
    a: np.ndarray  # h = H+1..2H
    b: np.ndarray  # m = M+1..2M

    def __post_init__(self):
        if min(self.H, self.M, self.N) < 1:
            raise ValueError(f"H, M, N 必须 >= 1 (H={self.H}, M={self.M}, N={self.N})")
        self.a = np.asarray(self.a, dtype=complex)
        self.b = np.asarray(self.b, dtype=complex)
        if self.a.shape != (self.H,) or self.b.shape != (self.M,):
            raise ValueError(f"系数长度必须为 H={self.H} 与 M={self.M}, 收到 {self.a.shape} 与 {self.b.shape}")
        if np.any(np.abs(self.a) > 1 + 1e-12) or np.any(np.abs(self.b) > 1 + 1e-12):
            raise ValueError("系数必须满足 |a_h| <= 1 且 |b_m| <= 1")

    @property
    def size(self) -> int:
        return self.H * self.M * self.N

    def parameters(self) -> dict:
        return {
            'X': self.X, 'H': self.H, 'M': self.M, 'N': self.N,
            'alpha': self.alpha, 'beta': self.beta, 'gamma': self.gamma_exp,
        }

    def scaled(self, factor: complex) -> 'TrilinearSpec':
        return TrilinearSpec(self.X, self.H, self.M, self.N, self.alpha, self.beta, self.gamma_exp,
                             self.a * factor, self.b)

    def conjugated(self) -> 'TrilinearSpec':
        """共轭全部系数并取 -X, 结果应为原和的共轭。"""
        return TrilinearSpec(-self.X if self.X else 0.0, self.H, self.M, self.N, self.alpha, self.beta,
                             self.gamma_exp, np.conj(self.a), np.conj(self.b))

def random_spec(X: float, H: int, M: int, N: int, alpha: float, beta: float, gamma: float,
                seed: int) -> TrilinearSpec:
    """单位模长、相位均匀随机的系数。"""
    rng = np.random.default_rng(seed)
    a = np.exp(2j * np.pi * rng.random(H))
    b = np.exp(2j * np.pi * rng.random(M))
    return TrilinearSpec(float(X), H, M, N, alpha, beta, gamma, a, b)

def _segment_sum(spec: TrilinearSpec, start: int, stop: int) -> complex:
    """
    h 的下标区间 [start, stop) 的部分和。n 方向的行和交给 numpy,
    每个 (h, m) 项 a_h b_m sum_n e(...) 都进入补偿累加器。
    """
    m = np.arange(spec.M + 1, 2 * spec.M + 1, dtype=float)
    n = np.arange(spec.N + 1, 2 * spec.N + 1, dtype=float)
    mn = np.outer((m / spec.M) ** spec.beta, (n / spec.N) ** spec.gamma_exp)
    accumulator = ComplexCompensatedSum()
    for index in range(start, stop):
        a_h = spec.a[index]
        if a_h == 0:
            continue
        h = spec.H + 1 + index
        argument = spec.X * (h / spec.H) ** spec.alpha * mn
        # 先取小数部分再乘 2 pi
        phase = 2.0 * np.pi * (argument - np.floor(argument))
        row = np.exp(1j * phase).sum(axis=1)
        for term in a_h * spec.b * row:
            accumulator.add(term)
    return accumulator.value

def trilinear_sum(spec: TrilinearSpec, workers: int = None, segment_rows: int = None) -> complex:
    """
    直接计算三重和。h 区间按固定宽度分段, 各段可并行计算, 但按段号顺序做补偿归约,
    因此结果与并行度无关, 逐位可复现。

    :param spec: TrilinearSpec
    :param workers: 线程数, 默认取配置 NUM_WORKERS
    :param segment_rows: 每段的 h 行数, 默认取配置 TRILINEAR_SEGMENT_H
    """
    cfg = get_config()
    if spec.size > cfg.TRILINEAR_BUDGET:
        raise BudgetExceededError('trilinear_sum', spec.size, cfg.TRILINEAR_BUDGET)
    workers = workers or cfg.NUM_WORKERS
    segment_rows = segment_rows or cfg.TRILINEAR_SEGMENT_H

    bounds = [(start, min(start + segment_rows, spec.H)) for start in range(0, spec.H, segment_rows)]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as executor:
            partials = list(executor.map(lambda bound: _segment_sum(spec, *bound), bounds))
    else:
        partials = [_segment_sum(spec, *bound) for bound in bounds]

    total = ComplexCompensatedSum()
    for partial in partials:
        total.add(partial)
    logger.debug(f"trilinear_sum({spec.parameters()}): {len(bounds)} segments -> {total.value}")
    return total.value
