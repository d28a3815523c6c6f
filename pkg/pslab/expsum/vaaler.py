"""
锯齿函数的 Vaaler 三角多项式逼近及其网格验证。

对任意 H >= 1 构造系数 a_h (0 < |h| <= H) 与 b_h (|h| <= H), 使得对所有实数 t

    |psi(t) - sum a_h e(ht)| <= sum b_h e(ht),

其中 a_h = -phi(h/(H+1)) / (2 pi i h), phi(u) = pi u (1-|u|) cot(pi u) + |u|,
b_h 为 Fejer 核系数 (1 - |h|/(H+1)) / (2H + 2)。
"""
import logging
from dataclasses import dataclass

import numpy as np

from pslab import get_config

from .sawtooth import e, sawtooth

logger = logging.getLogger(__name__)

# |a_h| <= C_A / |h|, b_h <= C_B / H
C_A = 1.0 / (2.0 * np.pi)
C_B = 0.5

@dataclass(frozen=True)
class VaalerApprox:
    H: int
    a: np.ndarray  # 下标 h = -H..-1, 1..H 依次排列, 见 a_index
    b: np.ndarray  # 下标 h = -H..H

    @property
    def a_index(self) -> np.ndarray:
        return np.concatenate([np.arange(-self.H, 0), np.arange(1, self.H + 1)])

    @property
    def b_index(self) -> np.ndarray:
        return np.arange(-self.H, self.H + 1)

    def coefficient_a(self, h: int) -> complex:
        return complex(self.a[h + self.H if h < 0 else h + self.H - 1])

    def coefficient_b(self, h: int) -> float:
        return float(self.b[h + self.H])

    def approximant(self, t) -> np.ndarray:
        """sum_{0<|h|<=H} a_h e(ht), 由共轭对称性为实数。"""
        t = np.atleast_1d(np.asarray(t, dtype=float))
        values = e(np.outer(t, self.a_index)) @ self.a
        return values.real

    def majorant(self, t) -> np.ndarray:
        """sum_{|h|<=H} b_h e(ht), 非负实数。"""
        t = np.atleast_1d(np.asarray(t, dtype=float))
        values = e(np.outer(t, self.b_index)) @ self.b
        return values.real

def _phi(u: np.ndarray) -> np.ndarray:
    return np.pi * u * (1.0 - np.abs(u)) / np.tan(np.pi * u) + np.abs(u)

def vaaler_coefficients(H: int) -> VaalerApprox:
    """
    构造 Vaaler 逼近的系数。

    :param H: 截断参数, H >= 1
    :return: VaalerApprox
    """
    if not isinstance(H, (int, np.integer)) or H < 1:
        raise ValueError(f"vaaler_coefficients 需要整数 H >= 1, 收到 {H!r}")
    H = int(H)
    h = np.arange(1, H + 1)
    a_positive = -_phi(h / (H + 1)) / (2j * np.pi * h)
    a = np.concatenate([np.conj(a_positive[::-1]), a_positive])

    k = np.arange(-H, H + 1)
    b = (1.0 - np.abs(k) / (H + 1)) / (2 * H + 2)
    return VaalerApprox(H, a, b)

@dataclass(frozen=True)
class VaalerCheck:
    H: int
    grid_size: int
    max_violation: float
    passed: bool
    majorant_min: float
    majorant_max: float
    majorant_mean: float

    def to_dict(self) -> dict:
        return {
            'H': self.H,
            'grid_size': self.grid_size,
            'max_violation': self.max_violation,
            'pass': self.passed,
            'majorant_min': self.majorant_min,
            'majorant_max': self.majorant_max,
            'majorant_mean': self.majorant_mean,
            'b0': 1.0 / (2 * self.H + 2),
        }

def verify_vaaler(H: int, grid_size: int) -> VaalerCheck:
    """
    在 t = k/G + 1/(2G) (k = 0..G-1) 上检验 Vaaler 不等式, 偏移半步以避开 psi 的间断点。

    :param H: 截断参数
    :param grid_size: 网格点数 G, G >= 100
    :return: VaalerCheck, max_violation 为 (左边 - 右边) 的最大值
    """
    if grid_size < 100:
        raise ValueError(f"grid_size 至少为 100, 收到 {grid_size}")
    approx = vaaler_coefficients(H)
    t = np.arange(grid_size) / grid_size + 1.0 / (2 * grid_size)

    lhs = np.abs(sawtooth(t) - approx.approximant(t))
    rhs = approx.majorant(t)
    max_violation = float(np.max(lhs - rhs))
    passed = max_violation <= get_config().VAALER_TOLERANCE

    logger.info(f"verify_vaaler(H={H}, grid={grid_size}): max violation {max_violation:.3e}, pass={passed}")
    return VaalerCheck(
        H=H,
        grid_size=grid_size,
        max_violation=max_violation,
        passed=passed,
        majorant_min=float(np.min(rhs)),
        majorant_max=float(np.max(rhs)),
        majorant_mean=float(np.mean(rhs)),
    )
