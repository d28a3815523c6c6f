"""
基本记号: 锯齿函数 psi, 到最近整数的距离 ||t||, 以及 e(t) = exp(2 pi i t)。
"""
import math
from fractions import Fraction

import numpy as np

def sawtooth(t):
    """
    psi(t) = t - floor(t) - 1/2, 取值在 [-1/2, 1/2)。

    Fraction 输入得到精确结果, 其余输入 (标量或数组) 用 numpy 计算。
    """
    if isinstance(t, Fraction):
        return t - math.floor(t) - Fraction(1, 2)
    t = np.asarray(t, dtype=float)
    result = t - np.floor(t) - 0.5
    return float(result) if result.ndim == 0 else result

def frac(t):
    t = np.asarray(t, dtype=float)
    return t - np.floor(t)

def distance_to_integer(t):
    """||t||: t 到最近整数的距离。"""
    f = frac(t)
    result = np.minimum(f, 1.0 - f)
    return float(result) if np.ndim(result) == 0 else result

def e(t):
    """e(t) = exp(2 pi i t), 先取小数部分再乘 2 pi 以保留大参数下的精度。"""
    phase = 2.0 * np.pi * frac(t)
    result = np.exp(1j * phase)
    return complex(result) if np.ndim(result) == 0 else result
