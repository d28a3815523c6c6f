"""
间距计数: 满足 |(m~/m)^alpha - (n~/n)^beta| < delta 的四元组 (m, m~, n, n~) 的个数,
其中 m, m~ in (M, 2M], n, n~ in (N, 2N]。
"""
import logging
import math

import numpy as np

logger = logging.getLogger(__name__)

def _ratio_powers(size: int, exponent: float) -> np.ndarray:
    values = np.arange(size + 1, 2 * size + 1, dtype=float)
    return (values[None, :] / values[:, None]).ravel() ** exponent

def _validate(M: int, N: int, alpha: float, beta: float, delta: float):
    if alpha == 0 or beta == 0:
        raise ValueError(f"alpha 和 beta 不能为零 (alpha={alpha}, beta={beta})")
    if delta <= 0:
        raise ValueError(f"delta 必须为正, 收到 {delta}")
    if M < 1 or N < 1:
        raise ValueError(f"M, N 必须 >= 1, 收到 M={M}, N={N}")

def spacing_count_naive(M: int, N: int, alpha: float, beta: float, delta: float) -> int:
    """O(M^2 N^2) 的直接计数。"""
    _validate(M, N, alpha, beta, delta)
    r = _ratio_powers(M, alpha)
    s = _ratio_powers(N, beta)
    return int(np.count_nonzero(np.abs(r[:, None] - s[None, :]) < delta))

def spacing_count_sorted(M: int, N: int, alpha: float, beta: float, delta: float) -> int:
    """
    排序后双指针扫描: 对每个 r (升序), 满足 |r - s| < delta 的 s 构成 s 有序序列中的一段,
    两端指针都只向右移动。判定条件与直接计数逐字相同, 因此两者结果完全一致。
    """
    _validate(M, N, alpha, beta, delta)
    r = np.sort(_ratio_powers(M, alpha))
    s = np.sort(_ratio_powers(N, beta))
    count = 0
    lo = hi = 0
    size = len(s)
    for value in r:
        # lo: 第一个满足 value - s < delta 的位置
        while lo < size and not abs(value - s[lo]) < delta and s[lo] < value:
            lo += 1
        if hi < lo:
            hi = lo
        # hi: 第一个 s >= value 且 |value - s| >= delta 的位置
        while hi < size and (abs(value - s[hi]) < delta or s[hi] < value):
            hi += 1
        count += hi - lo
    return count

def spacing_count(M: int, N: int, alpha: float, beta: float, delta: float) -> int:
    return spacing_count_sorted(M, N, alpha, beta, delta)

def spacing_bound_ratio(M: int, N: int, alpha: float, beta: float, delta: float) -> float:
    """spacing_count / (MN log(2MN) + delta M^2 N^2)"""
    count = spacing_count(M, N, alpha, beta, delta)
    denominator = M * N * math.log(2 * M * N) + delta * (M * N) ** 2
    ratio = count / denominator
    logger.debug(f"spacing(M={M}, N={N}, alpha={alpha}, beta={beta}, delta={delta}): count={count}, ratio={ratio:.4f}")
    return ratio
