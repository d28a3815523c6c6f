"""
分段最小素因子筛与 von Mangoldt 函数。
"""
import math

import numpy as np

def small_primes(limit: int) -> np.ndarray:
    """返回不超过 limit 的全部素数。"""
    if limit < 2:
        return np.array([], dtype=np.int64)
    is_prime = np.ones(limit + 1, dtype=bool)
    is_prime[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if is_prime[p]:
            is_prime[p * p::p] = False
    return np.flatnonzero(is_prime).astype(np.int64)

def smallest_prime_factor_segment(low: int, high: int, primes: np.ndarray = None) -> np.ndarray:
    """
    [low, high) 内每个数的最小素因子, 1 对应 0。

    :param primes: 至少覆盖到 sqrt(high) 的素数表, 缺省时现场计算
    """
    if low < 1 or high <= low:
        raise ValueError(f"筛区间必须满足 1 <= low < high, 收到 [{low}, {high})")
    if primes is None:
        primes = small_primes(math.isqrt(high - 1))
    spf = np.zeros(high - low, dtype=np.int64)
    for p in primes:
        p = int(p)
        if p * p >= high:
            break
        start = max(p * p, -(-low // p) * p)
        index = np.arange(start - low, high - low, p)
        unset = index[spf[index] == 0]
        spf[unset] = p
    # 剩下未标记的 (除 1 以外) 都是素数
    values = np.arange(low, high, dtype=np.int64)
    remaining = (spf == 0) & (values > 1)
    spf[remaining] = values[remaining]
    return spf

def von_mangoldt_segment(low: int, high: int, primes: np.ndarray = None) -> np.ndarray:
    """
    [low, high) 内的 Lambda(n): 素数幂 p^k 处为 log p, 其余为 0。
    """
    spf = smallest_prime_factor_segment(low, high, primes)
    remainder = np.arange(low, high, dtype=np.int64)
    has_factor = spf > 0
    # 反复除掉最小素因子, 余 1 的即为素数幂
    divisible = has_factor & (remainder % np.where(has_factor, spf, 1) == 0)
    while np.any(divisible):
        remainder[divisible] //= spf[divisible]
        divisible = has_factor & (remainder % np.where(has_factor, spf, 1) == 0) & (remainder > 1)
    weights = np.zeros(high - low, dtype=float)
    prime_power = has_factor & (remainder == 1)
    weights[prime_power] = np.log(spf[prime_power].astype(float))
    return weights
