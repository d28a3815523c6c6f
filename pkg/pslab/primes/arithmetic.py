"""
精确整数运算: 有理指数的整数部分、上取整, 以及 64 位以内的确定性素性检验。
"""
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

import gmpy2

from pslab.exponents import parse_rational

@dataclass(frozen=True)
class RationalExponent:
    """c = p/q (p > q >= 1, 既约), gamma = 1/c = q/p。"""
    p: int
    q: int

    def __post_init__(self):
        if self.q < 1 or self.p <= self.q:
            raise ValueError(f"指数 c = {self.p}/{self.q} 必须满足 p > q >= 1")
        if gcd(self.p, self.q) != 1:
            raise ValueError(f"指数 c = {self.p}/{self.q} 必须是既约分数")

    @classmethod
    def parse(cls, value) -> 'RationalExponent':
        c = parse_rational(value)
        return cls(c.numerator, c.denominator)

    @property
    def c(self) -> Fraction:
        return Fraction(self.p, self.q)

    @property
    def gamma(self) -> Fraction:
        return Fraction(self.q, self.p)

    def __str__(self):
        return f"{self.p}/{self.q}"

def floor_pow(n: int, p: int, q: int) -> int:
    """
    floor(n^{p/q}): 唯一满足 r^q <= n^p < (r+1)^q 的整数 r。

    :param n: n >= 1
    :param p: 分子, p >= 1
    :param q: 分母, q >= 1
    """
    if n < 0 or p < 1 or q < 1:
        raise ValueError(f"floor_pow 需要 n >= 0, p, q >= 1, 收到 ({n}, {p}, {q})")
    root, _ = gmpy2.iroot(gmpy2.mpz(n) ** p, q)
    return int(root)

def ceil_pow(m: int, p: int, q: int) -> int:
    """ceil(m^{p/q}): 满足 r^q >= m^p 的最小整数 r。"""
    if m < 0 or p < 1 or q < 1:
        raise ValueError(f"ceil_pow 需要 m >= 0, p, q >= 1, 收到 ({m}, {p}, {q})")
    root, exact = gmpy2.iroot(gmpy2.mpz(m) ** p, q)
    return int(root) if exact else int(root) + 1

# 对 n < 2^64, 前 12 个素数作为底数的 Miller-Rabin 检验是确定性的
_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_LIMIT = 1 << 64

def _miller_rabin_round(n: int, a: int, d: int, r: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(r - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False

def is_prime(n: int) -> bool:
    """确定性素性检验, 适用于 0 <= n < 2^64。"""
    if n < 0:
        raise ValueError(f"is_prime 需要 n >= 0, 收到 {n}")
    if n >= _LIMIT:
        raise ValueError(f"is_prime 只支持 n < 2^64, 收到 {n}")
    if n <= _BASES[-1]:
        return n in _BASES
    for base in _BASES:
        if n % base == 0:
            return False

    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    return all(_miller_rabin_round(n, base, d, r) for base in _BASES)
