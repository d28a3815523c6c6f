"""
Piatetski-Shapiro 序列 floor(n^c) 的枚举、素数计数 pi_c(x) 以及成员判定。
"""
import logging
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import gmpy2

from pslab import get_config
from pslab.exceptions import BudgetExceededError

from .arithmetic import RationalExponent, ceil_pow, floor_pow, is_prime

logger = logging.getLogger(__name__)

@dataclass(frozen=True)
class PrimeCountReport:
    x: int
    c: RationalExponent
    count: int
    main_term: float
    ratio: float
    n_max: int = None

    def to_dict(self) -> dict:
        return {
            'x': self.x,
            'c': str(self.c),
            'count': self.count,
            'main_term': self.main_term,
            'ratio': self.ratio,
            'n_max': self.n_max,
        }

def max_index(x: int, c: RationalExponent) -> int:
    """满足 floor(n^{p/q}) <= x 的最大 n, 即 n^p < (x+1)^q。"""
    root, exact = gmpy2.iroot(gmpy2.mpz(x + 1) ** c.q, c.p)
    return int(root) - 1 if exact else int(root)

def sequence_values(n_stop: int, c: RationalExponent, n_start: int = 1) -> list:
    """floor(n^c), n = n_start .. n_stop。"""
    return [floor_pow(n, c.p, c.q) for n in range(n_start, n_stop + 1)]

def _count_segment(args: tuple) -> tuple:
    """返回 (素数个数, 首个值, 末个值)。段内序列必须严格递增。"""
    n_start, n_stop, p, q = args
    count, previous, first = 0, None, None
    for n in range(n_start, n_stop + 1):
        value = floor_pow(n, p, q)
        if previous is not None and value <= previous:
            raise RuntimeError(f"序列在 n={n} 处不严格递增: {previous} -> {value}")
        if first is None:
            first = value
        previous = value
        if is_prime(value):
            count += 1
    return count, first, previous

def pi_c(x: int, c: RationalExponent, workers: int = None) -> PrimeCountReport:
    """
    pi_c(x) = #{素数 p <= x : p = floor(n^c)}。

    n 按固定宽度分段, 各段可并行计数, 按段号顺序汇总, 结果与并行度无关。

    :param x: x >= 2
    :param c: 有理指数 c = p/q > 1
    :param workers: 进程数, 默认取配置 NUM_WORKERS
    """
    if x < 2:
        raise ValueError(f"pi_c 需要 x >= 2, 收到 {x}")
    cfg = get_config()
    n_max = max_index(x, c)
    if n_max > cfg.PS_COUNT_BUDGET:
        raise BudgetExceededError('pi_c', n_max, cfg.PS_COUNT_BUDGET)
    workers = workers or cfg.NUM_WORKERS

    width = cfg.PS_SEGMENT_WIDTH
    segments = [(start, min(start + width - 1, n_max), c.p, c.q) for start in range(1, n_max + 1, width)]
    if workers > 1 and len(segments) > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            results = list(executor.map(_count_segment, segments))
    else:
        results = [_count_segment(segment) for segment in segments]

    count, last = 0, None
    for segment_count, first, final in results:
        if last is not None and first <= last:
            raise RuntimeError(f"相邻分段的序列值重复或倒序: {last} -> {first}")
        count += segment_count
        last = final

    main_term = x ** (c.q / c.p) / math.log(x)
    report = PrimeCountReport(x, c, count, main_term, count / main_term, n_max)
    logger.info(f"pi_c(x={x}, c={c}) = {count}, ratio {report.ratio:.4f} ({len(segments)} segments)")
    return report

def membership(pr: int, c: RationalExponent) -> bool:
    """
    pr 是否属于序列: 存在整数 n 满足 pr^gamma <= n < (pr+1)^gamma。

    gamma = q/p, 用 ceil((pr+1)^gamma) - ceil(pr^gamma) >= 1 的整数比较精确判定。
    """
    if pr < 2:
        raise ValueError(f"membership 需要 pr >= 2, 收到 {pr}")
    return ceil_pow(pr + 1, c.q, c.p) - ceil_pow(pr, c.q, c.p) >= 1
