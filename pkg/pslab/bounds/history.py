"""
Piatetski-Shapiro 素数定理可行范围的历史记录, 用于与计算结果对比。
"""
from dataclasses import dataclass
from fractions import Fraction as F

from pslab.exponents import format_rational, to_decimal

from .admissibility import RangeReport

ASYMPTOTIC = 'asymptotic'  # pi_c(x) ~ x^{1/c} / log x
LOWER_BOUND = 'lower_bound'  # pi_c(x) >> x^{1/c} / log x
REFERENCE = 'reference'
COMPUTED = 'computed'

@dataclass(frozen=True)
class HistoricalEntry:
    authors: str
    c_bound: F
    table: str

    def to_dict(self) -> dict:
        return {
            'authors': self.authors,
            'c_bound': format_rational(self.c_bound),
            'c_bound_decimal': to_decimal(self.c_bound, 4),
            'table': self.table,
        }

ASYMPTOTIC_TABLE = [
    HistoricalEntry('Piatetski-Shapiro', F(12, 11), ASYMPTOTIC),
    HistoricalEntry('Kolesnik', F(10, 9), ASYMPTOTIC),
    HistoricalEntry('Graham; Leitmann', F(69, 62), ASYMPTOTIC),
    HistoricalEntry('Heath-Brown', F(755, 662), ASYMPTOTIC),
    HistoricalEntry('Kolesnik', F(39, 34), ASYMPTOTIC),
    HistoricalEntry('Liu and Rivat', F(15, 13), ASYMPTOTIC),
    HistoricalEntry('Rivat', F(6121, 5302), ASYMPTOTIC),
    HistoricalEntry('Rivat and Sargos', F(2817, 2426), ASYMPTOTIC),
]

LOWER_BOUND_TABLE = [
    HistoricalEntry('Rivat', F(7, 6), LOWER_BOUND),
    HistoricalEntry('Baker, Harman and Rivat; Jia', F(20, 17), LOWER_BOUND),
    HistoricalEntry('Jia', F(13, 11), LOWER_BOUND),
    HistoricalEntry('Kumchev', F(45, 38), LOWER_BOUND),
    HistoricalEntry('Rivat and Wu', F(243, 205), LOWER_BOUND),
]

# 只用 type II 方法处理 type I' 和时的极限 gamma > 13/15
REFERENCE_BOUNDS = [
    HistoricalEntry('type II barrier (gamma > 13/15)', F(15, 13), REFERENCE),
]

def historical_compare(report: RangeReport, include_reference: bool = True) -> dict:
    """
    把历史记录与计算得到的 c_max 合并, 按 c 升序排列。

    :param report: combine 的结果
    :return: {'rows': [...], 'best_asymptotic': ..., 'improves_asymptotic_record': bool}
    """
    entries = ASYMPTOTIC_TABLE + LOWER_BOUND_TABLE + (REFERENCE_BOUNDS if include_reference else [])
    rows = [entry.to_dict() for entry in entries]
    rows.append({
        'authors': 'computed',
        'c_bound': format_rational(report.c_max),
        'c_bound_decimal': to_decimal(report.c_max, 4),
        'table': COMPUTED,
    })
    # 排序用精确值, 不能用四舍五入后的小数
    exact = {id(row): F(row['c_bound']) for row in rows}
    rows.sort(key=lambda row: exact[id(row)])

    best = max(ASYMPTOTIC_TABLE, key=lambda entry: entry.c_bound)
    return {
        'rows': rows,
        'computed_c_max': format_rational(report.c_max),
        'best_asymptotic': best.to_dict(),
        'improves_asymptotic_record': report.c_max > best.c_bound,
    }
