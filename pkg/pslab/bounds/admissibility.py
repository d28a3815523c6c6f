"""
由代换后的 E 项、type I 与 type II 条件得到 gamma 的可行范围。

所有阈值都是精确有理数, 统一以严格不等式 "gamma > t" (或 "gamma < t") 报告。
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction as F

from pslab.exponents import ExponentPair, format_rational, to_decimal
from pslab.exponents.pairs import require_valid_pair

from .substitution import AffineExponent, SubstitutedTerm, Window, derive_E_terms

logger = logging.getLogger(__name__)

GREATER = 'greater'
LESS = 'less'

# 约束状态: 普通阈值 / 恒成立 / 永不成立
BOUND = 'bound'
ALWAYS = 'always'
NEVER = 'never'

class NeverSatisfiableError(ValueError):
    def __init__(self, label: str, detail: str = ''):
        super().__init__(f"约束 {label} 永远无法满足{': ' + detail if detail else ''}")
        self.label = label

@dataclass(frozen=True)
class GammaConstraint:
    threshold: F
    direction: str
    source_label: str
    status: str = BOUND
    m_condition: str = None
    window_edge: str = None
    dominated: bool = False

    def is_satisfied(self, gamma) -> bool:
        """严格意义下检查 gamma 是否满足该约束。"""
        if self.status == ALWAYS:
            return True
        if self.status == NEVER:
            return False
        return gamma > self.threshold if self.direction == GREATER else gamma < self.threshold

    def to_dict(self) -> dict:
        relation = '>' if self.direction == GREATER else '<'
        return {
            'source_label': self.source_label,
            'status': self.status,
            'direction': self.direction,
            'threshold': format_rational(self.threshold) if self.threshold is not None else None,
            'threshold_decimal': to_decimal(self.threshold) if self.threshold is not None else None,
            'constraint': f"gamma {relation} {format_rational(self.threshold)}" if self.status == BOUND else self.status,
            'm_condition': self.m_condition,
            'window_edge': self.window_edge,
            'dominated': self.dominated,
        }

def solve_linear(const: F, slope: F, label: str, **extra) -> GammaConstraint:
    """
    求解 const + slope * gamma <= 1。

    slope 为 0 时只返回恒成立/永不成立标记, 不编造阈值。
    """
    if slope < 0:
        return GammaConstraint((1 - const) / slope, GREATER, label, **extra)
    if slope > 0:
        return GammaConstraint((1 - const) / slope, LESS, label, **extra)
    status = ALWAYS if const <= 1 else NEVER
    return GammaConstraint(None, GREATER, label, status=status, **extra)

def _compare_ranges(lower: tuple, upper: tuple, label: str) -> GammaConstraint:
    """把 a0 + a1*gamma < b0 + b1*gamma 改写成 (a0 - b0 + 1) + (a1 - b1) gamma <= 1 再求解。"""
    (a0, a1), (b0, b1) = lower, upper
    return solve_linear(a0 - b0 + 1, a1 - b1, label)

def m_condition(exponent: AffineExponent) -> str:
    """x^{c + g*gamma} M^{mu} <= x 对应的 M 的条件, 例如 "M << x^{-1 + 13/5 gamma}"。"""
    mu = exponent.mu_coeff
    if mu == 0:
        return None
    const = (1 - exponent.const_part) / mu
    slope = -exponent.gamma_coeff / mu
    relation = '<<' if mu > 0 else '>>'
    return f"M {relation} x^({format_rational(const)} + {format_rational(slope)}*gamma)"

def threshold_from_E(term, window: Window = None, label: str = None) -> GammaConstraint:
    """
    要求该项在整个窗口内的 x 指数不超过 1。

    mu 系数为正时取窗口上端 mu_high(gamma), 为负时取下端 mu_low(gamma), 为零时与 M 无关。

    :param term: SubstitutedTerm 或 AffineExponent
    :param window: M 的窗口, 默认 2/3 <= mu <= 5 - 5 gamma
    :param label: 约束来源标签
    :return: GammaConstraint
    """
    window = window or Window.type_one_prime()
    dominated = False
    if isinstance(term, SubstitutedTerm):
        label = label or term.label
        dominated = term.dominated
        exponent = term.exponent
    else:
        exponent = term
    label = label or 'E'

    mu = exponent.mu_coeff
    if mu > 0:
        const = exponent.const_part + mu * window.high_const
        slope = exponent.gamma_coeff + mu * window.high_gamma
        edge = 'mu_high'
    elif mu < 0:
        const = exponent.const_part + mu * window.low_const
        slope = exponent.gamma_coeff + mu * window.low_gamma
        edge = 'mu_low'
    else:
        const, slope, edge = exponent.const_part, exponent.gamma_coeff, None
    return solve_linear(const, slope, label, m_condition=m_condition(exponent), window_edge=edge, dominated=dominated)

def type2_constraint() -> GammaConstraint:
    """Type II 条件 2(1 - gamma) < 5 gamma - 4, 即 gamma > 6/7。"""
    return _compare_ranges((F(2), F(-2)), (F(-4), F(5)), 'typeII')

# type I 引理内部的项 x^{3/2 - 3/4 gamma} M^{1/4}, 要求不超过 x
TYPE_I_INTERNAL_TERM = AffineExponent(F(3, 2), F(-3, 4), F(1, 4))

def type1_m_bound() -> tuple:
    """由内部项推出 M <= x^{3 gamma - 2}, 返回 (常数, gamma 系数)。"""
    mu = TYPE_I_INTERNAL_TERM.mu_coeff
    return ((1 - TYPE_I_INTERNAL_TERM.const_part) / mu, -TYPE_I_INTERNAL_TERM.gamma_coeff / mu)

def type1_constraint() -> GammaConstraint:
    """Type I 条件 1 - gamma/2 < 3 gamma - 2, 即 gamma > 6/7。"""
    constraint = _compare_ranges((F(1), F(-1, 2)), type1_m_bound(), 'typeI')
    const, slope = type1_m_bound()
    return GammaConstraint(constraint.threshold, constraint.direction, constraint.source_label,
                           m_condition=f"M <= x^({format_rational(const)} + {format_rational(slope)}*gamma)")

@dataclass
class RangeReport:
    gamma_min: F
    c_max: F
    binding_source: str
    all_constraints: list
    pair: ExponentPair = None
    gamma_max: F = F(1)
    e_terms: list = field(default_factory=list)
    window: Window = None

    def to_dict(self) -> dict:
        return {
            'pair': self.pair.to_dict() if self.pair else None,
            'gamma_min': format_rational(self.gamma_min),
            'gamma_min_decimal': to_decimal(self.gamma_min, 8),
            'c_max': format_rational(self.c_max),
            'c_max_decimal': to_decimal(self.c_max, 8),
            'gamma_max': format_rational(self.gamma_max),
            'binding_source': self.binding_source,
            'window': self.window.to_dict() if self.window else None,
            'constraints': [c.to_dict() for c in self.all_constraints],
            'e_terms': [t.to_dict() for t in self.e_terms],
        }

    def to_records(self) -> list:
        """CSV 的逐行记录, 每个约束一行。"""
        records = []
        for c in self.all_constraints:
            row = c.to_dict()
            row['binding'] = c.source_label == self.binding_source
            records.append(row)
        return records

def reduce_constraints(constraints: list) -> tuple:
    """
    返回 (gamma_min, gamma_max, binding_source)。

    gamma_min 取所有 greater 阈值的最大值, 并列时按约束顺序取第一个。
    """
    gamma_min, binding = None, None
    gamma_max = F(1)
    for constraint in constraints:
        if constraint.status == NEVER:
            raise NeverSatisfiableError(constraint.source_label)
        if constraint.status == ALWAYS:
            continue
        if constraint.direction == GREATER:
            if gamma_min is None or constraint.threshold > gamma_min:
                gamma_min, binding = constraint.threshold, constraint.source_label
        elif constraint.threshold < gamma_max:
            gamma_max = constraint.threshold
    if gamma_min is None:
        raise ValueError("没有任何下界约束, 无法确定 gamma_min")
    if gamma_min >= gamma_max:
        raise NeverSatisfiableError(binding, f"gamma > {gamma_min} 与 gamma < {gamma_max} 矛盾")
    return gamma_min, gamma_max, binding

def combine(pair: ExponentPair, window: Window = None) -> RangeReport:
    """
    组合全部约束并给出可行范围 gamma > gamma_min, 即 c < c_max = 1/gamma_min。

    :param pair: 有效指数对
    :param window: M 的窗口, 默认 2/3 <= mu <= 5 - 5 gamma
    :return: RangeReport
    """
    require_valid_pair(pair)
    window = window or Window.type_one_prime()

    # 1. 代换十二项上界并逐项求阈值
    e_terms = derive_E_terms(pair, window)
    constraints = [threshold_from_E(term, window) for term in e_terms]

    # 2. 加入 type II 与 type I 条件
    constraints.append(type2_constraint())
    constraints.append(type1_constraint())

    # 3. 取最紧的下界
    gamma_min, gamma_max, binding = reduce_constraints(constraints)
    report = RangeReport(
        gamma_min=gamma_min,
        c_max=1 / gamma_min,
        binding_source=binding,
        all_constraints=constraints,
        pair=pair,
        gamma_max=gamma_max,
        e_terms=e_terms,
        window=window,
    )
    logger.info(f"combine{pair}: gamma > {format_rational(gamma_min)}, c < {format_rational(report.c_max)} "
                f"(binding {binding})")
    return report
