"""
把单项式上界代入 x 的幂, 得到关于 (gamma, mu) 的仿射指数 (M = x^mu)。
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction as F

from pslab import get_config
from pslab.exponents import ExponentPair, format_rational, parse_rational, to_decimal

from .terms import VARIABLES, MonomialTerm, twelve_term_bound

logger = logging.getLogger(__name__)

@dataclass(frozen=True)
class AffineExponent:
    const_part: F
    gamma_coeff: F = F(0)
    mu_coeff: F = F(0)

    def evaluate(self, gamma, mu) -> F:
        return self.const_part + self.gamma_coeff * gamma + self.mu_coeff * mu

    def __add__(self, other: 'AffineExponent') -> 'AffineExponent':
        return AffineExponent(
            self.const_part + other.const_part,
            self.gamma_coeff + other.gamma_coeff,
            self.mu_coeff + other.mu_coeff,
        )

    def scale(self, factor) -> 'AffineExponent':
        return AffineExponent(self.const_part * factor, self.gamma_coeff * factor, self.mu_coeff * factor)

    def to_dict(self) -> dict:
        return {
            'const': format_rational(self.const_part),
            'gamma_coeff': format_rational(self.gamma_coeff),
            'mu_coeff': format_rational(self.mu_coeff),
            'const_decimal': to_decimal(self.const_part),
            'gamma_coeff_decimal': to_decimal(self.gamma_coeff),
            'mu_coeff_decimal': to_decimal(self.mu_coeff),
        }

ZERO = AffineExponent(F(0))

@dataclass(frozen=True)
class SubstitutionMap:
    """X, H, M, N 各自作为 x 的幂的大小。"""
    sizes: dict = field(default_factory=dict)

    def __post_init__(self):
        missing = [v for v in VARIABLES if v not in self.sizes]
        if missing:
            raise ValueError(f"代换映射缺少变量: {', '.join(missing)}")

    def __getitem__(self, variable: str) -> AffineExponent:
        return self.sizes[variable]

def type_one_prime_map() -> SubstitutionMap:
    """
    Type I' 和的代换: X -> x, H -> x^mu, M -> x^{1-gamma}, N -> x^{1-mu}。

    在这一代换下结果的 mu 系数就是 M 的净指数。
    """
    return SubstitutionMap({
        'X': AffineExponent(F(1)),
        'H': AffineExponent(F(0), F(0), F(1)),
        'M': AffineExponent(F(1), F(-1), F(0)),
        'N': AffineExponent(F(1), F(0), F(-1)),
    })

def zero_map() -> SubstitutionMap:
    return SubstitutionMap({v: ZERO for v in VARIABLES})

def substitute(term: MonomialTerm, mapping: SubstitutionMap) -> AffineExponent:
    """
    x 的指数 = sum_v e_v * map(v), 精确计算。

    :param term: 单项式
    :param mapping: 代换映射
    :return: 关于 (gamma, mu) 的仿射指数
    """
    result = ZERO
    for variable in VARIABLES:
        exponent = term.exponent(variable)
        if exponent:
            result = result + mapping[variable].scale(exponent)
    return result

@dataclass(frozen=True)
class Window:
    """
    M 的窗口 x^{mu_low(gamma)} << M << x^{mu_high(gamma)}, 两端都是 gamma 的仿射函数。
    """
    low_const: F
    low_gamma: F
    high_const: F
    high_gamma: F

    @classmethod
    def type_one_prime(cls, mu_low=None, mu_high=None) -> 'Window':
        """默认窗口 2/3 <= mu <= 5 - 5 gamma, 取自配置。"""
        cfg = get_config()
        low = parse_rational(mu_low if mu_low is not None else cfg.TYPE_I_PRIME_MU_LOW)
        high_const, high_gamma = mu_high if mu_high is not None else cfg.TYPE_I_PRIME_MU_HIGH
        return cls(low, F(0), parse_rational(high_const), parse_rational(high_gamma))

    def mu_low(self, gamma) -> F:
        return self.low_const + self.low_gamma * gamma

    def mu_high(self, gamma) -> F:
        return self.high_const + self.high_gamma * gamma

    def vertices(self, gamma_floor, gamma_ceil=F(1)) -> list:
        """
        区域 {gamma_floor <= gamma <= gamma_ceil, mu_low <= mu <= mu_high} 的顶点。

        区域是凸多边形, 顶点只可能出现在 gamma 端点以及两条边界线的交点处。
        """
        candidates = [gamma_floor, gamma_ceil]
        slope = self.high_gamma - self.low_gamma
        if slope != 0:
            crossing = (self.low_const - self.high_const) / slope
            if gamma_floor < crossing < gamma_ceil:
                candidates.append(crossing)
        points = []
        for gamma in sorted(set(candidates)):
            low, high = self.mu_low(gamma), self.mu_high(gamma)
            if low <= high:
                for point in ((gamma, low), (gamma, high)):
                    if point not in points:
                        points.append(point)
        return points

    def to_dict(self) -> dict:
        return {
            'mu_low': f"{format_rational(self.low_const)} + {format_rational(self.low_gamma)}*gamma",
            'mu_high': f"{format_rational(self.high_const)} + {format_rational(self.high_gamma)}*gamma",
        }

@dataclass(frozen=True)
class SubstitutedTerm:
    label: str
    exponent: AffineExponent
    source_term: str
    dominated: bool = False
    dominated_by: str = None

    def to_dict(self) -> dict:
        return {
            'label': self.label,
            'source_term': self.source_term,
            **self.exponent.to_dict(),
            'dominated': self.dominated,
            'dominated_by': self.dominated_by,
        }

def e_label(term: MonomialTerm) -> str:
    """T1..T12 代换后记为 E1..E12。"""
    return "E" + term.label[1:]

def _dominance(exponents: list, vertices: list) -> list:
    """对每一项找出在所有顶点处都不小于它的另一项; 完全相同时靠后的一项被支配。"""
    values = [[e.evaluate(g, m) for g, m in vertices] for e in exponents]
    result = []
    for i, own in enumerate(values):
        dominator = None
        for j, other in enumerate(values):
            if i == j:
                continue
            if all(b >= a for a, b in zip(own, other)) and (other != own or j < i):
                dominator = j
                break
        result.append(dominator)
    return result

def derive_E_terms(pair: ExponentPair, window: Window = None) -> list:
    """
    把十二项上界全部代入 type I' 映射, 并标记被支配的项。

    :param pair: 有效指数对
    :param window: M 的窗口, 默认 2/3 <= mu <= 5 - 5 gamma
    :return: SubstitutedTerm 列表, 恰好 12 项
    """
    window = window or Window.type_one_prime()
    mapping = type_one_prime_map()
    terms = twelve_term_bound(pair)
    exponents = [substitute(term, mapping) for term in terms]

    gamma_floor = parse_rational(get_config().DOMINANCE_GAMMA_FLOOR)
    vertices = window.vertices(gamma_floor)
    dominators = _dominance(exponents, vertices) if vertices else [None] * len(terms)

    substituted = []
    for term, exponent, dominator in zip(terms, exponents, dominators):
        dominated_by = e_label(terms[dominator]) if dominator is not None else None
        substituted.append(SubstitutedTerm(e_label(term), exponent, term.label, dominator is not None, dominated_by))
        logger.debug(f"{e_label(term)}: x^({exponent.const_part} + {exponent.gamma_coeff} g) M^{exponent.mu_coeff}"
                     f"{' dominated by ' + dominated_by if dominated_by else ''}")
    return substituted
