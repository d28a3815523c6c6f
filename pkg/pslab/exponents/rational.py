"""
精确有理数工具。

所有符号指数都以 fractions.Fraction 表示: 构造时即约分, 分母恒为正, 运算全程无舍入。
"""
import re
from fractions import Fraction
from typing import Union

ExactRational = Fraction

RationalLike = Union[int, str, Fraction]

_RATIONAL_PATTERN = re.compile(r'^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$')

def make_rational(numerator: int, denominator: int) -> ExactRational:
    """
    构造一个约分后的有理数, 符号由分子携带。

    :param numerator: 分子
    :param denominator: 分母, 不能为 0
    :return: ExactRational
    """
    if not isinstance(numerator, int) or not isinstance(denominator, int):
        raise ValueError(f"分子和分母必须是整数: {numerator!r}/{denominator!r}")
    if denominator == 0:
        raise ValueError(f"分母不能为零: {numerator}/0")
    return Fraction(numerator, denominator)

def parse_rational(value: RationalLike) -> ExactRational:
    """
    解析 "num/den" 或 "n" 形式的字符串。浮点数不接受, 以免引入舍入。

    :param value: 字符串、整数或 Fraction
    :return: ExactRational
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise ValueError(f"有理数必须以 'num/den' 字符串给出, 不接受 {type(value).__name__}: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    match = _RATIONAL_PATTERN.match(str(value))
    if not match:
        raise ValueError(f"无法解析的有理数: {value!r} (期望 'num/den' 或整数)")
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    return make_rational(numerator, denominator)

def format_rational(value: RationalLike) -> str:
    """序列化为 "num/den", 整数也写成 "n/1"。"""
    value = parse_rational(value)
    return f"{value.numerator}/{value.denominator}"

def to_decimal(value: RationalLike, digits: int = 6) -> float:
    """仅用于展示的十进制近似, 永远与精确分数一起输出。"""
    return round(float(parse_rational(value)), digits)
