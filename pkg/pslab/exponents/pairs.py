"""
指数对演算: 有效性判断、A 过程、B 过程以及 A/B 词的应用。
"""
import logging
import re
from dataclasses import dataclass
from fractions import Fraction

from .rational import RationalLike, format_rational, parse_rational

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)

_WORD_PATTERN = re.compile(r'^[AB]*$')

@dataclass(frozen=True)
class ExponentPair:
    kappa: Fraction
    lambda_: Fraction

    @classmethod
    def of(cls, kappa: RationalLike, lambda_: RationalLike) -> 'ExponentPair':
        return cls(parse_rational(kappa), parse_rational(lambda_))

    def to_dict(self) -> dict:
        return {
            'kappa': format_rational(self.kappa),
            'lambda': format_rational(self.lambda_),
        }

    def __str__(self):
        return f"({format_rational(self.kappa)}, {format_rational(self.lambda_)})"

TRIVIAL_PAIR = ExponentPair(Fraction(0), Fraction(1))

class InvalidPairError(ValueError):
    """指数对不在经典区域 0 <= kappa <= 1/2 <= lambda <= 1 内。"""

    def __init__(self, message: str, pair: ExponentPair = None, image: ExponentPair = None):
        super().__init__(message)
        self.pair = pair
        self.image = image

def is_valid_pair(pair: ExponentPair) -> bool:
    """判断 0 <= kappa <= 1/2 <= lambda <= 1。"""
    return 0 <= pair.kappa <= HALF <= pair.lambda_ <= 1

def require_valid_pair(pair: ExponentPair) -> ExponentPair:
    if not is_valid_pair(pair):
        raise InvalidPairError(f"无效的指数对 {pair}: 需要 0 <= kappa <= 1/2 <= lambda <= 1", pair=pair)
    return pair

def apply_A(pair: ExponentPair) -> ExponentPair:
    """
    A 过程: (kappa, lambda) -> (kappa/(2kappa+2), (kappa+lambda+1)/(2kappa+2))。

    :param pair: 有效指数对
    :return: 新的指数对, 精确计算
    """
    require_valid_pair(pair)
    denominator = 2 * pair.kappa + 2
    return ExponentPair(pair.kappa / denominator, (pair.kappa + pair.lambda_ + 1) / denominator)

def apply_B(pair: ExponentPair) -> ExponentPair:
    """
    B 过程: (kappa, lambda) -> (lambda - 1/2, kappa + 1/2)。像不在有效区域内时拒绝, 并同时报告两个指数对。
    """
    require_valid_pair(pair)
    image = ExponentPair(pair.lambda_ - HALF, pair.kappa + HALF)
    if not is_valid_pair(image):
        raise InvalidPairError(f"B 过程的像 {image} 无效 (输入 {pair})", pair=pair, image=image)
    return image

_PROCESSES = {'A': apply_A, 'B': apply_B}

def apply_word(word: str, start: ExponentPair = TRIVIAL_PAIR) -> ExponentPair:
    """
    从平凡指数对 (0, 1) 出发, 自左向右依次应用 A/B 过程。

    :param word: 只含 'A' 和 'B' 的字符串, 空串表示平凡指数对
    :param start: 起点, 默认 (0, 1)
    :return: 最终的指数对
    """
    if not isinstance(word, str) or not _WORD_PATTERN.match(word):
        raise ValueError(f"非法的过程词: {word!r} (只允许字符 A 和 B)")
    pair = start
    for letter in word:
        pair = _PROCESSES[letter](pair)
    logger.debug(f"apply_word({word!r}) -> {pair}")
    return pair
