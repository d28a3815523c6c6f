from dataclasses import dataclass

from .rational import ExactRational, format_rational, make_rational, parse_rational, to_decimal
from .pairs import (
    ExponentPair,
    InvalidPairError,
    TRIVIAL_PAIR,
    apply_A,
    apply_B,
    apply_word,
    is_valid_pair,
)

@dataclass(frozen=True)
class NamedPair:
    identifier: str
    pair: ExponentPair
    provenance: str
    word: str = None

    def to_dict(self) -> dict:
        return {
            'identifier': self.identifier,
            **self.pair.to_dict(),
            'provenance': self.provenance,
            'word': self.word,
        }

# 已知指数对, 键为唯一标识符
PAIR_MAP = {
    named.identifier: named
    for named in [
        NamedPair('trivial', TRIVIAL_PAIR, 'trivial exponent pair', word=''),
        NamedPair('b', apply_word('B'), 'B-process applied to (0, 1)', word='B'),
        NamedPair('ba', apply_word('BA'), 'van der Corput (1/6, 2/3)', word='BA'),
        NamedPair('baa', apply_word('BAA'), 'van der Corput (1/14, 11/14)', word='BAA'),
        # 不能由 A/B 词生成, 作为输入数据保存
        NamedPair('tty2025', ExponentPair.of('10769/351096', '609317/702192'), 'TTY2025, Theorem 20'),
    ]
}

def get_pair_by_identifier(identifier: str) -> NamedPair:
    """
    根据标识符获取已知指数对。

    :param identifier: 例如 'tty2025'
    :return: NamedPair
    """
    named = PAIR_MAP.get(identifier)
    if named is None:
        raise ValueError(f"未知的指数对: {identifier!r} (可选: {', '.join(PAIR_MAP)})")
    return named

__all__ = [
    'ExactRational',
    'ExponentPair',
    'InvalidPairError',
    'NamedPair',
    'PAIR_MAP',
    'TRIVIAL_PAIR',
    'apply_A',
    'apply_B',
    'apply_word',
    'format_rational',
    'get_pair_by_identifier',
    'is_valid_pair',
    'make_rational',
    'parse_rational',
    'to_decimal',
]
