"""
在 A/B 词生成的指数对上搜索使 gamma_min 最小的一个。
"""
import itertools
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from pslab.exponents import ExponentPair, InvalidPairError, apply_word, format_rational

from .admissibility import NeverSatisfiableError, RangeReport, combine

logger = logging.getLogger(__name__)

@dataclass
class SearchResult:
    word: str
    pair: ExponentPair
    report: RangeReport
    evaluated: int

    def to_dict(self) -> dict:
        return {
            'best_word': self.word,
            'pair': self.pair.to_dict(),
            'gamma_min': format_rational(self.report.gamma_min),
            'c_max': format_rational(self.report.c_max),
            'binding_source': self.report.binding_source,
            'evaluated_words': self.evaluated,
            'report': self.report.to_dict(),
        }

def enumerate_words(max_word_length: int):
    """按长度递增、同长度按字典序枚举 {A, B} 上的词, 空词在最前。"""
    for length in range(max_word_length + 1):
        for letters in itertools.product('AB', repeat=length):
            yield ''.join(letters)

def _evaluate_word(word: str):
    """返回 (word, gamma_min); 无效或不可满足时 gamma_min 为 None。"""
    try:
        pair = apply_word(word)
        return word, combine(pair).gamma_min
    except (InvalidPairError, NeverSatisfiableError) as e:
        logger.debug(f"跳过词 {word!r}: {e}")
        return word, None

def search_pairs(max_word_length: int, workers: int = 1) -> SearchResult:
    """
    枚举长度不超过 max_word_length 的全部 A/B 词, 返回 gamma_min 最小者。

    并列时取较短的词, 再取字典序较小的词; 胜者由枚举顺序决定, 与完成顺序无关。

    :param max_word_length: 词长上限, >= 0
    :param workers: 并行进程数, 1 表示串行
    """
    if not isinstance(max_word_length, int) or max_word_length < 0:
        raise ValueError(f"max_word_length 必须是非负整数, 收到 {max_word_length!r}")

    words = list(enumerate_words(max_word_length))
    logger.info(f"search_pairs: 评估 {len(words)} 个词 (workers={workers})")

    if workers and workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            results = list(executor.map(_evaluate_word, words, chunksize=max(1, len(words) // (4 * workers))))
    else:
        results = [_evaluate_word(word) for word in words]

    best_word, best_gamma = None, None
    for word, gamma_min in results:
        if gamma_min is None:
            continue
        if best_gamma is None or gamma_min < best_gamma:
            best_word, best_gamma = word, gamma_min

    if best_word is None:
        raise ValueError("没有任何可行的候选词")

    pair = apply_word(best_word)
    report = combine(pair)
    logger.info(f"search_pairs: 最优词 {best_word!r} -> {pair}, gamma > {format_rational(best_gamma)}")
    return SearchResult(best_word, pair, report, len(words))
