import pytest
from click.testing import CliRunner

from pslab import create_context
from pslab.exponents import ExponentPair

@pytest.fixture(autouse=True)
def context():
    """每个测试都在 testing 配置下运行 (较小的预算, 日志写到 stderr)。"""
    return create_context('testing')

@pytest.fixture
def tty_pair():
    return ExponentPair.of('10769/351096', '609317/702192')

@pytest.fixture
def runner():
    return CliRunner(mix_stderr=False)
