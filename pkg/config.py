import os
from dotenv import load_dotenv

load_dotenv()

class Config:
    # 输出配置
    OUTPUT_DIR = os.getenv('PSLAB_OUTPUT_DIR', '')
    DEBUG = os.getenv('PSLAB_DEBUG', 'False').lower() == 'true'

    # 日志配置
    LOG_DIR = os.getenv('PSLAB_LOG_DIR', 'logs')
    LOG_FILE = 'pslab.log'

    # 计算预算
    TRILINEAR_BUDGET = int(float(os.getenv('PSLAB_TRILINEAR_BUDGET', 1e9)))  # 三重和的基本项数上限
    TRILINEAR_SEGMENT_H = int(os.getenv('PSLAB_TRILINEAR_SEGMENT_H', 16))  # 每个并行分段包含的 h 行数
    PS_COUNT_BUDGET = int(float(os.getenv('PSLAB_PS_COUNT_BUDGET', 5e7)))
    PS_SEGMENT_WIDTH = 1 << 20
    PSI_SUM_BUDGET = int(float(os.getenv('PSLAB_PSI_SUM_BUDGET', 5e7)))
    SIEVE_SEGMENT_WIDTH = 1 << 20

    # 数值精度
    MPMATH_DPS = int(os.getenv('PSLAB_MPMATH_DPS', 50))
    VAALER_TOLERANCE = 1e-12
    HYPOTHESIS_TOLERANCE = 1e-9
    HYPOTHESIS_WARN_MARGIN = 1e-6

    # 并行配置 (1 表示串行)
    NUM_WORKERS = int(os.getenv('PSLAB_NUM_WORKERS', 1))

    # 回归上限 (首次通过时冻结)
    ENVELOPE_RATIO_CEILING = 1.0
    SPACING_RATIO_CEILING = 8.0
    WU_MAX_K = int(os.getenv('PSLAB_WU_MAX_K', 8))

    # Kusmin-Landau 默认用例集
    KL_SUITE_SEED = 20240501
    KL_SUITE_SIZE = 50
    KL_MIN_LAMBDA = 1e-3

    # Type I' 窗口: x^{mu_low} << M << x^{c0 + c1*gamma}
    TYPE_I_PRIME_MU_LOW = '2/3'
    TYPE_I_PRIME_MU_HIGH = ('5', '-5')
    DOMINANCE_GAMMA_FLOOR = '1/2'

class DevelopmentConfig(Config):
    DEBUG = True

class ProductionConfig(Config):
    DEBUG = False

class TestingConfig(Config):
    DEBUG = True
    TRILINEAR_BUDGET = 10 ** 6
    PS_COUNT_BUDGET = 10 ** 6
    PSI_SUM_BUDGET = 2 * 10 ** 6

config = {
    'development': DevelopmentConfig,
    'production': ProductionConfig,
    'testing': TestingConfig,
    'default': DevelopmentConfig
}
