import logging
from logging.handlers import RotatingFileHandler
import os

__version__ = '1.0.0'

# 当前生效的配置, 供各计算模块读取预算与精度
_current_config = None

def create_context(config_name=None):
    """
    选择配置类并初始化日志, 返回生效的配置对象。

    :param config_name: 'development' / 'production' / 'testing', 默认读取环境变量 PSLAB_CONFIG
    :return: 配置类
    """
    global _current_config

    # 配置
    if config_name is None:
        config_name = os.getenv('PSLAB_CONFIG', 'development')

    from config import config as config_map
    cfg = config_map.get(config_name, config_map['default'])

    # 设置日志
    root = logging.getLogger('pslab')
    for handler in list(root.handlers):
        root.removeHandler(handler)
        handler.close()
    if not cfg.DEBUG:
        if not os.path.exists(cfg.LOG_DIR):
            os.makedirs(cfg.LOG_DIR, exist_ok=True)
        file_handler = RotatingFileHandler(os.path.join(cfg.LOG_DIR, cfg.LOG_FILE), maxBytes=10240, backupCount=10)
        file_handler.setFormatter(logging.Formatter(
            '%(asctime)s %(levelname)s: %(message)s [in %(pathname)s:%(lineno)d]'
        ))
        file_handler.setLevel(logging.INFO)
        root.addHandler(file_handler)
        root.setLevel(logging.INFO)
    else:
        # stdout 只用于结果输出, 调试日志写到 stderr
        stream_handler = logging.StreamHandler()
        stream_handler.setFormatter(logging.Formatter('%(asctime)s %(levelname)s %(name)s: %(message)s'))
        root.addHandler(stream_handler)
        root.setLevel(logging.INFO)

    _current_config = cfg
    root.info(f'pslab startup ({config_name})')
    return cfg

def get_config():
    """返回当前配置, 尚未初始化时使用默认配置。"""
    if _current_config is None:
        return create_context()
    return _current_config
