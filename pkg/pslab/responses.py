import io
import json
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
import pandas as pd

from pslab import __version__
from pslab.exponents import format_rational

@dataclass
class RunManifest:
    """一次运行的可复现记录。"""
    subcommand: str
    parameters: dict = field(default_factory=dict)
    seed: int = None
    generator: str = None
    version: str = __version__
    duration_seconds: float = None

    def to_dict(self) -> dict:
        return {
            'subcommand': self.subcommand,
            'parameters': to_jsonable(self.parameters),
            'seed': self.seed,
            'generator': self.generator,
            'version': self.version,
            'duration_seconds': self.duration_seconds,
        }

def to_jsonable(value):
    """有理数统一写成 "num/den", numpy 标量转为 Python 数值, 复数拆成实部和虚部。"""
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, (np.bool_,)):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, np.floating):
        return float(value)
    if isinstance(value, (complex, np.complexfloating)):
        return {'re': float(value.real), 'im': float(value.imag)}
    if isinstance(value, np.ndarray):
        return to_jsonable(value.tolist())
    return value

def result_success(data=None, message='success', manifest: RunManifest = None, code=0):
    """格式化一个成功的结果。"""
    response = {
        'code': code,
        'message': message,
    }
    if data is not None:
        response['data'] = to_jsonable(data)
    if manifest is not None:
        response['manifest'] = manifest.to_dict()
    return response

def result_error(message='error', code=1, data=None, manifest: RunManifest = None):
    """格式化一个失败的结果。"""
    response = {
        'code': code,
        'message': message,
    }
    if data is not None:
        response['data'] = to_jsonable(data)
    if manifest is not None:
        response['manifest'] = manifest.to_dict()
    return response

def render_json(response: dict) -> str:
    return json.dumps(response, indent=2, ensure_ascii=False) + '\n'

def render_csv(records: list, manifest: RunManifest = None) -> str:
    """
    表格部分用 pandas 输出为 CSV, 清单以 '# key: value' 注释行写在最前,
    读取时可用 pd.read_csv(..., comment='#')。
    """
    buffer = io.StringIO()
    if manifest is not None:
        for key, value in manifest.to_dict().items():
            buffer.write(f"# {key}: {json.dumps(value, ensure_ascii=False)}\n")
    frame = pd.DataFrame([to_jsonable(record) for record in records])
    frame.to_csv(buffer, index=False)
    return buffer.getvalue()
