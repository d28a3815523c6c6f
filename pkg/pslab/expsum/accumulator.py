"""
补偿求和: 以无误差变换 two_sum 维护 (s, t) 两个浮点字, 和 = s + t。
"""

def two_sum(u: float, v: float) -> tuple:
    """u + v = s + t 精确成立, 其中 s = round(u + v)。"""
    s = u + v
    up = s - v
    vpp = s - up
    up -= u
    vpp -= v
    t = -(up + vpp)
    return s, t

class CompensatedSum:
    """类似 math.fsum, 但支持逐项累加。"""

    def __init__(self, value: float = 0.0):
        self._s, self._t = float(value), 0.0

    def add(self, y: float) -> 'CompensatedSum':
        # 从最低有效端开始累加
        y, u = two_sum(float(y), self._t)
        self._s, self._t = two_sum(y, self._s)
        if self._s == 0:
            self._s = u
        else:
            self._t += u
        return self

    def extend(self, values) -> 'CompensatedSum':
        for value in values:
            self.add(value)
        return self

    @property
    def value(self) -> float:
        return self._s

class ComplexCompensatedSum:
    """实部与虚部各自独立补偿累加。"""

    def __init__(self):
        self.real = CompensatedSum()
        self.imag = CompensatedSum()

    def add(self, z: complex) -> 'ComplexCompensatedSum':
        self.real.add(z.real)
        self.imag.add(z.imag)
        return self

    @property
    def value(self) -> complex:
        return complex(self.real.value, self.imag.value)
