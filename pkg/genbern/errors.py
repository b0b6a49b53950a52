class GenBernError(Exception):
    """所有领域异常的基类"""


class DivisionByZero(GenBernError, ZeroDivisionError):
    """有理数除以零或对零求逆"""


class OrderMismatch(GenBernError, ValueError):
    """两个截断级数的截断阶不一致"""


class NonInvertibleLeadingCoefficient(GenBernError, ValueError):
    """级数常数项在系数环中不可逆"""


class InsufficientSequence(GenBernError, ValueError):
    """Bell 多项式的参数序列长度不足"""


class UnsupportedOrder(GenBernError, ValueError):
    """所选方法不支持该阶数 a"""


class RationalFormatError(GenBernError, ValueError):
    """无法解析的有理数文本"""
