# services/identities/sequences.py
"""Θ(k) 序列目录模块.

参数点只保存序列名称，求值时在此查表，保证参数点可序列化。
"""

import math
from typing import Dict, List

from models.identity_data import BoundedSequence, GrowthClass
from services.core.errors import HypothesisViolation


def _delta(k: int) -> float:
    return 1.0 if k == 0 else 0.0


def _one(k: int) -> float:
    return 1.0


def _alternating(k: int) -> float:
    return -1.0 if k % 2 else 1.0


def _harmonic(k: int) -> float:
    return 1.0 / (k + 1.0)


def _factorial(k: int) -> float:
    return float(math.factorial(k))


def _unit_coefficient(k: int) -> float:
    return 1.0


SEQUENCES: Dict[str, BoundedSequence] = {
    "delta": BoundedSequence("delta", _delta, 1.0),
    "one": BoundedSequence("one", _one, 1.0),
    "alternating": BoundedSequence("alternating", _alternating, 1.0),
    "harmonic": BoundedSequence("harmonic", _harmonic, 1.0),
    # k!/k! = 1，避免阶乘溢出
    "factorial": BoundedSequence("factorial", _factorial, None, GrowthClass.FACTORIAL,
                                 coefficient=_unit_coefficient),
}


def get_sequence(name: str) -> BoundedSequence:
    """按名称取序列.

    :param name: 序列名称
    :type name: str
    :return: 序列
    :rtype: BoundedSequence
    :raises HypothesisViolation: 名称未知
    """
    try:
        return SEQUENCES[name]
    except KeyError:
        raise HypothesisViolation(
            f"未知的 Θ 序列 '{name}'，可选: {', '.join(sorted(SEQUENCES))}"
        ) from None


def sequence_names() -> List[str]:
    return list(SEQUENCES)


__all__ = ["SEQUENCES", "get_sequence", "sequence_names"]
