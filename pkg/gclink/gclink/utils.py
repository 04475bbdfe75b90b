#!/usr/bin/env python3
# -*- coding: utf-8 -*-
# ----------------------------------------------------------------------------
# Created Date: 10/19/2026
# version ='0.1.0'
# ---------------------------------------------------------------------------
""" Utility functions for encoding documents and parsing ratios """
# ---------------------------------------------------------------------------

# ---------------------------------------------------------------------------
# Imports
# ---------------------------------------------------------------------------
import json
import math
from enum import Enum

import numpy as np

# ---------------------------------------------------------------------------
# Constants
# ---------------------------------------------------------------------------
FLOAT_FORMAT = '.16e'
INDENT = '  '


# ---------------------------------------------------------------------------
# Utilities
# ---------------------------------------------------------------------------
def encode_float(value: float) -> str:
    """
    Encode a float with 17 significant digits so it round-trips exactly

    Args:
        value (float): Number to encode

    Raises:
        ValueError: For NaN or infinite values, which JSON cannot carry

    Returns:
        text (str): JSON number literal
    """
    if not math.isfinite(value):
        raise ValueError(f'Invalid number for JSON: {value}')
    return format(value, FLOAT_FORMAT)


def to_json_text(obj, indent: int = 1) -> str:
    """Serialize dicts/lists/scalars deterministically (insertion order kept)"""
    return _encode(obj, 0, indent) + '\n'


def _encode(obj, level: int, indent: int) -> str:
    if isinstance(obj, Enum):
        obj = obj.value
    if obj is None or isinstance(obj, (bool, str)):
        return json.dumps(obj)
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return encode_float(float(obj))
    if isinstance(obj, np.ndarray):
        obj = obj.tolist()
    pad = INDENT * indent * (level + 1)
    end = INDENT * indent * level
    if isinstance(obj, dict):
        if not obj:
            return '{}'
        items = [f'{pad}{json.dumps(str(key))}: {_encode(value, level + 1, indent)}'
                 for key, value in obj.items()]
        return '{\n' + ',\n'.join(items) + '\n' + end + '}'
    if isinstance(obj, (list, tuple)):
        if not obj:
            return '[]'
        if all(not isinstance(item, (dict, list, tuple, np.ndarray)) for item in obj):
            return '[' + ', '.join(_encode(item, level + 1, indent) for item in obj) + ']'
        items = [pad + _encode(item, level + 1, indent) for item in obj]
        return '[\n' + ',\n'.join(items) + '\n' + end + ']'
    raise TypeError(f'Cannot encode {type(obj).__name__} as JSON')


def parse_ratio(text: str) -> tuple[int, int]:
    """
    Split a `P/Q` string into its integer parts

    Args:
        text (str): Ratio such as "18/23", "-6/1" or "1/0"

    Raises:
        ValueError: When the text is not two integers separated by "/"

    Returns:
        ratio (tuple): (numerator, denominator)
    """
    try:
        top, bottom = text.strip().split('/')
        return int(top), int(bottom)
    except ValueError:
        raise ValueError(f'Invalid ratio: {text!r}')


def fibonacci_sphere(count: int) -> np.ndarray:
    """Nearly uniform deterministic points on S^2, shape (count, 3)"""
    index = np.arange(count) + 0.5
    height = 1.0 - 2.0 * index / count
    radius = np.sqrt(1.0 - height**2)
    angle = math.pi * (3.0 - math.sqrt(5.0)) * index
    return np.stack([radius * np.cos(angle), radius * np.sin(angle), height], axis=1)


def angle_between(a: np.ndarray, b: np.ndarray) -> float:
    """Spherical distance between unit vectors"""
    return 2.0 * math.atan2(float(np.linalg.norm(a - b)), float(np.linalg.norm(a + b)))
