#!/usr/bin/env python3
# coding: utf-8
"""
@file: writer.py
@description: render polynomials, multiplicities and result tables as text or json.
@author: superkostka team
@last modified by: superkostka team

change log:
    2026/10/16  create file.
"""
import json
from typing import Any, Mapping

import pandas as pd
from typing_extensions import Literal

from ..core.algebra import Weight
from ..core.qpolynomial import QPolynomial
from ..core.result import SuperKostkaResult, GradedCharacter, CheckReport

OutputFormat = Literal['text', 'json']


def _jsonable(value: Any) -> Any:
    if isinstance(value, QPolynomial):
        return value.to_json()
    if isinstance(value, Weight):
        return str(value)
    if isinstance(value, GradedCharacter):
        return {str(mu): p.to_json() for mu, p in value}
    if isinstance(value, SuperKostkaResult):
        return [] if value.is_empty else value.matrix.to_dict(orient='records')
    if isinstance(value, pd.DataFrame):
        return value.to_dict(orient='records')
    if isinstance(value, Mapping):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def _numpy_scalar(value: Any) -> Any:
    if hasattr(value, 'item'):
        return value.item()
    return str(value)


def to_json(value: Any) -> str:
    """
    json text of a polynomial (`{"coeffs": {exp: coeff}}`), a character, a table or a plain value.
    """
    return json.dumps(_jsonable(value), ensure_ascii=False, default=_numpy_scalar)


def to_text(value: Any) -> str:
    """
    plain text rendering, polynomials by descending exponent.
    """
    if isinstance(value, QPolynomial):
        return value.to_text()
    if isinstance(value, GradedCharacter):
        return '\n'.join(f'{mu}\t{p.to_text()}' for mu, p in value) if len(value) else '0'
    if isinstance(value, CheckReport):
        if value.is_empty:
            return 'no case checked'
        return value.summary().to_string(index=False)
    if isinstance(value, SuperKostkaResult):
        return 'empty' if value.is_empty else value.matrix.to_string(index=False)
    if isinstance(value, pd.DataFrame):
        return 'empty' if value.empty else value.to_string(index=False)
    if isinstance(value, Mapping):
        return '\n'.join(f'{k}\t{to_text(v)}' for k, v in value.items())
    if isinstance(value, (list, tuple)):
        return '\n'.join(to_text(v) for v in value)
    if value is None:
        return 'none'
    return str(value)


def render(value: Any, output_format: OutputFormat = 'text') -> str:
    if output_format == 'json':
        return to_json(value)
    return to_text(value)
