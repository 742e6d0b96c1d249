#!/usr/bin/env python3
# coding: utf-8

"""
@file: reader.py
@description: parse algebras, weights and polynomials written on the command line.
@author: superkostka team
@last modified by: superkostka team

change log:
    2026/10/16  create file.
    2026/10/19  negative exponents in polynomial text.
"""
import json
import re
from fractions import Fraction
from typing import List, Optional

from ..core.algebra import AlgebraSpec, Family, Weight
from ..core.qpolynomial import QPolynomial
from ..exceptions import InvalidAlgebra, ParseError

_GL = re.compile(r'\s*gl\s*:\s*(\d+)\s*,\s*(\d+)\s*$')
_SPO_NAMED = re.compile(r'\s*spo\s*:\s*2n\s*=\s*(\d+)\s*,\s*M\s*=\s*(\d+)\s*$')
_SPO_PLAIN = re.compile(r'\s*spo\s*:\s*(\d+)\s*,\s*(\d+)\s*$')
_ENTRY = re.compile(r'[+-]?\d+(/2)?$')
_TERM = re.compile(r'\s*([+-])?\s*(\d+)?\s*(\*?\s*q(\s*\^\s*(-?\d+))?)?\s*')


def parse_algebra(text: str) -> AlgebraSpec:
    """
    read `gl:N,M`, `spo:2n=X,M=Y` or `spo:X,Y`.

    X must be even; an odd M = 2m+1 gives spo(2n,2m+1), an even M = 2m gives spo(2n,2m).

    :param text: algebra string
    :return: AlgebraSpec
    """
    match = _GL.match(text)
    if match:
        return _build(Family.GL, int(match.group(1)), int(match.group(2)), text, match.start(1))
    match = _SPO_NAMED.match(text) or _SPO_PLAIN.match(text)
    if match:
        even, big_m = int(match.group(1)), int(match.group(2))
        if even % 2:
            raise ParseError(f'the symplectic rank 2n={even} must be even', match.start(1))
        if big_m % 2:
            return _build(Family.SPO_ODD, even // 2, (big_m - 1) // 2, text, match.start(2))
        return _build(Family.SPO_EVEN, even // 2, big_m // 2, text, match.start(2))
    head = text.split(':', 1)[0].strip().lower()
    if head not in ('gl', 'spo'):
        raise ParseError(f'unknown algebra {text!r}, expected gl:N,M or spo:2n=X,M=Y', 0)
    position = len(text.split(':', 1)[0]) + 1 if ':' in text else len(text)
    raise ParseError(f'malformed ranks in {text!r}', position)


def _build(family: Family, n: int, m: int, text: str, position: int) -> AlgebraSpec:
    try:
        return AlgebraSpec(family, n, m)
    except InvalidAlgebra as error:
        raise ParseError(f'{text!r} is not a supported algebra: {error}', position)


def _parse_entries(text: str, offset: int) -> List[int]:
    values = []
    if not text.strip():
        return values
    position = offset
    for piece in text.split(','):
        stripped = piece.strip()
        start = position + (len(piece) - len(piece.lstrip()))
        if not _ENTRY.match(stripped):
            raise ParseError(f'{stripped!r} is not an integer or a half-integer a/2', start)
        values.append(int(Fraction(stripped) * 2))
        position += len(piece) + 1
    return values


def parse_weight(text: str, spec: Optional[AlgebraSpec] = None) -> Weight:
    """
    read `b0,b1,...;c0,c1,...` into a Weight, entries are integers or halves `a/2`.

    :param text: weight string, the part after ';' may be empty
    :param spec: when given, the number of entries is checked against it
    :return: Weight
    """
    if text.count(';') > 1:
        raise ParseError('a weight has at most one ";"', text.index(';', text.index(';') + 1))
    head, sep, tail = text.partition(';')
    doubled0 = _parse_entries(head, 0)
    doubled1 = _parse_entries(tail, len(head) + 1) if sep else []
    weight = Weight(tuple(doubled0), tuple(doubled1))
    if spec is not None and weight.dims != (spec.n, spec.m):
        raise ParseError(f'weight {text!r} has {len(doubled0)}+{len(doubled1)} entries, '
                         f'{spec.name} needs {spec.n}+{spec.m}', len(text))
    return weight


def parse_polynomial(text: str) -> QPolynomial:
    """
    read `c_k*q^k + ... + c_0`, or the JSON form `{"coeffs": {"k": c_k}}`.
    """
    stripped = text.strip()
    if stripped.startswith('{'):
        try:
            return QPolynomial.from_json(json.loads(stripped))
        except (ValueError, KeyError, TypeError, AttributeError) as error:
            raise ParseError(f'invalid polynomial json: {error}', 0)
    if stripped == '':
        raise ParseError('empty polynomial', 0)
    terms = {}
    position = 0
    first = True
    while position < len(text):
        match = _TERM.match(text, position)
        sign, coeff, var, power = match.group(1), match.group(2), match.group(3), match.group(5)
        if (coeff is None and var is None) or (sign is None and not first):
            if text[position:].strip() == '':
                break
            raise ParseError(f'unexpected {text[position:].strip()[:10]!r} in polynomial', position)
        value = int(coeff) if coeff is not None else 1
        value = -value if sign == '-' else value
        exp = (int(power) if power is not None else 1) if var is not None else 0
        terms[exp] = terms.get(exp, 0) + value
        position = match.end()
        first = False
    return QPolynomial(terms)
