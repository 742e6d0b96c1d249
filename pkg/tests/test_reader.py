#!/usr/bin/env python3
# coding: utf-8
"""
@file: test_reader.py
@description: parsing of algebras, weights and polynomials.
@author: superkostka team
@last modified by: superkostka team

change log:
    2026/10/18  create file.
"""
import pytest

from superkostka.core.algebra import AlgebraSpec, Family, Weight
from superkostka.core.qpolynomial import QPolynomial
from superkostka.exceptions import ParseError
from superkostka.io.reader import parse_algebra, parse_polynomial, parse_weight


@pytest.mark.parametrize('text, expected', [
    ('gl:3,3', AlgebraSpec(Family.GL, 3, 3)),
    (' gl : 2 , 1 ', AlgebraSpec(Family.GL, 2, 1)),
    ('spo:2n=2,M=5', AlgebraSpec(Family.SPO_ODD, 1, 2)),
    ('spo:2n=6,M=6', AlgebraSpec(Family.SPO_EVEN, 3, 3)),
    ('spo:2n=4,M=1', AlgebraSpec(Family.SPO_ODD, 2, 0)),
    ('spo:6,7', AlgebraSpec(Family.SPO_ODD, 3, 3)),
    ('spo:2,2', AlgebraSpec(Family.SPO_EVEN, 1, 1)),
])
def test_parse_algebra(text, expected):
    assert parse_algebra(text) == expected


@pytest.mark.parametrize('text', ['spo:2n=3,M=5', 'foo:1,2', 'gl:0,1', 'gl:2', 'spo:2,0', 'gl:a,b'])
def test_parse_algebra_errors(text):
    with pytest.raises(ParseError):
        parse_algebra(text)


def test_parse_algebra_error_position():
    with pytest.raises(ParseError) as error:
        parse_algebra('foo:1,2')
    assert error.value.position == 0
    with pytest.raises(ParseError) as error:
        parse_algebra('spo:2n=3,M=5')
    assert error.value.position == 7


def test_parse_weight():
    spec = AlgebraSpec(Family.GL, 3, 3)
    assert parse_weight('3,1,-2;4,2,-8', spec) == spec.weight([3, 1, -2], [4, 2, -8])
    assert parse_weight('1/2,-3/2;1') == Weight((1, -3), (2,))
    assert str(parse_weight('1/2,-3/2;1')) == '(1/2,-3/2;1)'
    spo21 = AlgebraSpec(Family.SPO_ODD, 1, 0)
    assert parse_weight('2;', spo21) == spo21.weight([2], [])
    assert parse_weight('2', spo21) == spo21.weight([2], [])


def test_parse_weight_errors():
    with pytest.raises(ParseError) as error:
        parse_weight('1,x;0')
    assert error.value.position == 2
    with pytest.raises(ParseError) as error:
        parse_weight('0;1,1/3')
    assert error.value.position == 4
    with pytest.raises(ParseError):
        parse_weight('1;2;3')
    with pytest.raises(ParseError):
        parse_weight('1;0', AlgebraSpec(Family.GL, 2, 1))


def test_parse_polynomial():
    assert parse_polynomial('3*q^2 + q - 1') == QPolynomial({2: 3, 1: 1, 0: -1})
    assert parse_polynomial('-q^3') == QPolynomial({3: -1})
    assert parse_polynomial('q^3 + q^2 - q') == QPolynomial({3: 1, 2: 1, 1: -1})
    assert parse_polynomial('0') == QPolynomial.ZERO
    assert parse_polynomial('{"coeffs": {"3": 1, "2": 1, "1": -1}}') == QPolynomial({3: 1, 2: 1, 1: -1})


def test_parse_polynomial_negative_exponents():
    assert parse_polynomial('q + 2*q^-1') == QPolynomial({1: 1, -1: 2})
    assert parse_polynomial('q^ -3') == QPolynomial({-3: 1})
    laurent = QPolynomial({2: 1, 0: 1, -2: -3})
    assert parse_polynomial(laurent.to_text()) == laurent


@pytest.mark.parametrize('text', ['q +', '', '2 3', '{"x": 1}', '{bad json'])
def test_parse_polynomial_errors(text):
    with pytest.raises(ParseError):
        parse_polynomial(text)
