#!/usr/bin/env python3
# coding: utf-8
"""
@author: superkostka team
@last modified by: superkostka team
@file:test_qpolynomial.py
@time:2026/10/18
"""
from superkostka.core.qpolynomial import QPolynomial, qpoly_sum


def test_normal_form():
    p = QPolynomial([(2, 1), (1, 3), (2, -1), (0, 0)])
    assert p.terms == ((1, 3),)
    assert QPolynomial({3: 0}) == QPolynomial.ZERO
    assert not QPolynomial.ZERO
    assert QPolynomial.ZERO.degree is None and QPolynomial.ZERO.valuation is None


def test_arithmetic():
    q = QPolynomial.Q
    p = q * q + q - 1
    assert p == QPolynomial({2: 1, 1: 1, 0: -1})
    assert p - p == QPolynomial.ZERO
    assert (q + 1) * (q - 1) == q * q - 1
    assert 3 * q == QPolynomial({1: 3})
    assert p.shift(2) == QPolynomial({4: 1, 3: 1, 2: -1})
    assert q.shift(-3) == QPolynomial({-2: 1})
    assert QPolynomial.ONE == 1
    assert hash(QPolynomial({1: 2})) == hash(QPolynomial([(1, 1), (1, 1)]))


def test_evaluation():
    p = QPolynomial({3: 1, 2: 1, 1: -1})
    assert p.at_one() == 1
    assert p.evaluate(2) == 10
    assert not p.is_nonnegative()
    assert QPolynomial({3: 1, 2: 1}).is_nonnegative()
    assert p.coefficients() == [-1, 1, 1]
    assert p.degree == 3 and p.valuation == 1


def test_text():
    assert QPolynomial({3: 1, 2: 1, 1: -1}).to_text() == 'q^3 + q^2 - q'
    assert QPolynomial({2: 3, 0: -1}).to_text() == '3*q^2 - 1'
    assert QPolynomial({1: -2}).to_text() == '-2*q'
    assert QPolynomial.ZERO.to_text() == '0'


def test_json():
    p = QPolynomial({3: 1, 2: 1, 1: -1})
    assert p.to_json() == {'coeffs': {'3': 1, '2': 1, '1': -1}}
    assert QPolynomial.from_json(p.to_json()) == p


def test_big_coefficients():
    p = QPolynomial({0: 10 ** 30})
    assert (p * p).coefficient(0) == 10 ** 60


def test_sum():
    polys = [QPolynomial.monomial(k) for k in range(5)] + [QPolynomial.monomial(2, -1)]
    assert qpoly_sum(polys) == QPolynomial({0: 1, 1: 1, 3: 1, 4: 1})
    assert qpoly_sum([]) == QPolynomial.ZERO
