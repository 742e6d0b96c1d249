#!/usr/bin/env python3
# coding: utf-8
"""
@author: superkostka team
@last modified by: superkostka team
@file:qpolynomial.py
@time:2026/10/12
"""
from collections import defaultdict
from typing import Dict, Iterable, List, Mapping, Tuple, Union


class QPolynomial(object):
    """
    sparse Laurent polynomial in q with python integer coefficients.

    Terms are kept as a tuple of (exponent, coefficient) pairs sorted by exponent, with no zero coefficient,
    so equality and hashing are structural.

    :param terms: mapping or iterable of (exponent, coefficient), repeated exponents are summed
    """
    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Union[Mapping[int, int], Iterable[Tuple[int, int]]] = ()):
        if isinstance(terms, Mapping):
            items = terms.items()
        else:
            acc = defaultdict(int)
            for exp, coeff in terms:
                acc[exp] += coeff
            items = acc.items()
        self.terms = tuple(sorted((int(e), int(c)) for e, c in items if c))
        self._hash = None

    @classmethod
    def monomial(cls, exp: int = 0, coeff: int = 1) -> 'QPolynomial':
        return cls({exp: coeff})

    @classmethod
    def constant(cls, value: int) -> 'QPolynomial':
        return cls({0: value})

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.terms)
        return self._hash

    def __eq__(self, other):
        if isinstance(other, int):
            other = QPolynomial.constant(other)
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self.terms == other.terms

    def __ne__(self, other):
        result = self.__eq__(other)
        return result if result is NotImplemented else not result

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f'QPolynomial({dict(self.terms)!r})'

    def __str__(self):
        return self.to_text()

    def as_dict(self) -> Dict[int, int]:
        return dict(self.terms)

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def degree(self):
        """
        largest exponent, None for the zero polynomial.
        :return:
        """
        return self.terms[-1][0] if self.terms else None

    @property
    def valuation(self):
        """
        smallest exponent, None for the zero polynomial.
        :return:
        """
        return self.terms[0][0] if self.terms else None

    def coefficient(self, exp: int) -> int:
        for e, c in self.terms:
            if e == exp:
                return c
        return 0

    def coefficients(self) -> List[int]:
        """
        dense coefficient list from the valuation up to the degree.
        :return:
        """
        if not self.terms:
            return []
        dense = dict(self.terms)
        return [dense.get(e, 0) for e in range(self.valuation, self.degree + 1)]

    def __add__(self, other):
        if isinstance(other, int):
            other = QPolynomial.constant(other)
        if not isinstance(other, QPolynomial):
            return NotImplemented
        if not other.terms:
            return self
        if not self.terms:
            return other
        acc = dict(self.terms)
        for e, c in other.terms:
            acc[e] = acc.get(e, 0) + c
        return QPolynomial(acc)

    __radd__ = __add__

    def __neg__(self):
        return QPolynomial({e: -c for e, c in self.terms})

    def __sub__(self, other):
        if isinstance(other, int):
            other = QPolynomial.constant(other)
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return QPolynomial.ZERO
            return QPolynomial({e: c * other for e, c in self.terms})
        if not isinstance(other, QPolynomial):
            return NotImplemented
        if not self.terms or not other.terms:
            return QPolynomial.ZERO
        acc = defaultdict(int)
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                acc[e1 + e2] += c1 * c2
        return QPolynomial(acc)

    __rmul__ = __mul__

    def shift(self, k: int) -> 'QPolynomial':
        """
        multiply by q^k.
        :param k: exponent shift, may be negative
        :return:
        """
        if k == 0 or not self.terms:
            return self
        return QPolynomial({e + k: c for e, c in self.terms})

    def at_one(self) -> int:
        """
        evaluate at q=1.
        :return:
        """
        return sum(c for _, c in self.terms)

    def evaluate(self, q):
        return sum(c * q ** e for e, c in self.terms)

    def is_nonnegative(self) -> bool:
        """
        True if every coefficient is >= 0.
        :return:
        """
        return all(c >= 0 for _, c in self.terms)

    def to_text(self) -> str:
        """
        render as `c*q^k + ...` by descending exponent, e.g. `q^3 + q^2 - q`.
        :return:
        """
        if not self.terms:
            return '0'
        pieces = []
        for e, c in reversed(self.terms):
            sign = '-' if c < 0 else '+'
            a = abs(c)
            if e == 0:
                body = str(a)
            else:
                var = 'q' if e == 1 else f'q^{e}'
                body = var if a == 1 else f'{a}*{var}'
            pieces.append((sign, body))
        first_sign, first_body = pieces[0]
        text = ('-' if first_sign == '-' else '') + first_body
        for sign, body in pieces[1:]:
            text += f' {sign} {body}'
        return text

    def to_json(self) -> Dict[str, Dict[str, int]]:
        """
        json friendly form `{"coeffs": {exp: coeff}}`, exponents as strings in descending order.
        :return:
        """
        return {'coeffs': {str(e): c for e, c in reversed(self.terms)}}

    @classmethod
    def from_json(cls, obj: Mapping) -> 'QPolynomial':
        return cls({int(e): int(c) for e, c in obj['coeffs'].items()})


QPolynomial.ZERO = QPolynomial()
QPolynomial.ONE = QPolynomial({0: 1})
QPolynomial.Q = QPolynomial({1: 1})


def qpoly_sum(polys: Iterable[QPolynomial]) -> QPolynomial:
    """
    add many polynomials with a single accumulator.
    :param polys: iterable of QPolynomial
    :return:
    """
    acc = defaultdict(int)
    for p in polys:
        for e, c in p.terms:
            acc[e] += c
    return QPolynomial(acc)
