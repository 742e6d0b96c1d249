#!/usr/bin/env python3
# coding: utf-8
"""
@author: superkostka team
@last modified by: superkostka team
@file:algebra.py
@time:2026/10/12

change log:
    2026/10/12  create file, root data of gl(n,m) and spo(2n,M).
"""
import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, List, NamedTuple, Optional, Sequence, Tuple, Union

from ..exceptions import InvalidAlgebra, DimensionMismatch, NotDominant, NotCovariant, NotApplicable

Number = Union[int, Fraction, str]


class Family(str, Enum):
    GL = 'gl'
    SPO_ODD = 'spo_odd'
    SPO_EVEN = 'spo_even'


class Parity(str, Enum):
    EVEN = 'even'
    ODD = 'odd'


def _doubled(value: Number) -> int:
    v = Fraction(value)
    d = v * 2
    if d.denominator != 1:
        raise ValueError(f'{value} is not a half-integer, please check.')
    return int(d)


def _format_doubled(d: int) -> str:
    return str(d // 2) if d % 2 == 0 else f'{d}/2'


@dataclass(frozen=True)
class Weight:
    """
    weight (β^(0); β^(1)) of h*, entries are half-integers stored doubled.

    part0 is indexed (n̄, ..., 1̄) and part1 is indexed (1, ..., m).
    """
    doubled0: Tuple[int, ...]
    doubled1: Tuple[int, ...]

    @classmethod
    def from_values(cls, part0: Sequence[Number], part1: Sequence[Number]) -> 'Weight':
        return cls(tuple(_doubled(x) for x in part0), tuple(_doubled(x) for x in part1))

    @classmethod
    def from_flat(cls, doubled: Sequence[int], n: int) -> 'Weight':
        doubled = tuple(doubled)
        return cls(doubled[:n], doubled[n:])

    @classmethod
    def zero(cls, n: int, m: int) -> 'Weight':
        return cls((0,) * n, (0,) * m)

    @property
    def dims(self) -> Tuple[int, int]:
        return len(self.doubled0), len(self.doubled1)

    @property
    def flat(self) -> Tuple[int, ...]:
        return self.doubled0 + self.doubled1

    @property
    def part0(self) -> Tuple[Fraction, ...]:
        return tuple(Fraction(d, 2) for d in self.doubled0)

    @property
    def part1(self) -> Tuple[Fraction, ...]:
        return tuple(Fraction(d, 2) for d in self.doubled1)

    @property
    def size0(self) -> Fraction:
        """|β^(0)|"""
        return Fraction(sum(self.doubled0), 2)

    @property
    def size1(self) -> Fraction:
        """|β^(1)|"""
        return Fraction(sum(self.doubled1), 2)

    @property
    def is_integral(self) -> bool:
        return all(d % 2 == 0 for d in self.flat)

    def _check(self, other: 'Weight'):
        if self.dims != other.dims:
            raise DimensionMismatch(f'weights of shapes {self.dims} and {other.dims} can not be combined.')

    def __add__(self, other: 'Weight') -> 'Weight':
        self._check(other)
        return Weight(tuple(a + b for a, b in zip(self.doubled0, other.doubled0)),
                      tuple(a + b for a, b in zip(self.doubled1, other.doubled1)))

    def __sub__(self, other: 'Weight') -> 'Weight':
        self._check(other)
        return Weight(tuple(a - b for a, b in zip(self.doubled0, other.doubled0)),
                      tuple(a - b for a, b in zip(self.doubled1, other.doubled1)))

    def __neg__(self) -> 'Weight':
        return Weight(tuple(-a for a in self.doubled0), tuple(-a for a in self.doubled1))

    def scale(self, k: int) -> 'Weight':
        return Weight(tuple(k * a for a in self.doubled0), tuple(k * a for a in self.doubled1))

    def __str__(self):
        p0 = ','.join(_format_doubled(d) for d in self.doubled0)
        p1 = ','.join(_format_doubled(d) for d in self.doubled1)
        return f'({p0};{p1})'


@dataclass(frozen=True)
class Root:
    vector: Weight
    parity: Parity
    # 'n' or 'm' for even roots, None for odd roots
    block: Optional[str] = None

    def __str__(self):
        return str(self.vector)


@dataclass(frozen=True)
class AlgebraSpec:
    """
    one of gl(n,m), spo(2n,2m+1) (m >= 0) or spo(2n,2m) (m >= 1, m = 1 is spo(2n,2)).
    """
    family: Family
    n: int
    m: int

    def __post_init__(self):
        if not isinstance(self.family, Family):
            raise InvalidAlgebra(f'unknown family {self.family!r}, please check.')
        if not isinstance(self.n, int) or not isinstance(self.m, int):
            raise InvalidAlgebra('ranks n and m must be integers.')
        if self.n < 1:
            raise InvalidAlgebra(f'{self.family.value} requires n >= 1, got n={self.n}.')
        if self.family is Family.SPO_ODD:
            if self.m < 0:
                raise InvalidAlgebra(f'spo(2n,2m+1) requires m >= 0, got m={self.m}.')
        elif self.m < 1:
            raise InvalidAlgebra(f'{self.family.value} requires m >= 1, got m={self.m}.')

    @property
    def name(self) -> str:
        if self.family is Family.GL:
            return f'gl({self.n},{self.m})'
        if self.family is Family.SPO_ODD:
            return f'spo({2 * self.n},{2 * self.m + 1})'
        return f'spo({2 * self.n},{2 * self.m})'

    def __str__(self):
        return self.name

    @property
    def is_gl(self) -> bool:
        return self.family is Family.GL

    @property
    def is_spo(self) -> bool:
        return self.family is not Family.GL

    @property
    def stab_is_whole(self) -> bool:
        """W_stab = W for gl(n,m) and spo(2n,2)"""
        return self.family is Family.GL or (self.family is Family.SPO_EVEN and self.m == 1)

    @property
    def block_types(self) -> Tuple[str, str]:
        """
        classical types of g_n and g_m; 'T' is the rank one torus so(2), '' the empty block of spo(2n,1).
        :return:
        """
        if self.family is Family.GL:
            return 'A', 'A'
        if self.family is Family.SPO_ODD:
            return 'C', ('B' if self.m else '')
        return 'C', ('D' if self.m >= 2 else 'T')

    def zero(self) -> Weight:
        return Weight.zero(self.n, self.m)

    def omega(self) -> Weight:
        """ω = (1,...,1;0,...,0)"""
        return Weight((2,) * self.n, (0,) * self.m)

    def unit(self, block: str, index: int) -> Weight:
        """
        δ_ī (block '0') or δ_r (block '1') as a weight.

        :param block: '0' for a barred index, '1' for an unbarred one
        :param index: i or r, 1-based as in the alphabet
        :return:
        """
        if block == '0':
            d0 = [0] * self.n
            d0[self.n - index] = 2
            return Weight(tuple(d0), (0,) * self.m)
        d1 = [0] * self.m
        d1[index - 1] = 2
        return Weight((0,) * self.n, tuple(d1))

    def weight(self, part0: Sequence[Number], part1: Sequence[Number]) -> Weight:
        w = Weight.from_values(part0, part1)
        self.check_weight(w)
        return w

    def check_weight(self, *weights: Weight):
        for w in weights:
            if w.dims != (self.n, self.m):
                raise DimensionMismatch(f'weight {w} does not fit {self.name}, expected {self.n}+{self.m} entries.')


class PositiveRoots(NamedTuple):
    even: Tuple[Root, ...]
    odd: Tuple[Root, ...]
    odd_bar: Tuple[Root, ...]

    @property
    def even_n(self) -> Tuple[Root, ...]:
        return tuple(r for r in self.even if r.block == 'n')

    @property
    def even_m(self) -> Tuple[Root, ...]:
        return tuple(r for r in self.even if r.block == 'm')


def _vec(spec: AlgebraSpec, bar=(), unbar=()) -> Weight:
    """root vector from ((i, coefficient), ...) pairs of barred and unbarred indices"""
    d0 = [0] * spec.n
    d1 = [0] * spec.m
    for i, c in bar:
        d0[spec.n - i] += 2 * c
    for r, c in unbar:
        d1[r - 1] += 2 * c
    return Weight(tuple(d0), tuple(d1))


@lru_cache(maxsize=None)
def positive_roots(spec: AlgebraSpec) -> PositiveRoots:
    """
    positive even roots, positive odd roots and Δ̄₁⁺ of the distinguished Borel subalgebra, in table order.

    :param spec: the algebra
    :return: PositiveRoots(even, odd, odd_bar)
    """
    if not isinstance(spec, AlgebraSpec):
        raise InvalidAlgebra(f'{spec!r} is not an AlgebraSpec.')
    n, m = spec.n, spec.m
    even, odd = [], []
    ev = lambda block, **kw: Root(_vec(spec, **kw), Parity.EVEN, block)
    od = lambda **kw: Root(_vec(spec, **kw), Parity.ODD)

    if spec.family is Family.GL:
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                even.append(ev('n', bar=((j, 1), (i, -1))))
        for r in range(1, m + 1):
            for s in range(r + 1, m + 1):
                even.append(ev('m', unbar=((r, 1), (s, -1))))
        for i in range(1, n + 1):
            for r in range(1, m + 1):
                odd.append(od(bar=((i, 1),), unbar=((r, -1),)))
        return PositiveRoots(tuple(even), tuple(odd), tuple(odd))

    for i in range(1, n + 1):
        even.append(ev('n', bar=((i, 2),)))
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            even.append(ev('n', bar=((j, 1), (i, -1))))
            even.append(ev('n', bar=((j, 1), (i, 1))))
    if spec.family is Family.SPO_ODD:
        for r in range(1, m + 1):
            even.append(ev('m', unbar=((r, 1),)))
    if not (spec.family is Family.SPO_EVEN and m == 1):
        for r in range(1, m + 1):
            for s in range(r + 1, m + 1):
                even.append(ev('m', unbar=((r, 1), (s, -1))))
                even.append(ev('m', unbar=((r, 1), (s, 1))))

    odd_bar = []
    for i in range(1, n + 1):
        for r in range(1, m + 1):
            odd_bar.append(od(bar=((i, 1),), unbar=((r, 1),)))
            odd_bar.append(od(bar=((i, 1),), unbar=((r, -1),)))
    if spec.family is Family.SPO_EVEN and m == 1:
        for i in range(1, n + 1):
            odd.append(od(bar=((i, -1),), unbar=((1, 1),)))
            odd.append(od(bar=((i, 1),), unbar=((1, 1),)))
    else:
        odd.extend(odd_bar)
        if spec.family is Family.SPO_ODD:
            for i in range(1, n + 1):
                odd.append(od(bar=((i, 1),)))
    return PositiveRoots(tuple(even), tuple(odd), tuple(odd_bar))


def inner(x: Weight, y: Weight) -> Fraction:
    """
    ⟨x, y⟩ with ⟨δ_ī, δ_j̄⟩ = δ_ij, ⟨δ_r, δ_s⟩ = -δ_rs and ⟨δ_ī, δ_r⟩ = 0.
    """
    if x.dims != y.dims:
        raise DimensionMismatch(f'inner product of weights with shapes {x.dims} and {y.dims}.')
    s0 = sum(a * b for a, b in zip(x.doubled0, y.doubled0))
    s1 = sum(a * b for a, b in zip(x.doubled1, y.doubled1))
    return Fraction(s0 - s1, 4)


class Rho(NamedTuple):
    rho_plus: Weight
    rho_minus: Weight
    rho: Weight


@lru_cache(maxsize=None)
def rho(spec: AlgebraSpec) -> Rho:
    roots = positive_roots(spec)
    zero = spec.zero()
    # the half sum of integral vectors, doubled, is their plain sum
    plus = Weight.from_flat([sum(c) for c in zip(zero.flat, *(r.vector.flat for r in roots.even))], spec.n)
    minus = Weight.from_flat([sum(c) for c in zip(zero.flat, *(r.vector.flat for r in roots.odd))], spec.n)
    plus = Weight(tuple(d // 2 for d in plus.doubled0), tuple(d // 2 for d in plus.doubled1))
    minus = Weight(tuple(d // 2 for d in minus.doubled0), tuple(d // 2 for d in minus.doubled1))
    return Rho(plus, minus, plus - minus)


def _weakly_decreasing(values: Sequence[int]) -> bool:
    return all(a >= b for a, b in zip(values, values[1:]))


def is_dominant(spec: AlgebraSpec, lam: Weight) -> bool:
    spec.check_weight(lam)
    d0, d1 = lam.doubled0, lam.doubled1
    if spec.is_gl:
        return lam.is_integral and _weakly_decreasing(d0) and _weakly_decreasing(d1)
    if any(d % 2 for d in d0) or not _weakly_decreasing(d0) or d0[-1] < 0:
        return False
    if not d1:
        return True
    if len({d % 2 for d in d1}) > 1:
        return False
    if spec.family is Family.SPO_ODD:
        return _weakly_decreasing(d1) and d1[-1] >= 0
    if spec.m == 1:
        return True
    return _weakly_decreasing(d1[:-1]) and d1[-2] >= abs(d1[-1])


def _require_dominant(spec: AlgebraSpec, lam: Weight):
    if not is_dominant(spec, lam):
        raise NotDominant(f'{lam} is not a dominant weight of {spec.name}, please check.')


def is_finite_dim(spec: AlgebraSpec, lam: Weight) -> bool:
    """
    λ^(1)_j = 0 for every j > λ^(0)_1̄; always true for gl(n,m).
    """
    _require_dominant(spec, lam)
    if spec.is_gl:
        return True
    last = lam.doubled0[-1] // 2
    return all(d == 0 for j, d in enumerate(lam.doubled1, start=1) if j > last)


def is_typical(spec: AlgebraSpec, lam: Weight) -> bool:
    _require_dominant(spec, lam)
    shifted = lam + rho(spec).rho
    return all(inner(shifted, alpha.vector) != 0 for alpha in positive_roots(spec).odd_bar)


def conjugate(partition: Sequence[int]) -> Tuple[int, ...]:
    """
    conjugate partition, zeros ignored.
    """
    parts = [p for p in partition if p > 0]
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p > j) for j in range(parts[0]))


def _require_gl(spec: AlgebraSpec, what: str):
    if not spec.is_gl:
        raise NotApplicable(f'{what} is only defined for gl(n,m), got {spec.name}.')


def is_covariant(spec: AlgebraSpec, lam: Weight) -> bool:
    """
    λ ∈ Y⁺(n,m): λ^(0) and λ^(1) are partitions and the conjugate of λ^(1) has its first part
    bounded by the last entry of λ^(0), so that the juxtaposed rows form an (n,m)-hook diagram.
    """
    _require_gl(spec, 'is_covariant')
    spec.check_weight(lam)
    if not lam.is_integral:
        return False
    p0 = [d // 2 for d in lam.doubled0]
    p1 = [d // 2 for d in lam.doubled1]
    if any(x < 0 for x in p0 + p1) or not _weakly_decreasing(p0) or not _weakly_decreasing(p1):
        return False
    length1 = sum(1 for x in p1 if x > 0)
    return length1 <= p0[-1]


def hook_diagram(spec: AlgebraSpec, lam: Weight) -> Tuple[int, ...]:
    """
    row lengths of Y(λ): the rows of λ^(0) followed by the rows of (λ^(1))′.

    :return: tuple of positive row lengths
    """
    if not is_covariant(spec, lam):
        raise NotCovariant(f'{lam} is not a covariant weight of {spec.name}.')
    rows = [d // 2 for d in lam.doubled0 if d > 0]
    rows.extend(conjugate([d // 2 for d in lam.doubled1]))
    return tuple(rows)


def covariant_from_diagram(spec: AlgebraSpec, rows: Sequence[int]) -> Weight:
    """
    inverse of hook_diagram for an (n,m)-hook partition.
    """
    _require_gl(spec, 'covariant_from_diagram')
    rows = [r for r in rows if r > 0]
    if len(rows) > spec.n and rows[spec.n] > spec.m:
        raise NotCovariant(f'{tuple(rows)} has a box at ({spec.n + 1},{spec.m + 1}).')
    p0 = (rows + [0] * spec.n)[:spec.n]
    cols = conjugate(rows)
    p1 = [max(c - spec.n, 0) for c in cols] + [0] * spec.m
    return spec.weight(p0, p1[:spec.m])


def partitions(total: int, max_part: Optional[int] = None) -> Iterator[Tuple[int, ...]]:
    """
    partitions of `total` in decreasing lexicographic order.
    """
    if max_part is None:
        max_part = total
    if total == 0:
        yield ()
        return
    for first in range(min(total, max_part), 0, -1):
        for rest in partitions(total - first, first):
            yield (first,) + rest


def iter_covariant(spec: AlgebraSpec, max_boxes: int) -> Iterator[Weight]:
    """
    every covariant weight whose hook diagram has at most `max_boxes` boxes (the empty one included).
    """
    _require_gl(spec, 'iter_covariant')
    for k in range(max_boxes + 1):
        for rows in partitions(k):
            if len(rows) > spec.n and rows[spec.n] > spec.m:
                continue
            yield covariant_from_diagram(spec, rows)


def _block_candidates(length: int, values: Sequence[int], d_type: bool) -> List[Tuple[int, ...]]:
    cands = [tuple(c) for c in itertools.combinations_with_replacement(sorted(values, reverse=True), length)]
    if d_type and length >= 2:
        cands.extend(c[:-1] + (-c[-1],) for c in list(cands) if c[-1] > 0)
    return cands


def iter_dominant(spec: AlgebraSpec, low: int, high: int, half: bool = False) -> Iterator[Weight]:
    """
    dominant weights with entries in [low, high].

    :param spec: the algebra
    :param low: smallest entry
    :param high: largest entry
    :param half: also produce spo weights whose part1 consists of half-integers
    :return: generator of Weight
    """
    d0_values = range(2 * low, 2 * high + 1, 2)
    d1_sets = [range(2 * low, 2 * high + 1, 2)]
    if half and spec.is_spo:
        d1_sets.append(range(2 * low + 1, 2 * high, 2))
    d_type = spec.block_types[1] == 'D'
    for d0 in _block_candidates(spec.n, d0_values, False):
        for values in d1_sets:
            for d1 in _block_candidates(spec.m, values, d_type):
                lam = Weight(d0, d1)
                if is_dominant(spec, lam):
                    yield lam


def weyl_dimension(spec: AlgebraSpec, gamma: Weight) -> int:
    """
    dimension of the simple g0-module of highest weight γ, by Weyl's product formula.
    """
    _require_dominant(spec, gamma)
    rho_plus = rho(spec).rho_plus
    shifted = gamma + rho_plus
    value = Fraction(1)
    for alpha in positive_roots(spec).even:
        value *= inner(shifted, alpha.vector) / inner(rho_plus, alpha.vector)
    if value.denominator != 1:
        raise ValueError(f'{gamma} is not integral for {spec.name}, please check.')
    return int(value)
