#!/usr/bin/env python3
# coding: utf-8
"""
@author: superkostka team
@last modified by: superkostka team
@file:weyl.py
@time:2026/10/12

change log:
    2026/10/12  create file, W = W_n x W_m as pairs of signed permutations.
"""
import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

from .algebra import AlgebraSpec, Family, Weight
from ..config import sk_conf
from ..exceptions import GroupTooLarge, InvalidAlgebra


def _perm_sign(perm: Sequence[int]) -> int:
    inversions = sum(1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j])
    return -1 if inversions % 2 else 1


@dataclass(frozen=True)
class WeylElement:
    """
    w = (w^(0), w^(1)); on each block (w β)_i = signs[i] * β[perm[i]].
    """
    perm0: Tuple[int, ...]
    signs0: Tuple[int, ...]
    perm1: Tuple[int, ...]
    signs1: Tuple[int, ...]

    @classmethod
    def identity(cls, n: int, m: int) -> 'WeylElement':
        return cls(tuple(range(n)), (1,) * n, tuple(range(m)), (1,) * m)

    @property
    def is_identity(self) -> bool:
        return (self.perm0 == tuple(range(len(self.perm0))) and self.perm1 == tuple(range(len(self.perm1)))
                and all(s == 1 for s in self.signs0 + self.signs1))

    def __mul__(self, other: 'WeylElement') -> 'WeylElement':
        """self ∘ other"""
        p0 = tuple(other.perm0[k] for k in self.perm0)
        s0 = tuple(a * other.signs0[k] for a, k in zip(self.signs0, self.perm0))
        p1 = tuple(other.perm1[k] for k in self.perm1)
        s1 = tuple(a * other.signs1[k] for a, k in zip(self.signs1, self.perm1))
        return WeylElement(p0, s0, p1, s1)

    def __str__(self):
        def block(perm, signs):
            return ' '.join(('-' if s < 0 else '') + str(p + 1) for p, s in zip(perm, signs))
        return f'[{block(self.perm0, self.signs0)} | {block(self.perm1, self.signs1)}]'


def check_element(spec: AlgebraSpec, w: WeylElement) -> WeylElement:
    """
    validate w against the Weyl group of spec.
    """
    n, m = spec.n, spec.m
    if sorted(w.perm0) != list(range(n)) or sorted(w.perm1) != list(range(m)) \
            or len(w.signs0) != n or len(w.signs1) != m:
        raise InvalidAlgebra(f'{w} is not a signed permutation pair of sizes ({n},{m}).')
    if any(s not in (1, -1) for s in w.signs0 + w.signs1):
        raise InvalidAlgebra(f'{w} has signs outside +1/-1.')
    if spec.is_gl and any(s == -1 for s in w.signs0 + w.signs1):
        raise InvalidAlgebra(f'{w} has sign changes, not in the Weyl group of {spec.name}.')
    if spec.family is Family.SPO_EVEN:
        if m == 1 and w.signs1 != (1,):
            raise InvalidAlgebra(f'{w} acts on the so(2) block of {spec.name}.')
        if m >= 2 and w.signs1.count(-1) % 2:
            raise InvalidAlgebra(f'{w} has an odd number of sign changes in the type D block.')
    return w


def sign(w: WeylElement) -> int:
    """
    ε(w): product over both blocks of the determinant of the signed permutation matrix.
    """
    value = _perm_sign(w.perm0) * _perm_sign(w.perm1)
    for s in w.signs0 + w.signs1:
        value *= s
    return value


def act(w: WeylElement, beta: Weight) -> Weight:
    d0, d1 = beta.doubled0, beta.doubled1
    if len(d0) != len(w.perm0) or len(d1) != len(w.perm1):
        raise InvalidAlgebra(f'{w} can not act on {beta}.')
    return Weight(tuple(s * d0[p] for p, s in zip(w.perm0, w.signs0)),
                  tuple(s * d1[p] for p, s in zip(w.perm1, w.signs1)))


def act_flat(w: WeylElement, flat: Tuple[int, ...], n: int) -> Tuple[int, ...]:
    """act on a doubled flat vector, used in the hot loops"""
    return tuple(s * flat[p] for p, s in zip(w.perm0, w.signs0)) + \
        tuple(s * flat[n + p] for p, s in zip(w.perm1, w.signs1))


def dot(w: WeylElement, beta: Weight, shift: Weight) -> Weight:
    """
    w(β + shift) - shift; shift is ρ, ρ₊ or a block restriction of ρ₊, chosen by the caller.
    """
    return act(w, beta + shift) - shift


def _block_sizes(spec: AlgebraSpec, stabilized: bool) -> Tuple[int, int]:
    n, m = spec.n, spec.m
    if spec.is_gl:
        return math.factorial(n), math.factorial(m)
    size_n = math.factorial(n) if stabilized and not spec.stab_is_whole else 2 ** n * math.factorial(n)
    if spec.family is Family.SPO_ODD:
        size_m = 2 ** m * math.factorial(m)
    elif m == 1:
        size_m = 1
    else:
        size_m = 2 ** (m - 1) * math.factorial(m)
    return size_n, size_m


def group_order(spec: AlgebraSpec, stabilized: bool = False) -> int:
    size_n, size_m = _block_sizes(spec, stabilized)
    return size_n * size_m


def _signs(length: int, free: bool, even: bool = False) -> List[Tuple[int, ...]]:
    if not free:
        return [(1,) * length]
    choices = list(itertools.product((1, -1), repeat=length))
    if even:
        choices = [c for c in choices if c.count(-1) % 2 == 0]
    return choices


def _block_elements(spec: AlgebraSpec, block: str, stabilized: bool) -> List[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    if block == 'n':
        free = spec.is_spo and not (stabilized and not spec.stab_is_whole)
        signs = _signs(spec.n, free)
        return [(p, s) for p in itertools.permutations(range(spec.n)) for s in signs]
    if spec.family is Family.SPO_EVEN and spec.m == 1:
        return [((0,), (1,))]
    free = spec.is_spo
    signs = _signs(spec.m, free, even=spec.family is Family.SPO_EVEN)
    return [(p, s) for p in itertools.permutations(range(spec.m)) for s in signs]


def _check_cap(spec: AlgebraSpec, size: int, cap: Optional[int]) -> int:
    cap = sk_conf.weyl_cap if cap is None else cap
    if size > cap:
        raise GroupTooLarge(f'the Weyl group of {spec.name} has {size} elements, more than the cap {cap}.')
    return cap


@lru_cache(maxsize=64)
def _enumerate(spec: AlgebraSpec, stabilized: bool) -> Tuple[WeylElement, ...]:
    elements = []
    for p0, s0 in _block_elements(spec, 'n', stabilized):
        for p1, s1 in _block_elements(spec, 'm', stabilized):
            elements.append(WeylElement(p0, s0, p1, s1))
    return tuple(elements)


def enumerate_w(spec: AlgebraSpec, cap: Optional[int] = None) -> Tuple[WeylElement, ...]:
    """
    all elements of W = W_n x W_m, in lexicographic order of (perm0, signs0, perm1, signs1).

    :param spec: the algebra
    :param cap: largest allowed |W|, default `sk_conf.weyl_cap`
    :return: tuple of WeylElement
    """
    _check_cap(spec, group_order(spec), cap)
    return _enumerate(spec, False)


def enumerate_w_stab(spec: AlgebraSpec, cap: Optional[int] = None) -> Tuple[WeylElement, ...]:
    """
    W_stab: W itself for gl(n,m) and spo(2n,2), S_n x W_m otherwise.
    """
    if spec.stab_is_whole:
        return enumerate_w(spec, cap)
    _check_cap(spec, group_order(spec, stabilized=True), cap)
    return _enumerate(spec, True)


@lru_cache(maxsize=64)
def enumerate_block(spec: AlgebraSpec, block: str, stabilized: bool = False) -> Tuple[WeylElement, ...]:
    """
    elements of W_n (block 'n') or W_m (block 'm') embedded in W, identity on the other block.
    With `stabilized` the n-block is restricted to S_n.
    """
    if block not in ('n', 'm'):
        raise InvalidAlgebra(f'block should be "n" or "m", got {block!r}.')
    ident_n = (tuple(range(spec.n)), (1,) * spec.n)
    ident_m = (tuple(range(spec.m)), (1,) * spec.m)
    if block == 'n':
        stab = stabilized and spec.is_spo
        sign_free = spec.is_spo and not stab
        return tuple(WeylElement(p, s, *ident_m)
                     for p in itertools.permutations(range(spec.n)) for s in _signs(spec.n, sign_free))
    return tuple(WeylElement(*ident_n, p, s) for p, s in _block_elements(spec, 'm', False))
