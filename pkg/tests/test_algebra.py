#!/usr/bin/env python3
# coding: utf-8
"""
@author: superkostka team
@last modified by: superkostka team
@file:test_algebra.py
@time:2026/10/18
"""
from fractions import Fraction

import pytest

from superkostka.core.algebra import (AlgebraSpec, Family, Weight, positive_roots, inner, rho, is_dominant,
                                      is_finite_dim, is_typical, is_covariant, hook_diagram, covariant_from_diagram,
                                      conjugate, partitions, iter_covariant, iter_dominant, weyl_dimension)
from superkostka.exceptions import InvalidAlgebra, DimensionMismatch, NotDominant, NotApplicable, NotCovariant

GL11 = AlgebraSpec(Family.GL, 1, 1)
GL21 = AlgebraSpec(Family.GL, 2, 1)
SPO21 = AlgebraSpec(Family.SPO_ODD, 1, 0)
SPO22 = AlgebraSpec(Family.SPO_EVEN, 1, 1)
SPO25 = AlgebraSpec(Family.SPO_ODD, 1, 2)


def vectors(roots):
    return {r.vector for r in roots}


@pytest.mark.parametrize('family, n, m', [
    (Family.GL, 0, 1), (Family.GL, 1, 0), (Family.SPO_ODD, 0, 1), (Family.SPO_ODD, 1, -1), (Family.SPO_EVEN, 2, 0),
])
def test_invalid_ranks(family, n, m):
    with pytest.raises(InvalidAlgebra):
        AlgebraSpec(family, n, m)


def test_names():
    assert GL21.name == 'gl(2,1)'
    assert SPO25.name == 'spo(2,5)'
    assert SPO22.name == 'spo(2,2)'
    assert AlgebraSpec(Family.SPO_EVEN, 3, 3).name == 'spo(6,6)'
    assert GL21.stab_is_whole and SPO22.stab_is_whole and not SPO25.stab_is_whole


def test_weight_values():
    w = Weight.from_values([Fraction(1, 2), 2], [-3])
    assert w.doubled0 == (1, 4) and w.doubled1 == (-6,)
    assert w.part0 == (Fraction(1, 2), Fraction(2))
    assert w.size0 == Fraction(5, 2)
    assert not w.is_integral
    assert str(w) == '(1/2,2;-3)'
    assert w + w == w.scale(2)
    assert (w - w) == Weight.zero(2, 1)
    with pytest.raises(ValueError):
        Weight.from_values([Fraction(1, 3)], [])
    with pytest.raises(DimensionMismatch):
        w + Weight.zero(1, 1)


def test_positive_roots_spo_rank_one():
    roots = positive_roots(SPO21)
    assert vectors(roots.even) == {SPO21.weight([2], [])}
    assert vectors(roots.odd) == {SPO21.weight([1], [])}
    assert roots.odd_bar == ()


def test_positive_roots_gl11():
    roots = positive_roots(GL11)
    assert roots.even == ()
    assert vectors(roots.odd) == vectors(roots.odd_bar) == {GL11.weight([1], [-1])}


def test_positive_roots_spo_2n_2():
    roots = positive_roots(SPO22)
    assert vectors(roots.even) == {SPO22.weight([2], [0])}
    assert vectors(roots.odd) == {SPO22.weight([1], [1]), SPO22.weight([-1], [1])}


def test_positive_roots_counts():
    spec = AlgebraSpec(Family.SPO_ODD, 3, 3)
    roots = positive_roots(spec)
    # C3 has 9 positive roots, B3 has 9
    assert len(roots.even_n) == 9 and len(roots.even_m) == 9
    assert len(roots.odd) == 2 * 9 + 3
    gl = positive_roots(AlgebraSpec(Family.GL, 3, 3))
    assert len(gl.even) == 6 and len(gl.odd) == 9


def test_inner():
    assert inner(SPO25.unit('0', 1), SPO25.unit('0', 1)) == 1
    assert inner(SPO25.unit('1', 1), SPO25.unit('1', 1)) == -1
    assert inner(SPO25.unit('0', 1), SPO25.unit('1', 1)) == 0
    with pytest.raises(DimensionMismatch):
        inner(SPO25.zero(), GL11.zero())


def test_rho():
    assert rho(SPO25).rho == SPO25.weight([Fraction(-3, 2)], [Fraction(3, 2), Fraction(1, 2)])
    spec = AlgebraSpec(Family.SPO_ODD, 3, 2)
    # (n-m-1/2, ..., 1/2-m; m-1/2, ..., 1/2)
    assert rho(spec).rho == spec.weight([Fraction(1, 2), Fraction(-1, 2), Fraction(-3, 2)],
                                        [Fraction(3, 2), Fraction(1, 2)])
    assert rho(GL11).rho_plus == GL11.zero()
    assert rho(GL11).rho == GL11.weight([Fraction(-1, 2)], [Fraction(1, 2)])


def test_is_dominant():
    assert is_dominant(SPO25, SPO25.weight([2], [1, 1]))
    assert is_dominant(AlgebraSpec(Family.GL, 3, 3), Weight.from_values([3, 1, -2], [4, 2, -8]))
    assert not is_dominant(SPO25, Weight((2,), (4, 1)))
    assert not is_dominant(GL21, GL21.weight([0, 1], [0]))
    assert is_dominant(SPO22, SPO22.weight([1], [-3]))
    spo_d = AlgebraSpec(Family.SPO_EVEN, 1, 2)
    assert is_dominant(spo_d, spo_d.weight([0], [2, -1]))
    assert not is_dominant(spo_d, spo_d.weight([0], [1, -2]))


def test_is_finite_dim():
    assert is_finite_dim(SPO25, SPO25.weight([2], [1, 1]))
    assert not is_finite_dim(SPO25, SPO25.weight([1], [1, 1]))
    assert is_finite_dim(SPO25, SPO25.weight([3], [5, 0]))
    with pytest.raises(NotDominant):
        is_finite_dim(SPO25, SPO25.weight([-1], [0, 0]))


def test_is_typical():
    assert is_typical(SPO25, SPO25.weight([5], [1, 1]))
    assert is_typical(SPO25, SPO25.weight([2], [1, 1]))
    assert not is_typical(SPO25, SPO25.weight([3], [1, 1]))
    assert is_typical(GL11, GL11.weight([1], [0]))
    assert not is_typical(GL11, GL11.zero())


def test_covariant_and_hook_diagram():
    spec = AlgebraSpec(Family.GL, 3, 4)
    lam = spec.weight([9, 7, 5], [4, 3, 3, 2])
    assert is_covariant(spec, lam)
    assert hook_diagram(spec, lam) == (9, 7, 5, 4, 4, 3, 1)
    assert covariant_from_diagram(spec, (9, 7, 5, 4, 4, 3, 1)) == lam
    assert hook_diagram(spec, spec.weight([1, 0, 0], [0, 0, 0, 0])) == (1,)
    assert is_covariant(spec, spec.weight([2, 1, 1], [3, 0, 0, 0]))
    assert is_covariant(spec, spec.weight([2, 2, 0], [0, 0, 0, 0]))
    assert not is_covariant(spec, spec.weight([0, 0, 0], [1, 0, 0, 0]))
    # λ_min counts the zero entries of λ⁽⁰⁾
    assert not is_covariant(spec, spec.weight([2, 2, 0], [3, 0, 0, 0]))
    assert hook_diagram(GL21, GL21.weight([2, 2], [2])) == (2, 2, 1, 1)
    with pytest.raises(NotCovariant):
        hook_diagram(spec, spec.weight([0, 0, 0], [1, 0, 0, 0]))
    with pytest.raises(NotApplicable):
        is_covariant(SPO25, SPO25.zero())


def test_partitions_and_conjugate():
    assert list(partitions(4)) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert conjugate((4, 3, 3, 2)) == (4, 4, 3, 1)
    assert conjugate(()) == ()


def test_iter_covariant():
    found = list(iter_covariant(GL11, 2))
    assert GL11.zero() in found
    # (2), (1,1) and the single box, all of them fit the (1,1)-hook
    assert len(found) == 4
    assert all(is_covariant(GL11, lam) for lam in found)


def test_iter_dominant():
    weights = list(iter_dominant(SPO25, 0, 1, half=True))
    assert all(is_dominant(SPO25, w) for w in weights)
    assert SPO25.weight([1], [Fraction(1, 2), Fraction(1, 2)]) in weights
    assert len(set(weights)) == len(weights)


def test_weyl_dimension():
    assert weyl_dimension(GL21, GL21.weight([1, 0], [0])) == 2
    assert weyl_dimension(SPO21, SPO21.weight([1], [])) == 2
    assert weyl_dimension(GL11, GL11.weight([4], [-7])) == 1
    spec = AlgebraSpec(Family.GL, 3, 1)
    # adjoint of sl3
    assert weyl_dimension(spec, spec.weight([1, 0, -1], [0])) == 8
