#!/usr/bin/env python3
# coding: utf-8
"""
@author: superkostka team
@last modified by: superkostka team
@file:test_tableaux.py
@time:2026/10/18
"""
import pytest

from superkostka.algorithm import qanalogs
from superkostka.algorithm.tableaux import (ClassicalTableau, HookTableau, branching_from_tableaux, charge,
                                            enumerate_ssht, iter_ssyt, jdt_rectify, kostka_charge, kostka_foulkes,
                                            kostka_g0_charge, rs_insert, split, super_charge)
from superkostka.core.algebra import AlgebraSpec, Family, is_dominant
from superkostka.core.qpolynomial import QPolynomial
from superkostka.exceptions import NotApplicable, NotDominant, NotDominantContent

GL11 = AlgebraSpec(Family.GL, 1, 1)
GL21 = AlgebraSpec(Family.GL, 2, 1)
Q = QPolynomial.Q


def test_charge():
    assert charge(ClassicalTableau(((1, 2),))) == 1
    assert charge(ClassicalTableau(((1,), (2,)))) == 0
    assert charge(ClassicalTableau(((1, 1, 2), (2,)))) == 1
    # key tableaux have charge 0
    assert charge(ClassicalTableau(((1, 1, 1), (2, 2), (3,)))) == 0
    with pytest.raises(NotDominantContent):
        charge(ClassicalTableau(((2,),)))


@pytest.mark.parametrize('shape, content, expected', [
    ((2,), (1, 1), Q),
    ((1, 1), (1, 1), QPolynomial.ONE),
    ((2, 1), (1, 1, 1), Q + Q * Q),
    ((3,), (1, 1, 1), QPolynomial.monomial(3)),
    ((3, 1), (2, 2), Q),
    ((2, 2), (2, 1, 1), Q),
])
def test_kostka_foulkes(shape, content, expected):
    assert kostka_foulkes(shape, content) == expected


def test_kostka_foulkes_at_one():
    # K_{λ,1^n}(1) counts standard tableaux
    assert kostka_foulkes((3, 2), (1, 1, 1, 1, 1)).at_one() == 5
    assert len(list(iter_ssyt((3, 2), (1, 1, 1, 1, 1)))) == 5
    with pytest.raises(NotDominantContent):
        kostka_foulkes((2,), (0, 2))


def test_jdt_rectify():
    skew = ClassicalTableau(((1, 2), (2, 3), (2,)), inner=(1, 1, 0))
    assert skew.is_semistandard()
    bottom = jdt_rectify(skew, policy='bottom')
    top = jdt_rectify(skew, policy='top')
    assert bottom == top
    assert bottom.is_straight and bottom.is_semistandard()
    assert bottom == rs_insert(skew.reading_word())
    with pytest.raises(ValueError):
        jdt_rectify(skew, policy='left')


def test_rs_insert():
    assert rs_insert([2, 1]) == ClassicalTableau(((1,), (2,)))
    assert rs_insert([1, 3, 2, 2]) == ClassicalTableau(((1, 2, 2), (3,)))
    assert rs_insert([]) == ClassicalTableau(())


def test_split():
    t = HookTableau(GL11, ((-1, 1), (1,)))
    assert t.is_valid()
    t0, t1 = split(t)
    assert t0 == ClassicalTableau(((1,),))
    assert t1 == ClassicalTableau(((1, 1),))
    assert super_charge(t) == 0
    # only barred letters
    t0, t1 = split(HookTableau(GL21, ((-2,), (-1,))))
    assert t0 == ClassicalTableau(((1,), (2,)))
    assert t1 == ClassicalTableau(())


def test_hook_tableau_rules():
    assert not HookTableau(GL21, ((1,), (-1,))).is_valid()
    assert not HookTableau(GL21, ((1, 1),)).is_valid()
    assert not HookTableau(GL21, ((-1,), (-1,))).is_valid()
    assert HookTableau(GL21, ((-1, -1),)).is_valid()
    assert HookTableau(GL21, ((1,), (1,))).is_valid()
    assert HookTableau(GL21, ((-2, -1),)).content() == GL21.weight([1, 1], [0])


def test_enumerate_ssht():
    box = GL21.weight([1, 0], [0])
    assert len(enumerate_ssht(GL21, box)) == 3
    assert len(enumerate_ssht(GL11, GL11.weight([1], [0]))) == 2
    assert len(enumerate_ssht(GL11, GL11.zero())) == 1
    assert enumerate_ssht(GL11, GL11.weight([2], [1]), GL11.weight([1], [2])) == [
        HookTableau(GL11, ((-1, 1), (1,)))
    ]
    # content of the wrong size
    assert enumerate_ssht(GL21, box, GL21.weight([1, 1], [0])) == []


def test_kostka_charge():
    box = GL21.weight([1, 0], [0])
    assert kostka_charge(GL21, box, GL21.weight([1, 0], [0])) == QPolynomial.ONE
    assert kostka_charge(GL21, box, GL21.weight([0, 0], [1])) == Q
    assert kostka_charge(GL11, GL11.weight([2], [1]), GL11.weight([1], [2])) == Q
    with pytest.raises(NotDominant):
        kostka_charge(GL21, box, GL21.weight([0, 1], [0]))
    spo = AlgebraSpec(Family.SPO_ODD, 1, 1)
    with pytest.raises(NotApplicable):
        kostka_charge(spo, spo.zero(), spo.zero())


@pytest.mark.parametrize('spec, lam', [
    (GL11, GL11.weight([2], [1])),
    (GL21, GL21.weight([2, 1], [0])),
    (GL21, GL21.weight([1, 1], [1])),
])
def test_charge_matches_alternating_sum(spec, lam):
    size = lam.size0 + lam.size1
    for mu in qanalogs.covariant_box(spec, lam).weights(lam):
        if mu.size0 + mu.size1 != size or not is_dominant(spec, mu):
            continue
        assert kostka_charge(spec, lam, mu) == qanalogs.kostka_covariant(spec, lam, mu)


def test_kostka_g0_charge():
    gamma = GL21.weight([1, 1], [0])
    assert kostka_g0_charge(GL21, gamma, gamma) == QPolynomial.ONE
    assert kostka_g0_charge(GL21, GL21.weight([2, 0], [0]), GL21.weight([1, 1], [0])) == Q


def test_branching_from_tableaux():
    lam = GL21.weight([1, 1], [0])
    expected = {GL21.weight([1, 1], [0]): 1, GL21.weight([1, 0], [1]): 1, GL21.weight([0, 0], [2]): 1}
    assert branching_from_tableaux(GL21, lam) == expected
    assert branching_from_tableaux(GL21, lam) == qanalogs.branching_decomposition(GL21, lam)
