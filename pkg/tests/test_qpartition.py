#!/usr/bin/env python3
# coding: utf-8
"""
@author: superkostka team
@last modified by: superkostka team
@file:test_qpartition.py
@time:2026/10/18
"""
import itertools

import pytest

from superkostka.algorithm.qpartition import (PartitionCache, root_block, lusztig_partition, f_q, p_q,
                                              p_q_convolution, c_q, c, c_q_support, c_lambda, lambda_odd_roots,
                                              odd_table)
from superkostka.core.algebra import AlgebraSpec, Family, Weight
from superkostka.core.qpolynomial import QPolynomial
from superkostka.tools.property_check import brute_force_partitions

GL11 = AlgebraSpec(Family.GL, 1, 1)
GL21 = AlgebraSpec(Family.GL, 2, 1)
GL22 = AlgebraSpec(Family.GL, 2, 2)
SPO21 = AlgebraSpec(Family.SPO_ODD, 1, 0)
SPO25 = AlgebraSpec(Family.SPO_ODD, 1, 2)
Q = QPolynomial.Q


def test_type_a1():
    rb = root_block(GL21, 'n')
    assert lusztig_partition(rb, (0, 0)) == QPolynomial.ONE
    for k in range(5):
        assert lusztig_partition(rb, (2 * k, -2 * k)) == QPolynomial.monomial(k)
    assert lusztig_partition(rb, (2, 0)) == QPolynomial.ZERO
    assert lusztig_partition(rb, (-2, 2)) == QPolynomial.ZERO


def test_type_c1():
    rb = root_block(SPO21, 'n')
    assert lusztig_partition(rb, (8,)) == QPolynomial.monomial(2)
    assert lusztig_partition(rb, (2,)) == QPolynomial.ZERO


def test_type_a2():
    rb = root_block(AlgebraSpec(Family.GL, 3, 1), 'n')
    # α1 + α2 is a root, so two expressions
    assert lusztig_partition(rb, (2, 0, -2)) == Q + Q * Q


@pytest.mark.parametrize('name, spec, block', [
    ('A1', GL21, 'n'),
    ('A2', AlgebraSpec(Family.GL, 3, 1), 'n'),
    ('C2', AlgebraSpec(Family.SPO_ODD, 2, 0), 'n'),
    ('B2', SPO25, 'm'),
    ('D2', AlgebraSpec(Family.SPO_EVEN, 1, 2), 'm'),
])
def test_against_enumeration(name, spec, block):
    rb = root_block(spec, block)
    counts = brute_force_partitions(list(rb.roots), 6)
    cache = PartitionCache()
    for beta in itertools.product(range(-6, 7, 2), repeat=rb.dim):
        assert lusztig_partition(rb, beta, cache).at_one() == counts.get(beta, 0), (name, beta)


def test_cache_budget():
    cache = PartitionCache(max_entries=0)
    lusztig_partition(root_block(GL22, 'n'), (4, -4), cache)
    assert len(cache) == 0
    cache = PartitionCache(max_entries=2)
    for i in range(3):
        cache.put(('key', i), QPolynomial.ONE)
    assert len(cache) == 1


def test_f_q():
    assert f_q(SPO25, SPO25.zero()) == QPolynomial.ONE
    # |η^(0)| < 0
    assert f_q(SPO25, SPO25.weight([-2], [1, 0])) == QPolynomial.ZERO
    assert f_q(GL21, GL21.weight([1, -1], [0])) == Q


def test_c_q():
    assert c_q(GL11, GL11.zero()) == QPolynomial.ONE
    assert c_q(GL11, GL11.weight([1], [-1])) == Q
    assert c_q(SPO25, SPO25.weight([2], [-1, -1])) == Q * Q
    assert c_q(SPO25, SPO25.weight([1], [-1, 0])) == Q
    assert c_q(SPO25, SPO25.weight([2], [-1, 0])) == Q * Q
    assert c(SPO25, SPO25.weight([2], [0, 0])) == 2


def test_c_q_gl_is_graded_count():
    for kappa in c_q_support(GL22):
        poly = c_q(GL22, kappa)
        assert poly == QPolynomial.monomial(int(kappa.size0), c(GL22, kappa))


def test_odd_table_total():
    table = odd_table(SPO25)
    # 2^|Δ₁⁺| subsets
    assert sum(p.at_one() for p in table.values()) == 2 ** 5


def test_p_q_routes_agree():
    for spec in (GL21, GL22, SPO25, AlgebraSpec(Family.SPO_EVEN, 1, 2)):
        for flat in itertools.product(range(-2, 5, 2), repeat=spec.n + spec.m):
            beta = Weight.from_flat(flat, spec.n)
            assert p_q(spec, beta) == p_q_convolution(spec, beta), (spec.name, beta)


def test_p_q_small():
    assert p_q(GL11, GL11.zero()) == QPolynomial.ONE
    assert p_q(GL11, GL11.weight([1], [-1])) == Q
    assert p_q(GL11, GL11.weight([2], [-2])) == QPolynomial.ZERO


def test_c_lambda():
    box = GL21.weight([1, 0], [0])
    assert lambda_odd_roots(GL21, box) == ((2, 0, -2),)
    assert c_lambda(GL21, box, GL21.weight([1, 0], [-1])) == 1
    assert c_lambda(GL21, box, GL21.zero()) == 1
    assert c_lambda(GL21, box, GL21.weight([0, 1], [-1])) == 0
