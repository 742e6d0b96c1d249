#!/usr/bin/env python3
# coding: utf-8
"""
@file: test_tools.py
@description: the query and property check tools.
@author: superkostka team
@last modified by: superkostka team

change log:
    2026/10/18  create file.
"""
import pytest

from superkostka.core.algebra import AlgebraSpec, Family
from superkostka.core.qpolynomial import QPolynomial
from superkostka.core.result import CheckReport
from superkostka.exceptions import InvalidAlgebra, NotApplicable, SuperKostkaError
from superkostka.tools import KostkaQuery, PropertyCheck

GL11 = AlgebraSpec(Family.GL, 1, 1)
GL21 = AlgebraSpec(Family.GL, 2, 1)
SPO25 = AlgebraSpec(Family.SPO_ODD, 1, 2)


def test_query_kpoly():
    lam, mu = SPO25.weight([2], [1, 1]), SPO25.weight([0], [2, 1])
    query = KostkaQuery(SPO25, method='kpoly', lam=lam, mu=mu, n_jobs=1)
    assert query.fit() == QPolynomial({3: 1, 2: 1, 1: -1})
    assert query.result == QPolynomial({3: 1, 2: 1, 1: -1})
    assert KostkaQuery(SPO25, method='KPOLY-STAB', lam=lam, mu=mu).fit() == QPolynomial({3: 1, 2: 1})
    assert KostkaQuery(SPO25, method='threshold', lam=lam, mu=mu).fit() == 3
    terms = KostkaQuery(SPO25, method='kpoly-terms', lam=lam, mu=mu).fit()
    assert len(terms.matrix) >= 3


def test_query_checks():
    with pytest.raises(SuperKostkaError):
        KostkaQuery(GL21, method='kostka')
    with pytest.raises(InvalidAlgebra):
        KostkaQuery('gl:2,1', method='kpoly')
    with pytest.raises(NotApplicable):
        KostkaQuery(GL21, method='kpoly', lam=GL21.zero()).fit()


def test_query_branch():
    lam = GL21.weight([1, 1], [0])
    assert KostkaQuery(GL21, method='dim', lam=lam).fit() == 4
    assert len(KostkaQuery(GL21, method='branch', lam=lam).fit()) == 3
    assert KostkaQuery(GL21, method='branch', lam=lam, gamma=GL21.weight([1, 0], [1])).fit() == 1
    # atypical covariant weights go through the covariant formulas
    assert KostkaQuery(GL11, method='branch', lam=GL11.zero()).fit() == {GL11.zero(): 1}
    char = KostkaQuery(GL11, method='char', lam=GL11.zero()).fit()
    assert char.entries == {GL11.zero(): QPolynomial.ONE}


def test_query_tableaux():
    table = KostkaQuery(GL21, method='tableaux', lam=GL21.weight([1, 0], [0])).fit()
    assert table.check_columns(['tableau', 'content', 'charge'])
    assert len(table.matrix) == 3
    table = KostkaQuery(GL11, method='tableaux', lam=GL11.weight([2], [1]), mu=GL11.weight([1], [2])).fit()
    assert len(table.matrix) == 1
    assert table.matrix['charge'].tolist() == [0]


def test_property_check_arguments():
    with pytest.raises(SuperKostkaError):
        PropertyCheck(method='everything')
    with pytest.raises(SuperKostkaError):
        PropertyCheck(method='positivity', max_rank=0)


def test_property_check_oracles():
    report = PropertyCheck(method='oracles', progress=False).fit()
    assert isinstance(report, CheckReport)
    assert not report.is_empty
    assert report.passed, report.failures.to_string()


def test_property_check_charge():
    report = PropertyCheck(method='charge', max_boxes=3, progress=False).fit()
    assert report.passed, report.failures.to_string()
    assert set(report.matrix['suite']) == {'charge'}


def test_property_check_sampled():
    report = PropertyCheck(method='positivity', seed=1, positivity_samples=5, max_rank=1, max_entry=2,
                           progress=False).fit()
    assert len(report.matrix) == 10
    assert report.passed, report.failures.to_string()
    report = PropertyCheck(method='stabilization', seed=1, stabilization_samples=4, max_rank=1, max_entry=2,
                           progress=False).fit()
    assert len(report.matrix) == 8
    assert report.passed, report.failures.to_string()


def test_property_check_conjectures_are_reported():
    report = PropertyCheck(method='positivity', seed=2, positivity_samples=3, max_rank=1, max_entry=2,
                           conjectures=True, progress=False).fit()
    observed = report.observations
    assert not observed.empty
    assert set(observed['suite']) == {'conjectures'}
    assert report.passed


@pytest.mark.slow
def test_property_check_routes():
    report = PropertyCheck(method='route', progress=False).fit()
    assert report.passed, report.failures.to_string()
    report = PropertyCheck(method='straighten', progress=False).fit()
    assert report.passed, report.failures.to_string()
