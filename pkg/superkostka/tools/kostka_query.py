#!/usr/bin/env python3
# coding: utf-8
"""
@author: superkostka team
@last modified by: superkostka team
@file:kostka_query.py
@time:2026/10/16

change log:
    2026/10/16  create file, one query on one algebra.
"""
from typing import Optional

import pandas as pd
from typing_extensions import Literal

from ..algorithm import qanalogs
from ..algorithm.tableaux import iter_ssht, super_charge, kostka_charge
from ..core.algebra import AlgebraSpec, Weight, is_covariant, is_dominant, is_finite_dim, is_typical
from ..core.result import SuperKostkaResult
from ..core.tool_base import ToolBase
from ..exceptions import NotApplicable, NotDominantContent


class KostkaQuery(ToolBase):
    """
    compute one q-analog, multiplicity or character on an algebra.

    :param spec: the algebra
    :param method: one of `COMMANDS`
    :param lam: highest weight λ
    :param mu: weight μ
    :param gamma: g0 highest weight γ, for `kg0` and `branch`
    :param box: weight box of `char`
    :param shift: dot shift of `kg0`, 'rho_plus' or 'rho'
    :param n_jobs: workers of the Weyl sums
    """
    COMMANDS = ('kpoly', 'kpoly-stab', 'kpoly-cov', 'kpoly-charge', 'kpoly-terms', 'kg0', 'branch',
                'branch-stab', 'threshold', 'stab-point', 'char', 'dim', 'tableaux')

    def __init__(
            self,
            spec: AlgebraSpec,
            method: str = 'kpoly',
            lam: Optional[Weight] = None,
            mu: Optional[Weight] = None,
            gamma: Optional[Weight] = None,
            box: Optional['qanalogs.WeightBox'] = None,
            shift: Literal['rho_plus', 'rho'] = 'rho_plus',
            n_jobs: Optional[int] = None,
    ):
        super(KostkaQuery, self).__init__(spec=spec, method=method, n_jobs=n_jobs)
        self._method_check(method, self.COMMANDS)
        self.lam = lam
        self.mu = mu
        self.gamma = gamma
        self.box = box
        self.shift = shift

    def _need(self, **weights):
        for name, value in weights.items():
            if value is None:
                self.logger.error(f'{self.method} needs --{name}.')
                raise NotApplicable(f'{self.method} needs a value for {name}.')
        self.spec.check_weight(*weights.values())

    def _warn_atypical(self):
        if is_dominant(self.spec, self.lam) and not (is_finite_dim(self.spec, self.lam)
                                                     and is_typical(self.spec, self.lam)):
            self.logger.warning(f'{self.lam} is not typical and finite-dimensional for {self.spec.name}, '
                                f'the polynomial has no multiplicity meaning.')

    @ToolBase.fit_log
    def fit(self):
        """
        run the query
        :return: QPolynomial, int, dict, GradedCharacter or a result table depending on the method
        """
        handler = getattr(self, '_run_' + self.method.replace('-', '_'))
        self.result = handler()
        return self.result

    def _run_kpoly(self):
        self._need(lam=self.lam, mu=self.mu)
        self._warn_atypical()
        return qanalogs.kostka_typical(self.spec, self.lam, self.mu, n_jobs=self.n_jobs)

    def _run_kpoly_stab(self):
        self._need(lam=self.lam, mu=self.mu)
        return qanalogs.kostka_stab(self.spec, self.lam, self.mu, n_jobs=self.n_jobs)

    def _run_kpoly_cov(self):
        self._need(lam=self.lam, mu=self.mu)
        return qanalogs.kostka_covariant(self.spec, self.lam, self.mu, n_jobs=self.n_jobs)

    def _run_kpoly_charge(self):
        self._need(lam=self.lam, mu=self.mu)
        return kostka_charge(self.spec, self.lam, self.mu)

    def _run_kpoly_terms(self):
        self._need(lam=self.lam, mu=self.mu)
        return qanalogs.kostka_typical_terms(self.spec, self.lam, self.mu)

    def _run_kg0(self):
        self._need(gamma=self.gamma, mu=self.mu)
        return qanalogs.kostka_g0(self.spec, self.gamma, self.mu, shift=self.shift, n_jobs=self.n_jobs)

    def _covariant_route(self) -> bool:
        return self.spec.is_gl and is_covariant(self.spec, self.lam) and not is_typical(self.spec, self.lam)

    def _run_branch(self):
        self._need(lam=self.lam)
        if self._covariant_route():
            if self.gamma is not None:
                return qanalogs.branching_covariant(self.spec, self.lam, self.gamma)
            found = {g: qanalogs.branching_covariant(self.spec, self.lam, g)
                     for g in qanalogs.covariant_branching_support(self.spec, self.lam)}
            return {g: v for g, v in found.items() if v}
        if self.gamma is not None:
            return qanalogs.branching_typical(self.spec, self.lam, self.gamma)
        return qanalogs.branching_decomposition(self.spec, self.lam)

    def _run_branch_stab(self):
        self._need(lam=self.lam, gamma=self.gamma)
        return qanalogs.branching_stab(self.spec, self.lam, self.gamma)

    def _run_threshold(self):
        self._need(lam=self.lam, mu=self.mu)
        return qanalogs.stabilization_threshold(self.spec, self.lam, self.mu)

    def _run_stab_point(self):
        self._need(lam=self.lam, mu=self.mu)
        return qanalogs.stabilization_point(self.spec, self.lam, self.mu, n_jobs=self.n_jobs)

    def _run_char(self):
        self._need(lam=self.lam)
        if self._covariant_route():
            return qanalogs.graded_character_covariant(self.spec, self.lam, self.box, n_jobs=self.n_jobs)
        self._warn_atypical()
        return qanalogs.graded_character_typical(self.spec, self.lam, self.box, n_jobs=self.n_jobs)

    def _run_dim(self):
        self._need(lam=self.lam)
        return qanalogs.dimension(self.spec, self.lam)

    def _run_tableaux(self):
        self._need(lam=self.lam)
        if self.mu is not None:
            self.spec.check_weight(self.mu)
        rows = []
        for t in iter_ssht(self.spec, self.lam, self.mu):
            try:
                ch = super_charge(t)
            except NotDominantContent:
                ch = None
            rows.append({'tableau': str(t).replace('\n', ' / '), 'content': str(t.content()), 'charge': ch})
        return SuperKostkaResult(pd.DataFrame(rows, columns=['tableau', 'content', 'charge']), name='tableaux')
