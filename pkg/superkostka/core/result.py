#!/usr/bin/env python3
# coding: utf-8
"""
@author: superkostka team
@last modified by: superkostka team
@file:result.py
@time:2026/10/14

change log:
    2026/10/14  create file, table results of characters, term tables and property checks.
"""
from typing import Dict, Iterator, Mapping, Optional, Tuple

import pandas as pd

from .algebra import AlgebraSpec, Weight
from .qpolynomial import QPolynomial
from ..log_manager import logger


class SuperKostkaResult(object):
    """
    analysis result
    :param matrix: main result data frame
    :param name: name of the computation

    """
    def __init__(
            self,
            matrix: Optional[pd.DataFrame] = None,
            name: str = '',
    ):
        self.name = name
        self._matrix = matrix

    @property
    def matrix(self):
        return self._matrix

    @matrix.setter
    def matrix(self, matrix):
        if not isinstance(matrix, pd.DataFrame):
            logger.error(f'result data needs to be a Dataframe.')
        else:
            self._matrix = matrix

    @property
    def is_empty(self):
        """
        check if the matrix is empty
        :return: bool
        """
        return True if self.matrix is None else self.matrix.empty

    def __str__(self):
        cols = [] if self.matrix is None else [str(i) for i in self.matrix.columns]
        class_info = f'{self.__class__.__name__} result of {self.name}, '
        class_info += f'a DataFrame which has {",".join(cols)} columns. \n'
        class_info += f'the shape is {self.matrix.shape if isinstance(self.matrix, pd.DataFrame) else None} \n'
        return class_info

    def __repr__(self):
        return self.__str__()

    def check_columns(self, cols):
        """
        check if column in matrix
        :param cols: column names, ['col1', 'cols2']
        :return: bool
        """
        return len(set(self.matrix.columns) & set(cols)) == len(cols)


class GradedCharacter(SuperKostkaResult):
    """
    graded character Σ_μ K_{λ,μ}(q) e^μ, zero entries dropped.

    :param spec: the algebra
    :param highest: the highest weight λ
    :param entries: mapping μ -> K_{λ,μ}(q)
    """
    def __init__(self, spec: AlgebraSpec, highest: Weight, entries: Mapping[Weight, QPolynomial],
                 name='graded_character'):
        self.spec = spec
        self.highest = highest
        self.entries: Dict[Weight, QPolynomial] = {mu: p for mu, p in entries.items() if p}
        ordered = sorted(self.entries.items(), key=lambda kv: tuple(-d for d in kv[0].flat))
        matrix = pd.DataFrame({
            'weight': [str(mu) for mu, _ in ordered],
            'polynomial': [p.to_text() for _, p in ordered],
            'value_at_one': [p.at_one() for _, p in ordered],
        })
        super(GradedCharacter, self).__init__(matrix=matrix, name=name)

    def __getitem__(self, mu: Weight) -> QPolynomial:
        return self.entries.get(mu, QPolynomial.ZERO)

    def __len__(self):
        return len(self.entries)

    def __iter__(self) -> Iterator[Tuple[Weight, QPolynomial]]:
        return iter(self.entries.items())

    def __eq__(self, other):
        if not isinstance(other, GradedCharacter):
            return NotImplemented
        return self.entries == other.entries

    @property
    def dimension(self) -> int:
        """
        sum of the coefficients at q=1.
        :return:
        """
        return sum(p.at_one() for p in self.entries.values())


class KappaTable(SuperKostkaResult):
    """
    the (w, κ) terms contributing to K_{λ,μ}(q), one row each:
    κ, c_q(κ), w, ε(w), ℱ_q(w∘λ-μ-κ) and the signed product.
    """
    def __init__(self, matrix: pd.DataFrame, name='kostka_terms'):
        super(KappaTable, self).__init__(matrix=matrix, name=name)


class CheckReport(SuperKostkaResult):
    """
    outcome of a property suite, one row per checked case with columns
    suite, case, status ('ok', 'mismatch' or 'observed') and detail.
    """
    def __init__(self, matrix: pd.DataFrame, name='property_check'):
        super(CheckReport, self).__init__(matrix=matrix, name=name)

    def _with_status(self, status: str) -> pd.DataFrame:
        if self.is_empty:
            return pd.DataFrame(columns=['suite', 'case', 'status', 'detail'])
        return self.matrix[self.matrix['status'] == status]

    @property
    def failures(self) -> pd.DataFrame:
        return self._with_status('mismatch')

    @property
    def observations(self) -> pd.DataFrame:
        return self._with_status('observed')

    @property
    def passed(self) -> bool:
        return self.failures.empty

    def summary(self) -> pd.DataFrame:
        """
        number of cases per suite and status.
        :return:
        """
        if self.is_empty:
            return pd.DataFrame(columns=['suite', 'status', 'cases'])
        return self.matrix.groupby(['suite', 'status']).size().reset_index(name='cases')
