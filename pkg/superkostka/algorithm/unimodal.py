#!/usr/bin/env python3
# coding: utf-8
"""
@author: superkostka team
@last modified by: superkostka team
@file:unimodal.py
@time:2026/10/17

change log:
    2026/10/17  create file, unimodality of coefficient sequences.
"""
from typing import Iterable, List, Tuple

import numpy as np
import pandas as pd

from ..core.qpolynomial import QPolynomial


def is_unimodal(poly: QPolynomial) -> bool:
    """
    the coefficients between valuation and degree weakly increase, then weakly decrease.
    The zero polynomial counts as unimodal.
    """
    coeffs = np.asarray(poly.coefficients(), dtype=object)
    if coeffs.size < 3:
        return True
    steps = np.array([(d > 0) - (d < 0) for d in np.diff(coeffs)], dtype=np.int64)
    steps = steps[steps != 0]
    # at most one change from rising to falling
    return not np.any((steps[1:] - steps[:-1]) > 0)


def unimodality_scan(cases: Iterable[Tuple[str, str, QPolynomial]]) -> pd.DataFrame:
    """
    the cases whose polynomial is not unimodal.

    :param cases: (kind, case label, polynomial) triples
    :return: DataFrame with columns kind, case, polynomial
    """
    rows: List[dict] = []
    for kind, label, poly in cases:
        if not is_unimodal(poly):
            rows.append({'kind': kind, 'case': label, 'polynomial': poly.to_text()})
    return pd.DataFrame(rows, columns=['kind', 'case', 'polynomial'])
