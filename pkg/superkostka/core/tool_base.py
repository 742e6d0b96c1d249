#!/usr/bin/env python3
# coding: utf-8
"""
@author: superkostka team
@last modified by: superkostka team
@file:tool_base.py
@time:2026/10/15

change log:
    2026/10/15  create file, base of the query and property check tools.
"""
import functools
from typing import Optional

from .algebra import AlgebraSpec
from ..config import sk_conf
from ..exceptions import InvalidAlgebra, SuperKostkaError
from ..log_manager import logger


class ToolBase(object):
    """
    A base tool holding the algebra a computation runs on.

    Parameters
    ----------

    :param spec: the algebra, an AlgebraSpec object, e.g. `AlgebraSpec(Family.GL, 3, 3)` for gl(3,3)
    :param method: the core method of the tool
    :param n_jobs: workers of the alternating sums over the Weyl group, default `sk_conf.n_jobs`
    """
    def __init__(
            self,
            spec: Optional[AlgebraSpec] = None,
            method: str = 'kpoly',
            n_jobs: Optional[int] = None,
    ):
        self.spec = spec
        self._method = method
        self.n_jobs = sk_conf.n_jobs if n_jobs is None else n_jobs
        self.result = None
        self.logger = logger

    @property
    def spec(self):
        return self._spec

    @spec.setter
    def spec(self, spec):
        self._spec = self._spec_check(spec)

    @property
    def method(self):
        return self._method

    def _method_check(self, method, method_range):
        if method.lower() not in method_range:
            logger.error(f'method range in {method_range}')
            logger.error(f'{method} is out of range, please check.')
            raise SuperKostkaError(f'{method} is out of range')
        else:
            self._method = method.lower()
        return method.lower() in method_range

    @staticmethod
    def _params_range_check(value, value_min, value_max, value_type):
        if not isinstance(value, value_type):
            logger.error(f'{value} should be {value_type} type')
            return False
        if value < value_min or value > value_max:
            logger.error(f'{value} should be range in [{value_min}, {value_max}]')
            return False
        return True

    @staticmethod
    def _spec_check(spec):
        """
        check spec type
        :return:
        """
        if spec is not None and not isinstance(spec, AlgebraSpec):
            logger.error(f'{spec!r} is not an AlgebraSpec.')
            raise InvalidAlgebra(f'{spec!r} is not an AlgebraSpec.')
        return spec

    def fit(self, *args, **kwargs):
        raise NotImplementedError

    @classmethod
    def fit_log(cls, func):

        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            logger.info(f'start to run {func.__name__}...')
            result = func(*args, **kwargs)
            logger.info(f'end to run {func.__name__}.')
            return result
        return wrapper
