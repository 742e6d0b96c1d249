#!/usr/bin/env python3
# coding: utf-8
"""
@author: superkostka team
@last modified by: superkostka team
@file:conftest.py
@time:2026/10/18
"""
import pytest

from superkostka.config import sk_conf


def pytest_configure(config):
    config.addinivalue_line('markers', 'slow: long running computations, deselect with -m "not slow"')


@pytest.fixture(autouse=True)
def serial_config():
    """every test starts single-threaded with private memo tables"""
    n_jobs, shared = sk_conf.n_jobs, sk_conf.shared_cache
    sk_conf.n_jobs = 1
    sk_conf.shared_cache = False
    yield
    sk_conf.n_jobs = n_jobs
    sk_conf.shared_cache = shared
