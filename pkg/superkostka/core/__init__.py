#!/usr/bin/env python3
# coding: utf-8
"""
@author: superkostka team
@last modified by: superkostka team
@file:__init__.py
@time:2026/10/14
"""
from .algebra import AlgebraSpec, Family, Weight, positive_roots, rho, is_dominant, is_finite_dim, is_typical
from .qpolynomial import QPolynomial
from .result import SuperKostkaResult, GradedCharacter, KappaTable, CheckReport
from .weyl import WeylElement, enumerate_w, enumerate_w_stab
