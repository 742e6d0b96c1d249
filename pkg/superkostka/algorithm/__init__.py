#!/usr/bin/env python3
# coding: utf-8
"""
@author: superkostka team
@last modified by: superkostka team
@file:__init__.py
@time:2026/10/15
"""
from .qpartition import f_q, p_q, c_q, c, c_lambda, lusztig_partition
from .qanalogs import (
    kostka_typical, kostka_stab, kostka_g0, kostka_g0_stab, kostka_covariant, straighten,
    branching_typical, branching_stab, branching_covariant, branching_decomposition,
    stabilization_threshold, stabilization_point, graded_character_typical, dimension,
)
from .tableaux import charge, super_charge, kostka_charge, kostka_foulkes, split, jdt_rectify, rs_insert
from .unimodal import is_unimodal
