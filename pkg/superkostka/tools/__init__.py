#!/usr/bin/env python3
# coding: utf-8
"""
@author: superkostka team
@last modified by: superkostka team
@file:__init__.py
@time:2026/10/16
"""
from .kostka_query import KostkaQuery
from .property_check import PropertyCheck
