#!/usr/bin/env python3
# coding: utf-8
"""
@author: superkostka team
@last modified by: superkostka team
@file:__init__.py
@time:2026/10/16
"""
from .reader import parse_algebra, parse_weight, parse_polynomial
from .writer import render, to_json, to_text
