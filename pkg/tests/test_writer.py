#!/usr/bin/env python3
# coding: utf-8
"""
@file: test_writer.py
@description: text and json rendering of results.
@author: superkostka team
@last modified by: superkostka team

change log:
    2026/10/18  create file.
"""
import json

import pandas as pd

from superkostka.algorithm import qanalogs
from superkostka.core.algebra import AlgebraSpec, Family
from superkostka.core.qpolynomial import QPolynomial
from superkostka.core.result import CheckReport
from superkostka.io.writer import render, to_json, to_text

GL11 = AlgebraSpec(Family.GL, 1, 1)
GL21 = AlgebraSpec(Family.GL, 2, 1)


def test_polynomial():
    poly = QPolynomial({3: 1, 2: 1, 1: -1})
    assert to_text(poly) == 'q^3 + q^2 - q'
    assert to_json(poly) == '{"coeffs": {"3": 1, "2": 1, "1": -1}}'
    assert render(poly, 'json') == to_json(poly)
    assert render(QPolynomial.ZERO) == '0'


def test_plain_values():
    assert to_text(None) == 'none'
    assert to_json(None) == 'null'
    assert to_text(3) == '3'
    assert to_json(3) == '3'


def test_branching_map():
    decomposition = qanalogs.branching_decomposition(GL21, GL21.weight([1, 1], [0]))
    lines = to_text(decomposition).splitlines()
    assert sorted(lines) == ['(0,0;2)\t1', '(1,0;1)\t1', '(1,1;0)\t1']
    assert json.loads(to_json(decomposition)) == {'(1,1;0)': 1, '(1,0;1)': 1, '(0,0;2)': 1}


def test_character():
    char = qanalogs.graded_character_typical(GL11, GL11.weight([1], [0]))
    assert sorted(to_text(char).splitlines()) == ['(0;1)\tq', '(1;0)\t1']
    assert json.loads(to_json(char)) == {'(1;0)': {'coeffs': {'0': 1}}, '(0;1)': {'coeffs': {'1': 1}}}


def test_tables():
    report = CheckReport(pd.DataFrame([
        {'suite': 'oracles', 'case': 'a', 'status': 'ok', 'detail': ''},
        {'suite': 'oracles', 'case': 'b', 'status': 'ok', 'detail': ''},
    ]))
    text = to_text(report)
    assert 'oracles' in text and '2' in text
    assert json.loads(to_json(report))[0]['case'] == 'a'
    assert to_text(CheckReport(pd.DataFrame(columns=['suite', 'case', 'status', 'detail']))) == 'no case checked'
    assert to_text(pd.DataFrame()) == 'empty'
