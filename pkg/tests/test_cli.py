#!/usr/bin/env python3
# coding: utf-8
"""
@file: test_cli.py
@description: the superkostka command line.
@author: superkostka team
@last modified by: superkostka team

change log:
    2026/10/18  create file.
"""
import json

import pandas as pd
import pytest

from superkostka.cli import main
from superkostka.core.result import CheckReport
from superkostka.tools.property_check import PropertyCheck

SPO25 = ['--algebra', 'spo:2n=2,M=5', '--lambda', '2;1,1', '--mu', '0;2,1']


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out.strip(), captured.err


def test_kpoly(capsys):
    code, out, _ = run(capsys, 'kpoly', *SPO25)
    assert code == 0
    assert out == 'q^3 + q^2 - q'
    code, out, _ = run(capsys, 'kpoly-stab', *SPO25)
    assert out == 'q^3 + q^2'
    code, out, _ = run(capsys, 'kpoly-stab', *SPO25, '--format', 'json')
    assert json.loads(out) == {'coeffs': {'3': 1, '2': 1}}


def test_debug_terms(capsys):
    code, out, _ = run(capsys, 'kpoly', *SPO25, '--debug-terms')
    assert code == 0
    assert out.splitlines()[-1] == 'q^3 + q^2 - q'
    assert 'kappa' in out
    code, out, _ = run(capsys, 'kpoly', *SPO25, '--debug-terms', '--format', 'json')
    found = json.loads(out)
    assert found['polynomial'] == {'coeffs': {'3': 1, '2': 1, '1': -1}}
    assert {row['kappa'] for row in found['terms']} == {'(1;-1,0)', '(2;-1,-1)', '(2;-1,0)'}


def test_scalar_commands(capsys):
    assert run(capsys, 'threshold', *SPO25)[1] == '3'
    assert run(capsys, 'dim', '--algebra', 'gl:2,1', '--lambda', '1,1;0')[1] == '4'
    assert run(capsys, 'kg0', '--algebra', 'gl:2,1', '--gamma', '1,-1;0', '--mu', '0,0;0')[1] == 'q'
    code, out, _ = run(capsys, 'char', '--algebra', 'gl:1,1', '--lambda', '1;0', '--format', 'json')
    assert json.loads(out) == {'(1;0)': {'coeffs': {'0': 1}}, '(0;1)': {'coeffs': {'1': 1}}}
    code, out, _ = run(capsys, 'kpoly-charge', '--algebra', 'gl:1,1', '--lambda', '2;1', '--mu', '1;2')
    assert out == 'q'


def test_errors(capsys):
    code, _, err = run(capsys, 'kpoly', '--algebra', 'gl:2,1', '--lambda', '1,x;0', '--mu', '0,0;0')
    assert code == 2
    assert 'position 2' in err
    assert run(capsys, 'kpoly', '--algebra', 'gl:2', '--lambda', '1;0', '--mu', '0;0')[0] == 2
    code, _, err = run(capsys, 'kpoly', '--algebra', 'gl:2,1', '--lambda', '0,1;0', '--mu', '0,0;0')
    assert code == 1
    assert 'dominant' in err
    assert run(capsys, 'kpoly', '--algebra', 'gl:2,1', '--lambda', '1,0;0')[0] == 1
    assert run(capsys, 'threshold', '--algebra', 'gl:2,1', '--lambda', '1,0;0', '--mu', '1,0;0')[0] == 1
    assert run(capsys, 'char', '--algebra', 'gl:1,1', '--lambda', '1;0', '--box-low', '0;0')[0] == 2
    with pytest.raises(SystemExit):
        main(['kpoly'])


def test_check(capsys):
    code, out, _ = run(capsys, 'check', '--suite', 'charge', '--max-boxes', '2', '--no-progress')
    assert code == 0
    assert 'charge' in out


@pytest.mark.slow
def test_check_stabilization_defaults(capsys):
    code, out, err = run(capsys, 'check', '--suite', 'stabilization', '--no-progress')
    assert code == 0, err
    assert 'stabilization' in out


def test_threshold_spo_2n_2(capsys):
    code, _, err = run(capsys, 'threshold', '--algebra', 'spo:4,2', '--lambda', '4,0;7/2', '--mu', '0,0;3/2')
    assert code == 1
    assert 'spo(4,2)' in err


def test_log_file_folder_missing(capsys, tmp_path):
    log_file = str(tmp_path / 'missing' / 'superkostka.log')
    code, _, err = run(capsys, 'kpoly', '--log-file', log_file, *SPO25)
    assert code == 1
    assert 'folder does not exist' in err


def test_check_mismatch(capsys, monkeypatch):
    def fake_fit(self):
        return CheckReport(pd.DataFrame([{'suite': 'oracles', 'case': 'A1 beta=(1,)', 'status': 'mismatch',
                                          'detail': '1 != 0'}]))
    monkeypatch.setattr(PropertyCheck, 'fit', fake_fit)
    code, _, err = run(capsys, 'check', '--suite', 'oracles', '--no-progress')
    assert code == 3
    assert 'mismatch [oracles] A1 beta=(1,): 1 != 0' in err
