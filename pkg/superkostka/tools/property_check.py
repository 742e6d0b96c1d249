#!/usr/bin/env python3
# coding: utf-8
"""
@author: superkostka team
@last modified by: superkostka team
@file:property_check.py
@time:2026/10/17

change log:
    2026/10/17  create file, exhaustive and sampled identity checks.
    2026/10/18  unimodality scan of the sweep polynomials.
    2026/10/19  spo(2n,2) samples of the stabilization suite check K = K^stab only.
"""
import itertools
from collections import Counter
from typing import Dict, List, Optional, Tuple

import numpy as np
import pandas as pd
from tqdm import tqdm

from ..algorithm import qanalogs
from ..algorithm.qpartition import root_block, lusztig_partition, new_cache
from ..algorithm.tableaux import (enumerate_ssht, kostka_charge, kostka_foulkes, kostka_g0_charge,
                                  branching_from_tableaux)
from ..algorithm.unimodal import unimodality_scan
from ..core.algebra import (AlgebraSpec, Family, Weight, iter_dominant, iter_covariant, is_typical,
                            is_finite_dim)
from ..core.qpolynomial import QPolynomial
from ..core.result import CheckReport
from ..core.tool_base import ToolBase
from ..exceptions import SuperKostkaError


def _row(suite: str, case: str, ok: bool, detail: str = '') -> dict:
    return {'suite': suite, 'case': case, 'status': 'ok' if ok else 'mismatch', 'detail': '' if ok else detail}


def _same_total(a: Weight, b: Weight) -> bool:
    return sum(a.flat) == sum(b.flat)


def brute_force_partitions(roots: List[Tuple[int, ...]], bound: int) -> Counter:
    """
    number of ways to write each vector as Σ n_α α with 0 ≤ n_α ≤ bound, by plain enumeration.
    """
    counts = Counter()
    for coeffs in itertools.product(range(bound + 1), repeat=len(roots)):
        vec = tuple(sum(c * r[i] for c, r in zip(coeffs, roots)) for i in range(len(roots[0])))
        counts[vec] += 1
    return counts


class PropertyCheck(ToolBase):
    """
    run the identity checks between the routes to the q-analogs.

    :param method: suite name, one of `SUITES`
    :param seed: seed of the sampled suites
    :param positivity_samples: pairs sampled per spo family by the positivity suite
    :param stabilization_samples: pairs sampled by the stabilization suite
    :param max_rank: largest n and m of the sampled algebras
    :param max_entry: largest weight entry of the sampled weights
    :param max_boxes: largest covariant diagram of the charge suite
    :param conjectures: also report non-unimodal polynomials of the sweeps
    :param progress: show tqdm progress bars on stderr
    """
    SUITES = ('route', 'charge', 'positivity', 'stabilization', 'oracles', 'straighten', 'conjectures', 'all')

    def __init__(
            self,
            method: str = 'all',
            seed: int = 0,
            positivity_samples: int = 500,
            stabilization_samples: int = 100,
            max_rank: int = 3,
            max_entry: int = 4,
            max_boxes: int = 6,
            conjectures: bool = False,
            progress: bool = True,
            n_jobs: Optional[int] = None,
    ):
        super(PropertyCheck, self).__init__(spec=None, method=method, n_jobs=n_jobs)
        self._method_check(method, self.SUITES)
        for name, value, low in (('positivity_samples', positivity_samples, 0),
                                 ('stabilization_samples', stabilization_samples, 0),
                                 ('max_rank', max_rank, 1), ('max_entry', max_entry, 0), ('max_boxes', max_boxes, 0)):
            if not self._params_range_check(value, low, 10 ** 6, int):
                raise SuperKostkaError(f'{name}={value} is out of range.')
        self.seed = seed
        self.positivity_samples = positivity_samples
        self.stabilization_samples = stabilization_samples
        self.max_rank = max_rank
        self.max_entry = max_entry
        self.max_boxes = max_boxes
        self.conjectures = conjectures or method == 'conjectures'
        self.progress = progress
        self._scanned: List[Tuple[str, str, QPolynomial]] = []
        self._dominant: Dict[Tuple[AlgebraSpec, int, int], List[Weight]] = {}

    def _bar(self, iterable, desc: str, total: Optional[int] = None):
        return tqdm(iterable, desc=desc, total=total, disable=not self.progress)

    def _dominant_weights(self, spec: AlgebraSpec, low: int, high: int) -> List[Weight]:
        key = (spec, low, high)
        if key not in self._dominant:
            self._dominant[key] = list(iter_dominant(spec, low, high, half=spec.is_spo))
        return self._dominant[key]

    @ToolBase.fit_log
    def fit(self) -> CheckReport:
        """
        run the selected suites
        :return: CheckReport
        """
        rng = np.random.RandomState(self.seed)
        suites = {
            'route': self.route,
            'charge': self.charge,
            'positivity': lambda: self.positivity(rng),
            'stabilization': lambda: self.stabilization(rng),
            'oracles': self.oracles,
            'straighten': self.straighten,
        }
        if self.method == 'all':
            selected = list(suites)
        elif self.method == 'conjectures':
            selected = ['route', 'positivity']
        else:
            selected = [self.method]
        rows = []
        for name in selected:
            found = suites[name]()
            bad = sum(1 for r in found if r['status'] == 'mismatch')
            self.logger.info(f'suite {name}: {len(found)} cases, {bad} mismatches.')
            rows.extend(found)
        if self.conjectures:
            rows.extend(self.unimodality())
        self.result = CheckReport(pd.DataFrame(rows, columns=['suite', 'case', 'status', 'detail']))
        return self.result

    def route(self) -> List[dict]:
        """K_{λ,μ} by the alternating sum and by the g0 decomposition, gl(2,1) and gl(2,2), entries in [-2,2]."""
        rows = []
        for spec in (AlgebraSpec(Family.GL, 2, 1), AlgebraSpec(Family.GL, 2, 2)):
            weights = self._dominant_weights(spec, -2, 2)
            lams = [lam for lam in weights if is_typical(spec, lam)]
            cache = new_cache()
            for lam in self._bar(lams, f'route {spec.name}'):
                for mu in weights:
                    if not _same_total(lam, mu):
                        continue
                    case = f'{spec.name} lambda={lam} mu={mu}'
                    direct = qanalogs.kostka_typical(spec, lam, mu, n_jobs=self.n_jobs, cache=cache)
                    decomposed = qanalogs.decompose_thm_tkgl(spec, lam, mu, cache=cache)
                    ok = direct == decomposed and direct.is_nonnegative()
                    rows.append(_row('route', case, ok, f'{direct} != {decomposed}'))
                    if direct:
                        self._scanned.append(('K', case, direct))
        return rows

    def charge(self) -> List[dict]:
        """charge route against the covariant formula, and K(1) against the number of tableaux."""
        rows = []
        for n, m in ((1, 1), (2, 1), (1, 2), (2, 2), (3, 2)):
            spec = AlgebraSpec(Family.GL, n, m)
            lams = list(iter_covariant(spec, self.max_boxes))
            cache = new_cache()
            for lam in self._bar(lams, f'charge {spec.name}'):
                size = int(lam.size0 + lam.size1)
                for mu in self._dominant_weights(spec, 0, size):
                    if mu.size0 + mu.size1 != size:
                        continue
                    case = f'{spec.name} lambda={lam} mu={mu}'
                    covariant = qanalogs.kostka_covariant(spec, lam, mu, n_jobs=1, cache=cache)
                    by_charge = kostka_charge(spec, lam, mu)
                    count = len(enumerate_ssht(spec, lam, mu))
                    ok = covariant == by_charge and covariant.at_one() == count
                    rows.append(_row('charge', case, ok, f'{covariant} | {by_charge} | {count} tableaux'))
        return rows

    def _sample_spec(self, rng: np.random.RandomState, family: Family, max_rank: int) -> AlgebraSpec:
        n = int(rng.randint(1, max_rank + 1))
        low = 0 if family is Family.SPO_ODD else 1
        m = int(rng.randint(low, max_rank + 1))
        return AlgebraSpec(family, n, m)

    def _sample_pair(self, rng: np.random.RandomState, spec: AlgebraSpec) -> Tuple[Weight, Weight]:
        weights = self._dominant_weights(spec, 0, self.max_entry)
        lam = weights[rng.randint(len(weights))]
        # μ with λ - μ integral
        same = [w for w in weights if all((a - b) % 2 == 0 for a, b in zip(lam.flat, w.flat))]
        mu = same[rng.randint(len(same))]
        return lam, mu

    def positivity(self, rng: np.random.RandomState) -> List[dict]:
        """K^stab in Z_{≥0}[q] for sampled dominant pairs of both spo families."""
        rows = []
        for family in (Family.SPO_ODD, Family.SPO_EVEN):
            for _ in self._bar(range(self.positivity_samples), f'positivity {family.value}'):
                spec = self._sample_spec(rng, family, self.max_rank)
                lam, mu = self._sample_pair(rng, spec)
                case = f'{spec.name} lambda={lam} mu={mu}'
                value = qanalogs.kostka_stab(spec, lam, mu, n_jobs=self.n_jobs)
                rows.append(_row('positivity', case, value.is_nonnegative(), str(value)))
                if value:
                    self._scanned.append(('K_stab', case, value))
        return rows

    def stabilization(self, rng: np.random.RandomState) -> List[dict]:
        """
        K_{λ+kω,μ+kω} = K^stab_{λ,μ} at k = k0 and k0 + 1, with λ + k0 ω typical and finite-dimensional,
        and ω-translation of K^{g0,stab} and m^stab. spo(2n,2) samples only check K = K^stab.
        """
        rows = []
        rank = min(self.max_rank, 2)
        for i in self._bar(range(self.stabilization_samples), 'stabilization'):
            family = Family.SPO_ODD if i % 2 == 0 else Family.SPO_EVEN
            spec = self._sample_spec(rng, family, rank)
            lam, mu = self._sample_pair(rng, spec)
            case = f'{spec.name} lambda={lam} mu={mu}'
            if spec.stab_is_whole:
                # spo(2n,2): no translation result, K = K^stab pointwise
                stab = qanalogs.kostka_stab(spec, lam, mu, n_jobs=self.n_jobs)
                direct = qanalogs.kostka_typical(spec, lam, mu, n_jobs=self.n_jobs)
                rows.append(_row('stabilization', f'{case} K = K_stab', stab == direct and stab.is_nonnegative(),
                                 f'{direct} | {stab}'))
                continue
            omega = spec.omega()
            k0 = qanalogs.stabilization_threshold(spec, lam, mu)
            shifted = lam + omega.scale(k0)
            cache = new_cache()
            stab = qanalogs.kostka_stab(spec, lam, mu, n_jobs=self.n_jobs, cache=cache)
            at_k0 = qanalogs.kostka_typical(spec, shifted, mu + omega.scale(k0), n_jobs=self.n_jobs, cache=cache)
            at_k1 = qanalogs.kostka_typical(spec, shifted + omega, mu + omega.scale(k0 + 1), n_jobs=self.n_jobs,
                                            cache=cache)
            conditions = is_typical(spec, shifted) and is_finite_dim(spec, shifted)
            ok = conditions and stab == at_k0 == at_k1
            rows.append(_row('stabilization', f'{case} k0={k0}', ok, f'{stab} | {at_k0} | {at_k1}'))
            translated = qanalogs.kostka_g0_stab(spec, lam + omega, mu + omega, n_jobs=self.n_jobs, cache=cache)
            base = qanalogs.kostka_g0_stab(spec, lam, mu, n_jobs=self.n_jobs, cache=cache)
            rows.append(_row('stabilization', f'{case} g0 translation', translated == base, f'{translated} != {base}'))
            m_shift = qanalogs.branching_stab(spec, lam + omega, mu + omega)
            m_base = qanalogs.branching_stab(spec, lam, mu)
            rows.append(_row('stabilization', f'{case} branching translation', m_shift == m_base and m_base >= 0,
                             f'{m_shift} != {m_base}'))
        return rows

    def oracles(self) -> List[dict]:
        """partition functions against enumeration, and classical Kostka-Foulkes values."""
        rows = []
        blocks = (
            ('A1', AlgebraSpec(Family.GL, 2, 1), 'n'),
            ('A2', AlgebraSpec(Family.GL, 3, 1), 'n'),
            ('C1', AlgebraSpec(Family.SPO_ODD, 1, 0), 'n'),
            ('C2', AlgebraSpec(Family.SPO_ODD, 2, 0), 'n'),
            ('B2', AlgebraSpec(Family.SPO_ODD, 1, 2), 'm'),
            ('D2', AlgebraSpec(Family.SPO_EVEN, 1, 2), 'm'),
        )
        box = 4
        for name, spec, block in blocks:
            rb = root_block(spec, block)
            counts = brute_force_partitions(list(rb.roots), 2 * box)
            cache = new_cache()
            for beta in itertools.product(range(-2 * box, 2 * box + 1, 2), repeat=rb.dim):
                value = lusztig_partition(rb, beta, cache).at_one()
                expected = counts.get(tuple(beta), 0)
                rows.append(_row('oracles', f'{name} beta={tuple(b // 2 for b in beta)}', value == expected,
                                 f'{value} != {expected}'))
        classical = (
            (AlgebraSpec(Family.GL, 2, 1), (2, 0), (1, 1), QPolynomial({1: 1})),
            (AlgebraSpec(Family.GL, 3, 1), (2, 1, 0), (1, 1, 1), QPolynomial({1: 1, 2: 1})),
        )
        for spec, shape, content, expected in classical:
            gamma, mu = spec.weight(shape, [0]), spec.weight(content, [0])
            lusztig = qanalogs.lusztig_classical(spec, 'n', gamma, mu)
            by_charge = kostka_foulkes(shape, content)
            rows.append(_row('oracles', f'K_{shape},{content}', lusztig == by_charge == expected,
                             f'{lusztig} | {by_charge} | {expected}'))
        for spec in (AlgebraSpec(Family.GL, 2, 1), AlgebraSpec(Family.GL, 2, 2)):
            weights = self._dominant_weights(spec, 0, 3)
            for gamma in weights:
                for mu in weights:
                    if gamma.size0 != mu.size0 or gamma.size1 != mu.size1:
                        continue
                    value = qanalogs.kostka_g0(spec, gamma, mu, n_jobs=1)
                    by_charge = kostka_g0_charge(spec, gamma, mu)
                    rows.append(_row('oracles', f'{spec.name} g0 gamma={gamma} mu={mu}', value == by_charge,
                                     f'{value} != {by_charge}'))
            for lam in iter_covariant(spec, 4):
                support = qanalogs.covariant_branching_support(spec, lam)
                by_formula = {g: qanalogs.branching_covariant(spec, lam, g) for g in support}
                by_formula = {g: v for g, v in by_formula.items() if v}
                by_tableaux = branching_from_tableaux(spec, lam)
                rows.append(_row('oracles', f'{spec.name} branching lambda={lam}', by_formula == by_tableaux,
                                 f'{by_formula} != {by_tableaux}'))
        return rows

    def _straighten_specs(self) -> List[AlgebraSpec]:
        specs = []
        for n in (1, 2):
            for m in (1, 2):
                specs.append(AlgebraSpec(Family.GL, n, m))
                specs.append(AlgebraSpec(Family.SPO_EVEN, n, m))
            for m in (0, 1, 2):
                specs.append(AlgebraSpec(Family.SPO_ODD, n, m))
        return specs

    def straighten(self) -> List[dict]:
        """straightening law and block factorization of K^{g0}, n, m ≤ 2, entries in [-3,3]."""
        rows = []
        entry = 3
        for spec in self._straighten_specs():
            cache = new_cache()
            zero = spec.zero()
            values = range(-2 * entry, 2 * entry + 1, 2)
            xis = [Weight.from_flat(f, spec.n) for f in itertools.product(values, repeat=spec.n + spec.m)]
            for xi in self._bar(xis, f'straighten {spec.name}'):
                found = qanalogs.straighten(spec, xi)
                for mu in (zero, found.gamma if found is not None else zero):
                    value = qanalogs.kostka_g0(spec, xi, mu, n_jobs=1, cache=cache)
                    if found is None:
                        expected = QPolynomial.ZERO
                    else:
                        expected = qanalogs.kostka_g0(spec, found.gamma, mu, n_jobs=1, cache=cache) * found.sign
                    rows.append(_row('straighten', f'{spec.name} xi={xi} mu={mu}', value == expected,
                                     f'{value} != {expected}'))
            for gamma in self._dominant_weights(spec, 0, 2):
                for mu in self._dominant_weights(spec, 0, 2):
                    value = qanalogs.kostka_g0(spec, gamma, mu, n_jobs=1, cache=cache)
                    product = (qanalogs.lusztig_classical(spec, 'n', gamma, mu, cache=cache)
                               * qanalogs.lusztig_classical(spec, 'm', gamma, mu, cache=cache))
                    ok = value == product
                    if spec.stab_is_whole:
                        ok = ok and value == qanalogs.kostka_g0(spec, gamma, mu, shift='rho', n_jobs=1, cache=cache)
                    rows.append(_row('straighten', f'{spec.name} factorization gamma={gamma} mu={mu}', ok,
                                     f'{value} != {product}'))
        return rows

    def unimodality(self) -> List[dict]:
        """non-unimodal polynomials met by the sweeps, reported and never failed."""
        found = unimodality_scan(self._scanned)
        rows = [{'suite': 'conjectures', 'case': f'{r.kind} {r.case}', 'status': 'observed',
                 'detail': f'not unimodal: {r.polynomial}'} for r in found.itertuples()]
        rows.append({'suite': 'conjectures', 'case': f'{len(self._scanned)} polynomials scanned', 'status': 'observed',
                     'detail': f'{len(found)} not unimodal'})
        self.logger.info(f'unimodality scan: {len(found)} of {len(self._scanned)} polynomials are not unimodal.')
        return rows
