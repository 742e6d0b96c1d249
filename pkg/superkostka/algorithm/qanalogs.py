#!/usr/bin/env python3
# coding: utf-8
"""
@author: superkostka team
@last modified by: superkostka team
@file:qanalogs.py
@time:2026/10/14

change log:
    2026/10/14  create file, q-analogs of weight and branching multiplicities.
    2026/10/16  parallel alternating sums with joblib.
    2026/10/19  spo(2n,2) has no stabilization threshold; partition cache counts logged.
"""
import functools
import itertools
import math
from dataclasses import dataclass
from typing import Callable, Dict, Iterator, List, NamedTuple, Optional, Sequence, Tuple

import pandas as pd
from joblib import Parallel, cpu_count, delayed
from typing_extensions import Literal

from ..config import sk_conf
from ..core.algebra import (AlgebraSpec, Weight, rho, positive_roots, inner, is_dominant, weyl_dimension,
                            is_finite_dim, is_typical, is_covariant)
from ..core.qpolynomial import QPolynomial, qpoly_sum
from ..core.result import GradedCharacter, KappaTable
from ..core.weyl import (WeylElement, enumerate_w, enumerate_w_stab, enumerate_block, sign, act_flat, dot)
from ..exceptions import NotDominant, NotCovariant, NotApplicable
from ..log_manager import logger
from .qpartition import (PartitionCache, new_cache, p_q_flat, _f_q_flat, odd_table, c_flat, lambda_table,
                         root_block, lusztig_partition)

Flat = Tuple[int, ...]

# below this many group elements the sum is evaluated in-process
_PARALLEL_MIN = 64


def _sub(a: Flat, b: Flat) -> Flat:
    return tuple(x - y for x, y in zip(a, b))


def _add(a: Flat, b: Flat) -> Flat:
    return tuple(x + y for x, y in zip(a, b))


def _require_dominant(spec: AlgebraSpec, *weights: Weight):
    for w in weights:
        if not is_dominant(spec, w):
            raise NotDominant(f'{w} is not a dominant weight of {spec.name}, please check.')


def _require_gl(spec: AlgebraSpec, what: str):
    if not spec.is_gl:
        raise NotApplicable(f'{what} is only defined for gl(n,m), got {spec.name}.')


def _require_covariant(spec: AlgebraSpec, lam: Weight):
    _require_gl(spec, 'the covariant q-analog')
    if not is_covariant(spec, lam):
        raise NotCovariant(f'{lam} is not a covariant weight of {spec.name}.')


# ---------------------------------------------------------------- alternating sums


def _chunk_sum(term: Callable, chunk: Sequence[WeylElement]) -> QPolynomial:
    cache = new_cache()
    return qpoly_sum(term(w, cache) * sign(w) for w in chunk)


def weyl_sum(elements: Sequence[WeylElement], term: Callable, n_jobs: Optional[int] = None,
             cache: Optional[PartitionCache] = None) -> QPolynomial:
    """
    Σ_w ε(w) term(w) over a list of group elements.

    With more than one job the list is split in chunks evaluated by joblib workers, each with its own
    memo (or the shared one when `sk_conf.shared_cache`); the result does not depend on n_jobs.

    :param elements: group elements
    :param term: picklable callable (w, cache) -> QPolynomial
    :param n_jobs: number of workers, default `sk_conf.n_jobs`
    :param cache: memo used by the in-process evaluation
    :return: QPolynomial
    """
    n_jobs = sk_conf.n_jobs if n_jobs is None else n_jobs
    if n_jobs == 1 or len(elements) < _PARALLEL_MIN:
        cache = cache if cache is not None else new_cache()
        total = qpoly_sum(term(w, cache) * sign(w) for w in elements)
        logger.debug(f'partition cache: {cache.hits} hits, {cache.misses} misses, {len(cache)} entries.')
        return total
    workers = n_jobs if n_jobs > 0 else cpu_count()
    size = max(math.ceil(len(elements) / (4 * workers)), 1)
    chunks = [elements[i:i + size] for i in range(0, len(elements), size)]
    backend = 'threading' if sk_conf.shared_cache else 'loky'
    parts = Parallel(n_jobs=n_jobs, backend=backend)(delayed(_chunk_sum)(term, chunk) for chunk in chunks)
    return qpoly_sum(parts)


def _pq_term(spec: AlgebraSpec, lam_shifted: Flat, shift: Flat, mu: Flat, w: WeylElement,
             cache: PartitionCache) -> QPolynomial:
    beta = _sub(_sub(act_flat(w, lam_shifted, spec.n), shift), mu)
    return p_q_flat(spec, beta, cache)


def _fq_term(spec: AlgebraSpec, gamma_shifted: Flat, shift: Flat, mu: Flat, w: WeylElement,
             cache: PartitionCache) -> QPolynomial:
    eta = _sub(_sub(act_flat(w, gamma_shifted, spec.n), shift), mu)
    return _f_q_flat(spec, eta, cache)


def _covariant_term(spec: AlgebraSpec, lam: Weight, rho_plus: Flat, mu: Flat, w: WeylElement,
                    cache: PartitionCache) -> QPolynomial:
    terms = []
    base = _add(lam.flat, rho_plus)
    for kappa, count in lambda_table(spec, lam).items():
        eta = _sub(_sub(act_flat(w, _sub(base, kappa), spec.n), rho_plus), mu)
        value = _f_q_flat(spec, eta, cache)
        if value:
            terms.append(value.shift(sum(kappa[:spec.n]) // 2) * count)
    return qpoly_sum(terms)


# ---------------------------------------------------------------- q-analogs


def kostka_typical(spec: AlgebraSpec, lam: Weight, mu: Weight, n_jobs: Optional[int] = None,
                   cache: Optional[PartitionCache] = None) -> QPolynomial:
    """
    K_{λ,μ}(q) = Σ_{w∈W} ε(w) 𝒫_q(w∘λ - μ), dot action by ρ.

    λ must be dominant; typicality is not required by the formula.

    :param spec: the algebra
    :param lam: dominant highest weight
    :param mu: any weight
    :param n_jobs: workers of the outer sum, default `sk_conf.n_jobs`
    :param cache: memo shared with other calls of the same query
    :return: QPolynomial
    """
    spec.check_weight(lam, mu)
    _require_dominant(spec, lam)
    shift = rho(spec).rho.flat
    term = functools.partial(_pq_term, spec, _add(lam.flat, shift), shift, mu.flat)
    return weyl_sum(enumerate_w(spec), term, n_jobs=n_jobs, cache=cache)


def kostka_stab(spec: AlgebraSpec, lam: Weight, mu: Weight, n_jobs: Optional[int] = None,
                cache: Optional[PartitionCache] = None) -> QPolynomial:
    """
    K^stab_{λ,μ}(q) = Σ_{w∈W_stab} ε(w) 𝒫_q(w∘λ - μ).
    """
    spec.check_weight(lam, mu)
    _require_dominant(spec, lam)
    shift = rho(spec).rho.flat
    term = functools.partial(_pq_term, spec, _add(lam.flat, shift), shift, mu.flat)
    return weyl_sum(enumerate_w_stab(spec), term, n_jobs=n_jobs, cache=cache)


def kostka_g0(spec: AlgebraSpec, gamma: Weight, mu: Weight, shift: Literal['rho_plus', 'rho'] = 'rho_plus',
              n_jobs: Optional[int] = None, cache: Optional[PartitionCache] = None) -> QPolynomial:
    """
    K^{g0}_{γ,μ}(q) = Σ_{w∈W} ε(w) ℱ_q(w(γ+ρ₊) - μ - ρ₊).

    shift='rho' gives the variant where ρ₊ is replaced by ρ; it coincides with the default for gl(n,m)
    and spo(2n,2) only.
    """
    spec.check_weight(gamma, mu)
    if shift not in ('rho_plus', 'rho'):
        raise ValueError(f'shift should be "rho_plus" or "rho", got {shift!r}.')
    vec = (rho(spec).rho_plus if shift == 'rho_plus' else rho(spec).rho).flat
    term = functools.partial(_fq_term, spec, _add(gamma.flat, vec), vec, mu.flat)
    return weyl_sum(enumerate_w(spec), term, n_jobs=n_jobs, cache=cache)


def kostka_g0_stab(spec: AlgebraSpec, gamma: Weight, mu: Weight, n_jobs: Optional[int] = None,
                   cache: Optional[PartitionCache] = None) -> QPolynomial:
    spec.check_weight(gamma, mu)
    vec = rho(spec).rho_plus.flat
    term = functools.partial(_fq_term, spec, _add(gamma.flat, vec), vec, mu.flat)
    return weyl_sum(enumerate_w_stab(spec), term, n_jobs=n_jobs, cache=cache)


def lusztig_classical(spec: AlgebraSpec, block: Literal['n', 'm'], gamma: Weight, mu: Weight,
                      stabilized: bool = False, cache: Optional[PartitionCache] = None) -> QPolynomial:
    """
    Lusztig's q-analog of g_n (block 'n') or g_m (block 'm'):
    Σ_u ε(u) 𝒫_{block,q}(u(γ+ρ₊) - ρ₊ - μ), restricted to the parts of γ and μ on that block.
    With `stabilized` the n-block sum runs over S_n only.
    """
    spec.check_weight(gamma, mu)
    cache = cache if cache is not None else new_cache()
    rb = root_block(spec, block)
    rho_plus = rho(spec).rho_plus
    terms = []
    for u in enumerate_block(spec, block, stabilized):
        moved = dot(u, gamma, rho_plus) - mu
        value = lusztig_partition(rb, moved, cache)
        if value:
            terms.append(value * sign(u))
    return qpoly_sum(terms)


class Straightening(NamedTuple):
    sign: int
    gamma: Weight
    tau: WeylElement


def _straighten_block(cartan: str, v: Sequence[int]) -> Optional[Tuple[Tuple[int, ...], Tuple[int, ...], Tuple[int, ...]]]:
    """
    dominant representative d of v under the block Weyl group with v = τ(d), None if v is reflection-fixed.

    :return: (d, perm, signs) with v[i] = signs[i] * d[perm[i]]
    """
    v = tuple(v)
    size = len(v)
    if cartan in ('', 'T'):
        return v, tuple(range(size)), (1,) * size
    if cartan == 'A':
        d = tuple(sorted(v, reverse=True))
        if len(set(d)) < size:
            return None
        return d, tuple(d.index(x) for x in v), (1,) * size
    d = sorted((abs(x) for x in v), reverse=True)
    if len(set(d)) < size:
        return None
    if cartan in ('B', 'C'):
        if d[-1] == 0:
            return None
    else:
        negatives = sum(1 for x in v if x < 0)
        if negatives % 2 and d[-1] != 0:
            d[-1] = -d[-1]
    d = tuple(d)
    absd = [abs(x) for x in d]
    perm = tuple(absd.index(abs(x)) for x in v)
    signs = [1 if x * d[p] > 0 else (-1 if x * d[p] < 0 else 1) for x, p in zip(v, perm)]
    if cartan == 'D' and signs.count(-1) % 2:
        zero_at = next(i for i, x in enumerate(v) if x == 0)
        signs[zero_at] = -signs[zero_at]
    return d, perm, tuple(signs)


def straighten(spec: AlgebraSpec, xi: Weight) -> Optional[Straightening]:
    """
    write ξ + ρ₊ = τ(γ + ρ₊) with γ dominant.

    :return: Straightening(ε(τ), γ, τ), or None when ξ + ρ₊ is fixed by a reflection of W
    """
    spec.check_weight(xi)
    rho_plus = rho(spec).rho_plus
    v = xi + rho_plus
    types = spec.block_types
    part0 = _straighten_block(types[0], v.doubled0)
    part1 = _straighten_block(types[1], v.doubled1)
    if part0 is None or part1 is None:
        return None
    tau = WeylElement(part0[1], part0[2], part1[1], part1[2])
    gamma = Weight(part0[0], part1[0]) - rho_plus
    if not is_dominant(spec, gamma):
        return None
    return Straightening(sign(tau), gamma, tau)


# ---------------------------------------------------------------- branching multiplicities


def branching_typical(spec: AlgebraSpec, lam: Weight, gamma: Weight) -> int:
    """
    m_{λ,γ} = Σ_{w∈W} ε(w) c(w∘λ - γ), multiplicity of V^{g0}(γ) in V(λ) for typical λ.
    """
    spec.check_weight(lam, gamma)
    _require_dominant(spec, lam, gamma)
    if not is_finite_dim(spec, lam) or not is_typical(spec, lam):
        raise NotApplicable(f'{lam} should be typical and finite-dimensional for {spec.name}.')
    shift = rho(spec).rho.flat
    shifted = _add(lam.flat, shift)
    total = 0
    for w in enumerate_w(spec):
        kappa = _sub(_sub(act_flat(w, shifted, spec.n), shift), gamma.flat)
        total += sign(w) * c_flat(spec, kappa)
    return total


def branching_stab(spec: AlgebraSpec, lam: Weight, gamma: Weight) -> int:
    """
    m^stab_{λ,γ} = Σ_{w∈W_stab} ε(w) c(w(λ+ρ₊) - γ - ρ₊).
    """
    spec.check_weight(lam, gamma)
    _require_dominant(spec, lam, gamma)
    shift = rho(spec).rho_plus.flat
    shifted = _add(lam.flat, shift)
    total = 0
    for w in enumerate_w_stab(spec):
        kappa = _sub(_sub(act_flat(w, shifted, spec.n), shift), gamma.flat)
        total += sign(w) * c_flat(spec, kappa)
    return total


def branching_covariant(spec: AlgebraSpec, lam: Weight, gamma: Weight) -> int:
    """
    m_{λ,γ} = Σ_{w∈W} ε(w) c_λ(λ - w∘γ) for covariant λ.
    """
    spec.check_weight(lam, gamma)
    _require_covariant(spec, lam)
    _require_dominant(spec, gamma)
    table = lambda_table(spec, lam)
    shift = rho(spec).rho.flat
    shifted = _add(gamma.flat, shift)
    total = 0
    for w in enumerate_w(spec):
        kappa = _sub(lam.flat, _sub(act_flat(w, shifted, spec.n), shift))
        total += sign(w) * table.get(kappa, 0)
    return total


def branching_support(spec: AlgebraSpec, lam: Weight) -> List[Weight]:
    """
    the dominant weights of the form w∘λ - κ with κ in the support of c; every γ with m_{λ,γ} ≠ 0 is among them.
    """
    spec.check_weight(lam)
    shift = rho(spec).rho.flat
    shifted = _add(lam.flat, shift)
    found = set()
    for w in enumerate_w(spec):
        moved = _sub(act_flat(w, shifted, spec.n), shift)
        for kappa in odd_table(spec):
            found.add(_sub(moved, kappa))
    weights = [Weight.from_flat(f, spec.n) for f in found]
    return sorted((g for g in weights if is_dominant(spec, g)), key=lambda g: tuple(-d for d in g.flat))


def covariant_branching_support(spec: AlgebraSpec, lam: Weight) -> List[Weight]:
    """
    the dominant weights γ with λ - w∘γ in the support of c_λ for some w.
    """
    _require_covariant(spec, lam)
    shift = rho(spec).rho.flat
    found = set()
    for kappa in lambda_table(spec, lam):
        shifted = _add(_sub(lam.flat, kappa), shift)
        for w in enumerate_w(spec):
            found.add(_sub(act_flat(w, shifted, spec.n), shift))
    weights = [Weight.from_flat(f, spec.n) for f in found]
    return sorted((g for g in weights if is_dominant(spec, g)), key=lambda g: tuple(-d for d in g.flat))


def branching_decomposition(spec: AlgebraSpec, lam: Weight) -> Dict[Weight, int]:
    """
    restriction of V(λ) to g0 for typical λ: γ -> m_{λ,γ}, zero entries dropped.
    """
    result = {}
    for gamma in branching_support(spec, lam):
        mult = branching_typical(spec, lam, gamma)
        if mult:
            result[gamma] = mult
    return result


# ---------------------------------------------------------------- stabilization


def _require_spo(spec: AlgebraSpec, what: str):
    if not spec.is_spo:
        raise NotApplicable(f'{what} is only defined for spo(2n,M), got {spec.name}.')


def _require_translating(spec: AlgebraSpec, what: str):
    """
    the ω-translation results need W_stab = S_n x W_m; spo(2n,2) has W_stab = W and K = K^stab already.
    """
    _require_spo(spec, what)
    if spec.stab_is_whole:
        raise NotApplicable(f'{what} does not apply to {spec.name}: there K_{{λ,μ}}(q) = K^stab_{{λ,μ}}(q) '
                            f'and translation by ω changes both.')


def typicality_bound(spec: AlgebraSpec, lam: Weight) -> int:
    """
    least k0 such that λ + kω is typical for every k ≥ k0.

    ⟨λ + kω + ρ, α⟩ = ⟨λ + ρ, α⟩ + k for α = δ_ī ± δ_r, so only finitely many k are atypical.
    """
    _require_dominant(spec, lam)
    shifted = lam + rho(spec).rho
    bad = []
    for alpha in positive_roots(spec).odd_bar:
        k = -inner(shifted, alpha.vector)
        if k.denominator == 1 and k >= 0:
            bad.append(int(k))
    return max(bad) + 1 if bad else 0


def finite_dim_bound(spec: AlgebraSpec, lam: Weight) -> int:
    """
    least k with λ + kω finite-dimensional (then so is every larger k).
    """
    omega = spec.omega()
    k = 0
    while not is_finite_dim(spec, lam + omega.scale(k)):
        k += 1
    return k


def stabilization_threshold(spec: AlgebraSpec, lam: Weight, mu: Weight) -> int:
    """
    least k0 such that for every k ≥ k0, λ + kω is finite-dimensional and typical and
    k ≥ (|λ^(0)| - |μ^(0)|) / 2; from k0 on K_{λ+kω,μ+kω}(q) = K^stab_{λ,μ}(q).
    """
    _require_translating(spec, 'stabilization_threshold')
    spec.check_weight(lam, mu)
    _require_dominant(spec, lam)
    size_bound = max(0, math.ceil((lam.size0 - mu.size0) / 2))
    return max(finite_dim_bound(spec, lam), typicality_bound(spec, lam), size_bound)


def stabilization_point(spec: AlgebraSpec, lam: Weight, mu: Weight, limit: Optional[int] = None,
                        n_jobs: Optional[int] = None) -> Optional[int]:
    """
    least k with K_{λ+(k+1)ω,μ+(k+1)ω}(q) = K_{λ+kω,μ+kω}(q); the sequence is constant from there on.

    :param limit: largest k tried, default the stabilization threshold
    :return: k, or None when no equality occurs up to the limit
    """
    _require_translating(spec, 'stabilization_point')
    limit = stabilization_threshold(spec, lam, mu) if limit is None else limit
    omega = spec.omega()
    cache = new_cache()
    previous = kostka_typical(spec, lam, mu, n_jobs=n_jobs, cache=cache)
    for k in range(limit + 1):
        current = kostka_typical(spec, lam + omega.scale(k + 1), mu + omega.scale(k + 1), n_jobs=n_jobs,
                                 cache=cache)
        if current == previous:
            return k
        previous = current
    return None


# ---------------------------------------------------------------- characters


@dataclass(frozen=True)
class WeightBox:
    """
    per-coordinate bounds (inclusive) of the weights kept in a character expansion.
    """
    lower: Weight
    upper: Weight

    def __post_init__(self):
        if self.lower.dims != self.upper.dims:
            raise ValueError('box bounds have different shapes, please check.')
        if any(a > b for a, b in zip(self.lower.flat, self.upper.flat)):
            raise ValueError(f'box lower bound {self.lower} exceeds upper bound {self.upper}.')

    def contains(self, mu: Weight) -> bool:
        return all(a <= x <= b for a, x, b in zip(self.lower.flat, mu.flat, self.upper.flat))

    def weights(self, like: Weight) -> Iterator[Weight]:
        """
        weights of the box congruent to `like` coordinate-wise modulo integers.
        """
        n = len(self.lower.doubled0)
        ranges = []
        for lo, hi, ref in zip(self.lower.flat, self.upper.flat, like.flat):
            start = lo if (lo - ref) % 2 == 0 else lo + 1
            ranges.append(range(start, hi + 1, 2))
        for flat in itertools.product(*ranges):
            yield Weight.from_flat(flat, n)

    @classmethod
    def around(cls, spec: AlgebraSpec, gammas: Sequence[Weight]) -> 'WeightBox':
        """
        smallest box containing the W-orbits of the given weights.
        """
        n = spec.n
        lower, upper = [], []
        for block, (start, stop) in enumerate(((0, n), (n, n + spec.m))):
            values = [g.flat[i] for g in gammas for i in range(start, stop)] or [0]
            signed = spec.is_spo and not (block == 1 and spec.block_types[1] == 'T')
            if signed:
                bound = max(abs(x) for x in values)
                lo, hi = -bound, bound
            else:
                lo, hi = min(values), max(values)
            lower.extend([lo] * (stop - start))
            upper.extend([hi] * (stop - start))
        return cls(Weight.from_flat(lower, n), Weight.from_flat(upper, n))


def character_box(spec: AlgebraSpec, lam: Weight) -> WeightBox:
    """
    a box containing every weight of V(λ), λ typical.
    """
    return WeightBox.around(spec, branching_support(spec, lam) or [lam])


def graded_character_typical(spec: AlgebraSpec, lam: Weight, box: Optional[WeightBox] = None,
                             n_jobs: Optional[int] = None) -> GradedCharacter:
    """
    char_q V(λ) = Σ_μ K_{λ,μ}(q) e^μ over the weights of a box.
    """
    spec.check_weight(lam)
    _require_dominant(spec, lam)
    box = character_box(spec, lam) if box is None else box
    cache = new_cache()
    entries = {}
    for mu in box.weights(lam):
        value = kostka_typical(spec, lam, mu, n_jobs=n_jobs, cache=cache)
        if value:
            entries[mu] = value
    logger.info(f'graded character of {lam} for {spec.name} has {len(entries)} weights.')
    return GradedCharacter(spec, lam, entries)


def graded_character_decomposition(spec: AlgebraSpec, lam: Weight, box: Optional[WeightBox] = None) -> GradedCharacter:
    """
    char_q V(λ) through its g0 decomposition: μ -> q^{|λ^(0)|-|μ^(0)|} Σ_γ m_{λ,γ} K^{g0}_{γ,μ}(q).
    """
    _require_gl(spec, 'graded_character_decomposition')
    decomposition = branching_decomposition(spec, lam)
    box = WeightBox.around(spec, list(decomposition) or [lam]) if box is None else box
    cache = new_cache()
    entries = {}
    for mu in box.weights(lam):
        value = qpoly_sum(kostka_g0(spec, gamma, mu, n_jobs=1, cache=cache) * mult
                          for gamma, mult in decomposition.items())
        if value:
            entries[mu] = value.shift(int(lam.size0 - mu.size0))
    return GradedCharacter(spec, lam, entries, name='graded_character_decomposition')


def dimension(spec: AlgebraSpec, lam: Weight) -> int:
    """
    dim V(λ) for typical finite-dimensional λ, from the g0 decomposition and Weyl's formula.
    """
    return sum(mult * weyl_dimension(spec, gamma) for gamma, mult in branching_decomposition(spec, lam).items())


def decompose_thm_tkgl(spec: AlgebraSpec, lam: Weight, mu: Weight,
                       cache: Optional[PartitionCache] = None) -> QPolynomial:
    """
    K_{λ,μ}(q) for gl(n,m) through the g0 branching:
    q^{|λ^(0)|-|μ^(0)|} Σ_γ m_{λ,γ} K^{gl_n}_{γ^(0),μ^(0)}(q) K^{gl_m}_{γ^(1),μ^(1)}(q).
    """
    _require_gl(spec, 'decompose_thm_tkgl')
    spec.check_weight(lam, mu)
    _require_dominant(spec, lam)
    cache = cache if cache is not None else new_cache()
    terms = []
    for gamma, mult in branching_decomposition(spec, lam).items():
        part0 = lusztig_classical(spec, 'n', gamma, mu, cache=cache)
        if not part0:
            continue
        part1 = lusztig_classical(spec, 'm', gamma, mu, cache=cache)
        if part1:
            terms.append(part0 * part1 * mult)
    return qpoly_sum(terms).shift(int(lam.size0 - mu.size0))


def kostka_covariant(spec: AlgebraSpec, lam: Weight, mu: Weight, n_jobs: Optional[int] = None,
                     cache: Optional[PartitionCache] = None) -> QPolynomial:
    """
    coefficient of e^μ in ∇₀(q) Σ_w ε(w) w(e^{λ+ρ₊} ∏_{α∈Δ_{1,λ}⁺} (1 + q e^{-α})).
    """
    spec.check_weight(lam, mu)
    _require_covariant(spec, lam)
    rho_plus = rho(spec).rho_plus.flat
    term = functools.partial(_covariant_term, spec, lam, rho_plus, mu.flat)
    return weyl_sum(enumerate_w(spec), term, n_jobs=n_jobs, cache=cache)


def covariant_box(spec: AlgebraSpec, lam: Weight) -> WeightBox:
    """
    the weights of a covariant module have entries in [0, |λ|].
    """
    size = int(lam.size0 + lam.size1)
    return WeightBox(spec.zero(), Weight.from_flat([2 * size] * (spec.n + spec.m), spec.n))


def graded_character_covariant(spec: AlgebraSpec, lam: Weight, box: Optional[WeightBox] = None,
                               n_jobs: Optional[int] = None) -> GradedCharacter:
    _require_covariant(spec, lam)
    box = covariant_box(spec, lam) if box is None else box
    total = lam.size0 + lam.size1
    cache = new_cache()
    entries = {}
    for mu in box.weights(lam):
        if mu.size0 + mu.size1 != total:
            continue
        value = kostka_covariant(spec, lam, mu, n_jobs=n_jobs, cache=cache)
        if value:
            entries[mu] = value
    return GradedCharacter(spec, lam, entries, name='graded_character_covariant')


def kostka_typical_terms(spec: AlgebraSpec, lam: Weight, mu: Weight) -> KappaTable:
    """
    every (w, κ) with c_q(κ) ℱ_q(w∘λ - μ - κ) ≠ 0, the terms of K_{λ,μ}(q).
    """
    spec.check_weight(lam, mu)
    _require_dominant(spec, lam)
    shift = rho(spec).rho
    cache = new_cache()
    rows = []
    for w in enumerate_w(spec):
        moved = dot(w, lam, shift) - mu
        for kappa, poly in odd_table(spec).items():
            value = _f_q_flat(spec, _sub(moved.flat, kappa), cache)
            if not value:
                continue
            rows.append({
                'kappa': str(Weight.from_flat(kappa, spec.n)),
                'c_q': poly.to_text(),
                'w': str(w),
                'sign': sign(w),
                'f_q': value.to_text(),
                'contribution': (poly * value * sign(w)).to_text(),
            })
    columns = ['kappa', 'c_q', 'w', 'sign', 'f_q', 'contribution']
    return KappaTable(pd.DataFrame(rows, columns=columns))
