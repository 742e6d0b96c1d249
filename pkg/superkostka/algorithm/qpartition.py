#!/usr/bin/env python3
# coding: utf-8
"""
@author: superkostka team
@last modified by: superkostka team
@file:qpartition.py
@time:2026/10/13

change log:
    2026/10/13  create file, q-partition functions by memoized suffix recursion.
"""
import threading
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple, Union

import numpy as np

from ..config import sk_conf
from ..core.algebra import AlgebraSpec, Weight, positive_roots, is_covariant, hook_diagram
from ..core.qpolynomial import QPolynomial, qpoly_sum
from ..exceptions import NotCovariant
from ..log_manager import logger

ZERO = QPolynomial.ZERO
ONE = QPolynomial.ONE
Flat = Tuple[int, ...]


class RootListKey(NamedTuple):
    """identifies an ordered positive root list: the algebra and 'n', 'm' or 'odd'"""
    spec: AlgebraSpec
    block: str


class PartitionCache(object):
    """
    memo tables of one top-level query.

    :param max_entries: entry budget, the tables are cleared when it is reached; 0 disables memoization
    """

    def __init__(self, max_entries: Optional[int] = None):
        self.max_entries = sk_conf.cache_entries if max_entries is None else max_entries
        self._tables = {}
        self.hits = 0
        self.misses = 0

    def __len__(self):
        return len(self._tables)

    def get(self, key):
        value = self._tables.get(key)
        if value is None:
            self.misses += 1
        else:
            self.hits += 1
        return value

    def put(self, key, value: QPolynomial):
        if self.max_entries <= 0:
            return
        if len(self._tables) >= self.max_entries:
            logger.debug(f'partition cache reached {self.max_entries} entries, cleared.')
            self._tables.clear()
        self._tables[key] = value

    def clear(self):
        self._tables.clear()


class SharedPartitionCache(PartitionCache):
    """
    process wide memo guarded by a lock; values are inserted only once fully computed.
    """

    def __init__(self, max_entries: Optional[int] = None):
        super(SharedPartitionCache, self).__init__(max_entries=max_entries)
        self._lock = threading.Lock()

    def get(self, key):
        with self._lock:
            return super(SharedPartitionCache, self).get(key)

    def put(self, key, value: QPolynomial):
        with self._lock:
            super(SharedPartitionCache, self).put(key, value)

    def clear(self):
        with self._lock:
            self._tables.clear()


_SHARED_CACHE = None
_SHARED_LOCK = threading.Lock()


def new_cache() -> PartitionCache:
    """
    cache for a new top-level query: the shared one if `sk_conf.shared_cache`, else a private one.
    """
    global _SHARED_CACHE
    if not sk_conf.shared_cache:
        return PartitionCache()
    with _SHARED_LOCK:
        if _SHARED_CACHE is None:
            _SHARED_CACHE = SharedPartitionCache()
        return _SHARED_CACHE


def simple_matrix(cartan: str, dim: int) -> np.ndarray:
    """
    integer matrix sending a doubled block vector to 4 times its simple-root coordinates.

    Type A carries two extra rows (+sum, -sum) forcing the coordinate sum to vanish, the rank one
    torus 'T' only the pair (+x, -x).
    """
    rows = []
    if cartan == 'A':
        rows = [[2] * k + [0] * (dim - k) for k in range(1, dim)]
        rows += [[2] * dim, [-2] * dim]
    elif cartan == 'B':
        rows = [[2] * k + [0] * (dim - k) for k in range(1, dim + 1)]
    elif cartan == 'C':
        rows = [[2] * k + [0] * (dim - k) for k in range(1, dim)]
        rows.append([1] * dim)
    elif cartan == 'D':
        rows = [[2] * k + [0] * (dim - k) for k in range(1, dim - 1)]
        rows.append([1] * (dim - 1) + [-1])
        rows.append([1] * dim)
    elif cartan == 'T':
        rows = [[2], [-2]]
    elif cartan == '':
        return np.zeros((0, dim), dtype=np.int64)
    else:
        raise ValueError(f'unknown classical type {cartan!r}, please check.')
    return np.array(rows, dtype=np.int64).reshape(len(rows), dim)


@dataclass(frozen=True, eq=False)
class RootBlock:
    """
    positive roots of g_n or g_m with the data used to prune the suffix recursion.
    """
    key: RootListKey
    cartan: str
    dim: int
    roots: Tuple[Flat, ...]
    matrix: np.ndarray
    root_coords: np.ndarray
    support: Tuple[np.ndarray, ...]

    @property
    def size(self) -> int:
        return len(self.roots)

    def coordinates(self, eta: Sequence[int]) -> np.ndarray:
        return self.matrix @ np.asarray(eta, dtype=np.int64).reshape(self.dim)

    def in_lattice(self, eta: Sequence[int]) -> bool:
        return bool(np.all(self.coordinates(eta) % 4 == 0))


@lru_cache(maxsize=None)
def root_block(spec: AlgebraSpec, block: str) -> RootBlock:
    """
    :param spec: the algebra
    :param block: 'n' for Δ_n⁺ or 'm' for Δ_m⁺
    :return: RootBlock
    """
    roots = positive_roots(spec)
    if block == 'n':
        cartan, dim = spec.block_types[0], spec.n
        vectors = tuple(r.vector.doubled0 for r in roots.even_n)
    else:
        cartan, dim = spec.block_types[1], spec.m
        vectors = tuple(r.vector.doubled1 for r in roots.even_m)
    matrix = simple_matrix(cartan, dim)
    if vectors:
        root_coords = np.array([matrix @ np.array(v, dtype=np.int64) for v in vectors], dtype=np.int64)
    else:
        root_coords = np.zeros((0, matrix.shape[0]), dtype=np.int64)
    support = []
    for k in range(len(vectors) + 1):
        support.append(np.any(root_coords[k:] > 0, axis=0) if k < len(vectors)
                       else np.zeros(matrix.shape[0], dtype=bool))
    return RootBlock(RootListKey(spec, block), cartan, dim, vectors, matrix, root_coords, tuple(support))


def _lusztig(block: RootBlock, k: int, eta: Flat, cache: PartitionCache) -> QPolynomial:
    if k == block.size:
        return ZERO if any(eta) else ONE
    key = (block.key, k, eta)
    hit = cache.get(key)
    if hit is not None:
        return hit
    coords = block.coordinates(eta)
    if np.any(coords < 0) or np.any(coords[~block.support[k]] != 0):
        result = ZERO
    else:
        rc = block.root_coords[k]
        positive = rc > 0
        j_max = int(np.min(coords[positive] // rc[positive]))
        root = block.roots[k]
        terms = []
        cur = eta
        for j in range(j_max + 1):
            sub = _lusztig(block, k + 1, cur, cache)
            if sub:
                terms.append(sub.shift(j))
            cur = tuple(a - b for a, b in zip(cur, root))
        result = qpoly_sum(terms)
    cache.put(key, result)
    return result


def lusztig_partition(block: RootBlock, eta: Union[Sequence[int], Weight],
                      cache: Optional[PartitionCache] = None) -> QPolynomial:
    """
    Lusztig's q-partition function of one classical block: Σ q^{Σ n_α} over the expressions
    η = Σ n_α α with n_α ≥ 0.

    :param block: RootBlock from `root_block`
    :param eta: doubled block vector, or a Weight whose matching part is used
    :param cache: memo tables, a fresh PartitionCache by default
    :return: QPolynomial, zero when η is outside the cone or the lattice
    """
    if isinstance(eta, Weight):
        eta = eta.doubled0 if block.key.block == 'n' else eta.doubled1
    eta = tuple(int(x) for x in eta)
    if len(eta) != block.dim:
        raise ValueError(f'{eta} does not match a block of dimension {block.dim}, please check.')
    if not block.in_lattice(eta):
        return ZERO
    return _lusztig(block, 0, eta, cache if cache is not None else new_cache())


def _f_q_flat(spec: AlgebraSpec, beta: Flat, cache: PartitionCache) -> QPolynomial:
    block_n = root_block(spec, 'n')
    eta0 = beta[:spec.n]
    if not block_n.in_lattice(eta0):
        return ZERO
    part0 = _lusztig(block_n, 0, eta0, cache)
    if not part0:
        return ZERO
    block_m = root_block(spec, 'm')
    eta1 = beta[spec.n:]
    if not block_m.in_lattice(eta1):
        return ZERO
    part1 = _lusztig(block_m, 0, eta1, cache)
    if not part1:
        return ZERO
    return part0 * part1


def f_q(spec: AlgebraSpec, eta: Weight, cache: Optional[PartitionCache] = None) -> QPolynomial:
    """
    ℱ_q(η) = 𝒫_{n,q}(η^(0)) × 𝒫_{m,q}(η^(1)).
    """
    spec.check_weight(eta)
    return _f_q_flat(spec, eta.flat, cache if cache is not None else new_cache())


@dataclass(frozen=True, eq=False)
class OddStage:
    """
    positive odd roots with the slack bounds used to prune the convolution with c_q.

    slack[i] bounds, row by row, how much the simple coordinates can still grow by removing
    odd roots i, i+1, ...
    """
    key: RootListKey
    roots: Tuple[Flat, ...]
    matrix: np.ndarray
    slack: np.ndarray

    @property
    def size(self) -> int:
        return len(self.roots)


@lru_cache(maxsize=None)
def odd_stage(spec: AlgebraSpec) -> OddStage:
    block_n, block_m = root_block(spec, 'n'), root_block(spec, 'm')
    r0, r1 = block_n.matrix.shape[0], block_m.matrix.shape[0]
    matrix = np.zeros((r0 + r1, spec.n + spec.m), dtype=np.int64)
    matrix[:r0, :spec.n] = block_n.matrix
    matrix[r0:, spec.n:] = block_m.matrix
    roots = tuple(r.vector.flat for r in positive_roots(spec).odd)
    slack = np.zeros((len(roots) + 1, r0 + r1), dtype=np.int64)
    for i in range(len(roots) - 1, -1, -1):
        coords = matrix @ np.array(roots[i], dtype=np.int64)
        slack[i] = slack[i + 1] + np.maximum(-coords, 0)
    return OddStage(RootListKey(spec, 'odd'), roots, matrix, slack)


def _p_q(spec: AlgebraSpec, stage: OddStage, i: int, beta: Flat, cache: PartitionCache) -> QPolynomial:
    if i == stage.size:
        return _f_q_flat(spec, beta, cache)
    key = (stage.key, i, beta)
    hit = cache.get(key)
    if hit is not None:
        return hit
    coords = stage.matrix @ np.asarray(beta, dtype=np.int64)
    if np.any(coords + stage.slack[i] < 0):
        result = ZERO
    else:
        without = _p_q(spec, stage, i + 1, beta, cache)
        reduced = tuple(a - b for a, b in zip(beta, stage.roots[i]))
        result = without + _p_q(spec, stage, i + 1, reduced, cache).shift(1)
    cache.put(key, result)
    return result


def p_q(spec: AlgebraSpec, beta: Weight, cache: Optional[PartitionCache] = None) -> QPolynomial:
    """
    𝒫_q(β) = Σ_κ c_q(κ) ℱ_q(β - κ), the odd roots being taken out one by one (each at most once)
    before the even blocks are evaluated.

    :param spec: the algebra
    :param beta: the weight
    :param cache: memo tables shared by the calls of one query
    :return: QPolynomial
    """
    spec.check_weight(beta)
    return p_q_flat(spec, beta.flat, cache if cache is not None else new_cache())


def p_q_flat(spec: AlgebraSpec, beta: Flat, cache: PartitionCache) -> QPolynomial:
    return _p_q(spec, odd_stage(spec), 0, tuple(beta), cache)


@lru_cache(maxsize=16)
def odd_table(spec: AlgebraSpec) -> Dict[Flat, QPolynomial]:
    """
    coefficients of ∏_{α∈Δ₁⁺} (1 + q e^α), built root by root.
    """
    table = {spec.zero().flat: ONE}
    for root in positive_roots(spec).odd:
        vec = root.vector.flat
        step = dict(table)
        for kappa, poly in table.items():
            moved = tuple(a + b for a, b in zip(kappa, vec))
            step[moved] = step.get(moved, ZERO) + poly.shift(1)
        table = step
    logger.debug(f'odd root table of {spec.name} has {len(table)} weights.')
    return table


def c_q(spec: AlgebraSpec, kappa: Weight) -> QPolynomial:
    spec.check_weight(kappa)
    return odd_table(spec).get(kappa.flat, ZERO)


def c(spec: AlgebraSpec, kappa: Weight) -> int:
    return c_q(spec, kappa).at_one()


def c_flat(spec: AlgebraSpec, kappa: Flat) -> int:
    poly = odd_table(spec).get(kappa)
    return poly.at_one() if poly is not None else 0


def c_q_support(spec: AlgebraSpec) -> List[Weight]:
    return [Weight.from_flat(k, spec.n) for k in odd_table(spec)]


def p_q_convolution(spec: AlgebraSpec, beta: Weight, cache: Optional[PartitionCache] = None) -> QPolynomial:
    """
    𝒫_q(β) as the explicit sum over the support of c_q; slower than `p_q`, kept as a second route.
    """
    spec.check_weight(beta)
    cache = cache if cache is not None else new_cache()
    terms = []
    for kappa, poly in odd_table(spec).items():
        eta = tuple(a - b for a, b in zip(beta.flat, kappa))
        value = _f_q_flat(spec, eta, cache)
        if value:
            terms.append(poly * value)
    return qpoly_sum(terms)


def lambda_odd_roots(spec: AlgebraSpec, lam: Weight) -> Tuple[Flat, ...]:
    """
    Δ_{1,λ}⁺: the roots δ_ī - δ_r for the boxes (i, r) of Y(λ) with i ≤ n and r ≤ m,
    row i of Y(λ) being the part0 coordinate in position i.
    """
    if not is_covariant(spec, lam):
        raise NotCovariant(f'{lam} is not a covariant weight of {spec.name}.')
    rows = hook_diagram(spec, lam)
    roots = []
    for i in range(min(spec.n, len(rows))):
        for r in range(min(spec.m, rows[i])):
            vec = [0] * (spec.n + spec.m)
            vec[i] = 2
            vec[spec.n + r] = -2
            roots.append(tuple(vec))
    return tuple(roots)


@lru_cache(maxsize=256)
def lambda_table(spec: AlgebraSpec, lam: Weight) -> Dict[Flat, int]:
    """
    subset sums of Δ_{1,λ}⁺ with their multiplicities, i.e. the support of c_λ.
    """
    table = {spec.zero().flat: 1}
    for vec in lambda_odd_roots(spec, lam):
        step = dict(table)
        for kappa, count in table.items():
            moved = tuple(a + b for a, b in zip(kappa, vec))
            step[moved] = step.get(moved, 0) + count
        table = step
    return table


def c_lambda(spec: AlgebraSpec, lam: Weight, kappa: Weight) -> int:
    """
    number of subsets of Δ_{1,λ}⁺ summing to κ.
    """
    spec.check_weight(kappa)
    return lambda_table(spec, lam).get(kappa.flat, 0)
