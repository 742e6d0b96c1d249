#!/usr/bin/env python3
# coding: utf-8
"""
@author: superkostka team
@last modified by: superkostka team
@file:tableaux.py
@time:2026/10/15

change log:
    2026/10/15  create file, semistandard hook tableaux, jeu de taquin and charge.
    2026/10/17  tableau route of the g0 branching.

Letters of the alphabet n̄ < ... < 1̄ < 1 < ... < m are stored as integers, barred ī as -i and unbarred r as r,
so that the integer order is the alphabet order.
"""
from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from typing_extensions import Literal

from ..core.algebra import AlgebraSpec, Weight, conjugate, hook_diagram, is_dominant
from ..core.qpolynomial import QPolynomial, qpoly_sum
from ..exceptions import NotDominant, NotDominantContent, NotApplicable

Cell = Tuple[int, int]


def letter_name(letter: int) -> str:
    return f'{-letter}̄' if letter < 0 else str(letter)


@dataclass(frozen=True)
class ClassicalTableau:
    """
    a (possibly skew) semistandard tableau over positive letters.

    Row i occupies the columns inner[i], ..., inner[i] + len(rows[i]) - 1.
    """
    rows: Tuple[Tuple[int, ...], ...]
    inner: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, 'inner', (tuple(self.inner) + (0,) * len(self.rows))[:len(self.rows)])

    @classmethod
    def from_cells(cls, cells: Dict[Cell, int], inner: Sequence[int] = ()) -> 'ClassicalTableau':
        if not cells:
            return cls(())
        height = max(i for i, _ in cells) + 1
        inner = list(inner) + [0] * height
        rows = []
        for i in range(height):
            row = sorted((j, v) for (r, j), v in cells.items() if r == i)
            rows.append(tuple(v for _, v in row))
            if row:
                inner[i] = row[0][0]
        # drop empty bottom rows
        while rows and not rows[-1]:
            rows.pop()
        return cls(tuple(rows), tuple(inner[:len(rows)]))

    @property
    def shape(self) -> Tuple[int, ...]:
        """outer shape"""
        return tuple(a + len(r) for a, r in zip(self.inner, self.rows))

    @property
    def is_straight(self) -> bool:
        return not any(self.inner)

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def cells(self) -> Dict[Cell, int]:
        return {(i, a + j): v for i, (a, row) in enumerate(zip(self.inner, self.rows)) for j, v in enumerate(row)}

    def content(self) -> Tuple[int, ...]:
        """number of occurrences of the letters 1, 2, ..., largest letter"""
        counts = Counter(v for row in self.rows for v in row)
        top = max(counts) if counts else 0
        return tuple(counts.get(k, 0) for k in range(1, top + 1))

    def reading_word(self) -> Tuple[int, ...]:
        """rows from bottom to top, each read left to right"""
        return tuple(v for row in reversed(self.rows) for v in row)

    def is_semistandard(self) -> bool:
        cells = self.cells()
        for (i, j), v in cells.items():
            right = cells.get((i, j + 1))
            below = cells.get((i + 1, j))
            if right is not None and right < v:
                return False
            if below is not None and below <= v:
                return False
        return True

    def transpose(self) -> 'ClassicalTableau':
        """reflect cells (i, j) -> (j, i); the inner shape is conjugated with them."""
        return ClassicalTableau.from_cells({(j, i): v for (i, j), v in self.cells().items()},
                                           conjugate(self.inner))

    def __str__(self):
        return '\n'.join(' ' * (2 * a) + ' '.join(str(v) for v in row) for a, row in zip(self.inner, self.rows))


@dataclass(frozen=True)
class HookTableau:
    """
    a filling of the hook diagram Y(λ) over n̄ < ... < 1̄ < 1 < ... < m.
    """
    spec: AlgebraSpec
    rows: Tuple[Tuple[int, ...], ...]

    @property
    def shape(self) -> Tuple[int, ...]:
        return tuple(len(r) for r in self.rows)

    def content(self) -> Weight:
        """
        coordinate of δ_ī is the number of letters ī, of δ_r the number of letters r.
        """
        n, m = self.spec.n, self.spec.m
        d0 = [0] * n
        d1 = [0] * m
        for row in self.rows:
            for v in row:
                if v < 0:
                    d0[n + v] += 2
                else:
                    d1[v - 1] += 2
        return Weight(tuple(d0), tuple(d1))

    def is_valid(self) -> bool:
        n, m = self.spec.n, self.spec.m
        cells = {(i, j): v for i, row in enumerate(self.rows) for j, v in enumerate(row)}
        for (i, j), v in cells.items():
            if v == 0 or v < -n or v > m:
                return False
            right = cells.get((i, j + 1))
            if right is not None and (right < v or (right == v and v > 0)):
                return False
            below = cells.get((i + 1, j))
            if below is not None and (below < v or (below == v and v < 0)):
                return False
        return True

    def __str__(self):
        return '\n'.join(' '.join(letter_name(v) for v in row) for row in self.rows)


def _alphabet(spec: AlgebraSpec) -> List[int]:
    return list(range(-spec.n, 0)) + list(range(1, spec.m + 1))


def _content_budget(spec: AlgebraSpec, mu: Weight) -> Optional[Dict[int, int]]:
    if not mu.is_integral or any(d < 0 for d in mu.flat):
        return None
    budget = {}
    for pos, d in enumerate(mu.doubled0):
        budget[pos - spec.n] = d // 2
    for pos, d in enumerate(mu.doubled1):
        budget[pos + 1] = d // 2
    return budget


def iter_ssht(spec: AlgebraSpec, lam: Weight, mu: Optional[Weight] = None) -> Iterator[HookTableau]:
    """
    semistandard hook tableaux of shape Y(λ), of content μ when given, by backtracking in row-major order.
    """
    rows = hook_diagram(spec, lam)
    alphabet = _alphabet(spec)
    if mu is not None:
        spec.check_weight(mu)
        budget = _content_budget(spec, mu)
        if budget is None or sum(budget.values()) != sum(rows):
            return
    else:
        budget = None
    order = [(i, j) for i, length in enumerate(rows) for j in range(length)]
    grid = {}

    def admissible(i, j, v):
        left = grid.get((i, j - 1))
        if left is not None and (v < left or (v == left and v > 0)):
            return False
        up = grid.get((i - 1, j))
        if up is not None and (v < up or (v == up and v < 0)):
            return False
        return True

    def recurse(k):
        if k == len(order):
            yield HookTableau(spec, tuple(tuple(grid[(i, j)] for j in range(length))
                                          for i, length in enumerate(rows)))
            return
        i, j = order[k]
        for v in alphabet:
            if budget is not None and budget[v] == 0:
                continue
            if not admissible(i, j, v):
                continue
            grid[(i, j)] = v
            if budget is not None:
                budget[v] -= 1
            yield from recurse(k + 1)
            if budget is not None:
                budget[v] += 1
            del grid[(i, j)]

    yield from recurse(0)


def enumerate_ssht(spec: AlgebraSpec, lam: Weight, mu: Optional[Weight] = None) -> List[HookTableau]:
    """
    SSHT(λ)_μ, or every semistandard hook tableau of shape Y(λ) when μ is None.

    :param spec: gl(n,m)
    :param lam: covariant weight
    :param mu: content, optional
    :return: list of HookTableau in backtracking order
    """
    return list(iter_ssht(spec, lam, mu))


def _slide_out(cells: Dict[Cell, int], i: int, j: int):
    """move the hole at (i, j) to the outer boundary"""
    while True:
        right = cells.get((i, j + 1))
        below = cells.get((i + 1, j))
        if right is None and below is None:
            return
        if below is not None and (right is None or below <= right):
            cells[(i, j)] = below
            del cells[(i + 1, j)]
            i += 1
        else:
            cells[(i, j)] = right
            del cells[(i, j + 1)]
            j += 1


def jdt_rectify(skew: ClassicalTableau, policy: Literal['bottom', 'top'] = 'bottom') -> ClassicalTableau:
    """
    rectify a skew tableau by jeu de taquin slides into the inner corners.

    :param skew: semistandard skew tableau
    :param policy: slide into the lowest ('bottom') or the highest ('top') inner corner first
    :return: straight ClassicalTableau
    """
    if policy not in ('bottom', 'top'):
        raise ValueError(f'policy should be "bottom" or "top", got {policy!r}.')
    cells = skew.cells()
    inner = list(skew.inner)
    while any(inner):
        corners = [i for i in range(len(inner))
                   if inner[i] > 0 and (i + 1 == len(inner) or inner[i + 1] < inner[i])]
        i = corners[-1] if policy == 'bottom' else corners[0]
        inner[i] -= 1
        _slide_out(cells, i, inner[i])
    return ClassicalTableau.from_cells(cells)


def rs_insert(word: Sequence[int]) -> ClassicalTableau:
    """
    row insertion tableau P(word).
    """
    rows: List[List[int]] = []
    for letter in word:
        x = letter
        for row in rows:
            bump = next((k for k, v in enumerate(row) if v > x), None)
            if bump is None:
                row.append(x)
                x = None
                break
            row[bump], x = x, row[bump]
        if x is not None:
            rows.append([x])
    return ClassicalTableau(tuple(tuple(r) for r in rows))


def split(tableau: HookTableau) -> Tuple[ClassicalTableau, ClassicalTableau]:
    """
    θ(T) = (T^(0), T^(1)).

    T^(0) keeps the barred letters, relabelled n̄ -> 1, ..., 1̄ -> n. T^(1) is the rectification of the
    unbarred skew piece reflected in the diagonal.
    """
    n = tableau.spec.n
    barred = tuple(tuple(n + 1 + v for v in row if v < 0) for row in tableau.rows)
    barred = tuple(r for r in barred if r)
    t0 = ClassicalTableau(barred)
    cells = {}
    for i, row in enumerate(tableau.rows):
        for j, v in enumerate(row):
            if v > 0:
                cells[(j, i)] = v
    inner = conjugate([len(r) for r in barred])
    if not cells:
        return t0, ClassicalTableau(())
    reflected = ClassicalTableau.from_cells(cells, inner)
    return t0, jdt_rectify(reflected)


def _is_partition(values: Sequence[int]) -> bool:
    return all(a >= b for a, b in zip(values, values[1:]))


def charge(tableau: ClassicalTableau) -> int:
    """
    Lascoux-Schützenberger charge of the reading word.

    Standard subwords are extracted by scanning leftwards cyclically from the right end for 1, 2, ...;
    the index starts at 0 and grows by one at every wrap-around, the charge adds up the indices.
    """
    content = tableau.content()
    if not _is_partition(content):
        raise NotDominantContent(f'charge needs a partition content, got {content}.')
    word = list(tableau.reading_word())
    total = 0
    while word:
        top = max(word)
        pos = len(word)
        index = 0
        taken = []
        for letter in range(1, top + 1):
            found = next((p for p in range(pos - 1, -1, -1) if word[p] == letter), None)
            if found is None:
                index += 1
                found = next(p for p in range(len(word) - 1, pos, -1) if word[p] == letter)
            total += index
            taken.append(found)
            pos = found
        taken = set(taken)
        word = [v for p, v in enumerate(word) if p not in taken]
    return total


def super_charge(tableau: HookTableau) -> int:
    """ch(T) = ch(T^(0)) + ch(T^(1))"""
    t0, t1 = split(tableau)
    return charge(t0) + charge(t1)


def kostka_charge(spec: AlgebraSpec, lam: Weight, mu: Weight) -> QPolynomial:
    """
    K_{λ,μ}(q) = q^{|λ^(0)|-|μ^(0)|} Σ_{T∈SSHT(λ)_μ} q^{ch(T)}.
    """
    if not spec.is_gl:
        raise NotApplicable(f'kostka_charge is only defined for gl(n,m), got {spec.name}.')
    spec.check_weight(lam, mu)
    if not is_dominant(spec, mu):
        raise NotDominant(f'{mu} is not a dominant weight of {spec.name}, please check.')
    shift = int(lam.size0 - mu.size0)
    poly = qpoly_sum(QPolynomial.monomial(super_charge(t)) for t in iter_ssht(spec, lam, mu))
    return poly.shift(shift)


def iter_ssyt(shape: Sequence[int], content: Sequence[int]) -> Iterator[ClassicalTableau]:
    """
    straight semistandard tableaux of the given shape with letter k used content[k-1] times.
    """
    shape = [s for s in shape if s > 0]
    if sum(shape) != sum(content) or any(c < 0 for c in content):
        return
    order = [(i, j) for i, length in enumerate(shape) for j in range(length)]
    budget = list(content)
    grid = {}

    def recurse(k):
        if k == len(order):
            yield ClassicalTableau(tuple(tuple(grid[(i, j)] for j in range(length)) for i, length in enumerate(shape)))
            return
        i, j = order[k]
        low = max(grid.get((i, j - 1), 1), grid.get((i - 1, j), 0) + 1)
        for v in range(low, len(budget) + 1):
            if budget[v - 1] == 0:
                continue
            grid[(i, j)] = v
            budget[v - 1] -= 1
            yield from recurse(k + 1)
            budget[v - 1] += 1
            del grid[(i, j)]

    yield from recurse(0)


def kostka_foulkes(shape: Sequence[int], content: Sequence[int]) -> QPolynomial:
    """classical K_{shape,content}(q) = Σ q^{ch(T)} over SSYT(shape)_content"""
    if not _is_partition(list(content)):
        raise NotDominantContent(f'kostka_foulkes needs a partition content, got {tuple(content)}.')
    return qpoly_sum(QPolynomial.monomial(charge(t)) for t in iter_ssyt(shape, content))


def _halves(doubled: Sequence[int]) -> List[int]:
    return [d // 2 for d in doubled]


def kostka_g0_charge(spec: AlgebraSpec, gamma: Weight, mu: Weight) -> QPolynomial:
    """
    Σ q^{ch(T0)+ch(T1)} over pairs of tableaux of shapes (γ^(0), γ^(1)) and content μ, for gl(n,m)
    with γ and μ both made of partitions.
    """
    if not spec.is_gl:
        raise NotApplicable(f'kostka_g0_charge is only defined for gl(n,m), got {spec.name}.')
    spec.check_weight(gamma, mu)
    part0 = kostka_foulkes(_halves(gamma.doubled0), _halves(mu.doubled0))
    if not part0:
        return part0
    return part0 * kostka_foulkes(_halves(gamma.doubled1), _halves(mu.doubled1))


def _is_key(tableau: ClassicalTableau) -> bool:
    return all(v == i + 1 for i, row in enumerate(tableau.rows) for v in row)


def branching_from_tableaux(spec: AlgebraSpec, lam: Weight) -> Dict[Weight, int]:
    """
    m_{λ,γ} counted as the tableaux T of shape Y(λ) with both halves of θ(T) of highest weight.
    """
    counts = Counter()
    n, m = spec.n, spec.m
    for t in iter_ssht(spec, lam):
        t0, t1 = split(t)
        if not (_is_key(t0) and _is_key(t1)):
            continue
        g0 = list(t0.shape) + [0] * n
        g1 = list(t1.shape) + [0] * m
        counts[spec.weight(g0[:n], g1[:m])] += 1
    return dict(counts)
