"""Buchberger's algorithm restricted to pure binomial ideals.

The S-polynomial of two binomials ``a1 - b1``, ``a2 - b2`` is the binomial
``(L/a1) b1 - (L/a2) b2`` and reducing a binomial only ever rewrites each of
its two monomials, so no general polynomial arithmetic is needed. The normal
form of a monomial is again a monomial; a binomial whose two sides reach the
same normal form reduces to zero.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Sequence

from .errors import ResourceLimit
from .ideal import Binomial, Monomial, TermOrder, coprime, divides, lcm, mul, quotient

DEFAULT_PAIR_CAP = 10**6


@dataclass(frozen=True)
class GroebnerBasis:
    order: TermOrder
    elements: tuple[Binomial, ...]
    reduced: bool = True


def _mask(m: Monomial) -> int:
    out = 0
    for i, e in enumerate(m):
        if e:
            out |= 1 << i
    return out


class _Reducer:
    """Leading terms with support bitmasks for quick divisor rejection."""

    def __init__(self, order: TermOrder):
        self.order = order
        self.leads: list[Monomial] = []
        self.trails: list[Monomial] = []
        self.masks: list[int] = []
        self.alive: list[bool] = []

    def append(self, b: Binomial) -> None:
        self.leads.append(b.plus)
        self.trails.append(b.minus)
        self.masks.append(_mask(b.plus))
        self.alive.append(True)

    def reducer_for(self, m: Monomial, mm: int | None = None) -> int:
        if mm is None:
            mm = _mask(m)
        for i, lead in enumerate(self.leads):
            if self.alive[i] and not (self.masks[i] & ~mm) and divides(lead, m):
                return i
        return -1

    def normal_form(self, m: Monomial) -> Monomial:
        while True:
            i = self.reducer_for(m)
            if i < 0:
                return m
            m = mul(quotient(m, self.leads[i]), self.trails[i])


def _oriented(order: TermOrder, t: Monomial, u: Monomial) -> Binomial | None:
    if t == u:
        return None
    if order.key(t) < order.key(u):
        t, u = u, t
    return Binomial(t, u)


def _strip_common(b: Binomial) -> Binomial:
    """Cancel the gcd of both sides.

    Toric ideals are prime and contain no monomials, so ``x (t - u)`` lies
    in the ideal only if ``t - u`` does; the quotient generates a larger
    (still correct) ideal only when the input set was incomplete."""
    g = tuple(min(a, c) for a, c in zip(b.plus, b.minus))
    if any(g):
        return Binomial(quotient(b.plus, g), quotient(b.minus, g))
    return b


def buchberger(gens: Sequence[Binomial], order: TermOrder, max_pairs: int = DEFAULT_PAIR_CAP,
               chain_criterion: bool = True, saturate: bool = False) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal generated by ``gens``.

    Uses the coprime-leading-term criterion and, unless disabled, the chain
    criterion. Pairs are processed in increasing order of their lcm.
    ``saturate`` divides out common factors of new elements; that computes
    the saturation by the variables, which equals the ideal itself only for
    generating sets of a prime toric ideal, so it is off by default.
    """
    key = order.key
    red = _Reducer(order)
    pairs: list = []
    counter = 0
    processed = 0

    def insert(b: Binomial) -> None:
        nonlocal counter
        idx = len(red.leads)
        red.append(b)
        for j in range(idx):
            if not red.alive[j]:
                continue
            if coprime(red.leads[j], b.plus):
                continue
            lc = lcm(red.leads[j], b.plus)
            heapq.heappush(pairs, (key(lc), counter, j, idx, lc))
            counter += 1

    def reduce(t: Monomial, u: Monomial) -> Binomial | None:
        b = _oriented(order, red.normal_form(t), red.normal_form(u))
        if b is not None and saturate:
            b = _strip_common(b)
            b = _oriented(order, red.normal_form(b.plus), red.normal_form(b.minus))
        return b

    for g in gens:
        b = reduce(g.plus, g.minus)
        if b is not None:
            insert(b)

    while pairs:
        _, _, i, j, lc = heapq.heappop(pairs)
        if not (red.alive[i] and red.alive[j]):
            continue
        processed += 1
        if processed > max_pairs:
            raise ResourceLimit("buchberger", max_pairs)
        if chain_criterion and _chain_skip(red, i, j, lc):
            continue
        t = mul(quotient(lc, red.leads[i]), red.trails[i])
        u = mul(quotient(lc, red.leads[j]), red.trails[j])
        b = reduce(t, u)
        if b is not None:
            insert(b)

    return GroebnerBasis(order, _interreduce(red, order), True)


def _chain_skip(red: _Reducer, i: int, j: int, lc: Monomial) -> bool:
    """Skip (i, j) when some k < both, already paired with both, has a
    leading term dividing lcm and lcm(k, i), lcm(k, j) are proper divisors.

    Restricting to earlier elements whose pairs with i and j were queued
    before (i, j) keeps the criterion sound under the lcm-ordered queue.
    """
    for k in range(min(i, j)):
        if not red.alive[k]:
            continue
        lk = red.leads[k]
        if not divides(lk, lc):
            continue
        if lcm(lk, red.leads[i]) != lc and lcm(lk, red.leads[j]) != lc:
            return True
    return False


def _interreduce(red: _Reducer, order: TermOrder) -> tuple[Binomial, ...]:
    key = order.key
    items = [(red.leads[i], red.trails[i]) for i in range(len(red.leads)) if red.alive[i]]
    items.sort(key=lambda t: key(t[0]))
    minimal: list[Monomial] = []
    keep = []
    for lead, trail in items:
        if any(divides(m, lead) for m in minimal):
            continue
        minimal.append(lead)
        keep.append((lead, trail))
    final = _Reducer(order)
    for lead, trail in keep:
        final.append(Binomial(lead, trail))
    out = []
    for lead, trail in keep:
        nf = final.normal_form(trail)
        out.append(Binomial(lead, nf))
    out.sort(key=lambda b: key(b.plus), reverse=True)
    return tuple(out)


def normal_form(m, basis: GroebnerBasis):
    """Normal form of a monomial (a monomial) or of a binomial (a binomial,
    or ``None`` for zero). Reducers are tried in basis order."""
    red = _Reducer(basis.order)
    for b in basis.elements:
        red.append(b)
    if isinstance(m, Binomial):
        return _oriented(basis.order, red.normal_form(m.plus), red.normal_form(m.minus))
    return red.normal_form(tuple(m))


def initial_monomials(basis: GroebnerBasis) -> list[Monomial]:
    key = basis.order.key
    return sorted({b.plus for b in basis.elements}, key=key, reverse=True)


def s_binomial(a: Binomial, b: Binomial) -> tuple[Monomial, Monomial]:
    lc = lcm(a.plus, b.plus)
    return mul(quotient(lc, a.plus), a.minus), mul(quotient(lc, b.plus), b.minus)


def is_groebner(basis: GroebnerBasis) -> bool:
    """Every S-pair reduces to zero."""
    red = _Reducer(basis.order)
    for b in basis.elements:
        red.append(b)
    els = basis.elements
    for i in range(len(els)):
        for j in range(i + 1, len(els)):
            t, u = s_binomial(els[i], els[j])
            if red.normal_form(t) != red.normal_form(u):
                return False
    return True
