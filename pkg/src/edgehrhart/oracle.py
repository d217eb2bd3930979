"""Lattice-point counts of ``m P_G`` computed without any algebra.

``count_lp`` decides membership of each candidate point by an exact
rational phase-one simplex; ``count_monoid`` counts the distinct vertex
images of degree-``m`` monomials over the hyperedge variables.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import ResourceLimit
from .graphcore import Graph, require_connected
from .walks import enumerate_simple_cycles, find_exceptional_pairs

DEFAULT_CANDIDATE_CAP = 10**7


@dataclass(frozen=True)
class LatticePointCount:
    dilation: int
    count: int
    method: str  # "lp-membership" | "monoid-enumeration"


def lp_feasible(A: Sequence[Sequence[int]], z: Sequence[int], m: int) -> bool:
    """Is there a rational ``lam >= 0`` with ``A lam = z`` and ``sum lam = m``?

    Phase one of the simplex method on a dense ``Fraction`` tableau with
    one artificial variable per row and Bland's rule.
    """
    rows = [list(r) for r in A] + [[1] * (len(A[0]) if A else 0)]
    rhs = list(z) + [m]
    if any(b < 0 for b in rhs):
        # flip rows so the artificial basis starts feasible
        for i, b in enumerate(rhs):
            if b < 0:
                rows[i] = [-x for x in rows[i]]
                rhs[i] = -b
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    if n_cols == 0:
        return all(b == 0 for b in rhs)

    width = n_cols + n_rows
    tab = []
    for i in range(n_rows):
        row = [Fraction(x) for x in rows[i]] + [Fraction(int(i == j)) for j in range(n_rows)]
        row.append(Fraction(rhs[i]))
        tab.append(row)
    basis = [n_cols + i for i in range(n_rows)]
    # reduced costs of the phase-one objective: minimise the sum of artificials
    cost = [Fraction(0)] * (width + 1)
    for row in tab:
        for j in range(width + 1):
            cost[j] -= row[j]
    for i in range(n_rows):
        cost[n_cols + i] = Fraction(0)

    while True:
        enter = next((j for j in range(width) if cost[j] < 0), None)
        if enter is None:
            break
        best = None
        for i in range(n_rows):
            a = tab[i][enter]
            if a > 0:
                ratio = tab[i][width] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            # unbounded direction cannot occur: the objective is bounded below by 0
            raise AssertionError("phase one unbounded")
        r = best[1]
        piv = tab[r][enter]
        prow = [x / piv for x in tab[r]]
        tab[r] = prow
        for i in range(n_rows):
            if i != r and tab[i][enter]:
                f = tab[i][enter]
                tab[i] = [x - f * y for x, y in zip(tab[i], prow)]
        f = cost[enter]
        cost = [x - f * y for x, y in zip(cost, prow)]
        basis[r] = enter
    return cost[width] == 0


def _compositions(total: int, parts: int, cap: int):
    """Vectors of ``parts`` integers in ``[0, cap]`` summing to ``total``."""
    if parts == 0:
        if total == 0:
            yield ()
        return
    lo = max(0, total - cap * (parts - 1))
    for first in range(min(cap, total), lo - 1, -1):
        for rest in _compositions(total - first, parts - 1, cap):
            yield (first,) + rest


def _n_candidates(total, parts, cap):
    # inclusion-exclusion count of bounded compositions
    from math import comb
    out = 0
    for k in range(parts + 1):
        rem = total - k * (cap + 1)
        if rem < 0:
            break
        out += (-1) ** k * comb(parts, k) * comb(rem + parts - 1, parts - 1)
    return out


def count_lp(g: Graph, m: int, cap: int = DEFAULT_CANDIDATE_CAP) -> LatticePointCount:
    """Count ``z`` in ``Z^n`` with ``z in m P_G``.

    Every candidate has ``sum z = 2m`` and ``0 <= z_i <= m`` (each unit of
    convex weight adds at most one to a coordinate). Columns through a
    vertex with ``z_v = 0`` must carry zero weight, so they are dropped
    before the LP; a vertex with ``z_v`` larger than the sum over its
    neighbours cannot be covered and is rejected directly.
    """
    if m < 0:
        raise ValueError("dilation must be non-negative")
    if m == 0:
        return LatticePointCount(0, 1, "lp-membership")
    n = g.n_vertices
    if _n_candidates(2 * m, n, m) > cap:
        raise ResourceLimit("count_lp", cap)
    adj = g.adjacency()
    count = 0
    for z in _compositions(2 * m, n, m):
        if any(z[v] > sum(z[w] for w, _ in adj[v]) for v in range(n) if z[v]):
            continue
        cols = [k for k, (a, b) in enumerate(g.edges) if z[a] and z[b]]
        support = [v for v in range(n) if z[v]]
        A = [[1 if v in g.edges[k] else 0 for k in cols] for v in support]
        if not cols:
            continue
        if lp_feasible(A, [z[v] for v in support], m):
            count += 1
    return LatticePointCount(m, count, "lp-membership")


def hyperedge_images(g: Graph, with_theta: bool = True) -> list[tuple[tuple[int, ...], int]]:
    """``(vertex image, psi-degree)`` of every edge and theta variable."""
    items = [(g.incidence_vector(k), 1) for k in range(g.n_edges)]
    if with_theta:
        cycles = enumerate_simple_cycles(g)
        for p in find_exceptional_pairs(g, cycles):
            i, j = p.cycle_indices
            img = [0] * g.n_vertices
            for v in cycles[i].vertices + cycles[j].vertices:
                img[v] += 1
            items.append((tuple(img), sum(img) // 2))
    return items


def count_monoid(g: Graph, m: int, with_theta: bool = True,
                 cap: int = DEFAULT_CANDIDATE_CAP) -> LatticePointCount:
    """Distinct images of monomials of psi-degree ``m`` over ``E u Theta``."""
    require_connected(g)
    items = hyperedge_images(g, with_theta)
    levels: list[set] = [{(0,) * g.n_vertices}]
    for d in range(1, m + 1):
        cur: set = set()
        for img, deg in items:
            if deg <= d:
                for x in levels[d - deg]:
                    cur.add(tuple(a + b for a, b in zip(x, img)))
        if len(cur) > cap:
            raise ResourceLimit("count_monoid", cap)
        levels.append(cur)
    return LatticePointCount(m, len(levels[m]), "monoid-enumeration")
