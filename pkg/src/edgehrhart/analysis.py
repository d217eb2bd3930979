"""Closed forms, the two factoring theorems, and root locations.

Everything that decides equality is exact. Only ``root_report`` touches
floating point, and only after every negative-integer root has been split
off by exact division.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import networkx as nx
import numpy as np

from . import poly
from .errors import HypothesisViolated, InvalidParameter, NumericalInstability
from .graphcore import (Graph, SeparatingFaceSplit, biconnected_decomposition_with_oddments,
                        edge_on_cycle, is_bipartite, require_connected)
from .series import (EhrhartPolynomial, PipelineConfig, RationalSeries, ehrhart_series)

ROOT_TOLERANCE = 1e-9


# --- closed forms -----------------------------------------------------------

@dataclass(frozen=True)
class PolygonTreeProfile:
    """Edge count and cycle-length census of a polygon tree.

    ``f2n[n]`` counts cycles with ``2n`` edges. ``odd_cycle`` is the length
    of the single odd cycle allowed by the non-bipartite extension, if any.
    """

    e: int
    f2n: dict = field(default_factory=dict)
    odd_cycle: int | None = None

    @property
    def f(self) -> int:
        return sum(self.f2n.values())

    @property
    def bipartite(self) -> bool:
        return self.odd_cycle is None

    def validate(self) -> None:
        if any(n < 2 or c < 0 for n, c in self.f2n.items()):
            raise InvalidParameter(f"bad cycle census {self.f2n}")
        if self.odd_cycle is not None and (self.odd_cycle < 3 or self.odd_cycle % 2 == 0):
            raise InvalidParameter(f"odd cycle length {self.odd_cycle}")
        if self.odd_cycle is None and self.f == 0:
            raise InvalidParameter("a polygon tree has at least one cycle")
        # the first cycle contributes all its edges, each later one all but the shared edge
        start = self.odd_cycle if self.odd_cycle is not None else 1
        expected = start + sum((2 * n - 1) * c for n, c in self.f2n.items())
        if self.e != expected:
            raise InvalidParameter(f"edge count {self.e} inconsistent with census "
                                   f"(expected {expected})")

    def to_dict(self) -> dict:
        return {"e": self.e, "f2n": {str(n): c for n, c in sorted(self.f2n.items())},
                "odd_cycle": self.odd_cycle}


def _series(num, power) -> RationalSeries:
    return RationalSeries(tuple(num), power)


def closed_form_series(family: str, param=None) -> RationalSeries:
    """Known series of the families ``edge``, ``even_cycle`` (``2n`` edges),
    ``odd_cycle`` (``2n - 1`` edges), ``ladder`` (``k`` rungs) and
    ``polygon_tree`` (a ``PolygonTreeProfile``)."""
    if family == "edge":
        return _series([1], 1)
    if family == "even_cycle":
        n = _int_param(param, 2, family)
        return _series(poly.geometric(n), 2 * n - 1)
    if family == "odd_cycle":
        n = _int_param(param, 2, family)
        return _series([1], 2 * n - 1)
    if family == "ladder":
        k = _int_param(param, 2, family)
        return _series(poly.power([1, 1], k - 1), 2 * k - 1)
    if family == "polygon_tree":
        if not isinstance(param, PolygonTreeProfile):
            raise InvalidParameter("polygon_tree needs a PolygonTreeProfile")
        param.validate()
        num = [1]
        for n, c in sorted(param.f2n.items()):
            num = poly.mul(num, poly.power(poly.geometric(n), c))
        return _series(num, param.e - param.f)
    raise InvalidParameter(f"unknown family {family!r}")


def _int_param(param, lo, family) -> int:
    if not isinstance(param, int) or isinstance(param, bool) or param < lo:
        raise InvalidParameter(f"{family} needs an integer parameter >= {lo}, got {param!r}")
    return param


def polygon_tree_profile(g: Graph) -> PolygonTreeProfile | None:
    """Recognise a polygon tree by peeling leaf polygons.

    A leaf polygon shows up as a chain of degree-two vertices whose two ends
    are adjacent; removing the chain interior leaves a smaller polygon tree.
    Returns ``None`` if peeling gets stuck or more than one odd cycle turns up.
    """
    h = g.to_networkx()
    lengths: list[int] = []
    while True:
        if all(d == 2 for _, d in h.degree) and nx.is_connected(h):
            lengths.append(h.number_of_edges())
            break
        chain = _leaf_chain(h)
        if chain is None:
            return None
        lengths.append(len(chain))
        h.remove_nodes_from(chain[1:-1])
    odd = [n for n in lengths if n % 2]
    if len(odd) > 1:
        return None
    f2n: dict[int, int] = {}
    for n in lengths:
        if n % 2 == 0:
            f2n[n // 2] = f2n.get(n // 2, 0) + 1
    return PolygonTreeProfile(g.n_edges, f2n, odd[0] if odd else None)


def _walk_chain(h: nx.Graph, w, first):
    """Follow degree-two vertices from ``w`` through ``first``; returns the
    interior passed and the end vertex, or ``None`` on returning to ``w``."""
    prev, cur, inner = w, first, []
    while h.degree(cur) == 2:
        if cur == w:
            return None
        inner.append(cur)
        prev, cur = cur, next(x for x in h.neighbors(cur) if x != prev)
    return inner, cur


def _leaf_chain(h: nx.Graph) -> list | None:
    for w in sorted(h.nodes):
        if h.degree(w) != 2:
            continue
        n1, n2 = sorted(h.neighbors(w))
        left, right = _walk_chain(h, w, n1), _walk_chain(h, w, n2)
        if left is None or right is None:
            return None
        (li, u), (ri, v) = left, right
        if u != v and h.has_edge(u, v):
            return [u] + li[::-1] + [w] + ri + [v]
    return None


# --- factoring theorems -----------------------------------------------------

@dataclass(frozen=True)
class PartSeries:
    edges: tuple[tuple[str, str], ...]
    series: RationalSeries


@dataclass(frozen=True)
class FactoringReport:
    theorem: str  # "first" | "second"
    full: RationalSeries
    parts: tuple[PartSeries, ...]
    predicted: RationalSeries
    equal: bool

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "full": str(self.full),
            "parts": [{"edges": [list(e) for e in p.edges], "series": str(p.series)}
                      for p in self.parts],
            "predicted": str(self.predicted),
            "equal": self.equal,
        }


def _part(g: Graph, edge_ids, config) -> PartSeries:
    sub = g.subgraph(edge_ids)
    return PartSeries(tuple(sub.labelled_edges()), ehrhart_series(sub, config))


def verify_first_factoring(g: Graph, config: PipelineConfig | None = None) -> FactoringReport:
    """Compare the series of ``g`` with the product over the oddment part
    and the remaining bipartite blocks."""
    require_connected(g)
    full = ehrhart_series(g, config)
    parts = tuple(_part(g, p, config) for p in biconnected_decomposition_with_oddments(g).parts())
    pred = RationalSeries((1,), 0)
    for p in parts:
        pred = pred * p.series
    pred = pred.canonical()
    return FactoringReport("first", full, parts, pred, pred == full.canonical())


def check_second_factoring_hypotheses(g: Graph, split: SeparatingFaceSplit) -> None:
    e = split.shared_edge
    one, two = set(split.side_one), set(split.side_two)
    if one & two != {e} or one | two != set(range(g.n_edges)):
        raise HypothesisViolated(1, "sides must cover every edge and share exactly the "
                                    f"edge {e}")
    if not is_bipartite(g.subgraph(split.side_two))[0]:
        raise HypothesisViolated(2, "side two is not bipartite")
    if not edge_on_cycle(g, split.side_two, e):
        raise HypothesisViolated(3, f"shared edge {e} lies on no cycle of side two")


def verify_second_factoring(g: Graph, split: SeparatingFaceSplit,
                            config: PipelineConfig | None = None) -> FactoringReport:
    """``H_G = H_one * (H_two * (1 - t))`` across a separating face."""
    require_connected(g)
    check_second_factoring_hypotheses(g, split)
    full = ehrhart_series(g, config)
    one = _part(g, split.side_one, config)
    two = _part(g, split.side_two, config)
    pred = (one.series * two.series.times_one_minus_t()).canonical()
    return FactoringReport("second", full, (one, two), pred, pred == full.canonical())


# --- roots ------------------------------------------------------------------

@dataclass(frozen=True)
class RootReport:
    roots: tuple[complex, ...]
    integer_roots: tuple[int, ...]
    critical_line: float
    max_deviation: float
    deflation_exact: bool
    in_strip: bool
    dim: int

    @property
    def ok(self) -> bool:
        return self.deflation_exact and self.in_strip and self.max_deviation <= ROOT_TOLERANCE

    def to_dict(self) -> dict:
        return {
            "roots": [[r.real, r.imag] for r in self.roots],
            "integer_roots": list(self.integer_roots),
            "critical_line": self.critical_line,
            "max_deviation": self.max_deviation,
            "deflation_exact": self.deflation_exact,
            "in_strip": self.in_strip,
            "ok": self.ok,
        }


def _divide_linear(p, i):
    """Divide by ``x + i`` if it divides exactly."""
    q, r = poly.divmod_poly(p, [Fraction(i), Fraction(1)])
    return q if not r else None


def square_free_factors(p) -> list[tuple[list, int]]:
    """Yun's algorithm over the rationals: ``p = c * prod q_k^k``."""
    p = [Fraction(c) for c in poly.trim(p)]
    if len(p) <= 1:
        return []
    out = []
    a = poly.monic_gcd(p, poly.derivative(p))
    b = poly.exact_div(p, a)
    c = poly.exact_div(poly.derivative(p), a)
    d = poly.sub(c, poly.derivative(b))
    k = 1
    while len(b) > 1:
        a = poly.monic_gcd(b, d)
        if len(a) > 1:
            out.append((a, k))
        b = poly.exact_div(b, a)
        c = poly.exact_div(d, a)
        d = poly.sub(c, poly.derivative(b))
        k += 1
    return out


def _polished_roots(q) -> list[complex]:
    """Roots of a square-free rational polynomial: companion matrix, then Newton."""
    coeffs = [float(c) for c in q]
    if len(coeffs) == 2:
        return [complex(-coeffs[0] / coeffs[1])]
    guesses = np.roots(coeffs[::-1])
    dq = poly.derivative(q)
    out = []
    for z in guesses:
        z = complex(z)
        step = 0.0
        for _ in range(50):
            fz = complex(poly.evaluate(coeffs, z))
            dz = complex(poly.evaluate([float(c) for c in dq], z))
            if dz == 0:
                break
            step = abs(fz / dz)
            z -= fz / dz
            if step < 1e-15 * max(1.0, abs(z)):
                break
        if step > ROOT_TOLERANCE:
            raise NumericalInstability(f"root near {z} did not converge (last step {step:.2e})")
        out.append(z)
    return out


def root_report(p: EhrhartPolynomial, profile: PolygonTreeProfile) -> RootReport:
    """Split off ``prod_{i=1}^{a} (x + i)`` exactly, with
    ``a = e - 1 - sum n f_2n``, then locate the rest numerically and measure
    the distance of non-integer roots to ``Re x = -(e - sum n f_2n) / 2``."""
    profile.validate()
    weight = sum(n * c for n, c in profile.f2n.items())
    a = profile.e - 1 - weight
    line = -(profile.e - weight) / 2
    rest = p.coefficients()
    exact = True
    integer_roots: list[int] = []
    for i in range(1, a + 1):
        q = _divide_linear(rest, i)
        if q is None:
            exact = False
            continue
        integer_roots.append(-i)
        rest = q
    # further negative-integer roots (for instance on the critical line)
    for i in range(1, p.dim + 2):
        while len(rest) > 1:
            q = _divide_linear(rest, i)
            if q is None:
                break
            integer_roots.append(-i)
            rest = q
    other: list[complex] = []
    for factor, mult in square_free_factors(rest):
        for z in _polished_roots(factor):
            other.extend([z] * mult)
    other.sort(key=lambda z: (round(z.real, 9), round(z.imag, 9)))
    roots = [complex(r) for r in sorted(integer_roots)] + other
    dev = max((abs(z.real - line) for z in other), default=0.0)
    d = p.dim
    strip = all(-d - ROOT_TOLERANCE <= z.real <= d - 1 + ROOT_TOLERANCE for z in roots)
    return RootReport(tuple(roots), tuple(sorted(integer_roots)), line, dev, exact, strip, d)


def rv_step(p: Sequence, alpha) -> list:
    """``f(x - 1) - alpha * f(x)`` on ascending coefficients."""
    shifted = poly.taylor_shift(list(p), -1)
    return poly.sub(shifted, [alpha * c for c in p])


def polynomial_from_hstar(hstar: Sequence[int], dim: int) -> list[complex]:
    """Rebuild ``i(m)`` as ``c prod_j (E - alpha_j) C(m + D, D)`` from the
    roots ``alpha_j`` of the h*-polynomial, ``E`` being the shift ``m -> m - 1``."""
    hstar = poly.trim(list(hstar))
    f: list = [complex(c) for c in poly.binomial_poly(dim, dim)]
    if len(hstar) > 1:
        for alpha in np.roots([float(c) for c in hstar[::-1]]):
            f = rv_step(f, complex(alpha))
    return [hstar[-1] * c for c in f]


def ehrhart_roots_summary(p: EhrhartPolynomial) -> list[complex]:
    """Numerical roots of an arbitrary Ehrhart polynomial (report only)."""
    coeffs = p.coefficients()
    out: list[complex] = []
    for factor, mult in square_free_factors(coeffs):
        for z in _polished_roots(factor):
            out.extend([z] * mult)
    return sorted(out, key=lambda z: (round(z.real, 9), round(z.imag, 9)))


__all__ = [
    "PolygonTreeProfile", "closed_form_series", "polygon_tree_profile",
    "PartSeries", "FactoringReport", "verify_first_factoring", "verify_second_factoring",
    "check_second_factoring_hypotheses", "RootReport", "root_report", "rv_step",
    "polynomial_from_hstar", "square_free_factors", "ehrhart_roots_summary", "ROOT_TOLERANCE",
]
