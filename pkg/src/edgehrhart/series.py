"""From initial monomials to the Ehrhart series and polynomial.

The multigraded numerator of ``K[F]/in(I)`` is the Moebius sum over the
lcm-lattice of the initial monomials; substituting ``t^deg`` for every
variable and cancelling against ``prod (1 - t^deg)`` gives the series in
the canonical form ``h*(t) / (1 - t)^(D + 1)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import Sequence

from . import poly
from .errors import ResourceLimit
from .graphcore import Graph, dimension, require_connected
from .groebner import DEFAULT_PAIR_CAP, GroebnerBasis, buchberger, initial_monomials
from .ideal import Binomial, Monomial, Ring, TermOrder, build_hyperedge_generators, \
    build_variables, lcm
from .walks import (DEFAULT_CYCLE_CAP, DEFAULT_WALK_CAP, ExceptionalPair, PrimitiveEvenWalk,
                    SimpleCycle, enumerate_primitive_even_walks, enumerate_simple_cycles,
                    find_exceptional_pairs)

DEFAULT_LCM_CAP = 10**6


@dataclass(frozen=True)
class MoebiusSum:
    terms: dict

    def coefficient(self, m: Monomial) -> int:
        return self.terms.get(tuple(m), 0)


def moebius_sum(atoms: Sequence[Monomial], cap: int = DEFAULT_LCM_CAP) -> MoebiusSum:
    """``sum over subsets S of atoms of (-1)^|S| lcm(S)``, like terms collected.

    Built by adding atoms one at a time: ``P <- P - lcm(P, a)`` where
    ``lcm(., a)`` acts termwise. Zero coefficients are dropped as they
    appear, which is exact because the update is linear.
    """
    atoms = [tuple(a) for a in atoms]
    if len(set(atoms)) != len(atoms):
        raise ValueError("atoms must be pairwise distinct")
    if not atoms:
        return MoebiusSum({})
    if any(not any(a) for a in atoms):
        raise ValueError("atom equal to 1")
    one = (0,) * len(atoms[0])
    terms: dict[Monomial, int] = {one: 1}
    for a in atoms:
        new = dict(terms)
        for m, c in terms.items():
            key = lcm(m, a)
            v = new.get(key, 0) - c
            if v:
                new[key] = v
            else:
                new.pop(key, None)
        terms = new
        if len(terms) > cap:
            raise ResourceLimit("moebius_sum", cap)
    return MoebiusSum(terms)


def specialize(ms: MoebiusSum, degrees: Sequence[int]) -> list[int]:
    """Univariate numerator ``U(t)``: each monomial becomes ``t^deg``."""
    if not ms.terms:
        return [1]
    out: dict[int, int] = {}
    for m, c in ms.terms.items():
        d = sum(e * w for e, w in zip(m, degrees))
        out[d] = out.get(d, 0) + c
    return poly.trim([out.get(i, 0) for i in range(max(out) + 1)])


@dataclass(frozen=True)
class RationalSeries:
    """``numerator(t) / (1 - t)^denominator_power`` with integer numerator."""

    numerator: tuple[int, ...]
    denominator_power: int

    def __str__(self):
        return f"({poly.format_poly(self.numerator)})/(1-t)^{self.denominator_power}"

    def __mul__(self, other: "RationalSeries") -> "RationalSeries":
        return RationalSeries(tuple(poly.mul(self.numerator, other.numerator)),
                              self.denominator_power + other.denominator_power)

    def times_one_minus_t(self, k: int = 1) -> "RationalSeries":
        """Multiply by ``(1 - t)^k``, cancelling into the denominator."""
        return RationalSeries(self.numerator, self.denominator_power - k)

    def canonical(self) -> "RationalSeries":
        num, k = poly.strip_one_minus_t(list(self.numerator))
        return RationalSeries(tuple(num), self.denominator_power - k)

    def coefficients(self, n: int) -> list[int]:
        """First ``n`` Taylor coefficients."""
        k = self.denominator_power
        inv = [comb(i + k - 1, k - 1) if k > 0 else int(i == 0) for i in range(n)]
        return [sum(self.numerator[j] * inv[i - j] for j in range(min(i + 1, len(self.numerator))))
                for i in range(n)]

    @classmethod
    def parse(cls, text: str) -> "RationalSeries":
        m = re.fullmatch(r"\s*\((.*)\)\s*/\s*\(1-t\)\^(\d+)\s*", text)
        if not m:
            raise ValueError(f"not a series string: {text!r}")
        return cls(tuple(poly.parse_poly(m.group(1))), int(m.group(2)))


@dataclass(frozen=True)
class EhrhartPolynomial:
    """``i(m) = sum_j h*_j C(m + D - j, D)``."""

    hstar: tuple[int, ...]
    dim: int

    def __call__(self, m: int) -> int:
        if m < 0:
            return int(poly.evaluate(self.coefficients(), m))
        return sum(h * comb(m + self.dim - j, self.dim)
                   for j, h in enumerate(self.hstar) if m + self.dim - j >= 0)

    def coefficients(self) -> list[Fraction]:
        """Exact rational coefficients in the monomial basis, ascending."""
        out: list = []
        for j, h in enumerate(self.hstar):
            if h:
                out = poly.add(out, poly.scale(poly.binomial_poly(self.dim - j, self.dim), h))
        return [Fraction(c) for c in out]

    def hstar_form(self, var: str = "m") -> str:
        parts = []
        for j, h in enumerate(self.hstar):
            if not h:
                continue
            shift = self.dim - j
            arg = var if shift == 0 else (f"{var} + {shift}" if shift > 0 else f"{var} - {-shift}")
            term = f"C({arg}, {self.dim})"
            parts.append(term if h == 1 else f"{h}*{term}")
        return " + ".join(parts).replace("+ -", "- ")

    def monomial_form(self, var: str = "m") -> str:
        return poly.format_poly(self.coefficients(), var)


def ehrhart_polynomial(rs: RationalSeries) -> EhrhartPolynomial:
    return EhrhartPolynomial(tuple(rs.numerator), rs.denominator_power - 1)


# --- pipeline ---------------------------------------------------------------

@dataclass
class PipelineConfig:
    order: str = "lex"
    cycle_cap: int = DEFAULT_CYCLE_CAP
    walk_cap: int = DEFAULT_WALK_CAP
    pair_cap: int = DEFAULT_PAIR_CAP
    lcm_cap: int = DEFAULT_LCM_CAP


@dataclass
class PipelineResult:
    graph: Graph
    cycles: list[SimpleCycle]
    pairs: list[ExceptionalPair]
    walks: list[PrimitiveEvenWalk]
    ring: Ring
    generators: dict[str, list[Binomial]]
    basis: GroebnerBasis
    initial: list[Monomial]
    moebius: MoebiusSum
    raw_numerator: list[int] = field(default_factory=list)
    series: RationalSeries | None = None

    @property
    def polynomial(self) -> EhrhartPolynomial:
        return ehrhart_polynomial(self.series)


def canonical_series(raw_numerator: Sequence[int], ring: Ring, dim: int) -> RationalSeries:
    """Cancel ``U(t) / prod_{x in F} (1 - t^deg x)`` down to
    ``h*(t) / (1 - t)^(dim + 1)``; a mismatch is an internal error."""
    num = list(raw_numerator)
    for d in ring.degrees:
        if d > 1:
            num = poly.exact_div(num, poly.geometric(d))
    num = [int(c) for c in num]
    rs = RationalSeries(tuple(num), len(ring)).canonical()
    if rs.denominator_power != dim + 1:
        raise AssertionError(
            f"denominator power {rs.denominator_power} != dim + 1 = {dim + 1}")
    if rs.numerator[0] != 1:
        raise AssertionError("series numerator does not start with 1")
    return rs


def run_pipeline(g: Graph, config: PipelineConfig | None = None,
                 with_theta: bool = True) -> PipelineResult:
    """Cycles, walks, generators, Groebner basis, Moebius sum, series.

    ``with_theta=False`` drops the hyperedge variables, giving the Hilbert
    series of the plain edge ring instead of the Ehrhart series.
    """
    config = config or PipelineConfig()
    require_connected(g)
    cycles = enumerate_simple_cycles(g, cap=config.cycle_cap)
    pairs = find_exceptional_pairs(g, cycles) if with_theta else []
    walks = enumerate_primitive_even_walks(g, cycles, cap=config.walk_cap)
    ring = build_variables(g, cycles, pairs)
    gens = build_hyperedge_generators(g, walks, pairs, cycles, ring, by_family=True)
    order = TermOrder.named(config.order, ring)
    flat = [b for fam in gens.values() for b in fam]
    basis = buchberger(flat, order, max_pairs=config.pair_cap)
    initial = initial_monomials(basis)
    ms = moebius_sum(initial, cap=config.lcm_cap)
    raw = specialize(ms, ring.degrees)
    if initial and poly.evaluate(raw, 1) != 0:
        raise AssertionError("specialized Moebius sum does not vanish at t = 1")
    series = canonical_series(raw, ring, dimension(g))
    return PipelineResult(g, cycles, pairs, walks, ring, gens, basis, initial, ms, raw, series)


def ehrhart_series(g: Graph, config: PipelineConfig | None = None) -> RationalSeries:
    return run_pipeline(g, config).series


def hilbert_series_edge_ring(g: Graph, config: PipelineConfig | None = None) -> RationalSeries:
    return run_pipeline(g, config, with_theta=False).series
