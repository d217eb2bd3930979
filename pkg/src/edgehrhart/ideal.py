"""Monomials and binomials over the hyperedge variables ``F = E u Theta``.

A monomial is a plain tuple of exponents aligned with ``Ring.variables``;
the ring knows each variable's vertex image and psi-degree. Variables are
stored theta-first (by pair), then edges by id, which is also the default
lexicographic priority.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import NamedTuple, Sequence

from .errors import SignResolutionFailure
from .graphcore import Graph
from .walks import (ConnectingPath, ExceptionalPair, PrimitiveEvenWalk, SimpleCycle,
                    _paths_between, filter_path_terms)

Monomial = tuple  # tuple[int, ...]


@dataclass(frozen=True)
class Variable:
    kind: str  # "edge" | "theta"
    key: object  # edge id, or (i, j) cycle indices
    psi_image: tuple[int, ...]

    @property
    def psi_degree(self) -> int:
        return sum(self.psi_image) // 2

    @property
    def name(self) -> str:
        if self.kind == "edge":
            return f"e_{self.key}"
        return "θ_{%d,%d}" % self.key


class Binomial(NamedTuple):
    plus: Monomial
    minus: Monomial


class Ring:
    """Polynomial ring ``K[F]`` graded by psi-degree."""

    def __init__(self, n_vertices: int, variables: Sequence[Variable]):
        self.n_vertices = n_vertices
        self.variables = tuple(variables)
        self.degrees = tuple(v.psi_degree for v in self.variables)
        self._images = tuple(v.psi_image for v in self.variables)
        self.index = {(v.kind, v.key): i for i, v in enumerate(self.variables)}
        for v in self.variables:
            assert sum(v.psi_image) % 2 == 0

    def __len__(self):
        return len(self.variables)

    @property
    def n_theta(self) -> int:
        return sum(1 for v in self.variables if v.kind == "theta")

    def one(self) -> Monomial:
        return (0,) * len(self.variables)

    def monomial(self, edges=(), thetas=()) -> Monomial:
        """Build a monomial from edge ids / theta pairs (repeats multiply)."""
        exps = [0] * len(self.variables)
        for k in edges:
            exps[self.index[("edge", k)]] += 1
        for p in thetas:
            exps[self.index[("theta", tuple(p))]] += 1
        return tuple(exps)

    def degree(self, m: Monomial) -> int:
        return sum(e * d for e, d in zip(m, self.degrees) if e)

    def image(self, m: Monomial) -> tuple[int, ...]:
        out = [0] * self.n_vertices
        for e, img in zip(m, self._images):
            if e:
                for v, c in enumerate(img):
                    if c:
                        out[v] += e * c
        return tuple(out)

    def is_homogeneous(self, b: Binomial) -> bool:
        return self.image(b.plus) == self.image(b.minus)

    def format(self, m: Monomial) -> str:
        parts = []
        for e, v in zip(m, self.variables):
            if e == 1:
                parts.append(v.name)
            elif e > 1:
                parts.append(f"{v.name}^{e}")
        return "*".join(parts) if parts else "1"

    def format_binomial(self, b: Binomial) -> str:
        return f"{self.format(b.plus)} - {self.format(b.minus)}"

    def parse(self, text: str) -> Monomial:
        exps = [0] * len(self.variables)
        names = {v.name: i for i, v in enumerate(self.variables)}
        text = text.strip()
        if text == "1":
            return tuple(exps)
        for tok in text.split("*"):
            name, _, power = tok.partition("^")
            exps[names[name.strip()]] += int(power) if power else 1
        return tuple(exps)

    def parse_binomial(self, text: str) -> Binomial:
        a, b = text.split(" - ")
        return Binomial(self.parse(a), self.parse(b))


def mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x > y else y for x, y in zip(a, b))


def quotient(a: Monomial, b: Monomial) -> Monomial:
    """``a / b``; caller guarantees ``b | a``."""
    return tuple(x - y for x, y in zip(a, b))


def coprime(a: Monomial, b: Monomial) -> bool:
    return not any(x and y for x, y in zip(a, b))


# --- term orders ------------------------------------------------------------

@dataclass(frozen=True)
class TermOrder:
    """``lex`` or weighted ``grevlex``; ``priority`` lists variable indices
    from most to least significant (default: storage order)."""

    kind: str
    priority: tuple[int, ...]
    weights: tuple[int, ...]

    @classmethod
    def lex(cls, ring: Ring, priority=None) -> "TermOrder":
        return cls("lex", tuple(priority or range(len(ring))), ring.degrees)

    @classmethod
    def grevlex(cls, ring: Ring, priority=None) -> "TermOrder":
        return cls("grevlex", tuple(priority or range(len(ring))), ring.degrees)

    @classmethod
    def named(cls, name: str, ring: Ring) -> "TermOrder":
        if name == "lex":
            return cls.lex(ring)
        if name == "grevlex":
            return cls.grevlex(ring)
        raise ValueError(f"unknown term order {name!r}")

    def key(self, m: Monomial):
        """Sort key: ``a < b`` in the order iff ``key(a) < key(b)``."""
        if self.kind == "lex":
            return tuple(m[i] for i in self.priority)
        deg = sum(m[i] * w for i, w in enumerate(self.weights))
        return (deg,) + tuple(-m[i] for i in reversed(self.priority))

    def orient(self, b: Binomial) -> Binomial:
        return b if self.key(b.plus) >= self.key(b.minus) else Binomial(b.minus, b.plus)


def compare(order: TermOrder, a: Monomial, b: Monomial) -> int:
    ka, kb = order.key(a), order.key(b)
    return (ka > kb) - (ka < kb)


# --- variables ----------------------------------------------------------------

def _vertex_vector(n: int, verts) -> tuple[int, ...]:
    out = [0] * n
    for v in verts:
        out[v] += 1
    return tuple(out)


def build_variables(g: Graph, cycles: Sequence[SimpleCycle],
                    pairs: Sequence[ExceptionalPair]) -> Ring:
    variables = []
    for p in sorted(pairs, key=lambda p: p.cycle_indices):
        i, j = p.cycle_indices
        img = _vertex_vector(g.n_vertices, cycles[i].vertices + cycles[j].vertices)
        variables.append(Variable("theta", (i, j), img))
    for k in range(g.n_edges):
        variables.append(Variable("edge", k, g.incidence_vector(k)))
    return Ring(g.n_vertices, variables)


# --- generators -------------------------------------------------------------

FAMILIES = ("walk", "theta_square", "theta_path", "theta_swap", "theta_cross", "theta_share",
            "theta_split")


def perfect_matching(g: Graph, verts) -> list[int] | None:
    """Edge ids of some perfect matching of the subgraph induced on
    ``verts``, or ``None``. Plain backtracking on the smallest vertex."""
    verts = set(verts)
    if not verts:
        return []
    if len(verts) % 2:
        return None
    v = min(verts)
    for w, k in sorted(g.adjacency()[v]):
        if w in verts:
            rest = perfect_matching(g, verts - {v, w})
            if rest is not None:
                return [k] + rest
    return None


def _edge_monomial(ring: Ring, edge_counts) -> Monomial:
    exps = [0] * len(ring)
    for k, m in edge_counts:
        exps[ring.index[("edge", k)]] += m
    return tuple(exps)


class _Builder:
    def __init__(self, g: Graph, ring: Ring, cycles: Sequence[SimpleCycle],
                 pairs: Sequence[ExceptionalPair]):
        self.g = g
        self.ring = ring
        self.cycles = cycles
        self.pair_map = {p.cycle_indices: p for p in pairs}
        self.adj = g.adjacency()
        self.out: dict[str, list[Binomial]] = {f: [] for f in FAMILIES}
        self._seen: set = set()

    def edges(self, ids) -> Monomial:
        return self.ring.monomial(edges=ids)

    def theta(self, i, j) -> Monomial:
        return self.ring.monomial(thetas=[tuple(sorted((i, j)))])

    def add(self, family: str, t: Monomial, u: Monomial) -> None:
        if t == u:
            return
        b = Binomial(t, u)
        if not self.ring.is_homogeneous(b):
            raise SignResolutionFailure(
                f"{family}: non-homogeneous {self.ring.format_binomial(b)}")
        key = frozenset((t, u))
        if key in self._seen:
            return
        self._seen.add(key)
        self.out[family].append(b)

    def halves(self, ci: int, x: int) -> list[Monomial]:
        """The two alternating products of cycle ``ci`` relative to ``x``."""
        a, b = self.cycles[ci].alternating_from(x)
        return [self.edges(a), self.edges(b)]

    def resolve(self, family, lhs: Monomial, rhs_fixed: Monomial, options) -> None:
        """Emit ``lhs - rhs_fixed * prod(choice)`` for every homogeneous choice
        of one monomial from each list in ``options``."""
        img = self.ring.image(lhs)
        hits = 0
        for choice in product(*options):
            m = rhs_fixed
            for c in choice:
                m = mul(m, c)
            if self.ring.image(m) == img:
                self.add(family, lhs, m)
                hits += 1
        if not hits:
            raise SignResolutionFailure(f"{family}: no homogeneous sign choice for "
                                        f"{self.ring.format(lhs)}")

    def tilde(self, i: int, j: int) -> list[Monomial]:
        """``theta_ij`` if exceptional, else edge monomials with image
        ``C_i C_j`` built from alternating products."""
        if (min(i, j), max(i, j)) in self.pair_map:
            return [self.theta(i, j)]
        ci, cj = self.cycles[i], self.cycles[j]
        shared = sorted(ci.vertex_set & cj.vertex_set)
        target = tuple(a + b for a, b in zip(
            _vertex_vector(self.g.n_vertices, ci.vertices),
            _vertex_vector(self.g.n_vertices, cj.vertices)))
        reps = []
        if shared:
            s = shared[0]
            hi, hj = self.halves(i, s), self.halves(j, s)
            reps = [mul(hi[0], hj[1]), mul(hi[1], hj[0])]
        else:
            for k, (a, b) in enumerate(self.g.edges):
                if a in cj.vertex_set and b in ci.vertex_set:
                    a, b = b, a
                if a in ci.vertex_set and b in cj.vertex_set:
                    hi, hj = self.halves(i, a), self.halves(j, b)
                    reps = [mul(mul(hi[1], hj[1]), self.edges([k]))]
                    break
        reps = [r for r in reps if self.ring.image(r) == target]
        if not reps:
            raise SignResolutionFailure(f"no edge representative for cycles {i},{j}")
        return reps

    def paths(self, j: int, k: int) -> list[tuple[ConnectingPath, int]]:
        """Signed path terms between odd cycles ``j`` and ``k`` oriented from
        ``j``; cycles meeting at a vertex give a length-zero path there."""
        cj, ck = self.cycles[j], self.cycles[k]
        shared = sorted(cj.vertex_set & ck.vertex_set)
        if shared:
            return [(ConnectingPath((s,), (), 0), 1) for s in shared]
        key = (min(j, k), max(j, k))
        if key in self.pair_map and j < k:
            return list(self.pair_map[key].path_terms)
        return filter_path_terms(_paths_between(self.g, cj.vertex_set, ck.vertex_set,
                                                10**6, self.adj))


def build_hyperedge_generators(g: Graph, walks: Sequence[PrimitiveEvenWalk],
                               pairs: Sequence[ExceptionalPair], cycles: Sequence[SimpleCycle],
                               ring: Ring, by_family: bool = False):
    """Generators of the hyperedge ideal, in six families.

    1. binomials of primitive even closed walks (a Graver basis of ``I_G``);
    2. ``theta_ij^2 - C_i C_j``;
    3. ``theta_ij N^{+-} - C_i^{-+} C_j^{-+} N^{-+}`` over kept path halves;
    4. ``theta_ij N_jk C_k - theta~_ik N_jk' C_j`` for a third odd cycle k;
    5. ``theta_ij theta_kl - theta~_ik theta~_jl`` (both cross pairings);
    6. ``theta_ij theta_ik - theta~_jk C_i``;
    7. ``theta_ij - theta_ab M`` when odd cycles ``C_a``, ``C_b`` sit on the
       vertex sets of ``C_i``, ``C_j`` and ``M`` perfectly matches the
       leftover vertices through chords (a chorded cycle makes
       ``theta_ij`` reducible, which the first six families miss).

    ``theta~`` is the theta variable when the pair is exceptional and
    otherwise an edge monomial with the same image. Alternating-product
    signs are resolved by requiring equal vertex images; a family item with
    no homogeneous resolution raises ``SignResolutionFailure``.
    """
    bld = _Builder(g, ring, cycles, pairs)
    one = ring.one()
    for w in walks:
        bld.add("walk", _edge_monomial(ring, w.plus), _edge_monomial(ring, w.minus))

    thetas = sorted(p.cycle_indices for p in pairs)
    odd = [c.index for c in cycles if c.is_odd]
    for (i, j) in thetas:
        th = bld.theta(i, j)
        full = bld.edges(cycles[i].edge_ids + cycles[j].edge_ids)
        bld.add("theta_square", mul(th, th), full)

        for path, sign in bld.pair_map[(i, j)].path_terms:
            a, b = path.endpoints
            lhs = mul(th, bld.edges(path.part(sign)))
            rhs = bld.edges(path.part(-sign))
            bld.resolve("theta_path", lhs, rhs, [bld.halves(i, a), bld.halves(j, b)])

        for stay, move in ((i, j), (j, i)):
            for k in odd:
                if k in (i, j):
                    continue
                tildes = bld.tilde(stay, k)
                for path, sign in bld.paths(move, k):
                    a, b = path.endpoints
                    lhs_opts = bld.halves(k, b)
                    for ck_half in lhs_opts:
                        lhs = mul(mul(th, bld.edges(path.part(sign))), ck_half)
                        img = ring.image(lhs)
                        for tl in tildes:
                            for cj_half in bld.halves(move, a):
                                rhs = mul(mul(tl, bld.edges(path.part(-sign))), cj_half)
                                if ring.image(rhs) == img:
                                    bld.add("theta_swap", lhs, rhs)

    for p, q in combinations(thetas, 2):
        common = set(p) & set(q)
        lhs = mul(bld.theta(*p), bld.theta(*q))
        if not common:
            i, j = p
            k, l = q
            for x, y in (((i, k), (j, l)), ((i, l), (j, k))):
                bld.resolve("theta_cross", lhs, one, [bld.tilde(*x), bld.tilde(*y)])
        else:
            (c,) = common
            (x,) = set(p) - common
            (y,) = set(q) - common
            bld.resolve("theta_share", lhs, bld.edges(cycles[c].edge_ids), [bld.tilde(x, y)])

    inside = {i: [a for a in odd if cycles[a].vertex_set <= cycles[i].vertex_set]
              for i in odd}
    for (i, j) in thetas:
        for a in inside[i]:
            rest_i = perfect_matching(g, cycles[i].vertex_set - cycles[a].vertex_set)
            if rest_i is None:
                continue
            for b in inside[j]:
                if (a, b) == (i, j):
                    continue
                rest_j = perfect_matching(g, cycles[j].vertex_set - cycles[b].vertex_set)
                if rest_j is not None:
                    bld.add("theta_split", bld.theta(i, j),
                            mul(bld.theta(a, b), bld.edges(rest_i + rest_j)))

    if by_family:
        return bld.out
    return [b for f in FAMILIES for b in bld.out[f]]
