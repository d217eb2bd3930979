"""Cycle and walk combinatorics of a graph.

Everything here enumerates by backtracking and is exponential in the worst
case; each enumerator takes a cap and raises ``ResourceLimit`` past it.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations

from .errors import ResourceLimit
from .graphcore import Graph

DEFAULT_CYCLE_CAP = 10**6
DEFAULT_WALK_CAP = 10**6
DEFAULT_PATH_CAP = 10**6


@dataclass(frozen=True)
class SimpleCycle:
    """A cycle as a vertex sequence; ``edge_ids[k]`` joins ``vertices[k]``
    and ``vertices[k + 1]`` (cyclically)."""

    vertices: tuple[int, ...]
    edge_ids: tuple[int, ...]
    index: int = -1

    @property
    def length(self) -> int:
        return len(self.edge_ids)

    @property
    def is_odd(self) -> bool:
        return self.length % 2 == 1

    @property
    def parity(self) -> str:
        return "odd" if self.is_odd else "even"

    @property
    def vertex_set(self) -> frozenset:
        return frozenset(self.vertices)

    def alternating_from(self, x: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Split the edges into the two alternating classes counted from
        vertex ``x``: the class containing the edge leaving ``x`` first."""
        p = self.vertices.index(x)
        rot = self.edge_ids[p:] + self.edge_ids[:p]
        return tuple(sorted(rot[0::2])), tuple(sorted(rot[1::2]))


@dataclass(frozen=True)
class ConnectingPath:
    """Path ``vertices[0] -> vertices[-1]``; ``edge_ids[l]`` joins
    ``vertices[l]`` and ``vertices[l + 1]``. Length zero is allowed only for
    the degenerate case of two cycles meeting at ``vertices[0]``."""

    vertices: tuple[int, ...]
    edge_ids: tuple[int, ...]
    index: int = -1

    @property
    def endpoints(self) -> tuple[int, int]:
        return self.vertices[0], self.vertices[-1]

    @property
    def length(self) -> int:
        return len(self.edge_ids)

    @property
    def plus(self) -> tuple[int, ...]:
        """Even-position edges, counted from the first endpoint."""
        return tuple(sorted(self.edge_ids[0::2]))

    @property
    def minus(self) -> tuple[int, ...]:
        return tuple(sorted(self.edge_ids[1::2]))

    def part(self, sign: int) -> tuple[int, ...]:
        return self.plus if sign > 0 else self.minus


@dataclass(frozen=True)
class ExceptionalPair:
    """Two vertex-disjoint odd cycles with no edge between them.

    ``path_terms`` lists the ``(path, sign)`` combinations kept after
    discarding every signed half-path that is properly divided by another
    path's half of the same sign.
    """

    cycle_indices: tuple[int, int]
    connecting_paths: tuple[ConnectingPath, ...]
    path_terms: tuple[tuple[ConnectingPath, int], ...] = ()


@dataclass(frozen=True)
class PrimitiveEvenWalk:
    """A primitive even closed walk, stored by its two alternating edge
    multisets. ``cycles`` are the global indices of its cycle blocks and
    ``bridges`` its doubled cut edges."""

    cycles: tuple[int, ...]
    bridges: tuple[int, ...]
    plus: tuple[tuple[int, int], ...]
    minus: tuple[tuple[int, int], ...]

    @property
    def edges(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for k, m in self.plus + self.minus:
            out[k] = out.get(k, 0) + m
        return out


# --- cycles -----------------------------------------------------------------

def _canonical(vertices: list[int]) -> tuple[int, ...]:
    p = vertices.index(min(vertices))
    rot = vertices[p:] + vertices[:p]
    if rot[-1] < rot[1]:
        rot = [rot[0]] + rot[1:][::-1]
    return tuple(rot)


def enumerate_simple_cycles(g: Graph, cap: int = DEFAULT_CYCLE_CAP) -> list[SimpleCycle]:
    """All simple cycles, each once, numbered by their sorted edge-id lists."""
    adj = g.adjacency()
    eid = g.edge_index()
    found: set[tuple[int, ...]] = set()

    for s in range(g.n_vertices):
        # cycles whose smallest vertex is s
        path = [s]
        on_path = {s}
        stack = [iter(sorted(w for w, _ in adj[s] if w > s))]
        while stack:
            nxt = next(stack[-1], None)
            if nxt is None:
                stack.pop()
                on_path.discard(path.pop())
                continue
            if nxt in on_path:
                continue
            path.append(nxt)
            on_path.add(nxt)
            if len(path) >= 3 and any(w == s for w, _ in adj[nxt]) and path[1] < path[-1]:
                found.add(_canonical(path))
                if len(found) > cap:
                    raise ResourceLimit("enumerate_simple_cycles", cap)
            stack.append(iter(sorted(w for w, _ in adj[nxt] if w > s and w not in on_path)))

    cycles = []
    for vs in found:
        es = tuple(eid[frozenset((vs[k], vs[(k + 1) % len(vs)]))] for k in range(len(vs)))
        cycles.append((tuple(sorted(es)), vs, es))
    cycles.sort()
    return [SimpleCycle(vs, es, i) for i, (_, vs, es) in enumerate(cycles)]


def odd_cycles(cycles: list[SimpleCycle]) -> list[SimpleCycle]:
    return [c for c in cycles if c.is_odd]


# --- paths ------------------------------------------------------------------

def _paths_between(g: Graph, src: frozenset, dst: frozenset, cap: int,
                   adj=None) -> list[ConnectingPath]:
    """Simple paths from a vertex of ``src`` to a vertex of ``dst`` whose
    interior avoids ``src | dst``; ``src`` and ``dst`` must be disjoint."""
    adj = adj or g.adjacency()
    blocked = src | dst
    out = []
    for a in sorted(src):
        path_v = [a]
        path_e: list[int] = []
        on_path = {a}
        stack = [iter(adj[a])]
        while stack:
            step = next(stack[-1], None)
            if step is None:
                stack.pop()
                on_path.discard(path_v.pop())
                if path_e:
                    path_e.pop()
                continue
            w, k = step
            if w in on_path:
                continue
            if w in dst:
                out.append(ConnectingPath(tuple(path_v + [w]), tuple(path_e + [k])))
                if len(out) > cap:
                    raise ResourceLimit("enumerate_connecting_paths", cap)
                continue
            if w in blocked:
                continue
            path_v.append(w)
            path_e.append(k)
            on_path.add(w)
            stack.append(iter(adj[w]))
    out.sort(key=lambda p: (p.length, p.edge_ids, p.vertices))
    return [ConnectingPath(p.vertices, p.edge_ids, i) for i, p in enumerate(out)]


def enumerate_connecting_paths(g: Graph, ci: SimpleCycle, cj: SimpleCycle,
                               cap: int = DEFAULT_PATH_CAP) -> list[ConnectingPath]:
    """Paths from ``ci`` to ``cj`` internally disjoint from both cycles."""
    if ci.vertex_set & cj.vertex_set:
        raise ValueError("cycles share a vertex; connecting paths are undefined")
    return _paths_between(g, ci.vertex_set, cj.vertex_set, cap)


def _divides(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    return set(a) <= set(b)


def filter_path_terms(paths: list[ConnectingPath]) -> list[tuple[ConnectingPath, int]]:
    """Keep ``(path, sign)`` unless another path's same-sign half properly
    divides this one's (paths are simple, so halves are squarefree)."""
    kept = []
    for sign in (1, -1):
        halves = [p.part(sign) for p in paths]
        for p, h in zip(paths, halves):
            if not any(_divides(o, h) and len(o) < len(h) for o in halves):
                kept.append((p, sign))
    kept.sort(key=lambda t: (t[0].index, -t[1]))
    return kept


def _adjacent(g: Graph, a: frozenset, b: frozenset) -> bool:
    return any((u in a and v in b) or (u in b and v in a) for u, v in g.edges)


def find_exceptional_pairs(g: Graph, cycles: list[SimpleCycle],
                           path_cap: int = DEFAULT_PATH_CAP) -> list[ExceptionalPair]:
    """Pairs ``(i, j)``, ``i < j`` by cycle index, of odd cycles that are
    vertex-disjoint and not joined by an edge."""
    odd = odd_cycles(cycles)
    adj = g.adjacency()
    pairs = []
    for ci, cj in combinations(odd, 2):
        vi, vj = ci.vertex_set, cj.vertex_set
        if vi & vj or _adjacent(g, vi, vj):
            continue
        paths = _paths_between(g, vi, vj, path_cap, adj)
        pairs.append(ExceptionalPair((ci.index, cj.index), tuple(paths),
                                     tuple(filter_path_terms(paths))))
    return pairs


def check_odd_cycle_condition(g: Graph, cycles: list[SimpleCycle] | None = None) -> bool:
    if cycles is None:
        cycles = enumerate_simple_cycles(g)
    return not find_exceptional_pairs(g, cycles)


# --- primitive even closed walks ----------------------------------------------

@dataclass
class _Shape:
    cycles: tuple[int, ...]
    bridges: frozenset
    vertices: frozenset
    cut: frozenset
    attach: dict = field(default_factory=dict)


def _walk_classes(g: Graph, cycles: list[SimpleCycle], shape: _Shape):
    """Two-colour the walk's edges: edges of one block meeting at a cut vertex
    share a colour, the two blocks at a cut vertex get opposite colours, and
    around a non-cut cycle vertex colours alternate."""
    block_of: dict[int, object] = {}
    for ci in shape.cycles:
        for k in cycles[ci].edge_ids:
            block_of[k] = ci
    for k in shape.bridges:
        block_of[k] = ("b", k)
    at: dict[int, list[int]] = {}
    for k in block_of:
        for v in g.edges[k]:
            at.setdefault(v, []).append(k)

    rel: dict[int, list[tuple[int, int]]] = {k: [] for k in block_of}

    def link(x, y, diff):
        rel[x].append((y, diff))
        rel[y].append((x, diff))

    for v, ks in at.items():
        groups: dict[object, list[int]] = {}
        for k in ks:
            groups.setdefault(block_of[k], []).append(k)
        if len(groups) == 1:
            (ks1,) = groups.values()
            link(ks1[0], ks1[1], 1)
        else:
            (b1, g1), (b2, g2) = sorted(groups.items(), key=lambda t: min(t[1]))
            for grp in (g1, g2):
                for k in grp[1:]:
                    link(grp[0], k, 0)
            link(g1[0], g2[0], 1)

    colour: dict[int, int] = {}
    start = min(block_of)
    colour[start] = 0
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for y, d in rel[x]:
            c = colour[x] ^ d
            if y not in colour:
                colour[y] = c
                queue.append(y)
            elif colour[y] != c:
                raise AssertionError("inconsistent walk colouring")
    plus: dict[int, int] = {}
    minus: dict[int, int] = {}
    for k, c in colour.items():
        mult = 2 if k in shape.bridges else 1
        (plus if c == 0 else minus)[k] = mult
    # convention: the side holding the smallest edge id is the plus side
    if min(plus) > min(minus):
        plus, minus = minus, plus
    return tuple(sorted(plus.items())), tuple(sorted(minus.items()))


def enumerate_primitive_even_walks(g: Graph, cycles: list[SimpleCycle] | None = None,
                                   cap: int = DEFAULT_WALK_CAP) -> list[PrimitiveEvenWalk]:
    """Every primitive even closed walk, grown from cycles.

    A walk's subgraph is a tree of blocks, each a cycle or a bridge, every
    cut vertex on exactly two blocks and every leaf block an odd cycle. The
    walk passes each bridge twice and each cycle once; it closes with the
    right parities exactly when every cycle block has length congruent to
    its number of cut vertices mod 2. Shapes are grown one cycle at a time
    (directly at a free cycle vertex, or at the far end of a new bridge
    path) and deduplicated by edge set.
    """
    if cycles is None:
        cycles = enumerate_simple_cycles(g)
    adj = g.adjacency()
    through: dict[int, list[int]] = {v: [] for v in range(g.n_vertices)}
    for c in cycles:
        for v in c.vertices:
            through[v].append(c.index)

    def key(shape):
        return frozenset(k for ci in shape.cycles for k in cycles[ci].edge_ids) | shape.bridges

    seen: set[frozenset] = set()
    walks: dict[frozenset, PrimitiveEvenWalk] = {}
    stack = []
    for c in cycles:
        s = _Shape((c.index,), frozenset(), c.vertex_set, frozenset(), {c.index: 0})
        k = key(s)
        if k not in seen:
            seen.add(k)
            stack.append(s)

    def push(s):
        k = key(s)
        if k in seen:
            return
        seen.add(k)
        if len(seen) > cap:
            raise ResourceLimit("enumerate_primitive_even_walks", cap)
        stack.append(s)

    while stack:
        s = stack.pop()
        if all(cycles[ci].length % 2 == s.attach[ci] % 2 for ci in s.cycles):
            plus, minus = _walk_classes(g, cycles, s)
            walks[key(s)] = PrimitiveEvenWalk(tuple(sorted(s.cycles)), tuple(sorted(s.bridges)),
                                             plus, minus)
            if len(walks) > cap:
                raise ResourceLimit("enumerate_primitive_even_walks", cap)
        owner = {}
        for ci in s.cycles:
            for v in cycles[ci].vertices:
                if v not in s.cut:
                    owner[v] = ci
        for u, cu in owner.items():
            # new cycle glued at u
            for cj in through[u]:
                if cj in s.attach:
                    continue
                if cycles[cj].vertex_set & s.vertices == {u}:
                    att = dict(s.attach)
                    att[cu] += 1
                    att[cj] = 1
                    push(_Shape(s.cycles + (cj,), s.bridges, s.vertices | cycles[cj].vertex_set,
                                s.cut | {u}, att))
            # new bridge path from u, then a cycle at its far end
            path_v = [u]
            path_e: list[int] = []
            on_path = {u}
            it_stack = [iter(adj[u])]
            while it_stack:
                step = next(it_stack[-1], None)
                if step is None:
                    it_stack.pop()
                    on_path.discard(path_v.pop())
                    if path_e:
                        path_e.pop()
                    continue
                w, k = step
                if w in on_path or w in s.vertices:
                    continue
                interior = on_path - {u}
                for cj in through[w]:
                    if cj in s.attach:
                        continue
                    cv = cycles[cj].vertex_set
                    if cv & s.vertices or cv & interior:
                        continue
                    att = dict(s.attach)
                    att[cu] += 1
                    att[cj] = 1
                    new_v = s.vertices | cv | frozenset(path_v)
                    push(_Shape(s.cycles + (cj,), s.bridges | frozenset(path_e + [k]), new_v,
                                s.cut | frozenset(path_v) | {w}, att))
                path_v.append(w)
                path_e.append(k)
                on_path.add(w)
                it_stack.append(iter(adj[w]))

    out = list(walks.values())
    out.sort(key=lambda w: (sum(m for _, m in w.plus), w.plus, w.minus))
    return out
