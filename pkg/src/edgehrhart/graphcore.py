"""Simple undirected graphs, parsing, and the structural queries the
factoring results rely on (bipartiteness, blocks with oddments,
separating faces).

Vertices are opaque string labels. Internally a vertex is the index of its
first appearance and an edge is the pair of endpoint indices, so every
ordering downstream (cycle numbering, term orders) is reproducible.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence

import networkx as nx

from .errors import Disconnected, DuplicateEdge, GraphSyntaxError, LoopEdge


@dataclass(frozen=True)
class Graph:
    """A simple graph; edge ``k`` is ``e_k`` and joins ``edges[k]``."""

    vertices: tuple[str, ...]
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        seen = set()
        for k, (a, b) in enumerate(self.edges):
            if a == b:
                raise LoopEdge(f"edge e_{k} is a loop at {self.vertices[a]!r}")
            key = (min(a, b), max(a, b))
            if key in seen:
                raise DuplicateEdge(
                    f"edge e_{k} repeats {self.vertices[a]!r}-{self.vertices[b]!r}")
            seen.add(key)
        used = {v for e in self.edges for v in e}
        if len(used) != len(self.vertices):
            missing = [self.vertices[v] for v in range(len(self.vertices)) if v not in used]
            raise GraphSyntaxError(f"isolated vertices {missing}")

    @classmethod
    def from_edges(cls, pairs: Iterable[tuple[object, object]]) -> "Graph":
        """Build a graph from label pairs; vertex order is first appearance."""
        index: dict[str, int] = {}
        edges = []
        for a, b in pairs:
            a, b = str(a), str(b)
            for lab in (a, b):
                if lab not in index:
                    index[lab] = len(index)
            edges.append((index[a], index[b]))
        return cls(tuple(index), tuple(edges))

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def labelled_edges(self) -> list[tuple[str, str]]:
        return [(self.vertices[a], self.vertices[b]) for a, b in self.edges]

    def adjacency(self) -> list[list[tuple[int, int]]]:
        """``adj[v]`` lists ``(neighbour, edge_id)`` in edge-id order."""
        adj: list[list[tuple[int, int]]] = [[] for _ in self.vertices]
        for k, (a, b) in enumerate(self.edges):
            adj[a].append((b, k))
            adj[b].append((a, k))
        return adj

    def edge_index(self) -> dict[frozenset, int]:
        return {frozenset(e): k for k, e in enumerate(self.edges)}

    def incidence_vector(self, k: int) -> tuple[int, ...]:
        vec = [0] * self.n_vertices
        a, b = self.edges[k]
        vec[a] = vec[b] = 1
        return tuple(vec)

    def subgraph(self, edge_ids: Iterable[int]) -> "Graph":
        """Edge-induced subgraph; edges keep their relative order."""
        return Graph.from_edges(self.labelled_edges()[k] for k in sorted(edge_ids))

    def to_networkx(self) -> nx.Graph:
        h = nx.Graph()
        h.add_nodes_from(range(self.n_vertices))
        for k, (a, b) in enumerate(self.edges):
            h.add_edge(a, b, id=k)
        return h

    def components(self) -> list[list[int]]:
        return [sorted(c) for c in sorted(nx.connected_components(self.to_networkx()), key=min)]

    def is_connected(self) -> bool:
        return len(self.components()) == 1


def parse_graph(text: str, require_connected: bool = True) -> Graph:
    """Parse the edge-list format: one ``u v`` pair per line, ``#`` comments."""
    index: dict[str, int] = {}
    edges: list[tuple[int, int]] = []
    seen: dict[frozenset, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphSyntaxError(f"expected two vertex labels, got {len(parts)}", line=lineno)
        a, b = parts
        if a == b:
            raise LoopEdge(f"loop at vertex {a!r}", line=lineno)
        key = frozenset(parts)
        if key in seen:
            raise DuplicateEdge(f"edge {a}-{b} already given on line {seen[key]}", line=lineno)
        seen[key] = lineno
        for lab in parts:
            if lab not in index:
                index[lab] = len(index)
        edges.append((index[a], index[b]))
    if not edges:
        raise GraphSyntaxError("no edges")
    g = Graph(tuple(index), tuple(edges))
    if require_connected:
        comps = g.components()
        if len(comps) > 1:
            labelled = [[g.vertices[v] for v in c] for c in comps]
            raise Disconnected(f"graph has {len(comps)} connected components: {labelled}",
                               components=labelled)
    return g


def format_graph(g: Graph) -> str:
    return "".join(f"{a} {b}\n" for a, b in g.labelled_edges())


def require_connected(g: Graph) -> None:
    comps = g.components()
    if len(comps) > 1:
        labelled = [[g.vertices[v] for v in c] for c in comps]
        raise Disconnected(f"graph has {len(comps)} connected components: {labelled}",
                           components=labelled)


def is_bipartite(g: Graph) -> tuple[bool, dict[int, int] | None]:
    """Return ``(True, colouring)`` or ``(False, None)``."""
    colour: dict[int, int] = {}
    adj = g.adjacency()
    for s in range(g.n_vertices):
        if s in colour:
            continue
        colour[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w, _ in adj[v]:
                if w not in colour:
                    colour[w] = 1 - colour[v]
                    queue.append(w)
                elif colour[w] == colour[v]:
                    return False, None
    return True, colour


def dimension(g: Graph) -> int:
    """Dimension of the edge polytope of a connected graph."""
    bip, _ = is_bipartite(g)
    return g.n_vertices - 2 if bip else g.n_vertices - 1


# --- blocks -----------------------------------------------------------------

@dataclass(frozen=True)
class BiconnectedDecomposition:
    """Edge-id sets of the oddment component ``G_0`` and bipartite blocks."""

    oddment_edges: tuple[int, ...] | None
    block_edges: tuple[tuple[int, ...], ...]

    def parts(self) -> list[tuple[int, ...]]:
        head = [self.oddment_edges] if self.oddment_edges is not None else []
        return head + list(self.block_edges)


def blocks(g: Graph) -> list[tuple[int, ...]]:
    """Biconnected components as sorted edge-id tuples, sorted by first edge."""
    h = g.to_networkx()
    out = []
    for comp in nx.biconnected_component_edges(h):
        out.append(tuple(sorted(h.edges[a, b]["id"] for a, b in comp)))
    return sorted(out)


def biconnected_decomposition_with_oddments(g: Graph) -> BiconnectedDecomposition:
    """Merge every non-bipartite block, plus the block-tree paths between
    them, into one connected oddment part; the other blocks stay separate."""
    blks = blocks(g)
    odd = [i for i, b in enumerate(blks) if not is_bipartite(g.subgraph(b))[0]]
    if not odd:
        return BiconnectedDecomposition(None, tuple(blks))

    # block-cut tree: nodes ("B", i) and ("A", v)
    tree = nx.Graph()
    vert_blocks: dict[int, list[int]] = {}
    for i, b in enumerate(blks):
        tree.add_node(("B", i))
        for v in {v for k in b for v in g.edges[k]}:
            vert_blocks.setdefault(v, []).append(i)
    for v, bs in vert_blocks.items():
        if len(bs) > 1:
            for i in bs:
                tree.add_edge(("A", v), ("B", i))

    # minimal subtree spanning the odd blocks: prune unmarked leaves
    keep = {("B", i) for i in odd}
    hull = tree.copy()
    changed = True
    while changed:
        changed = False
        for node in list(hull.nodes):
            if node not in keep and hull.degree(node) <= 1:
                hull.remove_node(node)
                changed = True
    in_hull = sorted(i for kind, i in hull.nodes if kind == "B")
    oddment = tuple(sorted(k for i in in_hull for k in blks[i]))
    rest = tuple(b for i, b in enumerate(blks) if i not in set(in_hull))
    return BiconnectedDecomposition(oddment, rest)


# --- separating faces -------------------------------------------------------

@dataclass(frozen=True)
class SeparatingFaceSplit:
    shared_edge: int
    side_one: tuple[int, ...]
    side_two: tuple[int, ...]
    side_two_bipartite: bool


def _components_without(g: Graph, removed: set[int]) -> list[list[int]]:
    adj = g.adjacency()
    seen: set[int] = set()
    comps = []
    for s in range(g.n_vertices):
        if s in removed or s in seen:
            continue
        comp = [s]
        seen.add(s)
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w, _ in adj[v]:
                if w not in removed and w not in seen:
                    seen.add(w)
                    comp.append(w)
                    queue.append(w)
        comps.append(sorted(comp))
    return comps


def edge_on_cycle(g: Graph, edge_ids: Sequence[int], e: int) -> bool:
    """Whether edge ``e`` lies on a cycle of the edge-induced subgraph."""
    a, b = g.edges[e]
    h = nx.Graph()
    h.add_edges_from(g.edges[k] for k in edge_ids if k != e)
    return a in h and b in h and nx.has_path(h, a, b)


def find_separating_faces(g: Graph) -> list[SeparatingFaceSplit]:
    """Every edge whose removal together with its endpoints disconnects ``g``.

    Side two is one component of ``G - e~`` with its attaching edges and
    ``e``; the component is chosen as the first (by smallest edge id) whose
    side is bipartite with ``e`` on a cycle, falling back to the first one.
    Side one is everything else plus ``e``.
    """
    base = len(g.components())
    out = []
    for e, (u, v) in enumerate(g.edges):
        comps = _components_without(g, {u, v})
        if len(comps) <= base:
            continue
        sides = []
        for comp in comps:
            cs = set(comp)
            side = tuple(sorted({k for k, (a, b) in enumerate(g.edges)
                                 if a in cs or b in cs} | {e}))
            sides.append(side)
        sides.sort()

        def good(side):
            return is_bipartite(g.subgraph(side))[0] and edge_on_cycle(g, side, e)

        chosen = next((s for s in sides if good(s)), sides[0])
        one = tuple(sorted({k for s in sides if s is not chosen for k in s} | {e}))
        out.append(SeparatingFaceSplit(e, one, chosen,
                                       is_bipartite(g.subgraph(chosen))[0]))
    return out


# --- standard families --------------------------------------------------------

def path_graph(n: int) -> Graph:
    return Graph.from_edges((f"v{i}", f"v{i + 1}") for i in range(n - 1))


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges((f"v{i}", f"v{(i + 1) % n}") for i in range(n))


def complete_graph(n: int) -> Graph:
    return Graph.from_edges((f"v{i}", f"v{j}") for i in range(n) for j in range(i + 1, n))


def ladder_graph(k: int) -> Graph:
    """``K_2 x P_k``: two rails of ``k`` vertices joined by ``k`` rungs."""
    pairs = [(f"a{i}", f"b{i}") for i in range(k)]
    pairs += [(f"a{i}", f"a{i + 1}") for i in range(k - 1)]
    pairs += [(f"b{i}", f"b{i + 1}") for i in range(k - 1)]
    return Graph.from_edges(pairs)


def polygon_tree_graph(lengths: Sequence[int], anchors: Sequence[int] = ()) -> Graph:
    """Glue cycles one at a time: the first has ``lengths[0]`` edges, and
    cycle ``i >= 1`` is glued along edge ``anchors[i - 1]`` (an edge id of
    the graph built so far, taken modulo the current edge count)."""
    if not lengths or any(n < 3 for n in lengths):
        raise ValueError("cycle lengths must be at least 3")
    if len(anchors) < len(lengths) - 1:
        raise ValueError("one anchor per glued cycle")
    pairs = [(f"p{i}", f"p{(i + 1) % lengths[0]}") for i in range(lengths[0])]
    fresh = lengths[0]
    for n, anchor in zip(lengths[1:], anchors):
        a, b = pairs[anchor % len(pairs)]
        chain = [a] + [f"p{fresh + i}" for i in range(n - 2)] + [b]
        fresh += n - 2
        pairs += list(zip(chain, chain[1:]))
    return Graph.from_edges(pairs)


BOWTIE_EDGES = [("v0", "v1"), ("v1", "v2"), ("v2", "v0"), ("v0", "v3"),
                ("v3", "v4"), ("v4", "v5"), ("v5", "v6"), ("v4", "v6")]


def bowtie_graph() -> Graph:
    """Two triangles joined by a path of length two (edges ``e_0..e_7``)."""
    return Graph.from_edges(BOWTIE_EDGES)


def glue(g: Graph, h: Graph, vertex_map: dict[str, str], prefix: str = "h") -> Graph:
    """Disjoint union of ``g`` and ``h`` with vertices of ``h`` identified to
    those of ``g`` through ``vertex_map``; an ``h`` edge that lands on an
    existing ``g`` edge is merged into it."""
    pairs = list(g.labelled_edges())
    have = {frozenset(p) for p in pairs}
    for a, b in h.labelled_edges():
        a2 = vertex_map.get(a, f"{prefix}{a}")
        b2 = vertex_map.get(b, f"{prefix}{b}")
        if frozenset((a2, b2)) not in have:
            pairs.append((a2, b2))
            have.add(frozenset((a2, b2)))
    return Graph.from_edges(pairs)
