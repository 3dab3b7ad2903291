"""Labeled trees: parsing, rendering, random generation, structural queries.

Trees are immutable values over string vertex labels.  The edge-list text
format is one ``u v`` pair per line, ``#`` starts a comment line, blank
lines are skipped, and a lone ``u`` line denotes the one-vertex tree.

A WeightedTree couples a tree with one weight payload per vertex (a
degree-indexed vector of polynomials, see subtree_enum / bc_enum) and one
polynomial per edge.  Contraction steps produce new WeightedTree values;
the underlying polynomials are immutable and shared.
"""

from __future__ import annotations

import heapq
import random
from typing import Iterable, Mapping, Sequence

from .bipoly import BiPoly, Z
from .errors import NotATree, NotPendant, ParseError, SameVertex, UnknownVertex


def _check_label(label: str) -> str:
    if not isinstance(label, str) or not label:
        raise ParseError(f"vertex label must be a non-empty string, got {label!r}")
    if "#" in label or any(ch.isspace() for ch in label):
        raise ParseError(f"vertex label {label!r} contains '#' or whitespace")
    return label


def edge_key(u: str, v: str) -> tuple[str, str]:
    """Normalized (sorted) form of an undirected edge."""
    return (u, v) if u <= v else (v, u)


class Tree:
    """A labeled, connected, acyclic undirected graph."""

    __slots__ = ("_vertices", "_edges", "_adj")

    def __init__(self, vertices: Iterable[str], edges: Iterable[Sequence[str]]):
        verts = tuple(_check_label(v) for v in vertices)
        if not verts:
            raise NotATree("a tree needs at least one vertex")
        if len(set(verts)) != len(verts):
            raise NotATree("duplicate vertex label")
        known = set(verts)
        adj: dict[str, list[str]] = {v: [] for v in verts}
        seen: set[tuple[str, str]] = set()
        norm: list[tuple[str, str]] = []
        for edge in edges:
            u, v = edge
            if u not in known or v not in known:
                raise NotATree(f"edge ({u!r}, {v!r}) references an unknown vertex")
            if u == v:
                raise NotATree(f"self-loop at {u!r}")
            key = edge_key(u, v)
            if key in seen:
                raise NotATree(f"duplicate edge ({u!r}, {v!r})")
            seen.add(key)
            norm.append(key)
            adj[u].append(v)
            adj[v].append(u)
        if len(norm) != len(verts) - 1:
            raise NotATree(
                f"{len(verts)} vertices need {len(verts) - 1} edges, got {len(norm)}"
            )
        # Edge count is right, so connectivity implies acyclicity.
        reached = {verts[0]}
        stack = [verts[0]]
        while stack:
            for w in adj[stack.pop()]:
                if w not in reached:
                    reached.add(w)
                    stack.append(w)
        if len(reached) != len(verts):
            raise NotATree("edge list is disconnected")
        self._vertices = verts
        self._edges = tuple(norm)
        self._adj = {v: tuple(ns) for v, ns in adj.items()}

    @property
    def vertices(self) -> tuple[str, ...]:
        return self._vertices

    @property
    def edges(self) -> tuple[tuple[str, str], ...]:
        return self._edges

    def __contains__(self, label: str) -> bool:
        return label in self._adj

    def neighbors(self, v: str) -> tuple[str, ...]:
        try:
            return self._adj[v]
        except KeyError:
            raise UnknownVertex(f"no vertex {v!r}") from None

    def degree(self, v: str) -> int:
        return len(self.neighbors(v))

    def max_degree(self) -> int:
        return max((len(ns) for ns in self._adj.values()), default=0)

    def pendant_vertices(self) -> list[str]:
        """All degree-1 vertices in lexicographic label order."""
        return sorted(v for v, ns in self._adj.items() if len(ns) == 1)

    def path_between(self, u: str, v: str) -> list[str]:
        """The unique path from u to v, endpoints included."""
        if u not in self._adj:
            raise UnknownVertex(f"no vertex {u!r}")
        if v not in self._adj:
            raise UnknownVertex(f"no vertex {v!r}")
        if u == v:
            raise SameVertex(f"path endpoints must differ, got {u!r} twice")
        parent = {u: u}
        frontier = [u]
        while v not in parent:
            nxt = []
            for x in frontier:
                for w in self._adj[x]:
                    if w not in parent:
                        parent[w] = x
                        nxt.append(w)
            frontier = nxt
        path = [v]
        while path[-1] != u:
            path.append(parent[path[-1]])
        path.reverse()
        return path

    def component_vertices(self, start: str, cut_edge: tuple[str, str]) -> set[str]:
        """Vertices reachable from ``start`` without crossing ``cut_edge``."""
        blocked = edge_key(*cut_edge)
        reached = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for w in self._adj[x]:
                if edge_key(x, w) == blocked or w in reached:
                    continue
                reached.add(w)
                stack.append(w)
        return reached

    def split(self, u: str, v: str) -> tuple["Tree", "Tree"]:
        """Remove edge (u, v); return the component of u, then the one of v."""
        if edge_key(u, v) not in set(self._edges):
            raise UnknownVertex(f"({u!r}, {v!r}) is not an edge of this tree")
        side_u = self.component_vertices(u, (u, v))
        return self.induced(side_u), self.induced(set(self._vertices) - side_u)

    def induced(self, keep: set[str]) -> "Tree":
        verts = [v for v in self._vertices if v in keep]
        edges = [e for e in self._edges if e[0] in keep and e[1] in keep]
        return Tree(verts, edges)

    def without_leaf(self, u: str) -> "Tree":
        if self.degree(u) != 1:
            raise NotPendant(f"{u!r} has degree {self.degree(u)}, not 1")
        return Tree(
            (v for v in self._vertices if v != u),
            (e for e in self._edges if u not in e),
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Tree):
            return NotImplemented
        return set(self._vertices) == set(other._vertices) and set(
            self._edges
        ) == set(other._edges)

    def __hash__(self) -> int:
        return hash((frozenset(self._vertices), frozenset(self._edges)))

    def __repr__(self) -> str:
        return f"Tree({len(self._vertices)} vertices, {len(self._edges)} edges)"


def parse_edge_list(text: str) -> Tree:
    """Parse the edge-list text format into a Tree."""
    rows: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line.split()))
    if not rows:
        raise ParseError("no edges or vertices in input")
    if len(rows) == 1 and len(rows[0][1]) == 1:
        return Tree([rows[0][1][0]], [])
    vertices: list[str] = []
    seen: set[str] = set()
    edges: list[tuple[str, str]] = []
    for lineno, tokens in rows:
        if len(tokens) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {' '.join(tokens)!r}")
        for label in tokens:
            if label not in seen:
                seen.add(label)
                vertices.append(label)
        edges.append((tokens[0], tokens[1]))
    return Tree(vertices, edges)


def render_edge_list(t: Tree) -> str:
    """Inverse of parse_edge_list, up to vertex order."""
    if len(t.vertices) == 1:
        return t.vertices[0] + "\n"
    return "".join(f"{u} {v}\n" for u, v in t.edges)


def prufer_decode(seq: Sequence[int], n: int) -> list[tuple[int, int]]:
    """Decode a Pruefer sequence over 0..n-1 into the edges of a labeled tree.

    The classic decode: repeatedly join the smallest remaining leaf to the
    next sequence entry, then join the final two leaves.
    """
    if n < 2:
        raise ValueError("decoding needs n >= 2")
    if len(seq) != n - 2:
        raise ValueError(f"sequence length must be n-2, got {len(seq)}")
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    leaves = [i for i in range(n) if degree[i] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    edges.append((heapq.heappop(leaves), heapq.heappop(leaves)))
    return edges


def random_tree(n: int, seed: int) -> Tree:
    """A uniformly random labeled tree on vertices v1..vn.

    Uniformity comes from drawing a uniform Pruefer sequence and decoding
    it.  The generator is Python's Mersenne Twister seeded with ``seed``,
    so identical (n, seed) pairs replay identical trees.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    labels = [f"v{i}" for i in range(1, n + 1)]
    if n == 1:
        return Tree(labels, [])
    if n == 2:
        return Tree(labels, [(labels[0], labels[1])])
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    edges = [(labels[a], labels[b]) for a, b in prufer_decode(seq, n)]
    return Tree(labels, edges)


class WeightedTree:
    """A tree plus one weight vector per vertex and one polynomial per edge."""

    __slots__ = ("tree", "_vertex_weights", "_edge_weights")

    def __init__(
        self,
        tree: Tree,
        vertex_weights: Mapping[str, object],
        edge_weights: Mapping[tuple[str, str], BiPoly] | None = None,
    ):
        if set(vertex_weights) != set(tree.vertices):
            raise ValueError("vertex weights must cover every vertex exactly")
        if edge_weights is None:
            ew = {e: Z for e in tree.edges}
        else:
            ew = {edge_key(*e): w for e, w in edge_weights.items()}
            if set(ew) != set(tree.edges):
                raise ValueError("edge weights must cover every edge exactly")
        self.tree = tree
        self._vertex_weights = dict(vertex_weights)
        self._edge_weights = ew

    def vector(self, v: str):
        try:
            return self._vertex_weights[v]
        except KeyError:
            raise UnknownVertex(f"no vertex {v!r}") from None

    def edge_weight(self, u: str, v: str) -> BiPoly:
        try:
            return self._edge_weights[edge_key(u, v)]
        except KeyError:
            raise UnknownVertex(f"({u!r}, {v!r}) is not an edge") from None

    def with_vector(self, v: str, vec) -> "WeightedTree":
        if v not in self._vertex_weights:
            raise UnknownVertex(f"no vertex {v!r}")
        vw = dict(self._vertex_weights)
        vw[v] = vec
        out = object.__new__(WeightedTree)
        out.tree = self.tree
        out._vertex_weights = vw
        out._edge_weights = self._edge_weights
        return out

    def remove_leaf(self, u: str) -> "WeightedTree":
        """Drop a pendant vertex and its edge; all other weights untouched."""
        if u not in self.tree:
            raise UnknownVertex(f"no vertex {u!r}")
        if self.tree.degree(u) != 1:
            raise NotPendant(f"{u!r} has degree {self.tree.degree(u)}, not 1")
        neighbor = self.tree.neighbors(u)[0]
        vw = dict(self._vertex_weights)
        del vw[u]
        ew = dict(self._edge_weights)
        del ew[edge_key(u, neighbor)]
        out = object.__new__(WeightedTree)
        out.tree = self.tree.without_leaf(u)
        out._vertex_weights = vw
        out._edge_weights = ew
        return out

    def split(self, u: str, v: str) -> tuple["WeightedTree", "WeightedTree"]:
        """Split at edge (u, v), weights restricted to each side."""
        side_u, side_v = self.tree.split(u, v)
        return self._restrict(side_u), self._restrict(side_v)

    def _restrict(self, sub: Tree) -> "WeightedTree":
        keep = set(sub.vertices)
        out = object.__new__(WeightedTree)
        out.tree = sub
        out._vertex_weights = {v: self._vertex_weights[v] for v in sub.vertices}
        out._edge_weights = {e: self._edge_weights[e] for e in sub.edges}
        return out

    def __repr__(self) -> str:
        return f"WeightedTree({self.tree!r})"
