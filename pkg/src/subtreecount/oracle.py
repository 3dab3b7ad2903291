"""Brute-force ground truth for every counting algorithm in this package.

Everything here works straight from the defining weight products over an
explicit enumeration of all connected subtrees, with no shortcuts shared
with the contraction algorithms.  It is deliberately slow and obviously
correct; inputs are capped at a small vertex count.

Weight conventions (defaults, overridable per call):

* subtree family: each vertex carries the vector (y, 0, ..., 0) of length
  k+1; a subtree is weighted by the product over its vertices of the sum
  of the first k - deg + 1 vector entries, times the product of its edge
  weights (z per edge).  With defaults that collapses to y^|V| z^|E| when
  the maximum degree is <= k, else 0.
* parity-rooted and BC families: each vertex carries an odd vector
  (1, 0, ..., 0) and an even vector (y, 0, ..., 0).  The products below
  follow the definitional factor lists verbatim, including the leaf sums
  that start at index 1; those are what make a weight vanish whenever a
  leaf sits in the wrong parity class.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping, Sequence

from .bipoly import BiPoly, ONE, Y, Z, ZERO
from .errors import KTooSmall, SameVertex, TooLarge, UnknownVertex
from .tree import Tree, edge_key

#: Default cap for oracle inputs; enumeration is exponential in n.
ORACLE_MAX_VERTICES = 14

ParityWeights = tuple[Sequence[BiPoly], Sequence[BiPoly]]


@dataclass(frozen=True)
class SubtreeWitness:
    """One connected subtree, listed explicitly.

    ``leaves`` are the degree-1 vertices of the induced subtree; a single
    vertex is its own leaf by convention (the BC weight never looks at the
    leaves of witnesses that small, so the convention is inert there).
    """

    vertices: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]
    leaves: tuple[str, ...]

    def degree(self, v: str) -> int:
        return sum(1 for e in self.edges if v in e)


def _connected_index_sets(adj: Sequence[Sequence[int]], n: int) -> list[frozenset[int]]:
    """All vertex index sets inducing a connected subgraph, each exactly once.

    Sets are grown from their minimum index s using only indices > s; when
    a frontier vertex is chosen, every frontier vertex listed before it is
    banned for the rest of that branch, so each set is produced by exactly
    one sequence of choices.
    """
    found: list[frozenset[int]] = []

    def grow(s: int, current: frozenset[int], frontier: list[int], banned: frozenset[int]):
        found.append(current)
        for i, v in enumerate(frontier):
            now_banned = banned.union(frontier[:i])
            merged = list(frontier[i + 1 :])
            present = set(merged)
            for w in adj[v]:
                if w > s and w not in current and w not in now_banned and w not in present and w != v:
                    merged.append(w)
                    present.add(w)
            grow(s, current | {v}, sorted(merged), now_banned | {v})

    for s in range(n):
        grow(s, frozenset([s]), sorted(w for w in adj[s] if w > s), frozenset())
    return found


@lru_cache(maxsize=1024)
def enumerate_connected_subtrees(t: Tree) -> tuple[SubtreeWitness, ...]:
    """Every connected subtree of t as an explicit witness, deterministic order."""
    order = t.vertices
    index = {v: i for i, v in enumerate(order)}
    adj = [sorted(index[w] for w in t.neighbors(v)) for v in order]
    witnesses = []
    for idx_set in _connected_index_sets(adj, len(order)):
        labels = tuple(sorted(order[i] for i in idx_set))
        members = set(labels)
        edges = tuple(e for e in t.edges if e[0] in members and e[1] in members)
        if len(labels) == 1:
            leaves = labels
        else:
            degree = {v: 0 for v in labels}
            for u, v in edges:
                degree[u] += 1
                degree[v] += 1
            leaves = tuple(sorted(v for v, d in degree.items() if d == 1))
        witnesses.append(SubtreeWitness(labels, edges, leaves))
    witnesses.sort(key=lambda w: (len(w.vertices), w.vertices))
    return tuple(witnesses)


def is_bc(w: SubtreeWitness) -> bool:
    """True when the witness is a BC-subtree: >= 2 edges and all leaves
    pairwise at even distance (equivalently, in one parity class)."""
    if len(w.edges) < 2:
        return False
    parity = _parities_from(w, w.leaves[0])
    return all(parity[leaf] == 0 for leaf in w.leaves)


def _parities_from(w: SubtreeWitness, start: str) -> dict[str, int]:
    adj: dict[str, list[str]] = {v: [] for v in w.vertices}
    for u, v in w.edges:
        adj[u].append(v)
        adj[v].append(u)
    parity = {start: 0}
    stack = [start]
    while stack:
        x = stack.pop()
        for nb in adj[x]:
            if nb not in parity:
                parity[nb] = parity[x] ^ 1
                stack.append(nb)
    return parity


def _vertex_vec(weights, v: str, k: int) -> Sequence[BiPoly]:
    if weights is None:
        return (Y,) + (ZERO,) * k
    return weights[v]


def _parity_vecs(weights, v: str, k: int) -> ParityWeights:
    if weights is None:
        return ((ONE,) + (ZERO,) * k, (Y,) + (ZERO,) * k)
    return weights[v]


def _edge_poly(weights, e: tuple[str, str]) -> BiPoly:
    if weights is None:
        return Z
    return weights[edge_key(*e)]


def _entry_sum(vec: Sequence[BiPoly], lo: int, hi: int) -> BiPoly:
    # Empty ranges sum to zero, matching the usual convention.
    if hi < lo:
        return ZERO
    return BiPoly.sum(vec[max(lo, 0) : hi + 1])


def subtree_weight(
    w: SubtreeWitness,
    k: int,
    vertex_weights: Mapping[str, Sequence[BiPoly]] | None = None,
    edge_weights: Mapping[tuple[str, str], BiPoly] | None = None,
) -> BiPoly:
    """Definitional weight of one witness under the degree cap k.

    Product over vertices of the sum of vector entries 0 .. k - deg, times
    the product of edge weights.  A vertex over the cap contributes an
    empty sum, zeroing the whole product.
    """
    acc = ONE
    for v in w.vertices:
        acc = acc * _entry_sum(_vertex_vec(vertex_weights, v, k), 0, k - w.degree(v))
        if not acc:
            return ZERO
    for e in w.edges:
        acc = acc * _edge_poly(edge_weights, e)
    return acc


def bc_subtree_weight(
    w: SubtreeWitness,
    k: int,
    vertex_weights: Mapping[str, ParityWeights] | None = None,
    edge_weights: Mapping[tuple[str, str], BiPoly] | None = None,
) -> BiPoly:
    """Definitional BC weight of one witness.

    The vertex set splits into even/odd parity classes by distance to a
    fixed leaf.  Two alternative products are summed; leaf factors start
    their sums at entry 1, so any leaf in the wrong class kills its term.
    Witnesses with fewer than two edges are outside the BC family and
    weigh zero.
    """
    if len(w.edges) < 2:
        return ZERO
    parity = _parities_from(w, min(w.leaves))
    leaves = set(w.leaves)
    even_term = ONE
    odd_term = ONE
    for v in w.vertices:
        odd_vec, even_vec = _parity_vecs(vertex_weights, v, k)
        cap = k - w.degree(v)
        if parity[v] == 0:  # even class
            even_term = even_term * _entry_sum(even_vec, 0, cap)
            odd_term = odd_term * _entry_sum(odd_vec, 1 if v in leaves else 0, cap)
        else:  # odd class
            even_term = even_term * _entry_sum(odd_vec, 1 if v in leaves else 0, cap)
            odd_term = odd_term * _entry_sum(even_vec, 0, cap)
    acc = even_term + odd_term
    for e in w.edges:
        acc = acc * _edge_poly(edge_weights, e)
    return acc


def _rooted_parity_base(
    w: SubtreeWitness,
    root: str,
    k: int,
    parity: str,
    vertex_weights,
    edge_weights,
) -> BiPoly:
    """The root-independent factor product of the rooted parity weight."""
    dist_parity = _parities_from(w, root)
    leaves = set(w.leaves)
    acc = ONE
    for e in w.edges:
        acc = acc * _edge_poly(edge_weights, e)
    for v in w.vertices:
        if v == root:
            continue
        odd_vec, even_vec = _parity_vecs(vertex_weights, v, k)
        cap = k - w.degree(v)
        if parity == "odd":
            if dist_parity[v] == 1:
                acc = acc * _entry_sum(even_vec, 0, cap)
            else:
                acc = acc * _entry_sum(odd_vec, 1 if v in leaves else 0, cap)
        else:
            if dist_parity[v] == 0:
                acc = acc * _entry_sum(even_vec, 0, cap)
            else:
                acc = acc * _entry_sum(odd_vec, 1 if v in leaves else 0, cap)
        if not acc:
            return ZERO
    return acc


def rooted_parity_weight(
    w: SubtreeWitness,
    root: str,
    k: int,
    j: int,
    parity: str,
    vertex_weights: Mapping[str, ParityWeights] | None = None,
    edge_weights: Mapping[tuple[str, str], BiPoly] | None = None,
) -> BiPoly:
    """Definitional rooted weight: the witness counts toward root degree j
    with every non-root leaf at odd (resp. even) distance from the root."""
    if parity not in ("odd", "even"):
        raise ValueError(f"parity must be 'odd' or 'even', got {parity!r}")
    if not 0 <= j <= k:
        raise ValueError(f"j must lie in 0..{k}, got {j}")
    if root not in w.vertices:
        raise UnknownVertex(f"{root!r} not in witness")
    odd_vec, even_vec = _parity_vecs(vertex_weights, root, k)
    root_vec = odd_vec if parity == "odd" else even_vec
    if len(w.vertices) == 1:
        return root_vec[j]
    shift = j - w.degree(root)
    if shift < 0:
        return ZERO
    root_factor = root_vec[shift]
    if not root_factor:
        return ZERO
    return root_factor * _rooted_parity_base(w, root, k, parity, vertex_weights, edge_weights)


def _check_anchors(t: Tree, anchors: Sequence[str]) -> tuple[str, ...]:
    anchors = tuple(anchors)
    if len(anchors) > 2:
        raise ValueError(f"at most two anchors, got {len(anchors)}")
    for a in anchors:
        if a not in t:
            raise UnknownVertex(f"no vertex {a!r}")
    if len(anchors) == 2 and anchors[0] == anchors[1]:
        raise SameVertex(f"anchors must be distinct, got {anchors[0]!r} twice")
    return anchors


def _family_weight(w: SubtreeWitness, k: int, family: str, vw=None, ew=None) -> BiPoly:
    # The BC sum ranges over the BC family only; with default weights the
    # weight of a non-BC witness vanishes anyway, but general weights need
    # the explicit membership filter.
    if family == "subtree":
        return subtree_weight(w, k, vw, ew)
    if not is_bc(w):
        return ZERO
    return bc_subtree_weight(w, k, vw, ew)


@lru_cache(maxsize=4096)
def _default_weights_by_witness(
    t: Tree, k: int, family: str
) -> tuple[tuple[frozenset[str], BiPoly], ...]:
    out = []
    for w in enumerate_connected_subtrees(t):
        poly = _family_weight(w, k, family)
        if poly:
            out.append((frozenset(w.vertices), poly))
    return tuple(out)


def oracle_count(
    t: Tree,
    k: int,
    family: str = "subtree",
    anchors: Sequence[str] = (),
    *,
    vertex_weights=None,
    edge_weights=None,
    max_vertices: int = ORACLE_MAX_VERTICES,
) -> BiPoly:
    """Sum of definitional weights over all witnesses containing the anchors."""
    if family not in ("subtree", "bc"):
        raise ValueError(f"family must be 'subtree' or 'bc', got {family!r}")
    if len(t.vertices) > max_vertices:
        raise TooLarge(f"{len(t.vertices)} vertices exceeds the oracle bound {max_vertices}")
    if family == "bc" and k < 2:
        raise KTooSmall(f"BC counting needs k >= 2, got {k}")
    if family == "subtree" and k < 0:
        raise KTooSmall(f"k must be >= 0, got {k}")
    anchors = _check_anchors(t, anchors)
    need = set(anchors)
    if vertex_weights is None and edge_weights is None:
        pairs = _default_weights_by_witness(t, k, family)
        return BiPoly.sum(poly for members, poly in pairs if need <= members)
    return BiPoly.sum(
        _family_weight(w, k, family, vertex_weights, edge_weights)
        for w in enumerate_connected_subtrees(t)
        if need <= set(w.vertices)
    )


def rooted_parity_sums(
    t: Tree,
    k: int,
    root: str,
    *,
    vertex_weights=None,
    edge_weights=None,
    max_vertices: int = ORACLE_MAX_VERTICES,
) -> tuple[tuple[BiPoly, ...], tuple[BiPoly, ...]]:
    """Definitional sums of the rooted parity weights over all witnesses
    containing ``root``: one odd and one even vector, indexed by root degree."""
    if len(t.vertices) > max_vertices:
        raise TooLarge(f"{len(t.vertices)} vertices exceeds the oracle bound {max_vertices}")
    if k < 2:
        raise KTooSmall(f"parity-rooted counting needs k >= 2, got {k}")
    if root not in t:
        raise UnknownVertex(f"no vertex {root!r}")
    odd_out = [ZERO] * (k + 1)
    even_out = [ZERO] * (k + 1)
    for w in enumerate_connected_subtrees(t):
        if root not in w.vertices:
            continue
        odd_vec, even_vec = _parity_vecs(vertex_weights, root, k)
        if len(w.vertices) == 1:
            for j in range(k + 1):
                odd_out[j] = odd_out[j] + odd_vec[j]
                even_out[j] = even_out[j] + even_vec[j]
            continue
        deg = w.degree(root)
        odd_base = _rooted_parity_base(w, root, k, "odd", vertex_weights, edge_weights)
        even_base = _rooted_parity_base(w, root, k, "even", vertex_weights, edge_weights)
        for j in range(deg, k + 1):
            if odd_base:
                odd_out[j] = odd_out[j] + odd_vec[j - deg] * odd_base
            if even_base:
                even_out[j] = even_out[j] + even_vec[j - deg] * even_base
    return tuple(odd_out), tuple(even_out)
