"""Finite simple graphs on {0, ..., n-1} with bitmask adjacency rows.

Vertex numbering conventions for the named families are part of the
interface: complete_bipartite puts the first part at 0..a-1, cycle(n) runs
around the cycle in order, odd_graph(m) orders the (m-1)-subsets
colexicographically, paley_incidence(q) numbers (x, 0) as x and (x, 1) as
q + x, and composition(g, m) numbers the copy pair (eta, i) as i*n + eta.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .perms import Perm


class Graph:
    """An undirected simple graph; row u is a bitmask of the neighbors of u."""

    __slots__ = ("n", "rows")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 1:
            raise ValueError("graph needs at least one vertex")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError("edge (%d, %d) out of range" % (u, v))
            if u == v:
                raise ValueError("loop at vertex %d" % u)
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "rows", tuple(rows))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def _raw(cls, n: int, rows: tuple[int, ...]) -> "Graph":
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "rows", rows)
        return g

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def neighbors(self, u: int) -> list[int]:
        row = self.rows[u]
        return [v for v in range(self.n) if (row >> v) & 1]

    def degree(self, u: int) -> int:
        return self.rows[u].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        """All edges (u, v) with u < v in lexicographic order."""
        out = []
        for u in range(self.n):
            row = self.rows[u] >> (u + 1)
            v = u + 1
            while row:
                if row & 1:
                    out.append((u, v))
                row >>= 1
                v += 1
        return out

    @property
    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def apply_perm(self, p: Perm) -> "Graph":
        """Relabel: the image has an edge (p(u), p(v)) for each edge (u, v)."""
        if p.degree != self.n:
            raise ValueError("degree mismatch")
        rows = [0] * self.n
        im = p.images
        for u in range(self.n):
            r = self.rows[u]
            acc = 0
            v = 0
            while r:
                if r & 1:
                    acc |= 1 << im[v]
                r >>= 1
                v += 1
            rows[im[u]] = acc
        return Graph._raw(self.n, tuple(rows))

    def is_automorphism(self, p: Perm) -> bool:
        return p.degree == self.n and self.apply_perm(p).rows == self.rows

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.n, self.rows))

    def __repr__(self) -> str:
        return "Graph(n=%d, m=%d)" % (self.n, self.num_edges)


class Matching:
    """An ordered list of vertex pairs (a_i, b_i).

    Structure only: each pair has distinct entries and no pair repeats.
    Whether the pairs are disjoint edges of a given graph is checked by
    validate_matching.
    """

    __slots__ = ("edges",)

    def __init__(self, edges: Iterable[Sequence[int]]):
        pairs = []
        seen = set()
        for e in edges:
            a, b = e
            if a == b:
                raise ValueError("pair (%d, %d) is degenerate" % (a, b))
            key = frozenset((a, b))
            if key in seen:
                raise ValueError("pair (%d, %d) repeats" % (a, b))
            seen.add(key)
            pairs.append((int(a), int(b)))
        object.__setattr__(self, "edges", tuple(pairs))

    def __setattr__(self, name, value):
        raise AttributeError("Matching is immutable")

    @classmethod
    def parse(cls, text: str) -> "Matching":
        """Parse "0-3,1-4,2-5" (0-based vertex ids)."""
        pairs = []
        for part in text.strip().split(","):
            part = part.strip()
            if not part:
                continue
            bits = part.split("-")
            if len(bits) != 2:
                raise ValueError("malformed matching entry: %r" % part)
            pairs.append((int(bits[0]), int(bits[1])))
        return cls(pairs)

    def __str__(self) -> str:
        return ",".join("%d-%d" % e for e in self.edges)

    def __len__(self) -> int:
        return len(self.edges)

    def __iter__(self):
        return iter(self.edges)

    def __eq__(self, other) -> bool:
        return isinstance(other, Matching) and self.edges == other.edges

    def __hash__(self) -> int:
        return hash(self.edges)

    def __repr__(self) -> str:
        return "Matching(%s)" % self

    def vertices(self) -> list[int]:
        out = []
        for a, b in self.edges:
            out.extend((a, b))
        return sorted(out)

    def edge_keys(self) -> frozenset[frozenset[int]]:
        return frozenset(frozenset(e) for e in self.edges)

    def partner_map(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for a, b in self.edges:
            out[a] = b
            out[b] = a
        return out


# ---------------------------------------------------------------------------
# named families


def complete(n: int) -> Graph:
    return Graph(n, itertools.combinations(range(n), 2))


def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_bipartite(a: int, b: int) -> Graph:
    """First part is 0..a-1, second part a..a+b-1."""
    return Graph(a + b, ((u, a + v) for u in range(a) for v in range(b)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph(n, ((i, i + 1) for i in range(n - 1)))


def petersen() -> Graph:
    """Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    return Graph(10, edges)


def _colex_subsets(universe: int, size: int) -> list[tuple[int, ...]]:
    subs = itertools.combinations(range(universe), size)
    return sorted(subs, key=lambda s: tuple(reversed(s)))


def odd_graph(m: int) -> tuple[Graph, list[Perm]]:
    """The Kneser graph of (m-1)-subsets of a (2m-1)-set, disjointness edges.

    Vertices are the (m-1)-subsets in colexicographic order.  Also returns
    the natural generators of the symmetric group on the 2m-1 symbols acting
    on the vertices (a transposition and a full cycle).
    """
    if m < 2:
        raise ValueError("odd graph needs m >= 2")
    k = 2 * m - 1
    subsets = _colex_subsets(k, m - 1)
    index = {frozenset(s): i for i, s in enumerate(subsets)}
    edges = []
    for i, s in enumerate(subsets):
        si = frozenset(s)
        for j in range(i + 1, len(subsets)):
            if si.isdisjoint(subsets[j]):
                edges.append((i, j))
    g = Graph(len(subsets), edges)
    sym_gens = [Perm.from_cycles(k, [(0, 1)]), Perm.from_cycles(k, [tuple(range(k))])]
    gens = [_subset_action(subsets, index, s) for s in sym_gens]
    return g, gens


def _subset_action(subsets, index, sym_perm: Perm) -> Perm:
    images = [index[frozenset(sym_perm.images[x] for x in s)] for s in subsets]
    return Perm(images)


def odd_graph_vertex(m: int, symbols: Iterable[int]) -> int:
    """The vertex id of a given (m-1)-subset of {0, ..., 2m-2}."""
    subsets = _colex_subsets(2 * m - 1, m - 1)
    key = tuple(sorted(symbols))
    try:
        return subsets.index(key)
    except ValueError:
        raise ValueError("not an (m-1)-subset: %r" % (key,)) from None


def odd_graph_action(m: int, sym_perm: Perm) -> Perm:
    """The vertex permutation of odd_graph(m) induced by a permutation of
    the 2m-1 symbols."""
    if sym_perm.degree != 2 * m - 1:
        raise ValueError("symbol permutation must have degree 2m-1")
    subsets = _colex_subsets(2 * m - 1, m - 1)
    index = {frozenset(s): i for i, s in enumerate(subsets)}
    return _subset_action(subsets, index, sym_perm)


def hypercube(m: int) -> Graph:
    if m < 1:
        raise ValueError("hypercube needs m >= 1")
    n = 1 << m
    edges = [(x, x ^ (1 << b)) for x in range(n) for b in range(m) if x < x ^ (1 << b)]
    return Graph(n, edges)


def folded_hypercube(m: int) -> Graph:
    """The m-dimensional hypercube with antipodal vertices identified.

    Representatives are the 2^(m-1) vertices with top bit clear; classes are
    adjacent when the XOR of representatives has weight 1 or m-1.
    """
    if m < 2:
        raise ValueError("folded hypercube needs m >= 2")
    n = 1 << (m - 1)
    edges = []
    for x in range(n):
        for y in range(x + 1, n):
            w = (x ^ y).bit_count()
            if w == 1 or w == m - 1:
                edges.append((x, y))
    return Graph(n, edges)


def _is_prime(q: int) -> bool:
    if q < 2:
        return False
    d = 2
    while d * d <= q:
        if q % d == 0:
            return False
        d += 1
    return True


def _paley_check(q: int) -> frozenset[int]:
    if not _is_prime(q):
        raise ValueError("q must be prime (got %d)" % q)
    if q % 4 != 3:
        raise ValueError("q must be congruent to 3 mod 4 (got %d)" % q)
    return frozenset((x * x) % q for x in range(q))


def paley_incidence(q: int) -> Graph:
    """Bipartite graph on GF(q) x {0, 1}: (x, 0) ~ (y, 1) iff y - x is a
    square mod q, with 0 counted as a square.  (x, 0) is vertex x and
    (x, 1) is vertex q + x."""
    squares = _paley_check(q)
    edges = [(x, q + y) for x in range(q) for y in range(q) if (y - x) % q in squares]
    return Graph(2 * q, edges)


def paley_incidence_cliques(q: int) -> Graph:
    """paley_incidence(q) with each side completed to a clique."""
    squares = _paley_check(q)
    edges = [(x, q + y) for x in range(q) for y in range(q) if (y - x) % q in squares]
    edges += [(x, y) for x in range(q) for y in range(x + 1, q)]
    edges += [(q + x, q + y) for x in range(q) for y in range(x + 1, q)]
    return Graph(2 * q, edges)


# ---------------------------------------------------------------------------
# binary constructions


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every edge between the two sides; g1 comes first."""
    n1 = g1.n
    edges = list(g1.edges())
    edges += [(n1 + u, n1 + v) for u, v in g2.edges()]
    edges += [(u, n1 + v) for u in range(n1) for v in range(g2.n)]
    return Graph(n1 + g2.n, edges)


def matching_join(g1: Graph, g2: Graph, phi: Sequence[int]) -> Graph:
    """Disjoint union plus the perfect matching i -- n1 + phi[i].

    phi must be a bijection from the vertices of g1 onto the vertices of g2.
    """
    n1 = g1.n
    if g2.n != n1 or sorted(phi) != list(range(n1)):
        raise ValueError("phi must be a bijection between equal vertex sets")
    edges = list(g1.edges())
    edges += [(n1 + u, n1 + v) for u, v in g2.edges()]
    edges += [(i, n1 + phi[i]) for i in range(n1)]
    return Graph(2 * n1, edges)


def composition(g: Graph, m: int) -> Graph:
    """m independent copies of each vertex; (eta, i) ~ (theta, j) iff
    eta ~ theta in g.  (eta, i) is vertex i*n + eta."""
    if m < 1:
        raise ValueError("need m >= 1 copies")
    n = g.n
    edges = []
    for u, v in g.edges():
        for i in range(m):
            for j in range(m):
                edges.append((i * n + u, j * n + v))
    return Graph(m * n, edges)


# ---------------------------------------------------------------------------
# subdivisions


def subdivide_all(g: Graph) -> tuple[Graph, dict[tuple[int, int], int]]:
    """Replace every edge by a path of length 2.

    New vertices are appended in lexicographic edge order; the returned map
    sends each original edge (u, v), u < v, to its subdivision vertex.
    """
    edges_in = g.edges()
    n = g.n
    vertex_of: dict[tuple[int, int], int] = {}
    edges = []
    for w, (u, v) in enumerate(edges_in, start=n):
        vertex_of[(u, v)] = w
        edges.append((u, w))
        edges.append((w, v))
    return Graph(n + len(edges_in), edges), vertex_of


def _check_submatching(g: Graph, matching: Matching) -> set[frozenset[int]]:
    keys = set()
    used = set()
    for a, b in matching:
        if not (0 <= a < g.n and 0 <= b < g.n) or not g.has_edge(a, b):
            raise ValueError("matching edge (%d, %d) is not an edge of the graph" % (a, b))
        if a in used or b in used:
            raise ValueError("matching edges are not disjoint at (%d, %d)" % (a, b))
        used.update((a, b))
        keys.add(frozenset((a, b)))
    return keys


def subdivide_non_matching(g: Graph, matching: Matching) -> Graph:
    """Subdivide every edge not in the matching once; matching edges stay."""
    keys = _check_submatching(g, matching)
    edges = [e for e in g.edges() if frozenset(e) in keys]
    w = g.n
    for u, v in g.edges():
        if frozenset((u, v)) in keys:
            continue
        edges.append((u, w))
        edges.append((w, v))
        w += 1
    return Graph(w, edges)


def subdivide_matching_twice(g: Graph, matching: Matching) -> Graph:
    """Replace each matching edge (u, v) by a path u - w1 - w2 - v; other
    edges stay.  New vertex pairs are appended in lexicographic edge order,
    the u-side vertex first."""
    keys = _check_submatching(g, matching)
    edges = [e for e in g.edges() if frozenset(e) not in keys]
    w = g.n
    for u, v in g.edges():
        if frozenset((u, v)) not in keys:
            continue
        edges.extend(((u, w), (w, w + 1), (w + 1, v)))
        w += 2
    return Graph(w, edges)


# ---------------------------------------------------------------------------
# small utilities


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    rows = tuple((full ^ g.rows[u]) & ~(1 << u) for u in range(g.n))
    return Graph._raw(g.n, rows)


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """The induced subgraph, relabeled 0..k-1 in ascending vertex order."""
    keep = sorted(set(vertices))
    if any(not (0 <= v < g.n) for v in keep):
        raise ValueError("vertex out of range")
    pos = {v: i for i, v in enumerate(keep)}
    edges = [(pos[u], pos[v]) for u, v in itertools.combinations(keep, 2) if g.has_edge(u, v)]
    return Graph(len(keep), edges)


def distance(g: Graph, u: int, v: int) -> int:
    """BFS distance; -1 if v is unreachable from u."""
    if u == v:
        return 0
    seen = 1 << u
    frontier = [u]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for x in frontier:
            row = g.rows[x] & ~seen
            y = 0
            while row:
                if row & 1:
                    if y == v:
                        return d
                    seen |= 1 << y
                    nxt.append(y)
                row >>= 1
                y += 1
        frontier = nxt
    return -1


def is_connected(g: Graph) -> bool:
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        row = frontier
        v = 0
        while row:
            if row & 1:
                nxt |= g.rows[v]
            row >>= 1
            v += 1
        frontier = nxt & ~seen
        seen |= nxt
    return seen == (1 << g.n) - 1


def degree_sequence(g: Graph) -> list[int]:
    return sorted((g.degree(v) for v in range(g.n)), reverse=True)


@dataclass(frozen=True)
class SrgParams:
    """Strongly regular parameters (v, k, lam, mu).

    For graphs with no non-adjacent pairs (complete graphs) mu is reported
    as 0 and is_complete is set; lam is 0 when there is no adjacent pair.
    """

    v: int
    k: int
    lam: int
    mu: int
    is_complete: bool


def srg_parameters(g: Graph) -> SrgParams | None:
    """The (v, k, lam, mu) parameters if g is strongly regular, else None."""
    degs = {g.degree(v) for v in range(g.n)}
    if len(degs) != 1:
        return None
    k = degs.pop()
    lam = None
    mu = None
    for u in range(g.n):
        for v in range(u + 1, g.n):
            common = (g.rows[u] & g.rows[v]).bit_count()
            if g.has_edge(u, v):
                if lam is None:
                    lam = common
                elif lam != common:
                    return None
            else:
                if mu is None:
                    mu = common
                elif mu != common:
                    return None
    return SrgParams(g.n, k, lam if lam is not None else 0,
                     mu if mu is not None else 0, mu is None)


# ---------------------------------------------------------------------------
# graph6


def graph6_encode(g: Graph) -> str:
    """Standard graph6: size header then the upper triangle column-major,
    packed into 6-bit chunks offset by 63."""
    n = g.n
    if n <= 62:
        header = chr(63 + n)
    elif n <= 258047:
        header = chr(126) + "".join(chr(63 + ((n >> s) & 63)) for s in (12, 6, 0))
    else:
        raise ValueError("graph too large for this encoder")
    bits = []
    for v in range(1, n):
        for u in range(v):
            bits.append((g.rows[u] >> v) & 1)
    while len(bits) % 6:
        bits.append(0)
    chars = []
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i:i + 6]:
            val = (val << 1) | b
        chars.append(chr(63 + val))
    return header + "".join(chars)


def graph6_decode(text: str) -> Graph:
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ValueError("empty graph6 string")
    data = [ord(c) - 63 for c in s]
    if any(not (0 <= d <= 63) for d in data):
        raise ValueError("character out of graph6 range")
    if data[0] <= 62:
        n = data[0]
        body = data[1:]
    elif len(data) >= 4 and data[1] <= 62:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        body = data[4:]
    else:
        raise ValueError("malformed graph6 header")
    if n < 1:
        raise ValueError("graph6 with no vertices")
    nbits = n * (n - 1) // 2
    if len(body) != (nbits + 5) // 6:
        raise ValueError("graph6 length mismatch for n=%d" % n)
    bits = []
    for d in body:
        for s6 in (5, 4, 3, 2, 1, 0):
            bits.append((d >> s6) & 1)
    edges = []
    i = 0
    for v in range(1, n):
        for u in range(v):
            if bits[i]:
                edges.append((u, v))
            i += 1
    return Graph(n, edges)
