"""Graph automorphisms, isomorphism testing and canonical forms.

Equitable-partition refinement (splitting cells by neighbor counts into
every cell) drives a backtracking search over individualized vertices.
Leaves are discrete partitions, read as labelings; the canonical form is the
lexicographically smallest relabeled adjacency bit-string over explored
leaves, and pairs of leaves with equal bit-strings yield automorphisms that
prune the remaining tree.  Intended scale is tens of vertices.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .graphs import Graph, graph6_encode
from .perms import Perm, PermGroup


def _refine(rows: tuple[int, ...], cells: list[list[int]]) -> list[list[int]]:
    """Split cells by (neighbor count into each cell) until equitable."""
    while True:
        masks = [sum(1 << v for v in c) for c in cells]
        new_cells: list[list[int]] = []
        changed = False
        for c in cells:
            if len(c) == 1:
                new_cells.append(c)
                continue
            buckets: dict[tuple[int, ...], list[int]] = {}
            for v in c:
                rv = rows[v]
                sig = tuple((rv & m).bit_count() for m in masks)
                buckets.setdefault(sig, []).append(v)
            if len(buckets) == 1:
                new_cells.append(c)
            else:
                changed = True
                for sig in sorted(buckets):
                    new_cells.append(buckets[sig])
        if not changed:
            return new_cells
        cells = new_cells


class _Search:
    def __init__(self, g: Graph):
        self.rows = g.rows
        self.n = g.n
        self.autos: list[Perm] = []
        self.first: tuple[int, list[int], list[int]] | None = None  # key, lab, inv
        self.best: tuple[int, list[int], list[int]] | None = None

    def run(self) -> None:
        self._recurse([list(range(self.n))], ())

    def _recurse(self, cells: list[list[int]], prefix: tuple[int, ...]) -> None:
        cells = _refine(self.rows, cells)
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            self._leaf(cells)
            return
        explored: list[int] = []
        for v in sorted(cells[target]):
            if explored and self._known_image(v, explored, prefix):
                continue
            child = cells[:target] + [[v], [x for x in cells[target] if x != v]] + cells[target + 1:]
            self._recurse(child, prefix + (v,))
            explored.append(v)

    def _known_image(self, v: int, explored: list[int], prefix: tuple[int, ...]) -> bool:
        """Is v in the orbit of an explored sibling under automorphisms found
        so far that fix the individualized prefix pointwise?"""
        fixers = [a for a in self.autos if all(a.images[p] == p for p in prefix)]
        if not fixers:
            return False
        orbit = set(explored)
        queue = list(explored)
        while queue:
            x = queue.pop()
            for a in fixers:
                y = a.images[x]
                if y not in orbit:
                    if y == v:
                        return True
                    orbit.add(y)
                    queue.append(y)
        return False

    def _leaf(self, cells: list[list[int]]) -> None:
        n = self.n
        inv = [c[0] for c in cells]  # position -> vertex
        lab = [0] * n  # vertex -> position
        for pos, v in enumerate(inv):
            lab[v] = pos
        key = 0
        rows = self.rows
        for i in range(n):
            ri = rows[inv[i]]
            for j in range(i + 1, n):
                key = (key << 1) | ((ri >> inv[j]) & 1)
        entry = (key, lab, inv)
        if self.first is None:
            self.first = entry
            self.best = entry
            return
        if key == self.first[0]:
            self._record(self.first, entry)
        assert self.best is not None
        if key == self.best[0] and self.best is not self.first:
            self._record(self.best, entry)
        if key < self.best[0]:
            self.best = entry

    def _record(self, a, b) -> None:
        _, lab_a, _ = a
        _, _, inv_b = b
        sigma = Perm([inv_b[lab_a[x]] for x in range(self.n)])
        if not sigma.is_identity() and sigma not in self.autos:
            self.autos.append(sigma)


@functools.lru_cache(maxsize=256)
def _search_graph(g: Graph) -> _Search:
    s = _Search(g)
    s.run()
    return s


@dataclass(frozen=True)
class CanonicalForm:
    """A canonical labeling (vertex -> canonical position) and the graph6
    text of the relabeled graph.  Isomorphic graphs get equal graph6 texts."""

    labeling: Perm
    graph6: str


def automorphism_group(g: Graph) -> PermGroup:
    """The full automorphism group of g, generators verified."""
    s = _search_graph(g)
    for a in s.autos:
        if not g.is_automorphism(a):
            raise AssertionError("search produced a non-automorphism")
    return PermGroup(s.autos, degree=g.n)


def canonical_form(g: Graph) -> CanonicalForm:
    s = _search_graph(g)
    assert s.best is not None
    _, lab, _ = s.best
    labeling = Perm(lab)
    return CanonicalForm(labeling, graph6_encode(g.apply_perm(labeling)))


def canonical_graph6(g: Graph) -> str:
    return canonical_form(g).graph6


def are_isomorphic(g1: Graph, g2: Graph) -> Perm | None:
    """An isomorphism from g1 onto g2 as a vertex map, or None.

    Cheap invariants first, then canonical forms; any witness returned has
    been verified edge-by-edge.
    """
    if g1.n != g2.n or g1.num_edges != g2.num_edges:
        return None
    if sorted(g1.rows[v].bit_count() for v in range(g1.n)) != \
       sorted(g2.rows[v].bit_count() for v in range(g2.n)):
        return None
    c1 = canonical_form(g1)
    c2 = canonical_form(g2)
    if c1.graph6 != c2.graph6:
        return None
    inv2 = c2.labeling.inverse()
    sigma = c1.labeling * inv2
    if g1.apply_perm(sigma) != g2:
        raise AssertionError("canonical forms agree but witness failed")
    return sigma
