"""Symmetry of matchings under graph automorphism groups.

The central question: given a graph g, a group G of automorphisms and an
m-matching M, how does the setwise stabilizer G_M act on the m edges?  If
the induced action is the full symmetric group the matching is permutable;
if the induced action is 2-transitive the matching is 2-transitive.  A
1-matching counts as both, vacuously.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import autiso
from .graphs import Graph, Matching
from .perms import Perm, PermGroup, induced_action, is_2transitive, is_primitive, \
    is_transitive, subgroup_search

MODE_PERMUTABLE = "permutable"
MODE_TWO_TRANSITIVE = "two-transitive"


def normalize_mode(mode: str) -> str:
    m = mode.strip().lower().replace("_", "-")
    if m not in (MODE_PERMUTABLE, MODE_TWO_TRANSITIVE):
        raise ValueError("unknown mode %r" % mode)
    return m


def validate_matching(g: Graph, matching: Matching) -> tuple[bool, bool]:
    """(is_matching, is_perfect): pairs are disjoint edges of g; perfect if
    they cover every vertex."""
    used: set[int] = set()
    for a, b in matching:
        if not (0 <= a < g.n and 0 <= b < g.n) or not g.has_edge(a, b):
            return False, False
        if a in used or b in used:
            return False, False
        used.update((a, b))
    return True, len(used) == g.n


def check_group_action(g: Graph, group: PermGroup) -> None:
    """Raise unless every generator of the group is an automorphism of g."""
    if group.degree != g.n:
        raise ValueError("group degree %d does not match graph order %d"
                         % (group.degree, g.n))
    for p in group.generators:
        if not g.is_automorphism(p):
            raise ValueError("generator %r is not an automorphism" % p)


def _group_or_aut(g: Graph, group: PermGroup | None) -> PermGroup:
    if group is None:
        return autiso.automorphism_group(g)
    check_group_action(g, group)
    return group


def matching_stabilizer(g: Graph, group: PermGroup, matching: Matching) -> PermGroup:
    """The subgroup of group mapping the edge set of the matching onto itself.

    Backtrack over a stabilizer chain rebased onto the matched vertices;
    branches die as soon as a matched vertex heads outside the matching or
    breaks a partner constraint.
    """
    ok, _ = validate_matching(g, matching)
    if not ok:
        raise ValueError("not a matching of the graph: %s" % matching)
    check_group_action(g, group)
    matched = sorted(set(matching.vertices()))
    if not matched:
        return group
    partner = matching.partner_map()
    inside = [v in partner for v in range(g.n)]
    keys = matching.edge_keys()
    rebased = group.rebase(matched)
    base = rebased.base
    pos_of = {b: i for i, b in enumerate(base)}

    def keep(level: int, img: int, imgs: list[int]) -> bool:
        b = base[level]
        if inside[b] != inside[img]:
            return False
        if inside[b]:
            jq = pos_of.get(partner[b])
            if jq is not None and jq < level and imgs[jq] != partner[img]:
                return False
        return True

    edges = matching.edges

    def test(p: Perm) -> bool:
        im = p.images
        return all(frozenset((im[a], im[b])) in keys for a, b in edges)

    return subgroup_search(rebased, test, prune=keep)


def induced_edge_action(stabilizer: PermGroup, matching: Matching) -> PermGroup:
    """The image of a matching-stabilizing group acting on edge indices."""
    image, _ = induced_action(stabilizer, [set(e) for e in matching])
    return image


@dataclass(frozen=True)
class MatchingReport:
    """How a group acts on an m-matching.

    is_matching is always True: reports are only produced for validated
    matchings (invalid input raises instead).
    """

    matching: Matching
    m: int
    is_matching: bool
    is_perfect: bool
    group_order: int
    stabilizer_order: int
    induced_order: int
    permutable: bool
    two_transitive: bool
    induced_generators: tuple[Perm, ...]

    def to_json_dict(self) -> dict:
        return {
            "matching": str(self.matching),
            "m": self.m,
            "is_matching": self.is_matching,
            "is_perfect": self.is_perfect,
            "group_order": self.group_order,
            "stabilizer_order": self.stabilizer_order,
            "induced_order": self.induced_order,
            "permutable": self.permutable,
            "two_transitive": self.two_transitive,
            "induced_generators": [list(p.images) for p in self.induced_generators],
        }


def matching_report(g: Graph, matching: Matching,
                    group: PermGroup | None = None) -> MatchingReport:
    """Full symmetry report; group defaults to the automorphism group of g."""
    group = _group_or_aut(g, group)
    ok, perfect = validate_matching(g, matching)
    if not ok:
        raise ValueError("not a matching of the graph: %s" % matching)
    stab = matching_stabilizer(g, group, matching)
    image = induced_edge_action(stab, matching)
    m = len(matching)
    induced_order = image.order()
    return MatchingReport(
        matching=matching,
        m=m,
        is_matching=True,
        is_perfect=perfect,
        group_order=group.order(),
        stabilizer_order=stab.order(),
        induced_order=induced_order,
        permutable=induced_order == math.factorial(m),
        two_transitive=is_2transitive(image),
        induced_generators=image.generators,
    )


def is_permutable(g: Graph, matching: Matching,
                  group: PermGroup | None = None) -> MatchingReport:
    return matching_report(g, matching, group)


def is_2transitive_matching(g: Graph, matching: Matching,
                            group: PermGroup | None = None) -> MatchingReport:
    return matching_report(g, matching, group)


def _passes(report: MatchingReport, mode: str) -> bool:
    if mode == MODE_PERMUTABLE:
        return report.permutable
    return report.two_transitive


def _edge_orbit_reps(group: PermGroup, candidates: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """One lexicographically-least representative per group orbit on the
    candidate edges (which must be closed under the group)."""
    cand = {frozenset(e) for e in candidates}
    reps = []
    seen: set[frozenset[int]] = set()
    for e in sorted(candidates):
        key = frozenset(e)
        if key in seen:
            continue
        reps.append(e)
        orbit = {key}
        queue = [key]
        while queue:
            cur = queue.pop()
            for p in group.generators:
                im = frozenset(p.images[x] for x in cur)
                if im not in orbit:
                    if im not in cand:
                        raise AssertionError("candidate set not orbit-closed")
                    orbit.add(im)
                    queue.append(im)
        seen |= orbit
    return reps


def _edge_orbits(group: PermGroup, edges: list[tuple[int, int]]) -> list[list[tuple[int, int]]]:
    """Orbits of the group on the given edges, each sorted, ordered by least
    member."""
    remaining = {frozenset(e) for e in edges}
    out = []
    for e in sorted(edges):
        key = frozenset(e)
        if key not in remaining:
            continue
        orbit = {key}
        queue = [key]
        while queue:
            cur = queue.pop()
            for p in group.generators:
                im = frozenset(p.images[x] for x in cur)
                if im not in orbit:
                    orbit.add(im)
                    queue.append(im)
        remaining -= orbit
        out.append(sorted(tuple(sorted(f)) for f in orbit))
    return out


def _pair_orbit(group: PermGroup, e: tuple[int, int],
                f: tuple[int, int]) -> set[tuple[frozenset[int], frozenset[int]]]:
    """The group orbit of the ordered pair of disjoint edges (e, f)."""
    start = (frozenset(e), frozenset(f))
    orbit = {start}
    queue = [start]
    while queue:
        a, b = queue.pop()
        for p in group.generators:
            im = (frozenset(p.images[x] for x in a),
                  frozenset(p.images[x] for x in b))
            if im not in orbit:
                orbit.add(im)
                queue.append(im)
    return orbit


def find_matching(g: Graph, group: PermGroup | None, m: int,
                  mode: str) -> Matching | None:
    """Search for an m-matching that is permutable / 2-transitive under the
    group (default: the automorphism group); None when none exists.

    Exhaustive up to group equivalence: each partial matching is extended by
    one representative edge per orbit of its setwise stabilizer on the
    remaining candidates.  In either mode the induced action swaps any two
    matching edges, so every edge of a witness lies in one edge orbit and
    every ordered pair of its edges lies in one (symmetric) orbit on disjoint
    edge pairs; candidates are pruned accordingly.
    """
    mode = normalize_mode(mode)
    if m < 1:
        raise ValueError("m must be positive")
    group = _group_or_aut(g, group)
    if 2 * m > g.n:
        return None
    visited: set[frozenset[frozenset[int]]] = set()

    def extend(partial: list[tuple[int, int]], scope: list[tuple[int, int]],
               pair_class: set | None) -> Matching | None:
        if len(partial) == m:
            cand = Matching(partial)
            report = matching_report(g, cand, group)
            return cand if _passes(report, mode) else None
        key = frozenset(frozenset(e) for e in partial)
        if key in visited:
            return None
        visited.add(key)
        stab = matching_stabilizer(g, group, Matching(partial)) if len(partial) > 1 \
            else group.setwise_stabilizer(set(partial[0]))
        used = {x for e in partial for x in e}
        candidates = []
        for e in scope:
            if e[0] in used or e[1] in used:
                continue
            fs = frozenset(e)
            if pair_class is not None and any(
                    (frozenset(f), fs) not in pair_class for f in partial):
                continue
            candidates.append(e)
        if len(candidates) < m - len(partial):
            return None
        for e in _edge_orbit_reps(stab, candidates):
            if len(partial) == 1:
                pc = _pair_orbit(group, partial[0], e)
                if (frozenset(e), frozenset(partial[0])) not in pc:
                    continue  # no group element can ever swap these two edges
            else:
                pc = pair_class
            result = extend(partial + [e], scope, pc)
            if result is not None:
                return result
        return None

    for orbit in _edge_orbits(group, list(g.edges())):
        result = extend([orbit[0]], orbit, None)
        if result is not None:
            return result
    return None


# ---------------------------------------------------------------------------
# transitivity flavors on graphs


def is_arc_transitive(g: Graph, group: PermGroup | None = None) -> bool:
    """One orbit on ordered adjacent pairs (vacuous without edges)."""
    group = _group_or_aut(g, group)
    edges = g.edges()
    if not edges:
        return True
    total = 2 * len(edges)
    start = edges[0]
    orbit = {start}
    queue = [start]
    while queue:
        u, v = queue.pop()
        for p in group.generators:
            im = (p.images[u], p.images[v])
            if im not in orbit:
                orbit.add(im)
                queue.append(im)
    if (start[1], start[0]) not in orbit:
        return False
    return len(orbit) == total


def _first_2arc(g: Graph) -> tuple[int, int, int] | None:
    for a in range(g.n):
        for b in g.neighbors(a):
            for c in g.neighbors(b):
                if c != a:
                    return (a, b, c)
    return None


def is_2arc_transitive(g: Graph, group: PermGroup | None = None) -> bool:
    """One orbit on ordered paths (a, b, c) with a != c."""
    group = _group_or_aut(g, group)
    start = _first_2arc(g)
    if start is None:
        return True
    total = sum(g.degree(v) * (g.degree(v) - 1) for v in range(g.n))
    orbit = {start}
    queue = [start]
    while queue:
        t = queue.pop()
        for p in group.generators:
            im = (p.images[t[0]], p.images[t[1]], p.images[t[2]])
            if im not in orbit:
                orbit.add(im)
                queue.append(im)
    return len(orbit) == total


def _local_image(g: Graph, group: PermGroup, v: int) -> PermGroup:
    stab = group.point_stabilizer(v)
    image, _ = induced_action(stab, [(u,) for u in g.neighbors(v)])
    return image


def is_locally_primitive(g: Graph, group: PermGroup | None = None) -> bool:
    """Every vertex stabilizer acts primitively on that vertex's neighbors."""
    from .graphs import is_connected
    group = _group_or_aut(g, group)
    if not is_connected(g):
        raise ValueError("graph must be connected")
    for orbit in group.orbits():
        image = _local_image(g, group, orbit[0])
        if not is_transitive(image):
            return False
        if not is_primitive(image):
            return False
    return True


def is_locally_symmetric(g: Graph, group: PermGroup | None = None) -> bool:
    """Vertex-transitive with the full symmetric group on each neighborhood."""
    from .graphs import is_connected
    group = _group_or_aut(g, group)
    if not is_connected(g):
        raise ValueError("graph must be connected")
    if not is_transitive(group):
        return False
    image = _local_image(g, group, 0)
    return image.order() == math.factorial(g.degree(0))


def degree_bound_check(g: Graph, group: PermGroup, matching: Matching) -> bool:
    """For a permutable m-matching in a connected arc-transitive graph, the
    degree must be at least m, except for 3-matchings in cycles of length
    divisible by 3.  A False return is a counterexample to that bound."""
    from .graphs import is_connected
    if not is_connected(g):
        raise ValueError("graph must be connected")
    group = _group_or_aut(g, group)
    if not is_arc_transitive(g, group):
        raise ValueError("group is not arc-transitive on the graph")
    report = matching_report(g, matching, group)
    if not report.permutable:
        raise ValueError("matching is not permutable under the group")
    m = len(matching)
    deg = min(g.degree(v) for v in range(g.n))
    if deg >= m:
        return True
    is_cycle = all(g.degree(v) == 2 for v in range(g.n))
    return m == 3 and is_cycle and g.n % 3 == 0
