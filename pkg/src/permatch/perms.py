"""Permutations and permutation groups on {0, ..., n-1}.

Permutations act on the right: x^(g*h) == (x^g)^h.  Groups carry a
deterministic base and strong generating set (Schreier-Sims), which makes
orders, membership tests, stabilizers and backtrack searches exact and
reproducible.  Orders are plain Python ints, so they never overflow.
"""

from __future__ import annotations

import math
import re
from typing import Callable, Iterable, Iterator, Sequence


class Perm:
    """An immutable permutation stored as a tuple of images."""

    __slots__ = ("images",)

    def __init__(self, images: Sequence[int]):
        images = tuple(images)
        if sorted(images) != list(range(len(images))):
            raise ValueError("not a permutation of 0..n-1: %r" % (images,))
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("Perm is immutable")

    @classmethod
    def _raw(cls, images: tuple[int, ...]) -> "Perm":
        # internal: trusted images, skip validation
        p = object.__new__(cls)
        object.__setattr__(p, "images", images)
        return p

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(range(n))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Perm":
        """Build a permutation of degree n from disjoint cycles."""
        images = list(range(n))
        seen: set[int] = set()
        for cyc in cycles:
            for x in cyc:
                if not (0 <= x < n):
                    raise ValueError("cycle entry %d out of range" % x)
                if x in seen:
                    raise ValueError("cycles are not disjoint at %d" % x)
                seen.add(x)
            for i, x in enumerate(cyc):
                images[x] = cyc[(i + 1) % len(cyc)]
        return cls(images)

    @classmethod
    def parse(cls, text: str, n: int) -> "Perm":
        """Parse cycle notation like "(0 1 2)(3 4)"; "()" is the identity."""
        text = text.strip()
        if text in ("", "()"):
            return cls.identity(n)
        if not re.fullmatch(r"(\(\s*\d+(?:[\s,]+\d+)*\s*\))+", text):
            raise ValueError("malformed cycle notation: %r" % text)
        cycles = []
        for part in re.findall(r"\(([^()]*)\)", text):
            entries = [int(tok) for tok in re.split(r"[\s,]+", part.strip()) if tok]
            if entries:
                cycles.append(entries)
        return cls.from_cycles(n, cycles)

    def apply(self, x: int) -> int:
        return self.images[x]

    def __mul__(self, other: "Perm") -> "Perm":
        # x^(self*other) == (x^self)^other
        if len(self.images) != len(other.images):
            raise ValueError("degree mismatch")
        return Perm._raw(tuple(map(other.images.__getitem__, self.images)))

    def inverse(self) -> "Perm":
        inv = [0] * len(self.images)
        for i, x in enumerate(self.images):
            inv[x] = i
        return Perm._raw(tuple(inv))

    def __pow__(self, k: int) -> "Perm":
        if k < 0:
            return self.inverse() ** (-k)
        result = Perm.identity(len(self.images))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    def moved_points(self) -> list[int]:
        return [i for i, x in enumerate(self.images) if i != x]

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest point."""
        out = []
        seen = [False] * len(self.images)
        for start in range(len(self.images)):
            if seen[start] or self.images[start] == start:
                continue
            cyc = [start]
            seen[start] = True
            x = self.images[start]
            while x != start:
                cyc.append(x)
                seen[x] = True
                x = self.images[x]
            out.append(tuple(cyc))
        return out

    def cycle_string(self) -> str:
        cycles = self.cycles()
        if not cycles:
            return "()"
        return "".join("(" + " ".join(str(x) for x in cyc) + ")" for cyc in cycles)

    def __repr__(self) -> str:
        return "Perm[%s]" % self.cycle_string()

    def __eq__(self, other) -> bool:
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self) -> int:
        return hash(self.images)


class BlockSystem:
    """A G-invariant partition of a domain into blocks."""

    def __init__(self, blocks: Iterable[Iterable[int]]):
        blks = sorted(tuple(sorted(b)) for b in blocks)
        if any(not b for b in blks):
            raise ValueError("empty block")
        self.blocks: tuple[tuple[int, ...], ...] = tuple(blks)
        self.block_of: dict[int, int] = {}
        for i, b in enumerate(self.blocks):
            for x in b:
                if x in self.block_of:
                    raise ValueError("blocks overlap at %d" % x)
                self.block_of[x] = i

    def __len__(self) -> int:
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def __eq__(self, other) -> bool:
        return isinstance(other, BlockSystem) and self.blocks == other.blocks

    def __repr__(self) -> str:
        return "BlockSystem(%r)" % (self.blocks,)

    def is_trivial(self) -> bool:
        return len(self.blocks) == 1 or all(len(b) == 1 for b in self.blocks)


class _Level:
    """One level of a stabilizer chain: a base point, the generators fixing
    all earlier base points, and the transversal of the basic orbit."""

    __slots__ = ("point", "gens", "transversal", "inverse", "_done")

    def __init__(self, point: int, n: int):
        ident = Perm.identity(n)
        self.point = point
        self.gens: list[Perm] = []
        self.transversal: dict[int, Perm] = {point: ident}
        self.inverse: dict[int, Perm] = {point: ident}
        self._done: set[tuple[int, int]] = set()


def _sift(levels: list[_Level], p: Perm, start: int = 0) -> tuple[Perm, int]:
    """Strip p through the chain; return (residue, level where it stuck)."""
    for i in range(start, len(levels)):
        lvl = levels[i]
        d = p.images[lvl.point]
        inv = lvl.inverse.get(d)
        if inv is None:
            return p, i
        p = p * inv
    return p, len(levels)


def _append_gen(levels: list[_Level], p: Perm, j: int) -> int:
    """Store a sifted residue as a generator at level j (creating the level
    and its base point if the chain ends there)."""
    if j == len(levels):
        levels.append(_Level(min(p.moved_points()), len(p.images)))
    levels[j].gens.append(p)
    return j


def _extend_level(levels: list[_Level], i: int) -> int | None:
    """Process unfinished Schreier pairs at level i.

    Generators of every level >= i act on this orbit (they fix the earlier
    base points, not this one's orbit).  Transversal entries are never
    overwritten, so pairs already processed stay valid.  Returns the level
    where a residue got added, or None once level i is complete.
    """
    lvl = levels[i]
    while True:
        progressed = False
        gens = [g for l in levels[i:] for g in l.gens]
        for d in list(lvl.transversal.keys()):
            u = lvl.transversal[d]
            for g in gens:
                if (d, g) in lvl._done:
                    continue
                progressed = True
                lvl._done.add((d, g))
                e = g.images[d]
                ue = lvl.transversal.get(e)
                if ue is None:
                    ue = u * g
                    lvl.transversal[e] = ue
                    lvl.inverse[e] = ue.inverse()
                    continue  # u * g equals the new transversal entry
                schreier = u * g * lvl.inverse[e]
                if schreier.is_identity():
                    continue
                residue, j = _sift(levels, schreier, i + 1)
                if not residue.is_identity():
                    return _append_gen(levels, residue, j)
        if not progressed:
            return None


def _complete_chain(levels: list[_Level], start: int) -> None:
    """Re-establish the chain condition from the deepest level upward; a new
    residue drops the work pointer back down to its level."""
    i = min(start, len(levels) - 1)
    while i >= 0:
        j = _extend_level(levels, i)
        if j is None:
            i -= 1
        else:
            i = j


def _build_chain(degree: int, gens: Sequence[Perm], base_hint: Sequence[int]) -> list[_Level]:
    levels = [_Level(b, degree) for b in base_hint]
    for g in gens:
        if g.is_identity():
            continue
        residue, i = _sift(levels, g)
        if not residue.is_identity():
            j = _append_gen(levels, residue, i)
            _complete_chain(levels, j)
    return levels


class PermGroup:
    """A permutation group with a deterministic base and strong generating set.

    New levels pick the smallest moved point as base point; an optional
    base_hint pins a prefix of the base, which is how stabilizer extraction
    and backtrack searches are arranged.
    """

    def __init__(self, generators: Iterable[Perm], degree: int | None = None,
                 base_hint: Sequence[int] = ()):
        gens = tuple(generators)
        if degree is None:
            if not gens:
                raise ValueError("degree required for an empty generator list")
            degree = gens[0].degree
        if any(g.degree != degree for g in gens):
            raise ValueError("generators have mismatched degrees")
        if any(not (0 <= b < degree) for b in base_hint):
            raise ValueError("base hint point out of range")
        self.degree = degree
        self.generators = gens
        self._hint = tuple(base_hint)
        self._levels = _build_chain(degree, gens, self._hint)

    @classmethod
    def from_generators(cls, generators: Iterable[Perm], degree: int | None = None) -> "PermGroup":
        return cls(generators, degree)

    @classmethod
    def trivial(cls, degree: int) -> "PermGroup":
        return cls((), degree)

    @property
    def base(self) -> tuple[int, ...]:
        return tuple(lvl.point for lvl in self._levels)

    @property
    def strong_generators(self) -> tuple[Perm, ...]:
        out: list[Perm] = []
        for lvl in self._levels:
            for g in lvl.gens:
                if g not in out:
                    out.append(g)
        return tuple(out)

    def basic_orbits(self) -> list[tuple[int, ...]]:
        return [tuple(sorted(lvl.transversal)) for lvl in self._levels]

    def order(self) -> int:
        n = 1
        for lvl in self._levels:
            n *= len(lvl.transversal)
        return n

    def sift(self, p: Perm) -> Perm:
        if p.degree != self.degree:
            raise ValueError("degree mismatch")
        residue, _ = _sift(self._levels, p)
        return residue

    def contains(self, p: Perm) -> bool:
        return p.degree == self.degree and self.sift(p).is_identity()

    def __contains__(self, p: Perm) -> bool:
        return self.contains(p)

    def rebase(self, base_hint: Sequence[int]) -> "PermGroup":
        """The same group, rebuilt so its base starts with base_hint."""
        gens = self.strong_generators or self.generators
        return PermGroup(gens, self.degree, base_hint=tuple(base_hint))

    def orbit(self, point: int) -> tuple[int, ...]:
        if not (0 <= point < self.degree):
            raise ValueError("point out of range")
        seen = {point}
        queue = [point]
        while queue:
            x = queue.pop()
            for g in self.generators:
                y = g.images[x]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return tuple(sorted(seen))

    def orbits(self) -> list[tuple[int, ...]]:
        out = []
        remaining = set(range(self.degree))
        while remaining:
            o = self.orbit(min(remaining))
            out.append(o)
            remaining.difference_update(o)
        return out

    def pointwise_stabilizer(self, points: Sequence[int]) -> "PermGroup":
        """The subgroup fixing every listed point, via base change."""
        pts = tuple(points)
        if not pts:
            return self
        rebased = self.rebase(pts)
        gens = []
        for lvl in rebased._levels[len(pts):]:
            gens.extend(lvl.gens)
        tail = tuple(lvl.point for lvl in rebased._levels[len(pts):])
        return PermGroup(gens, self.degree, base_hint=tail)

    def point_stabilizer(self, point: int) -> "PermGroup":
        return self.pointwise_stabilizer((point,))

    def setwise_stabilizer(self, points: Iterable[int]) -> "PermGroup":
        """The subgroup mapping the given set onto itself (backtrack search)."""
        s = frozenset(points)
        if any(not (0 <= x < self.degree) for x in s):
            raise ValueError("point out of range")
        if not s or len(s) == self.degree:
            return self
        inside = [x in s for x in range(self.degree)]
        rebased = self.rebase(sorted(s))

        def keep(level: int, img: int, imgs: list[int]) -> bool:
            return inside[img] == inside[rebased._levels[level].point]

        def test(g: Perm) -> bool:
            im = g.images
            return all(im[x] in s for x in s)

        return subgroup_search(rebased, test, prune=keep)


def subgroup_search(group: PermGroup, test: Callable[[Perm], bool],
                    prune: Callable[[int, int, list[int]], bool] | None = None) -> PermGroup:
    """Generators for {g in group : test(g)}, which must be a subgroup.

    Depth-first search over the stabilizer chain: for each level i and each
    achievable image d of the i-th base point, one element fixing the earlier
    base points and sending base[i] to d is kept.  prune(level, img, imgs)
    sees the images of base[0..level-1] in imgs plus the candidate image img
    of base[level]; returning False cuts that branch.
    """
    levels = group._levels
    k = len(levels)
    n = group.degree
    base_pts = [lvl.point for lvl in levels]
    orbits = [sorted(lvl.transversal) for lvl in levels]
    found: list[Perm] = []

    def extend(i: int, w: Perm, imgs: list[int]) -> Perm | None:
        if i == k:
            return w if test(w) else None
        wi = w.images
        for d in orbits[i]:
            img = wi[d]
            if prune is not None and not prune(i, img, imgs):
                continue
            imgs.append(img)
            r = extend(i + 1, levels[i].transversal[d] * w, imgs)
            imgs.pop()
            if r is not None:
                return r
        return None

    for i in range(k - 1, -1, -1):
        prefix = base_pts[:i]
        for d in orbits[i]:
            if d == levels[i].point:
                continue  # covered by deeper levels
            if prune is not None and not prune(i, d, prefix):
                continue
            imgs = prefix + [d]
            g = extend(i + 1, levels[i].transversal[d], imgs)
            if g is not None:
                found.append(g)

    return PermGroup(found, n, base_hint=tuple(base_pts))


def find_elements(group: PermGroup, mappings: Sequence[tuple[int, int]],
                  test: Callable[[Perm], bool] | None = None) -> Iterator[Perm]:
    """Yield every element sending point p to q for each (p, q), in a fixed
    deterministic order, optionally filtered by an extra leaf test."""
    pts = [p for p, _ in mappings]
    target = {p: q for p, q in mappings}
    if len(target) != len(pts):
        raise ValueError("duplicate points in mappings")
    rebased = group.rebase(pts)
    levels = rebased._levels
    k = len(levels)

    def rec(i: int, w: Perm, winv: Perm) -> Iterator[Perm]:
        if i == k:
            if test is None or test(w):
                yield w
            return
        lvl = levels[i]
        if i < len(pts):
            d = winv.images[target[lvl.point]]
            u = lvl.transversal.get(d)
            if u is None:
                return
            yield from rec(i + 1, u * w, winv * lvl.inverse[d])
        else:
            for d in sorted(lvl.transversal):
                yield from rec(i + 1, lvl.transversal[d] * w, winv * lvl.inverse[d])

    ident = Perm.identity(group.degree)
    return rec(0, ident, ident)


def _check_domain(group: PermGroup, domain: Sequence[int] | None) -> list[int]:
    if domain is None:
        return list(range(group.degree))
    dom = sorted(set(domain))
    if any(not (0 <= x < group.degree) for x in dom):
        raise ValueError("domain point out of range")
    ds = set(dom)
    for g in group.generators:
        if any(g.images[x] not in ds for x in dom):
            raise ValueError("domain is not invariant under the group")
    return dom


def is_transitive(group: PermGroup, domain: Sequence[int] | None = None) -> bool:
    dom = _check_domain(group, domain)
    if len(dom) <= 1:
        return True
    return set(group.orbit(dom[0])) >= set(dom)


def is_2transitive(group: PermGroup, domain: Sequence[int] | None = None) -> bool:
    """Transitive on ordered pairs of distinct domain points (vacuously true
    on domains of size at most 1)."""
    dom = _check_domain(group, domain)
    if len(dom) <= 1:
        return True
    if not is_transitive(group, dom):
        return False
    alpha = dom[0]
    stab = group.point_stabilizer(alpha)
    rest = set(dom) - {alpha}
    beta = min(rest)
    return set(stab.orbit(beta)) >= rest


def minimal_block(group: PermGroup, pair: tuple[int, int],
                  domain: Sequence[int] | None = None) -> BlockSystem:
    """The finest G-invariant partition of the domain merging the given pair.

    Union-find closure: whenever two points are identified, every generator
    image of the pair is identified too.
    """
    dom = _check_domain(group, domain)
    if not is_transitive(group, dom):
        raise ValueError("group is not transitive on the domain")
    a, b = pair
    if a == b or a not in dom or b not in dom:
        raise ValueError("bad pair %r" % (pair,))

    parent = {x: x for x in dom}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    queue = [(a, b)]
    parent[find(b)] = find(a)
    while queue:
        x, y = queue.pop()
        for g in group.generators:
            gx, gy = g.images[x], g.images[y]
            rx, ry = find(gx), find(gy)
            if rx != ry:
                parent[ry] = rx
                queue.append((gx, gy))

    blocks: dict[int, list[int]] = {}
    for x in dom:
        blocks.setdefault(find(x), []).append(x)
    return BlockSystem(blocks.values())


def is_primitive(group: PermGroup, domain: Sequence[int] | None = None) -> bool:
    """Transitive with no nontrivial block system."""
    dom = _check_domain(group, domain)
    if not is_transitive(group, dom):
        raise ValueError("group is not transitive on the domain")
    if len(dom) <= 2:
        return True
    alpha = dom[0]
    for omega in dom[1:]:
        bs = minimal_block(group, (alpha, omega), dom)
        if len(bs) > 1:
            return False
    return True


def induced_action(group: PermGroup, cells: Sequence[Iterable[int]]) -> tuple[PermGroup, int]:
    """The action of the group on a list of cells it permutes.

    Returns (image group on cell indices, kernel order).  Raises if some
    generator fails to map every cell onto a cell.
    """
    cell_sets = [frozenset(c) for c in cells]
    index = {c: i for i, c in enumerate(cell_sets)}
    if len(index) != len(cell_sets):
        raise ValueError("duplicate cells")
    img_gens = []
    for g in group.generators:
        images = []
        for c in cell_sets:
            target = frozenset(g.images[x] for x in c)
            j = index.get(target)
            if j is None:
                raise ValueError("generator %r does not permute the cells" % g)
            images.append(j)
        img_gens.append(Perm(images))
    image = PermGroup(img_gens, degree=len(cell_sets))
    kernel_order = group.order() // image.order()
    return image, kernel_order


def is_symmetric_action(group: PermGroup, cells: Sequence[Iterable[int]]) -> bool:
    """Does the induced action on the cells realize the full symmetric group?"""
    image, _ = induced_action(group, cells)
    return image.order() == math.factorial(len(cells))
