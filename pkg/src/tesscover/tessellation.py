"""Tessellations (clique partitions of the vertex set), covers, and their enumeration."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Optional

from .cliques import Clique, _bits, maximal_cliques
from .graph import Edge, Graph

DEFAULT_CAP = 10**6


@dataclass(frozen=True)
class Tessellation:
    polygons: tuple[Clique, ...]

    @classmethod
    def of(cls, polygons: Iterable[Iterable[int]]) -> "Tessellation":
        """Canonical form: sorted polygons, each sorted."""
        return cls(tuple(sorted(tuple(sorted(p)) for p in polygons)))

    @classmethod
    def completed(cls, polygons: Iterable[Iterable[int]], n: int) -> "Tessellation":
        """Canonical tessellation from ``polygons`` plus singletons for any vertex left out."""
        polys = [tuple(p) for p in polygons]
        used = {v for p in polys for v in p}
        polys.extend((v,) for v in range(n) if v not in used)
        return cls.of(polys)

    def nontrivial(self) -> list[Clique]:
        return [p for p in self.polygons if len(p) > 1]

    def __len__(self) -> int:
        return len(self.polygons)


@dataclass(frozen=True)
class TessellationCover:
    tessellations: tuple[Tessellation, ...] = ()

    def __len__(self) -> int:
        return len(self.tessellations)

    def __iter__(self):
        return iter(self.tessellations)


@dataclass(frozen=True)
class Violation:
    kind: str  # "non_clique" | "overlap" | "missing" | "out_of_range"
    detail: tuple

    def __str__(self) -> str:
        return f"{self.kind}: {self.detail}"


class InvalidTessellation(ValueError):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(map(str, self.violations)))


class InvalidCover(ValueError):
    def __init__(self, problems):
        self.problems = list(problems)
        super().__init__("; ".join(map(str, self.problems)))


def validate_tessellation(g: Graph, t: Tessellation) -> list[Violation]:
    """Every violation of the tessellation rules; an empty list means valid."""
    out = []
    owner: dict[int, int] = {}
    for idx, poly in enumerate(t.polygons):
        bad = [v for v in poly if not 0 <= v < g.n]
        if bad:
            out.append(Violation("out_of_range", tuple(bad)))
            continue
        if not g.is_clique(set(poly)):
            pairs = tuple((a, b) for a, b in combinations(sorted(set(poly)), 2) if not g.has_edge(a, b))
            out.append(Violation("non_clique", (tuple(poly), pairs)))
        for v in poly:
            if v in owner:
                out.append(Violation("overlap", (v, owner[v], idx)))
            else:
                owner[v] = idx
    missing = tuple(v for v in range(g.n) if v not in owner)
    if missing:
        out.append(Violation("missing", missing))
    return out


def polygon_edges(poly: Iterable[int]) -> list[Edge]:
    return list(combinations(sorted(poly), 2))


def edge_set(g: Graph, t: Tessellation) -> set[Edge]:
    violations = validate_tessellation(g, t)
    if violations:
        raise InvalidTessellation(violations)
    return {e for p in t.polygons for e in polygon_edges(p)}


def is_valid_cover(g: Graph, c: TessellationCover) -> list:
    """Problems with ``c`` as a cover of ``g``: tessellation violations and uncovered edges.

    An empty list means the cover is valid.
    """
    problems: list = []
    covered: set[Edge] = set()
    for i, t in enumerate(c.tessellations):
        vs = validate_tessellation(g, t)
        if vs:
            problems.extend(Violation(v.kind, (i,) + v.detail) for v in vs)
            continue
        covered |= edge_set(g, t)
    uncovered = sorted(g.edges - covered)
    if uncovered:
        problems.append(Violation("uncovered", tuple(uncovered)))
    return problems


def uncovered_edges(g: Graph, c: TessellationCover) -> list[Edge]:
    for p in is_valid_cover(g, c):
        if p.kind == "uncovered":
            return list(p.detail)
    return []


# --- enumeration ----------------------------------------------------------


def _cliques_with(v: int, cands: int, adj: tuple[int, ...]) -> Iterator[int]:
    """All cliques (as masks) of the form {v} ∪ C with C ⊆ cands, C ⊆ N(v), each once."""

    def grow(clique: int, pool: int):
        yield clique
        for w in _bits(pool):
            # only extend with higher-index vertices so each set is produced once
            higher = pool & ~((1 << (w + 1)) - 1)
            yield from grow(clique | (1 << w), higher & adj[w])

    yield from grow(1 << v, cands & adj[v])


def clique_partitions(g: Graph, vertices: int) -> Iterator[list[int]]:
    """All partitions of the vertex mask into cliques, as lists of masks.

    Each partition appears exactly once: the lowest remaining vertex picks
    its polygon first.
    """
    adj = g.adj_mask

    def rec(rest: int):
        if not rest:
            yield []
            return
        v = (rest & -rest).bit_length() - 1
        for poly in _cliques_with(v, rest & ~(1 << v), adj):
            for tail in rec(rest & ~poly):
                yield [poly] + tail

    yield from rec(vertices)


def _component_masks(g: Graph, vertices: int) -> list[int]:
    adj = g.adj_mask
    comps = []
    rest = vertices
    while rest:
        frontier = rest & -rest
        comp = 0
        while frontier:
            comp |= frontier
            nxt = 0
            for u in _bits(frontier):
                nxt |= adj[u]
            frontier = nxt & vertices & ~comp
        comps.append(comp)
        rest &= ~comp
    return comps


def _partitions_by_component(g: Graph, vertices: int) -> Iterator[list[int]]:
    comps = _component_masks(g, vertices)

    def rec(i: int):
        if i == len(comps):
            yield []
            return
        for head in clique_partitions(g, comps[i]):
            for tail in rec(i + 1):
                yield head + tail

    yield from rec(0)


def _as_tessellation(masks: list[int]) -> Tessellation:
    return Tessellation.of(tuple(_bits(m)) for m in masks)


class TessellationStream:
    """Deterministic, duplicate-free stream of tessellations, stopping after ``cap`` items.

    After iteration finishes, ``truncated`` tells whether the cap cut it short.
    """

    def __init__(self, g: Graph, cap: Optional[int] = DEFAULT_CAP, restricted: bool = True):
        self.g = g
        self.cap = cap
        self.restricted = restricted
        self.truncated = False
        self.emitted = 0

    def _raw(self) -> Iterator[Tessellation]:
        g = self.g
        full = (1 << g.n) - 1
        if not self.restricted:
            for masks in _partitions_by_component(g, full):
                yield _as_tessellation(masks)
            return
        seen = set()
        for clique in maximal_cliques(g):
            cmask = sum(1 << v for v in clique)
            for masks in _partitions_by_component(g, full & ~cmask):
                t = _as_tessellation([cmask] + masks)
                if t not in seen:
                    seen.add(t)
                    yield t

    def __iter__(self) -> Iterator[Tessellation]:
        self.truncated = False
        self.emitted = 0
        for t in self._raw():
            if self.cap is not None and self.emitted >= self.cap:
                self.truncated = True
                return
            self.emitted += 1
            yield t


def enumerate_tessellations_restricted(g: Graph, cap: Optional[int] = DEFAULT_CAP) -> TessellationStream:
    """Tessellations having at least one maximal clique of ``g`` as a polygon."""
    return TessellationStream(g, cap, restricted=True)


def enumerate_tessellations(g: Graph, cap: Optional[int] = DEFAULT_CAP) -> TessellationStream:
    """Every tessellation of ``g``. Grows like the Bell numbers on dense graphs."""
    return TessellationStream(g, cap, restricted=False)


def edge_bits(g: Graph) -> dict[Edge, int]:
    return {e: 1 << i for i, e in enumerate(g.sorted_edges)}


def edge_mask(g: Graph, t: Tessellation, bits: Optional[dict] = None) -> int:
    bits = bits or edge_bits(g)
    mask = 0
    for p in t.polygons:
        for e in polygon_edges(p):
            mask |= bits[e]
    return mask
