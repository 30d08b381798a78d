"""Immutable edge-colored multigraphs and their structural analysis.

A graph here is always (d+1)-regular and properly edge-colored with colors
0..d: it is stored as one perfect matching per color, so every vertex meets
exactly one edge of each color.  Two vertices may be joined by parallel
edges of distinct colors (bigons); loops are rejected at construction.
These graphs encode closed piecewise-linear manifolds through the cell
complex built in :mod:`gemkit.complexes`, and everything downstream
(embeddings, homology, searches) walks their colored edges.

All objects are immutable after construction and safe to share between
concurrent readers; every function in this module is pure.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence


class NotConnectedError(ValueError):
    """A gem-level operation was handed a disconnected graph."""


class ColoredGraph:
    """A (d+1)-regular properly edge-colored multigraph on vertices 0..n-1.

    ``matchings[c][v]`` is the vertex joined to ``v`` by the unique edge of
    color ``c``; each matching is a fixed-point-free involution.  Proper
    coloring and (d+1)-regularity are consequences of the representation.
    Disconnected graphs are constructible (residues of connected graphs may
    be disconnected), but gem-level analyses reject them.
    """

    __slots__ = ("matchings", "_connected")

    def __init__(self, matchings: Iterable[Sequence[int]]) -> None:
        mats = tuple(tuple(m) for m in matchings)
        if len(mats) < 2:
            raise ValueError("need at least two colors (dimension >= 1)")
        n = len(mats[0])
        if n < 2 or n % 2:
            raise ValueError(f"vertex count must be even and >= 2, got {n}")
        for c, m in enumerate(mats):
            if len(m) != n:
                raise ValueError(
                    f"matching for color {c} has {len(m)} entries, expected {n}"
                )
            for v, w in enumerate(m):
                if not 0 <= w < n:
                    raise ValueError(f"color {c}: vertex {v} maps to {w!r}")
                if w == v:
                    raise ValueError(f"color {c}: loop at vertex {v}")
                if m[w] != v:
                    raise ValueError(f"color {c}: not an involution at vertex {v}")
        self.matchings = mats
        self._connected: Optional[bool] = None

    @property
    def dimension(self) -> int:
        return len(self.matchings) - 1

    @property
    def vertex_count(self) -> int:
        return len(self.matchings[0])

    @property
    def colors(self) -> range:
        return range(len(self.matchings))

    def neighbor(self, v: int, c: int) -> int:
        return self.matchings[c][v]

    def edges(self) -> Iterator[tuple[int, int, int]]:
        """Yield each edge once as (u, v, c) with u < v, colors ascending."""
        for c, m in enumerate(self.matchings):
            for u, w in enumerate(m):
                if u < w:
                    yield u, w, c

    def is_connected(self) -> bool:
        if self._connected is None:
            _, count = component_index(self, self.colors)
            self._connected = count == 1
        return self._connected

    def relabel(self, perm: Sequence[int]) -> "ColoredGraph":
        """Apply the vertex bijection v -> perm[v]."""
        if sorted(perm) != list(range(self.vertex_count)):
            raise ValueError("relabeling is not a permutation of the vertices")
        return ColoredGraph(_relabeled_matchings(self.matchings, perm))

    def recolor(self, cmap: Sequence[int]) -> "ColoredGraph":
        """Apply the color bijection c -> cmap[c]."""
        k = len(self.matchings)
        if sorted(cmap) != list(range(k)):
            raise ValueError("recoloring is not a permutation of the colors")
        new = [()] * k
        for c, m in enumerate(self.matchings):
            new[cmap[c]] = m
        return ColoredGraph(new)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, ColoredGraph) and self.matchings == other.matchings

    def __hash__(self) -> int:
        return hash(self.matchings)

    def __repr__(self) -> str:
        return (
            f"ColoredGraph(dimension={self.dimension}, "
            f"vertices={self.vertex_count})"
        )


def _relabeled_matchings(
    mats: tuple[tuple[int, ...], ...], perm: Sequence[int]
) -> list[list[int]]:
    n = len(mats[0])
    out = []
    for m in mats:
        new = [0] * n
        for v in range(n):
            new[perm[v]] = perm[m[v]]
        out.append(new)
    return out


@dataclass(frozen=True)
class ResiduePartition:
    """Connected components of the subgraph spanned by a set of colors.

    Components are sorted vertex tuples, listed in order of their minimum
    vertex, so the partition is deterministic for a given graph.
    """

    colors: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]

    @property
    def count(self) -> int:
        return len(self.components)


def component_index(
    g: ColoredGraph, colors: Iterable[int]
) -> tuple[list[int], int]:
    """Label every vertex with its component id in the chosen residue.

    Ids are assigned in order of the component's minimum vertex.  Returns
    the vertex -> id array together with the number of components.
    """
    cols = _checked_colors(g, colors)
    n = g.vertex_count
    mats = [g.matchings[c] for c in cols]
    idx = [-1] * n
    count = 0
    for start in range(n):
        if idx[start] >= 0:
            continue
        idx[start] = count
        stack = [start]
        while stack:
            v = stack.pop()
            for m in mats:
                w = m[v]
                if idx[w] < 0:
                    idx[w] = count
                    stack.append(w)
        count += 1
    return idx, count


def residue_components(g: ColoredGraph, colors: Iterable[int]) -> ResiduePartition:
    """Partition the vertices under edges whose colors lie in ``colors``."""
    cols = _checked_colors(g, colors)
    idx, count = component_index(g, cols)
    comps: list[list[int]] = [[] for _ in range(count)]
    for v in range(g.vertex_count):
        comps[idx[v]].append(v)
    return ResiduePartition(cols, tuple(tuple(c) for c in comps))


def residue_count(g: ColoredGraph, colors: Iterable[int]) -> int:
    """Number of components of the residue; the classical g-value."""
    return component_index(g, colors)[1]


def _checked_colors(g: ColoredGraph, colors: Iterable[int]) -> tuple[int, ...]:
    cols = tuple(sorted(set(colors)))
    for c in cols:
        if not 0 <= c <= g.dimension:
            raise ValueError(f"color {c} out of range 0..{g.dimension}")
    return cols


def is_bipartite(g: ColoredGraph) -> bool:
    """True iff the underlying multigraph has no odd cycle."""
    n = g.vertex_count
    side = [-1] * n
    for start in range(n):
        if side[start] >= 0:
            continue
        side[start] = 0
        stack = [start]
        while stack:
            v = stack.pop()
            for m in g.matchings:
                w = m[v]
                if side[w] < 0:
                    side[w] = side[v] ^ 1
                    stack.append(w)
                elif side[w] == side[v]:
                    return False
    return True


def is_contracted(g: ColoredGraph) -> bool:
    """True iff dropping any single color leaves the graph connected."""
    if not g.is_connected():
        raise NotConnectedError("contractedness is defined for connected graphs")
    all_colors = set(g.colors)
    for c in g.colors:
        if component_index(g, all_colors - {c})[1] != 1:
            return False
    return True


def residue_graphs(
    g: ColoredGraph, colors: Iterable[int]
) -> list[tuple[ColoredGraph, tuple[int, ...]]]:
    """Extract each component of a residue as its own colored graph.

    Colors are renumbered ascending to 0..q-1 and vertices to 0..m-1 in
    increasing order of their original labels.  Each entry is the component
    graph together with the tuple mapping new vertex -> original vertex.
    """
    cols = _checked_colors(g, colors)
    if len(cols) < 2:
        raise ValueError("a residue graph needs at least two colors")
    part = residue_components(g, cols)
    out = []
    for comp in part.components:
        back = {orig: i for i, orig in enumerate(comp)}
        mats = [
            tuple(back[g.matchings[c][orig]] for orig in comp) for c in cols
        ]
        out.append((ColoredGraph(mats), comp))
    return out


@dataclass(frozen=True)
class Isomorphism:
    """A witness pair: vertex bijection plus color bijection.

    ``vertex_map[v]`` and ``color_map[c]`` give the images in the target
    graph; ``color_map`` is the identity in color-fixed mode.
    """

    vertex_map: tuple[int, ...]
    color_map: tuple[int, ...]

    def valid_between(self, a: ColoredGraph, b: ColoredGraph) -> bool:
        if a.dimension != b.dimension or a.vertex_count != b.vertex_count:
            return False
        for c, m in enumerate(a.matchings):
            bm = b.matchings[self.color_map[c]]
            for v, w in enumerate(m):
                if bm[self.vertex_map[v]] != self.vertex_map[w]:
                    return False
        return True


_MODES = ("color-fixed", "color-permuting")


def _check_mode(mode: str) -> None:
    if mode not in _MODES:
        raise ValueError(f"mode must be one of {_MODES}, got {mode!r}")


def _bfs_labeling(
    mats: tuple[tuple[int, ...], ...], start: int, sigma: tuple[int, ...]
) -> tuple[tuple[int, ...], list[int], list[int]]:
    """Deterministic labeling from a seed vertex and a color slot order.

    BFS visits neighbors in the slot order ``sigma`` (slot j follows edges
    of color sigma[j]) and labels vertices by discovery.  The encoding row
    for label x lists, per slot, the label of x's neighbor; the flattened
    tuple determines the graph up to this labeling.  Only meaningful on
    connected graphs.
    """
    n = len(mats[0])
    label = [-1] * n
    order = [start]
    label[start] = 0
    for v in order:
        for c in sigma:
            w = mats[c][v]
            if label[w] < 0:
                label[w] = len(order)
                order.append(w)
    enc = tuple(label[mats[c][v]] for v in order for c in sigma)
    return enc, label, order


def canonical_labeling(
    g: ColoredGraph, mode: str = "color-fixed"
) -> tuple[tuple[int, ...], list[int], tuple[int, ...]]:
    """Minimal encoding over BFS labelings, with the labeling achieving it.

    Returns (encoding, vertex -> label array, slot order sigma).  Two
    connected graphs are isomorphic in the given mode exactly when their
    minimal encodings coincide.
    """
    _check_mode(mode)
    if not g.is_connected():
        raise NotConnectedError("canonical form is defined for connected graphs")
    k = len(g.matchings)
    if mode == "color-fixed":
        sigmas: Iterable[tuple[int, ...]] = (tuple(range(k)),)
    else:
        sigmas = itertools.permutations(range(k))
    best = None
    for sigma in sigmas:
        for start in range(g.vertex_count):
            enc, label, _ = _bfs_labeling(g.matchings, start, sigma)
            if best is None or enc < best[0]:
                best = (enc, label, sigma)
    assert best is not None
    return best


def canonical_form(g: ColoredGraph, mode: str = "color-fixed") -> bytes:
    """Canonical byte string: equal exactly for isomorphic graphs.

    Exact (search-based, not hashed), so deduplication through it is sound.
    """
    enc, _, _ = canonical_labeling(g, mode)
    n = g.vertex_count
    body = [g.dimension, n] + list(enc)
    if n < 256:
        return bytes(body)
    return b",".join(str(x).encode() for x in body)


def _invariant_fingerprint(g: ColoredGraph, mode: str) -> tuple:
    """Cheap isomorphism invariants used to reject pairs early."""
    pair_counts = tuple(
        residue_count(g, pair)
        for pair in itertools.combinations(g.colors, 2)
    )
    if mode == "color-permuting":
        pair_counts = tuple(sorted(pair_counts))
    return (g.dimension, g.vertex_count, is_bipartite(g), pair_counts)


def _isomorphic_connected_fixed(
    a: ColoredGraph, b: ColoredGraph
) -> Optional[tuple[list[int], list[int]]]:
    enc_a, lab_a, _ = canonical_labeling(a, "color-fixed")
    enc_b, lab_b, _ = canonical_labeling(b, "color-fixed")
    if enc_a != enc_b:
        return None
    return lab_a, lab_b


def isomorphic(
    a: ColoredGraph, b: ColoredGraph, mode: str = "color-fixed"
) -> Optional[Isomorphism]:
    """Search for an isomorphism witness; None when there is none.

    In color-permuting mode every color bijection is tried on top of the
    color-fixed search.  The result does not depend on how the inputs were
    labeled.  Disconnected graphs are matched component by component.
    """
    _check_mode(mode)
    if a.dimension != b.dimension or a.vertex_count != b.vertex_count:
        return None
    if _invariant_fingerprint(a, mode) != _invariant_fingerprint(b, mode):
        return None
    k = len(a.matchings)
    if mode == "color-fixed":
        cmaps: Iterable[tuple[int, ...]] = (tuple(range(k)),)
    else:
        cmaps = itertools.permutations(range(k))
    for cmap in cmaps:
        vmap = _vertex_map_fixed(a.recolor(cmap), b)
        if vmap is not None:
            iso = Isomorphism(tuple(vmap), tuple(cmap))
            assert iso.valid_between(a, b)
            return iso
    return None


def _vertex_map_fixed(a: ColoredGraph, b: ColoredGraph) -> Optional[list[int]]:
    """Color-fixed vertex bijection a -> b, or None; handles disconnected."""
    if a.is_connected() and b.is_connected():
        pair = _isomorphic_connected_fixed(a, b)
        if pair is None:
            return None
        lab_a, lab_b = pair
        pos_b = [0] * b.vertex_count
        for v, lbl in enumerate(lab_b):
            pos_b[lbl] = v
        return [pos_b[lab_a[v]] for v in range(a.vertex_count)]

    comps_a = residue_graphs(a, a.colors)
    comps_b = residue_graphs(b, b.colors)
    if len(comps_a) != len(comps_b):
        return None
    keyed_b: dict[bytes, list[int]] = {}
    for i, (gb, _) in enumerate(comps_b):
        keyed_b.setdefault(canonical_form(gb, "color-fixed"), []).append(i)
    vmap = [-1] * a.vertex_count
    for ga, verts_a in comps_a:
        key = canonical_form(ga, "color-fixed")
        bucket = keyed_b.get(key)
        if not bucket:
            return None
        gb, verts_b = comps_b[bucket.pop()]
        _, lab_a, _ = canonical_labeling(ga, "color-fixed")
        _, lab_b, _ = canonical_labeling(gb, "color-fixed")
        pos_b = [0] * gb.vertex_count
        for v, lbl in enumerate(lab_b):
            pos_b[lbl] = v
        for v in range(ga.vertex_count):
            vmap[verts_a[v]] = verts_b[pos_b[lab_a[v]]]
    return vmap
