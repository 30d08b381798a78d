"""Regular embeddings of colored graphs indexed by cyclic color orders.

Every cyclic arrangement of the colors determines a surface into which a
connected (d+1)-colored graph embeds so that each face is bounded by a
cycle alternating two cyclically consecutive colors.  This module computes
the Euler characteristic and genus of those surfaces, the face-cycle type
seen at each vertex, and detects when all vertices see the same type.

Arithmetic is exact throughout: the genus is kept as a doubled integer so
no fractional type ever enters a computation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from .core import ColoredGraph, NotConnectedError, component_index, is_bipartite


@dataclass(frozen=True)
class CyclicPermutation:
    """A cyclic arrangement of the colors 0..d, stored canonically.

    The representative starts at 0 and, for d >= 2, has its second entry
    smaller than its last, which kills rotations and reflections.
    """

    order: tuple[int, ...]

    def __post_init__(self) -> None:
        t = self.order
        if sorted(t) != list(range(len(t))):
            raise ValueError(f"{t!r} is not an arrangement of 0..{len(t) - 1}")
        if t[0] != 0:
            raise ValueError("canonical arrangement must start at color 0")
        if len(t) > 2 and t[1] > t[-1]:
            raise ValueError("canonical arrangement requires order[1] < order[-1]")

    @classmethod
    def from_sequence(cls, seq: Iterable[int]) -> "CyclicPermutation":
        """Canonicalize an arbitrary cyclic arrangement."""
        t = tuple(seq)
        if 0 not in t:
            raise ValueError("arrangement must contain color 0")
        i = t.index(0)
        rot = t[i:] + t[:i]
        if len(rot) > 2 and rot[1] > rot[-1]:
            rot = (rot[0],) + tuple(reversed(rot[1:]))
        return cls(rot)

    def __iter__(self):
        return iter(self.order)

    def __getitem__(self, i: int) -> int:
        return self.order[i]

    def __len__(self) -> int:
        return len(self.order)

    def pairs(self) -> tuple[tuple[int, int], ...]:
        """Cyclically consecutive color pairs, one per face family."""
        k = len(self.order)
        return tuple(
            (self.order[i], self.order[(i + 1) % k]) for i in range(k)
        )

    def __str__(self) -> str:
        return "(" + ",".join(str(c) for c in self.order) + ")"


def all_cyclic_permutations(d: int) -> list[CyclicPermutation]:
    """All canonical cyclic arrangements of 0..d, sorted; d!/2 for d >= 2."""
    if d < 1:
        raise ValueError("dimension must be at least 1")
    if d == 1:
        return [CyclicPermutation((0, 1))]
    out = [
        CyclicPermutation((0,) + rest)
        for rest in itertools.permutations(range(1, d + 1))
        if rest[0] < rest[-1]
    ]
    out.sort(key=lambda e: e.order)
    return out


def _canonical_cyclic(t: tuple[int, ...]) -> tuple[int, ...]:
    """Lexicographically least representative under rotation and reflection."""
    k = len(t)
    rev = tuple(reversed(t))
    return min(
        min(t[i:] + t[:i] for i in range(k)),
        min(rev[i:] + rev[:i] for i in range(k)),
    )


@dataclass(frozen=True)
class TypeSignature:
    """The face-cycle tuple seen at a vertex, as a cyclic word.

    Stored as the canonical representative under rotation and reflection,
    so equality of signatures is exactly sameness of type.  The condensed
    form groups maximal runs of equal entries.
    """

    faces: tuple[int, ...]

    def __post_init__(self) -> None:
        for f in self.faces:
            if f < 2 or f % 2:
                raise ValueError(f"face lengths must be even and >= 2, got {f}")
        if self.faces != _canonical_cyclic(self.faces):
            raise ValueError("signature must be in canonical cyclic form")

    @classmethod
    def from_tuple(cls, raw: Iterable[int]) -> "TypeSignature":
        return cls(_canonical_cyclic(tuple(raw)))

    @property
    def condensed(self) -> tuple[tuple[int, int], ...]:
        """Maximal runs as (length, multiplicity) pairs.

        The canonical representative of a non-constant cyclic word never
        wraps a run, so linear run-length grouping is already cyclic.
        """
        runs: list[tuple[int, int]] = []
        for value, grp in itertools.groupby(self.faces):
            runs.append((value, len(tuple(grp))))
        return tuple(runs)

    def has_bigon(self) -> bool:
        return 2 in self.faces

    def __str__(self) -> str:
        return "(" + ",".join(f"{q}^{k}" for q, k in self.condensed) + ")"


def condensed_str(runs: Iterable[tuple[object, int]]) -> str:
    """Render (length, multiplicity) runs the way signatures print."""
    return "(" + ",".join(f"{q}^{k}" for q, k in runs) + ")"


def _pair_g_values(g: ColoredGraph, eps: CyclicPermutation) -> tuple[int, ...]:
    return tuple(component_index(g, pair)[1] for pair in eps.pairs())


def _require_gem_input(g: ColoredGraph, eps: CyclicPermutation) -> None:
    if len(eps) != g.dimension + 1:
        raise ValueError(
            f"arrangement of {len(eps)} colors does not match dimension {g.dimension}"
        )
    if not g.is_connected():
        raise NotConnectedError("embedding invariants need a connected graph")


def euler_characteristic(g: ColoredGraph, eps: CyclicPermutation) -> int:
    """Euler characteristic of the embedding surface for this arrangement.

    Equals the sum of bicolored-cycle counts over consecutive color pairs
    plus (1-d) n/2.
    """
    _require_gem_input(g, eps)
    d = g.dimension
    return sum(_pair_g_values(g, eps)) + (1 - d) * g.vertex_count // 2


def rho_times_2(g: ColoredGraph, eps: CyclicPermutation) -> int:
    """Twice the genus of the embedding surface: 2 - chi, exactly."""
    return 2 - euler_characteristic(g, eps)


@dataclass(frozen=True)
class RegularGenus:
    """Minimum genus over all cyclic arrangements, with every argmin.

    For bipartite graphs the value is the genus of the orientable surface;
    for non-bipartite ones it is half the genus of the non-orientable one.
    """

    rho_times_2: int
    witnesses: tuple[CyclicPermutation, ...]
    bipartite: bool

    @property
    def rho(self) -> Fraction:
        return Fraction(self.rho_times_2, 2)


def regular_genus(g: ColoredGraph) -> RegularGenus:
    """Minimize the embedding genus over all canonical arrangements."""
    if not g.is_connected():
        raise NotConnectedError("regular genus needs a connected graph")
    best: Optional[int] = None
    winners: list[CyclicPermutation] = []
    for eps in all_cyclic_permutations(g.dimension):
        r2 = rho_times_2(g, eps)
        if best is None or r2 < best:
            best = r2
            winners = [eps]
        elif r2 == best:
            winners.append(eps)
    assert best is not None
    return RegularGenus(best, tuple(winners), is_bipartite(g))


def _cycle_lengths_for_pair(g: ColoredGraph, a: int, b: int) -> list[int]:
    """Per-vertex length of the {a,b}-bicolored cycle through each vertex."""
    n = g.vertex_count
    ma, mb = g.matchings[a], g.matchings[b]
    lengths = [0] * n
    seen = [False] * n
    for start in range(n):
        if seen[start]:
            continue
        cycle = [start]
        seen[start] = True
        v = ma[start]
        use_b = True
        while v != start:
            seen[v] = True
            cycle.append(v)
            v = mb[v] if use_b else ma[v]
            use_b = not use_b
        for v in cycle:
            lengths[v] = len(cycle)
    return lengths


def face_cycle_type(
    g: ColoredGraph, eps: CyclicPermutation, vertex: int
) -> tuple[int, ...]:
    """Face lengths (f_0, ..., f_d) around one vertex, in arrangement order.

    f_i is the number of vertices on the bicolored cycle through the vertex
    that alternates the i-th consecutive color pair of the arrangement.
    """
    if not 0 <= vertex < g.vertex_count:
        raise ValueError(f"vertex {vertex} out of range")
    out = []
    for a, b in eps.pairs():
        ma, mb = g.matchings[a], g.matchings[b]
        v = ma[vertex]
        use_b = True
        length = 1
        while v != vertex:
            v = mb[v] if use_b else ma[v]
            use_b = not use_b
            length += 1
        out.append(length)
    return tuple(out)


def face_multisets_uniform(g: ColoredGraph, eps: CyclicPermutation) -> bool:
    """Weaker diagnostic: the same multiset of face lengths at every vertex.

    Multiset agreement does not imply agreement of the cyclic tuples once
    there are four or more faces, so this never decides the vertex-uniform
    verdict; it only helps narrow down why a graph just missed it.
    """
    _require_gem_input(g, eps)
    per_pair = [_cycle_lengths_for_pair(g, a, b) for a, b in eps.pairs()]
    first = sorted(col[0] for col in per_pair)
    return all(
        sorted(col[v] for col in per_pair) == first
        for v in range(1, g.vertex_count)
    )


def semi_equivelar_type(
    g: ColoredGraph, eps: CyclicPermutation, bigons: str = "exclude"
) -> Optional[TypeSignature]:
    """The common face-cycle signature, when every vertex sees the same one.

    Tuples are compared as cyclic words up to rotation and reflection.
    With ``bigons="exclude"`` an arrangement whose faces include a 2-cycle
    never qualifies; "include" admits such embeddings.
    """
    if bigons not in ("include", "exclude"):
        raise ValueError(f"bigons must be 'include' or 'exclude', got {bigons!r}")
    _require_gem_input(g, eps)
    per_pair = [_cycle_lengths_for_pair(g, a, b) for a, b in eps.pairs()]
    first = _canonical_cyclic(tuple(col[0] for col in per_pair))
    if bigons == "exclude" and 2 in first:
        return None
    for v in range(1, g.vertex_count):
        if _canonical_cyclic(tuple(col[v] for col in per_pair)) != first:
            return None
    return TypeSignature(first)


@dataclass(frozen=True)
class EmbeddingReport:
    """Everything one arrangement says about a connected colored graph."""

    epsilon: CyclicPermutation
    g_values: tuple[int, ...]
    chi: int
    rho_times_2: int
    orientable: bool
    signature: Optional[TypeSignature]
    bigons: str

    @property
    def rho(self) -> Fraction:
        return Fraction(self.rho_times_2, 2)

    def to_json_dict(self) -> dict:
        return {
            "epsilon": list(self.epsilon.order),
            "g_values": list(self.g_values),
            "chi": self.chi,
            "rho_times_2": self.rho_times_2,
            "orientable": self.orientable,
            "type": list(self.signature.faces) if self.signature else None,
            "condensed": str(self.signature) if self.signature else None,
        }


@dataclass(frozen=True)
class SemiEquivelarReport:
    """Per-arrangement reports plus the best semi-equivelar genus seen.

    The witness value is the minimum genus among arrangements whose face
    structure is vertex-uniform; it upper-bounds the semi-equivelar genus
    of whatever space the graph represents.  ``witness_rho_times_2`` is
    None when no arrangement qualifies.
    """

    reports: tuple[EmbeddingReport, ...]
    witness_rho_times_2: Optional[int]
    witness_permutations: tuple[CyclicPermutation, ...]

    @property
    def witness_rho(self) -> Optional[Fraction]:
        if self.witness_rho_times_2 is None:
            return None
        return Fraction(self.witness_rho_times_2, 2)


def semi_equivelar_report(
    g: ColoredGraph, bigons: str = "exclude"
) -> SemiEquivelarReport:
    """Evaluate every canonical arrangement and summarize.

    Reports are sorted by (genus, arrangement); evaluation order never
    affects the result, so arrangements could be processed concurrently.
    """
    if not g.is_connected():
        raise NotConnectedError("semi-equivelar analysis needs a connected graph")
    d = g.dimension
    n = g.vertex_count
    orientable = is_bipartite(g)
    reports = []
    for eps in all_cyclic_permutations(d):
        gvals = _pair_g_values(g, eps)
        chi = sum(gvals) + (1 - d) * n // 2
        sig = semi_equivelar_type(g, eps, bigons)
        reports.append(
            EmbeddingReport(eps, gvals, chi, 2 - chi, orientable, sig, bigons)
        )
    reports.sort(key=lambda r: (r.rho_times_2, r.epsilon.order))
    qualifying = [r for r in reports if r.signature is not None]
    if qualifying:
        best = min(r.rho_times_2 for r in qualifying)
        winners = tuple(
            r.epsilon for r in qualifying if r.rho_times_2 == best
        )
        return SemiEquivelarReport(tuple(reports), best, winners)
    return SemiEquivelarReport(tuple(reports), None, ())
