"""Embedding-type arithmetic and exhaustive searches over colored graphs.

The type enumerator solves the counting identity

    1 - d'/2 + sum(k_i / q_i) = chi / p

exactly over the rationals for vertex-uniform embedding types with even
face lengths of at least 4, reporting the one-parameter family that
appears for positive Euler characteristic symbolically.

The graph search fixes the first matching to (0 1)(2 3)... (sound up to
relabeling), builds the remaining matchings depth first, and propagates
bicolored-cycle-length constraints as paths merge, so most of the space is
never visited.  Results are deduplicated by exact canonical forms under
color permutation; an empty result therefore means a completed search,
never a truncated one.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Optional, Sequence

from .core import (
    ColoredGraph,
    canonical_form,
    is_bipartite,
    isomorphic,
)
from .embedding import (
    CyclicPermutation,
    condensed_str,
    euler_characteristic,
    face_cycle_type,
)
from .complexes import HomologyProfile, ManifoldVerdict, homology, manifold_check


class BudgetExceededError(RuntimeError):
    """A search was asked to exceed its configured order budget."""


# ---------------------------------------------------------------------------
# Embedding-type enumeration


@dataclass(frozen=True)
class TypeSolution:
    """One vertex-uniform embedding type compatible with a target surface.

    ``runs`` is the condensed cyclic type as (face length, multiplicity)
    pairs; the face length is the string "q" in the symbolic family.  The
    order is an integer when the identity pins it, a string such as "q" or
    "2q" for the symbolic family, and None when chi = 0 leaves it free.
    """

    runs: tuple[tuple[object, int], ...]
    order: object
    chi: int

    @property
    def degree(self) -> int:
        return sum(k for _, k in self.runs)

    @property
    def parametric(self) -> bool:
        return any(q == "q" for q, _ in self.runs)

    def type_str(self) -> str:
        return condensed_str(self.runs)

    def order_str(self) -> str:
        return "unconstrained" if self.order is None else str(self.order)

    def to_json_dict(self) -> dict:
        return {
            "type": self.type_str(),
            "runs": [[q, k] for q, k in self.runs],
            "order": self.order,
            "chi": self.chi,
        }


def _cyclic_canonical(t: tuple) -> tuple:
    k = len(t)
    rev = tuple(reversed(t))
    return min(
        min(t[i:] + t[:i] for i in range(k)),
        min(rev[i:] + rev[:i] for i in range(k)),
    )


def _runs_of(t: tuple) -> tuple[tuple[object, int], ...]:
    return tuple((v, len(tuple(g))) for v, g in itertools.groupby(t))


def enumerate_embedding_types(chi: int, q_max: int = 16) -> list[TypeSolution]:
    """All embedding types whose counting identity admits the given chi.

    Face lengths run over the even values 4..q_max; bigon faces are never
    considered here.  For chi > 0 the (4^2, q) family is reported once,
    symbolically, instead of one row per q.  Orders below 4 are discarded
    since a graph without bigon faces has more than two vertices.
    """
    if chi > 2:
        raise ValueError("no surface has Euler characteristic above 2")
    if q_max < 4:
        raise ValueError("q_max must be at least 4")
    if chi > 0:
        degrees: Iterable[int] = (3,)
    elif chi == 0:
        degrees = (3, 4)
    else:
        degrees = range(3, 4 - chi + 1)

    out: list[TypeSolution] = []
    seen: set[tuple] = set()
    for dp in degrees:
        for combo in itertools.combinations_with_replacement(
            range(4, q_max + 1, 2), dp
        ):
            if chi > 0 and _is_square_family_instance(combo):
                continue
            r = 1 - Fraction(dp, 2) + sum(Fraction(1, q) for q in combo)
            if r == 0:
                if chi != 0:
                    continue
                order: object = None
            else:
                p = Fraction(chi, 1) / r
                if p.denominator != 1 or p < 4:
                    continue
                order = int(p)
            for arrangement in _cyclic_arrangements(combo):
                key = (arrangement, order)
                if key not in seen:
                    seen.add(key)
                    out.append(TypeSolution(_runs_of(arrangement), order, chi))
    if chi > 0:
        order = "q" if chi == 1 else f"{chi}q"
        out.append(TypeSolution((( 4, 2), ("q", 1)), order, chi))
    out.sort(key=_solution_sort_key)
    return out


def _is_square_family_instance(combo: tuple[int, ...]) -> bool:
    """True for (4, 4, q) with q > 4, the shape folded into the family."""
    return (
        len(combo) == 3
        and combo[0] == 4
        and combo[1] == 4
        and combo[2] > 4
    )


def _cyclic_arrangements(combo: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Distinct cyclic words (up to rotation and reflection) of a multiset."""
    return sorted({_cyclic_canonical(p) for p in itertools.permutations(combo)})


def _solution_sort_key(s: TypeSolution):
    faces = []
    for q, k in s.runs:
        faces.extend([q if isinstance(q, int) else 10 ** 6] * k)
    return (s.degree, faces)


# ---------------------------------------------------------------------------
# Constrained search


@dataclass(frozen=True)
class SearchSpec:
    """What to search for: color count, order, and face-cycle constraints.

    ``pair_lengths`` restricts the bicolored cycle lengths of specific
    color pairs; ``vertex_types`` asks every vertex to see exactly this
    multiset of face lengths over the cyclically consecutive pairs of the
    identity arrangement.  ``chi`` filters on the Euler characteristic of
    the identity arrangement.
    """

    colors: int
    order: int
    pair_lengths: Optional[tuple[tuple[tuple[int, int], tuple[int, ...]], ...]] = None
    vertex_types: Optional[tuple[int, ...]] = None
    bipartite: str = "any"
    bigons: str = "exclude"
    chi: Optional[int] = None

    def __post_init__(self) -> None:
        if self.colors not in (3, 4):
            raise ValueError("search supports 3 or 4 colors")
        if self.order < 2 or self.order % 2:
            raise ValueError("order must be even and at least 2")
        if self.bipartite not in ("any", "only", "none"):
            raise ValueError("bipartite filter must be any, only or none")
        if self.bigons not in ("include", "exclude"):
            raise ValueError("bigons policy must be include or exclude")
        if self.vertex_types is not None:
            if len(self.vertex_types) != self.colors:
                raise ValueError("vertex_types must list one length per face")
            object.__setattr__(
                self, "vertex_types", tuple(sorted(self.vertex_types))
            )
            for f in self.vertex_types:
                if f < 2 or f % 2:
                    raise ValueError("face lengths must be even and >= 2")
        if self.pair_lengths is not None:
            norm = []
            for pair, lengths in (
                self.pair_lengths.items()
                if isinstance(self.pair_lengths, dict)
                else self.pair_lengths
            ):
                a, b = sorted(pair)
                if not 0 <= a < b < self.colors:
                    raise ValueError(f"bad color pair {pair!r}")
                ls = tuple(sorted(set(lengths)))
                for f in ls:
                    if f < 2 or f % 2:
                        raise ValueError("cycle lengths must be even and >= 2")
                norm.append(((a, b), ls))
            norm.sort()
            object.__setattr__(self, "pair_lengths", tuple(norm))

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "SearchSpec":
        pl = data.get("pair_lengths")
        pair_lengths = None
        if pl is not None:
            pair_lengths = tuple(
                ((int(key[0]), int(key[1])), tuple(val)) for key, val in pl.items()
            )
        return cls(
            colors=data["colors"],
            order=data["order"],
            pair_lengths=pair_lengths,
            vertex_types=tuple(data["vertex_types"])
            if data.get("vertex_types")
            else None,
            bipartite=data.get("bipartite", "any"),
            bigons=data.get("bigons", "exclude"),
            chi=data.get("chi"),
        )

    def to_json_dict(self) -> dict:
        return {
            "colors": self.colors,
            "order": self.order,
            "pair_lengths": {
                f"{a}{b}": list(ls) for (a, b), ls in self.pair_lengths
            }
            if self.pair_lengths
            else None,
            "vertex_types": list(self.vertex_types) if self.vertex_types else None,
            "bipartite": self.bipartite,
            "bigons": self.bigons,
            "chi": self.chi,
        }


def _consecutive_pairs(colors: int) -> tuple[tuple[int, int], ...]:
    eps = CyclicPermutation(tuple(range(colors)))
    return tuple(tuple(sorted(p)) for p in eps.pairs())


def _allowed_map(spec: SearchSpec) -> dict[tuple[int, int], Optional[frozenset[int]]]:
    n = spec.order
    everything = set(range(2, n + 1, 2))
    base = set(everything)
    if spec.bigons == "exclude":
        base.discard(2)
    vt = set(spec.vertex_types) if spec.vertex_types is not None else None
    given = dict(spec.pair_lengths or ())
    consecutive = set(_consecutive_pairs(spec.colors))
    allowed: dict[tuple[int, int], Optional[frozenset[int]]] = {}
    for pair in itertools.combinations(range(spec.colors), 2):
        if pair in consecutive:
            s = set(base)
            if vt is not None:
                s &= vt
            if pair in given:
                s &= set(given[pair])
            allowed[pair] = None if s == everything else frozenset(s)
        else:
            allowed[pair] = frozenset(given[pair]) if pair in given else None
    return allowed


def _pair_cycle_lengths(ma: Sequence[int], mb: Sequence[int]) -> list[int]:
    n = len(ma)
    lengths = [0] * n
    for start in range(n):
        if lengths[start]:
            continue
        cycle = [start]
        v = ma[start]
        use_b = True
        while v != start:
            cycle.append(v)
            v = mb[v] if use_b else ma[v]
            use_b = not use_b
        for v in cycle:
            lengths[v] = len(cycle)
    return lengths


def _matching_dfs(
    n: int,
    num_colors: int,
    fixed: Sequence[Sequence[int]],
    allowed: Mapping[tuple[int, int], Optional[frozenset[int]]],
    leaf: Callable[[ColoredGraph], bool],
    *,
    pin_edge: Optional[tuple[int, int]] = None,
    break_block_symmetry: bool = False,
    limit: Optional[int] = None,
) -> tuple[list[ColoredGraph], bool]:
    """Enumerate colored graphs extending the fixed matchings.

    Free matchings are built in ascending color then vertex order; a cycle
    that closes at a forbidden length, or a path already too long to close
    at an allowed one, prunes the branch.  ``pin_edge`` forces one edge of
    the first free matching (a sound symmetry breaker whenever parallels
    with color 0 are excluded there).

    ``break_block_symmetry`` may be set when the only fixed matching is the
    standard one (2t, 2t+1): while the first free matching grows, blocks it
    has not touched yet are interchangeable and swappable internally, so a
    partner from them is only tried in the lowest such block, at its even
    vertex.  Labeled duplicates disappear; every isomorphism class keeps a
    representative.  Returns the surviving graphs and whether the space was
    fully explored.
    """
    mats: list[list[int]] = [list(m) for m in fixed]
    for (j, c), lens in allowed.items():
        if lens is None or c >= len(fixed):
            continue
        if any(
            length not in lens
            for length in set(_pair_cycle_lengths(mats[j], mats[c]))
        ):
            return [], True

    hits: list[ColoredGraph] = []
    free_start = len(fixed)
    stop = False

    def build_color(c: int) -> None:
        nonlocal stop
        if c == num_colors:
            g = ColoredGraph([tuple(m) for m in mats])
            if leaf(g):
                hits.append(g)
                if limit is not None and len(hits) >= limit:
                    stop = True
            return
        m = [-1] * n
        mats.append(m)
        states = []
        for j in range(c):
            lens = allowed.get((j, c))
            if lens is not None:
                mj = mats[j]
                states.append((list(mj), [1] * n, lens, max(lens)))
        block_rule = break_block_symmetry and c == free_start

        def try_edge(u: int, v: int, cont: Callable[[], None]) -> None:
            for end, plen, lens, maxlen in states:
                if end[u] == v:
                    if plen[u] + 1 not in lens:
                        return
                elif plen[u] + plen[v] + 2 > maxlen:
                    return
            m[u] = v
            m[v] = u
            merged = []
            for end, plen, lens, maxlen in states:
                if end[u] != v:
                    a, b = end[u], end[v]
                    end[a] = b
                    end[b] = a
                    plen[a] = plen[b] = plen[u] + plen[v] + 1
                    merged.append((end, plen, a, b))
            cont()
            for end, plen, a, b in merged:
                end[a] = u
                end[b] = v
                plen[a] = plen[u]
                plen[b] = plen[v]
            m[u] = -1
            m[v] = -1

        def place() -> None:
            if stop:
                return
            u = -1
            for w in range(n):
                if m[w] < 0:
                    u = w
                    break
            if u < 0:
                build_color(c + 1)
                return
            first_untouched = -1
            if block_rule:
                own = u & ~1
                for base in range(0, n, 2):
                    if base != own and m[base] < 0 and m[base + 1] < 0:
                        first_untouched = base
                        break
            for v in range(u + 1, n):
                if m[v] < 0:
                    if block_rule:
                        base = v & ~1
                        if base != (u & ~1) and m[base] < 0 and m[base ^ 1] < 0:
                            if base != first_untouched or v != base:
                                continue
                    try_edge(u, v, place)
                    if stop:
                        return

        if c == free_start and pin_edge is not None:
            try_edge(pin_edge[0], pin_edge[1], place)
        else:
            place()
        mats.pop()

    build_color(free_start)
    return hits, not stop


def _standard_matching(n: int) -> tuple[int, ...]:
    return tuple(v + 1 if v % 2 == 0 else v - 1 for v in range(n))


def _leaf_filter(spec: SearchSpec) -> Callable[[ColoredGraph], bool]:
    consecutive = _consecutive_pairs(spec.colors)
    eps = CyclicPermutation(tuple(range(spec.colors)))

    def leaf(g: ColoredGraph) -> bool:
        if not g.is_connected():
            return False
        if spec.bipartite == "only" and not is_bipartite(g):
            return False
        if spec.bipartite == "none" and is_bipartite(g):
            return False
        if spec.vertex_types is not None:
            per_pair = [
                _pair_cycle_lengths(g.matchings[a], g.matchings[b])
                for a, b in consecutive
            ]
            target = spec.vertex_types
            for v in range(g.vertex_count):
                if tuple(sorted(col[v] for col in per_pair)) != target:
                    return False
        if spec.chi is not None and euler_characteristic(g, eps) != spec.chi:
            return False
        return True

    return leaf


def _verify_hit(spec: SearchSpec, g: ColoredGraph) -> bool:
    """Independent re-check of every constraint on a returned graph."""
    allowed = _allowed_map(spec)
    for (a, b), lens in allowed.items():
        if lens is None:
            continue
        seen = set(_pair_cycle_lengths(g.matchings[a], g.matchings[b]))
        if not seen <= lens:
            return False
    return _leaf_filter(spec)(g)


def _run_search(
    spec: SearchSpec, limit: Optional[int] = None
) -> tuple[list[ColoredGraph], bool]:
    allowed = _allowed_map(spec)
    pin: Optional[tuple[int, int]] = None
    a01 = allowed.get((0, 1))
    if a01 is not None and 2 not in a01:
        pin = (1, 2)
    hits, exhaustive = _matching_dfs(
        spec.order,
        spec.colors,
        [_standard_matching(spec.order)],
        allowed,
        _leaf_filter(spec),
        pin_edge=pin,
        break_block_symmetry=True,
        limit=limit,
    )
    for g in hits:
        if not _verify_hit(spec, g):  # pragma: no cover - engine soundness net
            raise AssertionError("search produced a graph violating its spec")
    return hits, exhaustive


def _dedup_canonical(hits: Iterable[ColoredGraph]) -> list[ColoredGraph]:
    by_form: dict[bytes, ColoredGraph] = {}
    for g in hits:
        form = canonical_form(g, "color-permuting")
        if form not in by_form:
            by_form[form] = g
    return [by_form[k] for k in sorted(by_form)]


DEFAULT_ORDER_BUDGET = 24


def find_gems(spec: SearchSpec, max_order: int = DEFAULT_ORDER_BUDGET) -> list[ColoredGraph]:
    """Exhaustively enumerate matching graphs, deduplicated canonically.

    The returned list is sorted by canonical form and contains one graph
    per isomorphism class under color permutation.  An empty list means no
    such gem exists at this order.  Raises when the order exceeds the
    budget instead of silently truncating.
    """
    if spec.order > max_order:
        raise BudgetExceededError(
            f"order {spec.order} exceeds the search budget {max_order}"
        )
    hits, _ = _run_search(spec)
    return _dedup_canonical(hits)


def first_gem(
    spec: SearchSpec, max_order: int = DEFAULT_ORDER_BUDGET
) -> Optional[ColoredGraph]:
    """First graph of the deterministic search order, or None."""
    if spec.order > max_order:
        raise BudgetExceededError(
            f"order {spec.order} exceeds the search budget {max_order}"
        )
    hits, _ = _run_search(spec, limit=1)
    return hits[0] if hits else None


@dataclass(frozen=True)
class SearchReport:
    """Serializable record of one search run."""

    spec: SearchSpec
    exhaustive: bool
    gems: tuple[ColoredGraph, ...]

    def to_json_dict(self) -> dict:
        entries = []
        for g in self.gems:
            eps = CyclicPermutation(tuple(range(g.dimension + 1)))
            entries.append(
                {
                    "canonical": canonical_form(g, "color-permuting").hex(),
                    "order": g.vertex_count,
                    "matchings": [list(m) for m in g.matchings],
                    "bipartite": is_bipartite(g),
                    "chi": euler_characteristic(g, eps),
                    "vertex_type": sorted(face_cycle_type(g, eps, 0)),
                }
            )
        return {
            "spec": self.spec.to_json_dict(),
            "exhaustive": self.exhaustive,
            "hit_count": len(self.gems),
            "gems": entries,
        }


def search_report(
    spec: SearchSpec,
    max_order: int = DEFAULT_ORDER_BUDGET,
    limit: Optional[int] = None,
) -> SearchReport:
    """Run a search and package the outcome for serialization."""
    if spec.order > max_order:
        raise BudgetExceededError(
            f"order {spec.order} exceeds the search budget {max_order}"
        )
    hits, exhaustive = _run_search(spec, limit=limit)
    return SearchReport(spec, exhaustive, tuple(_dedup_canonical(hits)))


# ---------------------------------------------------------------------------
# Classification of the all-squares embedding type


@dataclass(frozen=True)
class ClassifiedGem:
    """One isomorphism class found by the all-squares classification."""

    graph: ColoredGraph
    order: int
    bipartite: bool
    verdict: ManifoldVerdict
    homology: HomologyProfile
    lens_parameters: Optional[tuple[int, int, int]]


@dataclass(frozen=True)
class Classify44Report:
    """Outcome of classifying gems whose identity faces are all squares.

    ``entries`` has one row per class under color permutation; the count
    under color-fixed isomorphism is reported alongside since the two
    notions can differ.
    """

    order_max: int
    exhaustive: bool
    entries: tuple[ClassifiedGem, ...]
    count_color_permuting: int
    count_color_fixed: int

    @property
    def bipartite_manifold_entries(self) -> tuple[ClassifiedGem, ...]:
        return tuple(
            e for e in self.entries if e.bipartite and e.verdict.ok
        )

    @property
    def all_bipartite_manifolds_are_lens(self) -> bool:
        return all(
            e.lens_parameters is not None for e in self.bipartite_manifold_entries
        )

    @property
    def all_bipartite_are_lens(self) -> bool:
        """Every bipartite hit, manifold or not, matches the double-cycle ladder."""
        return all(
            e.lens_parameters is not None for e in self.entries if e.bipartite
        )

    @property
    def nonbipartite_manifold_count(self) -> int:
        return sum(
            1 for e in self.entries if not e.bipartite and e.verdict.ok
        )

    @property
    def sphere_bundle_candidates(self) -> int:
        """Manifold entries whose homology is that of S^2 x S^1."""
        product = ((1, ()), (1, ()), (1, ()), (1, ()))
        return sum(
            1
            for e in self.entries
            if e.verdict.ok and e.homology.groups == product
        )

    def to_json_dict(self) -> dict:
        return {
            "order_max": self.order_max,
            "exhaustive": self.exhaustive,
            "count_color_permuting": self.count_color_permuting,
            "count_color_fixed": self.count_color_fixed,
            "all_bipartite_are_lens": self.all_bipartite_are_lens,
            "all_bipartite_manifolds_are_lens": self.all_bipartite_manifolds_are_lens,
            "nonbipartite_manifold_count": self.nonbipartite_manifold_count,
            "sphere_bundle_candidates": self.sphere_bundle_candidates,
            "entries": [
                {
                    "order": e.order,
                    "matchings": [list(m) for m in e.graph.matchings],
                    "bipartite": e.bipartite,
                    "verdict": str(e.verdict),
                    "homology": e.homology.to_json(),
                    "lens_parameters": list(e.lens_parameters)
                    if e.lens_parameters
                    else None,
                }
                for e in self.entries
            ],
        }


def _lens_candidates(order: int) -> Iterable[tuple[int, int, int]]:
    for k in range(2, order // 2 + 1, 2):
        if order % (2 * k):
            continue
        p = order // (2 * k)
        for q in range(p):
            yield p, q, k


def classify_4_4(order_max: int = 8, order_budget: int = 16) -> Classify44Report:
    """Classify graphs admitting an all-squares arrangement, small orders.

    Enumerates 4-colored graphs up to ``order_max`` whose four consecutive
    identity-arrangement cycle families all have length 4, then records
    bipartiteness, the manifold verdict, homology, and which double-cycle
    generator parameters (if any) reproduce each class.
    """
    from . import generators  # deferred: generators also consumes this module

    if order_max > order_budget:
        raise BudgetExceededError(
            f"order_max {order_max} exceeds the classification budget {order_budget}"
        )
    raw: list[ColoredGraph] = []
    exhaustive = True
    for order in range(4, order_max + 1, 4):
        spec = SearchSpec(
            colors=4,
            order=order,
            pair_lengths={(0, 1): (4,), (1, 2): (4,), (2, 3): (4,), (0, 3): (4,)},
            bigons="exclude",
        )
        hits, done = _run_search(spec)
        raw.extend(hits)
        exhaustive = exhaustive and done
    classes = _dedup_canonical(raw)
    count_fixed = len({canonical_form(g, "color-fixed") for g in raw})

    entries = []
    for g in classes:
        verdict = manifold_check(g)
        hom = homology(g)
        lens_params = None
        for p, q, k in _lens_candidates(g.vertex_count):
            if isomorphic(g, generators.lens_gem(p, q, k), "color-permuting"):
                lens_params = (p, q, k)
                break
        entries.append(
            ClassifiedGem(
                g, g.vertex_count, is_bipartite(g), verdict, hom, lens_params
            )
        )
    entries.sort(key=lambda e: (e.order, canonical_form(e.graph, "color-permuting")))
    return Classify44Report(
        order_max, exhaustive, tuple(entries), len(classes), count_fixed
    )
