"""Shared test utilities: random gems, oracles independent of the library."""

from __future__ import annotations

import random

from gemkit.core import ColoredGraph


def random_matching(rng: random.Random, n: int) -> list[int]:
    verts = list(range(n))
    rng.shuffle(verts)
    m = [0] * n
    for i in range(0, n, 2):
        a, b = verts[i], verts[i + 1]
        m[a] = b
        m[b] = a
    return m


def standard_matching(n: int) -> list[int]:
    return [v + 1 if v % 2 == 0 else v - 1 for v in range(n)]


def random_surface_gem(rng: random.Random, n: int) -> ColoredGraph:
    """Random connected 3-colored graph of the given even order."""
    while True:
        g = ColoredGraph(
            [standard_matching(n), random_matching(rng, n), random_matching(rng, n)]
        )
        if g.is_connected():
            return g


def random_permutation(rng: random.Random, n: int) -> list[int]:
    perm = list(range(n))
    rng.shuffle(perm)
    return perm


def oracle_component_count(g: ColoredGraph, colors) -> int:
    """Union-find component count, written independently of the library."""
    parent = list(range(g.vertex_count))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for c in colors:
        for u in range(g.vertex_count):
            ru, rv = find(u), find(g.matchings[c][u])
            if ru != rv:
                parent[ru] = rv
    return len({find(v) for v in range(g.vertex_count)})


def oracle_components(g: ColoredGraph, colors) -> list[list[int]]:
    groups: dict[int, list[int]] = {}
    parent = list(range(g.vertex_count))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for c in colors:
        for u in range(g.vertex_count):
            ru, rv = find(u), find(g.matchings[c][u])
            if ru != rv:
                parent[ru] = rv
    for v in range(g.vertex_count):
        groups.setdefault(find(v), []).append(v)
    return sorted((sorted(vs) for vs in groups.values()), key=lambda c: c[0])


def oracle_chi_from_counts(g: ColoredGraph, eps_pairs) -> int:
    """Euler characteristic as vertices - edges + faces, counted directly."""
    n = g.vertex_count
    edges = n * (g.dimension + 1) // 2
    faces = sum(oracle_component_count(g, pair) for pair in eps_pairs)
    return n - edges + faces


def matrix_product(a, b):
    rows = len(a)
    inner = len(b)
    cols = len(b[0]) if inner else 0
    out = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        for k in range(inner):
            if a[i][k]:
                aik = a[i][k]
                for j in range(cols):
                    out[i][j] += aik * b[k][j]
    return out


def all_perfect_matchings(n: int) -> list[list[int]]:
    """Every perfect matching on 0..n-1, as involution arrays."""
    out: list[list[int]] = []

    def extend(m: list[int]) -> None:
        u = next((v for v in range(n) if m[v] < 0), None)
        if u is None:
            out.append(list(m))
            return
        for v in range(u + 1, n):
            if m[v] < 0:
                m[u] = v
                m[v] = u
                extend(m)
                m[u] = -1
                m[v] = -1

    extend([-1] * n)
    return out
