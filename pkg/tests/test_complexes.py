import itertools
import random

import pytest

from gemkit.core import ColoredGraph, NotConnectedError, residue_count
from gemkit.complexes import (
    CERTIFIED_3_MANIFOLD,
    CERTIFIED_SURFACE,
    HOMOLOGY_CERTIFIED,
    HomologyProfile,
    build_complex,
    consistency_surface,
    euler_characteristic_complex,
    homology,
    manifold_check,
    orientable,
    smith_invariant_factors,
    sphere_profile,
)
from gemkit.generators import (
    catalog,
    lens_gem,
    rp2_sum_gem,
    sphere_times_circle_gem,
    standard_sphere,
    torus_sum_gem,
)

from helpers import matrix_product, random_surface_gem

rng = random.Random(4242)


# -- complex construction -----------------------------------------------------


def test_f_vector_sphere_surface():
    assert build_complex(standard_sphere(2)).f_vector == (3, 3, 2)


def test_f_vector_lens():
    assert build_complex(lens_gem(2, 1, 2)).f_vector == (4, 12, 16, 8)


def test_f_vector_projective_plane():
    assert build_complex(rp2_sum_gem(1)).f_vector == (3, 6, 4)


def test_cell_count_identities():
    for g in (lens_gem(3, 1, 2), torus_sum_gem(2), sphere_times_circle_gem(4)):
        k = build_complex(g)
        n = g.vertex_count
        d = g.dimension
        assert k.f_vector[d] == n
        assert k.f_vector[d - 1] == (d + 1) * n // 2
        colors = set(g.colors)
        assert k.f_vector[0] == sum(
            residue_count(g, colors - {c}) for c in g.colors
        )


def test_f_vector_matches_residue_census():
    # Independent derivation: h-cells are components of complement residues.
    for g in (lens_gem(2, 1, 2), rp2_sum_gem(3)):
        k = build_complex(g)
        d = g.dimension
        colors = set(g.colors)
        for h in range(d + 1):
            expected = 0
            for C in itertools.combinations(range(d + 1), h + 1):
                rest = colors - set(C)
                if rest:
                    expected += residue_count(g, rest)
                else:
                    expected += g.vertex_count
            assert k.f_vector[h] == expected


def test_boundary_squares_to_zero():
    gems = [
        standard_sphere(4),
        lens_gem(3, 1, 2),
        torus_sum_gem(2),
        sphere_times_circle_gem(4),
    ]
    for g in gems:
        k = build_complex(g)
        for h in range(2, g.dimension + 1):
            prod = matrix_product(k.boundaries[h - 1], k.boundaries[h])
            assert all(all(x == 0 for x in row) for row in prod)


def test_complex_requires_connected():
    disconnected = ColoredGraph([[1, 0, 3, 2]] * 3)
    with pytest.raises(NotConnectedError):
        build_complex(disconnected)


def test_complex_json_export():
    data = build_complex(standard_sphere(2)).to_json_dict()
    assert data["dimension"] == 2
    assert len(data["cells"]) == 3
    assert data["cells"][0][0] == {"labels": [0], "component": 0}
    assert len(data["boundaries"]) == 3


# -- Euler characteristic ------------------------------------------------------


@pytest.mark.parametrize("d", [2, 3, 4, 5, 6])
def test_chi_complex_spheres(d):
    k = build_complex(standard_sphere(d))
    assert euler_characteristic_complex(k) == (2 if d % 2 == 0 else 0)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_chi_complex_surfaces(n):
    assert euler_characteristic_complex(build_complex(torus_sum_gem(n))) == 2 - 2 * n
    assert euler_characteristic_complex(build_complex(rp2_sum_gem(n))) == 2 - n


def test_consistency_surface():
    assert consistency_surface(rp2_sum_gem(3))
    assert consistency_surface(torus_sum_gem(1))
    assert euler_characteristic_complex(build_complex(rp2_sum_gem(3))) == -1
    with pytest.raises(ValueError):
        consistency_surface(standard_sphere(3))


# -- Smith normal form ---------------------------------------------------------


def test_snf_hand_cases():
    assert smith_invariant_factors([]) == []
    assert smith_invariant_factors([[0, 0], [0, 0]]) == []
    assert smith_invariant_factors([[1, 0], [0, 1]]) == [1, 1]
    assert smith_invariant_factors([[2, 4], [4, 8]]) == [2]
    assert smith_invariant_factors([[2, 0], [0, 3]]) == [1, 6]
    assert smith_invariant_factors([[4, 0], [0, 6]]) == [2, 12]
    assert smith_invariant_factors([[1, 2], [3, 4]]) == [1, 2]
    assert smith_invariant_factors([[-3]]) == [3]


def test_snf_divisibility_chain_property():
    for _ in range(50):
        rows = rng.randrange(1, 5)
        cols = rng.randrange(1, 5)
        m = [[rng.randrange(-9, 10) for _ in range(cols)] for _ in range(rows)]
        factors = smith_invariant_factors(m)
        assert all(f > 0 for f in factors)
        for a, b in zip(factors, factors[1:]):
            assert b % a == 0


def test_snf_invariant_under_unimodular_ops():
    for _ in range(30):
        m = [[rng.randrange(-5, 6) for _ in range(4)] for _ in range(3)]
        base = smith_invariant_factors(m)
        # random integer row and column operations
        mm = [row[:] for row in m]
        for _ in range(6):
            i, j = rng.sample(range(3), 2)
            f = rng.randrange(-3, 4)
            for c in range(4):
                mm[i][c] += f * mm[j][c]
            a, b = rng.sample(range(4), 2)
            f = rng.randrange(-3, 4)
            for r in range(3):
                mm[r][a] += f * mm[r][b]
        assert smith_invariant_factors(mm) == base


# -- homology -------------------------------------------------------------------


def test_homology_spheres():
    assert homology(standard_sphere(3)) == sphere_profile(3)
    assert homology(standard_sphere(2)) == sphere_profile(2)
    assert str(homology(standard_sphere(3))) == "H0=Z H1=0 H2=0 H3=Z"


def test_homology_lens():
    prof = homology(lens_gem(3, 1, 2))
    assert prof.groups == ((1, ()), (0, (3,)), (0, ()), (1, ()))
    assert homology(lens_gem(5, 2, 2)).groups[1] == (0, (5,))
    assert homology(lens_gem(3, 0, 2)) == sphere_profile(3)


def test_homology_surfaces():
    assert homology(rp2_sum_gem(2)).groups == ((1, ()), (1, (2,)), (0, ()))
    assert homology(torus_sum_gem(2)).groups == ((1, ()), (4, ()), (1, ()))
    assert homology(rp2_sum_gem(1)).group_str(1) == "Z_2"


def test_homology_json():
    data = homology(rp2_sum_gem(2)).to_json()
    assert data == [
        {"rank": 1, "torsion": []},
        {"rank": 1, "torsion": [2]},
        {"rank": 0, "torsion": []},
    ]


def test_homology_profile_formatting():
    prof = HomologyProfile(((1, ()), (2, (2, 4)), (0, ())))
    assert prof.group_str(1) == "Z^2+Z_2+Z_4"
    assert prof.group_str(2) == "0"


# -- orientability and manifold verdicts ----------------------------------------


def test_orientable():
    assert orientable(torus_sum_gem(2))
    assert not orientable(rp2_sum_gem(1))
    assert orientable(lens_gem(3, 1, 2))


def test_manifold_check_surfaces_always_pass():
    for _ in range(10):
        g = random_surface_gem(rng, 8)
        assert manifold_check(g).kind == CERTIFIED_SURFACE


@pytest.mark.parametrize("pqk", [(2, 1, 2), (3, 1, 2), (5, 2, 2)])
def test_manifold_check_lens(pqk):
    verdict = manifold_check(lens_gem(*pqk))
    assert verdict.ok
    assert verdict.kind == CERTIFIED_3_MANIFOLD


def test_manifold_check_rejects_torus_double():
    # Two copies of the order-6 torus gem joined by a fourth perfect
    # matching: the new color's residues are tori, not spheres.
    base = torus_sum_gem(1)
    n = base.vertex_count
    mats = []
    for m in base.matchings:
        doubled = list(m) + [v + n for v in m]
        mats.append(doubled)
    mats.append([(v + n) % (2 * n) for v in range(2 * n)])
    g = ColoredGraph(mats)
    verdict = manifold_check(g)
    assert not verdict.ok
    assert verdict.kind == "failed"
    assert "chi" in verdict.detail


def test_manifold_check_higher_dimensions():
    assert manifold_check(sphere_times_circle_gem(4)).kind == HOMOLOGY_CERTIFIED
    assert manifold_check(standard_sphere(4)).kind == HOMOLOGY_CERTIFIED


def test_manifold_check_dimension_bounds():
    circle = ColoredGraph([[1, 0], [1, 0]])
    with pytest.raises(ValueError):
        manifold_check(circle)


def test_homology_invariance_under_recoloring():
    g = lens_gem(2, 1, 2)
    assert homology(g) == homology(g.recolor((3, 2, 1, 0)))


def test_klein_bottle_homology_via_catalog():
    assert homology(catalog("klein-6.6.6")).groups == ((1, ()), (1, (2,)), (0, ()))
