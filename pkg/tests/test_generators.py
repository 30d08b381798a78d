import pytest

from gemkit.core import is_bipartite, is_contracted, isomorphic, residue_count
from gemkit.embedding import (
    CyclicPermutation,
    TypeSignature,
    euler_characteristic,
    face_cycle_type,
    regular_genus,
    semi_equivelar_type,
)
from gemkit.complexes import homology, manifold_check, sphere_profile
from gemkit.generators import (
    catalog,
    catalog_manifest,
    catalog_names,
    lens_gem,
    lens_nonbipartite_attempt,
    rp2_sum_gem,
    sphere_times_circle_gem,
    standard_sphere,
    torus_sum_gem,
)

EPS3 = CyclicPermutation((0, 1, 2))
EPS4 = CyclicPermutation((0, 1, 2, 3))


def test_standard_sphere():
    g = standard_sphere(2)
    assert g.vertex_count == 2
    assert homology(g) == sphere_profile(2)
    g = standard_sphere(3)
    assert semi_equivelar_type(g, EPS4, "include") == TypeSignature.from_tuple(
        (2, 2, 2, 2)
    )
    assert regular_genus(g).rho_times_2 == 0
    with pytest.raises(ValueError):
        standard_sphere(0)


def test_lens_gem_parameters():
    with pytest.raises(ValueError):
        lens_gem(0, 0, 2)
    with pytest.raises(ValueError):
        lens_gem(2, 2, 2)
    with pytest.raises(ValueError):
        lens_gem(2, -1, 2)
    with pytest.raises(ValueError):
        lens_gem(2, 1, 3)
    with pytest.raises(ValueError):
        lens_gem(2, 1, 0)


def test_lens_gem_structure():
    g = lens_gem(2, 1, 2)
    assert g.vertex_count == 8
    assert is_bipartite(g)
    assert residue_count(g, (0, 2)) == 2
    assert semi_equivelar_type(g, EPS4) == TypeSignature.from_tuple((4, 4, 4, 4))
    assert euler_characteristic(g, EPS4) == 0
    assert homology(g).groups[1] == (0, (2,))


def test_lens_gem_all_consecutive_cycles_are_squares():
    g = lens_gem(3, 1, 4)
    for v in range(g.vertex_count):
        assert face_cycle_type(g, EPS4, v) == (4, 4, 4, 4)
    assert residue_count(g, (0, 2)) == 4
    assert not is_contracted(g)


def test_lens_gem_homologies():
    assert homology(lens_gem(3, 0, 2)) == sphere_profile(3)
    assert homology(lens_gem(5, 2, 2)).groups[1] == (0, (5,))
    assert homology(lens_gem(1, 0, 2)) == sphere_profile(3)


def test_lens_gem_caching():
    assert lens_gem(2, 1, 2) is lens_gem(2, 1, 2)


def test_lens_gem_mirror_shift_exploration():
    # Mirror shifts encode homeomorphic spaces; whether the graphs are
    # isomorphic is not asserted, only that the evidence stays consistent.
    a, b = lens_gem(5, 2, 2), lens_gem(5, 3, 2)
    assert homology(a) == homology(b)
    wit = isomorphic(a, b, "color-permuting")
    assert wit is None or wit.valid_between(a, b)


@pytest.mark.parametrize(
    "p,k,extras",
    [(1, 2, True), (2, 2, False), (3, 2, False), (1, 4, True), (2, 4, False), (3, 4, False)],
)
def test_nonbipartite_attempt_matches_predictions(p, k, extras):
    g, diag = lens_nonbipartite_attempt(p, k, 0)
    assert not is_bipartite(g)
    assert diag.matches_prediction
    assert diag.computed["02"] == k
    assert diag.computed["03"] == 1 + p * (k - 2) // 2
    assert diag.computed["23"] == 1 + p * (k - 2) // 2
    assert diag.computed["023"] == k // 2
    assert ("12" in diag.computed) == extras
    if extras:
        assert diag.computed["12"] == k // 2
        assert diag.computed["13"] == 1
        assert diag.computed["123"] == 1
    assert not diag.verdict.ok


def test_nonbipartite_attempt_other_even_positions():
    g, diag = lens_nonbipartite_attempt(3, 2, 2)
    assert not is_bipartite(g)
    assert not diag.verdict.ok


def test_nonbipartite_attempt_rejects_odd_position():
    with pytest.raises(ValueError):
        lens_nonbipartite_attempt(2, 2, 1)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_rp2_sum_family(n):
    g = rp2_sum_gem(n)
    size = 2 * n + 2
    assert g.vertex_count == size
    assert not is_bipartite(g)
    assert semi_equivelar_type(g, EPS3) == TypeSignature.from_tuple((size,) * 3)
    assert euler_characteristic(g, EPS3) == 2 - n
    assert homology(g).groups[1] == (n - 1, (2,))
    assert regular_genus(g).rho_times_2 == n


def test_rp2_sum_n2_uses_the_fixed_matchings():
    g = rp2_sum_gem(2)
    assert g.matchings[0] == (1, 0, 3, 2, 5, 4)
    assert g.matchings[1] == (5, 2, 1, 4, 3, 0)
    assert g.matchings[2] == (3, 5, 4, 0, 2, 1)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_torus_sum_family(n):
    g = torus_sum_gem(n)
    size = 4 * n + 2
    assert g.vertex_count == size
    assert is_bipartite(g)
    assert semi_equivelar_type(g, EPS3) == TypeSignature.from_tuple((size,) * 3)
    assert euler_characteristic(g, EPS3) == 2 - 2 * n
    assert homology(g).groups[1] == (2 * n, ())
    assert regular_genus(g).rho_times_2 == 2 * n


def test_surface_family_parameter_checks():
    with pytest.raises(ValueError):
        rp2_sum_gem(0)
    with pytest.raises(ValueError):
        torus_sum_gem(0)


@pytest.mark.parametrize("d", [3, 4, 5])
@pytest.mark.parametrize("twisted", [False, True])
def test_sphere_times_circle(d, twisted):
    g = sphere_times_circle_gem(d, twisted)
    assert g.vertex_count == 2 * (d + 1)
    assert is_bipartite(g) == (not twisted)
    eps = CyclicPermutation(tuple(range(d + 1)))
    assert euler_characteristic(g, eps) == 0
    want = TypeSignature.from_tuple((2,) * (d - 2) + (6, 6, 6))
    assert semi_equivelar_type(g, eps, "include") == want
    hom = homology(g)
    assert hom.groups[0] == (1, ())
    assert hom.groups[1] == (1, ())
    # The top and next-to-top groups depend on the twist alone.
    if twisted:
        assert hom.groups[d] == (0, ())
        assert hom.groups[d - 1] == (0, (2,))
    else:
        assert hom.groups[d] == (1, ())
        assert hom.groups[d - 1] == (1, ())


def test_sphere_times_circle_face_census():
    g = sphere_times_circle_gem(4)
    eps = CyclicPermutation((0, 1, 2, 3, 4))
    for v in range(g.vertex_count):
        faces = sorted(face_cycle_type(g, eps, v))
        assert faces == [2, 2, 6, 6, 6]


def test_sphere_times_circle_rejects_low_dimension():
    with pytest.raises(ValueError):
        sphere_times_circle_gem(2)


# -- catalog ----------------------------------------------------------------


def test_catalog_names_and_manifest():
    names = catalog_names()
    assert "torus-6.6.6" in names
    assert "rp2-4.6.10" not in names
    assert "rp2-4.6.10" in catalog_names(include_disabled=True)
    manifest = catalog_manifest()
    by_name = {e["name"]: e for e in manifest}
    assert by_name["torus-4.8.8"]["order"] == 16
    assert by_name["s2-4.6.10"]["enabled"] is False


def test_catalog_unknown_and_disabled():
    with pytest.raises(ValueError):
        catalog("torus-7.7.7")
    with pytest.raises(ValueError):
        catalog("rp2-4.6.10")
    with pytest.raises(ValueError):
        catalog("torus-6.6.6", p=4)


def test_catalog_projective_parametric():
    g = catalog("rp2-4.4.2p", p=4)
    assert g.vertex_count == 8
    assert euler_characteristic(g, EPS3) == 1
    assert not is_bipartite(g)
    assert semi_equivelar_type(g, EPS3) == TypeSignature.from_tuple((4, 4, 8))


def test_catalog_sphere_parametric():
    g = catalog("s2-4.4.p", p=6)
    assert g.vertex_count == 12
    assert euler_characteristic(g, EPS3) == 2
    assert is_bipartite(g)
    assert semi_equivelar_type(g, EPS3) == TypeSignature.from_tuple((4, 4, 6))


def test_catalog_sphere_hexagon_square():
    g = catalog("s2-6.6.4")
    assert g.vertex_count == 24
    assert euler_characteristic(g, EPS3) == 2
    assert semi_equivelar_type(g, EPS3) == TypeSignature.from_tuple((4, 6, 6))
    assert homology(g) == sphere_profile(2)


@pytest.mark.parametrize(
    "name,order,chi,orientable_",
    [
        ("torus-6.6.6", 12, 0, True),
        ("torus-4.8.8", 16, 0, True),
        ("torus-4.6.12", 24, 0, True),
        ("klein-6.6.6", 12, 0, False),
        ("klein-4.8.8", 16, 0, False),
        ("klein-4.6.12", 24, 0, False),
    ],
)
def test_catalog_flat_surfaces(name, order, chi, orientable_):
    g = catalog(name)
    assert g.vertex_count == order
    assert euler_characteristic(g, EPS3) == chi
    assert is_bipartite(g) == orientable_
    assert manifold_check(g).ok


def test_catalog_parameter_validation():
    with pytest.raises(ValueError):
        catalog("rp2-4.4.2p", p=3)
    with pytest.raises(ValueError):
        catalog("s2-4.4.p", p=2)
