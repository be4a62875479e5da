import pytest

from simplex_forge.complex_core import (
    SimplicialComplex,
    TooLargeError,
    closure,
    euler_characteristic,
    star,
    unit_ball,
)
from simplex_forge.generators import (
    cross_polytope,
    disjoint_union,
    join,
    named_skeleton,
    point,
    projective_plane,
    random_whitney,
    two_points,
)
from simplex_forge.homotopy import (
    PreconditionError,
    barycentric_refinement,
    delete_star,
    euler_gem_check,
    is_contractible,
    is_manifold,
    is_sphere,
    replay_witness,
)
from simplex_forge.valuations import refine_f_vector

from corpus import named_complexes

TRIANGLE = closure([(1, 2, 3)])
C4 = named_skeleton("cycle", 4)


def test_delete_star_examples():
    H = delete_star(TRIANGLE, (1,))
    assert set(H) == {(2,), (3,), (2, 3)} and euler_characteristic(H) == 1
    P = delete_star(C4, (1,))
    assert P.f_vector == (3, 2) and euler_characteristic(P) == 1
    assert len(delete_star(TRIANGLE, (1, 2, 3))) == len(TRIANGLE) - 1


@pytest.mark.parametrize("name", ["triangle", "C4", "octahedron", "mixed", "projective_plane"])
def test_delete_star_chi_bookkeeping(name):
    G = named_complexes()[name]
    for x in G:
        H = delete_star(G, x)
        assert euler_characteristic(G) == euler_characteristic(H) + euler_characteristic(star(G, x))


def test_contractible_examples():
    assert is_contractible(point())
    assert not is_contractible(C4)
    assert not is_contractible(SimplicialComplex())
    assert is_contractible(TRIANGLE)
    assert not is_contractible(two_points())
    assert is_contractible(named_skeleton("star", 6))


def test_unit_balls_are_contractible():
    for name in ["octahedron", "projective_plane", "mixed", "cube"]:
        G = named_complexes()[name]
        for x in G:
            B = SimplicialComplex(unit_ball(G, x), check=False)
            assert is_contractible(B), (name, x)


def test_witness_replays_to_a_point():
    G = closure([(1, 2, 3), (3, 4), (4, 5, 6, 7)])
    verdict = is_contractible(G, witness=True)
    assert verdict.contractible
    assert len(replay_witness(G, verdict.witness)) == 1
    for step in verdict.witness:
        assert step.link.contractible


def test_contractible_implies_chi_one():
    for seed in range(30):
        G = random_whitney(7, 11, seed)
        if is_contractible(G):
            assert euler_characteristic(G) == 1


def test_size_guard():
    with pytest.raises(TooLargeError):
        is_contractible(cross_polytope(3), max_elements=10)
    with pytest.raises(TooLargeError):
        is_sphere(cross_polytope(3), 3, max_elements=10)


def test_manifold_examples():
    assert is_manifold(cross_polytope(2), 2)
    assert is_manifold(C4, 1)
    assert not is_manifold(named_skeleton("cube"), 1)
    assert is_manifold(projective_plane(), 2)
    assert not is_manifold(cross_polytope(2), 1)
    assert not is_manifold(SimplicialComplex(), 0)


def test_sphere_examples():
    assert is_sphere(SimplicialComplex(), -1)
    assert not is_sphere(point(), -1)
    assert is_sphere(two_points(), 0)
    assert not is_sphere(point(), 0)
    assert is_sphere(cross_polytope(2), 2)
    assert not is_sphere(projective_plane(), 2)
    assert not is_sphere(disjoint_union(C4, C4), 1)
    assert not is_sphere(TRIANGLE, 2)


@pytest.mark.parametrize("d", [-1, 0, 1, 2, 3])
def test_cross_polytopes_are_spheres(d):
    assert is_sphere(cross_polytope(d), d)


@pytest.mark.parametrize("G, d, chi", [(cross_polytope(2), 2, 2), (cross_polytope(3), 3, 0), (two_points(), 0, 2),
                                       (named_skeleton("cycle", 7), 1, 0)])
def test_euler_gem(G, d, chi):
    assert euler_gem_check(G, d)
    assert euler_characteristic(G) == chi


def test_euler_gem_precondition():
    with pytest.raises(PreconditionError):
        euler_gem_check(TRIANGLE, 2)


def test_constant_sphere_corollary():
    for name, G in named_complexes().items():
        if not len(G):
            continue
        chis = {G.chi_mask(G.sphere_mask(i)) for i in range(len(G))}
        if len(chis) == 1:
            assert chis == {0} or euler_characteristic(G) == 0, name


def test_barycentric_refinement_examples():
    assert barycentric_refinement(point()) == point()
    R = barycentric_refinement(C4)
    assert R.f_vector == (8, 8) and is_sphere(R, 1)
    assert barycentric_refinement(TRIANGLE).f_vector == (7, 12, 6)


@pytest.mark.parametrize("name", ["triangle", "C4", "octahedron", "mixed", "projective_plane", "sphere3", "bowtie"])
def test_refinement_preserves_chi_and_matches_operator(name):
    G = named_complexes()[name]
    R = barycentric_refinement(G)
    assert euler_characteristic(R) == euler_characteristic(G)
    assert R.f_vector == refine_f_vector(G.f_vector)


def test_refinement_of_sphere_is_sphere():
    assert is_sphere(barycentric_refinement(cross_polytope(2)), 2)


def test_join_of_spheres_is_sphere():
    assert is_sphere(join(two_points(), C4), 2)
