import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import assert_valid_mesh
from measure_ocp.mesh import (DomainSpec, Mesh, build_initial_mesh, element_size,
                              interior_nodes, load_mesh, min_angles, patches,
                              prolongate, refine, save_mesh, uniform_refine)

KINDS = ["disk", "square", "lshape"]


@pytest.mark.parametrize("kind", KINDS)
def test_initial_meshes_valid(kind):
    spec = DomainSpec(kind)
    mesh = build_initial_mesh(spec)
    assert_valid_mesh(mesh, spec)
    assert mesh.num_interior >= 1
    assert np.isclose(mesh.areas.sum(), 4.0 if kind == "square" else
                      3.0 if kind == "lshape" else
                      0.5 * 8 * np.sin(2 * np.pi / 8))


def test_square_initial_mesh():
    mesh = build_initial_mesh(DomainSpec("square"))
    assert mesh.num_triangles == 4 and mesh.num_vertices == 5
    assert np.allclose(mesh.areas, 1.0)
    assert np.array_equal(mesh.vertices[interior_nodes(mesh)], [[0.0, 0.0]])


def test_lshape_initial_mesh():
    mesh = build_initial_mesh(DomainSpec("lshape"))
    assert mesh.num_triangles == 12
    # the re-entrant corner is a boundary vertex
    corner = np.flatnonzero(np.all(mesh.vertices == 0.0, axis=1))
    assert corner.size == 1 and mesh.boundary_vertex[corner[0]]
    assert not np.any(DomainSpec("lshape").contains(*mesh.centroids.T) == 0)
    assert not DomainSpec("lshape").contains(0.5, -0.5)


def test_disk_initial_mesh():
    mesh = build_initial_mesh(DomainSpec("disk"))
    assert mesh.num_triangles == 8
    r = np.hypot(*mesh.vertices[mesh.boundary_vertex].T)
    assert np.allclose(r, 1.0, atol=1e-15)


def test_clockwise_input_is_reoriented():
    mesh = Mesh([(0, 0), (1, 0), (0, 1)], [(0, 2, 1)])
    assert mesh.areas[0] == pytest.approx(0.5)


def test_degenerate_triangle_rejected():
    with pytest.raises(ValueError):
        Mesh([(0, 0), (1, 0), (2, 0)], [(0, 1, 2)])


def test_single_triangle_bisection():
    mesh = Mesh([(0, 0), (1, 0), (0, 1)], [(0, 1, 2)])
    fine = refine(mesh, [0])
    assert fine.num_triangles == 2
    assert np.allclose(fine.areas, 0.25)
    # the new vertex is the midpoint of the hypotenuse
    assert np.allclose(fine.vertices[-1], [0.5, 0.5])


def test_closure_bisects_neighbour(unit_diagonal_square):
    fine = refine(unit_diagonal_square, [0])
    assert_valid_mesh(fine)
    # the diagonal is the longest edge of both, so both are split
    assert fine.num_triangles == 4


def test_refine_rejects_empty_and_bad_indices(unit_diagonal_square):
    with pytest.raises(ValueError):
        refine(unit_diagonal_square, [])
    with pytest.raises(ValueError):
        refine(unit_diagonal_square, [5])


def test_children_smaller_than_parents():
    mesh = build_initial_mesh(DomainSpec("square"))
    rng = np.random.default_rng(0)
    for _ in range(6):
        marked = rng.choice(mesh.num_triangles, size=max(1, mesh.num_triangles // 3),
                            replace=False)
        fine = refine(mesh, marked)
        assert_valid_mesh(fine, DomainSpec("square"))
        # every marked triangle disappears; its pieces are strictly smaller
        assert fine.h.max() <= mesh.h.max() + 1e-15
        assert fine.num_triangles > mesh.num_triangles
        assert fine.areas.sum() == pytest.approx(4.0)
        mesh = fine


def test_full_bisection_sweeps_halve_diameter():
    mesh = build_initial_mesh(DomainSpec("square"))
    h0 = mesh.h.max()
    for _ in range(2):
        mesh = refine(mesh, np.arange(mesh.num_triangles))
    assert mesh.h.max() == pytest.approx(h0 / 2)
    assert np.allclose(mesh.h, h0 / 2)


def test_uniform_refine_square():
    mesh = build_initial_mesh(DomainSpec("square"))
    fine = uniform_refine(mesh)
    assert fine.num_triangles == 16
    assert fine.h.max() == pytest.approx(mesh.h.max() / 2)
    assert fine.num_interior == 5
    assert_valid_mesh(fine, DomainSpec("square"))


def test_uniform_refine_disk_snaps():
    spec = DomainSpec("disk")
    mesh = build_initial_mesh(spec)
    for _ in range(3):
        mesh = uniform_refine(mesh)
        assert_valid_mesh(mesh, spec)
    assert mesh.num_interior > 1
    r = np.hypot(*mesh.vertices[mesh.boundary_vertex].T)
    assert np.allclose(r, 1.0, atol=1e-14)
    unsnapped = uniform_refine(build_initial_mesh(spec), snap=False)
    r = np.hypot(*unsnapped.vertices[unsnapped.boundary_vertex].T)
    assert r.min() < 1 - 1e-3


@pytest.mark.parametrize("kind", KINDS)
def test_min_angle_over_ten_sweeps(kind):
    """Adaptive and uniform sweeps keep min angle >= half the initial one."""
    spec = DomainSpec(kind)
    mesh = build_initial_mesh(spec)
    bound = 0.5 * min_angles(mesh).min()
    rng = np.random.default_rng(7)
    corner = np.array([0.3, 0.2])
    for sweep in range(10):
        # mark around a point plus a random sprinkle
        d = np.hypot(*(mesh.centroids - corner).T)
        marked = np.union1d(np.flatnonzero(d <= np.quantile(d, 0.1)),
                            rng.choice(mesh.num_triangles, 2))
        mesh = refine(mesh, marked)
        assert_valid_mesh(mesh, spec)
        assert min_angles(mesh).min() >= bound - 1e-12
    for _ in range(2):
        mesh = uniform_refine(mesh)
        assert min_angles(mesh).min() >= bound - 1e-12


def test_parent_vertices_preserved():
    mesh = build_initial_mesh(DomainSpec("disk"))
    for _ in range(4):
        fine = refine(mesh, [0, mesh.num_triangles - 1])
        assert np.array_equal(fine.vertices[:mesh.num_vertices], mesh.vertices)
        mesh = fine


def test_refine_is_deterministic():
    a = build_initial_mesh(DomainSpec("lshape"))
    b = build_initial_mesh(DomainSpec("lshape"))
    for k in range(5):
        a, b = refine(a, [k, 2 * k]), refine(b, [2 * k, k])
    assert np.array_equal(a.triangles, b.triangles)
    assert np.array_equal(a.vertices, b.vertices)


def test_patches_examples(unit_diagonal_square):
    single = Mesh([(0, 0), (1, 0), (0, 1)], [(0, 1, 2)])
    vp, ep = patches(single, 0)
    assert list(vp) == [0] and list(ep) == [0]
    vp, ep = patches(unit_diagonal_square, 0)
    assert list(ep) == [0, 1]
    fan = build_initial_mesh(DomainSpec("square"))
    vp, ep = patches(fan, 0)
    assert list(vp) == [0, 1, 2, 3]
    # triangle 0 = (-1,-1),(1,-1),0 touches 1 and 3 through the diagonals
    assert list(ep) == [0, 1, 3]


def test_edge_patch_symmetry():
    mesh = build_initial_mesh(DomainSpec("lshape"))
    mesh = refine(refine(mesh, [0, 5]), [3, 4, 7])
    for T in range(mesh.num_triangles):
        for S in patches(mesh, T)[1]:
            assert T in patches(mesh, S)[1]


def test_element_size():
    right = Mesh([(0, 0), (1, 0), (0, 1)], [(0, 1, 2)])
    assert element_size(right, 0) == pytest.approx(np.sqrt(2))
    s = 0.7
    eq = Mesh([(0, 0), (s, 0), (s / 2, s * np.sqrt(3) / 2)], [(0, 1, 2)])
    assert element_size(eq, 0) == pytest.approx(s)
    mesh = uniform_refine(build_initial_mesh(DomainSpec("disk")))
    brute = max(np.linalg.norm(mesh.vertices[a] - mesh.vertices[b])
                for t in mesh.triangles for a, b in ((t[0], t[1]), (t[1], t[2]), (t[2], t[0])))
    assert mesh.h.max() == pytest.approx(brute, rel=1e-15)


def test_interior_nodes():
    single = Mesh([(0, 0), (1, 0), (0, 1)], [(0, 1, 2)])
    assert interior_nodes(single).size == 0
    square = build_initial_mesh(DomainSpec("square"))
    assert list(interior_nodes(square)) == [4]


def test_prolongate_is_exact_for_affine():
    mesh = build_initial_mesh(DomainSpec("square"))
    f = lambda x, y: 2 * x - 3 * y + 1
    fine = refine(mesh, [1, 2])
    v = prolongate(fine, f(*mesh.vertices.T))
    assert np.allclose(v, f(*fine.vertices.T), atol=1e-14)
    with pytest.raises(ValueError):
        prolongate(fine, np.zeros(3))


def test_save_load_roundtrip(tmp_path):
    mesh = refine(build_initial_mesh(DomainSpec("lshape")), [2, 9])
    path = tmp_path / "m.txt"
    save_mesh(mesh, path)
    header = path.read_text().splitlines()[0]
    assert header == "{} {}".format(mesh.num_triangles, mesh.num_vertices)
    back = load_mesh(path)
    assert np.array_equal(back.vertices, mesh.vertices)
    assert np.array_equal(back.triangles, mesh.triangles)
    assert np.array_equal(back.boundary_vertex, mesh.boundary_vertex)


@settings(max_examples=25, deadline=None)
@given(st.lists(st.integers(min_value=0, max_value=10 ** 6), min_size=1, max_size=6),
       st.sampled_from(KINDS))
def test_refine_property(seeds, kind):
    spec = DomainSpec(kind)
    mesh = build_initial_mesh(spec)
    for s in seeds:
        mesh = refine(mesh, [s % mesh.num_triangles])
        assert_valid_mesh(mesh, spec)
    if kind == "disk":
        # snapping only adds area, and never beyond the circle
        assert build_initial_mesh(spec).areas.sum() <= mesh.areas.sum() <= np.pi
    else:
        assert mesh.areas.sum() == pytest.approx(spec.area)
