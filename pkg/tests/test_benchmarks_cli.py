import csv
import warnings

import numpy as np
import pytest

from measure_ocp.afem import AfemConfig, afem_loop
from measure_ocp.benchmarks import (DISK_ALPHA, SQUARE_ALPHAS, combined_error, disk_adjoint,
                                    disk_desired_state, disk_state, example_disk,
                                    example_lshape, example_square, make_example)
from measure_ocp.cli import main
from measure_ocp.io import CSV_COLUMNS, read_records_csv, write_records_csv, write_vtk
from measure_ocp.mesh import DomainSpec


def _laplacian_radial(f1, f2, r):
    """Laplacian of a radial function in 2D from its first two derivatives."""
    return f2(r) + f1(r) / r


def test_disk_exact_identities():
    rng = np.random.default_rng(11)
    theta = rng.uniform(0, 2 * np.pi, 1000)
    r = rng.uniform(1e-3, 1.0, 1000)
    x, y = r * np.cos(theta), r * np.sin(theta)
    a = DISK_ALPHA
    # boundary value of the adjoint
    assert np.abs(disk_adjoint(np.cos(theta), np.sin(theta))).max() <= 1e-12
    # |p(0)| equals alpha, the value where the Dirac mass sits
    assert abs(disk_adjoint(0.0, 0.0)) == pytest.approx(a, abs=1e-15)
    assert np.all(np.abs(disk_adjoint(x, y)) <= a + 1e-15)
    # y_d = Laplacian(p) + y with p = a (-2 r^3 + 3 r^2 - 1)
    lap = _laplacian_radial(lambda s: a * (-6 * s ** 2 + 6 * s), lambda s: a * (-12 * s + 6), r)
    assert np.abs(disk_desired_state(x, y) - (lap + disk_state(x, y))).max() <= 1e-12
    # the stated form -a 6 (3 r^2 - 2 r) / r - ln r / 2 pi
    stated = -a * 6 * (3 * r ** 2 - 2 * r) / r - np.log(r) / (2 * np.pi)
    assert np.abs(disk_desired_state(x, y) - stated).max() <= 1e-12
    # the polynomial written out for alpha = 1e-2
    assert np.allclose(disk_adjoint(x, y), -0.02 * r ** 3 + 0.03 * r ** 2 - 0.01,
                       atol=1e-15)


def test_disk_problem():
    problem, exact = example_disk()
    assert problem.alpha == 1e-2
    assert exact.control_location == (0.0, 0.0) and exact.control_mass == 1.0
    with pytest.raises(ValueError):
        make_example("disk", alpha=1e-3)
    # state is the Green's function, zero on the unit circle
    assert disk_state(1.0, 0.0) == 0.0


def test_square_target():
    assert example_square.__defaults__ == (1e-4,)
    from measure_ocp.benchmarks import square_desired_state as yd
    assert yd(0.2, -0.1) == pytest.approx(10 * (1 - np.exp(-50 * 0.18)), rel=1e-14)
    rng = np.random.default_rng(2)
    x, y = rng.uniform(-1, 1, (2, 500))
    # swapping the coordinates swaps the two Gaussians
    assert np.abs(yd(y, x) + yd(x, y)).max() == 0.0


def test_square_alpha_handling():
    for a in SQUARE_ALPHAS:
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            assert example_square(a).alpha == a
    with pytest.warns(UserWarning):
        example_square(3e-3)
    with pytest.raises(ValueError):
        example_square(0.0)
    with pytest.raises(ValueError):
        example_square(-1e-3)


def test_lshape_problem():
    problem = example_lshape()
    assert problem.alpha == 5e-3
    assert problem.y_d(1.0, 1.0) == pytest.approx(-0.5 * np.log(2.08), rel=1e-14)
    assert not DomainSpec("lshape").contains(0.5, -0.5)
    # the target's singularity lies in the removed quadrant
    assert not DomainSpec("lshape").contains(0.2, -0.2)


def test_make_example_unknown():
    with pytest.raises(ValueError):
        make_example("triangle")


def test_combined_error():
    assert combined_error(0, 0) == 0
    assert combined_error(3, 4) == 5
    assert combined_error(4, 3) == combined_error(3, 4)
    with pytest.raises(ValueError):
        combined_error(-1, 2)


def test_csv_roundtrip(tmp_path):
    problem, exact = example_disk()
    hist = afem_loop(problem, AfemConfig(max_iter=5, exact=exact))
    path = tmp_path / "r.csv"
    write_records_csv(hist, path)
    back = read_records_csv(path)
    assert [r.as_dict() for r in back] == [r.as_dict() for r in hist]
    with open(path) as fh:
        assert next(csv.reader(fh)) == CSV_COLUMNS

    square = afem_loop(example_square(1e-3), AfemConfig(max_iter=3))
    write_records_csv(square, path)
    rows = list(csv.DictReader(open(path)))
    assert rows[0]["err_y_l2"] == "" and rows[0]["est_total"] != ""
    assert [r.as_dict() for r in read_records_csv(path)] == [r.as_dict() for r in square]


def test_vtk_output(tmp_path):
    problem, _ = example_disk()
    mesh = problem.mesh
    path = tmp_path / "m.vtk"
    write_vtk(path, mesh, {"u": np.arange(mesh.num_vertices, dtype=float)})
    text = path.read_text().splitlines()
    assert text[0].startswith("# vtk DataFile")
    assert "POINTS {} double".format(mesh.num_vertices) in text
    assert "CELL_TYPES {}".format(mesh.num_triangles) in text
    assert "SCALARS u double 1" in text
    with pytest.raises(ValueError):
        write_vtk(path, mesh, {"bad": np.zeros(2)})


def test_cli_uniform_six_rows(tmp_path, capsys):
    out = tmp_path / "run"
    status = main(["run", "--example", "disk", "--refinement", "uniform", "--max-iter", "6",
                   "--out", str(out), "--vtk"])
    assert status == 0
    records = read_records_csv(out / "records.csv")
    assert len(records) == 6
    assert all(r.err_y_l2 is not None for r in records)
    assert (out / "solution.npz").exists() and (out / "mesh_5.vtk").exists()
    printed = capsys.readouterr().out
    assert "slope est_total" in printed and "slope err_y_l2" in printed
    data = np.load(out / "solution.npz")
    assert data["u"].shape == data["y"].shape == (len(data["vertices"]),)


@pytest.mark.parametrize("args", [
    ["--alpha", "abc"], ["--alpha", "-1"], ["--alpha", "0"], ["--theta", "2"],
    ["--quad-degree", "25"], ["--max-iter", "0"], ["--snap-boundary", "maybe"],
])
def test_cli_rejects_bad_flags(tmp_path, args):
    with pytest.raises(SystemExit) as info:
        main(["run", "--example", "square", "--out", str(tmp_path)] + args)
    assert info.value.code == 2


def test_cli_disk_rejects_other_alpha(tmp_path):
    with pytest.raises(SystemExit) as info:
        main(["run", "--example", "disk", "--alpha", "1e-3", "--out", str(tmp_path)])
    assert info.value.code == 2


def test_cli_square_adaptive(tmp_path, capsys):
    status = main(["run", "--example", "square", "--alpha", "1e-2", "--max-iter", "8",
                   "--out", str(tmp_path), "--snap-boundary", "off"])
    assert status == 0
    assert len(read_records_csv(tmp_path / "records.csv")) == 8
    assert "slope err_y_l2" not in capsys.readouterr().out
