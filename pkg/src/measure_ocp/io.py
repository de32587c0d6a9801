"""
CSV records, legacy VTK meshes and solution dumps.
"""

import csv

import numpy as np

from .afem import ConvergenceRecord

__all__ = ["CSV_COLUMNS", "write_records_csv", "read_records_csv", "write_vtk",
           "save_solution"]

CSV_COLUMNS = ["iter", "ndof", "ntri", "hmax", "est_y", "est_p", "est_total", "ell",
               "err_y_l2", "err_p_linf", "err_combined", "kkt_res", "newton_iters",
               "control_mass"]
_ATTR = dict(zip(CSV_COLUMNS, ConvergenceRecord.field_names()))
_INTS = {"iter", "ndof", "ntri", "newton_iters"}


def _format(value):
    if value is None:
        return ""
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return repr(float(value))


def write_records_csv(records, path):
    """One row per record; missing values become empty fields."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(CSV_COLUMNS)
        for r in records:
            writer.writerow([_format(getattr(r, _ATTR[c])) for c in CSV_COLUMNS])


def read_records_csv(path):
    """Inverse of :func:`write_records_csv`."""
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        if reader.fieldnames != CSV_COLUMNS:
            raise ValueError("unexpected CSV header {}".format(reader.fieldnames))
        records = []
        for row in reader:
            kw = {}
            for c in CSV_COLUMNS:
                text = row[c]
                if text == "":
                    kw[_ATTR[c]] = None
                else:
                    kw[_ATTR[c]] = int(text) if c in _INTS else float(text)
            records.append(ConvergenceRecord(**kw))
    return records


def write_vtk(path, mesh, point_data=None, title="measure_ocp"):
    """
    Legacy ASCII unstructured grid of triangles with optional point fields.

    ``point_data`` maps names to arrays with one value per vertex.
    """
    point_data = {} if point_data is None else point_data
    nv, nt = mesh.num_vertices, mesh.num_triangles
    lines = ["# vtk DataFile Version 3.0", title, "ASCII", "DATASET UNSTRUCTURED_GRID",
             "POINTS {} double".format(nv)]
    lines += ["{!r} {!r} 0.0".format(float(x), float(y)) for x, y in mesh.vertices]
    lines.append("CELLS {} {}".format(nt, 4 * nt))
    lines += ["3 {} {} {}".format(*t) for t in mesh.triangles]
    lines.append("CELL_TYPES {}".format(nt))
    lines += ["5"] * nt
    if point_data:
        lines.append("POINT_DATA {}".format(nv))
        for name, values in point_data.items():
            values = np.asarray(values, dtype=float)
            if values.shape != (nv,):
                raise ValueError("field {!r} needs one value per vertex".format(name))
            lines += ["SCALARS {} double 1".format(name), "LOOKUP_TABLE default"]
            lines += [repr(float(v)) for v in values]
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def solution_fields(solution):
    """Vertex fields y, p and u (u is zero away from the control nodes)."""
    return {"y": solution.y.values, "p": solution.p.values,
            "u": solution.u.nodal_field()}


def save_solution(path, solution):
    """Mesh and nodal values of a solution in one ``.npz`` archive."""
    mesh = solution.y.mesh
    np.savez(path, vertices=mesh.vertices, triangles=mesh.triangles,
             boundary=mesh.boundary_vertex, **solution_fields(solution))
