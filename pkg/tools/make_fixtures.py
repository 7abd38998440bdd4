"""Regenerate the workspace files under fixtures/ from the gallery constructors."""

import sys
from pathlib import Path

import numpy as np

from doihopf.datum import direct_sum, induced_module, regular_right_module
from doihopf.gallery import (
    canonical_gset_integral,
    m2f2_graded_datum,
    f2c2_dual_datum,
    fc2,
    fixture_data,
    gamma_mu,
    matrix_coalgebra_datum,
    qc2,
    relative_hopf_datum,
    sweedler_h4,
    trivial_datum,
    trivial_hopf,
)
from doihopf.datum import regular_comodule_algebra
from doihopf.io import dump_workspace, emit_datum, emit_hopf, emit_integral, emit_map, emit_module
from doihopf.linalg import QQ, Matrix

OUT = Path(__file__).resolve().parent.parent / "fixtures"


def datum_file(d, queries, extra=None):
    objs = emit_datum(d)
    objs.update(extra or {})
    return dump_workspace(d.field, objs, queries)


def matrix_coalgebra_file():
    d = matrix_coalgebra_datum(2)
    f = d.field
    m = induced_module(d, regular_right_module(d.A), "M")
    n = direct_sum(m, m, "N")
    k = m.dim
    u = Matrix(f, np.vstack([f.eye(k), f.eye(k)]))
    r = Matrix(f, np.hstack([f.eye(k), f.zeros(k, k)]))
    half = gamma_mu([[QQ.coerce("1/2"), 0], [0, QQ.coerce("1/2")]])
    bad = gamma_mu([[1, 0], [0, 1]])
    extra = {
        "M": emit_module(m, "D"),
        "N": emit_module(n, "D"),
        "diag": emit_map(u, m, "M", n, "N"),
        "proj1": emit_map(r, n, "N", m, "M"),
        "id": emit_map(Matrix.identity(f, k), m, "M", m, "M"),
        "gamma-half": emit_integral(half, d, "D"),
        "gamma-trace2": emit_integral(bad, d, "D"),
    }
    queries = [
        {"command": "validate", "object": "D"},
        {"command": "integrals", "datum": "D", "space": "v4", "normalized": True},
        {"command": "maschke", "datum": "D", "morphism": "diag", "retraction": "proj1"},
        {"command": "maschke", "datum": "D", "morphism": "id", "retraction": "id", "integral": "gamma-half"},
    ]
    return datum_file(d, queries, extra)


def main():
    OUT.mkdir(exist_ok=True)
    fx = fixture_data()
    h4 = sweedler_h4(QQ)
    files = {
        "qc2.json": datum_file(fx["relative-hopf-qc2"], [{"command": "validate", "object": "H"}, {"command": "double", "hopf": "H"}]),
        "h4.json": datum_file(relative_hopf_datum(h4, regular_comodule_algebra(h4), "(H4,H4,H4)"), [{"command": "validate", "object": "H"}]),
        "f2c2.json": datum_file(relative_hopf_datum(fc2(2), regular_comodule_algebra(fc2(2)), "(F2C2,F2C2,F2C2)"), [{"command": "validate", "object": "H"}]),
        "k-trivial.json": datum_file(trivial_datum(QQ), [{"command": "validate", "object": "D"}, {"command": "integrals", "datum": "D", "space": "v4", "normalized": True}]),
        "matrix-coalgebra.json": matrix_coalgebra_file(),
        "m2f2-graded.json": datum_file(
            fx["m2f2-graded"], [{"command": "integrals", "datum": "D", "space": "w1", "normalized": True}]
        ),
        "f2c2-dual.json": datum_file(f2c2_dual_datum(), [{"command": "integrals", "datum": "D", "space": "v3", "normalized": True}]),
    }
    for key in ("grouplike", "yd-qc2", "long-qc2", "gset-point", "gset-regular", "relative-hopf-qc2-trivial"):
        d = fx[key]
        extra = {}
        if key.startswith("gset"):
            extra["gamma-canonical"] = emit_integral(canonical_gset_integral(d), d, "D")
        files[f"{key}.json"] = datum_file(d, [{"command": "validate", "object": "D"}, {"command": "integrals", "datum": "D", "space": "v4", "normalized": True}], extra)
    check = "--check" in sys.argv
    stale = []
    for name, text in sorted(files.items()):
        path = OUT / name
        if check:
            if not path.exists() or path.read_text(encoding="utf-8") != text:
                stale.append(name)
        else:
            path.write_text(text, encoding="utf-8")
    if stale:
        print("stale fixtures: " + ", ".join(stale))
        sys.exit(1)


if __name__ == "__main__":
    main()
