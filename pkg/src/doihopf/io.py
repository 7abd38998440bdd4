"""JSON workspace files: structure constants as sparse label-indexed entries.

Layout::

    {"field": {"type": "Q"} | {"type": "Fp", "p": 5},
     "objects": {name: {...}, ...},
     "queries": [{"command": ..., ...}, ...]}

Object kinds and their sparse entries (coefficients are ``"p/q"`` strings over
Q, integers over F_p):

* ``algebra``: ``basis``, ``mult`` ``[x, y, z, c]`` (``e_x e_y`` has ``c`` on ``e_z``), ``unit`` ``[z, c]``
* ``coalgebra``: ``basis``, ``comult`` ``[x, y, z, c]`` (``Delta e_x`` has ``c`` on ``e_y (x) e_z``), ``counit`` ``[x, c]``
* ``hopf``: both of the above plus optional ``antipode`` ``[x, y, c]`` (``S e_x`` has ``c`` on ``e_y``)
* ``comodule-algebra``: an algebra plus ``hopf`` (name) and ``coaction`` ``[a, h, b, c]``
* ``module-coalgebra``: a coalgebra plus ``hopf`` (name) and ``action`` ``[x, h, y, c]`` (``e_x . e_h`` has ``c`` on ``e_y``)
* ``datum``: ``hopf``, ``algebra``, ``coalgebra`` names
* ``module``: ``datum``, ``basis``, ``action`` ``[m, a, n, c]``, ``coaction`` ``[m, x, n, c]`` (``rho e_m`` has ``c`` on ``e_x (x) e_n``)
* ``map``: ``source``, ``target`` module names, ``entries`` ``[x, y, c]`` (``e_x`` maps to ``c e_y``)
* ``integral``: ``datum``, ``entries`` ``[c, d, y, k]`` (``gamma(e_c)(e_d)`` has ``k`` on ``e_y``)
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field as dc_field
from itertools import product
from typing import Any

import numpy as np

from .datum import ComoduleAlgebra, DoiHopfDatum, DoiHopfModule, ModuleCoalgebra
from .hopf import HopfAlgebra, StructAlgebra, StructCoalgebra
from .linalg import Field, FieldError, Matrix, field_from_desc


class WorkspaceError(Exception):
    """Malformed file, unknown name or other usage problem."""


def max_dim() -> int:
    raw = os.environ.get("DOIHOPF_MAX_DIM", "64")
    try:
        return int(raw)
    except ValueError as exc:
        raise WorkspaceError(f"DOIHOPF_MAX_DIM must be an integer, got {raw!r}") from exc


# ---------------------------------------------------------------- parsing


def _labels(obj: dict, where: str) -> tuple:
    basis = obj.get("basis")
    if not isinstance(basis, list) or not basis or not all(isinstance(b, str) for b in basis):
        raise WorkspaceError(f"{where}.basis must be a nonempty list of strings")
    if len(set(basis)) != len(basis):
        raise WorkspaceError(f"{where}.basis has repeated labels")
    if len(basis) > max_dim():
        raise WorkspaceError(f"{where} has dimension {len(basis)} > DOIHOPF_MAX_DIM={max_dim()}")
    return tuple(basis)


def _dense(field: Field, obj: dict, key: str, where: str, axes: list[tuple], order, required=True):
    """Read sparse ``[label, ..., coeff]`` entries into a dense tensor.

    ``axes`` lists the labels for each label position; tensor axis ``i`` is
    label position ``order[i]``.  Repeated entries add up.
    """
    rows = obj.get(key)
    if rows is None:
        if required:
            raise WorkspaceError(f"{where}.{key} is missing")
        return None
    if not isinstance(rows, list):
        raise WorkspaceError(f"{where}.{key} must be a list")
    lookup = [{l: i for i, l in enumerate(a)} for a in axes]
    T = field.zeros(*(len(axes[p]) for p in order))
    for k, row in enumerate(rows):
        here = f"{where}.{key}[{k}]"
        if not isinstance(row, list) or len(row) != len(axes) + 1:
            raise WorkspaceError(f"{here} must have {len(axes)} labels and a coefficient")
        idx = []
        for lab, lk in zip(row[:-1], lookup):
            if not isinstance(lab, str) or lab not in lk:
                raise WorkspaceError(f"{here}: unknown basis label {lab!r}")
            idx.append(lk[lab])
        try:
            c = field.parse(row[-1])
        except FieldError as exc:
            raise WorkspaceError(f"{here}: {exc}") from exc
        t = tuple(idx[p] for p in order)
        T[t] = field.coerce(T[t] + c)
    return T


@dataclass
class Workspace:
    field: Field
    raw: dict
    queries: list
    _cache: dict = dc_field(default_factory=dict)

    def names(self) -> list[str]:
        return sorted(self.raw)

    def kind(self, name: str) -> str:
        return self._raw(name).get("kind", "")

    def _raw(self, name: str) -> dict:
        if not isinstance(name, str) or name not in self.raw:
            raise WorkspaceError(f"unknown object {name!r}")
        obj = self.raw[name]
        if not isinstance(obj, dict):
            raise WorkspaceError(f"objects.{name} must be an object")
        return obj

    def get(self, name: str, kind: str | tuple | None = None):
        obj = self._raw(name)
        k = obj.get("kind")
        if kind is not None and k not in ((kind,) if isinstance(kind, str) else kind):
            raise WorkspaceError(f"{name!r} is a {k!r}, expected {kind!r}")
        if name not in self._cache:
            self._cache[name] = self._build(name, obj)
        return self._cache[name]

    # -- builders
    def _algebra(self, obj, where) -> StructAlgebra:
        L = _labels(obj, where)
        f = self.field
        mult = _dense(f, obj, "mult", where, [L, L, L], (2, 0, 1))
        unit = _dense(f, obj, "unit", where, [L], (0,))
        return StructAlgebra(f, L, mult, unit)

    def _coalgebra(self, obj, where) -> StructCoalgebra:
        L = _labels(obj, where)
        f = self.field
        comult = _dense(f, obj, "comult", where, [L, L, L], (1, 2, 0))
        counit = _dense(f, obj, "counit", where, [L], (0,))
        return StructCoalgebra(f, L, comult, counit)

    def _build(self, name: str, obj: dict):
        where = f"objects.{name}"
        f = self.field
        k = obj.get("kind")
        try:
            if k == "algebra":
                return self._algebra(obj, where)
            if k == "coalgebra":
                return self._coalgebra(obj, where)
            if k == "hopf":
                a, c = self._algebra(obj, where), self._coalgebra(obj, where)
                S = _dense(f, obj, "antipode", where, [a.labels, a.labels], (1, 0), required=False)
                return HopfAlgebra(a, c, S, name=name)
            if k == "comodule-algebra":
                h = self.get(obj.get("hopf"), "hopf")
                a = self._algebra(obj, where)
                rho = _dense(f, obj, "coaction", where, [a.labels, h.labels, a.labels], (1, 2, 0))
                return ComoduleAlgebra(a, h, rho)
            if k == "module-coalgebra":
                h = self.get(obj.get("hopf"), "hopf")
                c = self._coalgebra(obj, where)
                act = _dense(f, obj, "action", where, [c.labels, h.labels, c.labels], (2, 0, 1))
                return ModuleCoalgebra(c, h, act)
            if k == "datum":
                h = self.get(obj.get("hopf"), "hopf")
                a = self.get(obj.get("algebra"), "comodule-algebra")
                c = self.get(obj.get("coalgebra"), "module-coalgebra")
                return DoiHopfDatum(h, a, c, name)
            if k == "module":
                d = self.get(obj.get("datum"), "datum")
                L = _labels(obj, where)
                act = _dense(f, obj, "action", where, [L, d.A.labels, L], (2, 0, 1))
                coact = _dense(f, obj, "coaction", where, [L, d.C.labels, L], (1, 2, 0))
                return DoiHopfModule(d, L, act, coact, name)
            if k == "map":
                src = self.get(obj.get("source"), "module")
                dst = self.get(obj.get("target"), "module")
                M = _dense(f, obj, "entries", where, [src.labels, dst.labels], (1, 0))
                return Matrix(f, M)
            if k == "integral":
                d = self.get(obj.get("datum"), "datum")
                return _dense(f, obj, "entries", where, [d.C.labels, d.C.labels, d.A.labels], (1, 2, 0))
        except FieldError as exc:
            raise WorkspaceError(f"{where}: {exc}") from exc
        raise WorkspaceError(f"{where}.kind {k!r} is not recognised")


def parse_workspace(text: str) -> Workspace:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise WorkspaceError(f"malformed JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from exc
    if not isinstance(doc, dict):
        raise WorkspaceError("top level must be an object")
    try:
        fld = field_from_desc(doc.get("field"))
    except FieldError as exc:
        raise WorkspaceError(f"field: {exc}") from exc
    objs = doc.get("objects", {})
    if not isinstance(objs, dict):
        raise WorkspaceError("objects must be an object")
    queries = doc.get("queries", [])
    if not isinstance(queries, list):
        raise WorkspaceError("queries must be a list")
    return Workspace(fld, objs, queries)


def load_workspace(path) -> Workspace:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise WorkspaceError(f"cannot read {path}: {exc}") from exc
    return parse_workspace(text)


# ---------------------------------------------------------------- emission


def _coef(field: Field, x) -> Any:
    if field.char == 0:
        return field.format(x)
    return int(x) % field.char


def _sparse(field: Field, T: np.ndarray, axes: list[tuple], order) -> list:
    """Inverse of :func:`_dense`: entries in lexicographic label-position order."""
    out = []
    for idx in product(*(range(len(a)) for a in axes)):
        x = T[tuple(idx[p] for p in order)]
        if x != 0:
            out.append([axes[i][j] for i, j in enumerate(idx)] + [_coef(field, x)])
    return out


def emit_algebra(a: StructAlgebra) -> dict:
    L = a.labels
    return {
        "kind": "algebra",
        "basis": list(L),
        "mult": _sparse(a.field, a.mult, [L, L, L], (2, 0, 1)),
        "unit": _sparse(a.field, a.unit, [L], (0,)),
    }


def emit_coalgebra(c: StructCoalgebra) -> dict:
    L = c.labels
    return {
        "kind": "coalgebra",
        "basis": list(L),
        "comult": _sparse(c.field, c.comult, [L, L, L], (1, 2, 0)),
        "counit": _sparse(c.field, c.counit, [L], (0,)),
    }


def emit_hopf(h: HopfAlgebra) -> dict:
    out = emit_algebra(h.algebra)
    out.update(emit_coalgebra(h.coalgebra))
    out["kind"] = "hopf"
    if h.has_antipode:
        out["antipode"] = _sparse(h.field, h.antipode, [h.labels, h.labels], (1, 0))
    return out


def emit_datum(d: DoiHopfDatum, prefix: str = "") -> dict:
    """All objects needed for ``d``, keyed ``prefix + {H, A, C, D}``."""
    H, A, C, D = (prefix + s for s in ("H", "A", "C", "D"))
    f = d.field
    a = emit_algebra(d.A)
    a.update(kind="comodule-algebra", hopf=H, coaction=_sparse(f, d.rho, [d.A.labels, d.h.labels, d.A.labels], (1, 2, 0)))
    c = emit_coalgebra(d.C)
    c.update(kind="module-coalgebra", hopf=H, action=_sparse(f, d.act, [d.C.labels, d.h.labels, d.C.labels], (2, 0, 1)))
    return {H: emit_hopf(d.h), A: a, C: c, D: {"kind": "datum", "hopf": H, "algebra": A, "coalgebra": C}}


def emit_module(m: DoiHopfModule, datum_name: str) -> dict:
    f, d, L = m.field, m.datum, m.labels
    return {
        "kind": "module",
        "datum": datum_name,
        "basis": list(L),
        "action": _sparse(f, m.action, [L, d.A.labels, L], (2, 0, 1)),
        "coaction": _sparse(f, m.coaction, [L, d.C.labels, L], (1, 2, 0)),
    }


def emit_map(M: Matrix, src: DoiHopfModule, src_name: str, dst: DoiHopfModule, dst_name: str) -> dict:
    return {
        "kind": "map",
        "source": src_name,
        "target": dst_name,
        "entries": _sparse(M.field, M.entries, [src.labels, dst.labels], (1, 0)),
    }


def emit_integral(G, d: DoiHopfDatum, datum_name: str) -> dict:
    G = d.field.array(G)
    return {"kind": "integral", "datum": datum_name, "entries": _sparse(d.field, G, [d.C.labels, d.C.labels, d.A.labels], (1, 2, 0))}


def dump_workspace(field: Field, objects: dict, queries: list | None = None) -> str:
    doc = {"field": field.describe(), "objects": objects}
    if queries:
        doc["queries"] = queries
    return json.dumps(doc, sort_keys=True, indent=1, ensure_ascii=False) + "\n"
