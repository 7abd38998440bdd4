"""Algebras, coalgebras and Hopf algebras given by structure constants.

Tensor layout (output axes first, then inputs):

* ``mult[k, i, j]``   coefficient of ``e_k`` in ``e_i e_j``
* ``unit[k]``         coefficient of ``e_k`` in ``1``
* ``comult[i, j, k]`` coefficient of ``e_i (x) e_j`` in ``Delta(e_k)``
* ``counit[k]``       ``eps(e_k)``
* ``antipode[j, i]``  coefficient of ``e_j`` in ``S(e_i)``

``reshape`` of these tensors gives the matrices of the corresponding linear
maps under the global row-major tensor convention.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import Sequence

import numpy as np

from .linalg import Field, FieldError, Matrix, rank, solve_affine


@dataclass(frozen=True)
class Failure:
    identity: str
    witness: tuple = ()
    detail: str = ""

    def __str__(self):
        at = f" at ({', '.join(map(str, self.witness))})" if self.witness else ""
        extra = f": {self.detail}" if self.detail else ""
        return f"{self.identity} fails{at}{extra}"


@dataclass
class ValidationReport:
    subject: str = ""
    failures: list[Failure] = dc_field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def add(self, failure: Failure | None):
        if failure is not None:
            self.failures.append(failure)

    def extend(self, other: "ValidationReport", prefix: str = ""):
        for f in other.failures:
            self.failures.append(Failure(prefix + f.identity, f.witness, f.detail))

    def __str__(self):
        head = self.subject or "object"
        if self.ok:
            return f"{head}: valid"
        return f"{head}: {len(self.failures)} failure(s)\n" + "\n".join(f"  - {f}" for f in self.failures)


class ValidationError(ValueError):
    def __init__(self, report: ValidationReport):
        super().__init__(str(report))
        self.report = report


def ensure(report: ValidationReport):
    if not report.ok:
        raise ValidationError(report)
    return report


def compare(field: Field, identity: str, lhs, rhs, axis_labels: Sequence[Sequence[str]]) -> Failure | None:
    """Failure naming the first multi-index where ``lhs`` and ``rhs`` differ."""
    diff = field.reduce(np.asarray(lhs, dtype=object) - np.asarray(rhs, dtype=object))
    if diff.shape != tuple(len(ax) for ax in axis_labels):
        raise FieldError(f"{identity}: shape {diff.shape} does not match labels")
    for idx in np.ndindex(diff.shape):
        if diff[idx] != 0:
            witness = tuple(ax[i] for ax, i in zip(axis_labels, idx))
            return Failure(identity, witness)
    return None


def _labels(labels, dim):
    labels = tuple(str(x) for x in labels)
    if len(labels) != dim:
        raise FieldError(f"{len(labels)} labels for a {dim}-dimensional space")
    if len(set(labels)) != dim:
        raise FieldError("basis labels must be distinct")
    return labels


@dataclass(frozen=True, eq=False)
class StructAlgebra:
    field: Field
    labels: tuple
    mult: np.ndarray
    unit: np.ndarray

    def __post_init__(self):
        d = len(self.labels)
        object.__setattr__(self, "labels", _labels(self.labels, d))
        object.__setattr__(self, "mult", self.field.array(self.mult))
        object.__setattr__(self, "unit", self.field.array(self.unit))
        if self.mult.shape != (d, d, d) or self.unit.shape != (d,):
            raise FieldError(f"algebra tensors have shapes {self.mult.shape}, {self.unit.shape} for dim {d}")

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def matrix(self) -> Matrix:
        return Matrix(self.field, self.mult.reshape(self.dim, self.dim**2))

    def mul(self, x, y) -> np.ndarray:
        return self.field.einsum("kij,i,j->k", self.mult, np.asarray(x, dtype=object), np.asarray(y, dtype=object))

    def basis_vector(self, i: int) -> np.ndarray:
        v = self.field.zeros(self.dim)
        v[i] = 1
        return v

    def left_mult(self, x) -> np.ndarray:
        """Matrix of ``y -> x y``."""
        return self.field.einsum("kij,i->kj", self.mult, np.asarray(x, dtype=object))

    def right_mult(self, x) -> np.ndarray:
        return self.field.einsum("kij,j->ki", self.mult, np.asarray(x, dtype=object))

    def is_commutative(self) -> bool:
        return self.field.equal(self.mult, self.mult.transpose(0, 2, 1))

    def center(self) -> list[np.ndarray]:
        d = self.dim
        comm = self.field.reduce(self.mult - self.mult.transpose(0, 2, 1))
        # [k, i, j] -> rows (k, j), unknown i
        sys = comm.transpose(0, 2, 1).reshape(d * d, d)
        return list(solve_affine(Matrix(self.field, sys), self.field.zeros(d * d)).homogeneous_basis)

    def is_central(self, x) -> bool:
        x = np.asarray(x, dtype=object)
        return self.field.equal(self.left_mult(x), self.right_mult(x))


@dataclass(frozen=True, eq=False)
class StructCoalgebra:
    field: Field
    labels: tuple
    comult: np.ndarray
    counit: np.ndarray

    def __post_init__(self):
        d = len(self.labels)
        object.__setattr__(self, "labels", _labels(self.labels, d))
        object.__setattr__(self, "comult", self.field.array(self.comult))
        object.__setattr__(self, "counit", self.field.array(self.counit))
        if self.comult.shape != (d, d, d) or self.counit.shape != (d,):
            raise FieldError(f"coalgebra tensors have shapes {self.comult.shape}, {self.counit.shape} for dim {d}")

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def matrix(self) -> Matrix:
        return Matrix(self.field, self.comult.reshape(self.dim**2, self.dim))

    @cached_property
    def comult2(self) -> np.ndarray:
        """``[p, q, r, c]``: coefficient of ``c1 (x) c2 (x) c3``."""
        return self.field.einsum("pqs,src->pqrc", self.comult, self.comult)


@dataclass(frozen=True, eq=False)
class HopfAlgebra:
    """Bialgebra, optionally with antipode (``antipode=None`` for bialgebras)."""

    algebra: StructAlgebra
    coalgebra: StructCoalgebra
    antipode: np.ndarray | None = None
    name: str = ""

    def __post_init__(self):
        if self.algebra.field != self.coalgebra.field:
            raise FieldError("algebra and coalgebra live over different fields")
        if self.algebra.labels != self.coalgebra.labels:
            raise FieldError("algebra and coalgebra must share basis labels")
        if self.antipode is not None:
            S = self.field.array(self.antipode)
            if S.shape != (self.dim, self.dim):
                raise FieldError(f"antipode has shape {S.shape}")
            object.__setattr__(self, "antipode", S)

    @property
    def field(self) -> Field:
        return self.algebra.field

    @property
    def dim(self) -> int:
        return self.algebra.dim

    @property
    def labels(self) -> tuple:
        return self.algebra.labels

    @property
    def m(self):
        return self.algebra.mult

    @property
    def u(self):
        return self.algebra.unit

    @property
    def D(self):
        return self.coalgebra.comult

    @property
    def e(self):
        return self.coalgebra.counit

    @property
    def has_antipode(self) -> bool:
        return self.antipode is not None

    @property
    def S(self) -> np.ndarray:
        if self.antipode is None:
            raise FieldError(f"{self.name or 'this bialgebra'} has no antipode")
        return self.antipode

    @cached_property
    def antipode_bijective(self) -> bool:
        return self.antipode is not None and rank(self.field, self.antipode) == self.dim

    @cached_property
    def S_inv(self) -> np.ndarray:
        if not self.antipode_bijective:
            raise FieldError(f"{self.name or 'this Hopf algebra'} has no bijective antipode")
        return Matrix(self.field, self.antipode).inverse().entries.copy()

    def is_involutory(self) -> bool:
        S = self.S
        return self.field.equal(self.field.reduce(S.dot(S)), self.field.eye(self.dim))


# ---------------------------------------------------------------- validators


def validate_algebra(a: StructAlgebra) -> ValidationReport:
    f, m, u, L = a.field, a.mult, a.unit, a.labels
    rep = ValidationReport("algebra")
    lhs = f.einsum("kxl,xij->kijl", m, m)  # (e_i e_j) e_l
    rhs = f.einsum("kix,xjl->kijl", m, m)  # e_i (e_j e_l)
    rep.add(compare(f, "associativity", lhs, rhs, [L, L, L, L]))
    I = f.eye(a.dim)
    rep.add(compare(f, "left unit law", f.einsum("kij,i->kj", m, u), I, [L, L]))
    rep.add(compare(f, "right unit law", f.einsum("kij,j->ki", m, u), I, [L, L]))
    return rep


def validate_coalgebra(c: StructCoalgebra) -> ValidationReport:
    f, D, e, L = c.field, c.comult, c.counit, c.labels
    rep = ValidationReport("coalgebra")
    lhs = f.einsum("pqs,src->pqrc", D, D)
    rhs = f.einsum("psc,qrs->pqrc", D, D)
    rep.add(compare(f, "coassociativity", lhs, rhs, [L, L, L, L]))
    I = f.eye(c.dim)
    rep.add(compare(f, "left counit law", f.einsum("pqc,p->qc", D, e), I, [L, L]))
    rep.add(compare(f, "right counit law", f.einsum("pqc,q->pc", D, e), I, [L, L]))
    return rep


def validate_bialgebra_axioms(h: HopfAlgebra) -> ValidationReport:
    f, m, u, D, e, L = h.field, h.m, h.u, h.D, h.e, h.labels
    rep = ValidationReport("bialgebra")
    # Delta(xy) = Delta(x) Delta(y)
    lhs = f.einsum("pqk,kij->pqij", D, m)
    left = f.einsum("pab,aci->pbci", m, D)
    right = f.einsum("qcd,bdj->qcbj", m, D)
    rhs = f.einsum("pbci,qcbj->pqij", left, right)
    rep.add(compare(f, "comultiplication is multiplicative", lhs, rhs, [L, L, L, L]))
    rep.add(compare(f, "comultiplication is unital", f.einsum("pqk,k->pq", D, u), np.multiply.outer(u, u), [L, L]))
    rep.add(compare(f, "counit is multiplicative", f.einsum("k,kij->ij", e, m), np.multiply.outer(e, e), [L, L]))
    eu = f.reduce(np.asarray(np.dot(e, u), dtype=object))
    if eu != 1:
        rep.add(Failure("counit is unital", (), f"eps(1) = {f.format(eu)}"))
    return rep


def validate_hopf(h: HopfAlgebra) -> ValidationReport:
    rep = ValidationReport(f"Hopf algebra {h.name}".strip())
    rep.extend(validate_algebra(h.algebra))
    rep.extend(validate_coalgebra(h.coalgebra))
    rep.extend(validate_bialgebra_axioms(h))
    if h.antipode is not None:
        f, m, D, S, L = h.field, h.m, h.D, h.antipode, h.labels
        target = np.multiply.outer(h.u, h.e)
        lhs = f.einsum("kib,ia,abc->kc", m, S, D)
        rep.add(compare(f, "antipode axiom m(S (x) id)Delta = u eps", lhs, target, [L, L]))
        rhs = f.einsum("kaj,jb,abc->kc", m, S, D)
        rep.add(compare(f, "antipode axiom m(id (x) S)Delta = u eps", rhs, target, [L, L]))
    return rep


# ---------------------------------------------------------------- constructions


def dual_algebra(c: StructCoalgebra) -> StructAlgebra:
    """``C*`` on the dual basis with the convolution product."""
    return StructAlgebra(c.field, tuple(f"{l}*" for l in c.labels), c.comult.transpose(2, 0, 1), c.counit)


def dual_coalgebra(a: StructAlgebra) -> StructCoalgebra:
    """``A*`` on the dual basis; ``Delta(f)(x (x) y) = f(xy)``."""
    return StructCoalgebra(a.field, tuple(f"{l}*" for l in a.labels), a.mult.transpose(1, 2, 0), a.unit)


def dual_hopf(h: HopfAlgebra) -> HopfAlgebra:
    S = None if h.antipode is None else h.antipode.T
    return HopfAlgebra(dual_algebra(h.coalgebra), dual_coalgebra(h.algebra), S, name=f"{h.name}*")


def op_algebra(a: StructAlgebra) -> StructAlgebra:
    return StructAlgebra(a.field, a.labels, a.mult.transpose(0, 2, 1), a.unit)


def cop_coalgebra(c: StructCoalgebra) -> StructCoalgebra:
    return StructCoalgebra(c.field, c.labels, c.comult.transpose(1, 0, 2), c.counit)


def op_hopf(h: HopfAlgebra) -> HopfAlgebra:
    """``H^op``; its antipode is ``S^-1``."""
    S = h.S_inv if h.antipode_bijective else None
    return HopfAlgebra(op_algebra(h.algebra), h.coalgebra, S, name=f"{h.name}^op")


def cop_hopf(h: HopfAlgebra) -> HopfAlgebra:
    S = h.S_inv if h.antipode_bijective else None
    return HopfAlgebra(h.algebra, cop_coalgebra(h.coalgebra), S, name=f"{h.name}^cop")


def _pair_labels(la, lb):
    return tuple(f"{x}⊗{y}" for x in la for y in lb)


def tensor_algebra(a: StructAlgebra, b: StructAlgebra) -> StructAlgebra:
    f = a.field
    n, k = a.dim, b.dim
    m = np.einsum("pij,qkl->pqikjl", a.mult, b.mult).reshape(n * k, n * k, n * k)
    return StructAlgebra(f, _pair_labels(a.labels, b.labels), m, np.multiply.outer(a.unit, b.unit).reshape(-1))


def tensor_coalgebra(c: StructCoalgebra, d: StructCoalgebra) -> StructCoalgebra:
    f = c.field
    n, k = c.dim, d.dim
    D = np.einsum("pqi,rsj->prqsij", c.comult, d.comult).reshape(n * k, n * k, n * k)
    return StructCoalgebra(f, _pair_labels(c.labels, d.labels), D, np.multiply.outer(c.counit, d.counit).reshape(-1))


def tensor_hopf(h: HopfAlgebra, k: HopfAlgebra) -> HopfAlgebra:
    S = None
    if h.antipode is not None and k.antipode is not None:
        S = np.einsum("ai,bj->abij", h.S, k.S).reshape(h.dim * k.dim, h.dim * k.dim)
    return HopfAlgebra(
        tensor_algebra(h.algebra, k.algebra), tensor_coalgebra(h.coalgebra, k.coalgebra), S, name=f"{h.name}⊗{k.name}"
    )


def convolution(f: Matrix, g: Matrix, c: StructCoalgebra, a: StructAlgebra) -> Matrix:
    """``f * g = mult o (f (x) g) o comult`` for ``f, g: C -> A``."""
    shape = (a.dim, c.dim)
    if f.shape != shape or g.shape != shape:
        raise FieldError(f"convolution needs {shape} matrices, got {f.shape} and {g.shape}")
    if f.field != c.field or g.field != c.field or a.field != c.field:
        raise FieldError("field mismatch")
    out = c.field.einsum("yxz,xp,zq,pqc->yc", a.mult, f.entries, g.entries, c.comult)
    return Matrix(c.field, out)


def convolution_unit(c: StructCoalgebra, a: StructAlgebra) -> Matrix:
    return Matrix(c.field, np.multiply.outer(a.unit, c.counit))


def left_hit(c: StructCoalgebra, cstar) -> Matrix:
    """Matrix of ``x -> c* -^ x = sum <c*, x2> x1`` on ``C``."""
    return Matrix(c.field, c.field.einsum("pqx,q->px", c.comult, np.asarray(cstar, dtype=object)))


def right_hit(c: StructCoalgebra, cstar) -> Matrix:
    """Matrix of ``x -> x ^- c* = sum <c*, x1> x2`` on ``C``."""
    return Matrix(c.field, c.field.einsum("pqx,p->qx", c.comult, np.asarray(cstar, dtype=object)))


def hopf_from_parts(field: Field, labels, mult, unit, comult, counit, antipode=None, name="") -> HopfAlgebra:
    return HopfAlgebra(
        StructAlgebra(field, tuple(labels), mult, unit),
        StructCoalgebra(field, tuple(labels), comult, counit),
        antipode,
        name=name,
    )
