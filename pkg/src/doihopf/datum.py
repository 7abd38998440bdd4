"""Comodule algebras, module coalgebras, Doi-Hopf data and Doi-Hopf modules.

Tensor layouts:

* comodule algebra ``rho[h, x, a]``: coefficient of ``e_h (x) e_x`` in ``rho(e_a)``
* module coalgebra ``act[c2, c, h]``: coefficient of ``e_c2`` in ``e_c . e_h``
* right A-module ``act[m2, m, a]``: coefficient of ``e_m2`` in ``e_m . e_a``
* left C-comodule ``coact[c, m2, m]``: coefficient of ``e_c (x) e_m2`` in ``rho(e_m)``
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .hopf import (
    HopfAlgebra,
    StructAlgebra,
    StructCoalgebra,
    ValidationReport,
    compare,
    ensure,
    validate_algebra,
    validate_coalgebra,
    validate_hopf,
)
from .linalg import Field, FieldError, Matrix


@dataclass(frozen=True, eq=False)
class ComoduleAlgebra:
    algebra: StructAlgebra
    h: HopfAlgebra
    coaction: np.ndarray

    def __post_init__(self):
        if self.algebra.field != self.h.field:
            raise FieldError("comodule algebra and H over different fields")
        rho = self.h.field.array(self.coaction)
        if rho.shape != (self.h.dim, self.algebra.dim, self.algebra.dim):
            raise FieldError(f"coaction has shape {rho.shape}")
        object.__setattr__(self, "coaction", rho)

    def coinvariants(self) -> list[np.ndarray]:
        """Basis of ``{a : rho(a) = 1 (x) a}``."""
        from .linalg import solve_affine

        f, n = self.h.field, self.algebra.dim
        diff = f.reduce(self.coaction - np.einsum("h,xa->hxa", self.h.u, f.eye(n)))
        sys = Matrix(f, diff.reshape(-1, n))
        return list(solve_affine(sys, f.zeros(sys.rows)).homogeneous_basis)


@dataclass(frozen=True, eq=False)
class ModuleCoalgebra:
    coalgebra: StructCoalgebra
    h: HopfAlgebra
    action: np.ndarray

    def __post_init__(self):
        if self.coalgebra.field != self.h.field:
            raise FieldError("module coalgebra and H over different fields")
        act = self.h.field.array(self.action)
        if act.shape != (self.coalgebra.dim, self.coalgebra.dim, self.h.dim):
            raise FieldError(f"action has shape {act.shape}")
        object.__setattr__(self, "action", act)


def trivial_coaction(h: HopfAlgebra, a: StructAlgebra) -> ComoduleAlgebra:
    """``rho(a) = 1 (x) a``."""
    return ComoduleAlgebra(a, h, np.einsum("h,xa->hxa", h.u, h.field.eye(a.dim)))


def trivial_action(h: HopfAlgebra, c: StructCoalgebra) -> ModuleCoalgebra:
    """``c . h = eps(h) c``."""
    return ModuleCoalgebra(c, h, np.einsum("xc,h->xch", h.field.eye(c.dim), h.e))


def regular_comodule_algebra(h: HopfAlgebra) -> ComoduleAlgebra:
    """``H`` coacting on itself by ``Delta``."""
    return ComoduleAlgebra(h.algebra, h, h.D)


def regular_module_coalgebra(h: HopfAlgebra) -> ModuleCoalgebra:
    """``H`` acting on itself by right multiplication."""
    return ModuleCoalgebra(h.coalgebra, h, h.m)


def validate_comodule_algebra(ca: ComoduleAlgebra) -> ValidationReport:
    h, a = ca.h, ca.algebra
    f, rho = h.field, ca.coaction
    LH, LA = h.labels, a.labels
    rep = ValidationReport("comodule algebra")
    lhs = f.einsum("pqh,hxa->pqxa", h.D, rho)
    rhs = f.einsum("pya,qxy->pqxa", rho, rho)
    rep.add(compare(f, "coaction is coassociative", lhs, rhs, [LH, LH, LA, LA]))
    rep.add(compare(f, "coaction counit law", f.einsum("h,hxa->xa", h.e, rho), f.eye(a.dim), [LA, LA]))
    # rho(ab) = a_{-1} b_{-1} (x) a_0 b_0
    lhs = f.einsum("hxk,kab->hxab", rho, a.mult)
    rhs = f.einsum("hpq,pya,qzb,xyz->hxab", h.m, rho, rho, a.mult)
    rep.add(compare(f, "coaction is multiplicative", lhs, rhs, [LH, LA, LA, LA]))
    rep.add(
        compare(f, "coaction is unital", f.einsum("hxa,a->hx", rho, a.unit), np.multiply.outer(h.u, a.unit), [LH, LA])
    )
    return rep


def validate_module_coalgebra(mc: ModuleCoalgebra) -> ValidationReport:
    h, c = mc.h, mc.coalgebra
    f, act = h.field, mc.action
    LH, LC = h.labels, c.labels
    rep = ValidationReport("module coalgebra")
    # (c.g).k = c.(gk)
    lhs = f.einsum("yxk,xcg->ycgk", act, act)
    rhs = f.einsum("ycj,jgk->ycgk", act, h.m)
    rep.add(compare(f, "action is associative", lhs, rhs, [LC, LC, LH, LH]))
    rep.add(compare(f, "action unit law", f.einsum("ych,h->yc", act, h.u), f.eye(c.dim), [LC, LC]))
    # Delta(c.h) = c1.h1 (x) c2.h2
    lhs = f.einsum("pqx,xch->pqch", c.comult, act)
    rhs = f.einsum("rsc,uvh,pru,qsv->pqch", c.comult, h.D, act, act)
    rep.add(compare(f, "comultiplication is H-linear", lhs, rhs, [LC, LC, LC, LH]))
    rep.add(
        compare(
            f, "counit is H-linear", f.einsum("x,xch->ch", c.counit, act), np.multiply.outer(c.counit, h.e), [LC, LH]
        )
    )
    return rep


@dataclass(frozen=True, eq=False)
class DoiHopfDatum:
    h: HopfAlgebra
    a: ComoduleAlgebra
    c: ModuleCoalgebra
    name: str = ""

    def __post_init__(self):
        if self.a.h is not self.h or self.c.h is not self.h:
            if not (_same_hopf(self.a.h, self.h) and _same_hopf(self.c.h, self.h)):
                raise FieldError("datum members do not share the same H")

    @property
    def field(self) -> Field:
        return self.h.field

    @property
    def nA(self) -> int:
        return self.a.algebra.dim

    @property
    def nC(self) -> int:
        return self.c.coalgebra.dim

    @property
    def nH(self) -> int:
        return self.h.dim

    @property
    def A(self) -> StructAlgebra:
        return self.a.algebra

    @property
    def C(self) -> StructCoalgebra:
        return self.c.coalgebra

    # short aliases used by the einsum-heavy modules
    @property
    def am(self):
        return self.a.algebra.mult

    @property
    def au(self):
        return self.a.algebra.unit

    @property
    def cD(self):
        return self.c.coalgebra.comult

    @property
    def ce(self):
        return self.c.coalgebra.counit

    @property
    def rho(self):
        return self.a.coaction

    @property
    def act(self):
        return self.c.action

    @cached_property
    def rho2(self) -> np.ndarray:
        """``[h1, h2, x, a]``: ``a_{-2} (x) a_{-1} (x) a_0``."""
        return self.field.einsum("pya,qxy->pqxa", self.rho, self.rho)

    @cached_property
    def cD2(self) -> np.ndarray:
        return self.c.coalgebra.comult2

    @cached_property
    def ca_right(self) -> np.ndarray:
        """Right action of A on C (x) A: ``[c2, b2, c, b, a]`` for ``(c (x) b) a = c.a_{-1} (x) b a_0``."""
        return self.field.einsum("hxa,pch,ybx->pycba", self.rho, self.act, self.am)


def _same_hopf(x: HopfAlgebra, y: HopfAlgebra) -> bool:
    f = x.field
    if x.field != y.field or x.labels != y.labels:
        return False
    if not (f.equal(x.m, y.m) and f.equal(x.u, y.u) and f.equal(x.D, y.D) and f.equal(x.e, y.e)):
        return False
    if (x.antipode is None) != (y.antipode is None):
        return False
    return x.antipode is None or f.equal(x.antipode, y.antipode)


def validate_datum(d: DoiHopfDatum) -> ValidationReport:
    rep = ValidationReport(f"Doi-Hopf datum {d.name}".strip())
    rep.extend(validate_hopf(d.h), "H: ")
    rep.extend(validate_algebra(d.A), "A: ")
    rep.extend(validate_coalgebra(d.C), "C: ")
    rep.extend(validate_comodule_algebra(d.a), "A: ")
    rep.extend(validate_module_coalgebra(d.c), "C: ")
    return rep


def make_datum(h: HopfAlgebra, a: ComoduleAlgebra, c: ModuleCoalgebra, name: str = "") -> DoiHopfDatum:
    """Validated constructor; raises :class:`ValidationError`."""
    d = DoiHopfDatum(h, a, c, name)
    ensure(validate_datum(d))
    return d


# ---------------------------------------------------------------- modules


@dataclass(frozen=True, eq=False)
class RightModule:
    """Finite-dimensional right module over ``algebra``."""

    algebra: StructAlgebra
    labels: tuple
    action: np.ndarray

    def __post_init__(self):
        f = self.algebra.field
        object.__setattr__(self, "labels", tuple(str(x) for x in self.labels))
        act = f.array(self.action)
        n = len(self.labels)
        if act.shape != (n, n, self.algebra.dim):
            raise FieldError(f"module action has shape {act.shape}")
        object.__setattr__(self, "action", act)

    @property
    def dim(self) -> int:
        return len(self.labels)


def regular_right_module(a: StructAlgebra) -> RightModule:
    return RightModule(a, a.labels, a.mult)


def validate_right_module(n: RightModule) -> ValidationReport:
    f, a, act, L = n.algebra.field, n.algebra, n.action, n.labels
    rep = ValidationReport("right module")
    lhs = f.einsum("yxb,xma->ymab", act, act)
    rhs = f.einsum("ymk,kab->ymab", act, a.mult)
    rep.add(compare(f, "module action is associative", lhs, rhs, [L, L, a.labels, a.labels]))
    rep.add(compare(f, "module unit law", f.einsum("yma,a->ym", act, a.unit), f.eye(n.dim), [L, L]))
    return rep


@dataclass(frozen=True, eq=False)
class DoiHopfModule:
    datum: DoiHopfDatum
    labels: tuple
    action: np.ndarray
    coaction: np.ndarray
    name: str = ""

    def __post_init__(self):
        f = self.datum.field
        object.__setattr__(self, "labels", tuple(str(x) for x in self.labels))
        n = len(self.labels)
        act = f.array(self.action)
        rho = f.array(self.coaction)
        if act.shape != (n, n, self.datum.nA):
            raise FieldError(f"module action has shape {act.shape}")
        if rho.shape != (self.datum.nC, n, n):
            raise FieldError(f"module coaction has shape {rho.shape}")
        object.__setattr__(self, "action", act)
        object.__setattr__(self, "coaction", rho)

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def field(self) -> Field:
        return self.datum.field

    @property
    def right_module(self) -> RightModule:
        return RightModule(self.datum.A, self.labels, self.action)

    @property
    def coaction_matrix(self) -> Matrix:
        """``rho_M : M -> C (x) M``."""
        return Matrix(self.field, self.coaction.reshape(self.datum.nC * self.dim, self.dim))

    def action_matrix(self, a) -> Matrix:
        """Matrix of ``m -> m a``."""
        return Matrix(self.field, self.field.einsum("yma,a->ym", self.action, np.asarray(a, dtype=object)))


def validate_module(m: DoiHopfModule) -> ValidationReport:
    d, f = m.datum, m.field
    L, LA, LC = m.labels, d.A.labels, d.C.labels
    rep = ValidationReport(f"Doi-Hopf module {m.name}".strip())
    rep.extend(validate_right_module(m.right_module))
    rho = m.coaction
    lhs = f.einsum("pqc,cym->pqym", d.cD, rho)
    rhs = f.einsum("pxm,qyx->pqym", rho, rho)
    rep.add(compare(f, "module coaction is coassociative", lhs, rhs, [LC, LC, L, L]))
    rep.add(compare(f, "module coaction counit law", f.einsum("c,cym->ym", d.ce, rho), f.eye(m.dim), [L, L]))
    # rho_M(m a) = m_{-1} . a_{-1} (x) m_0 a_0
    lhs = f.einsum("cyx,xma->cyma", rho, m.action)
    rhs = f.einsum("pxm,hza,cph,yxz->cyma", rho, d.rho, d.act, m.action)
    rep.add(compare(f, "Doi-Hopf compatibility of action and coaction", lhs, rhs, [LC, L, L, LA]))
    return rep


def make_module(datum: DoiHopfDatum, labels, action, coaction, name: str = "") -> DoiHopfModule:
    m = DoiHopfModule(datum, tuple(labels), action, coaction, name)
    ensure(validate_module(m))
    return m


def induced_module(d: DoiHopfDatum, n: RightModule, name: str = "") -> DoiHopfModule:
    """``C (x) N`` with coaction ``Delta (x) I`` and ``(c (x) n) a = c.a_{-1} (x) n a_0``."""
    ensure(validate_right_module(n))
    if n.algebra.dim != d.nA:
        raise FieldError("module is over a different algebra")
    f, k = d.field, n.dim
    labels = tuple(f"{c}⊗{x}" for c in d.C.labels for x in n.labels)
    act = f.einsum("hxa,pch,ymx->pycma", d.rho, d.act, n.action).reshape(d.nC * k, d.nC * k, d.nA)
    coact = np.einsum("pqc,ym->pqycm", d.cD, f.eye(k)).reshape(d.nC, d.nC * k, d.nC * k)
    return make_module(d, labels, act, coact, name or f"C⊗{k}")


def ca_module(d: DoiHopfDatum) -> DoiHopfModule:
    """The distinguished object ``C (x) A``."""
    return induced_module(d, regular_right_module(d.A), "C⊗A")


def forget(m: DoiHopfModule) -> RightModule:
    return m.right_module


def check_morphism(f: Matrix, m: DoiHopfModule, n: DoiHopfModule) -> bool:
    """Is ``f: M -> N`` right A-linear and left C-colinear?"""
    return not morphism_failures(f, m, n)


def morphism_failures(f: Matrix, m: DoiHopfModule, n: DoiHopfModule) -> list[str]:
    if f.shape != (n.dim, m.dim):
        raise FieldError(f"morphism has shape {f.shape}, expected {(n.dim, m.dim)}")
    F, fm = m.field, f.entries
    out = []
    lhs = F.einsum("yx,xma->yma", fm, m.action)
    rhs = F.einsum("yxa,xm->yma", n.action, fm)
    if not F.equal(lhs, rhs):
        out.append("A-linearity")
    lhs = F.einsum("cyx,xm->cym", n.coaction, fm)
    rhs = F.einsum("yx,cxm->cym", fm, m.coaction)
    if not F.equal(lhs, rhs):
        out.append("C-colinearity")
    return out


def is_a_linear(f: Matrix, m: RightModule, n: RightModule) -> bool:
    F = m.algebra.field
    lhs = F.einsum("yx,xma->yma", f.entries, m.action)
    rhs = F.einsum("yxa,xm->yma", n.action, f.entries)
    return F.equal(lhs, rhs)


def adjunction_unit(m: DoiHopfModule) -> Matrix:
    """``rho_M : M -> G F M = C (x) M``."""
    return m.coaction_matrix


def adjunction_counit(n: RightModule, d: DoiHopfDatum) -> Matrix:
    """``delta_N : F G N = C (x) N -> N``, ``c (x) n -> eps(c) n``."""
    f = d.field
    return Matrix(f, np.einsum("c,ym->ycm", d.ce, f.eye(n.dim)).reshape(n.dim, d.nC * n.dim))


def direct_sum(m: DoiHopfModule, n: DoiHopfModule, name: str = "") -> DoiHopfModule:
    if m.datum is not n.datum:
        raise FieldError("direct sum of modules over different data")
    f, d = m.field, m.datum
    dm, dn = m.dim, n.dim
    act = f.zeros(dm + dn, dm + dn, d.nA)
    act[:dm, :dm, :] = m.action
    act[dm:, dm:, :] = n.action
    co = f.zeros(d.nC, dm + dn, dm + dn)
    co[:, :dm, :dm] = m.coaction
    co[:, dm:, dm:] = n.coaction
    labels = tuple(f"{x}⊕0" for x in m.labels) + tuple(f"0⊕{x}" for x in n.labels)
    return make_module(d, labels, act, co, name or f"{m.name}⊕{n.name}")


# ---------------------------------------------------------------- induced actions


def smash_action(m: DoiHopfModule) -> np.ndarray:
    """Right ``A # C*`` action on M: ``m.(a # c*) = <c*, m_{-1}> m_0 a``.

    Returned as ``[m2, m, (a, j)]`` with the smash basis ``e_a # p_j`` at
    ``a * dim C + j``.
    """
    d, f = m.datum, m.field
    out = f.einsum("jxm,yxa->ymaj", m.coaction, m.action)
    return out.reshape(m.dim, m.dim, d.nA * d.nC)


def triangle_action(m: DoiHopfModule) -> np.ndarray:
    """Right ``#(C, A)`` action ``m <| f = m_0 f(m_{-1})`` as ``[m2, m, (c, a)]``."""
    d, f = m.datum, m.field
    out = f.einsum("cxm,yxa->ymca", m.coaction, m.action)
    return out.reshape(m.dim, m.dim, d.nC * d.nA)
