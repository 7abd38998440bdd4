"""Integral spaces of a Doi-Hopf datum as exact affine solution spaces.

Each space is the set of linear maps of a fixed shape satisfying a list of
named linear conditions, optionally with an affine normalization.  Unknowns
are stored as tensors (output axes first):

======  ================================  ==========================================
tag     map                               tensor
======  ================================  ==========================================
V1      nu: C(x)C(x)A -> C(x)A            ``N[p, y, c, d, a]``  (nu(c(x)d(x)a) on p(x)y)
V2      lambda: C(x)C -> C(x)A            ``L[p, y, c, d]``
V3      theta: C(x)C -> A                 ``T[y, c, d]``
V4      gamma: C -> Hom(C, A)             ``G[d, y, c]``  (gamma(c)(d) on y)
V5      psi: C(x)A -> Hom(C, A)           ``P[d, y, c, b]``  (psi(c(x)b)(d) on y)
W1      z in C(x)A                        ``Z[c, a]``
======  ================================  ==========================================

Condition functions take a batch of candidates with a leading axis ``Z`` and
return the residual, which must vanish.  The system matrix is obtained by
evaluating them on the standard basis of the unknown space.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .datum import DoiHopfDatum
from .hopf import HopfAlgebra
from .linalg import AffineSolutionSpace, FieldError, Matrix, solve_affine
from .smash import hom_c_hom_ca_actions, hom_ca_actions, koppinen_tensor

TAGS = ("V1", "V2", "V3", "V4", "V5", "W1")


@dataclass(frozen=True)
class Condition:
    name: str
    residual: Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True)
class Normalization:
    name: str
    value: Callable[[np.ndarray], np.ndarray]
    target: np.ndarray


@dataclass(frozen=True, eq=False)
class SpaceDef:
    tag: str
    shape: tuple
    conditions: tuple
    normalization: Normalization


# ---------------------------------------------------------------- condition tables


def _v1(d: DoiHopfDatum) -> SpaceDef:
    f, nA, nC = d.field, d.nA, d.nC
    am, au, cD, ce, rho, act, rho2, R = d.am, d.au, d.cD, d.ce, d.rho, d.act, d.rho2, d.ca_right
    E = f.eye

    def right_linear(X):
        # nu((c(x)d(x)b) a) = nu(c(x)d(x)b) a, with (c(x)d(x)b)a = c.a_{-2} (x) d.a_{-1} (x) b a_0
        lhs = f.einsum("pqza,ucp,vdq,wbz,Zsyuvw->Zsycdba", rho2, act, act, am, X)
        rhs = f.einsum("syrxa,Zrxcdb->Zsycdba", R, X)
        return lhs - rhs

    def colinear(X):
        lhs = f.einsum("pqs,Zsycdb->Zpqycdb", cD, X)
        rhs = f.einsum("psc,Zqysdb->Zpqycdb", cD, X)
        return lhs - rhs

    def left_linear(X):
        lhs = f.einsum("wba,Zpycdw->Zpycdba", am, X)
        rhs = f.einsum("ybx,Zpxcda->Zpycdba", am, X)
        return lhs - rhs

    def coaction_absorption(X):
        Y = f.einsum("Zpycdb,b->Zpycd", X, au)
        return _absorb(f, cD, ce, rho, act, Y) - Y

    def norm(X):
        return f.einsum("stc,Zpysta->Zpyca", cD, X)

    target = np.einsum("pc,ya->pyca", E(nC), E(nA))
    return SpaceDef(
        "V1",
        (nC, nA, nC, nC, nA),
        (
            Condition("right A-linearity of nu", right_linear),
            Condition("left C-colinearity of nu", colinear),
            Condition("nu(c⊗d⊗ba) = b nu(c⊗d⊗a)", left_linear),
            Condition("sum (d2⊗1)(eps⊗rho_A) nu(c⊗d1⊗1) = nu(c⊗d⊗1)", coaction_absorption),
        ),
        Normalization("sum nu(c1⊗c2⊗a) = c⊗a", norm, f.array(target)),
    )


def _absorb(f, cD, ce, rho, act, Y):
    """``sum (d2 (x) 1)(eps (x) rho_A) lambda(c (x) d1)`` for a batch ``Y[Z, p, y, c, d]``."""
    return f.einsum("qrd,s,Zsxcq,hyx,prh->Zpycd", cD, ce, Y, rho, act)


def _v2(d: DoiHopfDatum) -> SpaceDef:
    f, nA, nC = d.field, d.nA, d.nC
    am, au, cD, ce, rho, act, rho2, R = d.am, d.au, d.cD, d.ce, d.rho, d.act, d.rho2, d.ca_right

    def coaction_absorption(X):
        return _absorb(f, cD, ce, rho, act, X) - X

    def centralized(X):
        # a_0 lambda(c.a_{-2} (x) d.a_{-1}) = lambda(c(x)d) a
        lhs = f.einsum("pqza,ucp,vdq,Zswuv,yzw->Zsycda", rho2, act, act, X, am)
        rhs = f.einsum("syrxa,Zrxcd->Zsycda", R, X)
        return lhs - rhs

    def colinear(X):
        lhs = f.einsum("psc,Zqysd->Zpqycd", cD, X)
        rhs = f.einsum("pqs,Zsycd->Zpqycd", cD, X)
        return lhs - rhs

    def norm(X):
        return f.einsum("stc,Zpyst->Zpyc", cD, X)

    target = f.array(np.einsum("pc,y->pyc", f.eye(nC), au))
    return SpaceDef(
        "V2",
        (nC, nA, nC, nC),
        (
            Condition("sum (d2⊗1)(eps⊗rho_A) lambda(c⊗d1) = lambda(c⊗d)", coaction_absorption),
            Condition("sum a0 lambda(c.a-2⊗d.a-1) = lambda(c⊗d) a", centralized),
            Condition("sum c1⊗lambda(c2⊗d) = rho(lambda(c⊗d))", colinear),
        ),
        Normalization("sum lambda(c1⊗c2) = c⊗1", norm, target),
    )


def _theta_colinearity(f, cD, rho, act):
    def colinear(X):
        # sum c1 (x) theta(c2 (x) d) = sum d2 . theta(c (x) d1)_{-1} (x) theta(c (x) d1)_0
        lhs = f.einsum("pqc,Zyqd->Zpycd", cD, X)
        rhs = f.einsum("qrd,Zxcq,hyx,prh->Zpycd", cD, X, rho, act)
        return lhs - rhs

    return colinear


def _v3(d: DoiHopfDatum) -> SpaceDef:
    f, nA, nC = d.field, d.nA, d.nC
    am, au, cD, ce, rho, act, rho2 = d.am, d.au, d.cD, d.ce, d.rho, d.act, d.rho2

    def centralized(X):
        # theta(c(x)d) a = sum a_0 theta(c.a_{-2} (x) d.a_{-1})
        lhs = f.einsum("Zxcd,yxa->Zycda", X, am)
        rhs = f.einsum("pqza,ucp,vdq,Zwuv,yzw->Zycda", rho2, act, act, X, am)
        return lhs - rhs

    def norm(X):
        return f.einsum("pqc,Zypq->Zyc", cD, X)

    return SpaceDef(
        "V3",
        (nA, nC, nC),
        (
            Condition("theta(c⊗d) a = sum a0 theta(c.a-2⊗d.a-1)", centralized),
            Condition("sum c1⊗theta(c2⊗d) = sum d2.theta(c⊗d1)-1⊗theta(c⊗d1)0", _theta_colinearity(f, cD, rho, act)),
        ),
        Normalization("sum theta(c1⊗c2) = eps(c) 1", norm, f.array(np.multiply.outer(au, ce))),
    )


def _v4(d: DoiHopfDatum) -> SpaceDef:
    f, nA, nC = d.field, d.nA, d.nC
    n = nC * nA * nC
    acts = hom_c_hom_ca_actions(d)
    diff = f.reduce(acts.left - acts.right)
    cstar = hom_ca_actions(d).right_cstar.reshape(nC, nA, nC, nA, nC)
    cD, au, ce = d.cD, d.au, d.ce

    def centralized(X):
        return f.einsum("ONa,ZN->ZOa", diff, X.reshape(X.shape[0], n))

    def cstar_linear(X):
        # gamma(c <- p_j) = gamma(c) . p_j
        lhs = f.einsum("jqc,Zdyq->Zdycj", cD, X)
        rhs = f.einsum("dyexj,Zexc->Zdycj", cstar, X)
        return lhs - rhs

    def norm(X):
        return f.einsum("pqc,Zqyp->Zyc", cD, X)

    return SpaceDef(
        "V4",
        (nC, nA, nC),
        (
            Condition("a ⇀⇀ gamma = gamma ↼↼ a", centralized),
            Condition("gamma is right C*-linear", cstar_linear),
        ),
        Normalization("sum gamma(c1)(c2) = eps(c) 1", norm, f.array(np.multiply.outer(au, ce))),
    )


def _v5(d: DoiHopfDatum) -> SpaceDef:
    f, nA, nC = d.field, d.nA, d.nC
    am, au, cD, ce, rho, act, R = d.am, d.au, d.cD, d.ce, d.rho, d.act, d.ca_right
    left = hom_ca_actions(d).left_a.reshape(nC, nA, nC, nA, nA)
    theta_col = _theta_colinearity(f, cD, rho, act)

    def left_linear(X):
        # psi(c (x) ab) = a . psi(c (x) b)
        lhs = f.einsum("wab,Zdycw->Zdycab", am, X)
        rhs = f.einsum("dyexa,Zexcb->Zdycab", left, X)
        return lhs - rhs

    def right_linear(X):
        lhs = f.einsum("uwcba,Zdyuw->Zdycba", R, X)
        rhs = f.einsum("yxa,Zdxcb->Zdycba", am, X)
        return lhs - rhs

    def colinear(X):
        Y = f.einsum("Zdycb,b->Zdyc", X, au)
        return theta_col(Y.transpose(0, 2, 3, 1))

    def norm(X):
        return f.einsum("pqc,Zqypb,b->Zyc", cD, X, au)

    return SpaceDef(
        "V5",
        (nC, nA, nC, nA),
        (
            Condition("psi is left A-linear", left_linear),
            Condition("psi is right A-linear", right_linear),
            Condition("sum c1⊗psi(c2⊗1)(d) = sum d2.psi(c⊗1)(d1)-1⊗psi(c⊗1)(d1)0", colinear),
        ),
        Normalization("sum psi(c1⊗1)(c2) = eps(c) 1", norm, f.array(np.multiply.outer(au, ce))),
    )


def _w1(d: DoiHopfDatum) -> SpaceDef:
    f, nA, nC = d.field, d.nA, d.nC
    am, au, ce, R = d.am, d.au, d.ce, d.ca_right

    def commutes(X):
        lhs = f.einsum("yab,Zcb->Zcya", am, X)
        rhs = f.einsum("cyeba,Zeb->Zcya", R, X)
        return lhs - rhs

    def norm(X):
        return f.einsum("c,Zca->Za", ce, X)

    return SpaceDef(
        "W1",
        (nC, nA),
        (Condition("a z = z a", commutes),),
        Normalization("sum eps(c_i) a_i = 1", norm, f.array(au)),
    )


_BUILDERS = {"V1": _v1, "V2": _v2, "V3": _v3, "V4": _v4, "V5": _v5, "W1": _w1}


def space_definition(d: DoiHopfDatum, which: str) -> SpaceDef:
    which = which.upper()
    if which not in _BUILDERS:
        raise FieldError(f"unknown integral space {which!r}; expected one of {', '.join(TAGS)}")
    return _BUILDERS[which](d)


# ---------------------------------------------------------------- solving


def _system(field, sd: SpaceDef, normalized: bool):
    n = int(np.prod(sd.shape))
    basis = field.eye(n).reshape((n,) + sd.shape)
    blocks, rhs = [], []
    for cond in sd.conditions:
        r = field.reduce(np.asarray(cond.residual(basis), dtype=object)).reshape(n, -1).T
        blocks.append(r)
        rhs.append(field.zeros(r.shape[0]))
    if normalized:
        r = field.reduce(np.asarray(sd.normalization.value(basis), dtype=object)).reshape(n, -1).T
        blocks.append(r)
        rhs.append(sd.normalization.target.reshape(-1))
    A = np.vstack(blocks) if blocks else field.zeros(0, n)
    b = np.concatenate(rhs) if rhs else field.zeros(0)
    return Matrix(field, A), b


@dataclass(frozen=True, eq=False)
class IntegralSpace:
    which: str
    datum: DoiHopfDatum | None
    space: AffineSolutionSpace
    shape: tuple
    normalized: bool
    definition: SpaceDef | None = None

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def field(self):
        return self.space.field

    @property
    def has_normalized(self) -> bool:
        return self.normalized and self.space.particular is not None

    def tensor(self, v) -> np.ndarray:
        return np.asarray(v, dtype=object).reshape(self.shape)

    def basis(self) -> list[np.ndarray]:
        return [self.tensor(v) for v in self.space.homogeneous_basis]

    def particular(self) -> np.ndarray | None:
        p = self.space.particular
        return None if p is None or not self.normalized else self.tensor(p)

    def contains(self, x) -> bool:
        """Membership in the homogeneous space (the defining conditions)."""
        x = self.field.array(x).reshape(-1)
        return self.space.contains_direction(x)


def compute_space(d: DoiHopfDatum, which: str, normalized: bool = False) -> IntegralSpace:
    sd = space_definition(d, which)
    A, b = _system(d.field, sd, normalized)
    sol = solve_affine(A, b)
    if not normalized:
        sol = AffineSolutionSpace(sol.field, sol.ambient_dim, sol.homogeneous_basis, None)
    return IntegralSpace(sd.tag, d, sol, sd.shape, normalized, sd)


def compute_dual_integrals(d: DoiHopfDatum, normalized: bool = False) -> IntegralSpace:
    return compute_space(d, "W1", normalized)


def failed_conditions(d: DoiHopfDatum, which: str, x) -> list[str]:
    """Names of the defining conditions that ``x`` violates."""
    sd = space_definition(d, which)
    x = d.field.array(x).reshape((1,) + sd.shape)
    return [c.name for c in sd.conditions if not d.field.is_zero(c.residual(x))]


def is_member(d: DoiHopfDatum, which: str, x) -> bool:
    return not failed_conditions(d, which, x)


def is_normalized(d: DoiHopfDatum, which: str, x) -> bool:
    sd = space_definition(d, which)
    x = d.field.array(x).reshape((1,) + sd.shape)
    return d.field.equal(sd.normalization.value(x)[0], sd.normalization.target)


def require_member(d: DoiHopfDatum, which: str, x):
    bad = failed_conditions(d, which, x)
    if bad:
        raise FieldError(f"element is not in {which}: {'; '.join(bad)} fails")


# ---------------------------------------------------------------- conversions


def f1(d, N):
    return d.field.einsum("pycdb,b->pycd", N, d.au)


def g1(d, L):
    return d.field.einsum("yax,pxcd->pycda", d.am, L)


def f2(d, L):
    return d.field.einsum("p,pycd->ycd", d.ce, L)


def g2(d, T):
    return d.field.einsum("pqc,yqd->pycd", d.cD, T)


def f3(d, T):
    return np.ascontiguousarray(np.asarray(T, dtype=object).transpose(2, 0, 1))


def g3(d, G):
    return np.ascontiguousarray(np.asarray(G, dtype=object).transpose(1, 2, 0))


def f4(d, G):
    """``psi(c (x) b) = b . gamma(c)``."""
    return d.field.einsum("hzb,edh,exc,yzx->dycb", d.rho, d.act, G, d.am)


def g4(d, P):
    return d.field.einsum("dycb,b->dyc", P, d.au)


_STEPS = {
    ("V1", "V2"): f1,
    ("V2", "V1"): g1,
    ("V2", "V3"): f2,
    ("V3", "V2"): g2,
    ("V3", "V4"): f3,
    ("V4", "V3"): g3,
    ("V4", "V5"): f4,
    ("V5", "V4"): g4,
}


def convert(x, d: DoiHopfDatum, i: str, j: str, check: bool = True) -> np.ndarray:
    """Transport ``x`` from ``V_i`` to ``V_j`` along the chain V1-V2-V3-V4-V5."""
    i, j = i.upper(), j.upper()
    order = ["V1", "V2", "V3", "V4", "V5"]
    if i not in order or j not in order:
        raise FieldError(f"conversion is defined between V1..V5, got {i} -> {j}")
    x = d.field.array(x).reshape(space_definition(d, i).shape)
    if check:
        require_member(d, i, x)
    a, b = order.index(i), order.index(j)
    step = 1 if b > a else -1
    for k in range(a, b, step):
        x = _STEPS[(order[k], order[k + step])](d, x)
    return d.field.array(x)


# ---------------------------------------------------------------- products


def v3_product(t1, t2, d: DoiHopfDatum, check: bool = True) -> np.ndarray:
    """``(theta . theta')(c (x) d) = sum theta(c3 (x) d) theta'(c1 (x) c2)``."""
    if check:
        require_member(d, "V3", t1)
        require_member(d, "V3", t2)
    t1, t2 = d.field.array(t1), d.field.array(t2)
    return d.field.einsum("pqrc,xrd,wpq,yxw->ycd", d.cD2, t1, t2, d.am)


def v4_product(g1_, g2_, d: DoiHopfDatum, check: bool = True) -> np.ndarray:
    """``(gamma . gamma')(c) = sum gamma(c2) . gamma'(c1)`` with Koppinen's product on Hom(C, A)."""
    if check:
        require_member(d, "V4", g1_)
        require_member(d, "V4", g2_)
    K = koppinen_tensor(d)
    g1_, g2_ = d.field.array(g1_), d.field.array(g2_)
    return d.field.einsum("stc,dypxrw,pxt,rws->dyc", d.cD, K, g1_, g2_)


def w1_product(z1, z2, d: DoiHopfDatum, check: bool = True) -> np.ndarray:
    """``(sum c_i (x) a_i) . (sum c'_j (x) a'_j) = sum c'_j (x) eps(c_i) a_i a'_j``."""
    if check:
        require_member(d, "W1", z1)
        require_member(d, "W1", z2)
    z1, z2 = d.field.array(z1), d.field.array(z2)
    e = d.field.einsum("c,ca->a", d.ce, z1)
    return d.field.einsum("yxw,x,cw->cy", d.am, e, z2)


# ---------------------------------------------------------------- classical integrals


@dataclass(frozen=True, eq=False)
class ClassicalIntegrals:
    """Left integrals ``phi`` in H* (``sum h1 phi(h2) = phi(h) 1``) and the maps to/from A-integrals of (k, k, H)."""

    h: HopfAlgebra
    space: AffineSolutionSpace
    datum: DoiHopfDatum
    i_matrix: Matrix  # phi -> theta in V3, theta(h (x) k) = phi(h S(k))
    p_matrix: Matrix  # gamma in V4 -> gamma(.)(1)

    @property
    def dim(self) -> int:
        return self.space.dim

    def i(self, phi) -> np.ndarray:
        return (self.i_matrix @ phi).reshape(1, self.h.dim, self.h.dim)

    def p(self, gamma) -> np.ndarray:
        return self.p_matrix @ np.asarray(gamma, dtype=object).reshape(-1)

    def in_image_of_i(self, theta) -> bool:
        """``sum theta(h l1 (x) k l2) = theta(h (x) k) eps(l)`` for all h, k, l."""
        return in_image_of_i(self.h, theta)


def integral_condition_matrix(h: HopfAlgebra) -> Matrix:
    f, n = h.field, h.dim
    # rows (p, x): sum_q D[p, q, x] phi[q] - u[p] phi[x]
    M = f.reduce(h.D.transpose(0, 2, 1) - np.einsum("p,xq->pxq", h.u, f.eye(n)))
    return Matrix(f, M.reshape(n * n, n))


def classical_integrals(h: HopfAlgebra, normalized: bool = False) -> ClassicalIntegrals:
    from .gallery import trivial_datum_over  # local import: gallery depends on this module

    if not h.has_antipode:
        raise FieldError("classical integrals need an antipode")
    f, n = h.field, h.dim
    A = integral_condition_matrix(h)
    b = f.zeros(A.rows)
    if normalized:
        A = Matrix(f, np.vstack([A.entries, h.u.reshape(1, n)]))
        b = np.concatenate([b, f.array([1])])
    sol = solve_affine(A, b)
    if not normalized:
        sol = AffineSolutionSpace(f, n, sol.homogeneous_basis, None)
    d = trivial_datum_over(h)
    # theta[0, h, k] = sum_x m[x, h, s] S[s, k] phi[x]
    imat = f.einsum("xhs,sk->hkx", h.m, h.S).reshape(n * n, n)
    # gamma stored as G[d, 0, c]: phi[c] = sum_d G[d, 0, c] u[d]
    pmat = np.einsum("d,ce->cde", h.u, f.eye(n)).reshape(n, n * n)
    return ClassicalIntegrals(h, sol, d, Matrix(f, imat), Matrix(f, f.array(pmat)))


def in_image_of_i(h: HopfAlgebra, theta) -> bool:
    f = h.field
    T = f.array(theta).reshape(h.dim, h.dim)
    lhs = f.einsum("xy,xhp,ykq,pql->hkl", T, h.m, h.m, h.D)
    rhs = np.multiply.outer(T, h.e)
    return f.equal(lhs, rhs)
