"""Smash product ``A # C*``, Koppinen's product on ``Hom(C, A)`` and the actions built from them.

Basis conventions:

* ``A # C*``: ``e_a # p_j`` at index ``a * dim C + j`` (``p_j`` dual basis of C)
* ``Hom(C, A)``: ``f`` with ``f(e_c) = e_a`` and zero elsewhere at ``c * dim A + a``
* ``Hom(C, Hom(C, A))``: ``gamma`` stored as ``G[d, a, c]`` (coefficient of
  ``e_a`` in ``gamma(e_c)(e_d)``), flattened in that order.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .datum import DoiHopfDatum
from .hopf import StructAlgebra, ensure, validate_algebra
from .linalg import FieldError, Matrix, flip


@dataclass(frozen=True, eq=False)
class SmashProduct:
    datum: DoiHopfDatum
    algebra: StructAlgebra


@dataclass(frozen=True, eq=False)
class KoppinenAlgebra:
    datum: DoiHopfDatum
    algebra: StructAlgebra

    def product(self, f, g) -> np.ndarray:
        return self.algebra.mul(f, g)


def smash_tensor(d: DoiHopfDatum) -> np.ndarray:
    """``[y, m, i, j, k, l]`` for ``(e_i # p_j)(e_k # p_l)``.

    ``(a # c*)(b # d*) = a_0 b # c* * (a_{-1} . d*)`` with ``(h . d*)(c) = d*(c . h)``.
    """
    f = d.field
    return f.einsum("hxi,yxk,lch,jcm->ymijkl", d.rho, d.am, d.act, d.cD)


def build_smash(d: DoiHopfDatum) -> SmashProduct:
    f, nA, nC = d.field, d.nA, d.nC
    n = nA * nC
    mult = smash_tensor(d).reshape(n, n, n)
    unit = np.multiply.outer(d.au, d.ce).reshape(n)
    labels = tuple(f"{a}#{c}*" for a in d.A.labels for c in d.C.labels)
    alg = StructAlgebra(f, labels, mult, unit)
    ensure(validate_algebra(alg))
    return SmashProduct(d, alg)


def koppinen_tensor(d: DoiHopfDatum) -> np.ndarray:
    """``[c, y, p, x, r, w]``: ``(f . g)(c) = f(c1)_0 g(c2 . f(c1)_{-1})``."""
    return d.field.einsum("pqc,hzx,rqh,yzw->cypxrw", d.cD, d.rho, d.act, d.am)


def build_koppinen(d: DoiHopfDatum) -> KoppinenAlgebra:
    f, nA, nC = d.field, d.nA, d.nC
    n = nA * nC
    mult = koppinen_tensor(d).reshape(n, n, n)
    unit = np.multiply.outer(d.ce, d.au).reshape(n)
    labels = tuple(f"[{c}↦{a}]" for c in d.C.labels for a in d.A.labels)
    alg = StructAlgebra(f, labels, mult, unit)
    ensure(validate_algebra(alg))
    return KoppinenAlgebra(d, alg)


def comparison_i(s: SmashProduct, k: KoppinenAlgebra) -> Matrix:
    """``i(a # c*)(c) = <c*, c> a`` as a matrix ``A # C* -> #(C, A)``."""
    if s.datum is not k.datum:
        raise FieldError("smash product and Koppinen algebra come from different data")
    d = s.datum
    return flip(d.field, d.nA, d.nC)


def is_algebra_map(phi: Matrix, src: StructAlgebra, dst: StructAlgebra) -> bool:
    f, P = src.field, phi.entries
    lhs = f.einsum("yk,kij->yij", P, src.mult)
    rhs = f.einsum("ypq,pi,qj->yij", dst.mult, P, P)
    return f.equal(lhs, rhs) and f.equal(P.dot(src.unit), dst.unit)


# ---------------------------------------------------------------- actions on Hom(C, A)


@dataclass(frozen=True, eq=False)
class HomCAActions:
    """(A, A # C*)-bimodule structure on Hom(C, A) as ``[out, in, generator]`` tensors."""

    left_a: np.ndarray  # (a . f)(c) = a_0 f(c . a_{-1})
    right_a: np.ndarray  # (f . a)(c) = f(c) a
    right_cstar: np.ndarray  # (f . c*)(c) = f(c1)_0 <c*, c2 . f(c1)_{-1}>
    right_smash: np.ndarray  # f . (a # c*) = (f . c*) . a, since a # c* = (1 # c*)(a # eps)


def hom_ca_actions(d: DoiHopfDatum) -> HomCAActions:
    f, nA, nC = d.field, d.nA, d.nC
    n = nA * nC
    left = f.einsum("hza,cdh,yzx->dycxa", d.rho, d.act, d.am).reshape(n, n, nA)
    right = np.einsum("dc,yxa->dycxa", f.eye(nC), d.am).reshape(n, n, nA)
    right = f.reduce(right)
    cstar = f.einsum("cqd,hyx,jqh->dycxj", d.cD, d.rho, d.act).reshape(n, n, nC)
    # f.(a # p_j) = (f.p_j).a
    smash = f.einsum("uva,vwj->uwaj", right, cstar).reshape(n, n, nA * nC)
    return HomCAActions(left, right, cstar, smash)


@dataclass(frozen=True, eq=False)
class HomCHomActions:
    """A-bimodule structure on Hom(C, #(C, A)), indices ``(d, a, c)``."""

    left: np.ndarray  # (a -> gamma)(c)(d) = a_0 gamma(c . a_{-2})(d . a_{-1})
    right: np.ndarray  # (gamma <- a)(c)(d) = gamma(c)(d) a


def hom_c_hom_ca_actions(d: DoiHopfDatum) -> HomCHomActions:
    f, nA, nC = d.field, d.nA, d.nC
    n = nC * nA * nC
    left = f.einsum("pqza,cup,dvq,yzx->vyudxca", d.rho2, d.act, d.act, d.am).reshape(n, n, nA)
    right = f.reduce(np.einsum("vd,yxa,uc->vyudxca", f.eye(nC), d.am, f.eye(nC)).reshape(n, n, nA))
    return HomCHomActions(left, right)


def act_on(field, action: np.ndarray, vec, gen) -> np.ndarray:
    """Apply an ``[out, in, generator]`` action tensor."""
    return field.einsum("yxg,x,g->y", action, np.asarray(vec, dtype=object), np.asarray(gen, dtype=object))
