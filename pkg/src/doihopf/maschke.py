"""Separability verdicts and Maschke-type splittings for Doi-Hopf modules."""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .datum import (
    DoiHopfDatum,
    DoiHopfModule,
    adjunction_unit,
    is_a_linear,
    morphism_failures,
)
from .hopf import Failure, ValidationError, ValidationReport
from .integrals import compute_dual_integrals, compute_space, failed_conditions, is_normalized, require_member
from .linalg import FieldError, Matrix, in_span


class Functor(str, enum.Enum):
    FORGETFUL = "Forgetful"
    INDUCTION = "Induction"


class Separable(str, enum.Enum):
    YES = "yes"
    NO = "no"
    # an integral is only known to be sufficient (no antipode on H)
    SUFFICIENT_ONLY = "sufficient-only"


@dataclass(frozen=True)
class SeparabilityVerdict:
    functor: Functor
    separable: Separable
    certificate: np.ndarray | None = None
    space: object = None

    def __post_init__(self):
        if self.separable is Separable.YES and self.certificate is None:
            raise FieldError("a positive verdict needs a certificate")


def _reject(subject: str, identity: str, detail: str = ""):
    rep = ValidationReport(subject)
    rep.add(Failure(identity, (), detail))
    raise ValidationError(rep)


def nu_component(gamma, m: DoiHopfModule, check: bool = True) -> Matrix:
    """``nu_M(c (x) m) = m_0 . gamma(c)(m_{-1})`` as a matrix ``C (x) M -> M``.

    Columns are indexed by ``c * dim M + m``, matching :func:`induced_module`.
    """
    d = m.datum
    if check:
        require_member(d, "V4", gamma)
    f = d.field
    G = f.array(gamma)
    if G.shape != (d.nC, d.nA, d.nC):
        raise FieldError(f"gamma has shape {G.shape}, expected {(d.nC, d.nA, d.nC)}")
    nu = f.einsum("dxm,dyc,zxy->zcm", m.coaction, G, m.action)
    return Matrix(f, nu.reshape(m.dim, d.nC * m.dim))


def splits_unit(gamma, m: DoiHopfModule) -> bool:
    """``nu_M o rho_M = I_M``."""
    nu = nu_component(gamma, m, check=False)
    return nu @ adjunction_unit(m) == Matrix.identity(m.field, m.dim)


def _tensor_with_c(d: DoiHopfDatum, r: Matrix) -> Matrix:
    f = d.field
    return Matrix(f, np.kron(f.eye(d.nC), r.entries).astype(object))


def _deform(r: Matrix, src: DoiHopfModule, dst: DoiHopfModule, gamma) -> Matrix:
    """``nu_dst o (I_C (x) r) o rho_src``."""
    d = src.datum
    return nu_component(gamma, dst, check=False) @ _tensor_with_c(d, r) @ adjunction_unit(src)


def _common_checks(u: Matrix, m: DoiHopfModule, n: DoiHopfModule, gamma, subject: str):
    d = m.datum
    if n.datum is not d:
        _reject(subject, "modules over the same datum")
    bad = failed_conditions(d, "V4", gamma)
    if bad:
        _reject(subject, bad[0], "gamma is not an A-integral")
    if not is_normalized(d, "V4", gamma):
        _reject(subject, "sum gamma(c1)(c2) = eps(c) 1", "gamma is not total")
    fails = morphism_failures(u, m, n)
    if fails:
        _reject(subject, f"u is a Doi-Hopf morphism ({', '.join(fails)})")


def lift_retraction(u: Matrix, m: DoiHopfModule, n: DoiHopfModule, r: Matrix, gamma) -> Matrix:
    """Deform an A-linear retraction ``r`` of ``u: M -> N`` into a Doi-Hopf retraction."""
    subject = "retraction lift"
    _common_checks(u, m, n, gamma, subject)
    if r.shape != (m.dim, n.dim):
        raise FieldError(f"retraction has shape {r.shape}, expected {(m.dim, n.dim)}")
    if not is_a_linear(r, n.right_module, m.right_module):
        _reject(subject, "r is A-linear")
    if r @ u != Matrix.identity(m.field, m.dim):
        _reject(subject, "r o u = I")
    rt = _deform(r, n, m, gamma)
    fails = morphism_failures(rt, n, m)
    if fails or rt @ u != Matrix.identity(m.field, m.dim):
        _reject(subject, "lifted retraction is a Doi-Hopf retraction", ", ".join(fails))
    return rt


def lift_section(u: Matrix, m: DoiHopfModule, n: DoiHopfModule, s: Matrix, gamma) -> Matrix:
    """Deform an A-linear section ``s`` of ``u: M -> N`` into a Doi-Hopf section.

    The same deformation works: ``u o nu_M o (I (x) s) o rho_N = nu_N o (I (x) us) o rho_N``
    by naturality of ``nu``, and that is ``nu_N o rho_N = I``.
    """
    subject = "section lift"
    _common_checks(u, m, n, gamma, subject)
    if s.shape != (m.dim, n.dim):
        raise FieldError(f"section has shape {s.shape}, expected {(m.dim, n.dim)}")
    if not is_a_linear(s, n.right_module, m.right_module):
        _reject(subject, "s is A-linear")
    if u @ s != Matrix.identity(m.field, n.dim):
        _reject(subject, "u o s = I")
    st = _deform(s, n, m, gamma)
    fails = morphism_failures(st, n, m)
    if fails or u @ st != Matrix.identity(m.field, n.dim):
        _reject(subject, "lifted section is a Doi-Hopf section", ", ".join(fails))
    return st


def decide_separability(d: DoiHopfDatum, functor: Functor | str) -> SeparabilityVerdict:
    functor = Functor(functor)
    if functor is Functor.FORGETFUL:
        sp = compute_space(d, "V4", normalized=True)
        if sp.has_normalized:
            return SeparabilityVerdict(functor, Separable.YES, sp.particular(), sp)
        # without an antipode only "integral => separable" is available
        verdict = Separable.NO if d.h.has_antipode else Separable.SUFFICIENT_ONLY
        return SeparabilityVerdict(functor, verdict, None, sp)
    sp = compute_dual_integrals(d, normalized=True)
    if sp.has_normalized:
        return SeparabilityVerdict(functor, Separable.YES, sp.particular(), sp)
    return SeparabilityVerdict(functor, Separable.NO, None, sp)


# ---------------------------------------------------------------- separable extensions


def balanced_relations(d: DoiHopfDatum, b_basis) -> np.ndarray:
    """Spanning set of the kernel of ``A (x) A -> A (x)_B A``: ``xb (x) y - x (x) by``."""
    f, n, A = d.field, d.nA, d.A
    rows = []
    for b in b_basis:
        Rb = A.right_mult(b)  # [k, j]: (e_j b) on e_k
        Lb = A.left_mult(b)
        for x in range(n):
            for y in range(n):
                v = f.zeros(n, n)
                v[:, y] = f.reduce(v[:, y] + Rb[:, x])
                v[x, :] = f.reduce(v[x, :] - Lb[:, y])
                rows.append(v.reshape(-1))
    return np.array(rows, dtype=object).reshape(-1, n * n)


def separability_idempotent_failures(e, d: DoiHopfDatum, b_basis=None) -> list[str]:
    f, n, A = d.field, d.nA, d.A
    E = f.array(e).reshape(n, n)
    if b_basis is None:
        b_basis = d.a.coinvariants()
    K = balanced_relations(d, b_basis)
    out = []
    for a in range(n):
        ae = f.einsum("kx,xy->ky", A.left_mult(A.basis_vector(a)), E)
        ea = f.einsum("xy,ky->xk", E, A.right_mult(A.basis_vector(a)))
        diff = f.reduce(ae - ea).reshape(-1)
        if not f.is_zero(diff) and not in_span(f, K, diff):
            out.append(f"a e1 (x) e2 = e1 (x) e2 a over B fails at a = {A.labels[a]}")
            break
    if not f.equal(f.einsum("kxy,xy->k", A.mult, E), d.au):
        out.append("sum e1 e2 = 1")
    return out


def dual_integral_from_separability_idempotent(e, d: DoiHopfDatum, b_basis=None) -> np.ndarray:
    """``z = sum e2_{-1} (x) e1 e2_0`` in ``C (x) A = H (x) A``."""
    fails = separability_idempotent_failures(e, d, b_basis)
    if fails:
        _reject("separability idempotent", fails[0])
    f, n = d.field, d.nA
    if d.nC != d.nH or not f.equal(d.act, d.h.m):
        raise FieldError("expects a relative Hopf datum (H, A, H)")
    E = f.array(e).reshape(n, n)
    z = f.einsum("xy,cvy,wxv->cw", E, d.rho, d.am)
    require_member(d, "W1", z)
    if not is_normalized(d, "W1", z):
        _reject("separability idempotent", "sum eps(c) a = 1 for z", "image is not normalized")
    return z

