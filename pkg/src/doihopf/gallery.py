"""Named examples and the special Doi-Hopf data built from a Hopf algebra.

Everything here is an ordinary constructor returning validated objects from
:mod:`doihopf.hopf` and :mod:`doihopf.datum`.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from itertools import product
from typing import Sequence

import numpy as np

from .datum import (
    ComoduleAlgebra,
    DoiHopfDatum,
    ModuleCoalgebra,
    make_datum,
    regular_comodule_algebra,
    regular_module_coalgebra,
    trivial_action,
    trivial_coaction,
)
from .hopf import (
    HopfAlgebra,
    StructAlgebra,
    StructCoalgebra,
    ValidationReport,
    Failure,
    ensure,
    hopf_from_parts,
    op_hopf,
    tensor_algebra,
    tensor_hopf,
    validate_algebra,
    validate_coalgebra,
    validate_hopf,
)
from .integrals import (
    IntegralSpace,
    compute_space,
    is_member,
    is_normalized,
    require_member,
)
from .linalg import QQ, Field, FieldError, Matrix, GF, in_span, rank, same_span, solve_affine
from .smash import KoppinenAlgebra, SmashProduct, build_koppinen, build_smash, comparison_i, is_algebra_map

# ---------------------------------------------------------------- groups and G-sets


@dataclass(frozen=True, eq=False)
class Group:
    labels: tuple
    table: tuple  # table[i][j] = index of g_i g_j

    def __post_init__(self):
        n = len(self.labels)
        object.__setattr__(self, "labels", tuple(str(x) for x in self.labels))
        object.__setattr__(self, "table", tuple(tuple(int(x) for x in row) for row in self.table))
        if len(self.table) != n or any(len(r) != n for r in self.table):
            raise FieldError("group table is not square")
        if any(not 0 <= x < n for r in self.table for x in r):
            raise FieldError("group table entry out of range")
        t = self.table
        for a, b, c in product(range(n), repeat=3):
            if t[t[a][b]][c] != t[a][t[b][c]]:
                raise FieldError(f"group table is not associative at {self.labels[a]}, {self.labels[b]}, {self.labels[c]}")
        ids = [e for e in range(n) if all(t[e][g] == g == t[g][e] for g in range(n))]
        if not ids:
            raise FieldError("group table has no identity")
        e = ids[0]
        for g in range(n):
            if not any(t[g][h] == e for h in range(n)):
                raise FieldError(f"{self.labels[g]} has no inverse")

    @property
    def order(self) -> int:
        return len(self.labels)

    @property
    def identity(self) -> int:
        t = self.table
        return next(e for e in range(self.order) if all(t[e][g] == g for g in range(self.order)))

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inverse(self, g: int) -> int:
        e = self.identity
        return next(h for h in range(self.order) if self.table[g][h] == e)


def cyclic_group(n: int, gen: str = "g") -> Group:
    labels = ["1"] + [gen if k == 1 else f"{gen}^{k}" for k in range(1, n)]
    return Group(tuple(labels), tuple(tuple((i + j) % n for j in range(n)) for i in range(n)))


@dataclass(frozen=True, eq=False)
class GSet:
    """Finite right G-set; ``action[x][g]`` is the index of ``x . g``."""

    group: Group
    labels: tuple
    action: tuple

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(str(x) for x in self.labels))
        object.__setattr__(self, "action", tuple(tuple(int(v) for v in row) for row in self.action))
        G, n = self.group, len(self.labels)
        if len(self.action) != n or any(len(r) != G.order for r in self.action):
            raise FieldError("G-set action table has the wrong shape")
        for x in range(n):
            if self.action[x][G.identity] != x:
                raise FieldError(f"identity does not fix {self.labels[x]}")
            for g, h in product(range(G.order), repeat=2):
                if self.action[self.action[x][g]][h] != self.action[x][G.mul(g, h)]:
                    raise FieldError(f"(x.g).h != x.(gh) at {self.labels[x]}")

    @property
    def size(self) -> int:
        return len(self.labels)

    def orbits(self) -> list[frozenset]:
        seen, out = set(), []
        for x in range(self.size):
            if x in seen:
                continue
            orb = frozenset(self.action[x])
            seen |= orb
            out.append(orb)
        return out

    def is_g_stable(self, subset) -> bool:
        subset = set(subset)
        return all(self.action[x][g] in subset for x in subset for g in range(self.group.order))


def regular_gset(G: Group) -> GSet:
    return GSet(G, G.labels, G.table)


def point_gset(G: Group) -> GSet:
    return GSet(G, ("pt",), ((0,) * G.order,))


def conjugation_gset(G: Group) -> GSet:
    """``x . g = g^-1 x g``."""
    act = tuple(tuple(G.mul(G.mul(G.inverse(g), x), g) for g in range(G.order)) for x in range(G.order))
    return GSet(G, G.labels, act)


# ---------------------------------------------------------------- basic Hopf algebras


def trivial_algebra(field: Field) -> StructAlgebra:
    return StructAlgebra(field, ("1",), [[[1]]], [1])


def trivial_hopf(field: Field) -> HopfAlgebra:
    return hopf_from_parts(field, ("1",), [[[1]]], [1], [[[1]]], [1], [[1]], name="k")


def group_algebra(field: Field, G: Group, name: str = "") -> HopfAlgebra:
    n = G.order
    m = field.zeros(n, n, n)
    D = field.zeros(n, n, n)
    S = field.zeros(n, n)
    for a, b in product(range(n), repeat=2):
        m[G.mul(a, b), a, b] = 1
    for g in range(n):
        D[g, g, g] = 1
        S[G.inverse(g), g] = 1
    u = field.zeros(n)
    u[G.identity] = 1
    e = field.array([1] * n)
    return hopf_from_parts(field, G.labels, m, u, D, e, S, name=name or f"k{n}")


def grouplike_coalgebra(field: Field, labels: Sequence[str]) -> StructCoalgebra:
    n = len(labels)
    D = field.zeros(n, n, n)
    for x in range(n):
        D[x, x, x] = 1
    return StructCoalgebra(field, tuple(labels), D, field.array([1] * n))


def matrix_coalgebra(field: Field, n: int) -> StructCoalgebra:
    """Comatrix coalgebra: ``Delta(e_ij) = sum_k e_ik (x) e_kj``, ``eps(e_ij) = delta_ij``."""
    labels = tuple(f"e{i + 1}{j + 1}" for i in range(n) for j in range(n))
    N = n * n
    D = field.zeros(N, N, N)
    e = field.zeros(N)
    for i, j in product(range(n), repeat=2):
        e[i * n + j] = 1 if i == j else 0
        for k in range(n):
            D[i * n + k, k * n + j, i * n + j] = 1
    return StructCoalgebra(field, labels, D, e)


def matrix_algebra(field: Field, n: int) -> StructAlgebra:
    labels = tuple(f"E{i + 1}{j + 1}" for i in range(n) for j in range(n))
    N = n * n
    m = field.zeros(N, N, N)
    u = field.zeros(N)
    for i, j, k in product(range(n), repeat=3):
        m[i * n + k, i * n + j, j * n + k] = 1
    for i in range(n):
        u[i * n + i] = 1
    return StructAlgebra(field, labels, m, u)


def sweedler_h4(field: Field) -> HopfAlgebra:
    """Sweedler's algebra: ``g^2 = 1, x^2 = 0, xg = -gx``, ``Delta x = x (x) 1 + g (x) x``."""
    labels = ("1", "g", "x", "gx")
    idx = lambda a, b: a + 2 * b  # g^a x^b
    m = field.zeros(4, 4, 4)
    for a, b, c, d in product(range(2), repeat=4):
        if b + d >= 2:
            continue
        m[idx((a + c) % 2, b + d), idx(a, b), idx(c, d)] = (-1) ** (b * c)
    D = field.zeros(4, 4, 4)
    D[0, 0, 0] = 1
    D[1, 1, 1] = 1
    D[2, 0, 2] = 1
    D[1, 2, 2] = 1
    D[3, 1, 3] = 1
    D[0, 3, 3] = 1
    S = field.zeros(4, 4)
    S[0, 0] = 1
    S[1, 1] = 1
    S[3, 2] = -1
    S[2, 3] = 1
    return hopf_from_parts(field, labels, m, [1, 0, 0, 0], D, [1, 1, 0, 0], field.reduce(S), name="H4")


# ---------------------------------------------------------------- Doi-Hopf data


def trivial_datum(field: Field) -> DoiHopfDatum:
    k = trivial_hopf(field)
    return make_datum(k, trivial_coaction(k, k.algebra), trivial_action(k, k.coalgebra), "(k,k,k)")


def coalgebra_datum(c: StructCoalgebra, name: str = "") -> DoiHopfDatum:
    """``(k, k, C)``: Doi-Hopf modules are just C-comodules."""
    k = trivial_hopf(c.field)
    return make_datum(k, trivial_coaction(k, k.algebra), trivial_action(k, c), name or "(k,k,C)")


def trivial_datum_over(h: HopfAlgebra) -> DoiHopfDatum:
    """``(k, k, H)`` with H regarded as a coalgebra."""
    return coalgebra_datum(h.coalgebra, f"(k,k,{h.name})")


def relative_hopf_datum(h: HopfAlgebra, a: ComoduleAlgebra, name: str = "") -> DoiHopfDatum:
    """``(H, A, H)`` with H acting on itself by right multiplication."""
    return make_datum(h, a, regular_module_coalgebra(h), name or f"({h.name},A,{h.name})")


def long_datum(h: HopfAlgebra) -> DoiHopfDatum:
    """``(H, H, H)`` with A = H via Delta and the trivial action on C = H."""
    return make_datum(h, regular_comodule_algebra(h), trivial_action(h, h.coalgebra), f"Long({h.name})")


def yd_datum(h: HopfAlgebra) -> DoiHopfDatum:
    """``(H (x) H^op, H, H)`` whose Doi-Hopf modules are right-left Yetter-Drinfel'd modules.

    ``rho(h) = h1 (x) S^-1(h3) (x) h2`` and ``l . (h (x) k) = k l h``.
    """
    if not h.antipode_bijective:
        raise FieldError("Yetter-Drinfel'd datum needs a bijective antipode")
    f, n = h.field, h.dim
    big = tensor_hopf(h, op_hopf(h))
    rho = f.einsum("pyrh,qr->pqyh", h.coalgebra.comult2, h.S_inv).reshape(n * n, n, n)
    act = f.einsum("ckx,xlh->clhk", h.m, h.m).reshape(n, n, n * n)
    a = ComoduleAlgebra(h.algebra, big, rho)
    c = ModuleCoalgebra(h.coalgebra, big, act)
    return make_datum(big, a, c, f"YD({h.name})")


# ---------------------------------------------------------------- relative Hopf modules and Doi's integrals


def phi_from_gamma(gamma, d: DoiHopfDatum, check: bool = True) -> Matrix:
    """``phi_gamma(h) = gamma(h)(1)`` as an ``A x H`` matrix."""
    if check:
        require_member(d, "V4", gamma)
    f = d.field
    G = f.array(gamma)
    return Matrix(f, f.einsum("dyh,d->yh", G, d.h.u))


def gamma_from_phi(phi: Matrix, d: DoiHopfDatum) -> np.ndarray:
    """``gamma^phi(h)(k) = phi(h S(k))`` stored as ``G[k, y, h]``."""
    h = d.h
    return d.field.einsum("yx,xhs,sk->kyh", phi.entries, h.m, h.S)


def is_colinear_phi(phi: Matrix, d: DoiHopfDatum) -> bool:
    """``rho_A(phi(h)) = h1 (x) phi(h2)``."""
    f = d.field
    lhs = f.einsum("pyx,xh->pyh", d.rho, phi.entries)
    rhs = f.einsum("pqh,yq->pyh", d.h.D, phi.entries)
    return f.equal(lhs, rhs)


def is_total_phi(phi: Matrix, d: DoiHopfDatum) -> bool:
    return d.field.equal(phi @ d.h.u, d.au)


def rho_phi_central(phi: Matrix, d: DoiHopfDatum) -> bool:
    """``rho(phi(H))`` lies in the centre of the tensor algebra ``H (x) A``."""
    f = d.field
    ha = tensor_algebra(d.h.algebra, d.A)
    images = f.einsum("pyx,xh->hpy", d.rho, phi.entries).reshape(d.nH, -1)
    return all(ha.is_central(v) for v in images)


@dataclass
class GammaPhiReport:
    gamma: np.ndarray
    centrality: bool
    gamma_in_v4: bool
    round_trip: bool
    phi_total: bool
    gamma_normalized: bool

    @property
    def totality_transfer(self) -> bool:
        return self.phi_total == self.gamma_normalized


def gamma_from_phi_report(phi: Matrix, d: DoiHopfDatum) -> GammaPhiReport:
    if not d.h.has_antipode:
        raise FieldError("gamma^phi needs an antipode")
    G = gamma_from_phi(phi, d)
    back = phi_from_gamma(G, d, check=False)
    return GammaPhiReport(
        gamma=G,
        centrality=rho_phi_central(phi, d),
        gamma_in_v4=is_member(d, "V4", G),
        round_trip=back == phi,
        phi_total=is_total_phi(phi, d),
        gamma_normalized=is_normalized(d, "V4", G),
    )


def colinear_phi_space(d: DoiHopfDatum) -> list[np.ndarray]:
    """Basis of the H-colinear maps ``H -> A`` (as flattened ``A x H`` matrices)."""
    f, nA, nH = d.field, d.nA, d.nH
    n = nA * nH
    basis = f.eye(n).reshape(n, nA, nH)
    lhs = f.einsum("pyx,Zxh->Zpyh", d.rho, basis)
    rhs = f.einsum("pqh,Zyq->Zpyh", d.h.D, basis)
    M = f.reduce(lhs - rhs).reshape(n, -1).T
    return list(solve_affine(Matrix(f, M), f.zeros(M.shape[0])).homogeneous_basis)


@dataclass
class DoiRoutes:
    colinear: bool
    total: bool
    values_central: bool
    twisted_trace: bool  # phi(gh) = phi(h S^2 g)
    involutory: bool
    trace_like: bool  # phi(hk) = phi(kh)
    antipode_bijective: bool
    scalar_values: bool
    routes: list = dc_field(default_factory=list)


def check_doi_sufficient_conditions(phi: Matrix, d: DoiHopfDatum) -> DoiRoutes:
    h, f = d.h, d.field
    P = phi.entries
    A = d.A
    S = h.S
    S2 = f.reduce(S.dot(S))
    central = all(A.is_central(P[:, j]) for j in range(d.nH))
    # phi(gh) vs phi(h S^2 g): tensors [y, g, h]
    gh = f.einsum("yx,xgh->ygh", P, h.m)
    hs2g = f.einsum("yx,xhs,sg->ygh", P, h.m, S2)
    hk = gh
    kh = gh.transpose(0, 2, 1)
    scalar = all(in_span(f, A.unit.reshape(1, -1), P[:, j]) for j in range(d.nH))
    r = DoiRoutes(
        colinear=is_colinear_phi(phi, d),
        total=is_total_phi(phi, d),
        values_central=central,
        twisted_trace=f.equal(gh, hs2g),
        involutory=h.is_involutory(),
        trace_like=f.equal(hk, kh),
        antipode_bijective=h.antipode_bijective,
        scalar_values=scalar,
    )
    if r.colinear and r.twisted_trace and r.values_central:
        r.routes.append("phi(gh)=phi(hS^2(g)) with central values")
    if r.colinear and r.involutory and r.values_central and r.trace_like:
        r.routes.append("involutory H, central values, phi(hk)=phi(kh)")
    if r.colinear and r.antipode_bijective and r.scalar_values:
        r.routes.append("bijective antipode, scalar values")
    return r


# ---------------------------------------------------------------- doubles


@dataclass(frozen=True, eq=False)
class DoubleAlgebra:
    h: HopfAlgebra
    d_of_h: HopfAlgebra
    smash: SmashProduct
    koppinen: KoppinenAlgebra
    comparison: Matrix  # D(H) -> Koppinen double, algebra isomorphism

    def comparison_is_isomorphism(self) -> bool:
        return self.comparison.is_invertible() and is_algebra_map(
            self.comparison, self.d_of_h.algebra, self.koppinen.algebra
        )


def heisenberg_double(h: HopfAlgebra) -> StructAlgebra:
    """``H # H*`` for the datum ``(H, H, H)``."""
    d = make_datum(h, regular_comodule_algebra(h), regular_module_coalgebra(h), f"({h.name},{h.name},{h.name})")
    return build_smash(d).algebra


def koppinen_double(h: HopfAlgebra) -> KoppinenAlgebra:
    return build_koppinen(yd_datum(h))


def drinfeld_double(h: HopfAlgebra, validate: bool = True) -> DoubleAlgebra:
    """``D(H)`` realised as the smash product of the Yetter-Drinfel'd datum.

    Basis ``h_a ⋈ p_j`` at ``a * dim H + j``.  ``Delta(h ⋈ f) = (h1 ⋈ f2) (x) (h2 ⋈ f1)``,
    ``eps(h ⋈ f) = eps(h) f(1)``, and the antipode comes from
    ``h ⋈ f = (1 ⋈ f)(h ⋈ eps)``, so ``S(h ⋈ f) = (S h ⋈ eps)(1 ⋈ f o S^-1)``.
    """
    if not h.antipode_bijective:
        raise FieldError("Drinfel'd double needs a bijective antipode")
    f, n = h.field, h.dim
    yd = yd_datum(h)
    sm = build_smash(yd)
    kop = build_koppinen(yd)
    alg = StructAlgebra(f, tuple(f"{a}⋈{b}*" for a in h.labels for b in h.labels), sm.algebra.mult, sm.algebra.unit)
    N = n * n
    D = f.einsum("pqa,jts->psqtaj", h.D, h.m).reshape(N, N, N)
    eps = np.multiply.outer(h.e, h.u).reshape(N)
    # (S h ⋈ eps) and (1 ⋈ p_j o S^-1) as coefficient vectors
    left = f.einsum("ya,t->ayt", h.S, h.e).reshape(n, N)
    right = f.einsum("y,jx->jyx", h.u, h.S_inv).reshape(n, N)
    S = f.zeros(N, N)
    for a in range(n):
        for j in range(n):
            S[:, a * n + j] = alg.mul(left[a], right[j])
    dh = HopfAlgebra(alg, StructCoalgebra(f, alg.labels, D, eps), S, name=f"D({h.name})")
    if validate:
        ensure(validate_hopf(dh))
    return DoubleAlgebra(h, dh, sm, kop, comparison_i(sm, kop))


def _delta_legs(h: HopfAlgebra, k: int) -> np.ndarray:
    f = h.field
    T = h.D  # [x1, x2, x]
    for _ in range(k - 2):
        # expand the last tensor leg with Delta
        T = f.einsum("...ax,pqa->...pqx", T, h.D)
    return T


def quantum_integral_space(h: HopfAlgebra, normalized: bool = False) -> IntegralSpace:
    """Quantum H-integrals built directly from H.

    Unknown ``gamma: H -> End(H)`` stored as ``G[l, y, h]`` (coefficient of
    ``e_y`` in ``gamma(h)(l)``).  Conditions: right H*-linearity with
    ``(f . p)(h) = f(h1)_2 <p, S^-1(f(h1)_3) h2 f(h1)_1>``, and centralization
    ``g3 gamma(S^-1(g5) h g1)(S^-1(g4) l g2) = gamma(h)(l) g``.
    """
    from .integrals import Condition, Normalization, SpaceDef, _system
    from .linalg import AffineSolutionSpace

    if not h.antipode_bijective:
        raise FieldError("quantum integrals need a bijective antipode")
    f, n = h.field, h.dim
    m, D, Si = h.m, h.D, h.S_inv
    D3 = _delta_legs(h, 3)
    D5 = _delta_legs(h, 5)
    # U[o, h, g1, g5]: coefficient of e_o in S^-1(g5) h g1
    U = f.einsum("sf,tsh,otg->ohgf", Si, m, m)
    # W[j, x1, x3, d2]: coefficient of e_j in S^-1(x3) d2 x1
    W = f.einsum("sr,tsd,jtp->jprd", Si, m, m)

    def hstar_linear(X):
        lhs = f.einsum("jqc,Zdyq->Zdycj", D, X)
        rhs = f.einsum("abd,Zaxc,pyrx,jprb->Zdycj", D, X, D3, W)
        return lhs - rhs

    def centralized(X):
        lhs = f.einsum("abcefg,ohaf,qlbe,Zqxo,ycx->Zlyhg", D5, U, U, X, m)
        rhs = f.einsum("Zlxh,yxg->Zlyhg", X, m)
        return lhs - rhs

    def norm(X):
        return f.einsum("pqc,Zqyp->Zyc", D, X)

    sd = SpaceDef(
        "QI",
        (n, n, n),
        (Condition("gamma is right H*-linear", hstar_linear), Condition("g ⇀⇀ gamma = gamma ↼↼ g", centralized)),
        Normalization("sum gamma(h1)(h2) = eps(h) 1", norm, f.array(np.multiply.outer(h.u, h.e))),
    )
    A, b = _system(f, sd, normalized)
    sol = solve_affine(A, b)
    if not normalized:
        sol = AffineSolutionSpace(f, sol.ambient_dim, sol.homogeneous_basis, None)
    return IntegralSpace("QI", None, sol, sd.shape, normalized, sd)


# ---------------------------------------------------------------- G-set graded data


@dataclass(frozen=True, eq=False)
class GSetGradedAlgebra:
    group: Group
    gset: GSet
    algebra: StructAlgebra
    grading: tuple  # group index of each (homogeneous) basis element

    def __post_init__(self):
        object.__setattr__(self, "grading", tuple(int(g) for g in self.grading))
        if len(self.grading) != self.algebra.dim:
            raise FieldError("grading must assign a degree to every basis element")
        if self.gset.group is not self.group:
            raise FieldError("G-set is over a different group")

    def component(self, g: int) -> list[int]:
        return [i for i, d in enumerate(self.grading) if d == g]

    def coaction(self) -> np.ndarray:
        f, n = self.algebra.field, self.algebra.dim
        rho = f.zeros(self.group.order, n, n)
        for a, g in enumerate(self.grading):
            rho[g, a, a] = 1
        return rho

    def is_strongly_graded(self) -> bool:
        """``1 in A_g A_{g^-1}`` for every g."""
        A, G, f = self.algebra, self.group, self.algebra.field
        for g in range(G.order):
            prods = [A.mul(A.basis_vector(i), A.basis_vector(j)) for i in self.component(g) for j in self.component(G.inverse(g))]
            if not prods or not in_span(f, np.array(prods, dtype=object), A.unit):
                return False
        return True


def validate_graded(a: GSetGradedAlgebra) -> ValidationReport:
    rep = ValidationReport("G-graded algebra")
    rep.extend(validate_algebra(a.algebra))
    A, G, f = a.algebra, a.group, a.algebra.field
    for i, j in product(range(A.dim), repeat=2):
        deg = G.mul(a.grading[i], a.grading[j])
        for k in range(A.dim):
            if A.mult[k, i, j] != 0 and a.grading[k] != deg:
                rep.add(Failure("grading is multiplicative", (A.labels[i], A.labels[j])))
                break
    for k in range(A.dim):
        if A.unit[k] != 0 and a.grading[k] != G.identity:
            rep.add(Failure("unit has degree 1", (A.labels[k],)))
    return rep


def gset_datum(a: GSetGradedAlgebra, name: str = "") -> DoiHopfDatum:
    """``(kG, A, kX)``: Doi-Hopf modules are X-graded right A-modules."""
    ensure(validate_graded(a))
    f = a.algebra.field
    G, X = a.group, a.gset
    kG = group_algebra(f, G, name=f"k{G.order}")
    kX = grouplike_coalgebra(f, X.labels)
    act = f.zeros(X.size, X.size, G.order)
    for x in range(X.size):
        for g in range(G.order):
            act[X.action[x][g], x, g] = 1
    ca = ComoduleAlgebra(a.algebra, kG, a.coaction())
    mc = ModuleCoalgebra(kX, kG, act)
    return make_datum(kG, ca, mc, name or "gr-(G,X,A)")


def canonical_gset_integral(d: DoiHopfDatum) -> np.ndarray:
    """``gamma(x)(y) = delta_{x,y} 1_A``."""
    f = d.field
    return f.array(np.einsum("dc,y->dyc", f.eye(d.nC), d.au))


def orbit_dual_integral(d: DoiHopfDatum, subset: Sequence[int]) -> np.ndarray:
    """``z = (1 / #X') sum_{x in X'} x (x) 1_A`` for a finite G-stable ``X'``."""
    f = d.field
    k = f.coerce(len(subset))
    if k == 0:
        raise FieldError(f"#X' = {len(subset)} is not invertible in {f!r}")
    z = f.zeros(d.nC, d.nA)
    w = f.inv(k)
    for x in subset:
        z[x] = f.reduce(z[x] + w * d.au)
    return z


def dual_integral_support(z) -> frozenset:
    z = np.asarray(z, dtype=object)
    return frozenset(i for i in range(z.shape[0]) if any(v != 0 for v in z[i]))


def graded_algebra_from_component_bases(field: Field, group: Group, gset: GSet, mats, grading, labels=None):
    """Algebra spanned by the given (homogeneous) matrices, with structure constants from matrix products."""
    mats = [np.array(mm, dtype=object) for mm in mats]
    k = len(mats)
    flat = np.array([field.array(mm).reshape(-1) for mm in mats], dtype=object)
    if rank(field, flat) != k:
        raise FieldError("matrices are linearly dependent")
    mult = field.zeros(k, k, k)
    B = Matrix(field, flat.T)
    for i, j in product(range(k), repeat=2):
        prod_ = field.reduce(field.array(mats[i]).dot(field.array(mats[j]))).reshape(-1)
        sol = solve_affine(B, prod_)
        if sol.particular is None:
            raise FieldError("matrix span is not closed under multiplication")
        mult[:, i, j] = sol.particular
    ident = field.eye(mats[0].shape[0]).reshape(-1)
    sol = solve_affine(B, ident)
    if sol.particular is None:
        raise FieldError("matrix span does not contain the identity")
    labels = labels or tuple(f"b{i}" for i in range(k))
    alg = StructAlgebra(field, tuple(labels), mult, sol.particular)
    return GSetGradedAlgebra(group, gset, alg, tuple(grading))


M2F2_GRADED_MATRICES = (
    ((1, 0), (0, 1)),
    ((0, 1), (1, 1)),
    ((0, 1), (1, 0)),
    ((1, 1), (0, 1)),
)


def m2f2_graded_algebra() -> GSetGradedAlgebra:
    """``M_2(F_2)`` graded by ``C_2 = {1, c}`` with ``A_1 = <I, [[0,1],[1,1]]>`` and ``A_c = <[[0,1],[1,0]], [[1,1],[0,1]]>``."""
    F2 = GF(2)
    G = cyclic_group(2, "c")
    return graded_algebra_from_component_bases(
        F2, G, regular_gset(G), M2F2_GRADED_MATRICES, (0, 0, 1, 1), ("I", "[[0,1],[1,1]]", "[[0,1],[1,0]]", "[[1,1],[0,1]]")
    )


def m2f2_graded_datum() -> DoiHopfDatum:
    return gset_datum(m2f2_graded_algebra(), "M2(F2) graded by C2")


def m2f2_graded_z() -> np.ndarray:
    """``1 (x) [[0,1],[1,1]] + c (x) [[1,1],[1,0]]``; ``[[1,1],[1,0]] = I + [[0,1],[1,1]]``."""
    F2 = GF(2)
    return F2.array([[0, 1, 0, 0], [1, 1, 0, 0]])


def trivially_graded(field: Field, group: Group, gset: GSet, a: StructAlgebra) -> GSetGradedAlgebra:
    return GSetGradedAlgebra(group, gset, a, (group.identity,) * a.dim)


def group_algebra_graded(field: Field, group: Group, gset: GSet | None = None) -> GSetGradedAlgebra:
    """``kG`` graded by itself (strongly graded)."""
    kG = group_algebra(field, group)
    return GSetGradedAlgebra(group, gset or regular_gset(group), kG.algebra, tuple(range(group.order)))


# ---------------------------------------------------------------- matrix coalgebra integrals


def gamma_mu(mu, field: Field = QQ) -> np.ndarray:
    """``gamma_mu(eps_ij) = sum_k mu_kj e_ki`` for ``(k, k, M^n(k))``; ``G[(a,b), 0, (i,j)] = mu_aj delta_ib``."""
    mu = field.array(mu)
    n = mu.shape[0]
    G = field.zeros(n * n, 1, n * n)
    for i, j, a in product(range(n), repeat=3):
        G[a * n + i, 0, i * n + j] = mu[a, j]
    return G


def matrix_coalgebra_datum(n: int = 2, field: Field = QQ) -> DoiHopfDatum:
    return coalgebra_datum(matrix_coalgebra(field, n), f"(k,k,M^{n})")


# ---------------------------------------------------------------- named fixtures


def qc2() -> HopfAlgebra:
    return group_algebra(QQ, cyclic_group(2), "QC2")


def fc2(p: int) -> HopfAlgebra:
    return group_algebra(GF(p), cyclic_group(2), f"F{p}C2")


def f2c2_dual_datum() -> DoiHopfDatum:
    from .hopf import dual_hopf

    h = fc2(2)
    return coalgebra_datum(dual_hopf(h).coalgebra, "(k,k,(F2C2)*)")


def grouplike_datum(field: Field = QQ, labels=("x", "y")) -> DoiHopfDatum:
    return coalgebra_datum(grouplike_coalgebra(field, labels), "(k,k,kX)")


def fixture_data() -> dict:
    """The named data used across the test suite and the acceptance checks."""
    h = qc2()
    G = cyclic_group(2)
    out = {
        "trivial": trivial_datum(QQ),
        "grouplike": grouplike_datum(),
        "matrix-coalgebra": matrix_coalgebra_datum(2),
        "relative-hopf-qc2": relative_hopf_datum(h, regular_comodule_algebra(h), "(QC2,QC2,QC2)"),
        "relative-hopf-qc2-trivial": relative_hopf_datum(h, trivial_coaction(h, trivial_algebra(QQ)), "(QC2,k,QC2)"),
        "yd-qc2": yd_datum(h),
        "long-qc2": long_datum(h),
        "gset-point": gset_datum(group_algebra_graded(QQ, G, point_gset(G)), "gr-(C2,pt,QC2)"),
        "gset-regular": gset_datum(group_algebra_graded(QQ, G), "gr-(C2,C2,QC2)"),
        "m2f2-graded": m2f2_graded_datum(),
    }
    return out
