from itertools import product

import numpy as np
import pytest

from conftest import fixture, fixture_names
from doihopf.datum import (
    ComoduleAlgebra,
    DoiHopfModule,
    ModuleCoalgebra,
    adjunction_counit,
    adjunction_unit,
    ca_module,
    check_morphism,
    direct_sum,
    induced_module,
    make_datum,
    make_module,
    morphism_failures,
    regular_right_module,
    RightModule,
    smash_action,
    triangle_action,
    validate_datum,
    validate_module,
)
from doihopf.gallery import (
    cyclic_group,
    group_algebra,
    point_gset,
    group_algebra_graded,
    gset_datum,
    qc2,
    trivial_datum,
    yd_datum,
    grouplike_datum,
)
from doihopf.hopf import ValidationError
from doihopf.linalg import GF, QQ, Matrix, same_span, solve_affine
from doihopf.smash import build_smash, build_koppinen

F3 = GF(3)


def trivial_module(d):
    k = RightModule(d.A, ("1",), d.field.array([[[1]]]))
    return induced_module(d, k)


def test_named_data_are_valid():
    assert validate_datum(trivial_datum(QQ)).ok
    assert validate_datum(yd_datum(qc2())).ok
    G = cyclic_group(2)
    assert validate_datum(gset_datum(group_algebra_graded(QQ, G, point_gset(G)))).ok


def test_yd_structure_on_group_elements():
    # for a group basis: rho(g) = g (x) g^-1 (x) g and l.(h (x) k) = k l h
    G = cyclic_group(3)
    h = group_algebra(QQ, G)
    d = yd_datum(h)
    n = G.order
    for g in range(n):
        expected = np.zeros((n * n, n), dtype=object)
        expected[g * n + G.inverse(g), g] = 1
        assert QQ.equal(d.rho[:, :, g], expected)
    for l, a, b in product(range(n), repeat=3):
        col = d.act[:, l, a * n + b]
        assert list(np.nonzero(col)[0]) == [G.mul(G.mul(b, l), a)]


def test_mixed_hopf_rejected():
    h = qc2()
    d = trivial_datum(QQ)
    with pytest.raises(Exception):
        make_datum(h, d.a, d.c)


def test_invalid_comodule_algebra_rejected():
    h = qc2()
    bad = ComoduleAlgebra(h.algebra, h, np.einsum("h,xa->hxa", [0, 1], QQ.eye(2)))  # rho(a) = g (x) a
    from doihopf.datum import regular_module_coalgebra

    with pytest.raises(ValidationError) as exc:
        make_datum(h, bad, regular_module_coalgebra(h))
    assert "A: " in str(exc.value)


def test_induced_trivial():
    d = trivial_datum(QQ)
    m = trivial_module(d)
    assert m.dim == 1 and m.coaction_matrix == Matrix.identity(QQ, 1)


def test_induced_grouplike():
    d = grouplike_datum()
    m = trivial_module(d)
    assert m.dim == 2
    # coaction is Delta: x -> x (x) x
    assert QQ.equal(m.coaction[:, :, 0], [[1, 0], [0, 0]])
    assert QQ.equal(m.coaction[:, :, 1], [[0, 0], [0, 1]])
    assert QQ.equal(m.action[:, :, 0], QQ.eye(2))


def test_induced_yd_module_is_compatible():
    d = yd_datum(qc2())
    m = induced_module(d, regular_right_module(d.A))
    assert m.dim == 4 and validate_module(m).ok


def test_broken_compatibility_rejected():
    d = grouplike_datum()
    m = trivial_module(d)
    # x -> x (x) y is not coassociative
    co = m.coaction.copy()
    co[:, :, 0] = [[0, 1], [0, 0]]
    with pytest.raises(ValidationError):
        make_module(d, m.labels, m.action, co)


@pytest.mark.parametrize("name", fixture_names())
def test_check_morphism_basics(name):
    d = fixture(name)
    m = ca_module(d)
    f = m.field
    assert check_morphism(Matrix.identity(f, m.dim), m, m)
    assert check_morphism(Matrix.zero(f, m.dim, m.dim), m, m)
    gm = induced_module(d, m.right_module)
    assert check_morphism(adjunction_unit(m), m, gm)
    with pytest.raises(Exception):
        check_morphism(Matrix.identity(f, m.dim + 1), m, m)


@pytest.mark.parametrize("name", fixture_names())
def test_adjunction_triangles(name):
    d = fixture(name)
    f = d.field
    m = ca_module(d)
    # delta_{FM} o F(rho_M) = I
    assert adjunction_counit(m.right_module, d) @ adjunction_unit(m) == Matrix.identity(f, m.dim)
    # G(delta_N) o rho_{GN} = I
    n = m.right_module
    gn = induced_module(d, n)
    counit = adjunction_counit(n, d)
    g_delta = Matrix(f, np.kron(f.eye(d.nC), counit.entries).astype(object))
    assert g_delta @ adjunction_unit(gn) == Matrix.identity(f, gn.dim)
    from doihopf.datum import is_a_linear

    assert is_a_linear(counit, gn.right_module, n)


def test_smash_action_on_grouplike_example():
    d = grouplike_datum()
    m = ca_module(d)
    s = smash_action(m)
    # element (x (x) 1) is basis 0; e_x = p_0, e_y = p_1, A = k
    assert list(s[:, 0, 0]) == [1, 0]
    assert list(s[:, 0, 1]) == [0, 0]


@pytest.mark.parametrize("name", fixture_names())
def test_smash_action_is_an_action(name):
    d = fixture(name)
    m = ca_module(d)
    f = d.field
    sp = build_smash(d).algebra
    s = smash_action(m)
    unit = f.einsum("ymg,g->ym", s, sp.unit)
    assert f.equal(unit, f.eye(m.dim))
    lhs = f.einsum("yxv,xmu->ymuv", s, s)  # (m.u).v
    rhs = f.einsum("ymw,wuv->ymuv", s, sp.mult)  # m.(uv)
    assert f.equal(lhs, rhs)
    t = triangle_action(m)
    kop = build_koppinen(d).algebra
    assert f.equal(f.einsum("yxv,xmu->ymuv", t, t), f.einsum("ymw,wuv->ymuv", t, kop.mult))


def _hom_space(m, n, conditions):
    """Solution space of all linear maps M -> N satisfying ``conditions(F)`` (batched)."""
    f = m.field
    k = n.dim * m.dim
    basis = f.eye(k).reshape(k, n.dim, m.dim)
    rows = [f.reduce(c(basis)).reshape(k, -1).T for c in conditions]
    A = np.vstack(rows)
    return solve_affine(Matrix(f, A), f.zeros(A.shape[0]))


@pytest.mark.parametrize("name", fixture_names())
def test_doi_hopf_maps_are_exactly_smash_linear_maps(name):
    d = fixture(name)
    f = d.field
    m = ca_module(d)
    n = direct_sum(m, m) if d.nC * d.nA <= 4 else m
    sm, sn = smash_action(m), smash_action(n)

    def a_linear(F):
        return f.einsum("Zyx,xma->Zyma", F, m.action) - f.einsum("yxa,Zxm->Zyma", n.action, F)

    def colinear(F):
        return f.einsum("cyx,Zxm->Zcym", n.coaction, F) - f.einsum("Zyx,cxm->Zcym", F, m.coaction)

    def smash_linear(F):
        return f.einsum("Zyx,xmg->Zymg", F, sm) - f.einsum("yxg,Zxm->Zymg", sn, F)

    dh = _hom_space(m, n, [a_linear, colinear])
    smash = _hom_space(m, n, [smash_linear])
    assert dh.dim == smash.dim
    assert same_span(f, dh.basis_matrix(), smash.basis_matrix())
    for v in dh.homogeneous_basis:
        assert check_morphism(Matrix(f, v.reshape(n.dim, m.dim)), m, n)


def test_morphism_failures_name_the_violation():
    d = grouplike_datum()
    m = trivial_module(d)
    swap = Matrix(QQ, [[0, 1], [1, 0]])
    assert morphism_failures(swap, m, m) == ["C-colinearity"]
