from itertools import product

import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import fixture, fixture_names
from doihopf.datum import (
    adjunction_unit,
    ca_module,
    check_morphism,
    direct_sum,
    is_a_linear,
    make_datum,
    morphism_failures,
    trivial_action,
    trivial_coaction,
)
from doihopf.gallery import (
    m2f2_graded_datum,
    f2c2_dual_datum,
    fc2,
    gamma_mu,
    group_algebra,
    cyclic_group,
    long_datum,
    matrix_coalgebra_datum,
    trivial_datum,
)
from doihopf.hopf import ValidationError, dual_hopf, hopf_from_parts
from doihopf.integrals import compute_dual_integrals, compute_space, is_member, is_normalized
from doihopf.linalg import GF, QQ, Matrix, nullspace, solve_affine
from doihopf.maschke import (
    Functor,
    Separable,
    SeparabilityVerdict,
    decide_separability,
    dual_integral_from_separability_idempotent,
    lift_retraction,
    lift_section,
    nu_component,
    separability_idempotent_failures,
    splits_unit,
)

F2, F3 = GF(2), GF(3)


def total_gamma(d):
    return compute_space(d, "V4", normalized=True).particular()


def a_linear_maps(src, dst):
    """Basis of the A-linear maps between the underlying right A-modules."""
    f = src.field
    k = dst.dim * src.dim
    basis = f.eye(k).reshape(k, dst.dim, src.dim)
    res = f.einsum("Zyx,xma->Zyma", basis, src.action) - f.einsum("yxa,Zxm->Zyma", dst.action, basis)
    A = Matrix(f, f.reduce(res).reshape(k, -1).T)
    return [Matrix(f, v.reshape(dst.dim, src.dim)) for v in nullspace(A)]


def block(f, *rows):
    return Matrix(f, np.block([[m.entries for m in r] for r in rows]).astype(object))


def diag_and_projections(m):
    f = m.field
    n = direct_sum(m, m)
    I, Z = Matrix.identity(f, m.dim), Matrix.zero(f, m.dim, m.dim)
    u = block(f, [I], [I])  # m -> (m, m)
    return n, u, I, Z


@pytest.mark.parametrize("name", fixture_names())
def test_nu_splits_the_coaction(name):
    d = fixture(name)
    g = total_gamma(d)
    m = ca_module(d)
    assert splits_unit(g, m)
    assert splits_unit(g, direct_sum(m, m))


@pytest.mark.parametrize("name", fixture_names())
def test_nu_is_natural(name):
    d = fixture(name)
    f = d.field
    g = compute_space(d, "V4").basis()[-1]
    m = ca_module(d)
    n, u, _, _ = diag_and_projections(m)
    for phi, src, dst in [(u, m, n), (adjunction_unit(m), m, None)]:
        if dst is None:
            from doihopf.datum import induced_module

            dst = induced_module(d, m.right_module)
        assert check_morphism(phi, src, dst)
        lhs = phi @ nu_component(g, src)
        cphi = Matrix(f, np.kron(f.eye(d.nC), phi.entries).astype(object))
        assert lhs == nu_component(g, dst) @ cphi


@given(st.lists(st.integers(-4, 4), min_size=4, max_size=4))
def test_gamma_mu_on_matrix_coalgebra(entries):
    d = matrix_coalgebra_datum(2)
    mu = np.array(entries, dtype=object).reshape(2, 2)
    g = gamma_mu(mu)
    assert is_member(d, "V4", g)
    total = (mu[0, 0] + mu[1, 1]) == 1
    assert is_normalized(d, "V4", g) is total
    assert splits_unit(g, ca_module(d)) is total


def test_gamma_mu_spans_v4():
    d = matrix_coalgebra_datum(2)
    sp = compute_space(d, "V4")
    assert sp.dim == 4
    for a, b in product(range(2), repeat=2):
        mu = np.zeros((2, 2), dtype=object)
        mu[a, b] = 1
        assert sp.contains(gamma_mu(mu))


@pytest.mark.parametrize("name", fixture_names())
@given(data=st.data())
def test_splitting_is_equivalent_to_totality(name, data):
    d = fixture(name)
    sp = compute_space(d, "V4")
    coeffs = data.draw(st.lists(st.integers(-2, 2), min_size=sp.dim, max_size=sp.dim))
    g = sp.tensor(sp.space.element(coeffs))
    assert splits_unit(g, ca_module(d)) is is_normalized(d, "V4", g)


@pytest.mark.parametrize("name", fixture_names())
def test_lift_retraction_of_diagonal(name):
    d = fixture(name)
    f = d.field
    m = ca_module(d)
    n, u, I, Z = diag_and_projections(m)
    g = total_gamma(d)
    # an A-linear retraction (I + X, -X) that is not colinear whenever X is not
    xs = [x for x in a_linear_maps(m, m) if morphism_failures(x, m, m)]
    x = xs[0] if xs else Z
    r = block(f, [I + x, -x])
    assert is_a_linear(r, n.right_module, m.right_module) and r @ u == I
    rt = lift_retraction(u, m, n, r, g)
    assert check_morphism(rt, n, m) and rt @ u == I


def test_lift_retraction_over_f3_slice():
    d = long_datum(fc2(3))
    f = d.field
    m = ca_module(d)
    n, u, I, _ = diag_and_projections(m)
    g = total_gamma(d)
    # the A-linear r: N -> M with r u = I form an affine space; enumerate a 5-dim slice of it
    base = a_linear_maps(n, m)
    k = len(base)
    A = Matrix(f, f.array(np.array([(b @ u).entries.reshape(-1) for b in base]).T))
    sol = solve_affine(A, I.entries.reshape(-1))
    count = 0
    free = min(sol.dim, 5)
    for coeffs in product(range(3), repeat=free):
        c = sol.element(list(coeffs) + [0] * (sol.dim - free))
        r = Matrix(f, f.reduce(sum((c[i] * base[i].entries for i in range(k)), f.zeros(m.dim, n.dim))))
        assert r @ u == I
        rt = lift_retraction(u, m, n, r, g)
        assert check_morphism(rt, n, m) and rt @ u == I
        count += 1
    assert count == 3**free and sol.dim >= 5


@pytest.mark.parametrize("name", fixture_names())
def test_lift_section_of_projection(name):
    d = fixture(name)
    f = d.field
    m = ca_module(d)
    n, _, I, Z = diag_and_projections(m)
    proj = block(f, [I, Z])  # (m, m) -> m
    xs = [x for x in a_linear_maps(m, m) if morphism_failures(x, m, m)]
    s = block(f, [I], [xs[0] if xs else Z])
    assert proj @ s == I
    st_ = lift_section(proj, n, m, s, total_gamma(d))
    assert check_morphism(st_, m, n) and proj @ st_ == I


def test_non_total_gamma_is_refused():
    d = matrix_coalgebra_datum(2)
    m = ca_module(d)
    n, u, I, Z = diag_and_projections(m)
    g = gamma_mu([[1, 0], [0, 1]])  # trace 2
    with pytest.raises(ValidationError) as exc:
        lift_retraction(u, m, n, block(QQ, [I, Z]), g)
    assert "sum gamma(c1)(c2) = eps(c) 1" in str(exc.value)


def test_bad_inputs_are_refused():
    d = matrix_coalgebra_datum(2)
    m = ca_module(d)
    n, u, I, Z = diag_and_projections(m)
    g = gamma_mu([[1, 0], [0, 0]])
    with pytest.raises(ValidationError) as exc:
        lift_retraction(u, m, n, block(QQ, [Z, Z]), g)
    assert "r o u = I" in str(exc.value)
    with pytest.raises(ValidationError) as exc:
        lift_retraction(block(QQ, [I], [Z]) @ Matrix(QQ, np.ones((4, 4), dtype=object)), m, n, block(QQ, [I, Z]), g)
    assert "Doi-Hopf morphism" in str(exc.value)


def test_separability_idempotent_of_qc2():
    d = fixture("relative-hopf-qc2")
    half = QQ.coerce("1/2")
    e = np.array([[half, 0], [0, half]], dtype=object)  # (1 (x) 1 + g (x) g) / 2
    assert separability_idempotent_failures(e, d) == []
    z = dual_integral_from_separability_idempotent(e, d)
    assert QQ.equal(z, [[half, 0], [half, 0]])
    bad = np.array([[1, 0], [0, 0]], dtype=object)
    assert separability_idempotent_failures(bad, d)
    with pytest.raises(ValidationError):
        dual_integral_from_separability_idempotent(bad, d)


def test_separability_idempotent_trivial():
    k = group_algebra(QQ, cyclic_group(1))
    from doihopf.gallery import relative_hopf_datum
    from doihopf.datum import regular_comodule_algebra

    d = relative_hopf_datum(k, regular_comodule_algebra(k))
    z = dual_integral_from_separability_idempotent([[1]], d)
    assert QQ.equal(z, [[1]])


def test_m2f2_graded_separability_idempotents_by_enumeration():
    d = m2f2_graded_datum()
    f, n, A = d.field, d.nA, d.A
    B = d.a.coinvariants()
    assert len(B) == 2
    # enumerate e in A (x) A over F2 against the balanced quotient A (x)_B A
    from doihopf.maschke import balanced_relations

    K = balanced_relations(d, B)
    Q = np.array(nullspace(Matrix(f, f.array(K))), dtype=np.int64)  # functionals killing K
    cands = ((np.arange(2 ** (n * n))[:, None] >> np.arange(n * n)) & 1).reshape(-1, n, n)
    am = np.array(A.mult, dtype=np.int64)
    ok = np.ones(len(cands), dtype=bool)
    for a in range(n):
        ae = np.einsum("kx,Zxy->Zky", am[:, a, :], cands)
        ea = np.einsum("Zxy,ky->Zxk", cands, am[:, :, a])
        ok &= ((np.einsum("qv,Zv->Zq", Q, (ae - ea).reshape(len(cands), -1)) % 2) == 0).all(axis=1)
    ok &= (np.einsum("kxy,Zxy->Zk", am, cands) % 2 == np.array(d.au, dtype=np.int64)).all(axis=1)
    found = cands[ok]
    assert len(found) > 0
    for e in found[:: max(1, len(found) // 8)]:
        e = f.array(e)
        assert separability_idempotent_failures(e, d) == []
        z = dual_integral_from_separability_idempotent(e, d)
        assert is_member(d, "W1", z) and is_normalized(d, "W1", z)


@pytest.mark.parametrize("name", fixture_names())
def test_verdicts_on_fixtures(name):
    d = fixture(name)
    for functor in Functor:
        v = decide_separability(d, functor)
        assert v.separable is Separable.YES and v.certificate is not None


def test_verdicts_on_f2c2_dual():
    d = f2c2_dual_datum()
    assert decide_separability(d, "Forgetful").separable is Separable.NO
    assert decide_separability(d, "Induction").separable is Separable.YES


def test_sufficient_only_without_antipode():
    # the multiplicative monoid {1, z} with z^2 = z gives a bialgebra with no antipode
    m = np.zeros((2, 2, 2), dtype=object)
    m[0, 0, 0] = m[1, 0, 1] = m[1, 1, 0] = m[1, 1, 1] = 1
    comult = np.zeros((2, 2, 2), dtype=object)
    comult[0, 0, 0] = comult[1, 1, 1] = 1
    h = hopf_from_parts(F2, ("1", "z"), m, [1, 0], comult, [1, 1], name="F2{1,z}")
    assert not h.has_antipode
    c = dual_hopf(fc2(2)).coalgebra
    d = make_datum(h, trivial_coaction(h, trivial_datum(F2).A), trivial_action(h, c))
    v = decide_separability(d, Functor.FORGETFUL)
    assert v.separable is Separable.SUFFICIENT_ONLY and v.certificate is None


def test_positive_verdict_needs_certificate():
    with pytest.raises(ValueError):
        SeparabilityVerdict(Functor.FORGETFUL, Separable.YES)
