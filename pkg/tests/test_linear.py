import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from liftlaw.linear import (
    Comodule,
    ExactField,
    LeftAModule,
    ModuleAlgebra,
    canonical_law,
    check_bialgebra,
    check_comodule,
    check_lb_monad,
    check_LB_compatibility,
    check_left_module,
    check_linear_distlaw,
    check_module_algebra,
    check_right_module,
    check_tensor_monad,
    free_lb_module,
    identity,
    kron,
    lifted_action_direct,
    lifted_action_map,
    linmap,
    module_map_ok,
    permutation,
    regular_comodule,
    regular_module,
    tensor_comodule,
    trivial_comodule,
)
from liftlaw.linear_examples import (
    BundleGenerator,
    cyclic_table,
    f2_shift_instance,
    f3_instance,
    function_bialgebra,
    graded_comodule,
    monoid_bialgebra,
    monoid_tables,
    trivial_module_algebra,
    truncated_polynomials,
    upper_triangular,
)

F2, F3, F5, QQ = ExactField(2), ExactField(3), ExactField(5), ExactField(None)


def _matrices(k, rows, cols):
    entries = st.integers(0, 4) if k.p else st.builds(Fraction, st.integers(-4, 4), st.integers(1, 5))
    return st.lists(st.lists(entries, min_size=cols, max_size=cols), min_size=rows, max_size=rows).map(
        lambda r: linmap(k, r))


def _canonical_law_entrywise(B, A, dim_m, Q):
    """Σ (q1▷a)⊗m⊗q0 summed over basis indices, independent of the matrix pipeline."""
    k = B.field
    dA, dQ, dB = A.dim, Q.dim, B.dim
    n = dA * dim_m * dQ
    out = k.zeros(n, n)
    rho, tri = Q.coaction.mat, A.act.mat
    for a, m, q in itertools.product(range(dA), range(dim_m), range(dQ)):
        for q0, b, a2 in itertools.product(range(dQ), range(dB), range(dA)):
            out[(a2 * dim_m + m) * dQ + q0, (a * dim_m + m) * dQ + q] += rho[q0 * dB + b, q] * tri[a2, b * dA + a]
    return k.reduce(out)


# -- scalars and maps --------------------------------------------------------------------

def test_fields():
    assert F3.scalar(Fraction(1, 2)) == 2
    assert QQ.scalar(3) == Fraction(3)
    assert ExactField.parse("F5") == F5 and ExactField.parse("Q") == QQ
    for bad in ("F4", "R", "F"):
        with pytest.raises(ValueError):
            ExactField.parse(bad)
    with pytest.raises(ValueError):
        ExactField(1)


def test_inverse_over_rationals_and_prime_field():
    P = linmap(QQ, [[2, 1], [1, 1]])
    Pi = linmap(QQ, QQ.inverse(P.mat))
    assert P @ Pi == identity(QQ, 2)
    H = linmap(QQ, [[Fraction(1, i + j + 1) for j in range(3)] for i in range(3)])
    assert H @ linmap(QQ, QQ.inverse(H.mat)) == identity(QQ, 3)
    S = linmap(F3, [[1, 2], [2, 1]])
    with pytest.raises(ValueError):
        F3.inverse(S.mat)


def test_kron_flat_index():
    f = linmap(F5, [[1, 2], [3, 4]])
    g = linmap(F5, [[0, 1, 0], [2, 0, 1]])
    fg = kron(f, g)
    assert (fg.cod, fg.dom) == (4, 6)
    for i, j, r, s in itertools.product(range(2), range(2), range(2), range(3)):
        # column j*3+s is e_j⊗e_s; row i*2+r is e_i⊗e_r (g has 2 rows)
        assert fg.entry(i * 2 + r, j * 3 + s) == (f.entry(i, j) * g.entry(r, s)) % 5


@given(_matrices(F5, 2, 3), _matrices(F5, 3, 2), _matrices(F5, 2, 2), _matrices(F5, 2, 1))
def test_kron_mixed_product_f5(f, h, g, k):
    assert kron(f, g) @ kron(h, k) == kron(f @ h, g @ k)


@given(_matrices(QQ, 2, 2), _matrices(QQ, 2, 2), _matrices(QQ, 1, 2), _matrices(QQ, 2, 1))
def test_kron_mixed_product_rationals(f, h, g, k):
    assert kron(f, g) @ kron(h, k) == kron(f @ h, g @ k)


def test_permutation_swaps_factors():
    f, g = linmap(F5, [[1, 2], [3, 4]]), linmap(F5, [[2, 0, 1]])
    swap_dom = permutation(F5, (2, 3), (1, 0))
    swap_cod = permutation(F5, (2, 1), (1, 0))
    assert swap_cod @ kron(f, g) == kron(g, f) @ swap_dom


def test_text_form():
    assert linmap(F3, [[1, 2], [0, 4]]).to_text() == "2x2 over F3\n1 2\n0 1"


# -- structures --------------------------------------------------------------------------

@pytest.mark.parametrize("k", [F2, F3, QQ])
def test_monoid_and_function_bialgebras(k):
    for table in monoid_tables(3):
        assert check_bialgebra(monoid_bialgebra(k, table)).ok
        assert check_bialgebra(function_bialgebra(k, table)).ok


def test_comult_perturbation_detected():
    B = monoid_bialgebra(F3, cyclic_table(3))
    bad = type(B)(B.field, B.dim, B.mult, B.unit, B.comult.with_entry(1, 0, 1), B.counit)
    assert not check_bialgebra(bad).ok


def test_f2_shift_is_not_a_module_algebra():
    B, A = f2_shift_instance()
    rep = check_module_algebra(B, A)
    assert "module-algebra" in rep.checks()


def test_f3_instance_structures():
    B, A, M, Q = f3_instance()
    assert check_module_algebra(B, A).ok and check_left_module(A, M).ok and check_comodule(B, Q).ok


def test_tensor_comodule_associative_and_unital():
    B = monoid_bialgebra(F3, cyclic_table(3))
    Q1, Q2, Q3 = graded_comodule(B, [0, 1]), graded_comodule(B, [2]), regular_comodule(B)
    for Q in (Q1, Q2, Q3, tensor_comodule(B, Q1, Q3)):
        assert check_comodule(B, Q).ok
    left = tensor_comodule(B, tensor_comodule(B, Q1, Q2), Q3)
    right = tensor_comodule(B, Q1, tensor_comodule(B, Q2, Q3))
    assert left.coaction == right.coaction
    one = trivial_comodule(B)
    assert tensor_comodule(B, Q1, one).coaction == Q1.coaction
    assert tensor_comodule(B, one, Q1).coaction == Q1.coaction


def test_tensor_monad_needs_associative_algebra():
    A = truncated_polynomials(F3, 3)
    for dv in (1, 2):
        assert check_tensor_monad(A.mult, A.unit, A.dim, dv).ok
    # basis 1, x, y with xy = x and every other product of x, y zero
    m = F3.zeros(3, 9)
    for i in range(3):
        m[i, 0 * 3 + i] = m[i, i * 3 + 0] = 1
    m[1, 1 * 3 + 2] = 1
    bad = linmap(F3, m)
    unit = linmap(F3, [[1], [0], [0]])
    rep = check_tensor_monad(bad, unit, 3, 1)
    assert rep.checks() == {"associativity"}


# -- the canonical law -------------------------------------------------------------------

def test_canonical_law_matches_entrywise_sum_on_f3():
    B, A, M, Q = f3_instance()
    assert canonical_law(B, A, M.dim, Q).mat.tolist() == _canonical_law_entrywise(B, A, M.dim, Q).tolist()


def test_trivial_comodule_gives_identity():
    B, A, M, _ = f3_instance()
    one = trivial_comodule(B)
    assert canonical_law(B, A, M.dim, one) == identity(F3, A.dim * M.dim)
    assert lifted_action_map(B, A, M, one).act == M.act


def test_trivial_action_gives_identity():
    B = monoid_bialgebra(F3, cyclic_table(2))
    A = trivial_module_algebra(B, truncated_polynomials(F3, 2))
    Q = regular_comodule(B)
    assert canonical_law(B, A, 2, Q) == identity(F3, 2 * 2 * 2)


def test_canonical_law_natural_in_m():
    B, A, M, Q = f3_instance()
    # scalar multiplication by 2 and the map x -> x·x are A-module maps of the regular module
    IA, IQ = identity(F3, A.dim), identity(F3, Q.dim)
    for f in (linmap(F3, [[2, 0], [0, 2]]), linmap(F3, [[0, 0], [1, 0]])):
        assert module_map_ok(A, M, M, f)
        l = canonical_law(B, A, M.dim, Q)
        assert l @ kron(IA, f, IQ) == kron(IA, f, IQ) @ l


def test_perturbed_law_fails():
    B, A, M, Q = f3_instance()
    l = canonical_law(B, A, M.dim, Q)
    bad = l.with_entry(0, 0, l.entry(0, 0) + 1)
    rep = check_linear_distlaw(bad, B, A, M, Q, [regular_comodule(B)])
    assert not rep.ok and rep.checks() <= {"D1", "D2", "D3", "D4"}


def test_lb_monad_and_compatibility():
    B, A, M, _ = f3_instance()
    assert check_lb_monad(B, A, M).ok
    N, right = free_lb_module(B, A, M)
    assert check_right_module(B, N.dim, right).ok
    assert check_LB_compatibility(B, A, N, right).ok
    bad = right.with_entry(0, 1, right.entry(0, 1) + 1)
    assert not check_LB_compatibility(B, A, N, bad).ok


def test_trivial_b_action_compatibility():
    B = monoid_bialgebra(F3, cyclic_table(3))
    A = trivial_module_algebra(B, upper_triangular(F3))
    assert check_module_algebra(B, A).ok
    M = regular_module(A)
    assert check_lb_monad(B, A, M).ok
    N, right = free_lb_module(B, A, M)
    assert check_LB_compatibility(B, A, N, right).ok


@given(st.integers(0, 10_000))
def test_random_bundles_satisfy_law_and_oracles(seed):
    b = BundleGenerator(seed).draw()
    B, A, M, Q = b.B, b.A, b.M, b.Q
    assert check_module_algebra(B, A).ok, b.description
    l = canonical_law(B, A, M.dim, Q)
    assert l.mat.tolist() == _canonical_law_entrywise(B, A, M.dim, Q).tolist(), b.description
    assert check_linear_distlaw(l, B, A, M, Q, [regular_comodule(B)]).ok, b.description
    lifted = lifted_action_map(B, A, M, Q)
    assert lifted.act == lifted_action_direct(B, A, M, Q)
    assert check_left_module(A, lifted).ok, b.description


def test_module_algebra_shape_error():
    B, A, _, _ = f3_instance()
    wrong = ModuleAlgebra(A.dim, A.mult, A.unit, identity(F3, 2))
    assert "act" in check_module_algebra(B, wrong).checks()
    assert "coaction" in check_comodule(B, Comodule(2, identity(F3, 2))).checks()
    assert "act" in check_left_module(A, LeftAModule(2, identity(F3, 2))).checks()
