"""Identity checkers: positives, refutations, witness soundness."""

from fractions import Fraction

import pytest

from rotabaxter.algebra import DomainSpec
from rotabaxter.algebras import laurent, make_matrix_algebra, polynomial
from rotabaxter.checks import (
    check_idempotent,
    check_image_closure,
    check_lie_modified,
    check_modified_rbr,
    check_nijenhuis,
    check_rbr,
    find_violation,
    identity_sides,
    violation_report,
)
from rotabaxter.errors import UnsupportedDomainError
from rotabaxter.operators import (
    make_identity_operator,
    make_integration,
    make_miller,
    make_rms,
    make_rms_opposite,
    make_shift_truncation,
    matrix_operator,
    modified_of,
    nijenhuis_family,
    opposite_of,
    scale_operator,
)
from rotabaxter.report import dumps_reports
from rotabaxter.suite import borel_projector_m2

L = laurent()
P = polynomial()
MS = make_rms()
MS_OPP = make_rms_opposite()
INTEG = make_integration()
ONE = Fraction(1)


def truncation_residual_on_monomials(r, lam, i, j):
    """Closed-form residual of the Rota-Baxter relation for the
    truncation R_r on z^i, z^j: keep(e) = 1 iff e <= r."""
    keep = lambda e: 1 if e <= r else 0
    s = i + j
    lhs = keep(i) * keep(j) + lam * keep(s)
    rhs = keep(s) * (keep(i) + keep(j))
    return lhs - rhs  # coefficient of z^(i+j)


def test_rbr_worked_example_pole_pair():
    x = y = L.monomial(-1)
    sides = identity_sides("rbr", L, MS, ONE)
    lhs, rhs = sides(x, y)
    assert lhs == L.element({-2: 2})
    assert rhs == L.element({-2: 2})


def test_rbr_worked_example_integration():
    sides = identity_sides("rbr", P, INTEG, Fraction(0))
    one = P.monomial(0)
    lhs, rhs = sides(one, one)
    assert lhs == P.element({2: 1})
    assert rhs == P.element({2: 1})


def test_rbr_truncation_fails_with_recorded_witness():
    r1 = make_shift_truncation(1)
    report = check_rbr(L, r1, ONE, DomainSpec.basis(-4, 4))
    assert not report.passed
    w = report.witness
    # witness soundness: both sides re-evaluate to the recorded values
    sides = identity_sides("rbr", L, r1, ONE)
    lhs, rhs = sides(*w.inputs)
    assert (lhs, rhs) == (w.lhs, w.rhs)
    assert lhs - rhs == w.diff and not w.diff.is_zero


def test_rbr_truncations_match_closed_form_oracle():
    for r in (-3, -2, -1, 0, 1, 2, 3):
        op = make_shift_truncation(r)
        expected_ok = all(
            truncation_residual_on_monomials(r, 1, i, j) == 0
            for i in range(-4, 5) for j in range(-4, 5))
        report = check_rbr(L, op, ONE, DomainSpec.basis(-4, 4))
        assert report.passed == expected_ok, f"r={r}"


def test_modified_rbr_worked_examples():
    b = modified_of(MS)
    sides = identity_sides("modified-rbr", L, b, ONE)
    zm = L.monomial(-1)
    lhs, rhs = sides(zm, zm)
    assert lhs == L.monomial(-2) and rhs == L.monomial(-2)
    z = L.monomial(1)
    lhs, rhs = sides(z, z)
    assert lhs == L.monomial(2) and rhs == L.monomial(2)


def test_modified_rbr_weight_zero_case():
    b = modified_of(INTEG)  # B = -2R at weight 0
    assert check_modified_rbr(P, b, Fraction(0), DomainSpec.basis(0, 6)).passed


def test_nijenhuis_worked_examples():
    n2 = nijenhuis_family(MS, 2)
    sides = identity_sides("nijenhuis", L, n2, ONE)
    lhs, rhs = sides(L.monomial(-1), L.monomial(1))
    assert lhs == L.element({0: 2}) and rhs == L.element({0: 2})
    lhs, rhs = sides(L.monomial(1), L.monomial(1))
    assert lhs == L.element({2: 8}) and rhs == L.element({2: 8})
    n1 = nijenhuis_family(MS, 1)
    sides = identity_sides("nijenhuis", L, n1, ONE)
    lhs, rhs = sides(L.monomial(0), L.monomial(0))
    assert lhs == L.element({0: 2}) and rhs == L.element({0: 2})


def test_lie_modified_commutative_is_vacuous():
    bad = modified_of(make_shift_truncation(3))  # not even a Rota-Baxter op
    assert check_lie_modified(L, bad, ONE, DomainSpec.basis(-3, 3)).passed


def test_lie_modified_matches_antisymmetrized_modified_residual():
    m2 = make_matrix_algebra(2)
    b = modified_of(borel_projector_m2())
    mod_sides = identity_sides("modified-rbr", m2, b, ONE)
    lie_sides = identity_sides("lie-modified", m2, b, ONE)
    basis = [m2.basis_element(i) for i in range(4)]
    for x in basis:
        for y in basis:
            ml, mr = mod_sides(x, y)
            nl, nr = mod_sides(y, x)
            ll, lr = lie_sides(x, y)
            assert (ml - mr) - (nl - nr) == ll - lr


def test_lie_modified_alternating_inputs_pass():
    m2 = make_matrix_algebra(2)
    b = modified_of(borel_projector_m2())
    sides = identity_sides("lie-modified", m2, b, ONE)
    x = m2.basis_element(1) + 2 * m2.basis_element(2)
    lhs, rhs = sides(x, x)
    assert lhs.is_zero and rhs.is_zero


def test_operator_domain_error_propagates():
    import pytest as _pytest

    from rotabaxter.errors import OperatorDomainError

    with _pytest.raises(OperatorDomainError):
        check_rbr(L, INTEG, Fraction(0), DomainSpec.basis(-2, 2))


def test_identity_operator_has_weight_one():
    ident = make_identity_operator(L)
    assert ident.weight == ONE
    assert check_rbr(L, ident, ONE, DomainSpec.basis(-3, 3)).passed
    assert not check_rbr(L, ident, Fraction(0), DomainSpec.basis(-3, 3)).passed


def test_idempotent_reports():
    assert check_idempotent(L, MS, DomainSpec.basis(-8, 8)).passed
    assert check_idempotent(L, make_identity_operator(L),
                            DomainSpec.basis(-3, 3)).passed
    report = check_idempotent(P, INTEG, DomainSpec.basis(0, 4))
    assert not report.passed
    w = report.witness
    assert w.inputs[0] == P.monomial(0)  # first failing monomial is t^0
    assert w.lhs == INTEG(INTEG(w.inputs[0]))
    assert w.rhs == INTEG(w.inputs[0])


# --- image closure ----------------------------------------------------------


def test_image_closure_miller_22_images():
    op = make_miller(2, 2)
    alg = op.algebra
    # column reduction oracle by hand: R(e1)=e1, R(e2)=e1+e2, R(e3)=-e4,
    # R(e4)=0 so im(R) = span(e1, e2, e4); opposite (1-R) gives
    # span(e1, e3, e4).  Both closed under the componentwise product.
    assert op(alg.basis_element(2)) == -alg.basis_element(3)
    report = check_image_closure(alg, op)
    assert report.passed
    assert "im(R) rank 3" in report.notes


def test_image_closure_miller_11():
    op = make_miller(1, 1)
    report = check_image_closure(op.algebra, op)
    assert report.passed
    assert "im(R) rank 1" in report.notes


def test_image_closure_zero_operator():
    m2 = make_matrix_algebra(2)
    zero_op = matrix_operator(m2, [[0] * 4 for _ in range(4)],
                              label="zero", weight=0)
    report = check_image_closure(m2, zero_op)
    assert report.passed
    assert "im(R) rank 0" in report.notes


def test_image_closure_failure_case():
    # span(E11, E12 + E21) is not closed: its square contains E22.
    m2 = make_matrix_algebra(2)
    rows = [
        [1, 0, 0, 0],
        [0, Fraction(1, 2), 0, 0],
        [0, Fraction(1, 2), 0, 0],
        [0, 0, 0, 0],
    ]
    op = matrix_operator(m2, rows, label="bad-proj", weight=0)
    report = check_image_closure(m2, op)
    assert not report.passed
    assert report.witness is not None
    u, v = report.witness.inputs
    assert m2.multiply(u, v) == report.witness.lhs
    assert report.witness.lhs - report.witness.rhs == report.witness.diff


def test_image_closure_laurent_window():
    report = check_image_closure(L, MS, DomainSpec.basis(-4, 4))
    assert report.passed
    report = check_image_closure(L, MS_OPP, DomainSpec.basis(-4, 4))
    assert report.passed


def test_image_closure_laurent_needs_window_and_projector():
    with pytest.raises(UnsupportedDomainError):
        check_image_closure(L, MS)
    with pytest.raises(UnsupportedDomainError):
        check_image_closure(L, scale_operator(2, MS), DomainSpec.basis(-2, 2))


def test_image_closure_truncation_above_zero_not_closed():
    r1 = make_shift_truncation(1)
    report = check_image_closure(L, r1, DomainSpec.basis(-2, 2))
    assert not report.passed  # z^1 * z^1 = z^2 escapes


# --- violation search -------------------------------------------------------


def test_find_violation_examples():
    w = find_violation(L, "rbr", make_shift_truncation(1), ONE)
    assert w.inputs == (L.monomial(1), L.monomial(1))
    assert w.diff == L.monomial(2)

    w = find_violation(L, "rbr", make_shift_truncation(-2), ONE)
    assert w.inputs == (L.monomial(-1), L.monomial(-1))
    assert w.lhs == L.monomial(-2) and w.rhs.is_zero

    assert find_violation(L, "rbr", MS, ONE, samples=100) is None


def test_find_violation_deterministic():
    a = find_violation(L, "rbr", make_shift_truncation(2), ONE)
    b = find_violation(L, "rbr", make_shift_truncation(2), ONE)
    assert a.inputs == b.inputs and a.diff == b.diff


def test_violation_report_statuses():
    bad = violation_report(L, "rbr", make_shift_truncation(3), ONE,
                           max_range=4, samples=0)
    assert bad.status == "fail" and bad.witness is not None
    good = violation_report(L, "rbr", make_shift_truncation(0), ONE,
                            max_range=4, samples=50)
    assert good.status == "pass" and good.witness is None


# --- stated invariants ------------------------------------------------------

BUILTIN_CASES = [
    (L, MS, ONE),
    (L, MS_OPP, ONE),
    (L, scale_operator(-1, MS), Fraction(-1)),
    (L, make_shift_truncation(0), ONE),
    (L, make_shift_truncation(1), ONE),
    (L, make_shift_truncation(-2), ONE),
    (P, INTEG, Fraction(0)),
]


@pytest.mark.parametrize("identity", ["rbr", "modified-rbr", "nijenhuis"])
def test_exhaustive_and_random_modes_agree(identity):
    for alg, op, lam in BUILTIN_CASES:
        use = modified_of(op) if identity == "modified-rbr" else op
        exhaustive = DomainSpec.basis(-4, 4)
        randomized = DomainSpec.random(1000, lo=-4, hi=4, coeff_bound=5,
                                       support_bound=3, seed=2024)
        check = {"rbr": check_rbr, "modified-rbr": check_modified_rbr,
                 "nijenhuis": check_nijenhuis}[identity]
        verdict_basis = check(alg, use, lam, exhaustive).status
        verdict_random = check(alg, use, lam, randomized).status
        assert verdict_basis == verdict_random, (identity, op.describe())


def test_derivation_consistency_modified_from_verified():
    """Operators verified at weight λ ≠ 0 give modified operators
    passing the modified relation at the same λ."""
    cases = [(L, MS, ONE), (L, MS_OPP, ONE), (L, scale_operator(-1, MS),
                                              Fraction(-1))]
    for s, t in ((1, 1), (2, 2), (3, 1)):
        op = make_miller(s, t)
        cases.append((op.algebra, op, ONE))
    for alg, op, lam in cases:
        dom = DomainSpec.basis(-4, 4)
        assert check_rbr(alg, op, lam, dom).passed
        assert check_modified_rbr(alg, modified_of(op), lam, dom).passed


def test_opposite_stability_at_weight_one():
    for op in (MS, MS_OPP, make_shift_truncation(0), borel_projector_m2(),
               make_miller(2, 2)):
        alg = op.algebra
        dom = DomainSpec.basis(-4, 4)
        assert check_rbr(alg, op, ONE, dom).passed
        assert check_rbr(alg, opposite_of(op), ONE, dom).passed


def test_nijenhuis_family_over_sampled_alphas():
    for alpha in (Fraction(-3), Fraction(-1), Fraction(0), Fraction(2, 3),
                  Fraction(1), Fraction(7, 2), Fraction(5)):
        n = nijenhuis_family(MS, alpha)
        assert check_nijenhuis(L, n, ONE, DomainSpec.basis(-4, 4)).passed


def test_modified_pass_implies_lie_modified_pass():
    cases = [(L, modified_of(MS), ONE),
             (make_matrix_algebra(2), modified_of(borel_projector_m2()), ONE)]
    for s, t in ((1, 1), (2, 2)):
        op = make_miller(s, t)
        cases.append((op.algebra, modified_of(op), ONE))
    for alg, b, lam in cases:
        dom = DomainSpec.basis(-3, 3)
        if check_modified_rbr(alg, b, lam, dom).passed:
            assert check_lie_modified(alg, b, lam, dom).passed


# --- report serialization ---------------------------------------------------


def test_report_json_shape_and_determinism():
    report = check_rbr(L, make_shift_truncation(1), ONE, DomainSpec.basis(-4, 4))
    payload = report.to_json()
    assert set(payload) == {"check", "algebra", "operator", "weight", "domain",
                            "status", "tuples", "witness", "notes"}
    assert payload["status"] == "fail"
    assert payload["witness"]["diff"] == "z^2"
    again = check_rbr(L, make_shift_truncation(1), ONE, DomainSpec.basis(-4, 4))
    assert dumps_reports(report) == dumps_reports(again)


def test_random_mode_reports_byte_deterministic():
    dom = DomainSpec.random(50, lo=-3, hi=3, coeff_bound=4, support_bound=2,
                            seed=5)
    a = dumps_reports(check_rbr(L, MS, ONE, dom))
    b = dumps_reports(check_rbr(L, MS, ONE, dom))
    assert a == b
