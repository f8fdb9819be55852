"""The "paper-all" regression matrix.

Bundles every identity the package is about into one deterministic run:
positive cases that must pass, deliberately negative cases that must
fail with a witness, and report-only entries whose verdict is recorded
without being judged.  The aggregate verdict is "ok" exactly when every
entry matches its expectation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .algebra import DomainSpec
from .algebras import laurent, make_matrix_algebra, matrix_basis_index, polynomial
from .checks import (
    check_idempotent,
    check_image_closure,
    check_lie_modified,
    check_modified_rbr,
    check_nijenhuis,
    check_rbr,
    violation_report,
)
from .dendriform import (
    build_from_nijenhuis,
    build_modified_pair,
    build_tri_from_rbo,
    build_weight0_pair,
    check_dialgebra,
    check_rbr_on_compositions,
    check_star_associative,
    check_trialgebra,
)
from .operators import (
    WeightedOperator,
    make_integration,
    make_miller,
    make_rms,
    make_rms_opposite,
    make_shift_truncation,
    matrix_operator,
    modified_of,
    nijenhuis_family,
    scale_operator,
)
from .report import CheckReport, Witness
from .tensor import acybe_residual, induced_operator, tensor2, tensor3


@dataclass(frozen=True)
class SuiteEntry:
    name: str
    criterion: str
    expected: str  # "pass" | "fail" | "report"
    report: CheckReport

    @property
    def ok(self) -> bool:
        return self.expected == "report" or self.report.status == self.expected

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "criterion": self.criterion,
            "expected": self.expected,
            "status": self.report.status,
            "ok": self.ok,
            "report": self.report.to_json(),
        }


def borel_projector_m2() -> WeightedOperator:
    """Projection of 2x2 matrices onto their first row (span of E11, E12);
    a weight-1 Rota-Baxter operator on the matrix algebra."""
    alg = make_matrix_algebra(2)
    rows = [[0] * 4 for _ in range(4)]
    rows[0][0] = 1
    rows[1][1] = 1
    return matrix_operator(alg, rows, label="row-projector", weight=1,
                           note="first-row projector on 2x2 matrices")


def acybe_report(r, name: str, expected_residual=None) -> CheckReport:
    """Pass iff the Yang-Baxter residual of ``r`` is exactly zero."""
    residual = acybe_residual(r)
    notes = ()
    if expected_residual is not None and residual != expected_residual:
        notes = ("residual differs from the recorded value",)
    witness = None if residual.is_zero else Witness((r,), residual,
                                                    tensor3(r.algebra, {}),
                                                    residual)
    return CheckReport(
        check="acybe", algebra=r.algebra.describe(), operator=name,
        weight=None, domain={"mode": "exact-residual"},
        status="pass" if residual.is_zero else "fail",
        tuples=1, witness=witness, notes=notes)


def build_entries(seed: int = 0) -> list:
    """The full matrix; deterministic given the seed."""
    L = laurent()
    P = polynomial()
    ms = make_rms()
    ms_opp = make_rms_opposite()
    neg_ms = scale_operator(-1, ms)
    integ = make_integration()
    one = Fraction(1)

    entries: list[SuiteEntry] = []

    def add(name, criterion, expected, report):
        entries.append(SuiteEntry(name, criterion, expected, report))

    # --- criterion 1: Rota-Baxter positives
    add("rbr ms @1 [-8,8]", "1", "pass",
        check_rbr(L, ms, one, DomainSpec.basis(-8, 8)))
    add("rbr -ms @-1 [-8,8]", "1", "pass",
        check_rbr(L, neg_ms, Fraction(-1), DomainSpec.basis(-8, 8)))
    add("rbr ms-opp @1 [-8,8]", "1", "pass",
        check_rbr(L, ms_opp, one, DomainSpec.basis(-8, 8)))
    add("rbr integration @0 deg<=10", "1", "pass",
        check_rbr(P, integ, Fraction(0), DomainSpec.basis(0, 10)))
    for s in range(1, 5):
        for t in range(1, 5):
            miller = make_miller(s, t)
            add(f"rbr miller:{s},{t} @1", "1", "pass",
                check_rbr(miller.algebra, miller, one, DomainSpec.basis(0, 0)))

    # --- criterion 2: truncation negatives (and the two true positives)
    for r in (1, 2, -2, 3):
        add(f"violate rbr shift:{r} @1", "2", "fail",
            violation_report(L, "rbr", make_shift_truncation(r), one,
                             max_range=4, samples=0, seed=seed))
    for r in (-1, 0):
        add(f"violate rbr shift:{r} @1", "2", "pass",
            violation_report(L, "rbr", make_shift_truncation(r), one,
                             max_range=4, samples=0, seed=seed))

    # --- criterion 3: modified relation on every positive case
    add("modified ms @1 [-8,8]", "3", "pass",
        check_modified_rbr(L, modified_of(ms), one, DomainSpec.basis(-8, 8)))
    add("modified -ms @-1 [-8,8]", "3", "pass",
        check_modified_rbr(L, modified_of(neg_ms), Fraction(-1),
                           DomainSpec.basis(-8, 8)))
    add("modified ms-opp @1 [-8,8]", "3", "pass",
        check_modified_rbr(L, modified_of(ms_opp), one, DomainSpec.basis(-8, 8)))
    add("modified integration @0 deg<=10", "3", "pass",
        check_modified_rbr(P, modified_of(integ), Fraction(0),
                           DomainSpec.basis(0, 10)))
    for s in range(1, 5):
        for t in range(1, 5):
            miller = make_miller(s, t)
            add(f"modified miller:{s},{t} @1", "3", "pass",
                check_modified_rbr(miller.algebra, modified_of(miller), one,
                                   DomainSpec.basis(0, 0)))
    borel = borel_projector_m2()
    add("rbr row-projector M2 @1", "3", "pass",
        check_rbr(borel.algebra, borel, one, DomainSpec.basis(0, 0)))
    add("lie-modified row-projector M2 @1", "3", "pass",
        check_lie_modified(borel.algebra, modified_of(borel), one,
                           DomainSpec.basis(0, 0)))

    # --- criterion 4: dendriform dialgebras
    for rep in check_dialgebra(build_weight0_pair(integ), DomainSpec.basis(0, 6)):
        add(f"{rep.check} weight0(integration) deg<=6", "4", "pass", rep)
    for rep in check_dialgebra(build_modified_pair(modified_of(ms), 1),
                               DomainSpec.basis(-4, 4)):
        add(f"{rep.check} modified-pair(ms) [-4,4]", "4", "pass", rep)

    # --- criterion 5: dendriform trialgebras
    tri_cases = [("ms", ms, one), ("-ms", neg_ms, Fraction(-1)),
                 ("ms-opp", ms_opp, one)]
    for label, op, lam in tri_cases:
        ds = build_tri_from_rbo(op, lam)
        for rep in check_trialgebra(ds, DomainSpec.basis(-4, 4)):
            add(f"{rep.check} tri({label}) [-4,4]", "5", "pass", rep)
        add(f"star.assoc tri({label}) [-4,4]", "5", "pass",
            check_star_associative(ds, DomainSpec.basis(-4, 4)))
    miller22 = make_miller(2, 2)
    ds_miller = build_tri_from_rbo(miller22, 1)
    for rep in check_trialgebra(ds_miller, DomainSpec.basis(0, 0)):
        add(f"{rep.check} tri(miller:2,2)", "5", "pass", rep)
    add("star.assoc tri(miller:2,2)", "5", "pass",
        check_star_associative(ds_miller, DomainSpec.basis(0, 0)))
    # wrong-sign middle product: the two axioms that need the Rota-Baxter
    # relation break, the purely associative ones survive
    from dataclasses import replace as _replace

    wrong = _replace(build_tri_from_rbo(ms, 1),
                     middle=lambda a, b: a * b,
                     provenance="tri-wrong-sign(ms)")
    wrong_expect = {"tri.1": "fail", "tri.3": "fail"}
    for rep in check_trialgebra(wrong, DomainSpec.basis(-4, 4)):
        add(f"{rep.check} tri-wrong-sign(ms) [-4,4]", "5",
            wrong_expect.get(rep.check, "pass"), rep)

    # --- criterion 6: idempotent compatibility
    ds_ms = build_tri_from_rbo(ms, 1)
    for rep in check_rbr_on_compositions(ds_ms, ms, DomainSpec.basis(-4, 4)):
        add(f"{rep.check} (ms) [-4,4]", "6", "pass", rep)

    # --- criterion 7: Nijenhuis family
    for alpha in (Fraction(-1), Fraction(0), Fraction(1, 2), Fraction(1),
                  Fraction(2), Fraction(5)):
        n_op = nijenhuis_family(ms, alpha)
        add(f"nijenhuis alpha={alpha} [-5,5]", "7", "pass",
            check_nijenhuis(L, n_op, one, DomainSpec.basis(-5, 5)))
    nij_ds = build_from_nijenhuis(nijenhuis_family(ms, 1))
    add("nij.star.assoc (alpha=1) [-3,3]", "7", "pass",
        check_star_associative(nij_ds, DomainSpec.basis(-3, 3)))
    for rep in check_trialgebra(nij_ds, DomainSpec.basis(-3, 3)):
        if rep.check == "tri.7":
            add("tri.7 nijenhuis(alpha=1) [-3,3]", "7", "report", rep)

    # --- criterion 8: Yang-Baxter residuals and the induced operator
    m2 = make_matrix_algebra(2)
    e = lambda p, q: matrix_basis_index(2, p, q)
    r_zero = tensor2(m2, {})
    r_nilp = tensor2(m2, {(e(0, 1), e(0, 1)): 1})
    r_idem = tensor2(m2, {(e(0, 0), e(0, 0)): 1})
    add("acybe r=0", "8", "pass", acybe_report(r_zero, "0"))
    add("acybe r=E12xE12", "8", "pass", acybe_report(r_nilp, "E12xE12"))
    add("acybe r=E11xE11", "8", "fail",
        acybe_report(r_idem, "E11xE11",
                     expected_residual=tensor3(m2, {(e(0, 0), e(0, 0), e(0, 0)): 1})))
    add("rbr induced(E12xE12) @0", "8", "pass",
        check_rbr(m2, induced_operator(r_nilp), Fraction(0),
                  DomainSpec.basis(0, 0)))

    # --- criterion 9: image closure
    for s in range(1, 4):
        for t in range(1, 4):
            miller = make_miller(s, t)
            add(f"image-closure miller:{s},{t}", "9", "pass",
                check_image_closure(miller.algebra, miller))
    add("image-closure ms window [-4,4]", "9", "pass",
        check_image_closure(L, ms, DomainSpec.basis(-4, 4)))
    add("idempotent ms [-8,8]", "9", "pass",
        check_idempotent(L, ms, DomainSpec.basis(-8, 8)))

    return entries


def run_suite(preset: str = "paper-all", seed: int = 0) -> dict:
    if preset != "paper-all":
        raise ValueError(f"unknown suite preset {preset!r}")
    entries = build_entries(seed=seed)
    return {
        "suite": preset,
        "seed": seed,
        "ok": all(entry.ok for entry in entries),
        "entries": [entry.to_json() for entry in entries],
    }


def dumps_suite(result: dict) -> str:
    return json.dumps(result, sort_keys=True, indent=2) + "\n"
