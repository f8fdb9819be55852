"""Splitting an associative product into dendriform pieces.

Each constructor takes an operator and returns a bundle of bilinear
products: a left product ``prec`` (≺), a right product ``succ`` (≻),
and for three-product structures a middle product ``middle`` (∘).
The constructors never reject a non-conforming operator; refutation is
a first-class use case, so a structure built from a bad operator simply
fails the axiom checks with a witness.

Constructions and the weights they expect (checkers verify, builders
don't):

* ``build_weight0_pair(R)``        a≺b = a·R(b), a≻b = R(a)·b
* ``build_modified_pair(B, λ)``    a≺b = a·B(b) − λab, a≻b = B(a)·b + λab
* ``build_tri_from_rbo(R, λ)``     a≺b = a·R(b), a≻b = R(a)·b, a∘b = −λ·ab
* ``build_from_nijenhuis(N)``      a≺b = a·N(b), a≻b = N(a)·b, a∘b = −N(ab)

The middle product −λ·ab is the unique scalar multiple of the algebra
product for which the weight-λ Rota-Baxter relation turns the seven
trialgebra axioms into consequences; at λ = −1 it is the product
itself.  For the Nijenhuis structure the middle product −N(ab) is
chosen so that ≺+≻+∘ equals the associative product
a·N(b) + N(a)·b − N(ab); only axioms 1–4 of the seven are forced by
the Nijenhuis relation, so the checker reports the rest per case.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .algebra import Algebra, DomainSpec, Element
from .checks import check_idempotent, check_rbr, sweep_identity
from .operators import WeightedOperator
from .rationals import format_rational
from .report import CheckReport


@dataclass(frozen=True)
class DendriformStructure:
    """Derived bilinear products with provenance."""

    algebra: Algebra
    prec: Callable[[Element, Element], Element]
    succ: Callable[[Element, Element], Element]
    middle: Optional[Callable[[Element, Element], Element]]
    provenance: str
    weight: Fraction | None = None
    source: WeightedOperator | None = None

    @property
    def has_middle(self) -> bool:
        return self.middle is not None

    def star(self, a: Element, b: Element) -> Element:
        """≺ + ≻ (+ ∘): the recombined associative candidate."""
        total = self.prec(a, b) + self.succ(a, b)
        if self.middle is not None:
            total = total + self.middle(a, b)
        return total


def build_weight0_pair(R: WeightedOperator) -> DendriformStructure:
    """Two-product splitting for a weight-0 operator."""
    return DendriformStructure(
        algebra=R.algebra,
        prec=lambda a, b: a * R(b),
        succ=lambda a, b: R(a) * b,
        middle=None,
        provenance=f"weight0({R.describe()})",
        weight=Fraction(0),
        source=R,
    )


def build_modified_pair(B: WeightedOperator, lam) -> DendriformStructure:
    """Two-product splitting through a modified operator B = λ·id − 2R.

    At λ = 1 the products agree with −2a·R(b) and 2·(id−R)(a)·b.
    """
    lam = Fraction(lam)
    return DendriformStructure(
        algebra=B.algebra,
        prec=lambda a, b: a * B(b) - lam * (a * b),
        succ=lambda a, b: B(a) * b + lam * (a * b),
        middle=None,
        provenance=f"modified(weight {format_rational(lam)}; {B.describe()})",
        weight=lam,
        source=B,
    )


def build_tri_from_rbo(R: WeightedOperator, lam) -> DendriformStructure:
    """Three-product splitting for a weight-λ operator, λ ≠ 0."""
    lam = Fraction(lam)
    return DendriformStructure(
        algebra=R.algebra,
        prec=lambda a, b: a * R(b),
        succ=lambda a, b: R(a) * b,
        middle=lambda a, b: (-lam) * (a * b),
        provenance=f"tri(weight {format_rational(lam)}; {R.describe()})",
        weight=lam,
        source=R,
    )


def build_from_nijenhuis(N: WeightedOperator) -> DendriformStructure:
    """Three-product splitting for a weight-1 Nijenhuis operator."""
    return DendriformStructure(
        algebra=N.algebra,
        prec=lambda a, b: a * N(b),
        succ=lambda a, b: N(a) * b,
        middle=lambda a, b: -N(a * b),
        provenance=f"nijenhuis({N.describe()})",
        weight=Fraction(1),
        source=N,
    )


# ---------------------------------------------------------------------------
# Axiom checks


def _axiom_report(ds: DendriformStructure, dom: DomainSpec, axiom_id: str,
                  sides, notes=()) -> CheckReport:
    return sweep_identity(axiom_id, ds.algebra, ds.provenance, ds.weight,
                          dom, 3, sides, notes=notes)


def check_dialgebra(ds: DendriformStructure, dom: DomainSpec) -> list:
    """The three two-product axioms; their sum makes ≺+≻ associative."""
    lt, gt = ds.prec, ds.succ
    axioms = [
        ("ddi.1", lambda a, b, c: (lt(lt(a, b), c),
                                   lt(a, lt(b, c)) + lt(a, gt(b, c)))),
        ("ddi.2", lambda a, b, c: (gt(a, lt(b, c)),
                                   lt(gt(a, b), c))),
        ("ddi.3", lambda a, b, c: (gt(a, gt(b, c)),
                                   gt(lt(a, b), c) + gt(gt(a, b), c))),
    ]
    return [_axiom_report(ds, dom, axiom_id, sides) for axiom_id, sides in axioms]


def check_trialgebra(ds: DendriformStructure, dom: DomainSpec) -> list:
    """The seven three-product axioms."""
    lt, gt, mid = ds.prec, ds.succ, ds.middle
    axioms = [
        ("tri.1", lambda a, b, c: (lt(lt(a, b), c),
                                   lt(a, lt(b, c) + gt(b, c) + mid(b, c)))),
        ("tri.2", lambda a, b, c: (lt(gt(a, b), c),
                                   gt(a, lt(b, c)))),
        ("tri.3", lambda a, b, c: (gt(a, gt(b, c)),
                                   gt(lt(a, b) + gt(a, b) + mid(a, b), c))),
        ("tri.4", lambda a, b, c: (mid(lt(a, b), c),
                                   mid(a, gt(b, c)))),
        ("tri.5", lambda a, b, c: (mid(gt(a, b), c),
                                   gt(a, mid(b, c)))),
        ("tri.6", lambda a, b, c: (lt(mid(a, b), c),
                                   mid(a, lt(b, c)))),
        ("tri.7", lambda a, b, c: (mid(mid(a, b), c),
                                   mid(a, mid(b, c)))),
    ]
    return [_axiom_report(ds, dom, axiom_id, sides) for axiom_id, sides in axioms]


def check_star_associative(ds: DendriformStructure, dom: DomainSpec) -> CheckReport:
    """(a*b)*c = a*(b*c) for the recombined product."""
    axiom_id = "nij.star.assoc" if ds.provenance.startswith("nijenhuis") \
        else "star.assoc"
    return _axiom_report(
        ds, dom, axiom_id,
        lambda a, b, c: (ds.star(ds.star(a, b), c), ds.star(a, ds.star(b, c))))


def check_rbr_on_compositions(ds: DendriformStructure, R: WeightedOperator,
                              dom: DomainSpec) -> list:
    """For an idempotent weight-1 operator, the weight-1 Rota-Baxter
    relation holds with the product replaced by ≺ and by ≻:

        R(x) ≺ R(y) + R(x ≺ y) = R(R(x) ≺ y + x ≺ R(y))

    and likewise for ≻.  When the precondition fails (operator not
    idempotent, or not weight 1 on this domain), the verdicts are still
    computed and the reports are flagged.
    """
    notes = []
    if not check_idempotent(ds.algebra, R, dom).passed:
        notes.append("precondition-unmet: operator is not idempotent on this domain")
    if not check_rbr(ds.algebra, R, Fraction(1), dom).passed:
        notes.append("precondition-unmet: operator is not weight 1 on this domain")

    def composition_sides(product):
        def sides(x, y):
            rx, ry = R(x), R(y)
            return (product(rx, ry) + R(product(x, y)),
                    R(product(rx, y) + product(x, ry)))

        return sides

    reports = []
    for axiom_id, product in (("rbr.on.prec", ds.prec), ("rbr.on.succ", ds.succ)):
        reports.append(sweep_identity(axiom_id, ds.algebra, ds.provenance,
                                      Fraction(1), dom, 2,
                                      composition_sides(product),
                                      notes=tuple(notes)))
    return reports
