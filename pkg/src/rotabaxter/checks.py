"""Exact verification (or refutation with witness) of operator identities.

The sign convention is fixed once, here, and every other identity in
the package is implemented against it:

    R(x)R(y) + λ·R(xy) = R(R(x)·y + x·R(y))          (weight λ)

A check sweeps a :class:`DomainSpec`: exhaustive basis tuples (exact
for all elements supported in the window, by multilinearity) or
reproducible random tuples.  Sweeps are deterministic, so a failing
witness is reproducible byte for byte; the first tuple in sweep order
that violates the identity becomes the witness.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from .algebra import Algebra, DomainSpec, lie_bracket
from .algebras import FiniteAlgebra, LaurentAlgebra
from .errors import InvalidDomainError, UnsupportedDomainError
from .operators import WeightedOperator, operator_matrix, opposite_of
from .report import CheckReport, Witness


def domain_tuples(algebra: Algebra, dom: DomainSpec, arity: int):
    """Deterministic tuple stream for a sweep."""
    if dom.mode == "basis":
        basis = [algebra.basis_element(k) for k in algebra.basis_keys(dom.lo, dom.hi)]
        if not basis:
            raise InvalidDomainError("empty basis window")
        yield from itertools.product(basis, repeat=arity)
    else:
        rng = random.Random(dom.seed)
        for _ in range(dom.samples):
            yield tuple(algebra.random_element(dom, rng) for _ in range(arity))


def sweep_identity(check_id: str, algebra: Algebra, operator_desc: str,
                   weight: Fraction | None, dom: DomainSpec, arity: int,
                   sides, notes: tuple = ()) -> CheckReport:
    """Evaluate ``sides(*tuple) -> (lhs, rhs)`` over the domain."""
    count = 0
    witness = None
    for tup in domain_tuples(algebra, dom, arity):
        count += 1
        lhs, rhs = sides(*tup)
        if lhs != rhs:
            witness = Witness(tup, lhs, rhs, lhs - rhs)
            break
    return CheckReport(
        check=check_id,
        algebra=algebra.describe(),
        operator=operator_desc,
        weight=weight,
        domain=dom.describe(),
        status="pass" if witness is None else "fail",
        tuples=count,
        witness=witness,
        notes=tuple(notes),
    )


# ---------------------------------------------------------------------------
# Identity residuals


def rbr_sides(op: WeightedOperator, lam: Fraction):
    def sides(x, y):
        rx, ry = op(x), op(y)
        return rx * ry + lam * op(x * y), op(rx * y + x * ry)

    return sides


def modified_rbr_sides(op: WeightedOperator, lam: Fraction):
    """B(x)B(y) = B(B(x)y + xB(y)) − λ²xy."""

    def sides(x, y):
        bx, by = op(x), op(y)
        return bx * by, op(bx * y + x * by) - (lam * lam) * (x * y)

    return sides


def nijenhuis_sides(op: WeightedOperator, lam: Fraction):
    """N(x)N(y) + λ·N²(xy) = N(N(x)y + xN(y))."""

    def sides(x, y):
        nx, ny = op(x), op(y)
        return nx * ny + lam * op(op(x * y)), op(nx * y + x * ny)

    return sides


def lie_modified_sides(algebra: Algebra, op: WeightedOperator, lam: Fraction):
    """[B(x),B(y)] = B([B(x),y] + [x,B(y)]) − λ²[x,y]."""

    def sides(x, y):
        bx, by = op(x), op(y)
        lhs = lie_bracket(algebra, bx, by)
        rhs = op(lie_bracket(algebra, bx, y) + lie_bracket(algebra, x, by)) \
            - (lam * lam) * lie_bracket(algebra, x, y)
        return lhs, rhs

    return sides


IDENTITY_ARITY = {"rbr": 2, "modified-rbr": 2, "nijenhuis": 2, "lie-modified": 2}


def identity_sides(identity: str, algebra: Algebra, op: WeightedOperator,
                   lam: Fraction):
    if identity == "rbr":
        return rbr_sides(op, lam)
    if identity == "modified-rbr":
        return modified_rbr_sides(op, lam)
    if identity == "nijenhuis":
        return nijenhuis_sides(op, lam)
    if identity == "lie-modified":
        return lie_modified_sides(algebra, op, lam)
    raise InvalidDomainError(f"unknown identity {identity!r}")


# ---------------------------------------------------------------------------
# Public checks


def check_rbr(algebra: Algebra, op: WeightedOperator, lam: Fraction,
              dom: DomainSpec) -> CheckReport:
    return sweep_identity("rbr", algebra, op.describe(), lam, dom, 2,
                          rbr_sides(op, lam))


def check_modified_rbr(algebra: Algebra, op: WeightedOperator, lam: Fraction,
                       dom: DomainSpec) -> CheckReport:
    return sweep_identity("modified-rbr", algebra, op.describe(), lam, dom, 2,
                          modified_rbr_sides(op, lam))


def check_nijenhuis(algebra: Algebra, op: WeightedOperator, lam: Fraction,
                    dom: DomainSpec) -> CheckReport:
    return sweep_identity("nijenhuis", algebra, op.describe(), lam, dom, 2,
                          nijenhuis_sides(op, lam))


def check_lie_modified(algebra: Algebra, op: WeightedOperator, lam: Fraction,
                       dom: DomainSpec) -> CheckReport:
    return sweep_identity("lie-modified", algebra, op.describe(), lam, dom, 2,
                          lie_modified_sides(algebra, op, lam))


def check_idempotent(algebra: Algebra, op: WeightedOperator,
                     dom: DomainSpec) -> CheckReport:
    def sides(x):
        rx = op(x)
        return op(rx), rx

    return sweep_identity("idempotent", algebra, op.describe(), None, dom, 1, sides)


# ---------------------------------------------------------------------------
# Image closure (the decomposition consequence): im(R) and im(λ·id − R)
# must both be closed under the product.


def _rref(rows: list) -> tuple:
    """Reduced row echelon form over the rationals; returns the nonzero
    rows and their pivot columns."""
    rows = [list(r) for r in rows]
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot_row is None:
            continue
        rows[r], rows[pivot_row] = rows[pivot_row], rows[r]
        pv = rows[r][c]
        rows[r] = [v / pv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def _reduce_against(basis_rows: list, pivots: list, vec: list) -> list:
    vec = list(vec)
    for row, c in zip(basis_rows, pivots):
        f = vec[c]
        if f != 0:
            vec = [a - f * b for a, b in zip(vec, row)]
    return vec


def _closure_of_span(algebra: FiniteAlgebra, image_cols: list, tag: str):
    """Check that span(image_cols) is closed under the product; returns
    (pairs tested, witness or None)."""
    basis_rows, pivots = _rref(image_cols)
    basis = [algebra.from_coords(row) for row in basis_rows]
    count = 0
    for u in basis:
        for v in basis:
            count += 1
            product = algebra.multiply(u, v)
            remainder = _reduce_against(basis_rows, pivots, list(product.coords()))
            if any(c != 0 for c in remainder):
                rem = algebra.from_coords(remainder)
                return count, Witness((u, v), product, product - rem, rem), tag
    return count, None, tag


def check_image_closure(algebra: Algebra, op: WeightedOperator,
                        dom: DomainSpec | None = None) -> CheckReport:
    """im(R) and im(λ·id − R) are closed under multiplication.

    Finite-dimensional algebras: image bases come from exact column
    reduction of the operator matrices.  Laurent-type algebras need a
    window (``dom``) and an operator acting diagonally and idempotently
    on the swept monomials; its image is then the fixed subspace, and
    products of image monomials are tested by the fixed-point property.
    """
    lam = op.weight if op.weight is not None else Fraction(0)
    if isinstance(algebra, FiniteAlgebra):
        rows = operator_matrix(algebra, op)
        n = algebra.dimension
        opp_rows = [[(lam if i == j else Fraction(0)) - rows[i][j]
                     for j in range(n)] for i in range(n)]
        total = 0
        notes = []
        for tag, mat in (("im(R)", rows), ("im(opposite)", opp_rows)):
            cols = [[mat[i][j] for i in range(n)] for j in range(n)]
            count, witness, _ = _closure_of_span(algebra, cols, tag)
            total += count
            rank = len(_rref(cols)[0])
            notes.append(f"{tag} rank {rank}")
            if witness is not None:
                return CheckReport(
                    check="image-closure", algebra=algebra.describe(),
                    operator=op.describe(), weight=op.weight,
                    domain={"mode": "image-basis-pairs"},
                    status="fail", tuples=total, witness=witness,
                    notes=tuple(notes + [f"{tag} not closed"]))
        return CheckReport(
            check="image-closure", algebra=algebra.describe(),
            operator=op.describe(), weight=op.weight,
            domain={"mode": "image-basis-pairs"},
            status="pass", tuples=total, notes=tuple(notes))

    if isinstance(algebra, LaurentAlgebra):
        if dom is None:
            raise UnsupportedDomainError(
                "image closure on a Laurent-type algebra needs an exponent window")
        window = algebra.basis_keys(dom.lo, dom.hi)
        opp = opposite_of(op)
        eigen = {}
        for which, weighted in (("im(R)", op), ("im(opposite)", opp)):
            coeffs = {}
            for e in window:
                mono = algebra.basis_element(e)
                image = weighted(mono)
                if image.is_zero:
                    coeffs[e] = Fraction(0)
                elif image == mono:
                    coeffs[e] = Fraction(1)
                else:
                    raise UnsupportedDomainError(
                        f"operator is not an idempotent monomial projector "
                        f"on the window: maps {mono} to {image}")
            eigen[which] = coeffs

        total = 0
        notes = []
        for which, weighted in (("im(R)", op), ("im(opposite)", opp)):
            kept = [e for e in window if eigen[which][e] == 1]
            notes.append(f"{which} rank {len(kept)} on window")
            for e1 in kept:
                for e2 in kept:
                    total += 1
                    product = algebra.basis_element(e1) * algebra.basis_element(e2)
                    fixed = weighted(product)
                    if fixed != product:
                        return CheckReport(
                            check="image-closure", algebra=algebra.describe(),
                            operator=op.describe(), weight=op.weight,
                            domain=dom.describe(),
                            status="fail", tuples=total,
                            witness=Witness(
                                (algebra.basis_element(e1), algebra.basis_element(e2)),
                                product, fixed, product - fixed),
                            notes=tuple(notes + [f"{which} not closed"]))
        return CheckReport(
            check="image-closure", algebra=algebra.describe(),
            operator=op.describe(), weight=op.weight,
            domain=dom.describe(), status="pass", tuples=total,
            notes=tuple(notes))

    raise UnsupportedDomainError(
        f"image closure is not defined on {algebra.describe()}")


# ---------------------------------------------------------------------------
# Witness search


def _search_violation(algebra, identity, op, lam, max_range, samples, seed,
                      coeff_bound, support_bound):
    arity = IDENTITY_ARITY[identity]
    sides = identity_sides(identity, algebra, op, lam)
    count = 0
    seen_windows = set()
    for k in range(max_range + 1):
        keys = tuple(algebra.basis_keys(-k, k))
        if keys in seen_windows:
            continue
        seen_windows.add(keys)
        basis = [algebra.basis_element(key) for key in keys]
        for tup in itertools.product(basis, repeat=arity):
            count += 1
            lhs, rhs = sides(*tup)
            if lhs != rhs:
                return Witness(tup, lhs, rhs, lhs - rhs), count
    if samples > 0:
        spec = DomainSpec.random(samples, lo=-max_range, hi=max_range,
                                 coeff_bound=coeff_bound,
                                 support_bound=support_bound, seed=seed)
        rng = random.Random(seed)
        for _ in range(samples):
            tup = tuple(algebra.random_element(spec, rng) for _ in range(arity))
            count += 1
            lhs, rhs = sides(*tup)
            if lhs != rhs:
                return Witness(tup, lhs, rhs, lhs - rhs), count
    return None, count


def find_violation(algebra: Algebra, identity: str, op: WeightedOperator,
                   lam: Fraction, max_range: int = 4, samples: int = 200,
                   seed: int = 0, coeff_bound: int = 3,
                   support_bound: int = 3) -> Witness | None:
    """Deterministic witness search: basis tuples in expanding windows
    [-k, k] in lexicographic order, then seeded random elements.
    Returns the first witness, or None within budget."""
    witness, _ = _search_violation(algebra, identity, op, lam, max_range,
                                   samples, seed, coeff_bound, support_bound)
    return witness


def violation_report(algebra: Algebra, identity: str, op: WeightedOperator,
                     lam: Fraction, max_range: int = 4, samples: int = 200,
                     seed: int = 0) -> CheckReport:
    """Report form of :func:`find_violation`: status "fail" plus witness
    when the search succeeds, "pass" when the budget is exhausted."""
    witness, count = _search_violation(algebra, identity, op, lam, max_range,
                                       samples, seed, 3, 3)
    domain = {"mode": "expanding-search", "max_range": max_range,
              "samples": samples, "seed": seed}
    note = ("witness found by expanding search",) if witness is not None \
        else ("no witness within budget",)
    return CheckReport(
        check=f"violate({identity})", algebra=algebra.describe(),
        operator=op.describe(), weight=lam, domain=domain,
        status="fail" if witness is not None else "pass",
        tuples=count, witness=witness, notes=note)
