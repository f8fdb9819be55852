"""Algebra elements, operator expressions, and sweep domains.

Elements are immutable sparse linear combinations over a fixed basis:
integer exponents for Laurent-type algebras, basis indices 0..n-1 for
finite-dimensional ones.  The representation is canonical (no zero
coefficients are stored), so equality is syntactic and exact.

Operator expressions form a small tree closed under identity, scaling,
sum, and composition.  ``Compose(f, g)`` applies ``g`` first, then
``f``, so ``R @ R`` is the usual R².
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Callable, Mapping

from .errors import (
    AlgebraMismatchError,
    FormatError,
    InvalidDomainError,
    OperatorDomainError,
)
from .rationals import as_rational, format_rational, parse_rational


class Element:
    """Immutable sparse element of an algebra.

    ``terms`` maps basis keys to nonzero coefficients.  All arithmetic
    that involves two elements insists they belong to the same algebra.
    """

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra, terms: Mapping[int, Fraction]):
        clean = {}
        for key, coeff in terms.items():
            coeff = as_rational(coeff)
            if coeff != 0:
                algebra.validate_key(key)
                clean[key] = clean.get(key, Fraction(0)) + coeff
        clean = {k: c for k, c in clean.items() if c != 0}
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Element is immutable")

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, key) -> Fraction:
        return self.terms.get(key, Fraction(0))

    def support(self) -> tuple:
        return tuple(sorted(self.terms))

    def coords(self) -> tuple:
        """Dense coordinate tuple; finite-dimensional algebras only."""
        n = self.algebra.dimension
        if n is None:
            raise AlgebraMismatchError("coords() needs a finite-dimensional algebra")
        return tuple(self.terms.get(i, Fraction(0)) for i in range(n))

    def _check_same(self, other: "Element") -> None:
        if self.algebra != other.algebra:
            raise AlgebraMismatchError(
                f"operands from different algebras: "
                f"{self.algebra.describe()} vs {other.algebra.describe()}"
            )

    def __add__(self, other: "Element") -> "Element":
        if not isinstance(other, Element):
            return NotImplemented
        self._check_same(other)
        merged = dict(self.terms)
        for key, coeff in other.terms.items():
            merged[key] = merged.get(key, Fraction(0)) + coeff
        return Element(self.algebra, merged)

    def __sub__(self, other: "Element") -> "Element":
        if not isinstance(other, Element):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> "Element":
        return Element(self.algebra, {k: -c for k, c in self.terms.items()})

    def scale(self, scalar) -> "Element":
        c = as_rational(scalar)
        return Element(self.algebra, {k: c * v for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Element):
            self._check_same(other)
            return self.algebra.multiply(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    def __rmul__(self, scalar):
        if isinstance(scalar, (int, Fraction)):
            return self.scale(scalar)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, Element):
            return NotImplemented
        return self.algebra == other.algebra and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.algebra, tuple(sorted(self.terms.items()))))

    def __str__(self) -> str:
        return self.algebra.format_element(self)

    def __repr__(self) -> str:
        return f"<{self.algebra.describe()}: {self}>"


class Algebra:
    """Associative algebra over the rationals; subclasses fix the basis
    and the product on basis keys, and the bilinear extension lives here."""

    kind: str = "abstract"
    dimension = None
    unital: bool = False
    variable: str = "z"

    def validate_key(self, key) -> None:
        raise NotImplementedError

    def basis_product(self, i, j) -> Mapping:
        """Coefficients of e_i · e_j as a key -> Rational mapping."""
        raise NotImplementedError

    def element(self, terms: Mapping) -> Element:
        return Element(self, terms)

    def zero(self) -> Element:
        return Element(self, {})

    def basis_element(self, key) -> Element:
        return Element(self, {key: Fraction(1)})

    def unit(self) -> Element:
        raise OperatorDomainError(f"{self.describe()} has no unit")

    def multiply(self, a: Element, b: Element) -> Element:
        if a.algebra != self or b.algebra != self:
            raise AlgebraMismatchError("operands do not belong to this algebra")
        acc: dict = {}
        for i, ci in a.terms.items():
            for j, cj in b.terms.items():
                cij = ci * cj
                for k, ck in self.basis_product(i, j).items():
                    acc[k] = acc.get(k, Fraction(0)) + cij * ck
        return Element(self, acc)

    def basis_keys(self, lo: int, hi: int) -> list:
        """Basis keys swept by exhaustive mode; Laurent kinds use the
        exponent window, finite kinds ignore it."""
        raise NotImplementedError

    def random_element(self, spec: "DomainSpec", rng) -> Element:
        raise NotImplementedError

    def format_element(self, x: Element) -> str:
        raise NotImplementedError

    def parse_element(self, text: str) -> Element:
        raise NotImplementedError

    def describe(self) -> str:
        return self.kind

    def __repr__(self) -> str:
        return f"<algebra {self.describe()}>"


def _random_coeff(rng, bound: int) -> Fraction:
    num = rng.randint(-bound, bound) if bound > 0 else 0
    den = rng.randint(1, bound) if bound > 0 else 1
    return Fraction(num, den)


class DomainSpec:
    """Description of the tuples an identity is checked on.

    Exhaustive mode enumerates basis tuples with keys in [lo, hi] (the
    window is ignored by finite-dimensional algebras, whose basis is
    already finite).  Because every identity checked here is multilinear
    in its element slots, passing on all basis tuples in a window is
    equivalent to passing on all elements supported in that window.

    Random mode draws ``samples`` reproducible tuples: same seed, same
    sequence.
    """

    __slots__ = ("mode", "lo", "hi", "samples", "coeff_bound", "support_bound", "seed")

    def __init__(self, mode, lo, hi, samples, coeff_bound, support_bound, seed):
        if mode not in ("basis", "random"):
            raise InvalidDomainError(f"unknown domain mode {mode!r}")
        if lo > hi:
            raise InvalidDomainError(f"empty exponent range [{lo}, {hi}]")
        if mode == "random" and samples < 0:
            raise InvalidDomainError("negative sample count")
        self.mode = mode
        self.lo = lo
        self.hi = hi
        self.samples = samples
        self.coeff_bound = coeff_bound
        self.support_bound = support_bound
        self.seed = seed

    @classmethod
    def basis(cls, lo: int, hi: int) -> "DomainSpec":
        return cls("basis", lo, hi, 0, 0, 0, 0)

    @classmethod
    def random(cls, samples: int, lo: int = -4, hi: int = 4,
               coeff_bound: int = 5, support_bound: int = 3, seed: int = 0) -> "DomainSpec":
        return cls("random", lo, hi, samples, coeff_bound, support_bound, seed)

    def describe(self) -> dict:
        if self.mode == "basis":
            return {"mode": "basis", "lo": self.lo, "hi": self.hi}
        return {
            "mode": "random",
            "lo": self.lo,
            "hi": self.hi,
            "samples": self.samples,
            "coeff_bound": self.coeff_bound,
            "support_bound": self.support_bound,
            "seed": self.seed,
        }

    def __eq__(self, other):
        if not isinstance(other, DomainSpec):
            return NotImplemented
        return self.describe() == other.describe()

    def __repr__(self):
        return f"DomainSpec({self.describe()})"


# ---------------------------------------------------------------------------
# Operator expressions


class OperatorExpr:
    """Formal linear operator; evaluation is delegated to the node types."""

    def apply(self, algebra: Algebra, x: Element) -> Element:
        raise NotImplementedError

    def describe(self) -> str:
        raise NotImplementedError

    def __add__(self, other: "OperatorExpr") -> "OperatorExpr":
        return Sum(self, other)

    def __sub__(self, other: "OperatorExpr") -> "OperatorExpr":
        return Sum(self, Scale(Fraction(-1), other))

    def __neg__(self) -> "OperatorExpr":
        return Scale(Fraction(-1), self)

    def __rmul__(self, scalar) -> "OperatorExpr":
        return Scale(as_rational(scalar), self)

    def __matmul__(self, other: "OperatorExpr") -> "OperatorExpr":
        return Compose(self, other)

    def __repr__(self) -> str:
        return f"<operator {self.describe()}>"


class Identity(OperatorExpr):
    def apply(self, algebra, x):
        return x

    def describe(self):
        return "id"

    def __eq__(self, other):
        return isinstance(other, Identity)

    def __hash__(self):
        return hash("id")


class Primitive(OperatorExpr):
    """Named primitive with an evaluation function.

    ``kinds`` restricts the algebra kinds the primitive accepts (None
    means any); ``dimension`` additionally pins a finite dimension.
    Equality ignores the function and compares (label, params) so that
    structurally equal expressions compare equal.
    """

    def __init__(self, label: str, fn: Callable[[Algebra, Element], Element],
                 params: tuple = (), kinds: tuple | None = None,
                 dimension: int | None = None):
        self.label = label
        self.fn = fn
        self.params = params
        self.kinds = kinds
        self.dimension = dimension

    def apply(self, algebra, x):
        if self.kinds is not None and algebra.kind not in self.kinds:
            raise OperatorDomainError(
                f"operator {self.label!r} is not defined on {algebra.describe()}")
        if self.dimension is not None and algebra.dimension != self.dimension:
            raise OperatorDomainError(
                f"operator {self.label!r} needs dimension {self.dimension}, "
                f"got {algebra.describe()}")
        return self.fn(algebra, x)

    def describe(self):
        return self.label

    def __eq__(self, other):
        return (isinstance(other, Primitive)
                and self.label == other.label and self.params == other.params)

    def __hash__(self):
        return hash((self.label, self.params))


class Scale(OperatorExpr):
    def __init__(self, coeff, inner: OperatorExpr):
        self.coeff = as_rational(coeff)
        self.inner = inner

    def apply(self, algebra, x):
        return self.inner.apply(algebra, x).scale(self.coeff)

    def describe(self):
        return f"{format_rational(self.coeff)}*{self.inner.describe()}"

    def __eq__(self, other):
        return (isinstance(other, Scale)
                and self.coeff == other.coeff and self.inner == other.inner)

    def __hash__(self):
        return hash(("scale", self.coeff, self.inner))


class Sum(OperatorExpr):
    def __init__(self, left: OperatorExpr, right: OperatorExpr):
        self.left = left
        self.right = right

    def apply(self, algebra, x):
        return self.left.apply(algebra, x) + self.right.apply(algebra, x)

    def describe(self):
        return f"({self.left.describe()} + {self.right.describe()})"

    def __eq__(self, other):
        return (isinstance(other, Sum)
                and self.left == other.left and self.right == other.right)

    def __hash__(self):
        return hash(("sum", self.left, self.right))


class Compose(OperatorExpr):
    """outer ∘ inner: the inner operator is applied first."""

    def __init__(self, outer: OperatorExpr, inner: OperatorExpr):
        self.outer = outer
        self.inner = inner

    def apply(self, algebra, x):
        return self.outer.apply(algebra, self.inner.apply(algebra, x))

    def describe(self):
        return f"({self.outer.describe()} . {self.inner.describe()})"

    def __eq__(self, other):
        return (isinstance(other, Compose)
                and self.outer == other.outer and self.inner == other.inner)

    def __hash__(self):
        return hash(("compose", self.outer, self.inner))


def apply_operator(algebra: Algebra, op: OperatorExpr, x: Element) -> Element:
    if x.algebra != algebra:
        raise AlgebraMismatchError("element does not belong to the given algebra")
    return op.apply(algebra, x)


# ---------------------------------------------------------------------------
# Module-level vector-space helpers


def linear_combine(c1, a: Element, c2, b: Element) -> Element:
    """Canonical form of c1·a + c2·b."""
    if a.algebra != b.algebra:
        raise AlgebraMismatchError("linear_combine needs operands from one algebra")
    return a.scale(c1) + b.scale(c2)


def lie_bracket(algebra: Algebra, a: Element, b: Element) -> Element:
    """Commutator a·b − b·a of the algebra product."""
    return algebra.multiply(a, b) - algebra.multiply(b, a)


def random_element(algebra: Algebra, spec: DomainSpec, rng=None) -> Element:
    """Reproducible random element inside the spec's bounds."""
    if spec.mode != "random":
        raise InvalidDomainError("random_element needs a random-mode DomainSpec")
    if rng is None:
        import random as _random

        rng = _random.Random(spec.seed)
    return algebra.random_element(spec, rng)


# ---------------------------------------------------------------------------
# Element literal syntax
#
#   Laurent / polynomial:  "3/2 z^-2 + z^0 - z^3"   (variable z or t)
#   finite-dimensional:    "[1/2, 0, -3]"

_TERM_RE = re.compile(
    r"\s*(?P<sign>[+-])?\s*(?P<coeff>\d+(?:/\d+)?)?\s*"
    r"(?:(?P<var>[A-Za-z])(?:\^(?P<exp>-?\d+))?)?"
)


def parse_laurent_literal(algebra: Algebra, text: str) -> Element:
    text = text.strip()
    if not text:
        raise FormatError("empty element literal")
    terms: dict = {}
    pos = 0
    first = True
    while pos < len(text):
        m = _TERM_RE.match(text, pos)
        if m is None or m.end() == pos:
            raise FormatError(f"bad element literal near {text[pos:]!r}")
        sign, coeff, var, exp = m.group("sign", "coeff", "var", "exp")
        if coeff is None and var is None:
            raise FormatError(f"bad element literal near {text[pos:]!r}")
        if not first and sign is None:
            raise FormatError(f"missing sign before {text[pos:]!r}")
        value = parse_rational(coeff) if coeff is not None else Fraction(1)
        if sign == "-":
            value = -value
        if var is not None:
            if var != algebra.variable:
                raise FormatError(
                    f"variable {var!r} does not match {algebra.variable!r}")
            exponent = int(exp) if exp is not None else 1
        else:
            exponent = 0
        terms[exponent] = terms.get(exponent, Fraction(0)) + value
        pos = m.end()
        first = False
    return algebra.element(terms)


def format_laurent_literal(algebra: Algebra, x: Element) -> str:
    if x.is_zero:
        return "0"
    var = algebra.variable
    chunks = []
    for exponent in sorted(x.terms):
        coeff = x.terms[exponent]
        mag = abs(coeff)
        if exponent == 0:
            body = format_rational(mag)
        else:
            mono = var if exponent == 1 else f"{var}^{exponent}"
            body = mono if mag == 1 else f"{format_rational(mag)} {mono}"
        if not chunks:
            chunks.append(body if coeff > 0 else f"-{body}")
        else:
            chunks.append(f"+ {body}" if coeff > 0 else f"- {body}")
    return " ".join(chunks)


def parse_vector_literal(algebra: Algebra, text: str) -> Element:
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise FormatError(f"vector literal must be bracketed: {text!r}")
    inner = text[1:-1].strip()
    parts = [p.strip() for p in inner.split(",")] if inner else []
    if len(parts) != algebra.dimension:
        raise FormatError(
            f"vector literal has {len(parts)} coordinates, "
            f"algebra dimension is {algebra.dimension}")
    return algebra.element({i: parse_rational(p) for i, p in enumerate(parts)})


def format_vector_literal(algebra: Algebra, x: Element) -> str:
    return "[" + ", ".join(format_rational(c) for c in x.coords()) + "]"
