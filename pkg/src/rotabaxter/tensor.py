"""Tensor squares and cubes over unital finite-dimensional algebras,
and the associative Yang-Baxter residual

    acybe(r) = r13·r12 − r12·r23 + r23·r13,   r ∈ A⊗A,

whose vanishing characterizes solutions.  Embeddings insert the unit in
the omitted slot, so the algebra must be unital; non-unital algebras
are rejected rather than silently extended.

``induced_operator`` realizes the natural two-sided multiplication
candidate x ↦ Σ u_i·x·v_i for r = Σ u_i⊗v_i.  Whether it satisfies the
weight-0 Rota-Baxter relation is checked empirically per tensor, never
assumed.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import Primitive
from .algebras import FiniteAlgebra
from .errors import AlgebraMismatchError, FormatError, UnsupportedDomainError
from .operators import WeightedOperator
from .rationals import as_rational, format_rational


class _Tensor:
    """Shared sparse representation: keys are index tuples."""

    __slots__ = ("algebra", "terms")
    rank = 0

    def __init__(self, algebra: FiniteAlgebra, terms):
        clean = {}
        for key, coeff in terms.items():
            key = tuple(key)
            if len(key) != self.rank:
                raise FormatError(f"tensor key {key} must have {self.rank} indices")
            for idx in key:
                algebra.validate_key(idx)
            coeff = as_rational(coeff)
            if coeff != 0:
                clean[key] = clean.get(key, Fraction(0)) + coeff
        clean = {k: c for k, c in clean.items() if c != 0}
        object.__setattr__(self, "algebra", algebra)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("tensors are immutable")

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def _check_same(self, other):
        if self.algebra != other.algebra or self.rank != other.rank:
            raise AlgebraMismatchError("tensor operands do not match")

    def __add__(self, other):
        self._check_same(other)
        merged = dict(self.terms)
        for key, coeff in other.terms.items():
            merged[key] = merged.get(key, Fraction(0)) + coeff
        return type(self)(self.algebra, merged)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, scalar):
        c = as_rational(scalar)
        return type(self)(self.algebra, {k: c * v for k, v in self.terms.items()})

    def __rmul__(self, scalar):
        return self.scale(scalar)

    def __eq__(self, other):
        return (type(other) is type(self) and self.algebra == other.algebra
                and self.terms == other.terms)

    def __hash__(self):
        return hash((type(self).__name__, tuple(sorted(self.terms.items()))))

    def __str__(self):
        if self.is_zero:
            return "0"
        chunks = []
        for key in sorted(self.terms):
            coeff = self.terms[key]
            mag = abs(coeff)
            body = f"e[{','.join(str(i) for i in key)}]"
            if mag != 1:
                body = f"{format_rational(mag)} {body}"
            if not chunks:
                chunks.append(body if coeff > 0 else f"-{body}")
            else:
                chunks.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(chunks)

    def __repr__(self):
        return f"<{type(self).__name__} {self}>"


class Tensor2(_Tensor):
    rank = 2


class Tensor3(_Tensor):
    rank = 3


def tensor2(algebra: FiniteAlgebra, terms) -> Tensor2:
    return Tensor2(algebra, terms)


def tensor3(algebra: FiniteAlgebra, terms) -> Tensor3:
    return Tensor3(algebra, terms)


def _unit_terms(algebra: FiniteAlgebra) -> dict:
    if not algebra.unital:
        raise UnsupportedDomainError(
            f"{algebra.describe()} has no unit; tensor embeddings need one")
    return {i: c for i, c in enumerate(algebra.constants.unit) if c != 0}


def embed(r: Tensor2, slots: str) -> Tensor3:
    """Insert the unit in the slot omitted by ``slots`` ("12", "13", "23")."""
    unit = _unit_terms(r.algebra)
    out: dict = {}
    for (i, j), coeff in r.terms.items():
        for u, cu in unit.items():
            if slots == "12":
                key = (i, j, u)
            elif slots == "13":
                key = (i, u, j)
            elif slots == "23":
                key = (u, i, j)
            else:
                raise FormatError(f"slot pair must be 12, 13 or 23, got {slots!r}")
            out[key] = out.get(key, Fraction(0)) + coeff * cu
    return Tensor3(r.algebra, out)


def mul3(s: Tensor3, t: Tensor3) -> Tensor3:
    """Slot-wise product in A⊗A⊗A."""
    s._check_same(t)
    alg = s.algebra
    out: dict = {}
    for (a1, a2, a3), ca in s.terms.items():
        for (b1, b2, b3), cb in t.terms.items():
            c = ca * cb
            for k1, c1 in alg.basis_product(a1, b1).items():
                for k2, c2 in alg.basis_product(a2, b2).items():
                    c12 = c1 * c2
                    for k3, c3 in alg.basis_product(a3, b3).items():
                        key = (k1, k2, k3)
                        out[key] = out.get(key, Fraction(0)) + c * c12 * c3
    return Tensor3(alg, out)


def acybe_residual(r: Tensor2) -> Tensor3:
    """Exact residual; r solves the equation iff the residual is zero."""
    r12 = embed(r, "12")
    r13 = embed(r, "13")
    r23 = embed(r, "23")
    return mul3(r13, r12) - mul3(r12, r23) + mul3(r23, r13)


def induced_operator(r: Tensor2) -> WeightedOperator:
    """x ↦ Σ c_ij · e_i·x·e_j for r = Σ c_ij e_i⊗e_j; declared weight 0."""
    alg = r.algebra
    _unit_terms(alg)
    terms = tuple(sorted(r.terms.items()))

    def apply(algebra, x):
        out = algebra.zero()
        for (i, j), coeff in terms:
            out = out + coeff * algebra.multiply(
                algebra.multiply(algebra.basis_element(i), x),
                algebra.basis_element(j))
        return out

    expr = Primitive(f"induced({len(terms)} terms)", apply,
                     params=("induced", terms), kinds=(alg.kind,),
                     dimension=alg.dimension)
    return WeightedOperator(expr, Fraction(0), alg,
                            note="two-sided multiplication induced by a tensor")


# ---------------------------------------------------------------------------
# Tensor file format (JSON):
#   {"algebra": "matrix:2" | "componentwise:n" | "file:...",
#    "terms": [{"i": p, "j": q, "coeff": "p/q"}, ...]}   (0-based indices)


def tensor2_from_json(data, algebra: FiniteAlgebra) -> Tensor2:
    if not isinstance(data, dict):
        raise FormatError("tensor file must be a JSON object")
    raw = data.get("terms")
    if not isinstance(raw, list):
        raise FormatError("field 'terms' must be a list")
    terms: dict = {}
    for k, entry in enumerate(raw):
        if not isinstance(entry, dict) or not {"i", "j", "coeff"} <= set(entry):
            raise FormatError(f"field 'terms'[{k}] needs keys i, j, coeff")
        i, j = entry["i"], entry["j"]
        if not isinstance(i, int) or not isinstance(j, int):
            raise FormatError(f"field 'terms'[{k}]: indices must be integers")
        key = (i, j)
        terms[key] = terms.get(key, Fraction(0)) + as_rational(entry["coeff"])
    return Tensor2(algebra, terms)


def tensor2_to_json(r: Tensor2, algebra_name: str) -> dict:
    return {
        "algebra": algebra_name,
        "terms": [{"i": i, "j": j, "coeff": format_rational(c)}
                  for (i, j), c in sorted(r.terms.items())],
    }
