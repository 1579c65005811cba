"""Laurent polynomials in d variables with exact rational coefficients.

A monomial z^p stands for the character x -> exp(2 pi i p.x) of T^d.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping


class LaurentPolynomial:
    __slots__ = ("d", "terms")

    def __init__(self, d: int, terms: Mapping[tuple, object] | Iterable = ()):
        if isinstance(terms, dict):
            terms = terms.items()
        acc: dict[tuple, Fraction] = {}
        for exp, c in terms:
            exp = tuple(int(e) for e in exp)
            if len(exp) != d:
                raise ValueError(f"exponent {exp} has wrong length for d={d}")
            if type(c) is not Fraction:
                c = Fraction(c)
            acc[exp] = acc[exp] + c if exp in acc else c
        self.d = d
        self.terms = {e: c for e, c in acc.items() if c}

    @classmethod
    def _raw(cls, d: int, terms: dict) -> "LaurentPolynomial":
        # trusted: tuple exponents of length d, nonzero Fraction coefficients
        obj = cls.__new__(cls)
        obj.d = d
        obj.terms = terms
        return obj

    @classmethod
    def monomial(cls, exp, coeff=1) -> "LaurentPolynomial":
        exp = tuple(exp)
        return cls(len(exp), {exp: coeff})

    @classmethod
    def constant(cls, d: int, c=1) -> "LaurentPolynomial":
        return cls(d, {(0,) * d: c})

    @classmethod
    def zero(cls, d: int) -> "LaurentPolynomial":
        return cls(d)

    def _check(self, other):
        if not isinstance(other, LaurentPolynomial):
            return False
        if other.d != self.d:
            raise ValueError(f"dimension mismatch {self.d} vs {other.d}")
        return True

    def __add__(self, other):
        if not self._check(other):
            return NotImplemented
        return LaurentPolynomial(self.d, list(self.terms.items()) + list(other.terms.items()))

    def __neg__(self):
        return LaurentPolynomial._raw(self.d, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return LaurentPolynomial(self.d, {e: c * other for e, c in self.terms.items()})
        if not self._check(other):
            return NotImplemented
        out: dict[tuple, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                out[e] = out[e] + c1 * c2 if e in out else c1 * c2
        return LaurentPolynomial._raw(self.d, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def conj(self) -> "LaurentPolynomial":
        """f*; negates exponents (coefficients are real)."""
        return LaurentPolynomial._raw(self.d, {tuple(-x for x in e): c
                                               for e, c in self.terms.items()})

    def map_exponents(self, fn) -> "LaurentPolynomial":
        return LaurentPolynomial(self.d, [(fn(e), c) for e, c in self.terms.items()])

    def constant_term(self) -> Fraction:
        return self.terms.get((0,) * self.d, Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self == LaurentPolynomial.constant(self.d, other)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.d == other.d and self.terms == other.terms

    def __hash__(self):
        return hash((self.d, frozenset(self.terms.items())))

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        return f"LaurentPolynomial({self.d}, {dict(sorted(self.terms.items()))!r})"

    def __str__(self):
        if not self.terms:
            return "0"
        out = []
        for e, c in sorted(self.terms.items()):
            mono = "*".join(
                f"z{i + 1}" if k == 1 else f"z{i + 1}^{k}" for i, k in enumerate(e) if k)
            if not mono:
                out.append(str(c))
            elif c == 1:
                out.append(mono)
            elif c == -1:
                out.append("-" + mono)
            else:
                out.append(f"{c}*{mono}")
        return " + ".join(out).replace("+ -", "- ")
