"""Exact arithmetic for a computable fragment of the hyperreal line.

A value is a finite formal Laurent combination ``sum_k c_k * H**k`` where
``H = B**omega`` for a configured integer base ``B >= 2``, ``omega`` is a
fixed infinite natural, and the coefficients ``c_k`` are exact rationals.
``H`` is infinite, ``eps = 1/H`` is a positive infinitesimal, and the
fragment is closed under everything the bundling pipeline does: sums,
products, scaling, division by a monomial, and the standard part.

``omega`` itself is never a value; only powers of ``H`` are represented,
and nothing implemented here depends on which infinite ``omega`` is meant.
General division is deliberately absent: ``monomial_div`` covers the only
divisions that ever occur.  All values are immutable and all operations
are pure, so instances may be shared freely between threads.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, Union

Rational = Fraction
RationalLike = Union[Fraction, int]

_ZERO = Fraction(0)


class BaseMismatchError(ValueError):
    """Raised when hyperreals with different bases are combined."""


class InfiniteValueError(ArithmeticError):
    """Raised when the standard part of an infinite value is requested."""


class Classification(Enum):
    """Coarse magnitude classes of a hyperreal value."""

    INFINITESIMAL = "Infinitesimal"
    FINITE_APPRECIABLE = "FiniteAppreciable"
    INFINITE = "Infinite"


def _as_fraction(value) -> Fraction:
    """Coerce an exact rational; floats are rejected to keep everything exact."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational (int or Fraction), got {type(value).__name__}")


class Hyperreal:
    """Finite Laurent combination in H = B**omega with rational coefficients.

    ``terms`` maps the exponent k to the coefficient of H**k.  Zero
    coefficients are never stored, so the zero value has an empty term map
    and equality is plain structural equality.  Values carry their base and
    never interoperate across bases.
    """

    __slots__ = ("_base", "_terms")

    def __init__(self, base: int, terms=None):
        if not isinstance(base, int) or base < 2:
            raise ValueError(f"base must be an integer >= 2, got {base!r}")
        clean: dict[int, Fraction] = {}
        if terms is not None:
            items = terms.items() if isinstance(terms, Mapping) else terms
            for exp, coeff in items:
                if not isinstance(exp, int):
                    raise TypeError(f"exponent must be an integer, got {exp!r}")
                value = clean.get(exp, _ZERO) + _as_fraction(coeff)
                if value:
                    clean[exp] = value
                else:
                    clean.pop(exp, None)
        self._base = base
        self._terms = clean

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, base: int) -> "Hyperreal":
        return cls(base)

    @classmethod
    def one(cls, base: int) -> "Hyperreal":
        return cls(base, {0: 1})

    @classmethod
    def from_rational(cls, base: int, value: RationalLike) -> "Hyperreal":
        return cls(base, {0: value})

    @classmethod
    def monomial(cls, base: int, coeff: RationalLike, exp: int) -> "Hyperreal":
        return cls(base, {exp: coeff})

    @classmethod
    def generator(cls, base: int) -> "Hyperreal":
        """H = B**omega, the canonical infinite unit."""
        return cls(base, {1: 1})

    @classmethod
    def epsilon(cls, base: int) -> "Hyperreal":
        """eps = 1/B**omega, the canonical positive infinitesimal."""
        return cls(base, {-1: 1})

    # -- structure ----------------------------------------------------

    @property
    def base(self) -> int:
        return self._base

    @property
    def terms(self) -> Mapping[int, Fraction]:
        return MappingProxyType(self._terms)

    def coefficient(self, exp: int) -> Fraction:
        return self._terms.get(exp, _ZERO)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_finite(self) -> bool:
        return all(exp <= 0 for exp in self._terms)

    # -- arithmetic ---------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Hyperreal):
            if other._base != self._base:
                raise BaseMismatchError(
                    f"cannot combine values of base {self._base} and base {other._base}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return Hyperreal.from_rational(self._base, other)
        return None

    def __add__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        merged = dict(self._terms)
        for exp, coeff in rhs._terms.items():
            merged[exp] = merged.get(exp, _ZERO) + coeff
        return Hyperreal(self._base, merged)

    __radd__ = __add__

    def __neg__(self):
        return Hyperreal(self._base, {exp: -coeff for exp, coeff in self._terms.items()})

    def __sub__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        return rhs + (-self)

    def __mul__(self, other):
        rhs = self._coerce(other)
        if rhs is None:
            return NotImplemented
        acc: dict[int, Fraction] = {}
        for ex, cx in self._terms.items():
            for ey, cy in rhs._terms.items():
                acc[ex + ey] = acc.get(ex + ey, _ZERO) + cx * cy
        return Hyperreal(self._base, acc)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            raise ValueError("negative powers are not defined here; see monomial_div")
        result = Hyperreal.one(self._base)
        square = self
        e = exponent
        while e:
            if e & 1:
                result = result * square
            e >>= 1
            if e:
                square = square * square
        return result

    def scale(self, factor: RationalLike) -> "Hyperreal":
        """Multiply every coefficient by an exact rational factor."""
        return self * _as_fraction(factor)

    def monomial_div(self, divisor: RationalLike, exp: int) -> "Hyperreal":
        """Exact division by the single monomial ``divisor * H**exp``."""
        d = _as_fraction(divisor)
        if not d:
            raise ZeroDivisionError("division by a zero monomial coefficient")
        return Hyperreal(self._base, {e - exp: c / d for e, c in self._terms.items()})

    # -- standard part and classification ------------------------------

    def st(self) -> Fraction:
        """Standard part: the unique real infinitely close to a finite value."""
        if not self.is_finite():
            raise InfiniteValueError("standard part undefined: infinite value")
        return self._terms.get(0, _ZERO)

    def classify(self) -> Classification:
        if not self.is_finite():
            return Classification.INFINITE
        if 0 not in self._terms:
            return Classification.INFINITESIMAL  # zero included: 0 lies in mu(0)
        return Classification.FINITE_APPRECIABLE

    def in_monad(self, real: RationalLike) -> bool:
        """True when ``self - real`` is infinitesimal, i.e. self lies in mu(real)."""
        return (self - _as_fraction(real)).classify() is Classification.INFINITESIMAL

    # -- serialization --------------------------------------------------

    def to_triples(self) -> list[list]:
        """Wire form: ``[exponent, numerator, denominator]`` triples with the
        numerator and denominator as decimal strings, descending exponent."""
        return [
            [exp, str(self._terms[exp].numerator), str(self._terms[exp].denominator)]
            for exp in sorted(self._terms, reverse=True)
        ]

    @classmethod
    def from_triples(cls, base: int, triples: Iterable) -> "Hyperreal":
        terms: dict[int, Fraction] = {}
        previous = None
        for item in triples:
            if not isinstance(item, (list, tuple)) or len(item) != 3:
                raise ValueError(f"expected an [exponent, numerator, denominator] triple, got {item!r}")
            exp, num, den = item
            if not isinstance(exp, int) or isinstance(exp, bool):
                raise ValueError(f"triple exponent must be an integer, got {exp!r}")
            if previous is not None and exp >= previous:
                raise ValueError("triples must be in strictly descending exponent order")
            previous = exp
            if not isinstance(num, str) or not _is_decimal(num, signed=True):
                raise ValueError(f"triple numerator must be a decimal string, got {num!r}")
            if not isinstance(den, str) or not _is_decimal(den, signed=False) or int(den) == 0:
                raise ValueError(f"triple denominator must be a positive decimal string, got {den!r}")
            coeff = Fraction(int(num), int(den))
            if not coeff:
                raise ValueError("zero coefficient in serialized value")
            terms[exp] = coeff
        return cls(base, terms)

    # -- object protocol -------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Hyperreal):
            return NotImplemented
        return self._base == other._base and self._terms == other._terms

    def __hash__(self):
        return hash((self._base, frozenset(self._terms.items())))

    def __repr__(self):
        return f"Hyperreal({self._base}, {str(self)!r})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for exp in sorted(self._terms, reverse=True):
            coeff = self._terms[exp]
            body = _term_body(-coeff if coeff < 0 else coeff, exp)
            if not parts:
                parts.append(f"-{body}" if coeff < 0 else body)
            else:
                parts.append(f" - {body}" if coeff < 0 else f" + {body}")
        return "".join(parts)


def _term_body(magnitude: Fraction, exp: int) -> str:
    if exp == 0:
        return str(magnitude)
    symbol = "H" if exp > 0 else "eps"
    power = abs(exp)
    symbol_pow = symbol if power == 1 else f"{symbol}^{power}"
    return symbol_pow if magnitude == 1 else f"{magnitude}*{symbol_pow}"


def _is_decimal(text: str, signed: bool) -> bool:
    body = text[1:] if signed and text.startswith("-") else text
    return bool(body) and body.isascii() and body.isdigit()


class Hypernatural:
    """A hyperreal restricted to natural-number form.

    Coefficients must be nonnegative integers on nonnegative powers of H;
    finite naturals, infinite counts such as ``42*H``, and mixed values such
    as ``H + 3`` all qualify.  ``is_infinite`` reports membership among the
    infinite naturals (some positive power of H present).  Zero is admitted
    only as the degenerate count carried by code 0 and is flagged through
    ``is_degenerate``.
    """

    __slots__ = ("_value",)

    def __init__(self, value: Hyperreal):
        if not isinstance(value, Hyperreal):
            raise TypeError(f"expected a Hyperreal, got {type(value).__name__}")
        for exp, coeff in value.terms.items():
            if exp < 0:
                raise ValueError("a hypernatural cannot carry negative powers of H")
            if coeff.denominator != 1 or coeff < 0:
                raise ValueError("hypernatural coefficients must be nonnegative integers")
        self._value = value

    @classmethod
    def from_int(cls, n: int, base: int) -> "Hypernatural":
        if not isinstance(n, int) or n < 0:
            raise ValueError(f"expected a nonnegative integer, got {n!r}")
        return cls(Hyperreal.from_rational(base, n))

    @property
    def value(self) -> Hyperreal:
        return self._value

    @property
    def base(self) -> int:
        return self._value.base

    @property
    def is_infinite(self) -> bool:
        return any(exp >= 1 for exp in self._value.terms)

    @property
    def is_degenerate(self) -> bool:
        return self._value.is_zero()

    def __eq__(self, other):
        if not isinstance(other, Hypernatural):
            return NotImplemented
        return self._value == other._value

    def __hash__(self):
        return hash(("Hypernatural", self._value))

    def __repr__(self):
        return f"Hypernatural({self._value!r})"


def lambda_for_code(code: int, base: int) -> Hypernatural:
    """Canonical infinite count for a code: ``code * H``.

    By construction ``st(count / H)`` recovers the code exactly.  The
    witness is canonical rather than unique; any count whose ratio to H
    lies in the monad of the code would serve.  Code 0 yields the
    degenerate zero count, reported through ``is_degenerate`` (and
    ``is_infinite`` False).
    """
    if not isinstance(code, int) or code < 0:
        raise ValueError(f"code must be a nonnegative integer, got {code!r}")
    return Hypernatural(Hyperreal.monomial(base, code, 1))


def hyperfinite_constant_sum(count: Hypernatural, term: Hyperreal) -> Hyperreal:
    """Closed form ``count * term`` of a count-fold sum of a constant term.

    For finite counts this equals literal repeated addition; for infinite
    counts it is the transferred value of the same sum.
    """
    if count.base != term.base:
        raise BaseMismatchError(
            f"count has base {count.base} but term has base {term.base}"
        )
    return count.value * term
