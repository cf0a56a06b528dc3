"""Independent reference implementations used to derive expected values.

These deliberately avoid the library's shortcut paths: products are naive
double loops over explicit term lists, counted translations are literally
iterated, counted sums are literally accumulated, and word codes come from
plain shortlex enumeration.
"""

from fractions import Fraction
from itertools import product

from subparticle.hyperreal import Hyperreal


def convolve_terms(xs, ys):
    """Product of two [(exponent, coefficient)] term lists by double loop."""
    acc = {}
    for ex, cx in xs:
        for ey, cy in ys:
            key = ex + ey
            acc[key] = acc.get(key, Fraction(0)) + Fraction(cx) * Fraction(cy)
    return {exp: coeff for exp, coeff in acc.items() if coeff != 0}


def iterate_translation(coords, translation, times):
    """Apply x -> x + b literally `times` times (finite counts only)."""
    out = tuple(coords)
    for _ in range(times):
        out = tuple(x + b for x, b in zip(out, translation))
    return out


def repeated_addition(term, times):
    """Literal times-fold sum of a constant term."""
    total = Hyperreal.zero(term.base)
    for _ in range(times):
        total = total + term
    return total


def shortlex_words(symbols, max_len):
    """All words over `symbols` in shortlex order, empty word first."""
    yield ""
    for length in range(1, max_len + 1):
        for combo in product(symbols, repeat=length):
            yield "".join(combo)


def random_hyperreal(rng, base=10, max_terms=4, exp_lo=-4, exp_hi=4, limit=10**6):
    """Random value with up to max_terms terms, exponents in [exp_lo, exp_hi],
    numerators and denominators bounded by `limit`."""
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        exp = rng.randint(exp_lo, exp_hi)
        coeff = Fraction(rng.randint(-limit, limit), rng.randint(1, limit))
        terms[exp] = terms.get(exp, Fraction(0)) + coeff
    return Hyperreal(base, terms)


def random_word(rng, symbols, max_len):
    length = rng.randint(0, max_len)
    return "".join(rng.choice(symbols) for _ in range(length))
