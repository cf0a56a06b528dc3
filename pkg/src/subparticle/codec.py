"""Injective word <-> natural-number codec via bijective base-A numeration.

Symbols take values 1..A in alphabet order and a word s_0..s_{L-1} encodes
to ``sum v(s_t) * A**(L-1-t)``; the empty word encodes to 0.  Because there
is no zero digit this is a bijection between all finite words and all of
the naturals, so decoding is total: every realized natural names exactly
one word.  Encoding is also an order isomorphism from shortlex word order
onto the usual order of the naturals.
"""

from __future__ import annotations

from dataclasses import dataclass

DEFAULT_ALPHABET = "abcdefghijklmnopqrstuvwxyz "


class SymbolNotInAlphabetError(ValueError):
    """A word contains a character outside the configured alphabet."""

    def __init__(self, symbol: str, position: int):
        super().__init__(f"symbol not in alphabet at position {position}: {symbol!r}")
        self.symbol = symbol
        self.position = position


@dataclass(frozen=True)
class Alphabet:
    """Ordered set of distinct symbols; the order defines the code."""

    symbols: str = DEFAULT_ALPHABET

    def __post_init__(self):
        if not self.symbols:
            raise ValueError("alphabet must not be empty")
        if len(set(self.symbols)) != len(self.symbols):
            raise ValueError("alphabet symbols must be distinct")

    @property
    def size(self) -> int:
        return len(self.symbols)


_DEFAULT = Alphabet()


def encode(word: str, alphabet: Alphabet | None = None) -> int:
    """Map a word to its natural-number code (injective, empty word -> 0)."""
    alpha = alphabet if alphabet is not None else _DEFAULT
    size = alpha.size
    code = 0
    for position, symbol in enumerate(word):
        try:
            value = alpha.symbols.index(symbol) + 1
        except ValueError:
            raise SymbolNotInAlphabetError(symbol, position) from None
        code = code * size + value
    return code


def decode(code: int, alphabet: Alphabet | None = None) -> str:
    """Exact inverse of encode, defined on every natural number."""
    if not isinstance(code, int) or code < 0:
        raise ValueError(f"code must be a nonnegative integer, got {code!r}")
    alpha = alphabet if alphabet is not None else _DEFAULT
    size = alpha.size
    out = []
    n = code
    while n > 0:
        digit = (n - 1) % size + 1
        out.append(alpha.symbols[digit - 1])
        n = (n - digit) // size
    return "".join(reversed(out))
