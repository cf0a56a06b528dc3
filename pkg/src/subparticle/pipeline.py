"""End-to-end runs: encode a word, bundle it, realize it, decode it back."""

from __future__ import annotations

from .codec import Alphabet, decode, encode
from .engine import (
    InfiniteCoordinateError,
    IntermediateSubparticle,
    Ultrasubparticle,
    bundle,
    realize,
)
from .hyperreal import lambda_for_code
from .ledger import LEDGER_VERSION, Config, Ledger


class IntegrityError(ValueError):
    """Recomputation from a ledger's stored coordinates failed or disagreed."""


def run_pipeline(word: str, config: Config | None = None) -> Ledger:
    """Run encode -> count -> bundle -> realize -> decode, recording every stage."""
    config = config if config is not None else Config()
    alphabet = Alphabet(config.alphabet)
    code = encode(word, alphabet)
    count = lambda_for_code(code, config.base)
    particle = Ultrasubparticle(config.base, config.dims, naming=0, signs=config.signs_tuple())
    intermediate = bundle(particle, config.bundle_coordinate, count)
    realized = realize(intermediate)
    decoded = decode(_recover_code(realized.coords, config), alphabet)
    return Ledger(
        version=LEDGER_VERSION,
        config=config,
        word=word,
        code=code,
        sequence_head=code,
        count=count,
        bundle_sign=config.bundle_sign,
        ultrasubparticle=particle.coords(),
        intermediate=intermediate.coords,
        realized=realized.coords,
        decoded=decoded,
    )


def recompute_decoded(ledger: Ledger) -> str:
    """Re-derive the word from the stored intermediate coordinates only.

    Nothing downstream of ``intermediate`` is trusted: realization and
    decoding are recomputed, so the ledger serves as checkable evidence
    rather than a claim.
    """
    config = ledger.config
    try:
        intermediate = IntermediateSubparticle(config.base, ledger.intermediate)
        realized = realize(intermediate)
    except (ValueError, InfiniteCoordinateError) as exc:
        raise IntegrityError(f"stored intermediate cannot be realized: {exc}") from exc
    return decode(_recover_code(realized.coords, config), Alphabet(config.alphabet))


def _recover_code(realized_coords, config: Config) -> int:
    value = realized_coords[config.bundle_coordinate - 1] * config.bundle_sign
    if value.denominator != 1 or value < 0:
        raise IntegrityError(
            f"realized coordinate {config.bundle_coordinate} does not carry a natural number: {value}"
        )
    return int(value)
