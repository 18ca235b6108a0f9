"""Bounded-distance decoder for the (63, 51) code and its (31, 19) shortening.

Pipeline: syndrome computation, closed-form inversion-less locator for
degree <= 2, Chien search with reciprocal-root position mapping, bit-flip
correction.  All arithmetic is exact; every comparison is equality.

Decoding is bounded-distance: received words within Hamming distance 2 of
a codeword are corrected to it, words outside every radius-2 ball come
back Uncorrectable, and words inside a wrong ball miscorrect (unavoidable
for any distance-2 decoder).  Corrected outputs always re-verify to zero
syndromes.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from .gf64 import GfTables, gf_mul_table
from .encoder import CODEWORD_BITS, PARITY_BITS, SHORT_CODEWORD_BITS, SHORT_PAYLOAD_BITS


class SyndromeSet(NamedTuple):
    s1: int
    s2: int
    s3: int


class ErrorLocator(NamedTuple):
    lambda0: int
    lambda1: int
    lambda2: int


class DecodeStatus(Enum):
    NO_ERROR = "no_error"
    CORRECTED = "corrected"
    UNCORRECTABLE = "uncorrectable"


@dataclass(frozen=True)
class DecodeOutcome:
    """Result of one decode.

    `positions` is nonempty only for CORRECTED.  `corrected` is the
    repaired word (or, for the shortened decoder, the 19-bit payload) and
    is None when UNCORRECTABLE.
    """

    status: DecodeStatus
    positions: frozenset[int]
    corrected: int | None


_ZERO_SYNDROMES = SyndromeSet(0, 0, 0)

# Exponents i*j mod 63 for the three evaluation points, indexed by position.
_EXP2 = tuple(2 * j % 63 for j in range(CODEWORD_BITS))
_EXP3 = tuple(3 * j % 63 for j in range(CODEWORD_BITS))


def compute_syndromes(received: int, tables: GfTables) -> SyndromeSet:
    """Evaluate the received polynomial at alpha, alpha^2, alpha^3.

    S_i is the XOR of alpha^(i*j) over the set bit positions j, with
    exponents reduced mod 63; all three are accumulated in one pass.
    """
    if received >> CODEWORD_BITS:
        raise ValueError("received word exceeds 63 bits")
    antilog = tables.antilog
    exp2, exp3 = _EXP2, _EXP3
    s1 = s2 = s3 = 0
    word = received
    while word:
        low = word & -word
        j = low.bit_length() - 1
        word ^= low
        s1 ^= antilog[j]
        s2 ^= antilog[exp2[j]]
        s3 ^= antilog[exp3[j]]
    return SyndromeSet(s1, s2, s3)


def solve_locator(syndromes: SyndromeSet, tables: GfTables) -> ErrorLocator:
    """Closed-form locator coefficients, no field inversions.

    (lambda0, lambda1, lambda2) = (S1, S1*S1, S3 + S1*S2).  For a single
    error the quadratic term cancels and the locator degree collapses to 1.
    """
    s1, s2, s3 = syndromes
    return ErrorLocator(
        s1,
        gf_mul_table(s1, s1, tables),
        s3 ^ gf_mul_table(s1, s2, tables),
    )


def chien_search(locator: ErrorLocator, n: int, tables: GfTables) -> set[int]:
    """Roots of the locator by trying every nonzero field element.

    Evaluates lambda0 + lambda1*alpha^j + lambda2*alpha^(2j) iteratively
    for j = 0..62: each step multiplies the linear cell by alpha and the
    quadratic cell by alpha^2.  A zero sum at step j means alpha^j is a
    root; the error position is the reciprocal exponent (63 - j) mod 63.
    Positions >= n are dropped (shortened use passes n = 31).
    """
    if locator == (0, 0, 0):
        raise ValueError("all-zero locator has no roots to search")
    alpha = tables.antilog[1]
    alpha_sq = tables.antilog[2]
    q1, q2 = locator.lambda1, locator.lambda2
    positions: set[int] = set()
    for j in range(63):
        if locator.lambda0 ^ q1 ^ q2 == 0:
            position = (63 - j) % 63
            if position < n:
                positions.add(position)
        q1 = gf_mul_table(q1, alpha, tables)
        q2 = gf_mul_table(q2, alpha_sq, tables)
    return positions


def apply_correction(received: int, positions) -> int:
    """Flip the bits at the given positions."""
    flipped = received
    for p in positions:
        if not 0 <= p < CODEWORD_BITS:
            raise ValueError(f"error position {p} out of range")
        flipped ^= 1 << p
    return flipped


def decode(received: int, tables: GfTables) -> DecodeOutcome:
    """Full decode of a 63-bit received word.

    Classification:
      1. all syndromes zero -> NO_ERROR;
      2. S1 = 0 with (S2, S3) != (0, 0) -> UNCORRECTABLE (no weight <= 2
         pattern can produce that);
      3. otherwise solve the locator, expect degree 2 if lambda2 != 0 else
         1, and run the Chien search: a root count equal to the degree is
         CORRECTED (flipped and re-verified to zero syndromes), anything
         else UNCORRECTABLE.
    """
    syndromes = compute_syndromes(received, tables)
    if syndromes == _ZERO_SYNDROMES:
        return DecodeOutcome(DecodeStatus.NO_ERROR, frozenset(), received)
    if syndromes.s1 == 0:
        return DecodeOutcome(DecodeStatus.UNCORRECTABLE, frozenset(), None)
    locator = solve_locator(syndromes, tables)
    degree = 2 if locator.lambda2 else 1
    positions = chien_search(locator, CODEWORD_BITS, tables)
    if len(positions) != degree:
        return DecodeOutcome(DecodeStatus.UNCORRECTABLE, frozenset(), None)
    corrected = apply_correction(received, positions)
    assert compute_syndromes(corrected, tables) == _ZERO_SYNDROMES, \
        "corrected word failed the zero-syndrome re-check"
    return DecodeOutcome(DecodeStatus.CORRECTED, frozenset(positions), corrected)


def decode_shortened(received31: int, tables: GfTables) -> DecodeOutcome:
    """Decode a 31-bit shortened word; `corrected` is the 19-bit payload.

    The 32 untransmitted message positions (codeword bits 31..62) are
    re-inserted as zeros.  Errors cannot occur in bits that were never
    sent, so any reported position there makes the word UNCORRECTABLE.
    """
    if received31 >> SHORT_CODEWORD_BITS:
        raise ValueError("shortened word exceeds 31 bits")
    outcome = decode(received31, tables)
    if outcome.status is DecodeStatus.UNCORRECTABLE:
        return outcome
    if any(p >= SHORT_CODEWORD_BITS for p in outcome.positions):
        return DecodeOutcome(DecodeStatus.UNCORRECTABLE, frozenset(), None)
    payload = (outcome.corrected >> PARITY_BITS) & ((1 << SHORT_PAYLOAD_BITS) - 1)
    return DecodeOutcome(outcome.status, outcome.positions, payload)
