"""Decoders for superimposed codes and a binary-symmetric-channel harness.

The staged decoder follows the two-step structure of a ``(u^a, u^b + v)``
word: fold the received halves to expose a noisy ``v``, decode it, strip it,
then decode ``u`` from the ``a + b`` noisy copies that remain.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass
from typing import Literal

import numpy as np

from .analyze import min_distance
from .construct import Codebook, ParameterError, build_c2
from .gf2words import LengthMismatchError, Word, repeat, xor

GENERATOR_NAME = "numpy.PCG64"

DecoderKind = Literal["staged", "ml"]


@dataclass(frozen=True)
class DecodeResult:
    message: int | None
    stage_v_ok: bool
    stage_u_ok: bool
    corrected_errors: int | None
    tie: bool = False


def _check_length(code: Codebook, r: Word) -> None:
    if r.length != code.n:
        raise LengthMismatchError(f"received word has length {r.length}, code has n={code.n}")


def ml_decode(code: Codebook, r: Word) -> DecodeResult:
    """Nearest codeword; ties go to the smallest message index and are flagged."""
    _check_length(code, r)
    best, best_dist, tie = 0, code.n + 1, False
    for m, w in enumerate(code.values):
        dist = (w ^ r.value).bit_count()
        if dist < best_dist:
            best, best_dist, tie = m, dist, False
        elif dist == best_dist:
            tie = True
    return DecodeResult(best, True, True, best_dist, tie)


def bounded_distance_decode(code: Codebook, r: Word, radius: int) -> int | None:
    """Index of the codeword within ``radius`` of ``r``, if there is exactly one."""
    _check_length(code, r)
    found = None
    for m, w in enumerate(code.values):
        if (w ^ r.value).bit_count() <= radius:
            if found is not None and code.values[found] != w:
                return None
            if found is None:
                found = m
    return found


def majority_decode(r: Word) -> tuple[int, bool]:
    """Majority vote over a repetition word; a tie reports (0, False)."""
    if r.length < 1:
        raise ValueError("majority of an empty word")
    ones = r.weight
    zeros = r.length - ones
    if ones == zeros:
        return 0, False
    return int(ones > zeros), True


def _staged_radii(code: Codebook) -> tuple[int, int]:
    lay = code.layout
    d_v = min_distance(lay.v_code)
    d_u = min_distance(lay.u_code)
    s = lay.a + lay.b
    return (d_v - 1) // 2, (s * d_u - 1) // 2


def staged_decode(code: Codebook, r: Word) -> DecodeResult:
    """Two-stage decoding of a codebook carrying a ``(u^a, u^b + v)`` layout.

    Requires no zero padding (h = 0) and at least one clear copy of u.
    """
    lay = code.layout
    if lay is None or lay.h != 0 or lay.a < 1:
        raise ParameterError("staged decoding needs a (u^a, u^b + v) code with a >= 1 and h = 0")
    _check_length(code, r)
    nu = lay.u_code.n
    clear, masked = r.split(lay.a * nu)
    first_copy = clear.split(nu)[0]
    radius_v, radius_u = _staged_radii(code)

    folded = xor(masked, repeat(first_copy, lay.b))
    m_v = bounded_distance_decode(lay.v_code, folded, radius_v)
    if m_v is None:
        return DecodeResult(None, False, False, None)

    stripped = Word((clear.value << masked.length) | (masked.value ^ lay.v_code.values[m_v]), r.length)
    s = lay.a + lay.b
    copies = Codebook(s * nu, lay.u_code.k, tuple(repeat(u, s) for u in lay.u_code.words))
    m_u = bounded_distance_decode(copies, stripped, radius_u)
    if m_u is None:
        return DecodeResult(None, True, False, None)

    message = (m_u << lay.v_code.k) | m_v
    return DecodeResult(message, True, True, (code.values[message] ^ r.value).bit_count())


def staged_decode_c2(u_code: Codebook, v_code: Codebook, r: Word) -> DecodeResult:
    if r.length != 2 * u_code.n:
        raise LengthMismatchError(f"received length {r.length} != 2 * {u_code.n}")
    return staged_decode(build_c2(u_code, v_code), r)


def c2_guarantee_region(u_code: Codebook, v_code: Codebook, e: Word) -> bool:
    """Whether ``e`` lies where both stages of C2 decoding are guaranteed.

    The folded error must be within the v-code's correcting radius and the
    total error weight at most d_u - 1, d_u being the u-code's minimum
    distance (the doubled code {(u, u)} has distance 2 d_u).
    """
    e_left, e_right = e.split(u_code.n)
    d_v = min_distance(v_code)
    d_u = min_distance(u_code)
    return xor(e_left, e_right).weight <= (d_v - 1) // 2 and e.weight <= d_u - 1


def decode(code: Codebook, r: Word, decoder: DecoderKind) -> DecodeResult:
    if decoder == "ml":
        return ml_decode(code, r)
    if decoder == "staged":
        return staged_decode(code, r)
    raise ParameterError(f"unknown decoder {decoder!r}")


# --- channel simulation ------------------------------------------------------------


@dataclass(frozen=True)
class SimStats:
    n: int
    k: int
    d: int
    decoder: str
    p: float
    trials: int
    seed: int
    generator: str
    word_errors: int
    stage1_failures: int
    stage2_failures: int
    ties: int
    wer: float

    def as_dict(self) -> dict:
        out = asdict(self)
        out["code"] = {"n": out.pop("n"), "k": out.pop("k"), "d": out.pop("d")}
        return out

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), separators=(",", ":"), sort_keys=True)


def _pack_rows(bits: np.ndarray) -> list[int]:
    n = bits.shape[1]
    packed = np.packbits(bits, axis=1)
    shift = packed.shape[1] * 8 - n
    return [int.from_bytes(row.tobytes(), "big") >> shift for row in packed]


def channel_simulate(
    code: Codebook, decoder: DecoderKind, p: float, trials: int, seed: int
) -> SimStats:
    """Monte Carlo word-error rate over a binary symmetric channel.

    Messages are uniform, errors i.i.d. with flip probability ``p``. All draws
    come from one PCG64 stream seeded by ``seed``, so results are reproducible.
    """
    if not 0.0 <= p <= 0.5:
        raise ParameterError(f"flip probability must be in [0, 1/2], got {p}")
    if trials < 1:
        raise ParameterError(f"trials must be >= 1, got {trials}")
    if decoder == "staged" and (code.layout is None or code.layout.h != 0 or code.layout.a < 1):
        raise ParameterError("staged decoder requires a code built as (u^a, u^b + v) with h = 0")
    if decoder not in ("staged", "ml"):
        raise ParameterError(f"unknown decoder {decoder!r}")

    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))
    messages = rng.integers(0, 1 << code.k, size=trials)
    flips = rng.random((trials, code.n)) < p
    errors = _pack_rows(flips.astype(np.uint8))

    values = code.values
    cache: dict[int, DecodeResult] = {}
    word_errors = stage1 = stage2 = ties = 0
    for m, e in zip(messages.tolist(), errors):
        received = values[m] ^ e
        res = cache.get(received)
        if res is None:
            res = decode(code, Word(received, code.n), decoder)
            cache[received] = res
        if res.message != m:
            word_errors += 1
        if not res.stage_v_ok:
            stage1 += 1
        elif not res.stage_u_ok:
            stage2 += 1
        ties += res.tie
    return SimStats(
        n=code.n,
        k=code.k,
        d=min_distance(code),
        decoder=decoder,
        p=p,
        trials=trials,
        seed=seed,
        generator=GENERATOR_NAME,
        word_errors=word_errors,
        stage1_failures=stage1,
        stage2_failures=stage2,
        ties=ties,
        wer=word_errors / trials,
    )


def exact_word_error_rate(code: Codebook, decoder: DecoderKind, p: float) -> float:
    """Word-error rate by summing over every error pattern (n <= 20)."""
    if code.n > 20:
        raise ParameterError(f"exhaustive error enumeration limited to n <= 20, got {code.n}")
    n = code.n
    total = 0.0
    for m, c in enumerate(code.values):
        for e in range(1 << n):
            w = e.bit_count()
            res = decode(code, Word(c ^ e, n), decoder)
            if res.message != m:
                total += p**w * (1 - p) ** (n - w)
    return total / len(code.values)
