"""Exact measurements on codebooks by enumeration."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from itertools import combinations

from .bv import bv_lookup
from .construct import Codebook


class UndefinedDistanceError(ValueError):
    """Minimum distance asked of a codebook with fewer than two words."""


def pairwise_min_distance(code: Codebook) -> int:
    vals = code.values
    if len(vals) < 2:
        raise UndefinedDistanceError(f"codebook with {len(vals)} word(s) has no minimum distance")
    best = code.n + 1
    for i, x in enumerate(vals):
        for y in vals[i + 1 :]:
            dist = (x ^ y).bit_count()
            if dist < best:
                best = dist
                if best == 0:
                    return 0
    return best


def min_nonzero_weight(code: Codebook) -> int | None:
    nz = [v.bit_count() for v in code.values if v]
    return min(nz) if nz else None


def min_distance(code: Codebook) -> int:
    """Minimum distance over all distinct pairs.

    For a linear codebook the minimum nonzero weight is computed too and the
    two must agree.
    """
    d = pairwise_min_distance(code)
    if is_linear(code):
        d_weight = min_nonzero_weight(code)
        if d_weight is not None and d_weight != d:
            raise AssertionError(f"linear code: pairwise d={d} but min weight {d_weight}")
    return d


def weight_spectrum(code: Codebook) -> dict[int, int]:
    return dict(sorted(Counter(v.bit_count() for v in code.values).items()))


def is_constant_weight(code: Codebook) -> tuple[bool, int | None]:
    weights = {v.bit_count() for v in code.values if v}
    if len(weights) > 1:
        return False, None
    return True, (weights.pop() if weights else None)


def is_linear(code: Codebook) -> bool:
    """Distinct words forming a set closed under xor (a k-dimensional subspace)."""
    vals = code.values
    members = set(vals)
    if 0 not in members or len(members) != len(vals):
        return False
    return all(x ^ y in members for x, y in combinations(vals, 2))


@dataclass(frozen=True)
class CodeReport:
    n: int
    k: int
    d: int | None
    spectrum: dict[int, int]
    constant_weight: bool
    weight: int | None
    linear: bool
    d_bv: int | None
    meets_bv: bool | None

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "d": self.d,
            "spectrum": {str(w): c for w, c in self.spectrum.items()},
            "constant_weight": self.constant_weight,
            "weight": self.weight,
            "linear": self.linear,
            "d_bv": self.d_bv,
            "meets_bv": self.meets_bv,
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), separators=(",", ":"))

    def summary(self) -> str:
        cw = f"yes (w={self.weight})" if self.constant_weight else "no"
        bv = "-" if self.d_bv is None else f"{self.d_bv} ({'met' if self.meets_bv else 'NOT met'})"
        spec = " ".join(f"{w}:{c}" for w, c in self.spectrum.items())
        return (
            f"(n,k,d) = ({self.n},{self.k},{self.d})  linear={'yes' if self.linear else 'no'}  "
            f"constant-weight={cw}  d_BV={bv}\nspectrum: {spec}"
        )


def full_report(code: Codebook) -> CodeReport:
    linear = is_linear(code)
    d = None
    if len(code.words) >= 2:
        d = pairwise_min_distance(code)
        if linear and min_nonzero_weight(code) != d:
            raise AssertionError("linear code with pairwise d != minimum nonzero weight")
    cw, w = is_constant_weight(code)
    d_bv = bv_lookup(code.n, code.k)
    return CodeReport(
        n=code.n,
        k=code.k,
        d=d,
        spectrum=weight_spectrum(code),
        constant_weight=cw,
        weight=w,
        linear=linear,
        d_bv=d_bv,
        meets_bv=None if d_bv is None else d == d_bv,
    )
