"""Independent ground truth for optimality and parameter claims.

``best_linear_code`` enumerates binary linear codes as multisets of generator
columns. A code's weights depend only on how many times each column value is
used, so a candidate is a count vector ``x`` over column values and the weight
of message ``m`` is ``sum(x[c] * <m, c>)``. That turns the whole search into
integer matrix products over blocks of compositions.

``chain_search`` walks the space of superimposition chains. A level maps a
codeword of weight w to weights ``s*w`` (v = 0) and ``J + (a - b)*w`` (v = 1),
independent of the word itself, so the search propagates weight sets instead
of codebooks and only builds the codebooks of hits, which are then measured
by full enumeration.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import chain as chain_iter, combinations, islice
from math import comb
from typing import Iterator

import numpy as np

from .analyze import full_report, pairwise_min_distance
from .bv import bv_lookup  # noqa: F401  (re-exported)
from .construct import ChainSpec, Codebook, LevelSpec, build_chain
from .gf2words import Word

DEFAULT_BUDGET = 10**8
_BLOCK_ROWS = 1 << 18


class BudgetExceededError(RuntimeError):
    def __init__(self, estimate: int, budget: int):
        self.estimate = estimate
        self.budget = budget
        super().__init__(f"search space of {estimate} column multisets exceeds budget {budget}")


@dataclass(frozen=True)
class SearchResult:
    n: int
    k: int
    best_d: int
    witness: Codebook
    columns: tuple[int, ...]
    restricted_to_constant_weight: bool
    search_space_size: int

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "best_d": self.best_d,
            "columns": list(self.columns),
            "class": "linear constant-weight" if self.restricted_to_constant_weight else "linear",
            "search_space_size": self.search_space_size,
        }


def search_space_estimate(n: int, k: int) -> int:
    """Number of multisets of n columns drawn from all 2^k column values."""
    return comb(n + (1 << k) - 1, n)


def _composition_blocks(total: int, parts: int) -> Iterator[np.ndarray]:
    """All ways to write ``total`` as an ordered sum of ``parts`` non-negative ints.

    Stars and bars: each choice of ``parts - 1`` bar positions among
    ``total + parts - 1`` slots is one composition. Yielded in blocks.
    """
    slots = total + parts - 1
    if parts == 1:
        yield np.array([[total]], dtype=np.int32)
        return
    bars = combinations(range(slots), parts - 1)
    while True:
        flat = np.fromiter(
            chain_iter.from_iterable(islice(bars, _BLOCK_ROWS)), dtype=np.int32, count=-1
        )
        if not len(flat):
            return
        pos = flat.reshape(-1, parts - 1)
        edges = np.hstack(
            [np.full((len(pos), 1), -1, dtype=np.int32), pos, np.full((len(pos), 1), slots, dtype=np.int32)]
        )
        yield np.diff(edges, axis=1) - 1


def _inner_products(k: int, columns: list[int]) -> np.ndarray:
    """Matrix A with A[j, m-1] = <m, columns[j]> for every nonzero message m."""
    msgs = range(1, 1 << k)
    return np.array([[(m & c).bit_count() & 1 for m in msgs] for c in columns], dtype=np.int32)


def codebook_from_columns(k: int, columns: tuple[int, ...]) -> Codebook:
    """Codebook of the generator whose j-th column is ``columns[j]`` (k-bit, m_1 = MSB)."""
    n = len(columns)
    words = []
    for m in range(1 << k):
        value = 0
        for c in columns:
            value = (value << 1) | ((m & c).bit_count() & 1)
        words.append(Word(value, n))
    return Codebook(n, k, tuple(words))


def best_linear_code(
    n: int, k: int, constant_weight_only: bool = False, budget: int = DEFAULT_BUDGET
) -> SearchResult:
    """Largest minimum distance over all [n, k] binary linear codes.

    With ``constant_weight_only`` the class is restricted to codes whose
    nonzero words share a single weight. Ties are broken towards the
    lexicographically smallest sorted column multiset.

    The unrestricted search drops the all-zero column: swapping a zero column
    for any nonzero one never lowers a weight, so some optimum avoids it. The
    constant-weight search keeps it, since there it changes which codes exist.
    """
    if not 1 <= k <= 4:
        raise ValueError(f"k must be in 1..4, got {k}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    estimate = search_space_estimate(n, k)
    if estimate > budget:
        raise BudgetExceededError(estimate, budget)

    columns = list(range(0 if constant_weight_only else 1, 1 << k))
    A = _inner_products(k, columns)
    best_d = -1
    best_row: tuple[int, ...] | None = None
    searched = 0
    for block in _composition_blocks(n, len(columns)):
        searched += len(block)
        W = block @ A
        dmin = W.min(axis=1)
        if constant_weight_only:
            dmin = np.where(W.max(axis=1) == dmin, dmin, -1)
        top = int(dmin.max())
        if top <= 0 or top < best_d:
            continue
        hits = block[dmin == top]
        # lexicographically largest count vector = smallest sorted column multiset
        row = tuple(int(x) for x in hits[np.lexsort(hits.T[::-1])[-1]])
        if top > best_d or row > best_row:
            best_d, best_row = top, row
    if best_row is None:
        raise ValueError(f"no [{n},{k}] code with positive distance in the searched class")

    multiset = tuple(c for c, count in zip(columns, best_row) for _ in range(count))
    return SearchResult(
        n=n,
        k=k,
        best_d=best_d,
        witness=codebook_from_columns(k, multiset),
        columns=multiset,
        restricted_to_constant_weight=constant_weight_only,
        search_space_size=searched,
    )


def best_nonlinear_four_word_code(n: int) -> int:
    """Best minimum distance over all (not necessarily linear) 4-word codes of length n.

    Distances are translation invariant, so one word is fixed to zero.
    """
    if not 2 <= n <= 8:
        raise ValueError(f"nonlinear search limited to n in 2..8, got {n}")
    best = 0
    for trio in combinations(range(1, 1 << n), 3):
        words = (0,) + trio
        d = min((x ^ y).bit_count() for x, y in combinations(words, 2))
        best = max(best, d)
    return best


# --- chain search ----------------------------------------------------------------


def _level_options(s_range: range, h_range: range) -> list[LevelSpec]:
    return [LevelSpec(s, h, a, s - a) for s in s_range for h in h_range for a in range(s + 1)]


def chain_search(
    target_n: int,
    target_d: int,
    max_levels: int = 6,
    s_range: range = range(1, 7),
    h_range: range = range(0, 5),
) -> list[ChainSpec]:
    """Every chain (within the ranges) whose code measures exactly (target_n, target_d).

    Pruning uses two facts: code length never shrinks under a level, and the
    ratio n/d never decreases (the unmasked copies give d' <= s*d while
    n' >= s*n). Each hit is rebuilt and its distance measured pairwise.
    Results are sorted by (number of levels, chain text).
    """
    if target_n < 1 or target_d < 1:
        return []
    options = _level_options(s_range, h_range)
    hits: list[tuple[LevelSpec, ...]] = []
    # state: (n, weights of nonzero messages, levels so far)
    stack: list[tuple[int, frozenset[int], tuple[LevelSpec, ...]]] = [(1, frozenset({1}), ())]
    while stack:
        n, nonzero, levels = stack.pop()
        d = min(nonzero)
        if d == 0 or n * target_d > target_n * d:
            continue
        if levels and n == target_n and d == target_d:
            hits.append(levels)
        if len(levels) == max_levels:
            continue
        for lv in options:
            J = lv.b * n + lv.h
            n_next = lv.s * n + lv.h
            if J < 1 or n_next > target_n:
                continue
            nz = {lv.s * w for w in nonzero}
            nz.add(J)
            nz.update(J + (lv.a - lv.b) * w for w in nonzero)
            stack.append((n_next, frozenset(nz), levels + (lv,)))

    verified = []
    for levels in hits:
        chain = ChainSpec(levels)
        code = build_chain(chain)
        if code.n == target_n and pairwise_min_distance(code) == target_d:
            verified.append(chain)
        else:  # pragma: no cover - would mean the weight propagation is wrong
            raise AssertionError(f"chain {chain} failed re-verification")
    verified.sort(key=lambda c: (len(c), [(lv.s, lv.h, lv.a, lv.b) for lv in c.levels]))
    return verified


def certify(n: int, k: int, d: int, constant_weight_only: bool, budget: int) -> dict:
    """Compare a claimed d against the exhaustive optimum, if affordable."""
    try:
        res = best_linear_code(n, k, constant_weight_only, budget)
    except BudgetExceededError as exc:
        return {"status": "over-budget", "estimate": exc.estimate}
    rep = full_report(res.witness)
    assert (rep.n, rep.k, rep.d) == (n, k, res.best_d)
    return {"status": "optimal" if d == res.best_d else "suboptimal", "best_d": res.best_d}
