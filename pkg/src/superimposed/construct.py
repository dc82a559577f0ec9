"""Code families built from the generalized (u, u+v) construction.

Every constructor returns a :class:`Codebook` whose ``words`` are indexed by
message value, message bits read big-endian (m_1 is the most significant bit).
For two-part codes the u-message occupies the high bits and the v-message the
low bits, so ``index = (m_u << k_v) | m_v``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .gf2words import CapacityError, MAX_LEN, Word, concat, pad_zeros, repeat, xor


class ParameterError(ValueError):
    """Construction parameters are inconsistent."""


class PolynomialError(ParameterError):
    """Feedback polynomial does not produce a maximal-period sequence."""


@dataclass(frozen=True)
class Layout:
    """Structural description of a word ``(u^a, u^b * 0^h + v)``.

    Kept on codebooks built from two component codes so that the staged
    decoder can split a received word into its parts.
    """

    u_code: Codebook
    v_code: Codebook
    a: int
    b: int
    h: int = 0


@dataclass(frozen=True)
class Codebook:
    n: int
    k: int
    words: tuple[Word, ...]
    layout: Layout | None = field(default=None, compare=False, repr=False)

    def __post_init__(self) -> None:
        if len(self.words) != 1 << self.k:
            raise ParameterError(f"{len(self.words)} words for k={self.k}")
        for i, w in enumerate(self.words):
            if w.length != self.n:
                raise ParameterError(f"word {i} has length {w.length}, expected {self.n}")

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def word(self, message: int) -> Word:
        return self.words[message]

    @property
    def values(self) -> list[int]:
        return [w.value for w in self.words]

    def to_text(self, header: Iterable[str] = ()) -> str:
        lines = [f"# n={self.n} k={self.k}"]
        lines += [f"# {line}" for line in header]
        lines += [str(w) for w in self.words]
        return "\n".join(lines) + "\n"


def message_bits(message: int, k: int) -> tuple[int, ...]:
    return tuple((message >> (k - 1 - i)) & 1 for i in range(k))


# --- level / chain parameters -------------------------------------------------


@dataclass(frozen=True)
class LevelSpec:
    """One superimposition step.

    ``s`` copies of the previous codeword are laid down, ``a`` of them in the
    clear and ``b`` under the v-mask, followed by ``h`` zero bits that the mask
    also covers.
    """

    s: int
    h: int
    a: int
    b: int

    def __post_init__(self) -> None:
        if self.s < 1:
            raise ParameterError(f"s must be >= 1, got {self.s}")
        if self.h < 0:
            raise ParameterError(f"h must be >= 0, got {self.h}")
        if self.a < 0 or self.b < 0 or self.a + self.b != self.s:
            raise ParameterError(f"split ({self.a},{self.b}) does not partition s={self.s}")

    @classmethod
    def default(cls, s: int, h: int) -> LevelSpec:
        return cls(s, h, s // 2, s - s // 2)

    def mask_length(self, prev_n: int) -> int:
        """Length J of the v-code at this level."""
        return self.b * prev_n + self.h

    def length(self, prev_n: int) -> int:
        return self.s * prev_n + self.h

    def __str__(self) -> str:
        return f"{self.s},{self.h},{self.a},{self.b}"


@dataclass(frozen=True)
class ChainSpec:
    levels: tuple[LevelSpec, ...]

    def __post_init__(self) -> None:
        if not self.levels:
            raise ParameterError("a chain needs at least one level")

    @classmethod
    def of(cls, *levels: Sequence[int] | LevelSpec) -> ChainSpec:
        """Build from ``(s, h)`` or ``(s, h, a, b)`` tuples."""
        out = []
        for lv in levels:
            if isinstance(lv, LevelSpec):
                out.append(lv)
            elif len(lv) == 2:
                out.append(LevelSpec.default(*lv))
            elif len(lv) == 4:
                out.append(LevelSpec(*lv))
            else:
                raise ParameterError(f"level must have 2 or 4 fields, got {lv!r}")
        return cls(tuple(out))

    @classmethod
    def parse(cls, text: str) -> ChainSpec:
        """Parse ``"s,h[,a,b]; s,h[,a,b]; ..."``.

        Raises :class:`ChainSyntaxError` carrying the character offset of the
        offending level.
        """
        levels = []
        pos = 0
        for chunk in text.split(";"):
            offset = pos + len(chunk) - len(chunk.lstrip())
            pos += len(chunk) + 1
            if not chunk.strip():
                raise ChainSyntaxError(text, offset, "empty level")
            try:
                fields = [int(f) for f in chunk.split(",")]
            except ValueError:
                raise ChainSyntaxError(text, offset, f"non-integer field in {chunk.strip()!r}") from None
            try:
                if len(fields) == 2:
                    levels.append(LevelSpec.default(*fields))
                elif len(fields) == 4:
                    levels.append(LevelSpec(*fields))
                else:
                    raise ChainSyntaxError(text, offset, f"expected 2 or 4 fields, got {len(fields)}")
            except ParameterError as exc:
                if isinstance(exc, ChainSyntaxError):
                    raise
                raise ChainSyntaxError(text, offset, str(exc)) from None
        return cls(tuple(levels))

    def __str__(self) -> str:
        return "; ".join(str(lv) for lv in self.levels)

    def __len__(self) -> int:
        return len(self.levels)


class ChainSyntaxError(ParameterError):
    def __init__(self, text: str, position: int, reason: str):
        self.text = text
        self.position = position
        self.reason = reason
        super().__init__(f"at position {position} of {text!r}: {reason}")


# --- component codes -------------------------------------------------------------

DEFAULT_PRIMITIVE_POLYS = {
    2: 0b111,  # x^2+x+1
    3: 0b1011,  # x^3+x+1
    4: 0b10011,  # x^4+x+1
    5: 0b100101,  # x^5+x^2+1
    6: 0b1000011,  # x^6+x+1
    7: 0b10001001,  # x^7+x^3+1
    8: 0b100011101,  # x^8+x^4+x^3+x^2+1
}

BASE_CODE_WORDS = (Word(0, 1), Word(1, 1))


def repetition_code(J: int) -> Codebook:
    if J < 1:
        raise ParameterError(f"repetition length must be >= 1, got {J}")
    return Codebook(J, 1, (Word.zeros(J), Word.ones(J)))


def lfsr_sequence(poly: int, state: int, nu: int, length: int) -> Word:
    """First ``length`` outputs of the Fibonacci LFSR for ``poly`` from ``state``.

    ``poly`` has bit i set for the x^i term; the recurrence is
    a[t+nu] = sum(c_i * a[t+i]) over the lower coefficients c_i. The initial
    state's bits are a[0..nu-1], a[0] being the most significant bit, so the
    output starts with ``state`` written in binary.
    """
    taps = poly & ((1 << nu) - 1)
    # reg holds a[t..t+nu-1] with a[t] in the top bit; tap i reads a[t+i]
    tap_mask = 0
    for i in range(nu):
        if taps >> i & 1:
            tap_mask |= 1 << (nu - 1 - i)
    reg = state
    out = 0
    for _ in range(length):
        out = (out << 1) | (reg >> (nu - 1))
        fb = (reg & tap_mask).bit_count() & 1
        reg = ((reg << 1) & ((1 << nu) - 1)) | fb
    return Word(out, length)


def lfsr_period(poly: int, nu: int, state: int | None = None) -> int:
    """Period of the state sequence starting from ``state`` (all ones by default)."""
    taps = poly & ((1 << nu) - 1)
    tap_mask = 0
    for i in range(nu):
        if taps >> i & 1:
            tap_mask |= 1 << (nu - 1 - i)
    start = (1 << nu) - 1 if state is None else state
    reg = start
    for step in range(1, 1 << nu):
        fb = (reg & tap_mask).bit_count() & 1
        reg = ((reg << 1) & ((1 << nu) - 1)) | fb
        if reg == start:
            return step
    return 0


def simplex_code(nu: int, primitive_poly: int | None = None) -> Codebook:
    """All cyclic shifts of the maximal-length sequence plus the zero word.

    Word ``s`` is the LFSR output started from state ``s``; the map is linear
    in ``s`` so message xor corresponds to codeword xor.
    """
    if not 2 <= nu <= 8:
        raise ParameterError(f"nu must be in 2..8, got {nu}")
    poly = DEFAULT_PRIMITIVE_POLYS[nu] if primitive_poly is None else primitive_poly
    if poly >> nu != 1:
        raise PolynomialError(f"polynomial {poly:#b} is not of degree {nu}")
    n = (1 << nu) - 1
    period = lfsr_period(poly, nu)
    if period != n:
        raise PolynomialError(
            f"polynomial {poly:#b} is not primitive: measured period {period}, need {n}"
        )
    words = tuple(lfsr_sequence(poly, s, nu, n) for s in range(1 << nu))
    return Codebook(n, nu, words)


# --- composite codes -------------------------------------------------------------


def _superimpose(u_code: Codebook, v_code: Codebook, a: int, b: int, h: int) -> Codebook:
    J = b * u_code.n + h
    if v_code.n != J:
        raise ParameterError(f"v-code length {v_code.n} does not match mask length {J}")
    n = a * u_code.n + J
    if n > MAX_LEN:
        raise CapacityError(f"code length {n} exceeds cap of {MAX_LEN} bits")
    words = []
    for u in u_code.words:
        clear = repeat(u, a)
        masked = pad_zeros(repeat(u, b), h)
        for v in v_code.words:
            words.append(concat(clear, xor(masked, v)))
    return Codebook(n, u_code.k + v_code.k, tuple(words), Layout(u_code, v_code, a, b, h))


def build_c2(u_code: Codebook, v_code: Codebook) -> Codebook:
    """Words ``(u, u + v)``."""
    if u_code.n != v_code.n:
        raise ParameterError(f"u-code length {u_code.n} != v-code length {v_code.n}")
    return _superimpose(u_code, v_code, 1, 1, 0)


def build_c3(nu: int, primitive_poly: int | None = None) -> Codebook:
    """Words ``(u, (u, u) + v)`` with an M-sequence u-code and a repetition v-code."""
    u_code = simplex_code(nu, primitive_poly)
    return _superimpose(u_code, repetition_code(2 * u_code.n), 1, 2, 0)


def build_single_level(s1: int, h1: int) -> Codebook:
    """The two-message code ``(U, U * 0^(s1-h1) + v)`` with ``U = m1^(h1)``.

    Length ``h1 + s1``; ``v`` is the repetition word of length ``s1``.
    """
    if s1 < 1 or h1 < 0:
        raise ParameterError(f"need s1 >= 1 and h1 >= 0, got s1={s1}, h1={h1}")
    if s1 < h1:
        raise ParameterError(f"mask length J={s1} is shorter than h1={h1}")
    u_code = Codebook(h1, 1, (Word.zeros(h1), Word.ones(h1)))
    return _superimpose(u_code, repetition_code(s1), 1, 1, s1 - h1)


def superimpose_level(prev: Codebook, level: LevelSpec) -> Codebook:
    J = level.mask_length(prev.n)
    if J < 1:
        raise ParameterError(f"level {level} gives empty mask on length {prev.n}")
    return _superimpose(prev, repetition_code(J), level.a, level.b, level.h)


def base_code() -> Codebook:
    return Codebook(1, 1, BASE_CODE_WORDS)


def build_chain(chain: ChainSpec) -> Codebook:
    code = base_code()
    for level in chain.levels:
        code = superimpose_level(code, level)
    return code


def predict_params(chain: ChainSpec) -> tuple[int, int, int]:
    """Closed-form (n, k, d) for a chain.

    Alongside the minimum nonzero weight d the recurrence carries the maximum
    weight D, since masked words of a level with b > a are lightest when the
    underlying word is heaviest.
    """
    n, d, D = 1, 1, 1
    for lv in chain.levels:
        J = lv.mask_length(n)
        d, D = (
            min(lv.s * d, J - (lv.b - lv.a) * D, J),
            max(lv.s * D, J + max(0, (lv.a - lv.b) * D)),
        )
        n = lv.length(n)
    return n, len(chain) + 1, d


# --- textual forms ----------------------------------------------------------------


class CodebookFormatError(ValueError):
    def __init__(self, line: int, reason: str):
        self.line = line
        self.reason = reason
        super().__init__(f"line {line}: {reason}")


def code_from_spec(spec: str) -> Codebook:
    """Build a code from its command-line spelling.

    ``c3:NU[:POLY]``, ``c2:NU[:POLY]`` (M-sequence u with repetition v),
    ``single:S,H``, ``simplex:NU[:POLY]``, ``rep:J`` or a chain string.
    POLY is any integer literal Python accepts (``0b1011``, ``0xb``, ``11``).
    """
    kind, sep, rest = spec.partition(":")
    if not sep:
        return build_chain(ChainSpec.parse(spec))
    kind = kind.strip().lower()
    try:
        if kind in ("c2", "c3", "simplex"):
            nu_text, _, poly_text = rest.partition(":")
            nu = int(nu_text)
            poly = int(poly_text, 0) if poly_text else None
            if kind == "simplex":
                return simplex_code(nu, poly)
            if kind == "c3":
                return build_c3(nu, poly)
            u = simplex_code(nu, poly)
            return build_c2(u, repetition_code(u.n))
        if kind == "single":
            s1, h1 = (int(x) for x in rest.split(","))
            return build_single_level(s1, h1)
        if kind == "rep":
            return repetition_code(int(rest))
    except ValueError as exc:
        if isinstance(exc, ParameterError):
            raise
        raise ParameterError(f"cannot parse {spec!r}: {exc}") from None
    raise ParameterError(f"unknown code family {kind!r} in {spec!r}")


def parse_codebook(text: str) -> Codebook:
    """Inverse of :meth:`Codebook.to_text`.

    A ``# spec=...`` header line, when present, is rebuilt and must reproduce
    the listed words; the rebuilt code's structure is kept for staged decoding.
    """
    n = k = None
    spec = None
    words: list[Word] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            fields = dict(f.split("=", 1) for f in body.split() if "=" in f)
            if n is None:
                try:
                    n, k = int(fields["n"]), int(fields["k"])
                except (KeyError, ValueError):
                    raise CodebookFormatError(lineno, "expected header '# n=<int> k=<int>'") from None
            elif body.startswith("spec="):
                spec = body[len("spec=") :]
            continue
        if n is None:
            raise CodebookFormatError(lineno, "codeword before '# n=<int> k=<int>' header")
        if set(line) - {"0", "1"}:
            raise CodebookFormatError(lineno, f"not a binary word: {line!r}")
        if len(line) != n:
            raise CodebookFormatError(lineno, f"word has length {len(line)}, header says n={n}")
        words.append(Word.from_str(line))
    if n is None:
        raise CodebookFormatError(1, "missing '# n=<int> k=<int>' header")
    if len(words) != 1 << k:
        raise CodebookFormatError(lineno, f"found {len(words)} words, header says k={k} ({1 << k} words)")
    code = Codebook(n, k, tuple(words))
    if spec is not None:
        rebuilt = code_from_spec(spec)
        if rebuilt.words != code.words:
            raise CodebookFormatError(1, f"words do not match header spec={spec}")
        return rebuilt
    return code
