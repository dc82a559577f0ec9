import pytest
from hypothesis import given, settings, strategies as st

from oracles import closed_under_xor, mseq_shifts, pairwise_d, sweight
from superimposed.analyze import min_distance
from superimposed.construct import (
    DEFAULT_PRIMITIVE_POLYS,
    ChainSpec,
    ChainSyntaxError,
    CodebookFormatError,
    LevelSpec,
    ParameterError,
    PolynomialError,
    build_c2,
    build_c3,
    build_chain,
    build_single_level,
    code_from_spec,
    parse_codebook,
    predict_params,
    repetition_code,
    simplex_code,
    superimpose_level,
)
from superimposed.gf2words import CapacityError


def words(code):
    return [str(w) for w in code.words]


def test_repetition_code():
    assert words(repetition_code(2)) == ["00", "11"]
    assert words(repetition_code(1)) == ["0", "1"]
    assert words(repetition_code(8)) == ["00000000", "11111111"]
    with pytest.raises(ParameterError):
        repetition_code(0)


@pytest.mark.parametrize("nu", range(2, 9))
def test_simplex_matches_mseq_shifts(nu):
    code = simplex_code(nu)
    poly = DEFAULT_PRIMITIVE_POLYS[nu]
    taps = [i for i in range(nu) if poly >> i & 1]
    nonzero = [w for w in words(code) if "1" in w]
    assert set(nonzero) == mseq_shifts(taps, nu)
    assert len(nonzero) == 2**nu - 1
    assert words(code)[0] == "0" * code.n
    assert {sweight(w) for w in nonzero} == {2 ** (nu - 1)}
    # index = initial state: the word starts with the state in binary
    assert all(w.startswith(format(s, f"0{nu}b")) for s, w in enumerate(words(code)))


def test_simplex_examples():
    c = simplex_code(2, 0b111)
    assert (c.n, c.k, min_distance(c)) == (3, 2, 2)
    c = simplex_code(3, 0b1011)
    assert c.n == 7 and c.k == 3 and all(w.weight == 4 for w in c.words[1:])
    c = simplex_code(4, 0b10011)
    # oracle: pairwise over all 16 words
    assert pairwise_d(words(c)) == 8
    assert (c.n, min_distance(c)) == (15, 8)


def test_simplex_rejects_non_primitive():
    # x^4+x^3+x^2+x+1 divides x^5-1, so the all-ones state cycles with period 5
    with pytest.raises(PolynomialError, match="period 5"):
        simplex_code(4, 0b11111)
    with pytest.raises(PolynomialError):
        simplex_code(3, 0b111)  # wrong degree
    with pytest.raises(ParameterError):
        simplex_code(9)


def test_build_c2():
    base = repetition_code(1)
    assert words(build_c2(base, base)) == ["00", "01", "11", "10"]
    c = build_c2(simplex_code(2), repetition_code(3))
    assert (c.n, c.k, len(c.words)) == (6, 3, 8)
    # brute force gives 3 = min(2 * d_u, d_v) = min(4, 3)
    assert pairwise_d(words(c)) == 3
    assert min_distance(c) == 3
    with pytest.raises(ParameterError):
        build_c2(simplex_code(2), repetition_code(4))


@pytest.mark.parametrize(
    "nu, params", [(2, (9, 3, 4)), (3, (21, 4, 10)), (4, (45, 5, 22)), (5, (93, 6, 46))]
)
def test_build_c3_table1(nu, params):
    c = build_c3(nu)
    assert (c.n, c.k, min_distance(c)) == params
    assert params[2] == min(3 * 2 ** (nu - 1), 2 ** (nu + 1) - 2 - 2 ** (nu - 1))


def test_build_c3_word_structure():
    c = build_c3(3)
    u, v = simplex_code(3), repetition_code(14)
    for m, w in enumerate(words(c)):
        uw, vw = str(u.words[m >> 1]), str(v.words[m & 1])
        right = "".join("1" if x != y else "0" for x, y in zip(uw * 2, vw))
        assert w == uw + right


def test_single_level_examples():
    assert words(build_single_level(2, 1)) == ["000", "011", "110", "101"]
    assert words(build_single_level(4, 2)) == ["000000", "001111", "111100", "110011"]
    c = build_single_level(6, 3)
    assert (c.n, c.k, min_distance(c)) == (9, 2, 6)
    assert {w.weight for w in c.words[1:]} == {6}
    with pytest.raises(ParameterError):
        build_single_level(2, 3)


def test_single_level_equals_one_level_chain():
    for h1 in range(1, 10):
        assert build_single_level(2 * h1, h1).words == build_chain(ChainSpec.of((2 * h1, h1))).words
    # general s1 >= h1: the chain level (2*h1, s1-h1, h1, h1)
    for s1, h1 in [(5, 2), (7, 3), (4, 4), (9, 1)]:
        assert build_single_level(s1, h1).words == build_chain(ChainSpec.of((2 * h1, s1 - h1, h1, h1))).words


EXAMPLE3_FIRST = ["0000000", "0001111", "0110110", "0111001", "1101100", "1100011", "1011010", "1010101"]
EXAMPLE3_SECOND = [
    "000 000 000 000 00",
    "000 000 111 111 11",
    "011 011 011 011 00",
    "011 011 100 100 11",
    "110 110 110 110 00",
    "110 110 001 001 11",
    "101 101 101 101 00",
    "101 101 010 010 11",
]


def test_superimpose_level_examples():
    prev = build_single_level(2, 1)
    assert words(superimpose_level(prev, LevelSpec(2, 1, 1, 1))) == EXAMPLE3_FIRST
    second = superimpose_level(prev, LevelSpec(4, 2, 2, 2))
    assert words(second) == [w.replace(" ", "") for w in EXAMPLE3_SECOND]
    assert (second.n, second.k) == (14, 3)
    degenerate = superimpose_level(prev, LevelSpec(2, 3, 2, 0))
    assert degenerate.n == 9
    for w in words(degenerate)[1::2]:
        assert w[6:] == "111"
    for w in words(degenerate)[::2]:
        assert w[6:] == "000"


def test_build_chain_examples():
    c = build_chain(ChainSpec.of((2, 1, 1, 1)))
    assert words(c) == ["000", "011", "110", "101"]
    c = build_chain(ChainSpec.of((2, 1, 1, 1), (4, 2, 2, 2), (2, 2, 1, 1), (2, 2, 1, 1), (2, 2, 1, 1)))
    assert (c.n, c.k, min_distance(c)) == (126, 6, 64)
    c = build_chain(ChainSpec.of((2, 1, 1, 1), (3, 2, 1, 2)))
    assert (c.n, c.k, min_distance(c)) == (11, 3, 6)


def test_predict_params_examples():
    assert predict_params(ChainSpec.of((2, 1, 1, 1))) == (3, 2, 2)
    assert predict_params(ChainSpec.of((2, 1, 1, 1), (20, 10, 10, 10))) == (70, 3, 40)
    chain = ChainSpec.of((2, 1, 1, 1), (3, 2, 1, 2), (2, 0, 1, 1))
    assert predict_params(chain) == (22, 4, 11)
    code = build_chain(chain)
    assert pairwise_d(words(code)) == 11


def test_single_level_family():
    for h1 in range(1, 43):
        c = build_single_level(2 * h1, h1)
        assert (c.n, c.k) == (3 * h1, 2)
        assert {w.weight for w in c.words[1:]} == {2 * h1}


def test_two_level_family():
    for s2 in range(2, 37, 2):
        c = build_chain(ChainSpec.of((2, 1, 1, 1), (s2, s2 // 2, s2 // 2, s2 // 2)))
        assert c.n == 7 * s2 // 2
        assert {w.weight for w in c.words[1:]} == {2 * s2}


def test_zero_maps_to_zero_and_stable():
    for code in [build_c3(3), build_single_level(4, 2), build_chain(ChainSpec.of((2, 1), (3, 1), (2, 2)))]:
        assert code.words[0].value == 0
    assert build_c3(4).words == build_c3(4).words


def test_capacity_error():
    with pytest.raises(CapacityError):
        build_chain(ChainSpec.of((2, 1), (6, 4), (6, 4), (6, 4), (6, 4)))


# --- chain strings and codebook text ------------------------------------------------


def test_chain_parse_and_format():
    chain = ChainSpec.parse("2,1,1,1; 4,2")
    assert chain.levels == (LevelSpec(2, 1, 1, 1), LevelSpec(4, 2, 2, 2))
    assert str(chain) == "2,1,1,1; 4,2,2,2"
    assert ChainSpec.parse(str(chain)) == chain
    assert ChainSpec.parse("3,1").levels[0] == LevelSpec(3, 1, 1, 2)


@pytest.mark.parametrize(
    "text, position", [("2,1;x,1", 4), ("2,1; 3", 5), ("2,1;;", 4), ("2,1,2,2", 0), ("2,-1", 0)]
)
def test_chain_parse_errors(text, position):
    with pytest.raises(ChainSyntaxError) as info:
        ChainSpec.parse(text)
    assert info.value.position == position


def test_level_requires_nonempty_mask():
    with pytest.raises(ParameterError):
        superimpose_level(build_single_level(2, 1), LevelSpec(1, 0, 1, 0))


def test_codebook_text_round_trip():
    code = build_c3(2)
    text = code.to_text(["spec=c3:2"])
    assert text.splitlines()[0] == "# n=9 k=3"
    back = parse_codebook(text)
    assert back.words == code.words and back.layout is not None
    plain = parse_codebook(code.to_text())
    assert plain.words == code.words and plain.layout is None


@pytest.mark.parametrize(
    "text, line",
    [
        ("000\n", 1),
        ("# n=3 k=1\n000\n01\n", 3),
        ("# n=3 k=1\n000\n0a1\n", 3),
        ("# n=3 k=1\n000\n", 2),
        ("# n=3 k=1\n# spec=rep:3\n000\n110\n", 1),
    ],
)
def test_codebook_format_errors(text, line):
    with pytest.raises(CodebookFormatError) as info:
        parse_codebook(text)
    assert info.value.line == line


def test_code_from_spec():
    assert words(code_from_spec("single:2,1")) == ["000", "011", "110", "101"]
    assert code_from_spec("c3:3").n == 21
    assert code_from_spec("c3:3:0b1011").words == build_c3(3).words
    assert code_from_spec("2,1,1,1;4,2,2,2").n == 14
    assert code_from_spec("c2:3").n == 14
    with pytest.raises(ParameterError):
        code_from_spec("foo:1")
    with pytest.raises(ParameterError):
        code_from_spec("single:2")


# --- properties ----------------------------------------------------------------------

levels = st.integers(1, 4).flatmap(
    lambda s: st.tuples(st.just(s), st.integers(0, 3), st.integers(0, s)).map(
        lambda t: LevelSpec(t[0], t[1], t[2], t[0] - t[2])
    )
).filter(lambda lv: lv.b > 0 or lv.h > 0)


@settings(max_examples=150, deadline=None)
@given(st.lists(levels, min_size=1, max_size=3))
def test_chain_properties(lvls):
    chain = ChainSpec(tuple(lvls))
    n_pred, k_pred, d_pred = predict_params(chain)
    code = build_chain(chain)
    ws = words(code)
    assert (code.n, code.k) == (n_pred, k_pred) == (len(ws[0]), len(chain) + 1)
    assert ws[0] == "0" * code.n
    assert closed_under_xor(ws)
    # zero-weight nonzero messages would make pairwise d = 0 as well
    assert d_pred == pairwise_d(ws)
