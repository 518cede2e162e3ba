import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from skolemcircles.core import (
    CircleLabeling,
    PairList,
    SkolemTypeSeq,
    cut,
    format_symbols,
    pairs_from_symbols,
    parse_symbols,
    symbols_from_pairs,
    validate_circle,
    validate_sequence,
    wrap,
)
from skolemcircles.errors import DistanceError, InvalidInput, OverlapError, SymbolCountError

import oracles

ORDER4 = CircleLabeling((1, 1, 4, 2, 3, 2, 4, 3))
RIGID8 = CircleLabeling((1, 1, 4, 8, 7, 5, 4, 2, 6, 2, 5, 8, 3, 7, 6, 3))


def test_text_form_round_trip():
    assert parse_symbols("1 1 4 2 3 2 4 3") == ORDER4.symbols
    assert parse_symbols("(1, 1, 4, 2)") == (1, 1, 4, 2)
    assert format_symbols(ORDER4) == "1 1 4 2 3 2 4 3"
    assert str(CircleLabeling.parse(str(RIGID8))) == str(RIGID8)
    with pytest.raises(InvalidInput):
        parse_symbols("1 x 2")


def test_circle_needs_even_length():
    with pytest.raises(InvalidInput):
        CircleLabeling((1, 1, 2))
    with pytest.raises(InvalidInput):
        CircleLabeling(())


@pytest.mark.parametrize(
    "symbols, expected",
    [
        ((1, 1, 4, 2, 3, 2, 4, 3), {1: (1, 2), 2: (4, 6), 3: (5, 8), 4: (3, 7)}),
        ((1, 1), {1: (1, 2)}),
        ((1, 1, 5, 4, 2, 3, 2, 5, 3, 4), {1: (1, 2), 2: (5, 7), 3: (6, 9), 4: (10, 4), 5: (3, 8)}),
    ],
)
def test_pairs_from_symbols(symbols, expected):
    pairs = pairs_from_symbols(CircleLabeling(symbols))
    assert pairs.as_dict() == expected
    assert symbols_from_pairs(pairs).symbols == symbols


def test_pair_congruence_and_wrap_convention():
    c = CircleLabeling((1, 1, 5, 4, 2, 3, 2, 5, 3, 4))
    n = len(c)
    for i, (a, b) in pairs_from_symbols(c).as_dict().items():
        assert (b - a) % n == i
        if i < c.order:
            assert (a > b) == (b <= i)


def test_pairs_from_symbols_errors():
    with pytest.raises(SymbolCountError):
        pairs_from_symbols(CircleLabeling((1, 1, 1, 2)))
    with pytest.raises(DistanceError):
        pairs_from_symbols(CircleLabeling((1, 1, 2, 2)))


def test_symbols_from_pairs_examples_and_errors():
    assert symbols_from_pairs(PairList.from_dict({1: (1, 2), 2: (4, 6), 3: (5, 8), 4: (3, 7)})) == ORDER4
    assert symbols_from_pairs({1: (1, 2)}).symbols == (1, 1)
    assert symbols_from_pairs(pairs_from_symbols(RIGID8)) == RIGID8
    with pytest.raises(OverlapError):
        symbols_from_pairs({1: (1, 2), 2: (2, 4)})


def test_pair_list_accessors():
    pairs = pairs_from_symbols(ORDER4)
    assert pairs.order == 4
    assert pairs[4] == (3, 7)
    with pytest.raises(KeyError):
        pairs[5]


@pytest.mark.parametrize("m", [4, 5, 8])
def test_round_trip_on_every_circle(m):
    for syms in oracles.all_circles(m):
        c = CircleLabeling(syms)
        assert symbols_from_pairs(pairs_from_symbols(c)) == c


def test_validate_circle_examples():
    assert validate_circle(ORDER4).valid
    assert validate_circle(RIGID8).valid
    assert validate_circle((1, 1)).valid
    bad = validate_circle((1, 1, 2, 2))
    assert not bad.valid
    assert [v.kind for v in bad.violations] == ["distance"]
    assert bad.violations[0].where == 2


def test_validate_circle_reports_rather_than_raises():
    report = validate_circle((1, 1, 3))
    assert not report and report.violations[0].kind == "length"
    report = validate_circle((1, 2, 2, 5))
    kinds = {v.kind for v in report.violations}
    assert {"symbol-range", "symbol-count"} <= kinds


def test_circle_distance_invariant_on_all_circles():
    for m in (4, 5, 8):
        for syms in oracles.all_circles(m):
            n = 2 * m
            for i in range(1, m + 1):
                p, q = [k for k, v in enumerate(syms) if v == i]
                if i < m:
                    assert min(q - p, n - (q - p)) == i
                else:
                    assert q - p == m


@pytest.mark.parametrize(
    "seq, kind, kwargs",
    [
        ((1, 1, 4, 2, 3, 2, 4, 3), "skolem", {}),
        ((3, 4, 2, 3, 2, 4), "langford", {"defect": 2}),
        ((0,), "extended", {"null_position": 1}),
        ((1, 1, 0), "extended", {}),
        ((1, 1, 3, 0, 2, 3, 2), "skolem-type", {"symbols": {1, 2, 3}, "null_position": 4}),
        ((1, 1, 2, 3, 2, 0, 3), "hook", {}),
        ((3, 4, 2, 3, 2, 4), "skolem-type", {}),
    ],
)
def test_validate_sequence_accepts(seq, kind, kwargs):
    report = validate_sequence(seq, kind, **kwargs)
    assert report.valid, report.violations


@pytest.mark.parametrize(
    "seq, kind, kwargs",
    [
        ((1, 1, 2, 2), "skolem", {}),
        ((4, 2, 3, 2, 4, 3, 1, 1, 0), "skolem", {}),
        ((3, 4, 2, 3, 2, 4), "langford", {"defect": 3}),
        ((3, 4, 2, 3, 2, 4), "skolem", {}),
        ((0,), "extended", {"null_position": 2}),
        ((1, 1, 0, 0, 2, 2), "extended", {}),
        ((1, 1, 3, 2, 0, 3, 2), "hook", {}),
    ],
)
def test_validate_sequence_rejects(seq, kind, kwargs):
    assert not validate_sequence(seq, kind, **kwargs).valid


def test_validate_sequence_kind_errors():
    with pytest.raises(InvalidInput):
        validate_sequence((1, 1), "nonsense")
    with pytest.raises(InvalidInput):
        validate_sequence((3, 4, 2, 3, 2, 4), "langford")


def test_skolem_type_seq_defaults():
    s = SkolemTypeSeq((1, 1, 0))
    assert s.symbol_set == {1} and s.null_position == 3
    assert SkolemTypeSeq.parse("3 4 2 3 2 4").symbol_set == {2, 3, 4}


@pytest.mark.parametrize(
    "seq",
    [(1, 1, 4, 2, 3, 2, 4, 3), (1, 1), (1, 1, 5, 2, 4, 2, 3, 5, 4, 3)],
)
def test_wrap(seq):
    c = wrap(seq)
    assert c.symbols == seq and validate_circle(c).valid


def test_wrap_rejects_non_skolem():
    with pytest.raises(InvalidInput):
        wrap((1, 1, 2, 2))


@pytest.mark.parametrize("m", [4, 5])
def test_wrap_preserves_validity_for_all_sequences(m):
    for seq in oracles.skolem_sequences_by_permutation(m):
        assert validate_circle(wrap(seq)).valid


def test_cut_examples():
    assert cut(ORDER4, 8, "acw").symbols == (1, 1, 4, 2, 3, 2, 4, 3)
    assert cut(ORDER4, 2, "acw").symbols == (4, 2, 3, 2, 4, 3, 1, 1)
    assert cut(ORDER4, 2, "cw").symbols == (1, 1, 3, 4, 2, 3, 2, 4)
    broken = cut(ORDER4, 4, "acw")
    report = validate_sequence(broken, "skolem")
    assert not report.valid
    # e_4 lies only on the arc of the 2s (positions 4..6)
    assert [v.where for v in report.violations if v.kind == "distance"] == [2]
    with pytest.raises(InvalidInput):
        cut(ORDER4, 9)
    with pytest.raises(InvalidInput):
        cut(ORDER4, 1, "sideways")


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(min_value=1, max_value=5), min_size=10, max_size=10))
def test_validator_agrees_with_linear_oracle(seq):
    seq = tuple(seq)
    linear_ok = oracles.is_linear_skolem(seq)
    assert validate_sequence(seq, "skolem").valid == linear_ok
    if linear_ok:
        assert validate_circle(wrap(seq)).valid


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=0, max_value=2**31))
def test_valid_skolem_sequences_wrap_to_circles(seed):
    rng = random.Random(seed)
    seq = rng.choice(sorted(oracles.skolem_sequences_by_permutation(5)))
    assert validate_sequence(seq, "skolem").valid
    assert validate_circle(wrap(seq)).valid
