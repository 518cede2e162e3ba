import pytest

from skolemcircles import catalog
from skolemcircles.canonical import canonicalize, is_standard
from skolemcircles.core import validate_circle
from skolemcircles.enumeration import (
    ClassifiedCounts,
    ShardSpec,
    candidate_placements,
    classify,
    enumerate_circles,
    enumerate_sequences,
    enumerate_shard,
    iter_circles,
    iter_sequences,
    make_shards,
    merge,
    placement_order,
    plan_shards,
    verify_partition,
)
from skolemcircles.errors import FormatError, InvalidInput, ShardOverlapError
from skolemcircles.removable import removable_count_weight

import oracles

TABLE = {
    4: {3: 1},
    5: {2: 1, 3: 1},
    8: {0: 24, 1: 96, 2: 60, 3: 12},
    9: {0: 280, 1: 574, 2: 284, 3: 62},
}
SEQUENCES = {4: 6, 5: 10, 8: 504, 9: 2656}


@pytest.mark.parametrize("m", [4, 5, 8, 12])
def test_candidate_set_sizes(m):
    places = candidate_placements(m)
    assert len(places[1]) == 1
    assert len(places[2]) == m - 2
    assert len(places[m]) == m - 2
    for i in range(3, m):
        assert len(places[i]) == 2 * m - 4
    for i, pairs in places.items():
        for a, b in pairs:
            assert (b - a) % (2 * m) == i
            assert a < b if i == m else True


def test_placement_order():
    assert placement_order(6) == [2, 6, 5, 4, 3]
    assert placement_order(2) == [2]


@pytest.mark.parametrize("m", [2, 3, 6, 7])
def test_no_circles_for_impossible_orders(m):
    assert enumerate_circles(m, lambda c: None) == 0
    assert classify(m).total == 0


def _standard_member(cls):
    (form,) = {s for s in cls if s[:2] == (1, 1) and 3 <= s.index(2) + 1 <= len(s) // 2}
    return form


@pytest.mark.parametrize("m", [4, 5, 8])
def test_enumeration_matches_brute_force_classes(m):
    seen = []
    assert enumerate_circles(m, seen.append) == len(oracles.circle_classes(m))
    forms = [c.symbols for c in seen]
    assert len(set(forms)) == len(forms)
    for c in seen:
        assert validate_circle(c).valid and is_standard(c)
        assert canonicalize(c).symbols == c.symbols
    oracle_forms = {_standard_member(cls) for cls in oracles.circle_classes(m)}
    assert set(forms) == oracle_forms


@pytest.mark.parametrize("m", sorted(TABLE))
def test_classify_reproduces_table(m):
    counts = classify(m)
    assert counts.counts_by_j == TABLE[m]
    assert counts.sequence_count() == SEQUENCES[m]


def test_classify_by_weight_matches_per_circle(circles_by_order):
    by_j = {}
    for c in circles_by_order(9):
        j = removable_count_weight(c)
        by_j[j] = by_j.get(j, 0) + 1
    assert by_j == TABLE[9]


@pytest.mark.parametrize("shards, threads", [(1, 1), (3, 1), (7, 2), (50, 4), (1000, 3)])
def test_sharding_does_not_change_counts(shards, threads):
    assert classify(9, shards=shards, threads=threads).counts_by_j == TABLE[9]


def test_make_shards_and_plan_shards():
    shards = make_shards(8)
    assert len(shards) == 6
    assert [s.prefix for s in shards] == [((2, a),) for a in range(3, 9)]
    verify_partition(shards)
    assert merge(enumerate_shard(s) for s in shards).counts_by_j == TABLE[8]
    fine = make_shards(8, granularity=2)
    verify_partition(fine)
    assert merge(enumerate_shard(s) for s in fine).counts_by_j == TABLE[8]
    planned = plan_shards(8, 10)
    assert len(planned) == 10 and {s.of_total for s in planned} == {10}
    verify_partition(planned)
    with pytest.raises(InvalidInput):
        plan_shards(8, 0)


def test_verify_partition_errors():
    shards = make_shards(8)
    with pytest.raises(ShardOverlapError):
        verify_partition(shards[:-1])
    with pytest.raises(ShardOverlapError):
        verify_partition(shards + shards[:1])
    with pytest.raises(ShardOverlapError):
        verify_partition(shards[:1] + make_shards(8, granularity=2))
    with pytest.raises(ShardOverlapError):
        verify_partition(shards + make_shards(9)[:1])
    with pytest.raises(ShardOverlapError):
        verify_partition([])


def test_shard_visitor_sees_each_circle_once():
    seen = []
    for s in plan_shards(8, 5):
        enumerate_shard(s, seen.append)
    assert sorted(c.symbols for c in seen) == sorted(c.symbols for c in iter_circles(8))


def test_shard_spec_describe():
    spec = ShardSpec(8, (((2, 3), (8, 5)), ((2, 4),)), 1, 4)
    assert spec.describe() == "2@3,8@5;2@4"
    with pytest.raises(ValueError):
        spec.prefix


def test_merge_and_classified_counts():
    a = ClassifiedCounts(8, {0: 4, 1: 0, 3: 2})
    b = ClassifiedCounts(8, {1: 5})
    merged = merge([a, b])
    assert merged.counts_by_j == {0: 4, 1: 5, 3: 2}
    assert merged.total == 11 and merged.max_j == 3
    assert merged.row() == [4, 5, 0, 2] and merged.row(6) == [4, 5, 0, 2, 0, 0]
    assert str(ClassifiedCounts(8, TABLE[8])) == "j=0:24 j=1:96 j=2:60 j=3:12 total=192"
    with pytest.raises(InvalidInput):
        merge([a, ClassifiedCounts(9, {})])
    with pytest.raises(InvalidInput):
        merge([])


def test_checkpoint_resume(tmp_path, monkeypatch):
    first = classify(9, shards=4, checkpoint_dir=tmp_path)
    files = sorted(tmp_path.iterdir())
    assert len(files) == 4
    assert files[0].read_text().startswith("# skolem-shard m=9 shard=0/4 prefix=")

    # a second run must load every shard from disk rather than search again
    import skolemcircles.enumeration as enumeration

    def boom(spec, visitor=None):
        raise AssertionError("shard recomputed")

    monkeypatch.setattr(enumeration, "enumerate_shard", boom)
    assert classify(9, shards=4, checkpoint_dir=tmp_path) == first

    # losing one file recomputes only that shard
    monkeypatch.undo()
    files[2].unlink()
    assert classify(9, shards=4, checkpoint_dir=tmp_path) == first
    assert len(list(tmp_path.iterdir())) == 4


def test_checkpoint_from_another_plan_is_rejected(tmp_path):
    classify(8, shards=2, checkpoint_dir=tmp_path)
    spec = plan_shards(8, 2)[0]
    path = catalog.checkpoint_path(tmp_path, spec)
    other = plan_shards(8, 3)[0]
    with pytest.raises(FormatError):
        catalog.read_checkpoint(path, other)


@pytest.mark.parametrize("m", [1, 4, 5])
def test_iter_sequences_matches_permutation_oracle(m):
    got = list(iter_sequences(m))
    assert len(got) == len(set(got))
    assert set(got) == (oracles.skolem_sequences_by_permutation(m) if m > 1 else {(1, 1)})


@pytest.mark.parametrize("m, expected", [(1, 1), (2, 0), (3, 0), (4, 6), (5, 10), (8, 504), (9, 2656)])
def test_enumerate_sequences(m, expected):
    assert enumerate_sequences(m) == expected
    if m <= 8:
        assert len(list(iter_sequences(m))) == expected


def test_sequence_identity_with_classification():
    for m in (4, 5, 8, 9):
        assert enumerate_sequences(m) == classify(m).sequence_count()


def test_enumeration_input_errors():
    with pytest.raises(InvalidInput):
        enumerate_sequences(0)
    with pytest.raises(InvalidInput):
        enumerate_sequences(32)
    with pytest.raises(InvalidInput):
        classify(1)
    with pytest.raises(InvalidInput):
        list(iter_circles(1))
