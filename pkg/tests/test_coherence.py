import pytest

from oracles import int_val, pascal_binom
from spechtex.coherence import (
    MultiSequence,
    SlotIndex,
    build_relation_system,
    canonical_multisequence,
    canonical_slot_order,
    dim_E,
    ext1_dim_oracle,
    format_relation_system,
    is_coherent,
    multisequence_from_slots,
    nullspace,
    slot_count,
    standard_multisequence,
)
from spechtex.partitions import (
    Partition,
    enumerate_partitions,
    is_james_partition,
    james_index,
)


def test_canonical_slot_order_examples():
    assert canonical_slot_order(Partition((1, 1, 1))) == [
        SlotIndex(1, 2, 1),
        SlotIndex(1, 3, 1),
        SlotIndex(2, 3, 1),
    ]
    assert canonical_slot_order(Partition((7,))) == []
    assert canonical_slot_order(Partition((2, 2))) == [
        SlotIndex(1, 2, 1),
        SlotIndex(1, 2, 2),
    ]
    assert slot_count(Partition((1, 1, 1))) == 3


def test_standard_multisequence_examples():
    assert standard_multisequence(Partition((1, 1, 1)), 3).values == (2, 2, 2)
    assert standard_multisequence(Partition((8, 1)), 3).is_zero()
    assert standard_multisequence(Partition((9,)), 5).values == ()


def test_standard_zero_iff_james():
    for p in (2, 3, 5):
        for d in range(0, 15):
            for lam in enumerate_partitions(d, max(d, 1)):
                assert standard_multisequence(lam, p).is_zero() == is_james_partition(
                    lam, p
                )


def test_canonical_multisequence_examples():
    assert canonical_multisequence(Partition((8, 1)), 3).values == (1,)
    # C(3,1)/3 = 1 for the pair (2,1).
    assert canonical_multisequence(Partition((2, 1)), 3).values == (1,)


def test_canonical_multisequence_rejects_non_james_and_short():
    with pytest.raises(ValueError):
        canonical_multisequence(Partition((3, 1)), 3)
    with pytest.raises(ValueError):
        canonical_multisequence(Partition((7,)), 3)


def test_canonical_matches_integer_division_recipe():
    # Slot (r, s, i) is C(part_r + i, i) / p**JI reduced mod p.
    for p in (2, 3):
        for d in range(2, 13):
            for lam in enumerate_partitions(d, d):
                if lam.n < 2 or not is_james_partition(lam, p):
                    continue
                ji = james_index(lam, p)
                got = canonical_multisequence(lam, p)
                for slot, value in zip(canonical_slot_order(lam), got.values):
                    exact = pascal_binom(lam.part(slot.r) + slot.i, slot.i)
                    assert int_val(exact, p) >= ji
                    assert value == (exact // p**ji) % p


def test_canonical_is_coherent_and_nonzero():
    for p in (2, 3):
        for d in range(2, 13):
            for lam in enumerate_partitions(d, d):
                if lam.n < 2 or not is_james_partition(lam, p):
                    continue
                can = canonical_multisequence(lam, p)
                assert not can.is_zero()
                assert is_coherent(can, lam, p)


def test_relation_system_single_row_example():
    # For three rows of size one at p=3, everything collapses to the single
    # relation x + z - 2y = 0 (up to scaling).
    system = build_relation_system(Partition((1, 1, 1)), 3)
    assert system.num_slots == 3
    assert len(system.rows) == 1
    assert system.row_tags == (("T3a", 1, 2, 3, 1, 1),)
    assert system.rows[0] == (2, 2, 2)


def test_relation_system_golden_dump():
    system = build_relation_system(Partition((1, 1, 1)), 3)
    assert (
        format_relation_system(system)
        == "T3a(1,2,3,1,1): 2*y(1,2)_1 + 2*y(1,3)_1 + 2*y(2,3)_1 = 0"
    )


def test_relation_system_empty_cases():
    assert build_relation_system(Partition((9,)), 3).rows == ()
    system = build_relation_system(Partition((2, 1)), 3)
    assert system.num_slots == 1
    assert system.rows == ()


def test_nullspace_dimensions():
    assert dim_E(Partition((1, 1, 1)), 3) == 2
    assert dim_E(Partition((8, 1)), 3) == 1
    assert dim_E(Partition((9, 3)), 3) == 2
    assert dim_E(Partition((1, 1, 1, 1)), 3) == 2
    assert dim_E(Partition((5,)), 3) == 0


def test_nullspace_of_empty_system_is_full():
    system = build_relation_system(Partition((2, 1)), 3)
    basis = nullspace(system)
    assert len(basis) == 1
    assert basis[0].values == (1,)


def test_nullspace_vectors_satisfy_system():
    for p in (2, 3, 5):
        for parts in ((3, 2, 1), (4, 4, 2), (2, 2, 1, 1), (9, 3)):
            lam = Partition(parts)
            system = build_relation_system(lam, p)
            for vec in nullspace(system):
                assert is_coherent(vec, lam, p)


def test_nullspace_deterministic():
    lam = Partition((3, 2, 2, 1))
    for p in (2, 3):
        s1 = build_relation_system(lam, p)
        s2 = build_relation_system(lam, p)
        assert s1.rows == s2.rows and s1.row_tags == s2.row_tags
        assert [v.values for v in nullspace(s1)] == [v.values for v in nullspace(s2)]


def test_ext1_dim_oracle_examples():
    assert ext1_dim_oracle(Partition((1, 1, 1, 1)), 3) == 1
    assert ext1_dim_oracle(Partition((2, 1, 1, 1)), 2) == 0
    assert ext1_dim_oracle(Partition((8, 1)), 3) == 1
    assert ext1_dim_oracle(Partition(()), 3) == 0
    assert ext1_dim_oracle(Partition((6,)), 3) == 0


def test_is_coherent_examples():
    lam = Partition((1, 1, 1))
    assert is_coherent(standard_multisequence(lam, 3), lam, 3)
    unit = multisequence_from_slots(lam, 3, {(1, 2, 1): 1})
    assert not is_coherent(unit, lam, 3)


def test_is_coherent_rejects_length_mismatch():
    lam = Partition((1, 1, 1))
    other = standard_multisequence(Partition((2, 2)), 3)
    with pytest.raises(ValueError):
        is_coherent(other, lam, 3)


def test_multisequence_from_slots_validates():
    lam = Partition((2, 1))
    with pytest.raises(ValueError):
        multisequence_from_slots(lam, 3, {(1, 2, 2): 1})
    ms = multisequence_from_slots(lam, 3, {(1, 2, 1): -1})
    assert ms.values == (2,)
    with pytest.raises(ValueError):
        MultiSequence(lam, 3, (1, 2))


def test_standard_in_kernel_small_range():
    for p in (2, 3, 5):
        for d in range(0, 11):
            for lam in enumerate_partitions(d, max(d, 1)):
                assert is_coherent(standard_multisequence(lam, p), lam, p)
