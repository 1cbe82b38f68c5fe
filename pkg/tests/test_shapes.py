"""Partitions, flags, skew shapes, and the flag-splitting helpers."""

import pytest

from egc.shapes import (DeltaSeq, Flag, Partition, SkewShape,
                        compatible_flags, delta_seq, diagonal_split,
                        dominance_leq, flag_caps, flag_split, flags_equivalent,
                        is_compatible, psi_flag, skew_props, subpartitions,
                        xi_flag)


def test_partition_basics():
    lam = Partition((4, 2, 1, 0, 0))
    assert lam.parts == (4, 2, 1)
    assert lam.size == 7
    assert lam.part(1) == 4 and lam.part(5) == 0
    assert lam.conjugate() == Partition((3, 2, 1, 1))
    assert lam.conjugate().conjugate() == lam
    assert Partition(()).size == 0


def test_partition_rejects_increasing():
    with pytest.raises(ValueError):
        Partition((1, 2))


def test_containment_and_cells():
    lam = Partition((2, 1))
    assert lam.contains(Partition((1, 1)))
    assert not lam.contains(Partition((3,)))
    assert lam.cells() == [(1, 1), (1, 2), (2, 1)]


def test_subpartitions_complete_and_ordered():
    subs = list(subpartitions(Partition((2, 1))))
    assert Partition(()) in subs
    assert Partition((2, 1)) in subs
    assert len(subs) == len(set(subs)) == 5


def test_flag_validation():
    Flag((1, 1, 3))
    with pytest.raises(ValueError):
        Flag((2, 1))


def test_delta_seq_validation():
    DeltaSeq((3, 3, 1))
    with pytest.raises(ValueError):
        DeltaSeq((1, 2))
    with pytest.raises(ValueError):
        DeltaSeq((1, -1))


def test_skew_shape():
    sh = SkewShape(Partition((3, 2)), Partition((1,)))
    assert sh.size == 4
    assert list(sh.row_cols(1)) == [2, 3]
    assert sh.conjugate().outer == Partition((2, 2, 1))
    with pytest.raises(ValueError):
        SkewShape(Partition((1,)), Partition((2,)))


def test_skew_props():
    assert not skew_props(SkewShape(Partition((1, 1)))).is_disconnected
    single = skew_props(SkewShape(Partition((1,))))
    assert single.is_disconnected and single.has_diagonal_cell
    sh = skew_props(SkewShape(Partition((2, 1, 1)), Partition((1,))))
    assert not sh.has_diagonal_cell


def test_diagonal_split_examples():
    upper, lower = diagonal_split(
        SkewShape(Partition((2, 1, 1)), Partition((1,))))
    assert upper.inner == Partition((1, 1, 1))
    assert lower.inner == Partition((2,))
    upper, lower = diagonal_split(SkewShape(Partition((1, 1)),
                                            Partition((1,))))
    assert not upper.cells() and lower.cells() == [(2, 1)]
    with pytest.raises(ValueError):
        diagonal_split(SkewShape(Partition((1,))))


def test_compatibility():
    assert is_compatible(Partition((2, 2, 2, 1)), Flag((3, 3, 3, 5)))
    assert not is_compatible(Partition((1, 1)), Flag((1, 5)))
    with pytest.raises(ValueError):
        is_compatible(Partition((2,)), Flag((1, 2)))


def test_flag_split():
    minus, plus = flag_split(Flag((-1, 0, 1, 2, 4)))
    assert minus.bounds == (-1, 0, 0, 0, 0)
    assert plus.bounds == (0, 0, 1, 2, 4)


def test_psi_and_delta_fixture():
    lam = Partition((4, 4, 4, 4, 4, 2, 1))
    phi = Flag((3, 4, 4, 5, 6, 6, 8))
    assert psi_flag(lam, phi).bounds == (-3, -2, -1, 0, 1, 4, 6)
    assert delta_seq(lam, phi).values == (6, 6, 5, 5, 5, 2, 2)


def test_psi_delta_small():
    lam, phi = Partition((1, 1)), Flag((1, 2))
    assert psi_flag(lam, phi).bounds == (0, 1)
    assert delta_seq(lam, phi).values == (1, 1)


def test_xi_flag_examples():
    assert xi_flag(Partition((1, 1)), Flag((-2, -1))).bounds == (1,)
    assert xi_flag(Partition((1,)), Flag((0,))).bounds == (0,)
    assert xi_flag(Partition((2, 1)), Flag((-1, 0))).bounds == (0, 1)
    with pytest.raises(ValueError):
        xi_flag(Partition((1,)), Flag((1,)))


def test_dominance():
    assert dominance_leq(Partition((1, 1)), Partition((2,)))
    assert not dominance_leq(Partition((2,)), Partition((1, 1)))
    assert dominance_leq(Partition((2, 1)), Partition((2, 1)))
    assert not dominance_leq(Partition((1,)), Partition((2,)))


def test_flag_equivalence():
    lam = Partition((2, 2, 2, 1))
    assert flags_equivalent(lam, Flag((3, 3, 3, 5)), Flag((1, 2, 3, 5)))
    assert not flags_equivalent(lam, Flag((3, 3, 3, 5)), Flag((1, 2, 3, 4)))
    caps = flag_caps(Partition((1, 1)), Flag((1, 2)))
    assert caps[(1, 1)] == 1 and caps[(2, 1)] == 2


def test_compatible_flags_respect_bounds():
    lam = Partition((2, 1))
    flags = list(compatible_flags(lam, -1, 2))
    assert all(is_compatible(lam, f) for f in flags)
    assert all(-1 <= b <= 2 for f in flags for b in f.bounds)
    assert Flag((0, 2)) in flags
    assert len(flags) == len(set(flags))
