"""The coefficient pipeline: unique middle partition, the value-shifting
algorithm, and the j-coefficients with their numeric cross-check."""

import random

import pytest

from egc.perms import Permutation
from egc.pipeline import (build_context, chi_flags, j_coefficient, j_minus,
                          j_numeric, j_of_permutation, j_plus, pi_algorithm,
                          q_of, unique_nu)
from egc.ring import (DEFAULT_PRIME, GrahamMonomial, GrahamSum, eval_graham,
                      sample_point)
from egc.shapes import Flag, Partition

P = DEFAULT_PRIME


def mono(*factors):
    return GrahamMonomial(tuple(factors), 0)


def test_q_of():
    assert q_of(Partition(())) == 0
    assert q_of(Partition((1,))) == 1
    assert q_of(Partition((4, 4, 4, 4, 4, 2, 1))) == 4


def test_unique_nu_fixtures():
    lam = Partition((7, 4, 2, 2, 1))
    assert unique_nu(lam, Flag((-1, 0, 1, 2, 4)),
                     Partition((5, 4, 2, 1, 1))) == Partition((7, 4, 2, 1, 1))
    assert unique_nu(lam, Flag((-2, -1, 1, 2, 3)),
                     Partition((4, 2, 2, 1))) == Partition((7, 4, 2, 1))
    assert unique_nu(Partition((1,)), Flag((0,)), Partition(())) is None


def test_unique_nu_zero_row():
    # a cell in a zero-flag row kills the coefficient
    assert unique_nu(Partition((2, 1)), Flag((0, 1)),
                     Partition((1, 1))) is None


def test_pi_algorithm_fixture():
    lam = Partition((4, 4, 4, 4, 4, 2, 1))
    seq = pi_algorithm(lam, Flag((3, 4, 4, 5, 6, 6, 8)))
    assert seq[5].one_line(1, 8) == (6, 1, 2, 3, 4, 5, 7, 8)
    assert seq[6].one_line(1, 8) == (6, 3, 4, 5, 1, 2, 7, 8)
    assert seq[7].one_line(1, 8) == (6, 3, 4, 5, 7, 8, 1, 2)


def test_pi_algorithm_literal_flag():
    # with the flag value 6 in the last row the final step has no room to
    # move anything, so pi_7 repeats pi_6
    lam = Partition((4, 4, 4, 4, 4, 2, 1))
    seq = pi_algorithm(lam, Flag((3, 4, 4, 5, 6, 6, 6)))
    assert seq[5].one_line(1, 8) == (6, 1, 2, 3, 4, 5, 7, 8)
    assert seq[6].one_line(1, 8) == (6, 3, 4, 5, 1, 2, 7, 8)
    assert seq[7] == seq[6]


def test_pi_algorithm_small():
    seq = pi_algorithm(Partition((1, 1)), Flag((1, 2)))
    assert seq[0] == Permutation.identity()
    assert seq[2].one_line(1, 3) == (2, 1, 3)
    trivial = pi_algorithm(Partition((2, 1)), Flag((0, 0)))
    assert all(p == Permutation.identity() for p in trivial)


def test_chi_flags():
    lam, phi = Partition((1, 1)), Flag((1, 2))
    chis = chi_flags(lam, phi)
    assert chis[0] == phi
    assert chis[1] == Flag((0, 2))
    assert chis[2] == Flag((0, 1))


def test_j_plus_fixtures():
    # raw building blocks carry the pre-normalization beta shift
    assert j_plus(Partition((2,)), Flag((1,)), Partition((1,))) == \
        GrahamSum({GrahamMonomial(((1, 2),), -1): 1})
    assert j_plus(Partition((1, 1)), Flag((1, 2)), Partition((1,))) == \
        GrahamSum({GrahamMonomial(((2, 0),), -1): 1})
    assert j_plus(Partition((1,)), Flag((1,)), Partition((1,))) == \
        GrahamSum.one()


def test_j_minus_fixtures():
    assert j_minus(Partition((1, 1)), Flag((-2, -1)), Partition((1,))) == \
        GrahamSum({GrahamMonomial(((-1, 0),), -1): 1})
    # the self-coefficient keeps a 1 plus honest beta-degree corrections
    assert j_minus(Partition((2, 1)), Flag((-1, 0)), Partition((2, 1))) == \
        GrahamSum({mono(): 1, mono((1, 0)): 1})
    assert j_minus(Partition((1,)), Flag((0,)), Partition((1,))) == \
        GrahamSum.one()


def test_j_coefficient_fixtures():
    assert j_coefficient(Partition((2,)), Flag((1,)), Partition((1,))) == \
        GrahamSum({mono((1, 2)): 1})
    assert j_coefficient(Partition((1, 1)), Flag((-2, -1)),
                         Partition((1,))) == GrahamSum({mono((-1, 0)): 1})
    assert j_coefficient(Partition((1, 1)), Flag((1, 2)),
                         Partition((1,))) == GrahamSum({mono((2, 0)): 1})
    assert j_coefficient(Partition((1,)), Flag((0,)),
                         Partition(())).is_zero()
    assert j_coefficient(Partition((2,)), Flag((1,)), Partition((2,))) == \
        GrahamSum({mono(): 1, mono((1, 2)): 1})


def test_j_coefficient_rho_not_contained():
    assert j_coefficient(Partition((2,)), Flag((1,)),
                         Partition((1, 1))).is_zero()


def test_j_of_permutation():
    assert j_of_permutation(Permutation.s(0), Partition((1,))) == \
        GrahamSum.one()
    with pytest.raises(ValueError):
        j_of_permutation(Permutation.from_word((1, 2, -1, 0)),
                         Partition((1,)))


def test_build_context_cases():
    ctx = build_context(Partition((7, 4, 2, 2, 1)), Flag((-1, 0, 1, 2, 4)),
                        Partition((5, 4, 2, 1, 1)))
    assert ctx.q == 2
    assert ctx.nu == Partition((7, 4, 2, 1, 1))
    assert ctx.case == "both"
    zero = build_context(Partition((1,)), Flag((0,)), Partition(()))
    assert zero.case == "zero"


def test_cross_representation():
    rng = random.Random(17)
    cases = [((2,), (1,), (1,)), ((2, 1), (-1, 1), (1,)),
             ((2, 2), (1, 2), (2, 1)), ((1, 1), (-2, -1), ()),
             ((3, 1), (-3, 0), (1, 1))]
    for parts, bounds, rparts in cases:
        lam, phi, rho = Partition(parts), Flag(bounds), Partition(rparts)
        j = j_coefficient(lam, phi, rho)
        for _ in range(3):
            pt = sample_point(P, rng, (), range(-6, 8))
            lhs = eval_graham(j, pt)
            rhs = pow(pt.beta, lam.size - rho.size, P) \
                * j_numeric(lam, phi, rho, pt) % P
            assert lhs == rhs


def test_structure_all_positive_types():
    # the self-coefficient of 345162: unit multiplicities, Type 3 only
    w = Permutation.from_one_line((3, 4, 5, 1, 6, 2), 1)
    from egc.perms import code_shape_flag
    csf = code_shape_flag(w)
    j = j_coefficient(csf.shape, csf.flag, csf.shape)
    assert not j.is_zero()
    for m, c in j.canonical():
        assert c >= 1 and m.beta_shift == 0
