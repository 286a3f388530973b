import pytest

from agraded.core import DEFAULT_PRIME, PreconditionError
from agraded.presentations import hilbert_function, minimal_generators
from agraded.semigroup import (
    minimal_generators_of,
    omega_presentation,
    oracle_hilbert_omega,
    oracle_hilbert_ring,
    ring_presentation,
    semigroup,
)

P = DEFAULT_PRIME

GOLDEN = {
    # gens: (frobenius, type, pseudo-frobenius) by set arithmetic
    (3, 4, 5): (2, 2, (1, 2)),
    (4, 5, 6): (7, 1, (7,)),
    (3, 5, 7): (4, 2, (2, 4)),
    (5, 6, 7): (9, 2, (8, 9)),
    (4, 6, 9): (11, 1, (11,)),
}


def test_semigroup_frobenius_and_type():
    for gens, (frob, typ, pf) in GOLDEN.items():
        sg = semigroup(gens)
        assert sg.frobenius == frob
        assert sg.type == typ
        assert sg.pseudo_frobenius() == pf


def test_semigroup_rejects_bad_generators():
    with pytest.raises(PreconditionError):
        semigroup((4, 6))  # gcd 2
    with pytest.raises(PreconditionError):
        semigroup((0, 3))


def test_membership_and_gaps():
    sg = semigroup((3, 5, 7))
    assert sg.gaps() == (1, 2, 4)
    assert sg.contains(0) and sg.contains(3) and not sg.contains(4)
    assert sg.contains(sg.bound + 100)  # everything beyond the bound


def test_dual_contains_reflects_gaps():
    for gens in GOLDEN:
        sg = semigroup(gens)
        for z in range(-2, sg.frobenius + 3):
            assert sg.dual_contains(z) == (not sg.contains(sg.frobenius - z))


def test_minimal_generators_of():
    assert minimal_generators_of(semigroup((4, 5, 6, 9))) == (4, 5, 6)
    assert minimal_generators_of(semigroup((3, 4, 5))) == (3, 4, 5)


def test_ring_presentation_matches_counting_oracle():
    for gens in ((3, 4, 5), (4, 5, 6), (3, 5, 7), (5, 6, 7)):
        sg = semigroup(gens)
        ring = ring_presentation(sg, P)
        got = hilbert_function(ring.as_module(), 7).values
        assert got == oracle_hilbert_ring(sg, 7), gens


def test_omega_presentation_matches_counting_oracle():
    for gens in ((3, 4, 5), (4, 5, 6), (5, 6, 7)):
        sg = semigroup(gens)
        ring = ring_presentation(sg, P)
        omega = omega_presentation(sg, ring)
        got = hilbert_function(omega, 7).values
        assert got == oracle_hilbert_omega(sg, 7), gens
        assert minimal_generators(omega) == sg.type


def test_oracle_values_by_hand():
    # S = <3,4,5>: S itself is 0,3,4,5,6,...; m^n corresponds to sums of n
    # generators, so H(A) = 1,3,3,3... and the dual exponent set {z: 2-z not
    # in S} = {1,2} union everything >= 3 gives H(omega) = 2,3,3,...
    sg = semigroup((3, 4, 5))
    assert oracle_hilbert_ring(sg, 5) == [1, 3, 3, 3, 3, 3]
    assert oracle_hilbert_omega(sg, 5) == [2, 3, 3, 3, 3, 3]


def test_stress_semigroup_4_6_9():
    sg = semigroup((4, 6, 9))
    ring = ring_presentation(sg, P)
    assert hilbert_function(ring.as_module(), 8).values == oracle_hilbert_ring(sg, 8)
