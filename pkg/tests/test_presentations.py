import itertools
import random

import pytest

from agraded.core import DEFAULT_PRIME, PreconditionError
from agraded.presentations import (
    ModulePresentation,
    annihilator_socle_dim,
    h_polynomial,
    hilbert_function,
    hilbert_function_ideal,
    hilbert_samuel,
    minimal_generators,
    ring_from_strings,
    stabilized_length,
)

P = DEFAULT_PRIME


def monomial_oracle(bounds, n_max):
    # H(A, n) for A = k[x]/q with q generated by the pure powers x_i^(b_i+1):
    # count exponent tuples with e_i <= b_i summing to n
    out = []
    for n in range(n_max + 1):
        cnt = 0
        for e in itertools.product(*(range(b + 1) for b in bounds)):
            if sum(e) == n:
                cnt += 1
        out.append(cnt)
    return out


def test_ring_rejects_low_order_generator():
    with pytest.raises(PreconditionError):
        ring_from_strings(["x", "y"], ["x + y^2"], P)


def test_ring_drops_zero_generators():
    ring = ring_from_strings(["x", "y"], ["0", "y^3"], P)
    assert len(ring.q_gens) == 1


def test_hilbert_free_ring():
    ring = ring_from_strings(["x", "y"], [], P)
    assert hilbert_function(ring.as_module(), 5).values == [1, 2, 3, 4, 5, 6]


def test_hilbert_monomial_quotients_match_counting_oracle():
    cases = [
        (["x"], ["x^3"], (2,)),
        (["x", "y"], ["y^3"], None),
        (["x", "y"], ["x^2", "y^4"], (1, 3)),
        (["x", "y", "z"], ["x^2", "y^3"], None),
    ]
    for names, gens, bounds in cases:
        ring = ring_from_strings(names, gens, P)
        got = hilbert_function(ring.as_module(), 6).values
        if bounds is not None:
            assert got == monomial_oracle(bounds, 6)
    # the unbounded cases against hand counts
    ring = ring_from_strings(["x", "y"], ["y^3"], P)
    assert hilbert_function(ring.as_module(), 6).values == [1, 2, 3, 3, 3, 3, 3]
    ring3 = ring_from_strings(["x", "y", "z"], ["x^2", "y^3"], P)
    assert hilbert_function(ring3.as_module(), 6).values == [1, 3, 5, 6, 6, 6, 6]


def test_hilbert_random_pure_power_ideals():
    # zero-dimensional monomial quotients against the counting oracle
    rng = random.Random(41)
    for _ in range(8):
        nv = rng.randrange(1, 4)
        bounds = tuple(rng.randrange(1, 4) for _ in range(nv))
        names = ["x", "y", "z"][:nv]
        gens = [f"{names[i]}^{bounds[i] + 1}" for i in range(nv)]
        ring = ring_from_strings(names, gens, P)
        n_max = sum(bounds) + 2
        assert hilbert_function(ring.as_module(), n_max).values == monomial_oracle(bounds, n_max)


def test_hilbert_hypersurface_nonmonomial():
    # x^2 - y^3 has order 2, so gr(A) = k[x,y]/(x^2): H = 1,2,2,2,...
    ring = ring_from_strings(["x", "y"], ["x^2 - y^3"], P)
    assert hilbert_function(ring.as_module(), 6).values == [1, 2, 2, 2, 2, 2, 2]


def test_hilbert_prime_independence_for_monomial_data():
    ring_a = ring_from_strings(["x", "y"], ["y^3"], 101)
    ring_b = ring_from_strings(["x", "y"], ["y^3"], 1009)
    assert (
        hilbert_function(ring_a.as_module(), 6).values
        == hilbert_function(ring_b.as_module(), 6).values
    )


def test_hilbert_samuel_is_cumulative():
    ring = ring_from_strings(["x", "y"], ["y^3"], P)
    A = ring.as_module()
    hf = hilbert_function(A, 6).values
    hs = hilbert_samuel(A, 6)
    assert hs == [sum(hf[: k + 1]) for k in range(7)]


def test_h_polynomial_dimensions():
    assert h_polynomial(ring_from_strings(["x"], ["x^4"], P).as_module(), 8).dim_r == 0
    assert h_polynomial(ring_from_strings(["x", "y"], ["y^3"], P).as_module(), 8).dim_r == 1
    assert h_polynomial(ring_from_strings(["x", "y"], [], P).as_module(), 8).dim_r == 2


def test_minimal_generators_sees_through_unit_relations():
    ring = ring_from_strings(["x", "y"], ["y^3"], P)
    one = ring.poly("1")
    x = ring.poly("x")
    # a unit entry in a relation collapses one generator
    m = ModulePresentation(ring, 2, [(one, x)], "N")
    assert minimal_generators(m) == 1
    assert not m.is_minimal
    free2 = ring.free_module(2)
    assert minimal_generators(free2) == 2


def test_module_with_extra_columns_is_ring_quotient():
    ring = ring_from_strings(["x", "y"], ["y^3"], P)
    A = ring.as_module()
    Ax = A.with_extra_columns([(ring.poly("x"),)])
    assert hilbert_function(Ax, 5).values == [1, 1, 1, 0, 0, 0]


def test_stabilized_length():
    ring = ring_from_strings(["x", "y"], ["y^3"], P)
    Ax = ring.as_module().with_extra_columns([(ring.poly("x"),)])
    assert stabilized_length(Ax) == 3
    zero_dim = ring_from_strings(["x"], ["x^4"], P).as_module()
    assert stabilized_length(zero_dim) == 4


def test_stabilized_length_rejects_infinite():
    ring = ring_from_strings(["x", "y"], ["y^3"], P)
    with pytest.raises(PreconditionError):
        stabilized_length(ring.as_module(), t_cap=12)


def test_hilbert_function_ideal_matches_membership_oracle():
    # A = k[x,y]/(y^3), I = (x^2, y): x^a y^b lies in I^n iff floor(a/2)+b >= n
    ring = ring_from_strings(["x", "y"], ["y^3"], P)
    A = ring.as_module()
    ideal = [ring.poly("x^2"), ring.poly("y")]
    got = hilbert_function_ideal(A, ideal, 6).values

    def oracle(n_max):
        out = []
        for n in range(n_max + 1):
            cnt = 0
            for a in range(2 * n_max + 6):
                for b in range(3):
                    if (a // 2 + b) >= n and not (a // 2 + b) >= n + 1:
                        cnt += 1
            out.append(cnt)
        return out

    assert got == oracle(6) == [2, 4, 6, 6, 6, 6, 6]


def test_hilbert_function_ideal_maximal_ideal_reduces_to_hf():
    ring = ring_from_strings(["x", "y"], ["y^3"], P)
    A = ring.as_module()
    ideal = [ring.poly("x"), ring.poly("y")]
    assert (
        hilbert_function_ideal(A, ideal, 6).values == hilbert_function(A, 6).values
    )


def test_hilbert_function_ideal_rejects_unit_generator():
    ring = ring_from_strings(["x", "y"], ["y^3"], P)
    with pytest.raises(PreconditionError):
        hilbert_function_ideal(ring.as_module(), [ring.poly("1 + x")], 4)


def test_annihilator_socle_dim():
    assert annihilator_socle_dim(ring_from_strings(["x"], ["x^3"], P).as_module()) == 1
    fat = ring_from_strings(["x", "y"], ["x^2", "x*y", "y^2"], P)
    assert annihilator_socle_dim(fat.as_module()) == 2


def test_direct_sum_hilbert_additive():
    ring = ring_from_strings(["x", "y"], ["y^3"], P)
    A = ring.as_module()
    B = ring.free_module(1)
    s = A.direct_sum(B)
    ha = hilbert_function(A, 5).values
    hb = hilbert_function(B, 5).values
    assert hilbert_function(s, 5).values == [a + b for a, b in zip(ha, hb)]
