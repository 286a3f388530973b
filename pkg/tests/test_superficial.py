import random

import pytest

from agraded.core import DEFAULT_PRIME, PreconditionError
from agraded.presentations import h_polynomial, hilbert_function, ring_from_strings
from agraded.series import SeriesWindowError, e_coefficients
from agraded.superficial import (
    LinearForm,
    b_sequence,
    depth_G_estimate,
    e_from_rho,
    quotient_by_form,
    quotient_ring_by_form,
    random_form,
    rho_sequence,
)
from agraded.tor import xmap_kernel_dims

P = DEFAULT_PRIME


def test_b_sequence_superficial_form(hyper):
    M = hyper.modules["M"]
    b = b_sequence(M, LinearForm((1, 0)), 8)
    assert b.values == [0, 1, 0, 0, 0, 0, 0, 0, 0]
    assert b.verdict == "superficial"
    assert b.c_observed == 2


def test_b_sequence_non_superficial_form(hyper):
    # y kills nothing early but y*y^2 = 0, so kernels grow with n
    A = hyper.ring.as_module()
    b = b_sequence(A, LinearForm((0, 1)), 8)
    assert b.values == [0, 0, 0, 1, 2, 3, 4, 5, 6]
    assert b.verdict == "not-superficial"


def test_b_sequence_short_window_is_inconclusive(hyper):
    M = hyper.modules["M"]
    b = b_sequence(M, LinearForm((1, 0)), 2)
    assert b.verdict == "inconclusive"


def test_b_sequence_rejects_zero_form(hyper):
    with pytest.raises(PreconditionError):
        b_sequence(hyper.ring.as_module(), LinearForm((0, 0)), 4)


def test_b_sequence_regular_ring_all_zero():
    ring = ring_from_strings(["x", "y"], [], P)
    b = b_sequence(ring.as_module(), LinearForm((1, 1)), 6)
    assert b.all_zero and b.verdict == "superficial"


def test_b_sequence_matches_independent_kernel_route(hyper, ci3):
    # two kernel computations with different truncation bookkeeping
    rng = random.Random(23)
    for inst in (hyper, ci3):
        ring = inst.ring
        mods = [ring.as_module()] + [inst.modules[k] for k in sorted(inst.modules) if k != "A"]
        for module in mods[:2]:
            for _ in range(3):
                form = random_form(ring, rng)
                assert (
                    b_sequence(module, form, 7).values
                    == xmap_kernel_dims(module, form, 7).values
                )


def test_quotient_ring_by_form(hyper):
    ring = hyper.ring
    q1 = quotient_ring_by_form(ring, LinearForm((1, 0)))
    assert q1.nvars == 1
    assert hilbert_function(q1.as_module(), 4).values == [1, 1, 1, 0, 0]
    # x + y and x cut out isomorphic quotients of k[x,y]/(y^3)
    q2 = quotient_ring_by_form(ring, LinearForm((1, 1)))
    assert hilbert_function(q2.as_module(), 4).values == [1, 1, 1, 0, 0]
    # killing y leaves the polynomial line
    q3 = quotient_ring_by_form(ring, LinearForm((0, 1)))
    assert hilbert_function(q3.as_module(), 4).values == [1, 1, 1, 1, 1]


def test_quotient_by_form_module(hyper):
    M = hyper.modules["M"]
    q = quotient_by_form(M, LinearForm((1, 0)))
    assert q.ring.nvars == 1
    vals = hilbert_function(q, 5).values
    assert sum(vals) == 3  # e_0(M) = 3 and x is superficial, so lambda(M/xM) = 3


def test_rho_route_matches_h_route_on_dim_one(hyper, ci3):
    # e_i from the quotient-length sequence against e_i from h, i >= 1
    rng = random.Random(5)
    for inst in (hyper, ci3):
        ring = inst.ring
        A = ring.as_module()
        h = h_polynomial(A, 12)
        assert h.dim_r == 1
        es = e_coefficients(h, 3)
        for _ in range(3):
            form = random_form(ring, rng)
            b = b_sequence(A, form, 10)
            if not b.all_zero:
                continue
            rho = rho_sequence(A, form, 12)
            assert e_from_rho(rho, 3) == es[1:]


def test_e_from_rho_needs_zero_tail(hyper):
    from agraded.series import LengthSeries

    # a rho window whose tail has not flattened yet must be refused
    with pytest.raises(SeriesWindowError):
        e_from_rho(LengthSeries([2, 1, 1], True, 0), 3)
    # and rho_sequence itself refuses a window too short to certify h
    with pytest.raises(SeriesWindowError):
        rho_sequence(hyper.ring.as_module(), LinearForm((1, 0)), 3)


def test_depth_estimate_hypersurface_ring(hyper):
    rep = depth_G_estimate(hyper.ring.as_module(), 10, seed=0)
    assert rep.estimate == 1 and rep.dim == 1 and rep.exact


def test_depth_estimate_module_with_obstruction(hyper):
    # b_1(x, M) = 1 for every superficial x, so G(M) has depth 0
    rep = depth_G_estimate(hyper.modules["M"], 10, seed=0)
    assert rep.estimate == 0 and rep.dim == 1
    assert not rep.exact


def test_depth_estimate_zero_dimensional():
    ring = ring_from_strings(["x"], ["x^4"], P)
    rep = depth_G_estimate(ring.as_module(), 8, seed=0)
    assert rep.estimate == 0 and rep.dim == 0 and rep.exact


def test_random_form_seeded_and_nonzero(hyper):
    a = random_form(hyper.ring, random.Random(42))
    b = random_form(hyper.ring, random.Random(42))
    assert a.coeffs == b.coeffs
    assert any(a.coeffs)


def test_linear_form_describe(hyper):
    assert LinearForm((1, 1)).describe(hyper.ring) == "x + y"
    assert LinearForm((1, 0)).as_poly(hyper.ring) == hyper.ring.poly("x")
