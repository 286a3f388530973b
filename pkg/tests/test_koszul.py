import pytest

from agraded.core import DEFAULT_PRIME, PreconditionError
from agraded.koszul import (
    WSequence,
    difference_identity_check,
    generic_invariance_sample,
    koszul_w,
)
from agraded.superficial import LinearForm

P = DEFAULT_PRIME


def test_w_vanishes_for_superficial_form(hyper):
    w = koszul_w(hyper.ring, [LinearForm((1, 0))], 10)
    assert w.values == [0] * 11
    assert w.vanishing_from == 0
    assert not w.warnings
    # first homology vanishes degree by degree
    assert all(row[1] == 0 for row in w.homology_by_degree)


def test_w_detects_bad_form(hyper):
    w = koszul_w(hyper.ring, [LinearForm((0, 1))], 8)
    assert w.values == [0, 0, 0, -1, -2, -3, -4, -5, -6]
    assert w.warnings  # the non-superficial verdict is reported, not fatal
    assert any(r[1] > 0 for r in w.homology_by_degree)


def test_w_two_forms_beyond_dimension(hyper):
    # r = 2 > dim A = 1: w stabilizes at a nonzero tail
    w = koszul_w(hyper.ring, [LinearForm((1, 0)), LinearForm((0, 1))], 8,
                 check_superficial=False)
    assert w.values == [0, 0, 0, -1, -1, -1, -1, -1, -1]


def test_difference_identity_r1(hyper):
    d = difference_identity_check(hyper.ring, [LinearForm((1, 0))], 8)
    assert d["r"] == 1
    assert d["lhs"] == [1, 2, 3, 3, 3, 3, 3, 3, 3]
    assert d["lhs"] == d["quotient_lengths"]
    assert d["w"] == [0] * 9
    assert d["w_vanishing_from"] == 0


def test_difference_identity_r2(hyper):
    d = difference_identity_check(hyper.ring, [LinearForm((1, 0)), LinearForm((1, 1))], 8)
    # lhs_n = quotient_lengths_n + w_n coefficientwise
    assert d["lhs"] == [a + b for a, b in zip(d["quotient_lengths"], d["w"])]
    assert d["lhs"] == [1, 1, 1, 0, 0, 0, 0, 0, 0]
    assert d["w"] == [0, 0, 0, -1, -1, -1, -1, -1, -1]


def test_difference_matches_koszul_w(hyper):
    forms = [LinearForm((1, 0)), LinearForm((1, 1))]
    d = difference_identity_check(hyper.ring, forms, 8)
    w = koszul_w(hyper.ring, forms, 8, check_superficial=False)
    assert d["w"] == w.values


def test_generic_invariance(hyper):
    rep = generic_invariance_sample(hyper.ring, 1, samples=3, seed=0, n_max=8)
    assert rep.agreed
    assert rep.hilbert == [1, 1, 1, 0, 0, 0, 0, 0, 0]
    assert rep.retries == 0
    assert rep.samples == 3
    assert len(rep.detail) == 3


def test_generic_invariance_seeded(hyper):
    a = generic_invariance_sample(hyper.ring, 1, samples=2, seed=5, n_max=6)
    b = generic_invariance_sample(hyper.ring, 1, samples=2, seed=5, n_max=6)
    assert a.samples == b.samples and a.hilbert == b.hilbert


def test_generic_invariance_preconditions(hyper):
    with pytest.raises(PreconditionError):
        generic_invariance_sample(hyper.ring, 1, samples=1, seed=0, n_max=6)
    with pytest.raises(PreconditionError):
        generic_invariance_sample(hyper.ring, 2, samples=2, seed=0, n_max=6)


def test_koszul_w_rejects_no_forms(hyper):
    with pytest.raises(PreconditionError):
        koszul_w(hyper.ring, [], 6)
