import pytest

from agraded.core import DEFAULT_PRIME, PreconditionError
from agraded.examples_lib import build_example
from agraded.matfac import corpus
from agraded.presentations import h_polynomial, minimal_generators
from agraded.series import poly_mul_one_minus_z
from agraded.tor import l_polynomial_from_mf, tor1_from_mf, tor1_lengths

P = DEFAULT_PRIME


def test_tor1_hypersurface(hyper):
    assert tor1_from_mf(hyper.mf, 8).values == [2, 3, 3, 3, 3, 3, 3, 3, 3]


def test_tor1_dvr_one_and_z():
    d = build_example("dvr-1;3", P)
    assert tor1_from_mf(d.mf, 8).values == [1, 1, 0, 0, 0, 0, 0, 0, 0]
    ls = l_polynomial_from_mf(d.mf, 12)
    assert ls.l_coeffs == (1, 1)
    assert ls.l_from_identity == (1, 1)


def test_tor1_dvr_2_3():
    d = build_example("dvr-2,3;5", P)
    assert tor1_from_mf(d.mf, 8).values == [2, 4, 4, 2, 0, 0, 0, 0, 0]
    assert l_polynomial_from_mf(d.mf, 12).l_coeffs == (2, 4, 4, 2)


def test_l_polynomial_two_routes_agree(hyper):
    ls = l_polynomial_from_mf(hyper.mf, 12)
    assert ls.l_coeffs == (2, 1)
    assert ls.l_from_identity == ls.l_coeffs
    assert ls.dim_used == 1
    assert ls.l_at_1 == 3


def test_l_identity_by_hand(hyper):
    # (1-z) l_M(z) = h_K(z) - mu(M) h_A(z) + h_M(z), coefficientwise
    mf = hyper.mf
    h_a = h_polynomial(mf.ring().as_module(), 12).coeffs
    h_m = h_polynomial(mf.module(), 12).coeffs
    h_k = h_polynomial(mf.syzygy_module(), 12).coeffs
    mu = minimal_generators(mf.module())
    l = list(l_polynomial_from_mf(mf, 12).l_coeffs)
    lhs = poly_mul_one_minus_z(l)
    width = max(len(lhs), len(h_a), len(h_m), len(h_k))

    def at(c, k):
        return c[k] if k < len(c) else 0

    for k in range(width):
        assert at(lhs, k) == at(h_k, k) - mu * at(h_a, k) + at(h_m, k)


def test_l_identity_on_corpus_sample():
    for mf in corpus(7, P, 4):
        ls = l_polynomial_from_mf(mf, 12)
        assert ls.l_coeffs == ls.l_from_identity


def test_tor1_guards_reject_wrong_syzygy(hyper):
    mf = hyper.mf
    module = mf.module()
    n = mf.size
    cols = tuple(tuple(mf.phi[i][j] for i in range(n)) for j in range(n))
    # passing the module itself as its own syzygy must trip a guard
    with pytest.raises(PreconditionError):
        tor1_lengths(module, module, cols, 6)


def test_tor1_rejects_column_shape(hyper):
    mf = hyper.mf
    with pytest.raises(PreconditionError):
        tor1_lengths(mf.module(), mf.syzygy_module(), ((mf.phi[0][0],),), 6)
