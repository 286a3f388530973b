import pytest

from agraded.core import DEFAULT_PRIME, PreconditionError
from agraded.examples_lib import build_example, example_keys
from agraded.matfac import dvr_normal_form, mf_invariants
from agraded.presentations import h_polynomial, hilbert_function, minimal_generators
from agraded.series import chi_coefficients, e_coefficients

P = DEFAULT_PRIME


def test_example_keys_cover_fixed_and_parametric():
    keys = example_keys()
    for k in ("hyper-y3", "paper-s5", "generic-2x2-ord2", "generic-2x2-ord3", "ci-3var"):
        assert k in keys
    assert any(k.startswith("dvr-") for k in keys)
    assert any(k.startswith("semigroup-") for k in keys)


def test_unknown_key_lists_options():
    with pytest.raises(PreconditionError) as err:
        build_example("nope", P)
    assert "hyper-y3" in str(err.value)


def test_every_fixed_golden_is_reproduced():
    # every recorded golden number must match a fresh engine run
    for key in example_keys():
        inst = build_example(key, P)
        g = inst.golden
        ring = inst.ring
        A = ring.as_module()
        h_a = h_polynomial(A, inst.default_nmax)
        if "h_A" in g:
            assert tuple(h_a.coeffs) == g["h_A"], key
        if "H_prefix" in g:
            got = hilbert_function(A, len(g["H_prefix"]) - 1).values
            assert tuple(got) == g["H_prefix"], key
        if "H_A_prefix" in g:
            got = hilbert_function(A, len(g["H_A_prefix"]) - 1).values
            assert tuple(got) == g["H_A_prefix"], key
        if "e_A" in g:
            assert tuple(e_coefficients(h_a, 3)) == g["e_A"], key
        if "e3_A" in g:
            assert e_coefficients(h_a, 3)[3] == g["e3_A"], key
        if "e0_A" in g:
            assert e_coefficients(h_a, 0)[0] == g["e0_A"], key
        if "e1_A" in g:
            assert e_coefficients(h_a, 1)[1] == g["e1_A"], key
        if "chi1_A" in g:
            assert chi_coefficients(h_a, None, 1)[0] == g["chi1_A"], key
        if "dim" in g:
            assert h_a.dim_r == g["dim"], key
        for mod_key, h_key in (("M", "h_M"), ("K", "h_K"), ("E", "h_E"), ("omega", "h_omega")):
            if h_key in g and mod_key in inst.modules:
                hm = h_polynomial(inst.modules[mod_key], inst.default_nmax)
                assert tuple(hm.coeffs) == g[h_key], (key, mod_key)
        if "H_M_prefix" in g:
            got = hilbert_function(inst.modules["M"], len(g["H_M_prefix"]) - 1).values
            assert tuple(got) == g["H_M_prefix"], key
        if "mu_E" in g:
            assert minimal_generators(inst.modules["E"]) == g["mu_E"], key
        if "mu" in g and inst.mf is not None:
            assert mf_invariants(inst.mf)["mu"] == g["mu"], key
        if "e" in g and inst.mf is not None:
            assert inst.mf.e == g["e"], key
        if "i_M" in g and inst.mf is not None:
            assert mf_invariants(inst.mf)["i_M"] == g["i_M"], key
        if "exponents" in g:
            assert dvr_normal_form(inst.mf).exponents == g["exponents"], key
        if "chi1_M" in g:
            hm = h_polynomial(inst.modules["M"], inst.default_nmax)
            assert chi_coefficients(hm, None, 1)[0] == g["chi1_M"], key
        if "chi1_K" in g:
            hk = h_polynomial(inst.modules["K"], inst.default_nmax)
            assert chi_coefficients(hk, None, 1)[0] == g["chi1_K"], key
        if "tau" in g and inst.omega is not None:
            assert minimal_generators(inst.omega) == g["tau"], key
        if "frobenius" in g and inst.sg is not None:
            assert inst.sg.frobenius == g["frobenius"], key


def test_parametric_dvr_keys():
    d = build_example("dvr-1,4;6", P)
    assert d.mf.e == 6
    assert dvr_normal_form(d.mf).exponents == (1, 4)
    with pytest.raises(PreconditionError):
        build_example("dvr-3;2", P)  # exponent above e
    with pytest.raises(PreconditionError):
        build_example("dvr-;4", P)


def test_parametric_semigroup_keys():
    inst = build_example("semigroup-4,6,9", P)
    assert inst.sg.frobenius == 11
    assert minimal_generators(inst.omega) == inst.sg.type == 1
    with pytest.raises(PreconditionError):
        build_example("semigroup-4,6", P)  # gcd 2


def test_examples_respect_prime_override():
    inst = build_example("hyper-y3", 1009)
    assert inst.ring.p == 1009
    assert hilbert_function(inst.ring.as_module(), 4).values == [1, 2, 3, 3, 3]
