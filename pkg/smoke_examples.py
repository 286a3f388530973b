import time

from agraded.examples_lib import build_example, example_keys
from agraded.matfac import mf_invariants
from agraded.presentations import h_polynomial, hilbert_function, minimal_generators
from agraded.series import chi_of, e_coefficients
from agraded.semigroup import oracle_hilbert_omega, oracle_hilbert_ring
from agraded.tor import l_polynomial_from_mf

t0 = time.time()
for key in example_keys():
    ex = build_example(key)
    g = ex.golden
    if key == "hyper-y3":
        hM = h_polynomial(ex.modules["M"], 10)
        hK = h_polynomial(ex.modules["K"], 10)
        hA = h_polynomial(ex.ring.as_module(), 10)
        assert tuple(hM.coeffs) == g["h_M"], hM.coeffs
        assert tuple(hK.coeffs) == g["h_K"], hK.coeffs
        assert tuple(hA.coeffs) == g["h_A"]
        hf = hilbert_function(ex.modules["M"], 3)
        assert tuple(hf.values) == g["H_M_prefix"], hf.values
        inv = mf_invariants(ex.mf)
        assert inv["e"] == g["e"] and inv["mu"] == g["mu"] and inv["i_M"] == g["i_M"]
    elif key == "paper-s5":
        hA = h_polynomial(ex.ring.as_module(), 14)
        assert tuple(hA.coeffs) == g["h_A"], hA.coeffs
        assert hA.dim_r == 2
        es = e_coefficients(hA, 3)
        assert tuple(es) == g["e_A"], es
        hE = h_polynomial(ex.modules["E"], 14)
        hM = h_polynomial(ex.modules["M"], 14)
        assert tuple(hE.coeffs) == g["h_E"] and tuple(hM.coeffs) == g["h_M"]
        assert minimal_generators(ex.modules["E"]) == g["mu_E"]
        assert e_coefficients(hE, 3)[3] == g["e3_E"]
        assert e_coefficients(hM, 3)[3] == g["e3_M"]
        assert g["mu_E"] * g["e3_A"] < g["e3_M"] + g["e3_E"]
        hf = hilbert_function(ex.ring.as_module(), 4)
        assert tuple(hf.values) == g["H_A_prefix"], hf.values
    elif key == "generic-2x2-ord2":
        inv = mf_invariants(ex.mf)
        assert inv["e"] == g["e"] and inv["mu"] == g["mu"] and inv["i_M"] == g["i_M"]
        hM = h_polynomial(ex.modules["M"], 10)
        assert tuple(hM.coeffs) == g["h_M"], hM.coeffs
        assert hM.multiplicity() == g["e0_M"] == inv["mu"]
    elif key == "generic-2x2-ord3":
        hM = h_polynomial(ex.modules["M"], 10)
        hK = h_polynomial(ex.modules["K"], 10)
        assert tuple(hM.coeffs) == g["h_M"] and tuple(hK.coeffs) == g["h_K"]
        assert chi_of(hM, 1) == g["chi1_M"] and chi_of(hK, 1) == g["chi1_K"]
        assert (hM.multiplicity() == hM.coeffs[0]) == g["ulrich_M"]
        assert (hK.multiplicity() == hK.coeffs[0]) == g["ulrich_K"]
        lM = l_polynomial_from_mf(ex.mf, 10).l_coeffs
        assert tuple(lM) == g["l_M"], lM
    elif key.startswith("dvr-"):
        hM = h_polynomial(ex.modules["M"], ex.default_nmax)
        assert tuple(hM.coeffs) == g["h_M"], (key, hM.coeffs)
        inv = mf_invariants(ex.mf)
        assert inv["e"] == g["e"] and inv["i_M"] == g["i_M"]
    elif key.startswith("semigroup-"):
        nm = ex.default_nmax
        hf_ring = hilbert_function(ex.ring.as_module(), nm)
        assert list(hf_ring.values) == oracle_hilbert_ring(ex.sg, nm)
        hf_om = hilbert_function(ex.omega, nm)
        assert list(hf_om.values) == oracle_hilbert_omega(ex.sg, nm)
        hA = h_polynomial(ex.ring.as_module(), nm)
        hw = h_polynomial(ex.omega, nm)
        assert tuple(hA.coeffs) == g["h_A"], (key, hA.coeffs)
        assert tuple(hw.coeffs) == g["h_omega"], (key, hw.coeffs)
        assert ex.sg.type == g["tau"] and ex.sg.frobenius == g["frobenius"]
        assert e_coefficients(hA, 1)[1] == g["e1_A"]
        assert chi_of(hA, 1) == g["chi1_A"]
    print(f"ok {key}  ({time.time() - t0:.1f}s)")

try:
    build_example("nope")
    raise SystemExit("expected PreconditionError")
except Exception as e:
    assert "unknown example" in str(e)
print("ok unknown-key rejection")
print(f"all examples pass  ({time.time() - t0:.1f}s total)")
