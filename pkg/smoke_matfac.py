import time

from agraded import h_polynomial, hilbert_function
from agraded.matfac import (
    cm_type,
    corpus,
    det_order_pairing,
    dvr_normal_form,
    leading_form_det_test,
    mf_dual,
    mf_from_strings,
    mf_invariants,
    s_module,
)

P = 2147483647
t0 = time.time()

# the 2x2 example over k[x,y], f = y^3
mf = mf_from_strings([["x", "y"], ["-y^2", "0"]], "adjugate", ["x", "y"], P, "ex")
print("f order e =", mf.e, "warnings:", mf.warnings)
inv = mf_invariants(mf)
print("invariants:", inv)
print("det pairing:", det_order_pairing(mf))

hM = h_polynomial(mf.module(), 8)
print("h_M =", hM.coeffs, "dim", hM.dim_r)
hK = h_polynomial(s_module(mf), 8)
print("h_S (= coker psi) =", hK.coeffs)

dual = mf_dual(mf)
hMd = h_polynomial(dual.module(), 8)
print("h_{M*} =", hMd.coeffs)

lead = leading_form_det_test(mf)
print("leading-form det test:", lead)

print("type(M) =", cm_type(mf, seed=2))

# DVR pair diag(y^2,y^3) with psi = diag(y,1): f = y^3, non-minimal psi
mfd = mf_from_strings([["y^2", "0"], ["0", "y^3"]], [["y", "0"], ["0", "1"]], ["y"], P, "dvr3")
print("dvr3 warnings:", mfd.warnings)
dec = dvr_normal_form(mfd)
print("exponents:", dec.exponents, "h:", dec.h_coeffs(), "syz:", dec.syzygy_exponents(), "free:", dec.free)

# same phi with the adjugate: f = y^5
mfd5 = mf_from_strings([["y^2", "0"], ["0", "y^3"]], "adjugate", ["y"], P, "dvr5")
dec5 = dvr_normal_form(mfd5)
print("dvr5 e =", mfd5.e, "exponents:", dec5.exponents, "h:", dec5.h_coeffs(), "syz:", dec5.syzygy_exponents())
inv5 = mf_invariants(mfd5)
print("dvr5 invariants:", inv5)
h5 = h_polynomial(mfd5.module(), 8)
print("dvr5 h from engine:", h5.coeffs, "multiplicity", h5.multiplicity())
print("type(dvr5) =", cm_type(mfd5))
print("dvr5 leading test:", leading_form_det_test(mfd5))

# generic 2x2 with linear entries: Ulrich, leading det nonzero
mfu = mf_from_strings([["x", "y"], ["y", "x+y"]], "adjugate", ["x", "y"], P, "ulrich")
print("ulrich e =", mfu.e, "invariants:", mf_invariants(mfu))
print("ulrich leading test:", leading_form_det_test(mfu))
hu = h_polynomial(mfu.module(), 8)
print("ulrich h_M =", hu.coeffs, "e0 =", hu.multiplicity())
print("type(ulrich) =", cm_type(mfu, seed=1))

# small corpus sweep
mfs = corpus(seed=7, p=P, count=12)
for m in mfs:
    det_order_pairing(m)
    iv = mf_invariants(m)
    assert iv["det_order"] >= iv["i_M"] * iv["mu"]
print("corpus of", len(mfs), "ok:", [m.label for m in mfs[:3]], "...")

print(f"total {time.time() - t0:.2f}s")
