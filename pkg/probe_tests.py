"""Scratch probe: print every constant the test suite will pin."""

import random
import time

from agraded.core import DEFAULT_PRIME, Poly, parse_poly, poly_str
from agraded.examples_lib import build_example, example_keys
from agraded.koszul import difference_identity_check, generic_invariance_sample, koszul_w
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
from agraded.presentations import (
    annihilator_socle_dim,
    h_polynomial,
    hilbert_function,
    hilbert_function_ideal,
    minimal_generators,
    ring_from_strings,
    stabilized_length,
)
from agraded.semigroup import (
    omega_presentation,
    oracle_hilbert_omega,
    oracle_hilbert_ring,
    ring_presentation,
    semigroup,
)
from agraded.series import chi_coefficients, e_coefficients
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
from agraded.tor import l_polynomial_from_mf, tor1_from_mf, tor1_lengths, xmap_kernel_dims

P = DEFAULT_PRIME

print("== hyper-y3 ==")
inst = build_example("hyper-y3", P)
ring = inst.ring
A = ring.as_module()
print("H(A):", hilbert_function(A, 8))
M = inst.modules["M"]
K = inst.modules["K"]
print("H(M):", hilbert_function(M, 8))
hM = h_polynomial(M, 12)
print("h(M):", hM.coeffs, "dim:", hM.dim_r, "post:", hM.postulation)
hA = h_polynomial(A, 12)
print("h(A):", hA.coeffs, "e(A):", e_coefficients(hA, 3), "chi(A):", chi_coefficients(hA, None, 3))
hK = h_polynomial(K, 12)
print("h(K):", hK.coeffs, "e(K):", e_coefficients(hK, 3))
print("mu(M):", minimal_generators(M), "mu(K):", minimal_generators(K))
mf = inst.mf
print("inv:", {k: v for k, v in sorted(mf_invariants(mf).items())})
print("type(M):", cm_type(mf))
print("det_order_pairing:", det_order_pairing(mf))
ts = l_polynomial_from_mf(mf, 10)
print("l_M:", ts.l_coeffs, "from-identity:", ts.l_from_identity, "dim_used:", ts.dim_used)
print("tor1:", tor1_from_mf(mf, 8).values)
x = LinearForm((1, 0), "x")
y = LinearForm((0, 1), "y")
bx = b_sequence(M, x, 8)
print("b(x,M):", bx.values, bx.verdict, "c:", bx.c_observed)
by = b_sequence(A, y, 8)
print("b(y,A):", by.values, by.verdict)
dep = depth_G_estimate(M, 10, seed=0, tries=5)
print("depth(M):", dep.estimate, "dim:", dep.dim, "exact:", dep.exact)
depA = depth_G_estimate(A, 10, seed=0, tries=5)
print("depth(A):", depA.estimate, "dim:", depA.dim, "exact:", depA.exact)
wx = koszul_w(ring, [x], 10)
print("w(x):", wx.values, "vanish:", wx.vanishing_from)
wy = koszul_w(ring, [y], 10, check_superficial=False)
print("w(y):", wy.values, "vanish:", wy.vanishing_from)
Aq = quotient_by_form(A, x)
print("H(A/xA):", hilbert_function(Aq, 6))
rho = rho_sequence(A, x, 10)
print("rho(x,A):", rho.values)
print("e_from_rho (e1..e3):", e_from_rho(rho, 3), "vs e(A):", e_coefficients(hA, 3))
print("xkd(x,M):", xmap_kernel_dims(M, x, 8).values)

print()
print("== paper-s5 ==")
inst5 = build_example("paper-s5", P)
A5 = inst5.ring.as_module()
print("H(A5):", hilbert_function(A5, 8))
h5 = h_polynomial(A5, 14)
print("h(A5):", h5.coeffs, "dim:", h5.dim_r, "e:", e_coefficients(h5, 3), "chi:", chi_coefficients(h5, None, 3))
E5 = inst5.modules["E"]
M5 = inst5.modules["M"]
hE = h_polynomial(E5, 14)
hM5 = h_polynomial(M5, 14)
print("h(E):", hE.coeffs, "e:", e_coefficients(hE, 3), "mu(E):", minimal_generators(E5))
print("h(M):", hM5.coeffs, "e:", e_coefficients(hM5, 3))

print()
print("== ci-3var ==")
ci = build_example("ci-3var", P)
Aci = ci.ring.as_module()
print("H:", hilbert_function(Aci, 7))
hci = h_polynomial(Aci, 12)
print("h:", hci.coeffs, "dim:", hci.dim_r, "e:", e_coefficients(hci, 3))

print()
print("== ord2 / ord3 ==")
for key in ("generic-2x2-ord2", "generic-2x2-ord3"):
    g = build_example(key, P)
    inv = mf_invariants(g.mf)
    hMg = h_polynomial(g.mf.module(), 12)
    hKg = h_polynomial(g.mf.syzygy_module(), 12)
    print(key, "inv:", {k: inv[k] for k in sorted(inv)})
    print("  h(M):", hMg.coeffs, "h(K):", hKg.coeffs, "chi1(M):", chi_coefficients(hMg, None, 1),
          "chi1(K):", chi_coefficients(hKg, None, 1), "type:", cm_type(g.mf))
    print("  lead:", leading_form_det_test(g.mf))

print()
print("== dvr family ==")
for key in ("dvr-1;3", "dvr-2,3;5"):
    d = build_example(key, P)
    inv = mf_invariants(d.mf)
    print(key, "inv:", {k: inv[k] for k in sorted(inv)})
    print("  l:", l_polynomial_from_mf(d.mf, 12).l_coeffs, "tor1:", tor1_from_mf(d.mf, 8).values)
    hMd = h_polynomial(d.mf.module(), 12)
    hKd = h_polynomial(d.mf.syzygy_module(), 12)
    print("  h(M):", hMd.coeffs, "h(K):", hKd.coeffs, "type:", cm_type(d.mf))
    print("  e(A):", e_coefficients(h_polynomial(d.mf.ring().as_module(), 12), 3),
          "e(M):", e_coefficients(hMd, 3), "e(K):", e_coefficients(hKd, 3))
    nf = dvr_normal_form(d.mf)
    print("  dvr exponents:", nf.exponents, "e:", nf.e)

print()
print("== ideal-adic oracle ==")
B = ring_from_strings(["x", "y"], ["y^3"], P, "B")
I = [B.poly("x^2"), B.poly("y")]
print("H_I:", hilbert_function_ideal(B.as_module(), I, 6))
# independent oracle: count monomials x^a y^b, b<=2, in I^n \ I^(n+1)
def ideal_oracle(n_max):
    # I = (x^2, y) in k[x,y]/(y^3); I^n spanned by x^(2i) y^j with i+j >= n (j <= 2)
    def span(n):
        return {(a, b) for a in range(0, 2 * n_max + 6) for b in range(3)
                if any(a >= 2 * i and b >= j for i in range(n + 1) for j in range(n - i + 1) if i + (n - i) == n and j == n - i)}
    # simpler: monomial x^a y^b lies in I^n iff floor(a/2) + b >= n
    out = []
    for n in range(n_max + 1):
        cnt = 0
        for a in range(0, 2 * (n_max + 3)):
            for b in range(3):
                inn = (a // 2 + b) >= n
                inn1 = (a // 2 + b) >= n + 1
                if inn and not inn1:
                    cnt += 1
        out.append(cnt)
    return out
print("oracle:", ideal_oracle(6))

print()
print("== semigroups ==")
for gens in ((3, 4, 5), (4, 5, 6), (3, 5, 7), (5, 6, 7)):
    sg = semigroup(gens)
    print(gens, "F:", sg.frobenius, "type:", sg.type, "pf:", sg.pseudo_frobenius(), "gaps:", sg.gaps())
    print("  oracle H(A):", oracle_hilbert_ring(sg, 7), "H(omega):", oracle_hilbert_omega(sg, 7))
    rp = ring_presentation(sg, P)
    hA_sg = h_polynomial(rp.as_module(), 12)
    om = omega_presentation(sg, rp)
    hO = h_polynomial(om, 12)
    print("  h(A):", hA_sg.coeffs, "h(omega):", hO.coeffs, "mu(omega):", minimal_generators(om),
          "e01(A):", e_coefficients(hA_sg, 1), "chi1(A):", chi_coefficients(hA_sg, None, 1))

print()
print("== corpus ==")
t0 = time.time()
mfs = corpus(0, P, 6)
print("labels:", [m.label for m in mfs])
print("es:", [mf_invariants(m)["e"] for m in mfs])
print("elapsed:", round(time.time() - t0, 2))

print()
print("== invariance (suffgen) ==")
r1 = generic_invariance_sample(ring, 1, samples=3, seed=0, n_max=8)
print("hyper r=1:", r1.agreed, r1.hilbert, "retries:", r1.retries)

print()
print("== socle ==")
C0 = ring_from_strings(["x"], ["x^3"], P, "C0")
print("socle k[x]/x^3:", annihilator_socle_dim(C0.as_module()))

print()
print("== difference identity hyper r=1 ==")
d1 = difference_identity_check(ring, [x], 8)
print({k: d1[k] for k in sorted(d1)})
