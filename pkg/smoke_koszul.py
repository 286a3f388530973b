import time

from agraded import ring_from_strings
from agraded.koszul import (
    build_truncated_koszul,
    difference_identity_check,
    generic_invariance_sample,
    koszul_w,
)
from agraded.superficial import LinearForm

P = 2147483647
t0 = time.time()

A = ring_from_strings(["x", "y"], ["y^3"], P, label="hyper")

# r = 1 with the superficial form x: w = 0 everywhere
ws = koszul_w(A, [LinearForm((1, 0))], 8)
print("w(x, n) =", ws.values, "warnings:", ws.warnings)

rep = difference_identity_check(A, [LinearForm((1, 0))], 8)
print("identity r=1:", rep["lhs"], "=", rep["quotient_lengths"], "+", rep["w"])

# r = 1 with the NON-superficial form y: identity still holds, w nonzero
ws_y = koszul_w(A, [LinearForm((0, 1))], 8)
print("w(y, n) =", ws_y.values, "warnings:", ws_y.warnings)
rep_y = difference_identity_check(A, [LinearForm((0, 1))], 8)
print("identity r=1 (y):", "ok, w =", rep_y["w"])

# r = 2 on the dim-1 ring: unconditional identity
rep2 = difference_identity_check(A, [LinearForm((1, 0)), LinearForm((0, 1))], 8)
print("identity r=2:", "ok, w =", rep2["w"])

# regular ring (no relations): Koszul on variables is exact, w = 0
R = ring_from_strings(["x", "y", "z"], [], P, label="poly3")
rep3 = difference_identity_check(
    R, [LinearForm((1, 0, 0)), LinearForm((0, 1, 0))], 6
)
print("regular r=2 w:", rep3["w"])

# the 5-variable ring, r = 1 and r = 2
q5 = ["z^2", "z*u", "z*v", "u*v", "y*z - u^3", "x*z - v^3"]
A5 = ring_from_strings(["x", "y", "z", "u", "v"], q5, P, label="s5")
import agraded

hs5 = agraded.hilbert_function(A5.as_module(), 10)
print("H(A5) =", hs5.values)

rep5 = difference_identity_check(A5, [LinearForm((1, 2, 3, 4, 5))], 8)
print("s5 r=1 w:", rep5["w"], "vanishing from", rep5["w_vanishing_from"])
rep5b = difference_identity_check(
    A5, [LinearForm((1, 2, 3, 4, 5)), LinearForm((7, 1, 0, 2, 9))], 8
)
print("s5 r=2 w:", rep5b["w"], "vanishing from", rep5b["w_vanishing_from"])

# invariance sampling
inv = generic_invariance_sample(A, r=1, samples=5, seed=13, n_max=6)
print("invariance hyper:", inv.agreed, inv.hilbert, "retries", inv.retries)
inv5 = generic_invariance_sample(A5, r=2, samples=3, seed=5, n_max=6)
print("invariance s5 r=2:", inv5.agreed, inv5.hilbert, "retries", inv5.retries)

print(f"total {time.time() - t0:.2f}s")
