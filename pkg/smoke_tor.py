import time

from agraded import ring_from_strings
from agraded.matfac import mf_from_strings, corpus
from agraded.superficial import LinearForm
from agraded.tor import l_polynomial_from_mf, tor1_from_mf, xmap_kernel_dims
from agraded.superficial import b_sequence

P = 2147483647
t0 = time.time()

# DVR: A = k[y]/(y^3), M = k = coker([y]) ... as MF: phi = [[y]], psi = [[y^2]]
mfk = mf_from_strings([["y"]], [["y^2"]], ["y"], P, "k-point")
tk = tor1_from_mf(mfk, 8)
print("Tor(k over k[y]/y^3) =", tk.values)
lk = l_polynomial_from_mf(mfk, 8)
print("l_k =", lk.l_coeffs, "dim", lk.dim_used, "identity route:", lk.l_from_identity)

# the 2x2 example: Tor lengths stabilize at a nonzero constant, l_M = 2+z
mf = mf_from_strings([["x", "y"], ["-y^2", "0"]], "adjugate", ["x", "y"], P, "ex")
tm = tor1_from_mf(mf, 10)
print("Tor(M) =", tm.values)
lm = l_polynomial_from_mf(mf, 10)
print("l_M =", lm.l_coeffs, "dim", lm.dim_used, "l(1) =", lm.l_at_1)

# free module over k[x,y]/(y^3): phi = y^3.I vanishes in A, coker is free
mff = mf_from_strings(
    [["y^3", "0"], ["0", "y^3"]], [["1", "0"], ["0", "1"]], ["x", "y"], P, "free2"
)
tf = tor1_from_mf(mff, 8)
print("Tor(free) =", tf.values)
lf = l_polynomial_from_mf(mff, 8)
print("l_free =", lf.l_coeffs)

# xmap vs b_sequence on the 2x2 example
M = mf.module()
for coeffs in [(1, 0), (1, 2), (5, 3)]:
    frm = LinearForm(coeffs)
    xk = xmap_kernel_dims(M, frm, 8)
    bs = b_sequence(M, frm, 8)
    assert xk.values == bs.values, (coeffs, xk.values, bs.values)
    print(f"xmap==b for {coeffs}:", xk.values)

# corpus sweep: Beqn holds for every member
for m in corpus(seed=3, p=P, count=8):
    ls = l_polynomial_from_mf(m, 10)
    assert ls.l_coeffs == ls.l_from_identity
print("corpus Beqn ok")

print(f"total {time.time() - t0:.2f}s")
