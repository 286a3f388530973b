import time

from agraded import ring_from_strings
from agraded.superficial import (
    LinearForm,
    b_sequence,
    depth_G_estimate,
    e_from_rho,
    quotient_by_form,
    quotient_ring_by_form,
    rho_sequence,
)

t0 = time.time()

# A = k[x,y]/(y^3), M = coker [[x, y], [-y^2, 0]]
A = ring_from_strings(["x", "y"], ["y^3"], label="hyper")
M = A.as_module().__class__(
    ring=A,
    gens=2,
    rel_cols=(
        (A.poly("x"), A.poly("-y^2")),
        (A.poly("y"), A.poly("0")),
    ),
    label="M",
)

from agraded import hilbert_function, h_polynomial

hs = hilbert_function(M, 8)
print("H(M) =", hs.values)
h = h_polynomial(M, 8)
print("h_M =", h.coeffs, "dim", h.dim_r)

frm = LinearForm((1, 2), "test")
bs = b_sequence(M, frm, 8)
print("b(x+2y, M) =", bs.values, bs.verdict)

frm_x = LinearForm((1, 0), "x")
bs_x = b_sequence(M, frm_x, 8)
print("b(x, M)    =", bs_x.values, bs_x.verdict)

dep = depth_G_estimate(M, 8, tries=4, seed=11)
print("depth G(M) estimate =", dep.estimate, "exact:", dep.exact, "dim:", dep.dim)
if dep.witness:
    print("  witness:", dep.witness)

# ring quotient: k[x,y]/(y^3) by generic form -> k[t]/(t^3), H = 1,1,1,0
Aq = quotient_ring_by_form(A, LinearForm((3, 1), "generic"))
hq = hilbert_function(Aq.as_module(), 6)
print("H(A/(3x+y)) =", hq.values)

Mq = quotient_by_form(M, LinearForm((1, 2), "generic"))
hmq = hilbert_function(Mq, 6)
print("H(M/(x+2y)M) =", hmq.values)

# rho-sequence of A itself (dim 1): rho = 2,1,0,...; e1 = 3, e2 = 1
rho = rho_sequence(A.as_module(), LinearForm((1, 0), "x"), 6)
print("rho(A, x) =", rho.values)
print("e_from_rho =", e_from_rho(rho, 2))

# depth of A as module over itself: G(A) = graded ring, x is regular -> depth 1 = dim
depA = depth_G_estimate(A.as_module(), 8, tries=4, seed=3)
print("depth G(A) =", depA.estimate, "exact:", depA.exact, "dim:", depA.dim)

print(f"total {time.time() - t0:.2f}s")
