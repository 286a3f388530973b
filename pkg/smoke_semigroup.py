import time

from agraded.core import DEFAULT_PRIME
from agraded.presentations import h_polynomial, hilbert_function
from agraded.semigroup import (
    omega_presentation,
    oracle_hilbert_omega,
    oracle_hilbert_ring,
    ring_presentation,
    semigroup,
)
from agraded.series import chi_of, e_coefficients

t0 = time.time()
N = 12

# frozen expectations per semigroup:
#   gens -> (type, h_A, h_omega, e1_A, chi1_A)
FROZEN = {
    (3, 4, 5): (2, [1, 2], [2, 1], 2, None),
    (4, 5, 6): (1, [1, 2, 1], [1, 2, 1], None, None),
    (3, 5, 7): (2, [1, 2], [2, 1], None, 0),
    (5, 6, 7): (2, [1, 2, 2], [2, 2, 1], None, 2),
}

for gens, (tau, h_a, h_w, e1, chi1) in FROZEN.items():
    sg = semigroup(gens)
    print(f"--- S = <{gens}>  F = {sg.frobenius}  PF = {sg.pseudo_frobenius()}  type = {sg.type}")
    assert sg.type == tau, (gens, sg.type)

    ora = oracle_hilbert_ring(sg, N)
    ring = ring_presentation(sg, DEFAULT_PRIME, n_max=N)
    hs = hilbert_function(ring.as_module(), N)
    assert hs.values == ora, (hs.values, ora)
    hp = h_polynomial(ring.as_module(), N)
    print(f"    H(A) = {hs.values}")
    print(f"    h_A  = {hp.coeffs} (dim {hp.dim_r})  #q-gens = {len(ring.q_gens)}")
    assert list(hp.coeffs) == h_a, (hp.coeffs, h_a)
    assert hp.dim_r == 1

    omega = omega_presentation(sg, ring, n_max=N)
    orw = oracle_hilbert_omega(sg, N)
    hw = hilbert_function(omega, N)
    assert hw.values == orw, (hw.values, orw)
    hwp = h_polynomial(omega, N)
    print(f"    H(w) = {hw.values}")
    print(f"    h_w  = {hwp.coeffs}")
    assert list(hwp.coeffs) == h_w, (hwp.coeffs, h_w)
    assert hwp.multiplicity() == hp.multiplicity()

    es = e_coefficients(hp, 1)
    chi1_val = chi_of(hp, 1)
    print(f"    e0 = {es[0]}  e1 = {es[1]}  chi1 = {chi1_val}")
    if e1 is not None:
        assert es[1] == e1, (gens, es)
    if chi1 is not None:
        assert chi1_val == chi1, (gens, chi1_val)

# gorenstein check: (4,5,6) omega matches the ring
sg = semigroup((4, 5, 6))
assert sg.type == 1
assert oracle_hilbert_omega(sg, N) == oracle_hilbert_ring(sg, N)

# sanity on an extra semigroup not in the library: <2,3>, the cusp
sg = semigroup((2, 3))
assert sg.frobenius == 1 and sg.type == 1
ring = ring_presentation(sg, DEFAULT_PRIME, n_max=10)
hs = hilbert_function(ring.as_module(), 10)
assert hs.values == [1, 2, 2, 2, 2, 2, 2, 2, 2, 2, 2], hs.values

# and one needing deeper relations: <4,6,9> (gcd 1, no coprime pair among 4,6)
sg = semigroup((4, 6, 9))
ring = ring_presentation(sg, DEFAULT_PRIME, n_max=10)
hs = hilbert_function(ring.as_module(), 10)
assert hs.values == oracle_hilbert_ring(sg, 10)
omega = omega_presentation(sg, ring, n_max=10)
print(f"--- S = <(4,6,9)>  F = {sg.frobenius}  type = {sg.type}  H(A) = {hs.values}")

print(f"\nall semigroup checks passed in {time.time() - t0:.2f}s")
