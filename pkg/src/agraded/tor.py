"""Lengths of Tor_1(M, A/m^(n+1)) and the polynomial l_M(z).

Given a short exact sequence 0 -> K -> F -> M -> 0 with F free, tensoring
with A/m^(n+1) identifies Tor_1(M, A/m^(n+1)) with the kernel of
K/m^(n+1)K -> F/m^(n+1)F.  The kernel dimension is exact at each truncation:
length(K/m^(n+1)K) minus the rank of the explicit inclusion matrix.

The generating function of these lengths is l_M(z)/(1-z)^d, and l_M satisfies

    (1 - z) l_M(z) = h_K(z) - mu(M) h_A(z) + h_M(z)

when K, M and A share the same dimension d; both routes to l_M are computed
and compared.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import InternalCheckError, Poly, PreconditionError
from .linalg import rank_mod_p
from .presentations import (
    DEFAULT_MEMORY_CAP,
    DEFAULT_SLACK,
    ModulePresentation,
    hilbert_function,
)
from .series import (
    LengthSeries,
    extract_h_polynomial,
    poly_div_one_minus_z,
    poly_mul_one_minus_z,
)


def tor1_lengths(
    module: ModulePresentation,
    syzygy: ModulePresentation,
    inclusion_cols,
    n_max: int,
    memory_cap: int = DEFAULT_MEMORY_CAP,
) -> LengthSeries:
    """lambda(Tor_1(M, A/m^(n+1))) for n = 0..n_max, exactly.

    `syzygy` presents K and `inclusion_cols[j]` is the image in F = A^gens(M)
    of K's j-th generator.  Two guards run per degree: the inclusion must
    kill K's relations, and its image must fill ker(F/m^(n+1)F -> M/m^(n+1)M)
    (rank = length(F) - length(M)); a shortfall means K is not the full
    syzygy module.
    """
    ring = module.ring
    if syzygy.ring.nvars != ring.nvars or syzygy.ring.p != ring.p:
        raise PreconditionError("module and syzygy live over different rings")
    cols = tuple(tuple(col) for col in inclusion_cols)
    if len(cols) != syzygy.gens:
        raise PreconditionError(
            f"inclusion has {len(cols)} columns, syzygy has {syzygy.gens} generators"
        )
    for col in cols:
        if len(col) != module.gens:
            raise PreconditionError("inclusion column height differs from module generator count")

    free = ring.free_module(module.gens, label=f"{module.label}.cover")
    T = n_max + 1
    f_eng = free.engine(T, memory_cap)
    k_eng = syzygy.engine(T, memory_cap)
    m_eng = module.engine(T, memory_cap)
    table = f_eng.table

    # well-definedness: each syzygy relation maps into q.F (normal form 0)
    for rel in syzygy.rel_cols:
        image: dict[int, int] = {}
        for j, coeff in enumerate(rel):
            if not coeff:
                continue
            for i, entry in enumerate(cols[j]):
                prod = coeff * entry
                for exps, c in prod.terms.items():
                    d = sum(exps)
                    if d > T:
                        continue
                    mid = table.id_of[exps] * module.gens + i
                    image[mid] = (image.get(mid, 0) + c) % ring.p
        nf = f_eng.normal_form({k: v for k, v in image.items() if v}, T)
        if nf:
            raise PreconditionError(
                "inclusion does not kill a syzygy relation inside the truncation window"
            )

    # inclusion matrix on truncated bases, columns sorted by degree
    src_ids = k_eng.std_upto(n_max)
    dst_ids = f_eng.std_upto(n_max)
    dst_index = {mid: t for t, mid in enumerate(dst_ids)}
    mat = np.zeros((len(dst_ids), len(src_ids)), dtype=np.int64)
    k_table = k_eng.table
    for s, mid in enumerate(src_ids):
        mono = mid // syzygy.gens
        j = mid % syzygy.gens
        mono_poly = Poly(ring.nvars, ring.p, {k_table.exps[mono]: 1})
        vec: dict[int, int] = {}
        for i, entry in enumerate(cols[j]):
            prod = mono_poly * entry
            for exps, c in prod.terms.items():
                d = sum(exps)
                if d > T:
                    continue
                fid = table.id_of[exps] * module.gens + i
                vec[fid] = (vec.get(fid, 0) + c) % ring.p
        nf = f_eng.normal_form({k: v for k, v in vec.items() if v}, n_max)
        for fid, c in nf.items():
            pos = dst_index.get(fid)
            if pos is not None:
                mat[pos, s] = c

    k_std = k_eng.std_by_degree()
    f_std = f_eng.std_by_degree()
    values = []
    src_count = 0
    dst_count = 0
    for n in range(n_max + 1):
        src_count += len(k_std[n])
        dst_count += len(f_std[n])
        rank = rank_mod_p(mat[:dst_count, :src_count], ring.p)
        lam_f = f_eng.length_upto(n)
        lam_m = m_eng.length_upto(n)
        if rank != lam_f - lam_m:
            raise PreconditionError(
                f"inclusion image at degree {n} has rank {rank}, expected "
                f"{lam_f - lam_m}: the supplied module is not the full syzygy"
            )
        values.append(k_eng.length_upto(n) - rank)
    return LengthSeries(values, stabilized=True, slack_used=0)


def tor1_from_mf(mf, n_max: int, memory_cap: int = DEFAULT_MEMORY_CAP) -> LengthSeries:
    """Tor lengths for M = coker(phi): the syzygy is coker(psi) and the
    inclusion sends its j-th generator to the j-th column of phi."""
    module = mf.module()
    syz = mf.syzygy_module()
    n = mf.size
    cols = tuple(tuple(mf.phi[i][j] for i in range(n)) for j in range(n))
    return tor1_lengths(module, syz, cols, n_max, memory_cap)


@dataclass(frozen=True)
class TorSeries:
    """Tor_1 lengths with the extracted polynomial l_M(z)."""

    lengths: LengthSeries
    l_coeffs: tuple[int, ...]
    dim_used: int
    l_from_identity: tuple[int, ...]

    @property
    def l_at_1(self) -> int:
        return sum(self.l_coeffs)


def l_polynomial(
    module: ModulePresentation,
    syzygy: ModulePresentation,
    inclusion_cols,
    n_max: int,
    slack: int = DEFAULT_SLACK,
    memory_cap: int = DEFAULT_MEMORY_CAP,
) -> TorSeries:
    """l_M(z) two ways: from the Tor length series, and from the h-polynomial
    identity (1-z) l_M = h_K - mu h_A + h_M.  Asserts agreement.

    Requires M, K and A to share one dimension (the maximal Cohen-Macaulay
    setting); anything else leaves the identity's normalizations mismatched.
    """
    ring = module.ring
    h_m = extract_h_polynomial(hilbert_function(module, n_max, memory_cap), slack)
    h_k = extract_h_polynomial(hilbert_function(syzygy, n_max, memory_cap), slack)
    h_a = extract_h_polynomial(hilbert_function(ring.as_module(), n_max, memory_cap), slack)
    d = h_a.dim_r
    mu0 = module.engine(1, memory_cap).hilbert(0)
    if not any(h_k.coeffs):
        # zero syzygy: M is free, every Tor length vanishes
        lengths = tor1_lengths(module, syzygy, inclusion_cols, n_max, memory_cap)
        if any(lengths.values):
            raise InternalCheckError("zero syzygy but nonzero Tor lengths")
        if list(h_m.coeffs) != [mu0 * c for c in h_a.coeffs]:
            raise InternalCheckError("zero syzygy but module h differs from the free shape")
        return TorSeries(lengths, (), d, ())
    if not (h_m.dim_r == d and h_k.dim_r == d):
        raise PreconditionError(
            f"dimension mismatch: dim A = {d}, dim M = {h_m.dim_r}, dim K = {h_k.dim_r}; "
            "the identity needs all three equal"
        )
    mu = mu0

    lengths = tor1_lengths(module, syzygy, inclusion_cols, n_max, memory_cap)
    l_series = extract_h_polynomial(lengths, slack, fixed_r=d)
    l_route_a = tuple(l_series.coeffs)

    width = max(len(h_k.coeffs), len(h_a.coeffs), len(h_m.coeffs))
    rhs = [0] * width
    for t in range(width):
        hk = h_k.coeffs[t] if t < len(h_k.coeffs) else 0
        ha = h_a.coeffs[t] if t < len(h_a.coeffs) else 0
        hm = h_m.coeffs[t] if t < len(h_m.coeffs) else 0
        rhs[t] = hk - mu * ha + hm
    l_route_b = tuple(poly_div_one_minus_z(rhs))

    if list(poly_mul_one_minus_z(list(l_route_a))) != _strip(rhs):
        raise InternalCheckError(
            f"l routes disagree: Tor route gives {list(l_route_a)}, identity right side is {_strip(rhs)}"
        )
    if _strip(list(l_route_b)) != _strip(list(l_route_a)):
        raise InternalCheckError(
            f"l routes disagree: {list(l_route_a)} vs {list(l_route_b)}"
        )
    return TorSeries(lengths, l_route_a, d, l_route_b)


def _strip(coeffs: list[int]) -> list[int]:
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return out


def l_polynomial_from_mf(
    mf, n_max: int, slack: int = DEFAULT_SLACK, memory_cap: int = DEFAULT_MEMORY_CAP
) -> TorSeries:
    module = mf.module()
    syz = mf.syzygy_module()
    n = mf.size
    cols = tuple(tuple(mf.phi[i][j] for i in range(n)) for j in range(n))
    return l_polynomial(module, syz, cols, n_max, slack, memory_cap)


def xmap_kernel_dims(
    module: ModulePresentation,
    form,
    n_max: int,
    memory_cap: int = DEFAULT_MEMORY_CAP,
) -> LengthSeries:
    """Kernel dimension of multiplication x : M/m^n M -> M/m^(n+1) M per n.

    Independent of the matrix-kernel route: the rank of the map is
    length(M/m^(n+1)M) - length(M/(xM + m^(n+1)M)), where the second term is
    read off the presentation of M with the extra relation columns x.e_j.
    So the kernel is length(M/(xM + m^(n+1)M)) - H(M, n).
    """
    ring = module.ring
    x = form.as_poly(ring)
    if not x:
        raise PreconditionError("zero form")
    zero = Poly.zero(ring.nvars, ring.p)
    cols = []
    for j in range(module.gens):
        cols.append(tuple(x if t == j else zero for t in range(module.gens)))
    augmented = module.with_extra_columns(cols, label=f"{module.label}+x")
    a_eng = augmented.engine(n_max, memory_cap)
    m_eng = module.engine(n_max, memory_cap)
    values = [0]
    for n in range(1, n_max + 1):
        values.append(a_eng.length_upto(n) - m_eng.hilbert(n))
    return LengthSeries(values, stabilized=True, slack_used=0)
