"""Truncated Koszul complexes on linear forms and the correction term w(y, n).

For forms y_1..y_r in a local quotient ring A the degree-n truncated complex
has chain modules C_i = (A/m^(n+1-i))^binom(r,i) with the usual alternating
differentials.  Its homology lengths define

    w(y, n) = sum_{i >= 1} (-1)^i length(H_i),

and the unconditional bookkeeping identity

    diff^r length(A/m^(n+1)) = length(A/((y) + m^(n+1))) + w(y, n)

ties the r-fold backward difference of the ring's length function to the
quotient by the forms.  A mismatch is a hard failure, never a warning.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass, field

import numpy as np

from .core import InternalCheckError, PreconditionError
from .linalg import rank_mod_p
from .presentations import (
    DEFAULT_MEMORY_CAP,
    DEFAULT_SLACK,
    RingPresentation,
    hilbert_function,
    multiplication_matrix,
)
from .superficial import LinearForm, b_sequence, quotient_ring_by_form, random_form


def _matmul_mod(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    # int64-safe modular product: 2*(p-1)^2 still fits, so reduce every 2 terms
    out = np.zeros((a.shape[0], b.shape[1]), dtype=np.int64)
    for k0 in range(0, a.shape[1], 2):
        out = (out + a[:, k0 : k0 + 2] @ b[k0 : k0 + 2, :]) % p
    return out


@dataclass
class TruncatedKoszul:
    """One complex C^(n)(y): chain dimensions, differentials, homology lengths."""

    n: int
    r: int
    chain_dims: list[int]
    differentials: list[np.ndarray | None]
    homology: list[int]

    @property
    def w(self) -> int:
        return sum((-1) ** i * self.homology[i] for i in range(1, self.r + 1))


def build_truncated_koszul(
    ring: RingPresentation,
    forms: list[LinearForm],
    n: int,
    memory_cap: int = DEFAULT_MEMORY_CAP,
) -> TruncatedKoszul:
    """Assemble C^(n)(y) explicitly and compute homology lengths by rank.

    Chain module C_i has one copy of A/m^(n+1-i) per i-subset of the forms;
    the differential removes one form at a time with alternating signs.
    Composition of consecutive differentials is asserted to vanish.
    """
    r = len(forms)
    if r < 1:
        raise PreconditionError("need at least one form")
    p = ring.p
    module = ring.as_module()
    eng = module.engine(max(n, 1), memory_cap)
    polys = [f.as_poly(ring) for f in forms]
    if any(not poly for poly in polys):
        raise PreconditionError("zero form in a Koszul tuple")

    # std monomial ids of A up to each needed degree
    def ids_upto(deg: int) -> list[int]:
        if deg < 0:
            return []
        return eng.std_upto(deg)

    subsets = [list(itertools.combinations(range(r), i)) for i in range(r + 1)]
    bases = [ids_upto(n - i) for i in range(r + 1)]
    chain_dims = [len(bases[i]) * len(subsets[i]) for i in range(r + 1)]

    mult: dict[tuple[int, int], np.ndarray] = {}

    def mult_block(j: int, i: int) -> np.ndarray:
        # multiplication by y_j from A/m^(n+1-i) into A/m^(n+2-i)
        got = mult.get((j, i))
        if got is None:
            got = multiplication_matrix(eng, polys[j], bases[i], bases[i - 1], n - i + 1)
            mult[(j, i)] = got
        return got

    differentials: list[np.ndarray | None] = [None]
    for i in range(1, r + 1):
        if chain_dims[i] == 0 or chain_dims[i - 1] == 0:
            differentials.append(None)
            continue
        rows = chain_dims[i - 1]
        cols = chain_dims[i]
        mat = np.zeros((rows, cols), dtype=np.int64)
        src_w = len(bases[i])
        dst_w = len(bases[i - 1])
        dst_pos = {s: t for t, s in enumerate(subsets[i - 1])}
        for s_idx, subset in enumerate(subsets[i]):
            for q, j in enumerate(subset):
                reduced = tuple(t for t in subset if t != j)
                t_idx = dst_pos[reduced]
                block = mult_block(j, i)
                sign = 1 if q % 2 == 0 else p - 1
                mat[
                    t_idx * dst_w : (t_idx + 1) * dst_w,
                    s_idx * src_w : (s_idx + 1) * src_w,
                ] = (sign * block) % p
        differentials.append(mat)

    for i in range(1, r):
        a = differentials[i]
        b = differentials[i + 1]
        if a is not None and b is not None and a.shape[1] == b.shape[0]:
            if _matmul_mod(a, b, p).any():
                raise InternalCheckError(f"differential composition {i}.{i + 1} is nonzero")

    ranks = [0] * (r + 2)
    for i in range(1, r + 1):
        d = differentials[i]
        ranks[i] = rank_mod_p(d, p) if d is not None and d.size else 0
    homology = []
    for i in range(r + 1):
        homology.append(chain_dims[i] - ranks[i] - ranks[i + 1])
    euler_chain = sum((-1) ** i * chain_dims[i] for i in range(r + 1))
    euler_hom = sum((-1) ** i * homology[i] for i in range(r + 1))
    if euler_chain != euler_hom:
        raise InternalCheckError("Euler characteristic mismatch in truncated complex")
    if any(h < 0 for h in homology):
        raise InternalCheckError("negative homology length")
    return TruncatedKoszul(n, r, chain_dims, differentials, homology)


@dataclass
class WSequence:
    """w(y, n) on the window, with per-degree homology detail."""

    values: list[int]
    forms: list[LinearForm]
    vanishing_from: int
    homology_by_degree: list[list[int]] = field(default_factory=list)
    warnings: list[str] = field(default_factory=list)


def koszul_w(
    ring: RingPresentation,
    forms: list[LinearForm],
    n_max: int,
    slack: int = DEFAULT_SLACK,
    memory_cap: int = DEFAULT_MEMORY_CAP,
    check_superficial: bool = True,
) -> WSequence:
    """w(y, n) for n = 0..n_max via explicit homology ranks.

    Non-superficial forms only produce a warning: every identity consumed
    downstream is unconditional.
    """
    warnings = []
    if check_superficial:
        for idx, form in enumerate(forms):
            bs = b_sequence(ring.as_module(), form, n_max, slack, memory_cap)
            if bs.verdict != "superficial":
                warnings.append(
                    f"form {idx} has verdict {bs.verdict} on the window (b = {bs.values})"
                )
    values = []
    homs = []
    for n in range(n_max + 1):
        complex_n = build_truncated_koszul(ring, forms, n, memory_cap)
        values.append(complex_n.w)
        homs.append(complex_n.homology)
    van = len(values)
    while van > 0 and values[van - 1] == 0:
        van -= 1
    return WSequence(values, list(forms), van, homs, warnings)


def difference_identity_check(
    ring: RingPresentation,
    forms: list[LinearForm],
    n_max: int,
    slack: int = DEFAULT_SLACK,
    memory_cap: int = DEFAULT_MEMORY_CAP,
) -> dict:
    """Verify diff^r length(A/m^(n+1)) = length(A/((y)+m^(n+1))) + w(y, n)
    per degree, all three quantities independently computed.  Any mismatch
    raises: the identity holds without hypotheses on the forms."""
    r = len(forms)
    module = ring.as_module()
    eng = module.engine(n_max, memory_cap)
    lam = [eng.length_upto(n) for n in range(n_max + 1)]

    def lam_at(n: int) -> int:
        if n < 0:
            return 0
        return lam[n]

    lhs = []
    for n in range(n_max + 1):
        lhs.append(sum((-1) ** j * math.comb(r, j) * lam_at(n - j) for j in range(r + 1)))

    cols = [(f.as_poly(ring),) for f in forms]
    augmented = module.with_extra_columns(cols, label=f"{ring.label}+forms")
    aug_eng = augmented.engine(n_max, memory_cap)
    middle = [aug_eng.length_upto(n) for n in range(n_max + 1)]

    ws = koszul_w(ring, forms, n_max, slack, memory_cap, check_superficial=False)

    mismatches = []
    for n in range(n_max + 1):
        if lhs[n] != middle[n] + ws.values[n]:
            mismatches.append((n, lhs[n], middle[n], ws.values[n]))
        h0 = ws.homology_by_degree[n][0]
        if h0 != middle[n]:
            raise InternalCheckError(
                f"H_0 of the degree-{n} complex is {h0}, but the quotient length is {middle[n]}"
            )
    if mismatches:
        raise InternalCheckError(
            f"difference identity failed at degrees {[m[0] for m in mismatches]}: "
            f"first case n={mismatches[0][0]}, lhs={mismatches[0][1]}, "
            f"middle={mismatches[0][2]}, w={mismatches[0][3]}"
        )
    return {
        "r": r,
        "n_max": n_max,
        "lhs": lhs,
        "quotient_lengths": middle,
        "w": ws.values,
        "w_vanishing_from": ws.vanishing_from,
    }


@dataclass
class InvarianceReport:
    """Outcome of sampling r-tuples of generic forms for Hilbert invariance."""

    agreed: bool
    hilbert: list[int] | None
    samples: int
    retries: int
    detail: list[dict] = field(default_factory=list)


def generic_invariance_sample(
    ring: RingPresentation,
    r: int,
    samples: int,
    seed: int,
    n_max: int,
    retry_cap: int = 3,
    memory_cap: int = DEFAULT_MEMORY_CAP,
) -> InvarianceReport:
    """Draw independent r-tuples of random forms, quotient the ring by each
    tuple, and compare the resulting Hilbert functions.

    Disagreement redraws the minority samples up to retry_cap rounds; if the
    disagreement persists the report is inconclusive - no winner is picked.
    """
    if samples < 2:
        raise PreconditionError("need at least 2 samples")
    if r < 1 or r > ring.nvars - 1:
        raise PreconditionError(f"r = {r} out of range for {ring.nvars} variables")

    def draw(sample_idx: int, round_idx: int) -> tuple[list[int], list[tuple[int, ...]]]:
        rng = random.Random(repr((seed, sample_idx, round_idx)))
        cur = ring
        used = []
        for _ in range(r):
            form = random_form(cur, rng)
            used.append(form.coeffs)
            cur = quotient_ring_by_form(cur, form)
        series = hilbert_function(cur.as_module(), n_max, memory_cap)
        return series.values, used

    results = []
    for s in range(samples):
        values, used = draw(s, 0)
        results.append({"sample": s, "round": 0, "hilbert": values, "forms": used})
    retries = 0
    for round_idx in range(1, retry_cap + 1):
        tallies: dict[tuple[int, ...], int] = {}
        for res in results:
            key = tuple(res["hilbert"])
            tallies[key] = tallies.get(key, 0) + 1
        if len(tallies) == 1:
            break
        majority = max(tallies.items(), key=lambda kv: kv[1])[0]
        for res in results:
            if tuple(res["hilbert"]) != majority:
                retries += 1
                values, used = draw(res["sample"], round_idx)
                res.update(round=round_idx, hilbert=values, forms=used)
    agreed = len({tuple(res["hilbert"]) for res in results}) == 1
    return InvarianceReport(
        agreed,
        results[0]["hilbert"] if agreed else None,
        samples,
        retries,
        results,
    )
