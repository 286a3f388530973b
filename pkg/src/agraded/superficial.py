"""Superficial linear forms: b-sequences, one-dimensional rho-sequences,
quotients by a form, and a greedy depth estimate for the associated graded module.

The central quantity is

    b_n(x, M) = length( (m^(n+1) M :_M x) / m^n M ),

computed exactly as the kernel dimension of the multiplication map
M/m^n M -> M/m^(n+1) M.  A superficial element has b_n = 0 for large n, and
its vanishing for every n is the window test for x* being a regular element
on the associated graded module.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field

import numpy as np

from .core import Poly, PreconditionError
from .linalg import inv_mod_p, rank_mod_p
from .presentations import (
    DEFAULT_MEMORY_CAP,
    DEFAULT_SLACK,
    ModulePresentation,
    RingPresentation,
    hilbert_function,
    stabilized_length,
)
from .series import LengthSeries, SeriesWindowError, extract_h_polynomial


@dataclass(frozen=True)
class LinearForm:
    """A linear form sum(coeffs[i] * x_i), with a provenance note for reports."""

    coeffs: tuple[int, ...]
    provenance: str = "explicit"

    def as_poly(self, ring: RingPresentation) -> Poly:
        return Poly.from_terms(
            [
                (tuple(1 if t == i else 0 for t in range(ring.nvars)), c)
                for i, c in enumerate(self.coeffs)
                if c % ring.p
            ],
            ring.nvars,
            ring.p,
        )

    def describe(self, ring: RingPresentation) -> str:
        from .core import poly_str

        return poly_str(self.as_poly(ring), list(ring.var_names))


def random_form(ring: RingPresentation, rng: random.Random, provenance: str = "") -> LinearForm:
    while True:
        coeffs = tuple(rng.randrange(ring.p) for _ in range(ring.nvars))
        if any(coeffs):
            return LinearForm(coeffs, provenance or f"random({coeffs[:2]}...)")


@dataclass
class BSequence:
    """b_n(x, M) on the window 0..n_max with a windowed superficiality verdict."""

    values: list[int]
    form: LinearForm
    verdict: str = "superficial"
    c_observed: int = 0

    @property
    def all_zero(self) -> bool:
        return all(v == 0 for v in self.values)


def b_sequence(
    module: ModulePresentation,
    form: LinearForm,
    n_max: int,
    slack: int = DEFAULT_SLACK,
    memory_cap: int = DEFAULT_MEMORY_CAP,
) -> BSequence:
    """Exact b_n(x, M) for n = 0..n_max via multiplication-map kernels.

    b_n is the kernel dimension of x : M/m^n M -> M/m^(n+1) M, a finite
    exact computation at truncation n_max (the colon module appears only
    through this kernel, so no extra truncation slack is required).
    """
    ring = module.ring
    eng = module.engine(n_max, memory_cap)
    x = form.as_poly(ring)
    if not x:
        raise PreconditionError("the zero form is never superficial")
    std = eng.std_by_degree()
    src_ids = eng.std_upto(n_max - 1)
    dst_ids = eng.std_upto(n_max)
    index = {mid: k for k, mid in enumerate(dst_ids)}
    mat = np.zeros((len(dst_ids), len(src_ids)), dtype=np.int64)
    for col, mid in enumerate(src_ids):
        img = eng.normal_form(eng.multiply_mid(mid, x), n_max)
        for mid2, c in img.items():
            pos = index.get(mid2)
            if pos is not None:
                mat[pos, col] = c
    values = [0]
    src_count = 0
    dst_count = len(std[0])
    for n in range(1, n_max + 1):
        src_count += len(std[n - 1])
        dst_count += len(std[n])
        rank = rank_mod_p(mat[:dst_count, :src_count], ring.p)
        values.append(src_count - rank)
    c = n_max + 1
    while c > 0 and values[c - 1] == 0:
        c -= 1
    tail_zeros = n_max + 1 - c
    if tail_zeros >= slack or all(v == 0 for v in values):
        verdict = "superficial"
    elif tail_zeros == 0:
        verdict = "not-superficial"
    else:
        verdict = "inconclusive"
    return BSequence(values, form, verdict, c)


def quotient_ring_by_form(ring: RingPresentation, form: LinearForm, label: str | None = None) -> RingPresentation:
    """A/(x) presented over one fewer variable via an invertible coordinate change.

    The change sends the form to the last coordinate, which is then set to
    zero; generator orders can only grow, so the quotient presentation stays
    legal.  Generators that die are dropped.
    """
    subs, names = _substitution(ring, form)
    new_gens = []
    for g in ring.q_gens:
        img = g.subs_linear(subs, ring.nvars).drop_last_var()
        if img:
            new_gens.append(img)
    return RingPresentation(ring.nvars - 1, ring.p, tuple(names), tuple(new_gens), label or f"{ring.label}/x")


def quotient_by_form(module: ModulePresentation, form: LinearForm, label: str | None = None) -> ModulePresentation:
    """M/xM over the quotient ring A/(x), same generators, reduced relations."""
    ring = module.ring
    new_ring = quotient_ring_by_form(ring, form)
    subs, _ = _substitution(ring, form)
    cols = []
    for col in module.rel_cols:
        cols.append(tuple(entry.subs_linear(subs, ring.nvars).drop_last_var() for entry in col))
    return ModulePresentation(new_ring, module.gens, cols, label or f"{module.label}/x")


def _substitution(ring: RingPresentation, form: LinearForm):
    if ring.nvars < 1:
        raise PreconditionError("cannot quotient a ring with no variables")
    coeffs = [c % ring.p for c in form.coeffs]
    if len(coeffs) != ring.nvars or not any(coeffs):
        raise PreconditionError("form does not match the ring or is zero")
    t = max(i for i, c in enumerate(coeffs) if c)
    rows = []
    names = []
    for i in range(ring.nvars):
        if i == t:
            continue
        rows.append([1 if j == i else 0 for j in range(ring.nvars)])
        names.append(ring.var_names[i])
    rows.append(coeffs)
    inv = inv_mod_p(rows, ring.p)
    # x_j -> sum_i inv[j][i] * x'_i, where x'_last is the form's image
    subs = [[int(inv[j][i]) for i in range(ring.nvars)] for j in range(ring.nvars)]
    return subs, names


def rho_sequence(
    module: ModulePresentation,
    form: LinearForm,
    n_max: int,
    slack: int = DEFAULT_SLACK,
    memory_cap: int = DEFAULT_MEMORY_CAP,
) -> LengthSeries:
    """rho_n(M) = length(m^(n+1) M / x m^n M) for a 1-dimensional module.

    Computed as length(M / x m^n M) - length(M / m^(n+1) M) with the first
    term stabilized over growing truncations, then cross-checked against
    H(M, n) = e_0(M) - rho_n(M).
    """
    ring = module.ring
    hs = hilbert_function(module, n_max, memory_cap)
    h = extract_h_polynomial(hs, slack)
    if h.dim_r != 1:
        raise PreconditionError(f"rho-sequence needs a 1-dimensional module, got dimension {h.dim_r}")
    x = form.as_poly(ring)
    eng = module.engine(n_max, memory_cap)
    table = eng.table
    zero = Poly.zero(ring.nvars, ring.p)
    values = []
    for n in range(n_max + 1):
        cols = []
        for mono in table.ids_of_degree(n):
            mono_poly = Poly(ring.nvars, ring.p, {table.exps[mono]: 1})
            prod = x * mono_poly
            for j in range(module.gens):
                cols.append(tuple(prod if t == j else zero for t in range(module.gens)))
        quotient = module.with_extra_columns(cols, label=f"{module.label}/x.m^{n}")
        lam = stabilized_length(quotient, slack, t_start=n + 1, memory_cap=memory_cap)
        rho = lam - eng.length_upto(n)
        values.append(rho)
    e0 = h.multiplicity()
    for n in range(n_max + 1):
        if hs.values[n] != e0 - values[n]:
            raise PreconditionError(
                f"rho cross-check failed at n={n}: H={hs.values[n]}, e0-rho={e0 - values[n]}; "
                "the form is likely not superficial for the module (try another seed)"
            )
    return LengthSeries(values, stabilized=True, slack_used=slack)


def e_from_rho(rho: LengthSeries, i_max: int, slack: int = DEFAULT_SLACK) -> list[int]:
    """Hilbert coefficients e_1..e_i_max from a 1-dimensional rho-sequence:
    e_i = sum_{j >= i-1} C(j, i-1) rho_j, valid once rho has a zero tail."""
    vals = rho.values
    tail = 0
    while tail < len(vals) and vals[len(vals) - 1 - tail] == 0:
        tail += 1
    if tail < slack:
        raise SeriesWindowError(f"rho-sequence tail has only {tail} zeros, need {slack}")
    return [
        sum(math.comb(j, i - 1) * v for j, v in enumerate(vals) if j >= i - 1)
        for i in range(1, i_max + 1)
    ]


@dataclass
class DepthReport:
    """Result of the greedy associated-graded depth estimate."""

    estimate: int
    dim: int
    exact: bool
    levels: list[dict] = field(default_factory=list)
    witness: dict | None = None


def depth_G_estimate(
    module: ModulePresentation,
    n_max: int,
    tries: int = 5,
    seed: int = 0,
    slack: int = DEFAULT_SLACK,
    memory_cap: int = DEFAULT_MEMORY_CAP,
) -> DepthReport:
    """Greedy depth estimate for G(M): count successive generic forms whose
    b-sequence vanishes identically on the window, descending by quotients.

    The estimate is certified exact when the descent reaches a 0-dimensional
    module (depth is then squeezed by the dimension).  When every tried form
    shows a nonzero b_n the estimate stops with that witness: for a generic,
    hence superficial, form a nonzero b-value certifies that the graded
    element is not regular, so the depth equals the level count up to the
    genericity of the draw.
    """
    rng = random.Random(seed)
    hs0 = hilbert_function(module, n_max, memory_cap)
    dim0 = extract_h_polynomial(hs0, slack).dim_r
    cur = module
    s = 0
    levels: list[dict] = []
    while True:
        hs = hilbert_function(cur, n_max, memory_cap)
        h = extract_h_polynomial(hs, slack)
        if h.dim_r == 0:
            return DepthReport(s, dim0, True, levels)
        found = None
        last = None
        for _ in range(tries):
            form = random_form(cur.ring, rng, provenance=f"seed={seed}")
            bs = b_sequence(cur, form, n_max, slack, memory_cap)
            last = bs
            if bs.all_zero:
                found = (form, bs)
                break
        if found is None:
            witness = {
                "level": s,
                "form": last.form.coeffs,
                "b_values": last.values,
                "first_nonzero": next(i for i, v in enumerate(last.values) if v),
            }
            return DepthReport(s, dim0, False, levels, witness)
        form, bs = found
        levels.append({"level": s, "form": form.coeffs, "b_values": bs.values})
        cur = quotient_by_form(cur, form)
        s += 1
