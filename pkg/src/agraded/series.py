"""Hilbert series bookkeeping: h-polynomials, Hilbert coefficients, chi invariants.

Everything here is exact integer arithmetic on coefficient lists.  A graded
length function H(n) is summarized by the unique writing

    sum_n H(n) z^n  =  h(z) / (1 - z)^r

with h a polynomial and r minimal; r recovers the dimension and h carries the
Hilbert coefficients e_i and the derived invariants chi_i.  Extraction from a
finite window uses repeated differencing and demands a run of trailing zeros
(the slack) before trusting the answer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field


@dataclass
class LengthSeries:
    """Values of an integer length function on a degree window [0, n_max]."""

    values: list[int]
    stabilized: bool = True
    slack_used: int = 0

    @property
    def n_max(self) -> int:
        return len(self.values) - 1

    def cumulative(self) -> list[int]:
        out = []
        t = 0
        for v in self.values:
            t += v
            out.append(t)
        return out


@dataclass
class HPolynomial:
    """Numerator h(z) of a Hilbert series together with the pole order r."""

    coeffs: list[int]
    dim_r: int
    postulation: int = 0

    def __post_init__(self):
        while len(self.coeffs) > 1 and self.coeffs[-1] == 0:
            self.coeffs.pop()

    def __call__(self, z: int) -> int:
        return sum(c * z**k for k, c in enumerate(self.coeffs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def multiplicity(self) -> int:
        return self(1)


class SeriesWindowError(Exception):
    """The observed window is too short to certify a series extraction."""


def difference_transform(values: list[int], r: int) -> list[int]:
    """Coefficients of (1-z)^r * sum values[n] z^n, same window length."""
    out = list(values)
    for _ in range(r):
        nxt = [out[0]]
        for k in range(1, len(out)):
            nxt.append(out[k] - out[k - 1])
        out = nxt
    return out


def expand_h(coeffs: list[int], r: int, n_max: int) -> list[int]:
    """Series coefficients of (sum coeffs[k] z^k) / (1-z)^r up to degree n_max."""
    out = [0] * (n_max + 1)
    for k, c in enumerate(coeffs):
        if k > n_max or c == 0:
            continue
        if r == 0:
            out[k] += c
        else:
            for n in range(k, n_max + 1):
                out[n] += c * math.comb(n - k + r - 1, r - 1)
    return out


def _gen_binom(top: int, r: int) -> int:
    """binom(top, r) extended to all integer tops (polynomial in top)."""
    num = 1
    for i in range(r):
        num *= top - i
    return num // math.factorial(r) if r else 1


def extract_h_polynomial(series: LengthSeries, slack: int = 3, fixed_r: int | None = None) -> HPolynomial:
    """Minimal r and integer h with (1-z)^r * sum H(n) z^n polynomial on the window.

    Requires at least `slack` trailing zero coefficients after the transform;
    otherwise raises SeriesWindowError asking for a longer window.  With
    fixed_r the pole order is imposed instead of searched.
    """
    values = series.values
    n_max = len(values) - 1
    if all(v == 0 for v in values):
        return HPolynomial([0], dim_r=0, postulation=0)
    if any(v < 0 for v in values):
        raise SeriesWindowError(f"length function has a negative value: {values}")
    r_candidates = [fixed_r] if fixed_r is not None else list(range(0, n_max + 2))
    for r in r_candidates:
        coeffs = difference_transform(values, r)
        top = -1
        for k, c in enumerate(coeffs):
            if c != 0:
                top = k
        if n_max - top >= slack:
            h = coeffs[: top + 1] if top >= 0 else [0]
            post = _postulation(values, h, r)
            return HPolynomial(h, dim_r=r, postulation=post)
    raise SeriesWindowError(
        f"no pole order up to {r_candidates[-1]} leaves {slack} trailing zeros "
        f"on the window 0..{n_max}; increase the truncation degree"
    )


def _postulation(values: list[int], h: list[int], r: int) -> int:
    """Least n0 with cumulative(H)(n) equal to its polynomial for n >= n0."""
    cum = []
    t = 0
    for v in values:
        t += v
        cum.append(t)

    def hs_poly(n: int) -> int:
        return sum(c * _gen_binom(n - k + r, r) for k, c in enumerate(h))

    n0 = len(values) - 1
    while n0 > 0 and cum[n0 - 1] == hs_poly(n0 - 1):
        n0 -= 1
    return n0


def e_coefficients(h: HPolynomial, i_max: int) -> list[int]:
    """Hilbert coefficients e_0..e_i_max of h, via e_i = sum_k C(k,i) h_k."""
    return [sum(math.comb(k, i) * c for k, c in enumerate(h.coeffs) if k >= i) for i in range(i_max + 1)]


def chi_coefficients(h: HPolynomial, mu: int | None, i_max: int) -> list[int]:
    """chi_1..chi_i_max computed by two closed forms and cross-asserted.

    Closed form: chi_i = sum_{k >= i+1} C(k-1, i) h_k.  Alternating form:
    chi_i = sum_{j<=i} (-1)^j e_{i-j} + (-1)^(i+1) h(0), so chi_1 is
    e_1 - e_0 + h(0).  When mu is given it must equal h(0) (a minimally
    presented module has H(M, 0) = mu).
    """
    h0 = h.coeffs[0] if h.coeffs else 0
    if mu is not None and mu != h0:
        raise ValueError(f"h(0) = {h0} does not match the given minimal generator count {mu}")
    es = e_coefficients(h, i_max)
    out = []
    for i in range(1, i_max + 1):
        direct = sum(math.comb(k - 1, i) * c for k, c in enumerate(h.coeffs) if k >= i + 1)
        alternating = sum((-1) ** j * es[i - j] for j in range(i + 1)) + (-1) ** (i + 1) * h0
        if direct != alternating:
            raise AssertionError(
                f"chi_{i} closed forms disagree: {direct} vs {alternating} on h = {h.coeffs}"
            )
        out.append(direct)
    return out


def chi_of(h: HPolynomial, i: int) -> int:
    if i == 0:
        return sum(h.coeffs[1:])
    return chi_coefficients(h, None, i)[i - 1]


def poly_mul_one_minus_z(coeffs: list[int]) -> list[int]:
    out = list(coeffs) + [0]
    for k in range(len(out) - 1, 0, -1):
        out[k] -= out[k - 1]
    return out


def poly_div_one_minus_z(coeffs: list[int]) -> list[int]:
    """Exact quotient by (1-z); raises ValueError when (1-z) does not divide."""
    if sum(coeffs) != 0:
        raise ValueError(f"polynomial with coefficient sum {sum(coeffs)} is not divisible by (1-z)")
    out = []
    acc = 0
    for c in coeffs[:-1]:
        acc += c
        out.append(acc)
    return out


@dataclass
class SeriesIdentityReport:
    """Outcome of the four-series decomposition check (1-z) g = p - q + r."""

    identity_holds: bool
    first_mismatch_degree: int | None
    e0_additive: bool
    e_shift: list[bool] = field(default_factory=list)
    chi0_shift: bool = True
    chi_shift: list[bool] = field(default_factory=list)
    nonneg_implications: bool = True
    details: dict = field(default_factory=dict)


def series_identity_check(g: list[int], p: list[int], q: list[int], r: list[int], i_max: int = 3) -> SeriesIdentityReport:
    """Verify (1-z) g(z) = p(z) - q(z) + r(z) and its coefficient consequences.

    On the identity: e_0(q) = e_0(p) + e_0(r); for i >= 1,
    e_i(q) = e_i(p) + e_i(r) + e_{i-1}(g); chi_0(q) = chi_0(p) + chi_0(r) + g(0)
    and chi_i(q) = chi_i(p) + chi_i(r) + chi_{i-1}(g); when g has nonnegative
    coefficients the mixed sums bound the e_i and chi_i of q from below.
    """
    lhs = poly_mul_one_minus_z(g)
    width = max(len(lhs), len(p), len(q), len(r))

    def at(c: list[int], k: int) -> int:
        return c[k] if k < len(c) else 0

    first_bad = None
    for k in range(width):
        if at(lhs, k) != at(p, k) - at(q, k) + at(r, k):
            first_bad = k
            break
    if first_bad is not None:
        return SeriesIdentityReport(False, first_bad, False, details={"lhs": lhs, "rhs": [p, q, r]})

    hg = HPolynomial(list(g), 0)
    hp = HPolynomial(list(p), 0)
    hq = HPolynomial(list(q), 0)
    hr = HPolynomial(list(r), 0)
    eg = e_coefficients(hg, i_max)
    ep = e_coefficients(hp, i_max)
    eq = e_coefficients(hq, i_max)
    er = e_coefficients(hr, i_max)
    cg = chi_coefficients(hg, None, i_max)
    cp = chi_coefficients(hp, None, i_max)
    cq = chi_coefficients(hq, None, i_max)
    cr = chi_coefficients(hr, None, i_max)

    e0_ok = eq[0] == ep[0] + er[0]
    e_ok = [eq[i] == ep[i] + er[i] + eg[i - 1] for i in range(1, i_max + 1)]
    g0 = g[0] if g else 0
    chi0_q = sum(hq.coeffs[1:])
    chi0_p = sum(hp.coeffs[1:])
    chi0_r = sum(hr.coeffs[1:])
    chi0_ok = chi0_q == chi0_p + chi0_r + g0
    chi_ok = []
    for i in range(1, i_max + 1):
        chi_prev_g = sum(hg.coeffs[1:]) if i == 1 else cg[i - 2]
        chi_ok.append(cq[i - 1] == cp[i - 1] + cr[i - 1] + chi_prev_g)
    nonneg = True
    if all(c >= 0 for c in g):
        nonneg = (
            all(eq[i] >= ep[i] + er[i] for i in range(i_max + 1))
            and chi0_q >= chi0_p + chi0_r
            and all(cq[i - 1] >= cp[i - 1] + cr[i - 1] for i in range(1, i_max + 1))
        )
    return SeriesIdentityReport(
        True,
        None,
        e0_ok,
        e_ok,
        chi0_ok,
        chi_ok,
        nonneg,
        details={"e": {"g": eg, "p": ep, "q": eq, "r": er}},
    )
