"""Matrix factorizations of hypersurfaces: validation, invariants, duality,
Cohen-Macaulay type, the one-variable normal form, and a seeded corpus.

A factorization is a pair of square polynomial matrices with
phi.psi = psi.phi = f.I, checked exactly.  coker(phi) is then a maximal
Cohen-Macaulay module M over A = Q/(f); coker(psi) presents its first syzygy.
The invariant i(M) is the largest i with all entries of a minimal phi in n^i,
and the order of det(phi) measures the total drop of M below a free module.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .core import (
    INFINITE_ORDER,
    InternalCheckError,
    Poly,
    PreconditionError,
    parse_poly,
    poly_str,
)
from .presentations import (
    DEFAULT_MEMORY_CAP,
    DEFAULT_SLACK,
    ModulePresentation,
    RingPresentation,
    annihilator_socle_dim,
    hilbert_function,
)
from .series import HPolynomial, SeriesWindowError, extract_h_polynomial
from .superficial import quotient_by_form, random_form

Matrix = tuple[tuple[Poly, ...], ...]


def _as_matrix(rows, nvars: int, p: int) -> Matrix:
    out = []
    width = None
    for row in rows:
        r = tuple(row)
        if width is None:
            width = len(r)
        elif len(r) != width:
            raise PreconditionError("ragged matrix")
        for entry in r:
            if entry.nvars != nvars or entry.p != p:
                raise PreconditionError("matrix entries live in different rings")
        out.append(r)
    if not out or width != len(out):
        raise PreconditionError(f"matrix must be square and nonempty, got {len(out)}x{width}")
    return tuple(out)


def mat_mul(a: Matrix, b: Matrix, nvars: int, p: int) -> Matrix:
    n = len(a)
    zero = Poly.zero(nvars, p)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = zero
            for k in range(n):
                acc = acc + a[i][k] * b[k][j]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


def mat_det(a: Matrix, nvars: int, p: int) -> Poly:
    n = len(a)
    if n == 1:
        return a[0][0]
    zero = Poly.zero(nvars, p)
    acc = zero
    for j in range(n):
        if not a[0][j]:
            continue
        minor = tuple(tuple(row[t] for t in range(n) if t != j) for row in a[1:])
        term = a[0][j] * mat_det(minor, nvars, p)
        acc = acc + (term if j % 2 == 0 else -term)
    return acc


def adjugate(a: Matrix, nvars: int, p: int) -> Matrix:
    n = len(a)
    if n == 1:
        return ((Poly.const(1, nvars, p),),)
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            minor = tuple(
                tuple(a[r][c] for c in range(n) if c != i) for r in range(n) if r != j
            )
            cof = mat_det(minor, nvars, p)
            row.append(cof if (i + j) % 2 == 0 else -cof)
        rows.append(tuple(row))
    return tuple(rows)


def transpose(a: Matrix) -> Matrix:
    n = len(a)
    return tuple(tuple(a[j][i] for j in range(n)) for i in range(n))


@dataclass(frozen=True)
class MatrixFactorization:
    """phi.psi = psi.phi = f.I over Q = k[x_1..x_nvars], exactly."""

    phi: Matrix
    psi: Matrix
    f: Poly
    e: int
    nvars: int
    p: int
    var_names: tuple[str, ...]
    label: str = "mf"
    warnings: tuple[str, ...] = ()

    @property
    def size(self) -> int:
        return len(self.phi)

    @property
    def minimal_phi(self) -> bool:
        return all(entry.order() >= 1 for row in self.phi for entry in row)

    @property
    def minimal_psi(self) -> bool:
        return all(entry.order() >= 1 for row in self.psi for entry in row)

    def ring(self) -> RingPresentation:
        return RingPresentation(self.nvars, self.p, self.var_names, (self.f,), f"{self.label}.ring")

    def module(self) -> ModulePresentation:
        n = self.size
        cols = tuple(tuple(self.phi[i][j] for i in range(n)) for j in range(n))
        return ModulePresentation(self.ring(), n, cols, f"{self.label}.coker")

    def syzygy_module(self) -> ModulePresentation:
        n = self.size
        cols = tuple(tuple(self.psi[i][j] for i in range(n)) for j in range(n))
        return ModulePresentation(self.ring(), n, cols, f"{self.label}.syz")

    def transpose_pair(self) -> "MatrixFactorization":
        return MatrixFactorization(
            transpose(self.phi),
            transpose(self.psi),
            self.f,
            self.e,
            self.nvars,
            self.p,
            self.var_names,
            f"{self.label}.t",
            self.warnings,
        )


def mf_validate(
    phi_rows,
    psi_rows,
    var_names: list[str] | tuple[str, ...],
    p: int,
    label: str = "mf",
) -> MatrixFactorization:
    """Check phi.psi = psi.phi = f.I exactly and package the factorization.

    Unit entries are legal but flagged: they mean the presentation of
    coker(phi) (or of its syzygy) is not minimal.
    """
    names = tuple(var_names)
    nvars = len(names)
    phi = _as_matrix(phi_rows, nvars, p)
    psi = _as_matrix(psi_rows, nvars, p)
    if len(phi) != len(psi):
        raise PreconditionError(f"size mismatch: phi is {len(phi)}x{len(phi)}, psi is {len(psi)}x{len(psi)}")
    n = len(phi)
    prod = mat_mul(phi, psi, nvars, p)
    f = prod[0][0]
    for i in range(n):
        for j in range(n):
            if i == j:
                if prod[i][j] != f:
                    raise PreconditionError(
                        f"phi.psi is not scalar: diagonal entry ({i},{i}) is "
                        f"{poly_str(prod[i][i], list(names))}, expected {poly_str(f, list(names))}"
                    )
            elif prod[i][j]:
                raise PreconditionError(
                    f"phi.psi is not scalar: entry ({i},{j}) = {poly_str(prod[i][j], list(names))}"
                )
    back = mat_mul(psi, phi, nvars, p)
    for i in range(n):
        for j in range(n):
            expect = f if i == j else Poly.zero(nvars, p)
            if back[i][j] != expect:
                raise PreconditionError(
                    f"psi.phi differs from phi.psi at entry ({i},{j}): "
                    f"{poly_str(back[i][j], list(names))}"
                )
    order = f.order()
    if order is INFINITE_ORDER or order < 2:
        raise PreconditionError(
            f"factorized element f = {poly_str(f, list(names))} must have order >= 2, got {order}"
        )
    warnings = []
    for name, mat in (("phi", phi), ("psi", psi)):
        for i in range(n):
            for j in range(n):
                if mat[i][j].order() == 0:
                    warnings.append(
                        f"{name} has a unit entry at ({i},{j}): presentation is not minimal"
                    )
    return MatrixFactorization(phi, psi, f, int(order), nvars, p, names, label, tuple(warnings))


def mf_from_strings(
    phi_strs,
    psi_strs,
    var_names: list[str],
    p: int,
    label: str = "mf",
) -> MatrixFactorization:
    """Build a factorization from string matrices; psi may be "adjugate"."""
    phi = [[parse_poly(s, var_names, p) for s in row] for row in phi_strs]
    nvars = len(var_names)
    if psi_strs == "adjugate":
        psi = adjugate(_as_matrix(phi, nvars, p), nvars, p)
    else:
        psi = [[parse_poly(s, var_names, p) for s in row] for row in psi_strs]
    return mf_validate(phi, psi, var_names, p, label)


def _h_with_growth(
    module: ModulePresentation,
    n_start: int,
    slack: int = DEFAULT_SLACK,
    cap: int = 64,
    memory_cap: int = DEFAULT_MEMORY_CAP,
) -> tuple[HPolynomial, list[int]]:
    n = n_start
    while True:
        series = hilbert_function(module, n, memory_cap)
        try:
            return extract_h_polynomial(series, slack), series.values
        except SeriesWindowError:
            if n >= cap:
                raise
            n = min(cap, 2 * n + 2)


def mf_invariants(mf: MatrixFactorization, memory_cap: int = DEFAULT_MEMORY_CAP) -> dict:
    """i(M), order of det(phi), mu(M) and e for M = coker(phi).

    For a minimal phi, i(M) is the minimal entry order and mu = size; the
    intrinsic route (first degree where H(M, .) falls below the free growth
    mu * dim Q_j) is asserted to agree.  For a non-minimal phi only the
    intrinsic route applies and the split-off rank size - mu is reported.
    """
    module = mf.module()
    eng = module.engine(mf.e, memory_cap)
    mu = eng.hilbert(0)
    table = eng.table
    i_intrinsic = mf.e
    for j in range(1, mf.e + 1):
        if eng.hilbert(j) < mu * len(table.ids_of_degree(j)):
            i_intrinsic = j
            break
    det = mat_det(mf.phi, mf.nvars, mf.p)
    det_order = det.order()
    if det_order is INFINITE_ORDER:
        raise InternalCheckError("det(phi) = 0 on a validated factorization")
    det_order = int(det_order)
    out = {"e": mf.e, "mu": mu, "det_order": det_order, "size": mf.size}
    if mf.minimal_phi:
        i_entries = int(min(entry.order() for row in mf.phi for entry in row))
        if i_entries != i_intrinsic:
            raise InternalCheckError(
                f"i(M) mismatch: entry order {i_entries} vs Hilbert drop {i_intrinsic}"
            )
        if mu != mf.size:
            raise InternalCheckError(f"minimal phi but mu = {mu} != size {mf.size}")
        if det_order < i_entries * mu:
            raise InternalCheckError(
                f"det order {det_order} < i(M)*mu = {i_entries * mu}"
            )
        out["i_M"] = i_entries
    else:
        out["i_M"] = i_intrinsic
        out["split_off_rank"] = mf.size - mu
    return out


def det_order_pairing(mf: MatrixFactorization) -> tuple[int, int]:
    """Orders of det(phi) and det(psi); their sum is size*e exactly
    because det(phi) det(psi) = f^size up to the base field."""
    dphi = mat_det(mf.phi, mf.nvars, mf.p).order()
    dpsi = mat_det(mf.psi, mf.nvars, mf.p).order()
    if dphi is INFINITE_ORDER or dpsi is INFINITE_ORDER:
        raise InternalCheckError("singular matrix inside a validated factorization")
    if int(dphi) + int(dpsi) != mf.size * mf.e:
        raise InternalCheckError(
            f"det order pairing broken: {dphi} + {dpsi} != {mf.size}*{mf.e}"
        )
    return int(dphi), int(dpsi)


def mf_dual(mf: MatrixFactorization) -> MatrixFactorization:
    """The transposed factorization; coker(phi^t) realizes the dual module
    Hom_A(M, A) for maximal Cohen-Macaulay M over the hypersurface."""
    return mf.transpose_pair()


def s_module(mf: MatrixFactorization) -> ModulePresentation:
    """S(M) = (Syz^1(M*))*: dualize, take the syzygy pair, dualize back.

    Chasing transposes: M* = coker(phi^t), its syzygy pair swaps to
    (psi^t, phi^t), and the final dual transposes back, landing on coker(psi).
    """
    out = mf.syzygy_module()
    return ModulePresentation(out.ring, out.gens, out.rel_cols, f"{mf.label}.S")


def cm_type(
    mf: MatrixFactorization,
    seed: int = 0,
    tries: int = 8,
    slack: int = DEFAULT_SLACK,
    memory_cap: int = DEFAULT_MEMORY_CAP,
) -> int:
    """Cohen-Macaulay type of M = coker(phi): cut down by generic forms that
    keep the multiplicity and drop the dimension, then count the socle.

    Each accepted form is superficial and regular on the module (certified by
    dim and multiplicity bookkeeping), so the type is preserved at each step.
    """
    rng = random.Random(seed)
    cur = mf.module()
    h, _ = _h_with_growth(cur, mf.e + slack + 2, slack, memory_cap=memory_cap)
    dim = h.dim_r
    e0 = h.multiplicity()
    while dim > 0:
        accepted = None
        for _ in range(tries):
            form = random_form(cur.ring, rng, provenance=f"cm_type(seed={seed})")
            cand = quotient_by_form(cur, form)
            try:
                hq, _ = _h_with_growth(cand, mf.e + slack + 2, slack, memory_cap=memory_cap)
            except SeriesWindowError:
                continue
            if hq.dim_r == dim - 1 and hq.multiplicity() == e0:
                accepted = cand
                break
        if accepted is None:
            raise PreconditionError(
                f"no usable generic form found in {tries} tries at dimension {dim}; "
                "retry with a different seed"
            )
        cur = accepted
        dim -= 1
    return annihilator_socle_dim(cur, memory_cap=memory_cap)


@dataclass(frozen=True)
class DVRDecomposition:
    """M = coker(phi) over a one-variable ring decomposed as a sum of
    cyclic pieces Q/(y^a_i), with 1 <= a_1 <= ... <= a_mu <= e."""

    exponents: tuple[int, ...]
    e: int

    @property
    def mu(self) -> int:
        return len(self.exponents)

    @property
    def free(self) -> bool:
        return all(a == self.e for a in self.exponents)

    @property
    def i_M(self) -> int:
        return self.exponents[0]

    def h_coeffs(self) -> list[int]:
        # h_j = number of summands surviving past degree j
        top = max(self.exponents)
        return [sum(1 for a in self.exponents if a > j) for j in range(top)]

    def syzygy_exponents(self) -> tuple[int, ...]:
        return tuple(sorted(self.e - a for a in self.exponents if a < self.e))


def _poly_trunc_mod(a: Poly, cut: int) -> dict[int, int]:
    # one-variable poly -> {degree: coeff} truncated below cut
    out = {}
    for exps, c in a.terms.items():
        d = exps[0]
        if d < cut:
            out[d] = (out.get(d, 0) + c) % a.p
    return {d: c for d, c in out.items() if c}


def _series_mul(a: dict[int, int], b: dict[int, int], cut: int, p: int) -> dict[int, int]:
    out: dict[int, int] = {}
    for d1, c1 in a.items():
        for d2, c2 in b.items():
            d = d1 + d2
            if d < cut:
                out[d] = (out.get(d, 0) + c1 * c2) % p
    return {d: c for d, c in out.items() if c}


def _series_inv(a: dict[int, int], cut: int, p: int) -> dict[int, int]:
    # invert a unit power series mod y^cut by the standard recursion
    c0 = a.get(0, 0)
    if not c0:
        raise PreconditionError("not a unit series")
    inv0 = pow(c0, p - 2, p)
    out = {0: inv0}
    for d in range(1, cut):
        s = 0
        for k, c in a.items():
            if 0 < k <= d:
                s += c * out.get(d - k, 0)
        val = (-inv0 * s) % p
        if val:
            out[d] = val
    return out


def dvr_normal_form(mf: MatrixFactorization) -> DVRDecomposition:
    """Diagonalize phi over the truncated one-variable ring k[y]/(y^e).

    Order-pivot elimination: pick the entry of least order d, normalize, clear
    its row and column (all divisions are by units once the pivot order is
    factored out), and recurse.  Entries that vanish mod y^e become exponent e.
    """
    if mf.nvars != 1:
        raise PreconditionError(f"normal form needs a one-variable ring, got {mf.nvars} variables")
    e = mf.e
    p = mf.p
    n = mf.size
    work = [[_poly_trunc_mod(mf.phi[i][j], e) for j in range(n)] for i in range(n)]
    exponents = []
    rows = list(range(n))
    cols = list(range(n))
    while rows:
        best = None
        for i in rows:
            for j in cols:
                if work[i][j]:
                    d = min(work[i][j])
                    if best is None or d < best[0]:
                        best = (d, i, j)
        if best is None:
            exponents.extend(e for _ in rows)
            break
        d, pi, pj = best
        pivot = work[pi][pj]
        # pivot = y^d * u with u a unit mod y^(e-d)
        unit = {k - d: c for k, c in pivot.items()}
        unit_inv = _series_inv(unit, e - d, p)
        for i in rows:
            if i == pi or not work[i][pj]:
                continue
            entry = work[i][pj]
            quot = _series_mul({k - d: c for k, c in entry.items()}, unit_inv, e - d, p)
            for j in cols:
                if not work[pi][j]:
                    continue
                delta = _series_mul(quot, work[pi][j], e, p)
                merged = dict(work[i][j])
                for k, c in delta.items():
                    v = (merged.get(k, 0) - c) % p
                    if v:
                        merged[k] = v
                    else:
                        merged.pop(k, None)
                work[i][j] = merged
        for j in cols:
            if j == pj or not work[pi][j]:
                continue
            entry = work[pi][j]
            quot = _series_mul({k - d: c for k, c in entry.items()}, unit_inv, e - d, p)
            for i in rows:
                if not work[i][pj]:
                    continue
                delta = _series_mul(work[i][pj], quot, e, p)
                merged = dict(work[i][j])
                for k, c in delta.items():
                    v = (merged.get(k, 0) - c) % p
                    if v:
                        merged[k] = v
                    else:
                        merged.pop(k, None)
                work[i][j] = merged
        for i in rows:
            if i != pi and work[i][pj]:
                raise InternalCheckError("column not cleared in normal form")
        for j in cols:
            if j != pj and work[pi][j]:
                raise InternalCheckError("row not cleared in normal form")
        exponents.append(d)
        rows.remove(pi)
        cols.remove(pj)
    dec = DVRDecomposition(tuple(sorted(exponents)), e)
    hc = dec.h_coeffs()
    if any(hc[t] < hc[t + 1] for t in range(len(hc) - 1)):
        raise InternalCheckError("normal-form h-coefficients are not non-increasing")
    if dec.free != (dec.i_M == e):
        raise InternalCheckError("freeness and i(M) = e disagree in normal form")
    return dec


def leading_form_det_test(mf: MatrixFactorization, memory_cap: int = DEFAULT_MEMORY_CAP) -> dict:
    """Is det of the degree-i(M) leading forms of phi nonzero?

    Equivalent to det_order = i(M)*size, since the lowest-degree part of
    det(phi) is exactly det of the leading forms; both routes are computed
    and asserted to agree.  A true verdict pins the h-polynomial of M to
    mu * (1 + z + ... + z^(i-1)); the caller can verify that shape.
    """
    if not mf.minimal_phi:
        raise PreconditionError("leading-form test needs a minimal phi")
    inv = mf_invariants(mf, memory_cap)
    i = inv["i_M"]
    n = mf.size
    lead = tuple(
        tuple(mf.phi[r][c].homogeneous_part(i) for c in range(n)) for r in range(n)
    )
    det_lead = mat_det(lead, mf.nvars, mf.p)
    nonzero = bool(det_lead)
    if nonzero != (inv["det_order"] == i * inv["mu"]):
        raise InternalCheckError(
            f"leading-form det and det order disagree: det_lead nonzero={nonzero}, "
            f"det_order={inv['det_order']}, i*mu={i * inv['mu']}"
        )
    return {
        "nonzero": nonzero,
        "i_M": i,
        "mu": inv["mu"],
        "det_order": inv["det_order"],
        "h_if_nonzero": [inv["mu"]] * i,
    }


def mf_reduce(mf: MatrixFactorization, form, label: str | None = None) -> MatrixFactorization:
    """Quotient the whole factorization by a linear form, keeping every entry
    order and the det order; raises when the form is not generic enough."""
    if mf.nvars < 2:
        raise PreconditionError("cannot reduce a one-variable factorization")
    from .superficial import _substitution

    ring = RingPresentation(mf.nvars, mf.p, mf.var_names, (mf.f,), f"{mf.label}.ring")
    subs, names = _substitution(ring, form)

    def push(mat):
        return tuple(
            tuple(entry.subs_linear(subs, mf.nvars).drop_last_var() for entry in row)
            for row in mat
        )

    phi2 = push(mf.phi)
    psi2 = push(mf.psi)
    for src, dst in ((mf.phi, phi2), (mf.psi, psi2)):
        for i in range(mf.size):
            for j in range(mf.size):
                if src[i][j].order() != dst[i][j].order():
                    raise PreconditionError(
                        f"entry ({i},{j}) changed order under the form; pick another form"
                    )
    d_old = mat_det(mf.phi, mf.nvars, mf.p).order()
    d_new = mat_det(phi2, mf.nvars - 1, mf.p).order()
    if d_old != d_new:
        raise PreconditionError("det order changed under the form; pick another form")
    return mf_validate(phi2, psi2, names, mf.p, label or f"{mf.label}.red")


@dataclass(frozen=True)
class CorpusSpec:
    """Reproducible recipe for one random adjugate factorization."""

    seed: int
    size: int
    nvars: int
    profile: str  # homog1 | homog2 | mixed


def _random_entry(rng: random.Random, nvars: int, p: int, order: int) -> Poly:
    from .core import monomial_table

    table = monomial_table(nvars, order)
    ids = table.ids_of_degree(order)
    while True:
        terms = [(table.exps[m], rng.randrange(p)) for m in ids]
        poly = Poly.from_terms([(e, c) for e, c in terms if c], nvars, p)
        if poly:
            return poly


def corpus_member(spec: CorpusSpec, p: int) -> MatrixFactorization:
    """One seeded random factorization (phi, adj(phi)), f = det(phi).

    Entry orders by profile: homog1 all linear, homog2 all quadratic, mixed
    random in {1, 2}.  Draws are retried until det(phi) is nonzero.
    """
    rng = random.Random((spec.seed, spec.size, spec.nvars, spec.profile).__repr__())
    names = ["x", "y", "z", "w"][: spec.nvars]
    for _ in range(50):
        rows = []
        for _i in range(spec.size):
            row = []
            for _j in range(spec.size):
                if spec.profile == "homog1":
                    order = 1
                elif spec.profile == "homog2":
                    order = 2
                elif spec.profile == "mixed":
                    order = rng.choice((1, 2))
                else:
                    raise PreconditionError(f"unknown profile {spec.profile!r}")
                row.append(_random_entry(rng, spec.nvars, p, order))
            rows.append(tuple(row))
        phi = tuple(rows)
        det = mat_det(phi, spec.nvars, p)
        if not det:
            continue
        psi = adjugate(phi, spec.nvars, p)
        if all(not entry for row in psi for entry in row):
            continue
        label = f"corpus-s{spec.seed}-n{spec.size}-v{spec.nvars}-{spec.profile}"
        return mf_validate(phi, psi, names, p, label)
    raise PreconditionError(f"could not draw a nonsingular matrix for {spec}")


def corpus(seed: int, p: int, count: int = 24) -> list[MatrixFactorization]:
    """A deterministic corpus of `count` adjugate factorizations covering
    sizes {2,3}, variable counts {2,3} and all three entry-order profiles."""
    shapes = [
        (size, nvars, profile)
        for size in (2, 3)
        for nvars in (2, 3)
        for profile in ("homog1", "homog2", "mixed")
    ]
    out = []
    k = 0
    while len(out) < count:
        size, nvars, profile = shapes[k % len(shapes)]
        member_seed = seed + 1000 * (k // len(shapes))
        out.append(corpus_member(CorpusSpec(member_seed, size, nvars, profile), p))
        k += 1
    return out
