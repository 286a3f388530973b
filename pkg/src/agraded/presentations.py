"""Rings and modules as cokernels of polynomial matrices, with exact graded data.

A ring is k[x_1..x_nu]/q with every generator of q of order >= 2, carrying the
maximal ideal generated by the variables.  A module is the cokernel of a
relation matrix over the ring: columns are relation vectors in the free cover
F0; the ideal relations q*F0 are always implied.

The graded engine realizes the truncation F0 / (R + m^(T+1) F0) concretely.
It echelonizes the span of all (monomial * relation) products with pivots at
minimal module monomials; since the pivot count in degree n equals the
dimension of the degree-n piece of the span of initial forms of the relation
submodule, the Hilbert function

    H(M, n) = dim_k (m^n M / m^(n+1) M)

is exact for every n <= T.  No stabilization heuristics enter here; they are
needed only for quotients whose defining span is not degree-generated, such
as powers of a general ideal.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .core import (
    DEFAULT_PRIME,
    DimensionMismatch,
    Poly,
    PreconditionError,
    ResourceLimitError,
    monomial_table,
    poly_str,
)
from .linalg import SparseEchelon, rank_mod_p
from .series import HPolynomial, LengthSeries, extract_h_polynomial

DEFAULT_MEMORY_CAP = 200000
DEFAULT_SLACK = 3


@dataclass(frozen=True)
class RingPresentation:
    """k[x_1..x_nu]/q with q inside the square of the maximal ideal."""

    nvars: int
    p: int
    var_names: tuple[str, ...]
    q_gens: tuple[Poly, ...]
    label: str = "A"

    def __post_init__(self):
        if len(self.var_names) != self.nvars:
            raise DimensionMismatch("variable name count does not match nvars")
        gens = []
        for g in self.q_gens:
            if g.nvars != self.nvars or g.p != self.p:
                raise DimensionMismatch("ideal generator over a different context")
            if not g:
                continue
            if g.order() < 2:
                names = list(self.var_names)
                raise PreconditionError(
                    f"ideal generator {poly_str(g, names)} has order {g.order()} < 2; "
                    "the presentation requires generators inside the square of the maximal ideal"
                )
            gens.append(g)
        object.__setattr__(self, "q_gens", tuple(gens))

    def poly(self, src: str) -> Poly:
        from .core import parse_poly

        return parse_poly(src, list(self.var_names), self.p)

    def as_module(self, label: str | None = None) -> "ModulePresentation":
        return ModulePresentation(self, 1, (), label or self.label)

    def free_module(self, rank: int, label: str = "free") -> "ModulePresentation":
        return ModulePresentation(self, rank, (), label)


def ring_from_strings(
    var_names: list[str], gens: list[str], p: int = DEFAULT_PRIME, label: str = "A"
) -> RingPresentation:
    from .core import parse_poly

    polys = tuple(parse_poly(s, var_names, p) for s in gens)
    return RingPresentation(len(var_names), p, tuple(var_names), polys, label)


class ModulePresentation:
    """Cokernel of a relation matrix over a RingPresentation.

    rel_cols is a tuple of columns; each column is a tuple of gens polynomials.
    The presentation is minimal exactly when every column entry has order >= 1
    and the span of relations meets degree 0 trivially, in which case
    H(M, 0) = gens recovers the minimal generator count.
    """

    def __init__(self, ring: RingPresentation, gens: int, rel_cols, label: str = "M"):
        if gens < 0:
            raise PreconditionError("generator count must be >= 0")
        cols = []
        for col in rel_cols:
            col = tuple(col)
            if len(col) != gens:
                raise DimensionMismatch(
                    f"relation column of length {len(col)} over a module with {gens} generators"
                )
            for entry in col:
                if entry.nvars != ring.nvars or entry.p != ring.p:
                    raise DimensionMismatch("relation entry over a different context")
            if any(entry for entry in col):
                cols.append(col)
        self.ring = ring
        self.gens = gens
        self.rel_cols = tuple(cols)
        self.label = label
        self._engines: dict[int, GradedEngine] = {}

    def __repr__(self):
        return f"ModulePresentation({self.label}: {self.gens} gens, {len(self.rel_cols)} relations over {self.ring.label})"

    @property
    def is_minimal(self) -> bool:
        return all(entry.order() >= 1 for col in self.rel_cols for entry in col)

    def with_extra_columns(self, cols, label: str | None = None) -> "ModulePresentation":
        return ModulePresentation(
            self.ring, self.gens, self.rel_cols + tuple(tuple(c) for c in cols), label or f"{self.label}+cols"
        )

    def direct_sum(self, other: "ModulePresentation", label: str | None = None) -> "ModulePresentation":
        if other.ring is not self.ring and (
            other.ring.nvars != self.ring.nvars
            or other.ring.p != self.ring.p
            or other.ring.q_gens != self.ring.q_gens
        ):
            raise DimensionMismatch("direct sum over different rings")
        g = self.gens + other.gens
        zero = Poly.zero(self.ring.nvars, self.ring.p)
        cols = [tuple(col) + (zero,) * other.gens for col in self.rel_cols]
        cols += [(zero,) * self.gens + tuple(col) for col in other.rel_cols]
        return ModulePresentation(self.ring, g, cols, label or f"{self.label}(+){other.label}")

    def span_columns(self):
        """All relation columns including the implied ideal relations q*F0."""
        zero = Poly.zero(self.ring.nvars, self.ring.p)
        for col in self.rel_cols:
            yield col
        for g in self.ring.q_gens:
            for j in range(self.gens):
                yield tuple(g if t == j else zero for t in range(self.gens))

    def engine(self, T: int, memory_cap: int = DEFAULT_MEMORY_CAP) -> "GradedEngine":
        got = self._engines.get(T)
        if got is None:
            for T2, eng in self._engines.items():
                if T2 >= T:
                    return eng
            got = GradedEngine(self, T, memory_cap)
            self._engines[T] = got
        return got


class GradedEngine:
    """Echelonized truncation of a module presentation at degree T."""

    def __init__(self, module: ModulePresentation, T: int, memory_cap: int = DEFAULT_MEMORY_CAP):
        self.module = module
        self.T = T
        ring = module.ring
        self.p = ring.p
        self.g = max(module.gens, 1)
        self.table = monomial_table(ring.nvars, T + 1)
        ambient = module.gens * self.table.count_upto(T)
        if ambient > memory_cap:
            raise ResourceLimitError(
                f"truncation at degree {T} needs a basis of size {ambient} > cap {memory_cap}; "
                "raise the memory cap or lower n_max"
            )
        self.ech = SparseEchelon(self.p)
        self._build()
        self._std: list[list[int]] | None = None

    # module monomial id = monomial id * g + component
    def _mid(self, mono_id: int, comp: int) -> int:
        return mono_id * self.g + comp

    def _deg_mid(self, mid: int) -> int:
        return self.table.deg_of(mid // self.g)

    def _build(self) -> None:
        T = self.T
        table = self.table
        g = self.g
        insert = self.ech.insert
        if self.module.gens == 0:
            return
        for col in self.module.span_columns():
            order = min((entry.order() for entry in col if entry), default=None)
            if order is None or order > T:
                continue
            base = []
            for comp, entry in enumerate(col):
                for e, c in entry.terms.items():
                    d = sum(e)
                    if d <= T:
                        base.append((e, d, comp, c))
            if not base:
                continue
            max_m = T - int(order)
            for m_id in range(table.count_upto(max_m)):
                m_exp = table.exps[m_id]
                m_deg = sum(m_exp)
                row: dict[int, int] = {}
                for e, d, comp, c in base:
                    if m_deg + d <= T:
                        prod = tuple(a + b for a, b in zip(m_exp, e))
                        row[self._mid(table.id_of[prod], comp)] = c
                if row:
                    insert(row)
        counts = [0] * (T + 1)
        for piv in self.ech.pivot_indices():
            counts[self._deg_mid(piv)] += 1
        self.pivot_counts = counts

    # -- graded data ----------------------------------------------------

    def hilbert(self, n: int) -> int:
        if n > self.T:
            raise PreconditionError(f"degree {n} beyond truncation {self.T}")
        if self.module.gens == 0:
            return 0
        total = self.module.gens * len(self.table.ids_of_degree(n))
        return total - self.pivot_counts[n]

    def length_upto(self, n: int) -> int:
        """Length of M / m^(n+1) M."""
        return sum(self.hilbert(i) for i in range(n + 1))

    def std_by_degree(self) -> list[list[int]]:
        if self._std is None:
            pivots = set(self.ech.pivot_indices())
            out: list[list[int]] = []
            for d in range(self.T + 1):
                ids = []
                for mono in self.table.ids_of_degree(d):
                    for comp in range(self.module.gens):
                        mid = self._mid(mono, comp)
                        if mid not in pivots:
                            ids.append(mid)
                out.append(ids)
            self._std = out
        return self._std

    def std_upto(self, n: int) -> list[int]:
        std = self.std_by_degree()
        return [mid for d in range(min(n, self.T) + 1) for mid in std[d]]

    def normal_form(self, vec: dict[int, int], n: int | None = None) -> dict[int, int]:
        """Reduce a module vector to standard monomials; drop degrees > n."""
        out = self.ech.reduce(vec)
        cut = self.T if n is None else n
        return {mid: c for mid, c in out.items() if self._deg_mid(mid) <= cut}

    def vector_of_column(self, col) -> dict[int, int]:
        """Sparse module vector of a polynomial column, truncated at T."""
        row: dict[int, int] = {}
        for comp, entry in enumerate(col):
            for e, c in entry.terms.items():
                if sum(e) <= self.T:
                    key = self._mid(self.table.id_of[e], comp)
                    v = (row.get(key, 0) + c) % self.p
                    if v:
                        row[key] = v
                    else:
                        row.pop(key, None)
        return row

    def multiply_mid(self, mid: int, poly: Poly) -> dict[int, int]:
        """poly * (monomial basis vector), truncated, not yet normal-formed."""
        mono = self.table.exps[mid // self.g]
        comp = mid % self.g
        mdeg = sum(mono)
        out: dict[int, int] = {}
        for e, c in poly.terms.items():
            d = sum(e)
            if mdeg + d <= self.T:
                prod = tuple(a + b for a, b in zip(mono, e))
                key = self._mid(self.table.id_of[prod], comp)
                v = (out.get(key, 0) + c) % self.p
                if v:
                    out[key] = v
                else:
                    out.pop(key, None)
        return out


# -- public operations ------------------------------------------------------


def hilbert_function(module: ModulePresentation, n_max: int, memory_cap: int = DEFAULT_MEMORY_CAP) -> LengthSeries:
    """H(M, n) = length(m^n M / m^(n+1) M) for n = 0..n_max, exact."""
    eng = module.engine(n_max, memory_cap)
    return LengthSeries([eng.hilbert(n) for n in range(n_max + 1)])


def hilbert_samuel(module: ModulePresentation, n_max: int, memory_cap: int = DEFAULT_MEMORY_CAP) -> list[int]:
    """Lengths of M / m^(n+1) M for n = 0..n_max."""
    return hilbert_function(module, n_max, memory_cap).cumulative()


def h_polynomial(
    module: ModulePresentation,
    n_max: int,
    slack: int = DEFAULT_SLACK,
    memory_cap: int = DEFAULT_MEMORY_CAP,
) -> HPolynomial:
    return extract_h_polynomial(hilbert_function(module, n_max, memory_cap), slack)


def multiplicity(module: ModulePresentation, n_max: int, slack: int = DEFAULT_SLACK) -> int:
    return h_polynomial(module, n_max, slack).multiplicity()


def minimal_generators(module: ModulePresentation) -> int:
    """mu(M) = H(M, 0), which is dim M/mM regardless of minimality."""
    return module.engine(1).hilbert(0)


def stabilized_length(
    module: ModulePresentation,
    slack: int = DEFAULT_SLACK,
    t_start: int = 1,
    t_cap: int = 64,
    memory_cap: int = DEFAULT_MEMORY_CAP,
) -> int:
    """Length of the cokernel F0/R when it is finite, by truncation growth.

    Computes the length of F0/(R + m^(T+1) F0) for growing T until the value
    repeats `slack` times.  Diverging values signal a quotient that is not of
    finite length (for instance an ideal that is not primary for the maximal
    ideal); that raises PreconditionError naming the cap.
    """
    prev = None
    run = 0
    for T in range(t_start, t_cap + 1):
        eng = GradedEngine(module, T, memory_cap)
        val = eng.length_upto(T)
        if val == prev:
            run += 1
            if run >= slack:
                return val
        else:
            prev = val
            run = 0
    raise PreconditionError(
        f"length of {module.label} did not stabilize by truncation {t_cap}; "
        "the quotient is likely not of finite length"
    )


def ideal_power_columns(module: ModulePresentation, ideal_gens: list[Poly], power: int):
    """Columns generating I^power * M inside the free cover."""
    ring = module.ring
    zero = Poly.zero(ring.nvars, ring.p)
    if power == 0:
        # unit ideal: the whole module
        for j in range(module.gens):
            yield tuple(Poly.const(1, ring.nvars, ring.p) if t == j else zero for t in range(module.gens))
        return
    for combo in itertools.combinations_with_replacement(range(len(ideal_gens)), power):
        prod = Poly.const(1, ring.nvars, ring.p)
        for k in combo:
            prod = prod * ideal_gens[k]
        if not prod:
            continue
        for j in range(module.gens):
            yield tuple(prod if t == j else zero for t in range(module.gens))


def hilbert_function_ideal(
    module: ModulePresentation,
    ideal_gens: list[Poly],
    n_max: int,
    slack: int = DEFAULT_SLACK,
    t_cap: int = 64,
    memory_cap: int = DEFAULT_MEMORY_CAP,
) -> LengthSeries:
    """I-adic Hilbert function length(I^n M / I^(n+1) M) for n = 0..n_max.

    Requires I to be primary for the maximal ideal on the support of M, which
    is detected by stabilization of each truncated length.
    """
    if not ideal_gens:
        raise PreconditionError("the ideal needs at least one generator")
    for g in ideal_gens:
        if g.order() < 1:
            raise PreconditionError("ideal generators must be non-units")
    lengths = []
    for n in range(n_max + 2):
        quotient = module.with_extra_columns(
            list(ideal_power_columns(module, ideal_gens, n)), label=f"{module.label}/I^{n}"
        )
        if n == 0:
            lengths.append(0)
            continue
        lengths.append(stabilized_length(quotient, slack, t_start=n, t_cap=t_cap, memory_cap=memory_cap))
    values = [lengths[n + 1] - lengths[n] for n in range(n_max + 1)]
    if any(v < 0 for v in values):
        raise PreconditionError(f"I-adic lengths are not monotone: {lengths}")
    return LengthSeries(values, stabilized=True, slack_used=slack)


def annihilator_socle_dim(
    module: ModulePresentation,
    n_cap: int = 64,
    memory_cap: int = DEFAULT_MEMORY_CAP,
) -> int:
    """dim_k of the socle {v : m v = 0} of a finite-length module.

    The module is 0-dimensional exactly when H(M, n) hits zero; the first such
    degree certifies m^n M = 0 and the truncated basis is the whole module.
    """
    ring = module.ring
    eng = None
    n0 = None
    T = 4
    while T <= n_cap:
        eng = module.engine(T, memory_cap)
        for n in range(eng.T + 1):
            if eng.hilbert(n) == 0:
                n0 = n
                break
        if n0 is not None:
            break
        T = min(n_cap, T * 2) if T < n_cap else n_cap + 1
    if n0 is None:
        raise PreconditionError(
            f"module {module.label} shows no vanishing graded piece up to degree {n_cap}; "
            "socle computation needs a 0-dimensional module"
        )
    basis = eng.std_upto(n0)
    if not basis:
        return 0
    index = {mid: k for k, mid in enumerate(basis)}
    rows = []
    for i in range(ring.nvars):
        x = Poly.variable(i, ring.nvars, ring.p)
        block = np.zeros((len(basis), len(basis)), dtype=np.int64)
        for k, mid in enumerate(basis):
            img = eng.normal_form(eng.multiply_mid(mid, x), n0)
            for mid2, c in img.items():
                pos = index.get(mid2)
                if pos is not None:
                    block[pos, k] = c
        rows.append(block)
    stacked = np.vstack(rows)
    return len(basis) - rank_mod_p(stacked, ring.p)


def multiplication_matrix(
    eng: GradedEngine,
    poly: Poly,
    src_ids: list[int],
    dst_ids: list[int],
    n_cut: int,
) -> np.ndarray:
    """Dense matrix of v -> poly*v between standard-basis index sets."""
    index = {mid: k for k, mid in enumerate(dst_ids)}
    mat = np.zeros((len(dst_ids), len(src_ids)), dtype=np.int64)
    for col, mid in enumerate(src_ids):
        img = eng.normal_form(eng.multiply_mid(mid, poly), n_cut)
        for mid2, c in img.items():
            pos = index.get(mid2)
            if pos is not None:
                mat[pos, col] = c
    return mat
