"""Numerical semigroup rings and their canonical modules, with an
independent length oracle.

Everything here reduces to set arithmetic on integer exponents: the ring
k[[t^a : a in gens]] has m^n spanned by the monomials t^s with s in the
n-fold sumset of the generators plus the semigroup, so every graded length
is a count of exponent differences.  The same applies to the canonical
module, realized as the span of t^z over the dual set {z : F - z not in S}.

These counts never touch the polynomial engine, which makes them a genuinely
independent oracle for the presentations built below: a presentation ships
only after its engine lengths match the oracle on the requested window.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .core import InternalCheckError, Poly, PreconditionError, monomial_table
from .presentations import (
    DEFAULT_MEMORY_CAP,
    ModulePresentation,
    RingPresentation,
    hilbert_function,
)


@dataclass(frozen=True)
class NumericalSemigroup:
    """S = <gens> with gcd 1; carries Frobenius data and membership."""

    gens: tuple[int, ...]
    frobenius: int
    members: tuple[bool, ...]  # membership for 0..bound

    @property
    def bound(self) -> int:
        return len(self.members) - 1

    def contains(self, s: int) -> bool:
        if s < 0:
            return False
        if s > self.bound:
            return True
        return self.members[s]

    def pseudo_frobenius(self) -> tuple[int, ...]:
        out = []
        for f in range(self.frobenius + 1):
            if self.members[f]:
                continue
            if all(self.contains(f + g) for g in self.gens):
                out.append(f)
        return tuple(out)

    @property
    def type(self) -> int:
        return len(self.pseudo_frobenius())

    def gaps(self) -> tuple[int, ...]:
        return tuple(s for s in range(self.frobenius + 1) if not self.members[s])

    def dual_contains(self, z: int) -> bool:
        # membership in {z : F - z not in S}, the canonical exponent set
        return not self.contains(self.frobenius - z)


def semigroup(gens) -> NumericalSemigroup:
    gens = tuple(sorted(set(int(g) for g in gens)))
    if not gens or gens[0] < 1:
        raise PreconditionError("semigroup generators must be positive integers")
    if math.gcd(*gens) != 1:
        raise PreconditionError(f"generators {gens} do not have gcd 1")
    a1 = gens[0]
    bound = gens[-1] * 2 + a1
    while True:
        members = [False] * (bound + 1)
        members[0] = True
        for s in range(1, bound + 1):
            members[s] = any(s >= g and members[s - g] for g in gens)
        # a run of a1 consecutive members certifies everything beyond it
        run = 0
        cutoff = None
        for s in range(bound + 1):
            run = run + 1 if members[s] else 0
            if run >= a1:
                cutoff = s
                break
        if cutoff is not None:
            frob = max((s for s in range(cutoff + 1) if not members[s]), default=-1)
            return NumericalSemigroup(gens, frob, tuple(members))
        bound *= 2


def minimal_generators_of(sg: NumericalSemigroup) -> tuple[int, ...]:
    """Drop generators representable as sums of the others."""
    out = []
    for g in sg.gens:
        rest = [h for h in sg.gens if h != g]
        if not rest:
            out.append(g)
            continue
        reach = [False] * (g + 1)
        reach[0] = True
        for s in range(1, g + 1):
            reach[s] = any(s >= h and reach[s - h] for h in rest)
        if not reach[g]:
            out.append(g)
    return tuple(out)


def _sumset_tables(base_contains, gens: tuple[int, ...], n_max: int, bound: int):
    """tables[n][s] = does s lie in (n-fold sums of gens) + base, for s <= bound."""
    cur = [base_contains(s) for s in range(bound + 1)]
    tables = [cur]
    for _ in range(n_max + 1):
        prev = tables[-1]
        nxt = [any(s >= g and prev[s - g] for g in gens) for s in range(bound + 1)]
        tables.append(nxt)
    return tables


def oracle_hilbert_ring(sg: NumericalSemigroup, n_max: int) -> list[int]:
    """H(A, n) = #(E_n minus E_{n+1}) with E_n = n-sums of generators + S."""
    bound = sg.frobenius + (n_max + 2) * sg.gens[-1] + 1
    tables = _sumset_tables(sg.contains, sg.gens, n_max, bound)
    return [
        sum(1 for s in range(bound + 1) if tables[n][s] and not tables[n + 1][s])
        for n in range(n_max + 1)
    ]


def oracle_hilbert_omega(sg: NumericalSemigroup, n_max: int) -> list[int]:
    """Same count over the canonical exponent set {z >= 0 : F - z not in S}."""
    bound = sg.frobenius + (n_max + 2) * sg.gens[-1] + 1
    tables = _sumset_tables(sg.dual_contains, sg.gens, n_max, bound)
    return [
        sum(1 for s in range(bound + 1) if tables[n][s] and not tables[n + 1][s])
        for n in range(n_max + 1)
    ]


_VAR_POOL = ("x", "y", "z", "u", "v", "w")


def _weight_classes(weights: tuple[int, ...], nvars: int, max_deg: int):
    """Monomial exponent tuples grouped by total weight, degree <= max_deg."""
    table = monomial_table(nvars, max_deg)
    classes: dict[int, list[tuple[int, ...]]] = {}
    for deg in range(max_deg + 1):
        for mid in table.ids_of_degree(deg):
            exps = table.exps[mid]
            w = sum(e * a for e, a in zip(exps, weights))
            classes.setdefault(w, []).append(exps)
    return classes


def ring_presentation(
    sg: NumericalSemigroup,
    p: int,
    n_max: int = 12,
    label: str | None = None,
    memory_cap: int = DEFAULT_MEMORY_CAP,
) -> RingPresentation:
    """Presentation of k[[t^a : a in gens]] as a quotient of a polynomial ring.

    The defining ideal is spanned by weight-matched binomial differences;
    candidates are collected up to a degree cap that grows until the engine's
    Hilbert function matches the semigroup oracle on the window 0..n_max.
    A cap that works is guaranteed to exist because the kernel of the weight
    map is finitely generated by such binomials.
    """
    mingens = minimal_generators_of(sg)
    if mingens != sg.gens:
        raise PreconditionError(
            f"generators {sg.gens} are not minimal; use {mingens} instead"
        )
    k = len(sg.gens)
    if k > len(_VAR_POOL):
        raise PreconditionError(f"at most {len(_VAR_POOL)} generators supported")
    names = _VAR_POOL[:k]
    expect = oracle_hilbert_ring(sg, n_max)
    got = None
    for cap in (6, 9, 12, 15):
        gens_list = []
        for _w, monos in sorted(_weight_classes(sg.gens, k, cap).items()):
            first = monos[0]
            for other in monos[1:]:
                gens_list.append(Poly.from_terms([(first, 1), (other, -1)], k, p))
        ring = RingPresentation(
            k, p, names, tuple(gens_list), label or "sg-" + ",".join(map(str, sg.gens))
        )
        got = hilbert_function(ring.as_module(), n_max, memory_cap).values
        if got == expect:
            return ring
        if any(g < e for g, e in zip(got, expect)):
            raise InternalCheckError(
                f"binomial relations overshoot the oracle for {sg.gens}: "
                f"engine {got}, oracle {expect}"
            )
    raise PreconditionError(
        f"no binomial presentation of {sg.gens} matched the oracle up to "
        f"generator degree 15 on the window 0..{n_max}: engine {got}, oracle {expect}"
    )


def omega_presentation(
    sg: NumericalSemigroup,
    ring: RingPresentation,
    n_max: int = 12,
    label: str | None = None,
    memory_cap: int = DEFAULT_MEMORY_CAP,
) -> ModulePresentation:
    """The canonical module as a cokernel over the semigroup ring.

    Generators are t^(F - f) over the pseudo-Frobenius numbers f; relations
    are all weight-matched binomial differences between the generators, with
    monomial degrees bounded so that every syzygy initial form on the window
    0..n_max is covered.  The result ships only if its engine lengths equal
    the independent oracle on that window.
    """
    pf = sg.pseudo_frobenius()
    if not pf:
        raise PreconditionError(
            "the semigroup has no gaps, so the canonical module is the ring itself"
        )
    weights = tuple(sorted(sg.frobenius - f for f in pf))
    tau = len(weights)
    k = len(sg.gens)
    T = n_max + 1
    spread = weights[-1] - weights[0]
    big = (T * sg.gens[-1] + spread) // sg.gens[0] + 2
    table = monomial_table(k, big)
    classes: dict[int, list[tuple[tuple[int, ...], int]]] = {}
    for deg in range(big + 1):
        for mid in table.ids_of_degree(deg):
            exps = table.exps[mid]
            base = sum(e * a for e, a in zip(exps, sg.gens))
            for j, wj in enumerate(weights):
                classes.setdefault(base + wj, []).append((exps, j))
    zero = Poly.zero(k, ring.p)
    cols = []
    for _w, items in sorted(classes.items()):
        first_exps, first_j = items[0]
        for exps, j in items[1:]:
            col = [zero] * tau
            col[first_j] = col[first_j] + Poly.from_terms([(first_exps, 1)], k, ring.p)
            col[j] = col[j] - Poly.from_terms([(exps, 1)], k, ring.p)
            if any(col):
                cols.append(tuple(col))
    omega = ModulePresentation(
        ring, tau, tuple(cols), label or "omega-" + ",".join(map(str, sg.gens))
    )
    expect = oracle_hilbert_omega(sg, n_max)
    got = hilbert_function(omega, n_max, memory_cap).values
    if got != expect:
        raise PreconditionError(
            f"canonical module presentation disagrees with the oracle for {sg.gens}: "
            f"engine {got}, oracle {expect}"
        )
    return omega
