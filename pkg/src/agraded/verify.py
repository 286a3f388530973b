"""Named checks for the inequalities and identities this library computes.

Each check is a windowed predicate over exact invariants: it certifies its
hypotheses computationally (depth of the associated graded module via the
greedy estimate, Gorenstein via type 1, regular sequences via graded Koszul
homology) and then tests the conclusion with integer arithmetic.  Verdicts
are "holds", "fails" or "inconclusive"; a fails on certified hypotheses is
treated as an implementation bug by the test suite.  Every witness carries
the numbers that decided the verdict and the truncation window used, so no
report presents a finite computation as an all-degrees claim.
"""

from __future__ import annotations

import json
import math
import random
import zlib
from dataclasses import dataclass, field, fields

import numpy as np

from .core import (
    DEFAULT_PRIME,
    InternalCheckError,
    Poly,
    PreconditionError,
    monomial_table,
)
from .examples_lib import ExampleInstance
from .linalg import rank_mod_p
from .matfac import (
    cm_type,
    corpus,
    corpus_member,
    CorpusSpec,
    leading_form_det_test,
    mf_invariants,
    s_module,
)
from .koszul import difference_identity_check, generic_invariance_sample
from .presentations import (
    DEFAULT_MEMORY_CAP,
    DEFAULT_SLACK,
    ModulePresentation,
    RingPresentation,
    annihilator_socle_dim,
    h_polynomial,
    hilbert_function,
    hilbert_function_ideal,
    minimal_generators,
    stabilized_length,
)
from .series import HPolynomial, chi_of, e_coefficients
from .superficial import (
    LinearForm,
    b_sequence,
    depth_G_estimate,
    quotient_ring_by_form,
    random_form,
)
from .tor import l_polynomial_from_mf


@dataclass(frozen=True)
class RunConfig:
    """Effective run parameters, embedded in every report."""

    p: int = DEFAULT_PRIME
    seed: int = 0
    n_max: int = 24
    slack: int = DEFAULT_SLACK
    memory_cap: int = DEFAULT_MEMORY_CAP
    fmt: str = "table"

    def as_dict(self) -> dict:
        return {f.name: getattr(self, f.name) for f in fields(self)}


@dataclass
class TheoremCheck:
    check_id: str
    instance: str
    verdict: str  # holds | fails | inconclusive
    witness: dict


def _seed_for(config: RunConfig, *parts) -> int:
    return zlib.crc32(repr((config.seed,) + parts).encode())


def _clean(obj):
    """Make a witness JSON-serializable with deterministic structure."""
    if isinstance(obj, dict):
        return {str(k): _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    if isinstance(obj, (np.integer,)):
        return int(obj)
    if isinstance(obj, (bool, int, str)) or obj is None:
        return obj
    return str(obj)


def _first_decrease(values) -> int | None:
    for n in range(1, len(values)):
        if values[n] < values[n - 1]:
            return n
    return None


class Ctx:
    """Shared per-instance cache so one batch of checks computes each
    h-polynomial, depth estimate and type once."""

    def __init__(self, inst: ExampleInstance, config: RunConfig):
        self.inst = inst
        self.config = config
        self.n_max = config.n_max
        self._modules: dict[str, ModulePresentation] = dict(inst.modules)
        if "A" not in self._modules:
            self._modules["A"] = inst.ring.as_module()
        self._h: dict[str, HPolynomial] = {}
        self._mu: dict[str, int] = {}
        self._depth: dict[str, object] = {}
        self._type: int | None = None

    def module(self, name: str) -> ModulePresentation:
        if name not in self._modules:
            raise PreconditionError(
                f"instance {self.inst.key!r} has no module {name!r}; "
                f"available: {sorted(self._modules)}"
            )
        return self._modules[name]

    def h(self, name: str) -> HPolynomial:
        if name not in self._h:
            self._h[name] = h_polynomial(
                self.module(name), self.n_max, self.config.slack, self.config.memory_cap
            )
        return self._h[name]

    def es(self, name: str, i_max: int = 3) -> list[int]:
        return e_coefficients(self.h(name), i_max)

    def chi(self, name: str, i: int) -> int:
        return chi_of(self.h(name), i)

    def mu(self, name: str) -> int:
        if name not in self._mu:
            self._mu[name] = minimal_generators(self.module(name))
        return self._mu[name]

    def dim(self, name: str) -> int:
        return self.h(name).dim_r

    def depth(self, name: str):
        if name not in self._depth:
            self._depth[name] = depth_G_estimate(
                self.module(name),
                self.n_max,
                tries=5,
                seed=_seed_for(self.config, "depth", self.inst.key, name),
                slack=self.config.slack,
                memory_cap=self.config.memory_cap,
            )
        return self._depth[name]

    def certified_G_CM(self, name: str) -> bool:
        rep = self.depth(name)
        return rep.estimate == rep.dim

    def depth_witness(self, name: str) -> dict:
        rep = self.depth(name)
        return {
            "estimate": rep.estimate,
            "dim": rep.dim,
            "exact": rep.exact,
            "witness": rep.witness,
        }

    def mf_type(self) -> int:
        if self._type is None:
            if self.inst.mf is None:
                raise PreconditionError(f"instance {self.inst.key!r} has no matrix factorization")
            self._type = cm_type(
                self.inst.mf,
                seed=_seed_for(self.config, "type", self.inst.key),
                slack=self.config.slack,
                memory_cap=self.config.memory_cap,
            )
        return self._type

    def is_free(self, name: str) -> bool:
        # windowed freeness: H(M, n) = mu * H(A, n) on the whole window
        hm = self.h(name)
        ha = self.h("A")
        mu = self.mu(name)
        if hm.dim_r != ha.dim_r:
            return False
        width = max(len(hm.coeffs), len(ha.coeffs))
        for t in range(width):
            a = hm.coeffs[t] if t < len(hm.coeffs) else 0
            b = ha.coeffs[t] if t < len(ha.coeffs) else 0
            if a != mu * b:
                return False
        return True

    def superficial_form(self, name: str, tag: str, tries: int = 5):
        """A random form certified superficial on the window, or None."""
        module = self.module(name)
        rng = random.Random(_seed_for(self.config, "form", self.inst.key, name, tag))
        last = None
        for _ in range(tries):
            form = random_form(module.ring, rng, provenance=f"check:{tag}")
            bs = b_sequence(module, form, self.n_max, self.config.slack, self.config.memory_cap)
            last = (form, bs)
            if bs.verdict == "superficial":
                return form, bs
        return None if last is None else (None, last[1])


def _power_in_form_image(ctx: Ctx, name: str, form: LinearForm, t: int) -> bool:
    """Whether m^t M lies inside (form) M, by two stabilized lengths."""
    module = ctx.module(name)
    ring = module.ring
    x = form.as_poly(ring)
    zero = Poly.zero(ring.nvars, ring.p)
    xcols = [
        tuple(x if j == g else zero for j in range(module.gens))
        for g in range(module.gens)
    ]
    table = monomial_table(ring.nvars, t)
    mcols = [
        tuple(Poly(ring.nvars, ring.p, {table.exps[m]: 1}) if j == g else zero for j in range(module.gens))
        for m in table.ids_of_degree(t)
        for g in range(module.gens)
    ]
    lam_x = stabilized_length(
        module.with_extra_columns(xcols, label=f"{module.label}/x"),
        ctx.config.slack,
        memory_cap=ctx.config.memory_cap,
    )
    lam_both = stabilized_length(
        module.with_extra_columns(xcols + mcols, label=f"{module.label}/x+m^{t}"),
        ctx.config.slack,
        memory_cap=ctx.config.memory_cap,
    )
    if lam_both > lam_x:
        raise InternalCheckError(
            f"adding columns raised a length: {lam_x} -> {lam_both}"
        )
    return lam_x == lam_both


def _ring_type_dim1(ctx: Ctx) -> tuple[int, dict]:
    """Type of a one-dimensional CM ring: socle dimension after cutting by
    a certified superficial form."""
    drawn = ctx.superficial_form("A", "ring-type")
    if drawn is None or drawn[0] is None:
        raise PreconditionError("no certified superficial form found for the type computation")
    form, bs = drawn
    quot = quotient_ring_by_form(ctx.inst.ring, form)
    tau = annihilator_socle_dim(quot.as_module(), memory_cap=ctx.config.memory_cap)
    return tau, {"form": list(form.coeffs), "b_values": bs.values}


# ---------------------------------------------------------------------------
# individual checks


def _check_thm1_monotone(ctx: Ctx) -> tuple[str, dict]:
    ring = ctx.inst.ring
    if len(ring.q_gens) != 1:
        return "inconclusive", {"note": "not applicable: the ring is not a hypersurface quotient"}
    if ring.nvars < 2:
        return "inconclusive", {"note": "not applicable: needs positive dimension"}
    witness = {"n_max": ctx.n_max, "series": {}}
    verdict = "holds"
    for name in sorted(n for n in ("M", "K") if n in ctx.inst.modules):
        series = hilbert_function(ctx.module(name), ctx.n_max, ctx.config.memory_cap)
        bad = _first_decrease(series.values)
        witness["series"][name] = series.values
        if bad is not None:
            witness["first_decrease"] = {"module": name, "n": bad}
            verdict = "fails"
    if not witness["series"]:
        return "inconclusive", {"note": "no maximal Cohen-Macaulay module on this instance"}
    return verdict, witness


def _check_mthy1(ctx: Ctx) -> tuple[str, dict]:
    inv = mf_invariants(ctx.inst.mf, ctx.config.memory_cap)
    mu, i = inv["mu"], inv["i_M"]
    es = ctx.es("M", 1)
    wit = {
        "e0_M": es[0],
        "e1_M": es[1],
        "mu": mu,
        "i_M": i,
        "bound_e0": mu * i,
        "bound_e1": mu * math.comb(i, 2),
        "n_max": ctx.n_max,
    }
    ok = es[0] >= mu * i and es[1] >= mu * math.comb(i, 2)
    return ("holds" if ok else "fails"), wit


def _check_mthy2(ctx: Ctx) -> tuple[str, dict]:
    inv = mf_invariants(ctx.inst.mf, ctx.config.memory_cap)
    free = ctx.is_free("M")
    extremal = inv["i_M"] == inv["e"]
    wit = {
        "free": free,
        "i_M": inv["i_M"],
        "e": inv["e"],
        "h_M": list(ctx.h("M").coeffs),
        "h_A": list(ctx.h("A").coeffs),
        "n_max": ctx.n_max,
    }
    return ("holds" if free == extremal else "fails"), wit


def _check_mthy3(ctx: Ctx) -> tuple[str, dict]:
    inv = mf_invariants(ctx.inst.mf, ctx.config.memory_cap)
    wit = {"i_M": inv["i_M"], "e": inv["e"], "n_max": ctx.n_max}
    if inv["i_M"] != inv["e"] - 1:
        wit["note"] = "vacuous: i(M) != e - 1 on this instance"
        return "holds", wit
    wit["depth_G_M"] = ctx.depth_witness("M")
    return ("holds" if ctx.certified_G_CM("M") else "fails"), wit


def _check_mthy4(ctx: Ctx) -> tuple[str, dict]:
    inv = mf_invariants(ctx.inst.mf, ctx.config.memory_cap)
    mu, i, e = inv["mu"], inv["i_M"], inv["e"]
    es = ctx.es("M", 1)
    hm = ctx.h("M")
    cond_e0 = es[0] == mu * i
    cond_e1 = es[1] == mu * math.comb(i, 2)
    shape = list(hm.coeffs) == [mu] * i
    cond_struct = shape and ctx.certified_G_CM("M")
    wit = {
        "e0_M": es[0],
        "e1_M": es[1],
        "mu": mu,
        "i_M": i,
        "e": e,
        "h_M": list(hm.coeffs),
        "equalities": {"e0": cond_e0, "e1": cond_e1, "h_shape_and_G_CM": cond_struct},
        "n_max": ctx.n_max,
    }
    if shape:
        wit["depth_G_M"] = ctx.depth_witness("M")
    if not (cond_e0 == cond_e1 == cond_struct):
        return "fails", wit
    if cond_e0 and not ctx.is_free("M") and "K" in ctx.inst.modules:
        hk = ctx.h("K")
        tail_shape = list(hk.coeffs) == [mu] * (e - i)
        wit["h_K"] = list(hk.coeffs)
        wit["expected_h_K"] = [mu] * (e - i)
        wit["depth_G_K"] = ctx.depth_witness("K")
        if not (tail_shape and ctx.certified_G_CM("K")):
            return "fails", wit
    return "holds", wit


def _gorenstein_reason(ctx: Ctx) -> str | None:
    ring = ctx.inst.ring
    if len(ring.q_gens) == 1:
        return "hypersurface quotient"
    if ctx.inst.sg is not None and ctx.inst.sg.type == 1:
        return "semigroup type 1"
    return None


def _check_the2(ctx: Ctx, part: int) -> tuple[str, dict]:
    gor = _gorenstein_reason(ctx)
    if gor is None:
        return "inconclusive", {"note": "hypothesis not certified: A Gorenstein"}
    d = ctx.dim("A")
    depth_a = ctx.depth("A")
    wit = {
        "gorenstein": gor,
        "dim": d,
        "depth_G_A": ctx.depth_witness("A"),
        "n_max": ctx.n_max,
    }
    if depth_a.estimate < d - 1:
        wit["note"] = "hypothesis not certified: depth G(A) >= dim - 1"
        return "inconclusive", wit
    if depth_a.estimate == d - 1 and not depth_a.exact:
        wit["hypothesis_approximate"] = "depth G(A) certified only as a lower bound d - 1"
    if not ctx.certified_G_CM("M"):
        wit["note"] = "hypothesis not certified: G(M) Cohen-Macaulay"
        wit["depth_G_M"] = ctx.depth_witness("M")
        return "inconclusive", wit
    tau = ctx.mf_type()
    es_a = ctx.es("A")
    es_m = ctx.es("M")
    chis_a = [ctx.chi("A", i) for i in range(4)]
    chis_m = [ctx.chi("M", i) for i in range(4)]
    wit.update({"type_M": tau, "e_A": es_a, "e_M": es_m, "chi_A": chis_a, "chi_M": chis_m})
    if part == 1:
        smod = s_module(ctx.inst.mf)
        hs = h_polynomial(smod, ctx.n_max, ctx.config.slack, ctx.config.memory_cap)
        es_s = e_coefficients(hs, 3)
        chis_s = [chi_of(hs, i) for i in range(4)]
        wit.update({"h_S": list(hs.coeffs), "e_S": es_s, "chi_S": chis_s})
        ok = (
            tau * es_a[2] >= es_m[2] + es_s[2]
            and tau * chis_a[2] >= chis_m[2] + chis_s[2]
        )
        return ("holds" if ok else "fails"), wit
    bad = [
        i
        for i in range(4)
        if tau * es_a[i] < es_m[i] or tau * chis_a[i] < chis_m[i]
    ]
    if bad:
        wit["first_violation_i"] = bad[0]
    return ("holds" if not bad else "fails"), wit


def _check_the2_counterexample(ctx: Ctx) -> tuple[str, dict]:
    for name in ("E", "M"):
        if name not in ctx.inst.modules:
            raise PreconditionError(
                f"this check needs modules E and M; instance {ctx.inst.key!r} lacks {name!r}"
            )
    mu_e = ctx.mu("E")
    e3_a = ctx.es("A")[3]
    e3_m = ctx.es("M")[3]
    e3_e = ctx.es("E")[3]
    d = ctx.dim("A")
    depth_a = ctx.depth("A")
    wit = {
        "mu_E": mu_e,
        "e3_A": e3_a,
        "e3_M": e3_m,
        "e3_E": e3_e,
        "lhs": mu_e * e3_a,
        "rhs": e3_m + e3_e,
        "dim": d,
        "depth_G_A": ctx.depth_witness("A"),
        "n_max": ctx.n_max,
    }
    ok = mu_e * e3_a < e3_m + e3_e and depth_a.estimate < d - 1
    return ("holds" if ok else "fails"), wit


def _resolve_tau(ctx: Ctx) -> tuple[int, dict]:
    detail: dict = {}
    if ctx.inst.sg is not None:
        tau = ctx.inst.sg.type
        detail["source"] = "semigroup oracle"
        if ctx.dim("A") == 1:
            computed, socle_wit = _ring_type_dim1(ctx)
            detail["socle_route"] = computed
            detail.update(socle_wit)
            if computed != tau:
                raise InternalCheckError(
                    f"type mismatch: oracle {tau}, socle route {computed}"
                )
        return tau, detail
    supplied = ctx.inst.golden.get("tau")
    if ctx.dim("A") == 1:
        computed, socle_wit = _ring_type_dim1(ctx)
        detail["source"] = "socle of a superficial reduction"
        detail["socle_route"] = computed
        detail.update(socle_wit)
        if supplied is not None and supplied != computed:
            raise PreconditionError(
                f"supplied type {supplied} contradicts the computed socle dimension {computed}"
            )
        return computed, detail
    if supplied is None:
        raise PreconditionError("no type available: supply tau with the omega presentation")
    detail["source"] = "supplied"
    return supplied, detail


def _omega_common(ctx: Ctx) -> tuple[int, HPolynomial, HPolynomial, dict]:
    if ctx.inst.omega is None:
        raise PreconditionError(f"instance {ctx.inst.key!r} carries no canonical-module presentation")
    ha = ctx.h("A")
    if ha.dim_r < 1:
        raise PreconditionError("canonical-module bounds need dim A >= 1")
    hw = ctx.h("omega")
    if hw.multiplicity() != ha.multiplicity():
        raise PreconditionError(
            f"rejected omega presentation: e0(omega) = {hw.multiplicity()} "
            f"but e0(A) = {ha.multiplicity()}"
        )
    tau, detail = _resolve_tau(ctx)
    if minimal_generators(ctx.module("omega")) != tau:
        raise PreconditionError(
            f"omega presentation has {minimal_generators(ctx.module('omega'))} minimal "
            f"generators but the type is {tau}"
        )
    return tau, ha, hw, detail


def _check_omega1(ctx: Ctx) -> tuple[str, dict]:
    tau, ha, hw, detail = _omega_common(ctx)
    e1_a = e_coefficients(ha, 1)[1]
    e1_w = e_coefficients(hw, 1)[1]
    wit = {
        "tau": tau,
        "tau_detail": detail,
        "e0": ha.multiplicity(),
        "e1_A": e1_a,
        "e1_omega": e1_w,
        "lower_ok": e1_a <= tau * e1_w,
        "upper_ok": e1_w <= tau * e1_a,
        "n_max": ctx.n_max,
    }
    ok = wit["lower_ok"] and wit["upper_ok"]
    return ("holds" if ok else "fails"), wit


def _check_omega2(ctx: Ctx) -> tuple[str, dict]:
    tau, ha, hw, detail = _omega_common(ctx)
    e1_a = e_coefficients(ha, 1)[1]
    e1_w = e_coefficients(hw, 1)[1]
    gorenstein = tau == 1
    min_mult = chi_of(ha, 1) == 0
    upper_equal = e1_w == tau * e1_a
    lower_equal = e1_a == tau * e1_w
    wit = {
        "tau": tau,
        "e1_A": e1_a,
        "e1_omega": e1_w,
        "chi1_A": chi_of(ha, 1),
        "gorenstein": gorenstein,
        "minimal_multiplicity": min_mult,
        "upper_equality": upper_equal,
        "upper_explained": upper_equal == gorenstein,
        "lower_equality": lower_equal,
        "lower_explained": lower_equal == (gorenstein or min_mult),
        "n_max": ctx.n_max,
    }
    ok = wit["upper_explained"] and wit["lower_explained"]
    return ("holds" if ok else "fails"), wit


def _check_omega3(ctx: Ctx) -> tuple[str, dict]:
    tau, ha, hw, detail = _omega_common(ctx)
    if ha.dim_r != 1:
        return "inconclusive", {"note": "not applicable: part 3 needs dim A = 1"}
    if not ctx.certified_G_CM("A"):
        return "inconclusive", {
            "note": "hypothesis not certified: G(A) Cohen-Macaulay",
            "depth_G_A": ctx.depth_witness("A"),
        }
    es_a = e_coefficients(ha, 3)
    es_w = e_coefficients(hw, 3)
    chis_a = [chi_of(ha, i) for i in range(4)]
    chis_w = [chi_of(hw, i) for i in range(4)]
    bad = [
        i
        for i in range(1, 4)
        if es_a[i] > tau * es_w[i] or chis_a[i] > tau * chis_w[i]
    ]
    wit = {
        "tau": tau,
        "e_A": es_a,
        "e_omega": es_w,
        "chi_A": chis_a,
        "chi_omega": chis_w,
        "depth_G_A": ctx.depth_witness("A"),
        "n_max": ctx.n_max,
    }
    if bad:
        wit["first_violation_i"] = bad[0]
    return ("holds" if not bad else "fails"), wit


def _check_mui(ctx: Ctx) -> tuple[str, dict]:
    ring = ctx.inst.ring
    d = ctx.dim("A")
    if d < 1:
        return "inconclusive", {"note": "not applicable: needs positive dimension"}
    # canonical m-primary ideal with d + 1 = nvars generators: (x_1^2, x_2, .., x_nvars)
    if len(ring.q_gens) != 1:
        return "inconclusive", {"note": "not applicable: the shipped ideal family assumes a hypersurface"}
    gens = [ring.poly(f"{ring.var_names[0]}^2")] + [
        ring.poly(ring.var_names[j]) for j in range(1, ring.nvars)
    ]
    module = ctx.module("M") if "M" in ctx.inst.modules else ctx.module("A")
    a_mod = ctx.module("A")
    zero = Poly.zero(ring.nvars, ring.p)
    icols = [(g,) for g in gens]
    lam_i = stabilized_length(
        a_mod.with_extra_columns(icols, label="A/I"),
        ctx.config.slack,
        memory_cap=ctx.config.memory_cap,
    )
    mi_cols = [
        (ring.poly(v) * g,) for g in gens for v in ring.var_names
    ]
    lam_mi = stabilized_length(
        a_mod.with_extra_columns(mi_cols, label="A/mI"),
        ctx.config.slack,
        memory_cap=ctx.config.memory_cap,
    )
    mu_i = lam_mi - lam_i
    wit = {
        "mu_I": mu_i,
        "d_plus_1": d + 1,
        "lambda_A_I": lam_i,
        "lambda_A_mI": lam_mi,
    }
    if mu_i != d + 1:
        wit["note"] = "hypothesis not certified: mu(I) = d + 1"
        return "inconclusive", wit
    window = min(ctx.n_max, 8)
    series = hilbert_function_ideal(
        module, gens, window, ctx.config.slack, memory_cap=ctx.config.memory_cap
    )
    bad = _first_decrease(series.values)
    wit["ideal_hilbert"] = series.values
    wit["window"] = window
    if bad is not None:
        wit["first_decrease"] = bad
    return ("holds" if bad is None else "fails"), wit


def _generic_artinian_reduction(ctx: Ctx, levels: int) -> tuple[RingPresentation, list]:
    ring = ctx.inst.ring
    rng = random.Random(_seed_for(ctx.config, "reduction", ctx.inst.key, levels))
    used = []
    cur = ring
    for _ in range(levels):
        form = random_form(cur, rng, provenance="generic reduction")
        used.append(list(form.coeffs))
        cur = quotient_ring_by_form(cur, form)
    return cur, used


def _check_existr(ctx: Ctx, part: int) -> tuple[str, dict]:
    d = ctx.dim("A")
    if not ctx.certified_G_CM("M"):
        return "inconclusive", {
            "note": "hypothesis not certified: G(M) Cohen-Macaulay",
            "depth_G_M": ctx.depth_witness("M"),
        }
    levels = d if part == 1 else d - 1
    if levels < 0:
        return "inconclusive", {"note": "not applicable: dim A = 0 has no part-2 reduction"}
    target, forms = _generic_artinian_reduction(ctx, levels)
    ht = h_polynomial(
        target.as_module(), ctx.n_max, ctx.config.slack, ctx.config.memory_cap
    )
    wit = {
        "dim": d,
        "levels": levels,
        "forms": forms,
        "h_target": list(ht.coeffs),
        "target_dim": ht.dim_r,
        "depth_G_M": ctx.depth_witness("M"),
        "n_max": ctx.n_max,
    }
    if part == 1:
        if ht.dim_r != 0:
            wit["note"] = "reduction did not reach dimension 0 (non-generic draw)"
            return "inconclusive", wit
        factor = ctx.mu("M")
        wit["mu_M"] = factor
    else:
        if ht.dim_r != 1:
            wit["note"] = "reduction did not reach dimension 1 (non-generic draw)"
            return "inconclusive", wit
        if len(ctx.inst.ring.q_gens) != 1 and _gorenstein_reason(ctx) is None:
            wit["note"] = "hypothesis not certified: the one-dimensional reduction is Gorenstein"
            return "inconclusive", wit
        factor = ctx.mf_type()
        wit["type_M"] = factor
    es_t = e_coefficients(ht, 3)
    chis_t = [chi_of(ht, i) for i in range(4)]
    es_m = ctx.es("M")
    chis_m = [ctx.chi("M", i) for i in range(4)]
    wit.update({"e_target": es_t, "chi_target": chis_t, "e_M": es_m, "chi_M": chis_m})
    bad = [
        i
        for i in range(4)
        if es_m[i] > factor * es_t[i] or chis_m[i] > factor * chis_t[i]
    ]
    if bad:
        wit["first_violation_i"] = bad[0]
    return ("holds" if not bad else "fails"), wit


def _graded_koszul_h1(nvars: int, p: int, f: Poly, g: Poly, n_max: int) -> list[int]:
    """dim H_1 of the Koszul complex on two homogeneous polynomials over the
    free polynomial ring, degree by degree, by exact rank arithmetic."""
    a = int(f.order())
    b = int(g.order())
    table = monomial_table(nvars, n_max + 1)

    def mult_matrix(poly: Poly, src_deg: int, dst_deg: int) -> np.ndarray:
        src = table.ids_of_degree(src_deg) if src_deg >= 0 else []
        dst = table.ids_of_degree(dst_deg)
        index = {m: i for i, m in enumerate(dst)}
        mat = np.zeros((len(dst), len(src)), dtype=np.int64)
        for col, m in enumerate(src):
            prod = poly * Poly(nvars, p, {table.exps[m]: 1})
            for exps, c in prod.terms.items():
                mat[index[table.id_of[exps]], col] = c
        return mat

    out = []
    for t in range(n_max + 1):
        n_fa = len(table.ids_of_degree(t - a)) if t >= a else 0
        n_fb = len(table.ids_of_degree(t - b)) if t >= b else 0
        n_t = len(table.ids_of_degree(t))
        d1 = np.zeros((n_t, n_fa + n_fb), dtype=np.int64)
        if n_fa:
            d1[:, :n_fa] = mult_matrix(f, t - a, t)
        if n_fb:
            d1[:, n_fa:] = mult_matrix(g, t - b, t)
        rank1 = rank_mod_p(d1, p) if d1.size else 0
        n_ab = len(table.ids_of_degree(t - a - b)) if t >= a + b else 0
        d2 = np.zeros((n_fa + n_fb, n_ab), dtype=np.int64)
        if n_ab:
            d2[:n_fa, :] = (-mult_matrix(g, t - a - b, t - a)) % p
            d2[n_fa:, :] = mult_matrix(f, t - a - b, t - b)
        rank2 = rank_mod_p(d2, p) if d2.size else 0
        out.append(n_fa + n_fb - rank1 - rank2)
    return out


def ci_regular_check(ring: RingPresentation, n_max: int) -> dict:
    """Certify that a two-generator defining ideal is a regular sequence.

    Homogeneous generators get the graded Koszul first-homology test (exact
    per degree); otherwise the certification falls back to the dimension
    drop read off the h-polynomial, with a caveat recorded.
    """
    if len(ring.q_gens) != 2:
        raise PreconditionError(f"expected exactly 2 defining equations, got {len(ring.q_gens)}")
    f, g = ring.q_gens

    def homogeneous(poly: Poly) -> bool:
        degs = {sum(e) for e in poly.terms}
        return len(degs) == 1

    if homogeneous(f) and homogeneous(g):
        window = min(n_max, int(f.order()) + int(g.order()) + 4)
        h1 = _graded_koszul_h1(ring.nvars, ring.p, f, g, window)
        return {
            "method": "graded Koszul H1",
            "window": window,
            "h1_by_degree": h1,
            "regular": all(v == 0 for v in h1),
        }
    hp = h_polynomial(ring.as_module(), n_max)
    return {
        "method": "dimension drop (window caveat: non-homogeneous generators)",
        "dim": hp.dim_r,
        "expected_dim": ring.nvars - 2,
        "regular": hp.dim_r == ring.nvars - 2,
    }


def _check_c2thmo(ctx: Ctx) -> tuple[str, dict]:
    ring = ctx.inst.ring
    if len(ring.q_gens) != 2:
        return "inconclusive", {"note": "not applicable: needs a two-generator defining ideal"}
    if ring.nvars - 2 < 1:
        return "inconclusive", {"note": "not applicable: needs positive dimension"}
    cert = ci_regular_check(ring, ctx.n_max)
    wit = {"regular_sequence": cert, "n_max": ctx.n_max}
    if not cert["regular"]:
        wit["note"] = "hypothesis not certified: the defining ideal is not a certified regular sequence"
        return "inconclusive", wit
    series = hilbert_function(ctx.module("A"), ctx.n_max, ctx.config.memory_cap)
    bad = _first_decrease(series.values)
    wit["hilbert"] = series.values
    if bad is not None:
        wit["first_decrease"] = bad
    return ("holds" if bad is None else "fails"), wit


def _check_dim0form(ctx: Ctx) -> tuple[str, dict]:
    if ctx.dim("A") != 0:
        return "inconclusive", {"note": "not applicable: needs dim A = 0"}
    mu = ctx.mu("M")
    es_a, es_m, es_k = ctx.es("A"), ctx.es("M"), ctx.es("K")
    chis = {name: [ctx.chi(name, i) for i in range(4)] for name in ("A", "M", "K")}
    bad = [
        i
        for i in range(4)
        if mu * es_a[i] < es_m[i] + es_k[i]
        or mu * chis["A"][i] < chis["M"][i] + chis["K"][i]
        or mu * es_a[i] < es_m[i]
        or mu * chis["A"][i] < chis["M"][i]
    ]
    wit = {
        "mu_M": mu,
        "e_A": es_a,
        "e_M": es_m,
        "e_K": es_k,
        "chi_A": chis["A"],
        "chi_M": chis["M"],
        "chi_K": chis["K"],
        "n_max": ctx.n_max,
    }
    if bad:
        wit["first_violation_i"] = bad[0]
    return ("holds" if not bad else "fails"), wit


def _check_dim1_3(ctx: Ctx) -> tuple[str, dict]:
    if ctx.dim("A") != 1:
        return "inconclusive", {"note": "not applicable: needs dim A = 1"}
    if ctx.is_free("M"):
        return "holds", {"note": "vacuous: M is free on the window"}
    if not ctx.certified_G_CM("K"):
        return "inconclusive", {
            "note": "hypothesis not certified: G(E) Cohen-Macaulay for the syzygy E",
            "depth_G_K": ctx.depth_witness("K"),
        }
    mu = ctx.mu("M")
    es_a, es_m, es_k = ctx.es("A"), ctx.es("M"), ctx.es("K")
    chis = {name: [ctx.chi(name, i) for i in range(4)] for name in ("A", "M", "K")}
    bad = [
        i
        for i in range(4)
        if mu * es_a[i] < es_m[i] + es_k[i]
        or mu * chis["A"][i] < chis["M"][i] + chis["K"][i]
    ]
    wit = {
        "mu_M": mu,
        "e_A": es_a,
        "e_M": es_m,
        "e_E": es_k,
        "chi_A": chis["A"],
        "chi_M": chis["M"],
        "chi_E": chis["K"],
        "depth_G_E": ctx.depth_witness("K"),
        "n_max": ctx.n_max,
    }
    if bad:
        wit["first_violation_i"] = bad[0]
    return ("holds" if not bad else "fails"), wit


def _check_u1(ctx: Ctx) -> tuple[str, dict]:
    if ctx.dim("A") < 1:
        return "inconclusive", {"note": "not applicable: needs positive dimension"}
    if ctx.dim("M") != 1:
        return "inconclusive", {"note": "not applicable: the shipped membership test needs dim M = 1"}
    depth_a = ctx.depth("A")
    if depth_a.estimate < 1:
        return "inconclusive", {
            "note": "hypothesis not certified: depth G(A) >= 1",
            "depth_G_A": ctx.depth_witness("A"),
        }
    inv = mf_invariants(ctx.inst.mf, ctx.config.memory_cap)
    l = inv["i_M"]
    drawn = ctx.superficial_form("M", "U1")
    if drawn is None or drawn[0] is None:
        return "inconclusive", {"note": "no certified superficial form found"}
    form, bs = drawn
    head = bs.values[:l]
    wit = {
        "l": l,
        "form": list(form.coeffs),
        "b_values": bs.values,
        "head": head,
        "n_max": ctx.n_max,
    }
    if any(head):
        return "fails", wit
    inclusion = _power_in_form_image(ctx, "M", form, l)
    wit["m_power_l_inside_xM"] = inclusion
    if inclusion:
        wit["depth_G_M"] = ctx.depth_witness("M")
        if ctx.depth("M").estimate < 1:
            return "fails", wit
    else:
        wit["note"] = "second clause vacuous: m^l M is not inside xM"
    return "holds", wit


def _check_dim1a(ctx: Ctx) -> tuple[str, dict]:
    if ctx.inst.ring.nvars != 2:
        return "inconclusive", {"note": "not applicable: needs a two-variable ambient ring"}
    inv = mf_invariants(ctx.inst.mf, ctx.config.memory_cap)
    mu, i = inv["mu"], inv["i_M"]
    hm = ctx.h("M")
    coeffs = list(hm.coeffs)
    head_ok = coeffs[:i] == [mu] * i
    nonneg = all(c >= 0 for c in coeffs)
    wit = {"h_M": coeffs, "mu": mu, "i_M": i, "n_max": ctx.n_max}
    return ("holds" if head_ok and nonneg else "fails"), wit


def _check_ur1(ctx: Ctx) -> tuple[str, dict]:
    if ctx.dim("A") != 1:
        return "inconclusive", {"note": "not applicable: needs dim A = 1"}
    e0 = ctx.h("A").multiplicity()
    drawn = ctx.superficial_form("A", "Ur1")
    if drawn is None or drawn[0] is None:
        return "inconclusive", {"note": "no certified superficial form found"}
    form, bs = drawn
    ring_ok = _power_in_form_image(ctx, "A", form, e0)
    wit = {
        "e0_A": e0,
        "form": list(form.coeffs),
        "ring_inclusion": ring_ok,
        "n_max": ctx.n_max,
    }
    if "M" in ctx.inst.modules and ctx.dim("M") == 1:
        wit["module_inclusion"] = _power_in_form_image(ctx, "M", form, e0)
        ok = ring_ok and wit["module_inclusion"]
    else:
        ok = ring_ok
    return ("holds" if ok else "fails"), wit


def _check_u3(ctx: Ctx) -> tuple[str, dict]:
    if ctx.dim("A") != 1:
        return "inconclusive", {"note": "not applicable: needs dim A = 1"}
    if "K" not in ctx.inst.modules:
        raise PreconditionError("this check needs the syzygy module K")
    if ctx.is_free("M"):
        return "holds", {"note": "vacuous: M is free on the window"}
    e0 = ctx.h("A").multiplicity()
    if e0 < 2:
        return "holds", {"note": "vacuous: e0(A) < 2 leaves nothing to test"}
    drawn = ctx.superficial_form("K", "U3")
    if drawn is None or drawn[0] is None:
        return "inconclusive", {"note": "no certified superficial form found"}
    form, bs = drawn
    inclusion = _power_in_form_image(ctx, "K", form, e0 - 1)
    wit = {
        "e0_A": e0,
        "power": e0 - 1,
        "form": list(form.coeffs),
        "inclusion": inclusion,
        "n_max": ctx.n_max,
    }
    return ("holds" if inclusion else "fails"), wit


def _check_eqchar(ctx: Ctx) -> tuple[str, dict]:
    if not ctx.inst.mf.minimal_phi:
        return "inconclusive", {"note": "not applicable: needs a minimal presentation matrix"}
    lead = leading_form_det_test(ctx.inst.mf, ctx.config.memory_cap)
    hm = ctx.h("M")
    shape = list(hm.coeffs) == [lead["mu"]] * lead["i_M"]
    wit = {
        "leading_det_nonzero": lead["nonzero"],
        "det_order": lead["det_order"],
        "i_M": lead["i_M"],
        "mu": lead["mu"],
        "h_M": list(hm.coeffs),
        "extremal_shape": shape,
        "n_max": ctx.n_max,
    }
    return ("holds" if lead["nonzero"] == shape else "fails"), wit


def _check_examplef(ctx: Ctx) -> tuple[str, dict]:
    mf = ctx.inst.mf
    if mf.size != 2:
        return "inconclusive", {"note": "not applicable: needs a 2x2 factorization"}
    inv = mf_invariants(mf, ctx.config.memory_cap)
    wit = {"det_order": inv["det_order"], "n_max": ctx.n_max}
    if inv["det_order"] == 2:
        hm = ctx.h("M")
        wit["h_M"] = list(hm.coeffs)
        wit["mu"] = inv["mu"]
        ulrich = hm.multiplicity() == inv["mu"] and inv["i_M"] == 1
        wit["ulrich"] = ulrich
        return ("holds" if ulrich else "fails"), wit
    if inv["det_order"] == 3:
        chi_m = ctx.chi("M", 1)
        chi_k = ctx.chi("K", 1)
        wit.update({"chi1_M": chi_m, "chi1_K": chi_k})
        return ("holds" if chi_m == 0 or chi_k == 0 else "fails"), wit
    wit["note"] = "vacuous: determinant order outside {2, 3}"
    return "holds", wit


def _check_suffgen(ctx: Ctx) -> tuple[str, dict]:
    d = ctx.dim("A")
    if d < 1:
        return "inconclusive", {"note": "not applicable: needs positive dimension"}
    wit = {"per_r": [], "n_max": ctx.n_max}
    verdict = "holds"
    for r in range(1, min(d, ctx.inst.ring.nvars - 1) + 1):
        report = generic_invariance_sample(
            ctx.inst.ring,
            r,
            samples=5,
            seed=_seed_for(ctx.config, "suffgen", ctx.inst.key, r),
            n_max=ctx.n_max,
            memory_cap=ctx.config.memory_cap,
        )
        wit["per_r"].append(
            {
                "r": r,
                "agreed": report.agreed,
                "hilbert": report.hilbert,
                "samples": report.samples,
                "retries": report.retries,
            }
        )
        if not report.agreed:
            verdict = "fails"
    return verdict, wit


def _draw_superficial_tuple(ctx: Ctx, r: int, attempts: int = 5):
    """r forms on the ambient ring, certified sequentially superficial on
    the window when possible.  Returns (forms, certified)."""
    ring = ctx.inst.ring
    a_mod = ctx.module("A")
    forms = None
    for attempt in range(attempts):
        rng = random.Random(_seed_for(ctx.config, "marley", ctx.inst.key, r, attempt))
        cand = [random_form(ring, rng, provenance="marley") for _ in range(r)]
        cur = a_mod
        ok = True
        for form in cand:
            bs = b_sequence(cur, form, ctx.n_max, ctx.config.slack, ctx.config.memory_cap)
            if bs.verdict != "superficial":
                ok = False
                break
            # stay over the ambient ring so later forms keep their coefficients
            cur = cur.with_extra_columns([(form.as_poly(ring),)], label=f"{cur.label}/f")
        forms = cand
        if ok:
            return forms, True
    return forms, False


def _check_marley(ctx: Ctx) -> tuple[str, dict]:
    d = ctx.dim("A")
    ring = ctx.inst.ring
    post_a = ctx.h("A").postulation
    wit = {"dim": d, "postulation_A": post_a, "per_r": [], "n_max": ctx.n_max}
    verdict = "holds"
    for r in range(1, min(2, ring.nvars) + 1):
        forms, certified = _draw_superficial_tuple(ctx, r)
        try:
            report = difference_identity_check(
                ring, forms, ctx.n_max, ctx.config.slack, ctx.config.memory_cap
            )
        except InternalCheckError as err:
            wit["per_r"].append({"r": r, "identity": "failed", "detail": str(err)})
            verdict = "fails"
            continue
        entry = {
            "r": r,
            "identity": "exact",
            "forms": [list(f.coeffs) for f in forms],
            "superficial_certified": certified,
            "w": report["w"],
            "w_vanishing_from": report["w_vanishing_from"],
        }
        if r <= d and certified:
            cols = [(f.as_poly(ring),) for f in forms]
            quot = ctx.module("A").with_extra_columns(cols, label=f"{ring.label}/forms")
            post_q = h_polynomial(
                quot, ctx.n_max, ctx.config.slack, ctx.config.memory_cap
            ).postulation
            bound = max(post_a + r, post_q)
            entry["postulation_quotient"] = post_q
            entry["vanishing_bound"] = bound
            tail_ok = all(v == 0 for n, v in enumerate(report["w"]) if n >= bound)
            entry["tail_ok"] = tail_ok
            if not tail_ok:
                verdict = "fails"
        elif r > d:
            entry["note"] = "vanishing not asserted: r exceeds dim A"
        else:
            entry["note"] = "vanishing not asserted: superficiality not certified"
        wit["per_r"].append(entry)
    return verdict, wit


def _check_beqn(ctx: Ctx) -> tuple[str, dict]:
    try:
        ts = l_polynomial_from_mf(
            ctx.inst.mf, ctx.n_max, ctx.config.slack, ctx.config.memory_cap
        )
    except InternalCheckError as err:
        return "fails", {"detail": str(err), "n_max": ctx.n_max}
    except PreconditionError as err:
        return "inconclusive", {"note": str(err), "n_max": ctx.n_max}
    wit = {
        "l_from_tor": list(ts.l_coeffs),
        "l_from_identity": list(ts.l_from_identity),
        "tor1_lengths": ts.lengths.values,
        "h_M": list(ctx.h("M").coeffs),
        "h_K": list(ctx.h("K").coeffs),
        "h_A": list(ctx.h("A").coeffs),
        "mu_M": ctx.mu("M"),
        "n_max": ctx.n_max,
    }
    return "holds", wit


def _check_geqgeq(ctx: Ctx) -> tuple[str, dict]:
    name = "M" if "M" in ctx.inst.modules else ("omega" if "omega" in ctx.inst.modules else "A")
    if not ctx.certified_G_CM("A"):
        return "inconclusive", {
            "note": "hypothesis not certified: G(A) Cohen-Macaulay",
            "depth_G_A": ctx.depth_witness("A"),
        }
    if not ctx.certified_G_CM(name):
        return "inconclusive", {
            "note": f"hypothesis not certified: G({name}) Cohen-Macaulay",
            "depth_G_module": ctx.depth_witness(name),
        }
    mu = ctx.mu(name)
    es_a = ctx.es("A")
    es_m = ctx.es(name)
    bad = [i for i in range(4) if es_a[i] * mu < es_m[i]]
    wit = {
        "module": name,
        "mu": mu,
        "e_A": es_a,
        "e_module": es_m,
        "n_max": ctx.n_max,
    }
    if bad:
        wit["first_violation_i"] = bad[0]
    return ("holds" if not bad else "fails"), wit


def _check_h_nonincreasing(ctx: Ctx) -> tuple[str, dict]:
    if len(ctx.inst.ring.q_gens) != 1:
        return "inconclusive", {"note": "not applicable: needs a hypersurface quotient"}
    if not ctx.certified_G_CM("M"):
        return "inconclusive", {
            "note": "hypothesis not certified: G(M) Cohen-Macaulay",
            "depth_G_M": ctx.depth_witness("M"),
        }
    coeffs = list(ctx.h("M").coeffs)
    rising = _first_decrease(list(reversed(coeffs)))
    ok = all(coeffs[t] >= coeffs[t + 1] for t in range(len(coeffs) - 1))
    wit = {"h_M": coeffs, "depth_G_M": ctx.depth_witness("M"), "n_max": ctx.n_max}
    return ("holds" if ok else "fails"), wit


def _check_ulrich(ctx: Ctx) -> tuple[str, dict]:
    inv = mf_invariants(ctx.inst.mf, ctx.config.memory_cap)
    hm = ctx.h("M")
    if hm.multiplicity() != inv["mu"]:
        return "holds", {
            "note": "vacuous: M is not Ulrich (e0 > mu)",
            "e0_M": hm.multiplicity(),
            "mu": inv["mu"],
        }
    mu, e = inv["mu"], inv["e"]
    hk = ctx.h("K")
    wit = {
        "mu": mu,
        "e": e,
        "i_M": inv["i_M"],
        "h_M": list(hm.coeffs),
        "h_K": list(hk.coeffs),
        "expected_h_K": [mu] * (e - 1),
        "depth_G_K": ctx.depth_witness("K"),
        "n_max": ctx.n_max,
    }
    ok = (
        inv["i_M"] == 1
        and list(hk.coeffs) == [mu] * (e - 1)
        and ctx.certified_G_CM("K")
    )
    return ("holds" if ok else "fails"), wit


@dataclass(frozen=True)
class CheckDef:
    fn: object
    statement: str
    needs: str  # mf | module | ring | omega | pair


REGISTRY: dict[str, CheckDef] = {
    "thm1-monotone": CheckDef(
        _check_thm1_monotone,
        "over a positive-dimensional hypersurface quotient, the Hilbert function of a maximal Cohen-Macaulay module never decreases",
        "mf",
    ),
    "mtHy-1": CheckDef(
        _check_mthy1,
        "e0(M) >= mu(M) i(M) and e1(M) >= mu(M) C(i(M), 2)",
        "mf",
    ),
    "mtHy-2": CheckDef(
        _check_mthy2,
        "M is free exactly when i(M) equals the multiplicity e",
        "mf",
    ),
    "mtHy-3": CheckDef(
        _check_mthy3,
        "i(M) = e - 1 forces the associated graded module of M to be Cohen-Macaulay",
        "mf",
    ),
    "mtHy-4": CheckDef(
        _check_mthy4,
        "e0(M) = mu i(M), e1(M) = mu C(i(M),2) and the extremal h-polynomial shape with G(M) Cohen-Macaulay are equivalent; in the non-free extremal case the syzygy has the complementary shape",
        "mf",
    ),
    "the2-1": CheckDef(
        lambda ctx: _check_the2(ctx, 1),
        "type(M) e2(A) >= e2(M) + e2(S(M)) and the chi_2 analogue, for Gorenstein A with G(M) Cohen-Macaulay and depth G(A) >= dim - 1",
        "mf",
    ),
    "the2-2": CheckDef(
        lambda ctx: _check_the2(ctx, 2),
        "type(M) e_i(A) >= e_i(M) and the chi analogue for i <= 3, under the same hypotheses",
        "mf",
    ),
    "the2-counterexample": CheckDef(
        _check_the2_counterexample,
        "with depth G(A) below dim - 1 the third-coefficient inequality can fail: mu(E) e3(A) < e3(M) + e3(E) on this instance",
        "pair",
    ),
    "omega-1": CheckDef(
        _check_omega1,
        "e1(A) <= type(A) e1(omega) and e1(omega) <= type(A) e1(A)",
        "omega",
    ),
    "omega-2": CheckDef(
        _check_omega2,
        "the upper bound is an equality exactly for type 1, the lower one exactly for type 1 or chi_1(A) = 0",
        "omega",
    ),
    "omega-3": CheckDef(
        _check_omega3,
        "for dim A = 1 with G(A) Cohen-Macaulay: e_i(A) <= type(A) e_i(omega) and the chi analogue for i >= 1",
        "omega",
    ),
    "muI": CheckDef(
        _check_mui,
        "for an m-primary ideal with mu(I) = dim + 1, the I-adic Hilbert function of a maximal Cohen-Macaulay module never decreases",
        "ring",
    ),
    "existR-1": CheckDef(
        lambda ctx: _check_existr(ctx, 1),
        "e_i(M) <= e_i(R) mu(M) and the chi analogue for the Artinian reduction R by dim generic forms, given G(M) Cohen-Macaulay",
        "mf",
    ),
    "existR-2": CheckDef(
        lambda ctx: _check_existr(ctx, 2),
        "e_i(M) <= e_i(T) type(M) and the chi analogue for the one-dimensional Gorenstein reduction T, given G(M) Cohen-Macaulay",
        "mf",
    ),
    "c2thMo": CheckDef(
        _check_c2thmo,
        "a positive-dimensional quotient by a certified regular sequence of two forms has a non-decreasing Hilbert function",
        "ring",
    ),
    "dim0form": CheckDef(
        _check_dim0form,
        "for dim A = 0: mu(M) e_i(A) >= e_i(M) + e_i(K) and mu(M) e_i(A) >= e_i(M), with the chi analogues",
        "mf",
    ),
    "dim1-3": CheckDef(
        _check_dim1_3,
        "for dim A = 1 and non-free M with G(E) Cohen-Macaulay for the syzygy E: mu(M) e_i(A) >= e_i(M) + e_i(E) and the chi analogue",
        "mf",
    ),
    "U1": CheckDef(
        _check_u1,
        "presentation entries in the l-th power of the maximal ideal force b_n(x, M) = 0 for n < l; if additionally m^l M lies in xM then depth G(M) >= 1",
        "mf",
    ),
    "dim1a": CheckDef(
        _check_dim1a,
        "over a two-variable ambient ring the h-polynomial of M starts with i(M) copies of mu(M) and stays non-negative",
        "mf",
    ),
    "Ur1": CheckDef(
        _check_ur1,
        "for dim A = 1 and x superficial: m^(e0) lies in (x), hence m^(e0) M lies in xM",
        "mf",
    ),
    "U3": CheckDef(
        _check_u3,
        "for dim A = 1 and M the syzygy of a non-free maximal Cohen-Macaulay module: m^(e0 - 1) M lies in xM",
        "mf",
    ),
    "eqchar": CheckDef(
        _check_eqchar,
        "the determinant of the degree-i(M) leading forms is nonzero exactly when h_M = mu (1 + z + .. + z^(i-1))",
        "mf",
    ),
    "exampleF": CheckDef(
        _check_examplef,
        "for 2x2 factorizations: determinant order 2 gives an Ulrich cokernel; order 3 gives chi_1(M) = 0 or chi_1(K) = 0",
        "mf",
    ),
    "suffgen": CheckDef(
        _check_suffgen,
        "any two generic r-tuples of linear forms, r <= dim, produce the same Hilbert function of the quotient",
        "ring",
    ),
    "marley-identity": CheckDef(
        _check_marley,
        "the r-th difference of the length function equals the quotient length plus the Koszul correction w(y, n), and w vanishes past the postulation bound when r <= dim",
        "ring",
    ),
    "beqn": CheckDef(
        _check_beqn,
        "(1 - z) l_M(z) = h_K(z) - mu(M) h_A(z) + h_M(z), with l_M computed independently from Tor lengths",
        "mf",
    ),
    "geqgeq": CheckDef(
        _check_geqgeq,
        "when G(A) and G(M) are both Cohen-Macaulay, e_i(A) mu(M) >= e_i(M) for i <= 3",
        "module",
    ),
    "h-nonincreasing": CheckDef(
        _check_h_nonincreasing,
        "over a hypersurface with G(M) Cohen-Macaulay the h-polynomial coefficients of M never increase",
        "mf",
    ),
    "ulrich": CheckDef(
        _check_ulrich,
        "an Ulrich module has i(M) = 1 and its syzygy has the complementary extremal h-polynomial with G Cohen-Macaulay",
        "mf",
    ),
}

DEFAULT_CORPUS_CHECKS = ("beqn", "mtHy-1", "mtHy-2", "mtHy-4", "thm1-monotone")


def registry_ids() -> list[str]:
    return sorted(REGISTRY)


def check_statement(check_id: str) -> str:
    return _lookup(check_id)[1].statement


def resolve_check_id(check_id: str) -> str:
    """Canonical registry id for a possibly differently cased id."""
    return _lookup(check_id)[0]


def _lookup(check_id: str) -> tuple[str, CheckDef]:
    if check_id in REGISTRY:
        return check_id, REGISTRY[check_id]
    folded = {k.lower(): k for k in REGISTRY}
    if check_id.lower() in folded:
        key = folded[check_id.lower()]
        return key, REGISTRY[key]
    raise PreconditionError(
        f"unknown check id {check_id!r}; known ids: {', '.join(registry_ids())}"
    )


def requirement_gap(check_id: str, inst: ExampleInstance) -> str | None:
    """What the instance is missing for this check, or None when it applies."""
    defn = _lookup(check_id)[1]
    if defn.needs == "mf" and inst.mf is None:
        return "a matrix factorization"
    if defn.needs == "omega" and inst.omega is None:
        return "a canonical-module presentation"
    if defn.needs == "pair" and not {"E", "M"} <= set(inst.modules):
        return "modules E and M"
    if defn.needs == "module" and not inst.modules:
        return "at least one module"
    return None


def run_checks(check_ids, inst: ExampleInstance, config: RunConfig) -> list[TheoremCheck]:
    """Run several checks on one instance with shared cached invariants."""
    resolved = [_lookup(cid) for cid in check_ids]
    ctx = Ctx(inst, config)
    out = []
    for cid, defn in sorted(resolved, key=lambda t: t[0]):
        gap = requirement_gap(cid, inst)
        if gap is not None:
            raise PreconditionError(f"check {cid!r} needs {gap}; instance {inst.key!r} has none")
        verdict, witness = defn.fn(ctx)
        witness.setdefault("statement", defn.statement)
        out.append(TheoremCheck(cid, inst.key, verdict, _clean(witness)))
    return sorted(out, key=lambda c: (c.check_id, c.instance))


def run_check(check_id: str, inst: ExampleInstance, config: RunConfig) -> TheoremCheck:
    return run_checks([check_id], inst, config)[0]


@dataclass
class Report:
    config: RunConfig
    rows: list[TheoremCheck]
    meta: dict = field(default_factory=dict)

    @property
    def exit_code(self) -> int:
        return 1 if any(r.verdict == "fails" for r in self.rows) else 0

    def counts(self) -> dict:
        out = {"holds": 0, "fails": 0, "inconclusive": 0}
        for r in self.rows:
            out[r.verdict] += 1
        return out

    def to_json(self) -> str:
        doc = {
            "config": self.config.as_dict(),
            "meta": _clean(self.meta),
            "counts": self.counts(),
            "rows": [
                {
                    "check_id": r.check_id,
                    "instance": r.instance,
                    "verdict": r.verdict,
                    "witness": r.witness,
                }
                for r in self.rows
            ],
        }
        return json.dumps(doc, indent=2)

    def to_table(self) -> str:
        lines = []
        header = f"{'check':<22} {'instance':<34} verdict"
        lines.append(header)
        lines.append("-" * len(header))
        for r in self.rows:
            note = r.witness.get("note", "")
            tail = f"  ({note})" if note else ""
            lines.append(f"{r.check_id:<22} {r.instance:<34} {r.verdict}{tail}")
        c = self.counts()
        lines.append(
            f"window n_max={self.config.n_max}, p={self.config.p}, seed={self.config.seed}: "
            f"{c['holds']} holds, {c['fails']} fails, {c['inconclusive']} inconclusive"
        )
        return "\n".join(lines)


def instance_from_mf(mf, description: str = "corpus member") -> ExampleInstance:
    return ExampleInstance(
        key=mf.label,
        description=description,
        default_nmax=24,
        provenance="seeded random draw",
        golden={},
        ring=mf.ring(),
        modules={"M": mf.module(), "K": mf.syzygy_module()},
        mf=mf,
    )


def corpus_run(
    config: RunConfig,
    check_ids=None,
    count: int = 20,
    size: int | None = None,
    nvars: int | None = None,
) -> Report:
    """Run a check set over a seeded random factorization corpus."""
    ids = sorted(check_ids) if check_ids else list(DEFAULT_CORPUS_CHECKS)
    if count < 0:
        raise PreconditionError("count must be non-negative")
    if count == 0:
        members = []
    elif size is None and nvars is None:
        members = corpus(config.seed, config.p, count)
    else:
        profiles = ("homog1", "homog2", "mixed")
        members = []
        for k in range(count):
            spec = CorpusSpec(
                seed=config.seed + 1000 * (k // len(profiles)),
                size=size or 2,
                nvars=nvars or 2,
                profile=profiles[k % len(profiles)],
            )
            members.append(corpus_member(spec, config.p))
    rows = []
    for mf in members:
        rows.extend(run_checks(ids, instance_from_mf(mf), config))
    rows.sort(key=lambda c: (c.check_id, c.instance))
    meta = {
        "kind": "corpus",
        "count": count,
        "size": size,
        "nvars": nvars,
        "checks": ids,
        "members": [mf.label for mf in members],
    }
    return Report(config, rows, meta)


@dataclass(frozen=True)
class OmegaInput:
    ring_label: str
    omega: ModulePresentation
    tau: int | None = None


def omega_instance(ring: RingPresentation, omega_input: OmegaInput, sg=None) -> ExampleInstance:
    golden = {} if omega_input.tau is None else {"tau": omega_input.tau}
    return ExampleInstance(
        key=f"{ring.label}-omega",
        description="user-supplied canonical module",
        default_nmax=24,
        provenance="supplied",
        golden=golden,
        ring=ring,
        modules={"A": ring.as_module(), "omega": omega_input.omega},
        omega=omega_input.omega,
        sg=sg,
    )


def omega_bounds_check(inst: ExampleInstance, config: RunConfig) -> TheoremCheck:
    """Both first-coefficient bounds plus the equality characterizations,
    merged into one verdict.  Rejects presentations with the wrong e0."""
    sub = run_checks(["omega-1", "omega-2"], inst, config)
    order = {"fails": 0, "inconclusive": 1, "holds": 2}
    verdict = min((c.verdict for c in sub), key=lambda v: order[v])
    witness = {c.check_id: {"verdict": c.verdict, **c.witness} for c in sub}
    return TheoremCheck("omega-bounds", inst.key, verdict, _clean(witness))
