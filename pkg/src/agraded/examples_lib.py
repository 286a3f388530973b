"""Built-in example library: rings, modules, and matrix factorizations with
frozen golden invariants.

Each entry records where its golden numbers come from ("oracle": an
independent computation that never touches the graded engine; "frozen": an
engine value pinned at first build and treated as a regression guard).
Parametric families are recognized by key prefix: "dvr-a1,..,ak;e" builds
diagonal one-variable factorizations, "semigroup-a,b,c" builds a semigroup
ring with its canonical module from the set-arithmetic oracle.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import DEFAULT_PRIME, PreconditionError
from .matfac import MatrixFactorization, mf_from_strings
from .presentations import ModulePresentation, RingPresentation, ring_from_strings
from .semigroup import (
    NumericalSemigroup,
    omega_presentation,
    ring_presentation,
    semigroup,
)


@dataclass
class ExampleInstance:
    key: str
    description: str
    default_nmax: int
    provenance: str
    golden: dict
    ring: RingPresentation
    modules: dict[str, ModulePresentation] = field(default_factory=dict)
    mf: MatrixFactorization | None = None
    omega: ModulePresentation | None = None
    sg: NumericalSemigroup | None = None


def _hyper_y3(p: int) -> ExampleInstance:
    mf = mf_from_strings([["x", "y"], ["-y^2", "0"]], "adjugate", ["x", "y"], p, "hyper-y3")
    return ExampleInstance(
        key="hyper-y3",
        description="rank-2 module over k[x,y]/(y^3) whose associated graded module has depth 0 while the Hilbert function still never decreases",
        default_nmax=10,
        provenance="frozen: engine values pinned at first build; depth-0 witness is b_1(x,M) >= 1",
        golden={
            "e": 3,
            "mu": 2,
            "i_M": 1,
            "h_A": (1, 1, 1),
            "h_M": (2, 0, 1),
            "h_K": (2, 1),
            "H_M_prefix": (2, 2, 3, 3),
            "depth_G_M": 0,
            "l_M": (2, 1),
            "type_M": 2,
        },
        ring=mf.ring(),
        modules={"M": mf.module(), "K": mf.syzygy_module()},
        mf=mf,
    )


def _paper_s5(p: int) -> ExampleInstance:
    ring = ring_from_strings(
        ["x", "y", "z", "u", "v"],
        ["z^2", "z*u", "z*v", "u*v", "y*z - u^3", "x*z - v^3"],
        p,
        "A5",
    )
    z, u, v = ring.poly("z"), ring.poly("u"), ring.poly("v")
    E = ModulePresentation(ring, 1, ((z,),), "E")
    M = ModulePresentation(ring, 1, ((z,), (u,), (v,)), "M")
    return ExampleInstance(
        key="paper-s5",
        description="two-dimensional CM ring with depth G(A) = 0 where the third-coefficient inequality mu(E)e3(A) >= e3(M)+e3(E) fails",
        default_nmax=14,
        provenance="frozen: engine values pinned at first build; E is A/(z), M is the cyclic module killed by (z,u,v)",
        golden={
            "h_A": (1, 3, 0, 3, -1),
            "e_A": (6, 8, 3, -1),
            "h_E": (1, 2, 2),
            "h_M": (1,),
            "mu_E": 1,
            "e3_A": -1,
            "e3_E": 0,
            "e3_M": 0,
            "H_A_prefix": (1, 5, 9, 16, 22),
        },
        ring=ring,
        modules={"E": E, "M": M},
    )


def _ord2(p: int) -> ExampleInstance:
    mf = mf_from_strings([["x", "y"], ["y", "x+y"]], "adjugate", ["x", "y"], p, "generic-2x2-ord2")
    return ExampleInstance(
        key="generic-2x2-ord2",
        description="2x2 factorization with order-2 determinant: the cokernel attains e0 = mu, the extremal (Ulrich) case",
        default_nmax=10,
        provenance="frozen: engine values pinned at first build; leading-form determinant is nonzero",
        golden={
            "e": 2,
            "mu": 2,
            "i_M": 1,
            "h_M": (2,),
            "e0_M": 2,
            "type_M": 2,
            "leading_det_nonzero": True,
        },
        ring=mf.ring(),
        modules={"M": mf.module(), "K": mf.syzygy_module()},
        mf=mf,
    )


def _ord3(p: int) -> ExampleInstance:
    mf = mf_from_strings([["x", "y^2"], ["y", "x^2"]], "adjugate", ["x", "y"], p, "generic-2x2-ord3")
    return ExampleInstance(
        key="generic-2x2-ord3",
        description="2x2 factorization with order-3 determinant: neither the cokernel nor its syzygy is extremal, but one of them has chi_1 = 0",
        default_nmax=10,
        provenance="frozen: engine values pinned at first build; chi_1 dichotomy computed from both h-polynomials",
        golden={
            "e": 3,
            "mu": 2,
            "i_M": 1,
            "h_M": (2, 1),
            "h_K": (2, 0, 1),
            "chi1_M": 0,
            "chi1_K": 1,
            "l_M": (2, 1),
            "ulrich_M": False,
            "ulrich_K": False,
        },
        ring=mf.ring(),
        modules={"M": mf.module(), "K": mf.syzygy_module()},
        mf=mf,
    )


def _dvr(key: str, p: int) -> ExampleInstance:
    body = key[len("dvr-"):]
    try:
        exps_part, e_part = body.split(";")
        exps = tuple(int(t) for t in exps_part.split(","))
        e = int(e_part)
    except ValueError:
        raise PreconditionError(
            f"bad DVR key {key!r}; expected dvr-a1,..,ak;e with integers"
        ) from None
    if not exps or any(a < 1 or a > e for a in exps) or e < 2:
        raise PreconditionError(f"DVR exponents must satisfy 1 <= a_i <= e and e >= 2, got {key!r}")
    phi = [[f"y^{a}" if i == j else "0" for j in range(len(exps))] for i, a in enumerate(exps)]
    psi = [[f"y^{e - a}" if i == j else "0" for j in range(len(exps))] for i, a in enumerate(exps)]
    for i, a in enumerate(exps):
        if e - a == 0:
            psi[i][i] = "1"
    mf = mf_from_strings(phi, psi, ["y"], p, key)
    golden = {
        "e": e,
        "exponents": tuple(sorted(exps)),
        "i_M": min(exps),
        "h_M": tuple(
            sum(1 for a in exps if a > j) for j in range(max(exps))
        ),
        "syz_exponents": tuple(sorted(e - a for a in exps if e - a > 0)),
        "free": all(a == e for a in exps),
    }
    return ExampleInstance(
        key=key,
        description=f"one-variable diagonal factorization with exponents {exps} of y^{e}",
        default_nmax=max(10, e + 3),
        provenance="oracle: every invariant has a closed form from the exponent multiset",
        golden=golden,
        ring=mf.ring(),
        modules={"M": mf.module(), "K": mf.syzygy_module()},
        mf=mf,
    )


_SEMIGROUP_GOLDEN = {
    (3, 4, 5): {"tau": 2, "frobenius": 2, "h_A": (1, 2), "h_omega": (2, 1), "e1_A": 2, "chi1_A": 0},
    (4, 5, 6): {"tau": 1, "frobenius": 7, "h_A": (1, 2, 1), "h_omega": (1, 2, 1), "e1_A": 4, "chi1_A": 1},
    (3, 5, 7): {"tau": 2, "frobenius": 4, "h_A": (1, 2), "h_omega": (2, 1), "e1_A": 2, "chi1_A": 0},
    (5, 6, 7): {"tau": 2, "frobenius": 9, "h_A": (1, 2, 2), "h_omega": (2, 2, 1), "e1_A": 6, "chi1_A": 2},
}


def _semigroup_example(key: str, p: int, n_max: int = 12) -> ExampleInstance:
    body = key[len("semigroup-"):]
    try:
        gens = tuple(int(t) for t in body.split(","))
    except ValueError:
        raise PreconditionError(f"bad semigroup key {key!r}; expected semigroup-a,b,c") from None
    sg = semigroup(gens)
    ring = ring_presentation(sg, p, n_max=n_max)
    omega = omega_presentation(sg, ring, n_max=n_max)
    golden = dict(_SEMIGROUP_GOLDEN.get(sg.gens, {}))
    golden.setdefault("tau", sg.type)
    golden.setdefault("frobenius", sg.frobenius)
    return ExampleInstance(
        key=key,
        description=f"one-dimensional semigroup ring for exponents {sg.gens} with its canonical module",
        default_nmax=n_max,
        provenance="oracle: membership set arithmetic in one parameter, computed independently of the engine",
        golden=golden,
        ring=ring,
        modules={"A": ring.as_module(), "omega": omega},
        omega=omega,
        sg=sg,
    )


def _ci_3var(p: int) -> ExampleInstance:
    ring = ring_from_strings(["x", "y", "z"], ["x^2", "y^3"], p, "ci3")
    return ExampleInstance(
        key="ci-3var",
        description="one-dimensional quotient of k[x,y,z] by the regular sequence x^2, y^3",
        default_nmax=10,
        provenance="oracle: monomial counting, H(n) = #{(a,b): a <= 1, b <= 2, a+b <= n}",
        golden={
            "H_prefix": (1, 3, 5, 6, 6, 6),
            "h_A": (1, 2, 2, 1),
            "e0_A": 6,
            "dim": 1,
        },
        ring=ring,
        modules={"A": ring.as_module()},
    )


_FIXED = {
    "hyper-y3": _hyper_y3,
    "paper-s5": _paper_s5,
    "generic-2x2-ord2": _ord2,
    "generic-2x2-ord3": _ord3,
    "ci-3var": _ci_3var,
}

_SHIPPED_PARAMETRIC = (
    "dvr-1;2",
    "dvr-2,3;5",
    "semigroup-3,4,5",
    "semigroup-4,5,6",
    "semigroup-3,5,7",
    "semigroup-5,6,7",
)


def example_keys() -> list[str]:
    return list(_FIXED) + list(_SHIPPED_PARAMETRIC)


def build_example(key: str, p: int = DEFAULT_PRIME) -> ExampleInstance:
    if key in _FIXED:
        return _FIXED[key](p)
    if key.startswith("dvr-"):
        return _dvr(key, p)
    if key.startswith("semigroup-"):
        return _semigroup_example(key, p)
    raise PreconditionError(
        f"unknown example {key!r}; available: {', '.join(example_keys())} "
        "plus the parametric families dvr-a1,..,ak;e and semigroup-a,b,c"
    )
