"""Command-line surface: windowed invariants, factorization tools and the
check harness behind one `agraded` entry point.

Every report embeds the effective run configuration (prime, seed, window,
slack, memory cap), so no output presents a truncated computation as an
all-degrees statement.  Seeded runs are byte-identical.  Exit codes: 0 for
success (holds or inconclusive verdicts included), 1 when any check fails
or an internal cross-check trips, 2 for input or configuration errors.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys

from .core import (
    DEFAULT_PRIME,
    DimensionMismatch,
    InternalCheckError,
    ParseError,
    PreconditionError,
    ResourceLimitError,
)
from .examples_lib import ExampleInstance, build_example, example_keys
from .io import Document, load_document_file
from .koszul import koszul_w
from .matfac import corpus, mf_invariants
from .presentations import (
    DEFAULT_MEMORY_CAP,
    DEFAULT_SLACK,
    h_polynomial,
    hilbert_function,
    hilbert_function_ideal,
    minimal_generators,
)
from .series import SeriesWindowError, chi_of, e_coefficients
from .superficial import b_sequence, depth_G_estimate, random_form
from .tor import l_polynomial_from_mf
from .verify import (
    DEFAULT_CORPUS_CHECKS,
    Report,
    RunConfig,
    check_statement,
    corpus_run,
    instance_from_mf,
    registry_ids,
    requirement_gap,
    resolve_check_id,
    run_checks,
)

ENV_PRIME = "AGRADED_PRIME"
ENV_SEED = "AGRADED_SEED"


def _env_int(name: str) -> int | None:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return None
    try:
        return int(raw)
    except ValueError:
        raise PreconditionError(f"environment variable {name} must be an integer, got {raw!r}")


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--prime", type=int, help=f"field characteristic (default {DEFAULT_PRIME}; env {ENV_PRIME})")
    common.add_argument("--seed", type=int, help=f"RNG seed for all random draws (default 0; env {ENV_SEED})")
    common.add_argument("--nmax", type=int, help="truncation window (default 24, or the example's own)")
    common.add_argument("--slack", type=int, help=f"stabilization tail length (default {DEFAULT_SLACK})")
    common.add_argument("--memory-cap", type=int, help=f"monomial budget per engine (default {DEFAULT_MEMORY_CAP})")
    common.add_argument("--format", choices=("table", "json"), default="table", help="output format")

    source = argparse.ArgumentParser(add_help=False)
    source.add_argument("--example", metavar="KEY", help="built-in example key (see `examples --list`)")
    source.add_argument("--input", metavar="FILE", help="JSON input document")

    parser = argparse.ArgumentParser(
        prog="agraded",
        description="Exact Hilbert functions, Hilbert coefficients and named "
        "inequality checks for modules over local quotient rings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("hf", parents=[common, source], help="Hilbert function H(M, n) on the window")
    p.add_argument("--module", default="A", help="module label (default A, the ring itself)")
    p.add_argument("--ideal-adic", action="store_true", help="use the document's ideal_I instead of the maximal ideal")

    p = sub.add_parser("coeffs", parents=[common, source], help="h-polynomial, e_i and chi_i coefficients")
    p.add_argument("--module", default="A", help="module label (default A)")
    p.add_argument("--imax", type=int, default=3, help="highest coefficient index (default 3)")

    p = sub.add_parser("superficial", parents=[common, source], help="seeded superficial-form draw with b-sequence and depth estimate")
    p.add_argument("--module", default="A", help="module label (default A)")
    p.add_argument("--tries", type=int, default=5, help="draw attempts before giving up (default 5)")

    p = sub.add_parser("mf", parents=[common, source], help="matrix factorization tools")
    p.add_argument("action", choices=("check", "invariants", "dual", "dvr", "corpus"))
    p.add_argument("--label", help="factorization label when the document holds several")
    p.add_argument("--exponents", metavar="a1,..,ak;e", help="dvr action: diagonal exponents and the power e")
    p.add_argument("--count", type=int, default=12, help="corpus action: number of members (default 12)")

    sub.add_parser("tor", parents=[common, source], help="Tor-length series and the series identity for a factorization")

    p = sub.add_parser("koszul", parents=[common, source], help="Koszul correction w(y, n) for seeded generic forms")
    p.add_argument("--r", type=int, default=1, help="number of forms (default 1)")

    p = sub.add_parser("verify", parents=[common, source], help="run named checks on an example or input document")
    p.add_argument("--checks", required=True, metavar="id1,id2,...", help="comma-separated check ids (see `verify --list-checks`)")

    p = sub.add_parser("corpus", parents=[common], help="run checks over a seeded random factorization corpus")
    p.add_argument("--count", type=int, default=20, help="corpus size (default 20)")
    p.add_argument("--shape", choices=("2x2", "3x3"), help="restrict matrix size")
    p.add_argument("--vars", type=int, choices=(2, 3), help="restrict variable count")
    p.add_argument("--checks", metavar="id1,id2,...", help=f"check ids (default {','.join(DEFAULT_CORPUS_CHECKS)})")

    p = sub.add_parser("examples", parents=[common], help="list built-in examples")
    p.add_argument("--list", action="store_true", help="enumerate keys with descriptions and provenance")
    p.add_argument("--checks-list", action="store_true", help="enumerate registered check ids instead")
    return parser


def _resolve_config(args, doc: Document | None, inst: ExampleInstance | None) -> RunConfig:
    p = args.prime
    if p is None and doc is not None:
        p = doc.prime
    if p is None:
        p = _env_int(ENV_PRIME)
    if p is None:
        p = DEFAULT_PRIME
    seed = args.seed if args.seed is not None else _env_int(ENV_SEED)
    if seed is None:
        seed = 0
    n_max = args.nmax
    if n_max is None and inst is not None:
        n_max = inst.default_nmax
    if n_max is None:
        n_max = 24
    if n_max < 1:
        raise PreconditionError("--nmax must be at least 1")
    slack = args.slack if args.slack is not None else DEFAULT_SLACK
    cap = args.memory_cap if args.memory_cap is not None else DEFAULT_MEMORY_CAP
    return RunConfig(p=p, seed=seed, n_max=n_max, slack=slack, memory_cap=cap, fmt=args.format)


def instances_from_document(doc: Document) -> list[ExampleInstance]:
    out = []
    if doc.ring is not None:
        modules = dict(doc.modules)
        omega = None
        golden = {}
        if doc.omega_label is not None:
            omega = doc.modules[doc.omega_label]
            modules.setdefault("omega", omega)
            if doc.tau is not None:
                golden["tau"] = doc.tau
        out.append(
            ExampleInstance(
                key=doc.ring.label,
                description="input document",
                default_nmax=24,
                provenance="user input",
                golden=golden,
                ring=doc.ring,
                modules=modules,
                omega=omega,
            )
        )
    for name in sorted(doc.mfs):
        out.append(instance_from_mf(doc.mfs[name], "input document"))
    return out


def _load_source(args) -> tuple[Document | None, list[ExampleInstance]]:
    if getattr(args, "example", None) and getattr(args, "input", None):
        raise PreconditionError("pass either --example or --input, not both")
    if getattr(args, "example", None):
        prime = args.prime if args.prime is not None else (_env_int(ENV_PRIME) or DEFAULT_PRIME)
        return None, [build_example(args.example, prime)]
    if getattr(args, "input", None):
        doc = load_document_file(args.input)
        return doc, instances_from_document(doc)
    raise PreconditionError("this command needs --example KEY or --input FILE")


def _single_instance(args) -> tuple[Document | None, ExampleInstance]:
    doc, insts = _load_source(args)
    if len(insts) == 1:
        return doc, insts[0]
    # a document with one ring plus factorizations targets the ring here
    ring_insts = [i for i in insts if i.mf is None]
    if len(ring_insts) == 1:
        return doc, ring_insts[0]
    keys = [i.key for i in insts]
    raise PreconditionError(f"expected one instance, document describes {keys}; split the input")


def _pick_module(inst: ExampleInstance, label: str):
    modules = dict(inst.modules)
    if "A" not in modules:
        modules["A"] = inst.ring.as_module()
    if label not in modules:
        raise PreconditionError(f"no module {label!r}; available: {sorted(modules)}")
    return modules[label]


def _pick_mf(doc: Document | None, inst: ExampleInstance, label: str | None):
    if doc is not None and doc.mfs:
        if label is None:
            if len(doc.mfs) > 1:
                raise PreconditionError(f"several factorizations {sorted(doc.mfs)}; pick one with --label")
            return next(iter(doc.mfs.values()))
        if label not in doc.mfs:
            raise PreconditionError(f"no factorization {label!r}; available: {sorted(doc.mfs)}")
        return doc.mfs[label]
    if inst.mf is None:
        raise PreconditionError(f"instance {inst.key!r} carries no matrix factorization")
    return inst.mf


def _emit(payload: dict, config: RunConfig, table_lines: list[str]) -> None:
    if config.fmt == "json":
        doc = {"config": config.as_dict()}
        doc.update(payload)
        print(json.dumps(doc, indent=2))
    else:
        print(f"# p={config.p} seed={config.seed} n_max={config.n_max} "
              f"slack={config.slack} memory_cap={config.memory_cap}")
        for line in table_lines:
            print(line)


def _cmd_hf(args) -> int:
    doc, inst = _single_instance(args)
    config = _resolve_config(args, doc, inst)
    module = _pick_module(inst, args.module)
    if args.ideal_adic:
        if doc is None or doc.ideal_I is None:
            raise PreconditionError("--ideal-adic needs an input document with 'ideal_I'")
        series = hilbert_function_ideal(
            module, doc.ideal_I, config.n_max, config.slack, memory_cap=config.memory_cap
        )
        kind = "ideal-adic"
    else:
        series = hilbert_function(module, config.n_max, config.memory_cap)
        kind = "maximal-ideal"
    payload = {
        "command": "hf",
        "instance": inst.key,
        "module": args.module,
        "filtration": kind,
        "window": [0, config.n_max],
        "values": series.values,
    }
    _emit(payload, config, [
        f"# H({args.module}, n) for n = 0..{config.n_max} ({kind})",
        ",".join(str(v) for v in series.values),
    ])
    return 0


def _cmd_coeffs(args) -> int:
    doc, inst = _single_instance(args)
    config = _resolve_config(args, doc, inst)
    module = _pick_module(inst, args.module)
    h = h_polynomial(module, config.n_max, config.slack, config.memory_cap)
    imax = max(args.imax, 0)
    es = e_coefficients(h, imax)
    chis = [chi_of(h, i) for i in range(imax + 1)]
    mu = minimal_generators(module)
    payload = {
        "command": "coeffs",
        "instance": inst.key,
        "module": args.module,
        "window": [0, config.n_max],
        "h": list(h.coeffs),
        "dim": h.dim_r,
        "postulation": h.postulation,
        "mu": mu,
        "e": es,
        "chi": chis,
    }
    _emit(payload, config, [
        f"# invariants of {args.module} on the window 0..{config.n_max}",
        f"h      : {list(h.coeffs)}",
        f"dim    : {h.dim_r}",
        f"postul.: {h.postulation}",
        f"mu     : {mu}",
        f"e      : {es}",
        f"chi    : {chis}",
    ])
    return 0


def _cmd_superficial(args) -> int:
    doc, inst = _single_instance(args)
    config = _resolve_config(args, doc, inst)
    module = _pick_module(inst, args.module)
    rng = random.Random(repr((config.seed, "cli-superficial", inst.key, args.module)))
    drawn = None
    for _ in range(max(args.tries, 1)):
        form = random_form(module.ring, rng, provenance="cli draw")
        bs = b_sequence(module, form, config.n_max, config.slack, config.memory_cap)
        drawn = (form, bs)
        if bs.verdict == "superficial":
            break
    form, bs = drawn
    depth = depth_G_estimate(
        module, config.n_max, tries=max(args.tries, 1), seed=config.seed,
        slack=config.slack, memory_cap=config.memory_cap,
    )
    payload = {
        "command": "superficial",
        "instance": inst.key,
        "module": args.module,
        "window": [0, config.n_max],
        "form": list(form.coeffs),
        "b_values": bs.values,
        "verdict": bs.verdict,
        "depth_estimate": depth.estimate,
        "depth_dim": depth.dim,
        "depth_exact": depth.exact,
        "depth_witness": depth.witness,
    }
    _emit(payload, config, [
        f"# random form on {args.module}, window 0..{config.n_max}",
        f"form coefficients : {list(form.coeffs)}",
        f"b-sequence        : {bs.values}",
        f"verdict           : {bs.verdict}",
        f"depth G estimate  : {depth.estimate} (dim {depth.dim}, exact={depth.exact})",
    ])
    return 0


def _cmd_mf(args) -> int:
    if args.action == "dvr":
        if not args.exponents:
            raise PreconditionError("mf dvr needs --exponents a1,..,ak;e")
        args.example = f"dvr-{args.exponents}"
        args.input = None
    if args.action == "corpus":
        config = _resolve_config(args, None, None)
        members = corpus(config.seed, config.p, args.count)
        payload = {
            "command": "mf-corpus",
            "count": args.count,
            "members": [
                {"label": m.label, "size": m.size, "nvars": m.nvars, "e": m.e}
                for m in members
            ],
        }
        _emit(payload, config, [f"{m.label}  size={m.size} vars={m.nvars} e={m.e}" for m in members])
        return 0
    doc, inst = _single_instance(args)
    config = _resolve_config(args, doc, inst)
    mf = _pick_mf(doc, inst, args.label)
    if args.action == "dual":
        mf = mf.transpose_pair()
    inv = mf_invariants(mf, config.memory_cap)
    payload = {
        "command": f"mf-{args.action}",
        "label": mf.label,
        "size": mf.size,
        "nvars": mf.nvars,
        "window": [0, config.n_max],
        "invariants": {k: int(v) for k, v in sorted(inv.items())},
    }
    lines = [f"# factorization {mf.label} ({mf.size}x{mf.size}, {mf.nvars} variables)"]
    if args.action == "check":
        payload["factorization_ok"] = True
        lines.append("phi psi = psi phi = f I : verified at parse time")
    lines.extend(f"{k:<14}: {v}" for k, v in sorted(inv.items()))
    _emit(payload, config, lines)
    return 0


def _cmd_tor(args) -> int:
    doc, inst = _single_instance(args)
    config = _resolve_config(args, doc, inst)
    mf = _pick_mf(doc, inst, getattr(args, "label", None))
    ts = l_polynomial_from_mf(mf, config.n_max, config.slack, config.memory_cap)
    payload = {
        "command": "tor",
        "label": mf.label,
        "window": [0, config.n_max],
        "tor1_lengths": ts.lengths.values,
        "l_coeffs": list(ts.l_coeffs),
        "l_from_identity": list(ts.l_from_identity),
        "identity_agrees": list(ts.l_coeffs) == list(ts.l_from_identity),
    }
    _emit(payload, config, [
        f"# Tor-length series for {mf.label}, window 0..{config.n_max}",
        f"tor1 lengths    : {ts.lengths.values}",
        f"l coefficients  : {list(ts.l_coeffs)}",
        f"series identity : {list(ts.l_from_identity)} (agrees)",
    ])
    return 0


def _cmd_koszul(args) -> int:
    doc, inst = _single_instance(args)
    config = _resolve_config(args, doc, inst)
    ring = inst.ring
    if args.r < 1:
        raise PreconditionError("--r must be at least 1")
    rng = random.Random(repr((config.seed, "cli-koszul", inst.key, args.r)))
    forms = [random_form(ring, rng, provenance="cli draw") for _ in range(args.r)]
    ws = koszul_w(ring, forms, config.n_max, config.slack, config.memory_cap)
    payload = {
        "command": "koszul",
        "instance": inst.key,
        "r": args.r,
        "window": [0, config.n_max],
        "forms": [list(f.coeffs) for f in forms],
        "w": ws.values,
        "vanishing_from": ws.vanishing_from,
        "warnings": ws.warnings,
    }
    lines = [
        f"# w(y, n) for {args.r} seeded forms on {inst.key}, window 0..{config.n_max}",
        f"w            : {ws.values}",
        f"zero from    : {ws.vanishing_from}",
    ]
    lines.extend(f"warning: {w}" for w in ws.warnings)
    _emit(payload, config, lines)
    return 0


def _report_exit(report: Report, config: RunConfig) -> int:
    if config.fmt == "json":
        print(report.to_json())
    else:
        print(report.to_table())
    return report.exit_code


def _cmd_verify(args) -> int:
    doc, insts = _load_source(args)
    inst_default = insts[0] if len(insts) == 1 else None
    config = _resolve_config(args, doc, inst_default)
    ids = [tok for tok in (t.strip() for t in args.checks.split(",")) if tok]
    if not ids:
        raise PreconditionError("--checks is empty")
    ids = sorted({resolve_check_id(cid) for cid in ids})
    # run each check on the instances that carry its inputs; a check no
    # instance can support is an input error
    gaps = {}
    rows = []
    for inst in insts:
        runnable = []
        for cid in ids:
            gap = requirement_gap(cid, inst)
            if gap is None:
                runnable.append(cid)
            else:
                gaps.setdefault(cid, gap)
        if runnable:
            rows.extend(run_checks(runnable, inst, config))
    orphans = [cid for cid in ids if not any(r.check_id == cid for r in rows)]
    if orphans:
        parts = [f"check {cid!r} needs {gaps[cid]}" for cid in orphans]
        raise PreconditionError("; ".join(parts) + "; no instance in the input provides that")
    rows.sort(key=lambda c: (c.check_id, c.instance))
    meta = {"kind": "verify", "checks": ids, "instances": [i.key for i in insts]}
    return _report_exit(Report(config, rows, meta), config)


def _cmd_corpus(args) -> int:
    config = _resolve_config(args, None, None)
    ids = None
    if args.checks:
        ids = [tok for tok in (t.strip() for t in args.checks.split(",")) if tok]
    size = int(args.shape[0]) if args.shape else None
    report = corpus_run(config, ids, count=args.count, size=size, nvars=args.vars)
    return _report_exit(report, config)


def _cmd_examples(args) -> int:
    config = _resolve_config(args, None, None)
    if args.checks_list:
        payload = {
            "command": "checks",
            "checks": [{"id": cid, "statement": check_statement(cid)} for cid in registry_ids()],
        }
        _emit(payload, config, [f"{cid:<22} {check_statement(cid)}" for cid in registry_ids()])
        return 0
    rows = []
    for key in example_keys():
        inst = build_example(key, config.p)
        rows.append(
            {
                "key": key,
                "description": inst.description,
                "default_nmax": inst.default_nmax,
                "provenance": inst.provenance,
                "modules": sorted(inst.modules),
                "has_mf": inst.mf is not None,
                "has_omega": inst.omega is not None,
            }
        )
    payload = {"command": "examples", "examples": rows}
    lines = []
    for row in rows:
        lines.append(f"{row['key']}")
        lines.append(f"    {row['description']}")
        lines.append(f"    provenance: {row['provenance']}; default n_max {row['default_nmax']}")
    lines.append("parametric families: dvr-a1,..,ak;e  and  semigroup-a,b,c")
    _emit(payload, config, lines)
    return 0


_DISPATCH = {
    "hf": _cmd_hf,
    "coeffs": _cmd_coeffs,
    "superficial": _cmd_superficial,
    "mf": _cmd_mf,
    "tor": _cmd_tor,
    "koszul": _cmd_koszul,
    "verify": _cmd_verify,
    "corpus": _cmd_corpus,
    "examples": _cmd_examples,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except (PreconditionError, DimensionMismatch, ParseError) as err:
        print(f"input error: {err}", file=sys.stderr)
        return 2
    except SeriesWindowError as err:
        print(f"window too short: {err}; raise --nmax", file=sys.stderr)
        return 2
    except ResourceLimitError as err:
        print(f"resource limit: {err}; raise --memory-cap or lower --nmax", file=sys.stderr)
        return 2
    except InternalCheckError as err:
        print(f"internal cross-check failed: {err}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
