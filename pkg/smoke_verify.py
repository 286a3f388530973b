"""Scratch runner: every registered check on every applicable example, plus
corpus plumbing.  Asserts the pinned verdicts and that nothing fails."""

import time

from agraded.core import PreconditionError
from agraded.examples_lib import build_example
from agraded.verify import (
    DEFAULT_CORPUS_CHECKS,
    RunConfig,
    corpus_run,
    omega_bounds_check,
    registry_ids,
    run_check,
    run_checks,
)

MF_CHECKS = [
    "thm1-monotone", "mtHy-1", "mtHy-2", "mtHy-3", "mtHy-4",
    "the2-1", "the2-2", "dim0form", "dim1-3", "U1", "dim1a",
    "Ur1", "U3", "eqchar", "exampleF", "beqn", "geqgeq",
    "h-nonincreasing", "ulrich", "muI", "c2thMo", "existR-1",
    "existR-2", "suffgen", "marley-identity",
]

PLAN = {
    "hyper-y3": (10, MF_CHECKS),
    "generic-2x2-ord2": (10, MF_CHECKS),
    "generic-2x2-ord3": (10, MF_CHECKS),
    "dvr-1;2": (10, [c for c in MF_CHECKS if c not in ("suffgen",)]),
    "dvr-2,3;5": (10, [c for c in MF_CHECKS if c not in ("suffgen",)]),
    "paper-s5": (14, ["the2-counterexample", "suffgen", "geqgeq"]),
    "ci-3var": (10, ["c2thMo", "suffgen", "marley-identity", "muI", "geqgeq"]),
    "semigroup-3,4,5": (12, ["omega-1", "omega-2", "omega-3", "muI", "suffgen", "marley-identity", "geqgeq"]),
    "semigroup-4,5,6": (12, ["omega-1", "omega-2", "omega-3"]),
    "semigroup-3,5,7": (12, ["omega-1", "omega-2", "omega-3"]),
    "semigroup-5,6,7": (12, ["omega-1", "omega-2", "omega-3"]),
}

PINNED = {
    ("hyper-y3", "thm1-monotone"): "holds",
    ("hyper-y3", "mtHy-1"): "holds",
    ("hyper-y3", "mtHy-2"): "holds",
    ("hyper-y3", "mtHy-3"): "holds",
    ("hyper-y3", "mtHy-4"): "holds",
    ("hyper-y3", "U1"): "holds",
    ("hyper-y3", "dim1a"): "holds",
    ("hyper-y3", "Ur1"): "holds",
    ("hyper-y3", "eqchar"): "holds",
    ("hyper-y3", "exampleF"): "holds",
    ("hyper-y3", "beqn"): "holds",
    ("hyper-y3", "muI"): "holds",
    ("hyper-y3", "the2-1"): "inconclusive",
    ("hyper-y3", "the2-2"): "inconclusive",
    ("hyper-y3", "h-nonincreasing"): "inconclusive",
    ("hyper-y3", "dim0form"): "inconclusive",
    ("hyper-y3", "c2thMo"): "inconclusive",
    ("hyper-y3", "suffgen"): "holds",
    ("hyper-y3", "marley-identity"): "holds",
    ("generic-2x2-ord2", "exampleF"): "holds",
    ("generic-2x2-ord2", "ulrich"): "holds",
    ("generic-2x2-ord2", "mtHy-4"): "holds",
    ("generic-2x2-ord2", "eqchar"): "holds",
    ("generic-2x2-ord2", "U1"): "holds",
    ("generic-2x2-ord2", "U3"): "holds",
    ("generic-2x2-ord2", "dim1-3"): "holds",
    ("generic-2x2-ord3", "exampleF"): "holds",
    ("generic-2x2-ord3", "eqchar"): "holds",
    ("generic-2x2-ord3", "h-nonincreasing"): "holds",
    ("generic-2x2-ord3", "muI"): "holds",
    ("dvr-2,3;5", "dim0form"): "holds",
    ("dvr-2,3;5", "mtHy-1"): "holds",
    ("dvr-2,3;5", "thm1-monotone"): "inconclusive",
    ("dvr-2,3;5", "geqgeq"): "holds",
    ("dvr-1;2", "beqn"): "holds",
    ("paper-s5", "the2-counterexample"): "holds",
    ("paper-s5", "suffgen"): "holds",
    ("paper-s5", "geqgeq"): "inconclusive",
    ("ci-3var", "c2thMo"): "holds",
    ("ci-3var", "suffgen"): "holds",
    ("ci-3var", "marley-identity"): "holds",
    ("ci-3var", "geqgeq"): "holds",
    ("semigroup-3,4,5", "omega-1"): "holds",
    ("semigroup-3,4,5", "omega-2"): "holds",
    ("semigroup-3,4,5", "omega-3"): "holds",
    ("semigroup-4,5,6", "omega-1"): "holds",
    ("semigroup-4,5,6", "omega-2"): "holds",
    ("semigroup-3,5,7", "omega-1"): "holds",
    ("semigroup-3,5,7", "omega-2"): "holds",
    ("semigroup-5,6,7", "omega-1"): "holds",
    ("semigroup-5,6,7", "omega-2"): "holds",
}

fails = []
for key, (nmax, checks) in PLAN.items():
    inst = build_example(key)
    config = RunConfig(n_max=nmax, seed=7)
    t0 = time.time()
    rows = run_checks(checks, inst, config)
    dt = time.time() - t0
    for row in rows:
        pin = PINNED.get((key, row.check_id))
        tag = ""
        if pin is not None and row.verdict != pin:
            tag = f"  << EXPECTED {pin}"
            fails.append((key, row.check_id, row.verdict, pin, row.witness))
        elif pin is None and row.verdict == "fails":
            tag = "  << UNEXPECTED fails"
            fails.append((key, row.check_id, row.verdict, "not-fails", row.witness))
        note = row.witness.get("note", "")
        print(f"{key:<18} {row.check_id:<20} {row.verdict:<13} {note[:60]}{tag}")
    print(f"  [{key}: {dt:.1f}s]")

# merged omega gate
inst = build_example("semigroup-5,6,7")
chk = omega_bounds_check(inst, RunConfig(n_max=12, seed=7))
print("omega-bounds merged:", chk.verdict)
assert chk.verdict == "holds", chk.witness

# corpus plumbing: default checks, byte-identical reruns, empty corpus
cfg = RunConfig(n_max=10, seed=11)
t0 = time.time()
rep1 = corpus_run(cfg, None, count=6)
rep2 = corpus_run(cfg, None, count=6)
print(f"corpus 6 members: {rep1.counts()} in {time.time()-t0:.1f}s")
assert rep1.to_json() == rep2.to_json(), "corpus rerun not byte-identical"
assert rep1.counts()["fails"] == 0, rep1.to_table()
assert rep1.exit_code == 0

empty = corpus_run(cfg, None, count=0)
assert empty.exit_code == 0 and empty.rows == []

# constrained corpus with case-insensitive id, as in the shipped docs
rep3 = corpus_run(RunConfig(n_max=10, seed=3), ["thm1-monotone", "mtHy-1", "Beqn"], count=6, size=2, nvars=2)
print("constrained corpus:", rep3.counts())
assert rep3.counts()["fails"] == 0, rep3.to_table()
assert all(r.verdict == "holds" for r in rep3.rows), rep3.to_table()

# error paths
try:
    run_check("nope", build_example("hyper-y3"), cfg)
    raise SystemExit("unknown id accepted")
except PreconditionError:
    pass
try:
    run_check("beqn", build_example("ci-3var"), cfg)
    raise SystemExit("missing mf accepted")
except PreconditionError:
    pass

print("registry size:", len(registry_ids()))
if fails:
    print("\nMISMATCHES:")
    for key, cid, got, want, wit in fails:
        print(f"  {key} / {cid}: got {got}, wanted {want}")
        print(f"    witness: {wit}")
    raise SystemExit(1)
print("ALL VERIFY SMOKE CHECKS PASS")
