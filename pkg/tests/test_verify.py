import pytest

from agraded.core import DEFAULT_PRIME, PreconditionError
from agraded.matfac import corpus
from agraded.presentations import ModulePresentation
from agraded.verify import (
    OmegaInput,
    Report,
    RunConfig,
    TheoremCheck,
    corpus_run,
    instance_from_mf,
    omega_bounds_check,
    omega_instance,
    registry_ids,
    requirement_gap,
    resolve_check_id,
    run_check,
    run_checks,
)


def verdicts(ids, inst, cfg):
    return {c.check_id: c.verdict for c in run_checks(ids, inst, cfg)}


def test_registry_shape():
    ids = registry_ids()
    assert len(ids) == 29
    assert ids == sorted(ids)
    assert len(set(ids)) == 29
    for cid in ("beqn", "thm1-monotone", "omega-1", "existR-2", "ulrich"):
        assert cid in ids


def test_resolve_check_id():
    assert resolve_check_id("beqn") == "beqn"
    assert resolve_check_id("Beqn") == "beqn"
    assert resolve_check_id("MTHY-1") == "mtHy-1"
    with pytest.raises(PreconditionError):
        resolve_check_id("no-such-check")


def test_hyper_verdicts(hyper):
    cfg = RunConfig(n_max=10)
    holds = ["thm1-monotone", "mtHy-1", "mtHy-2", "mtHy-3", "mtHy-4", "U1",
             "dim1a", "Ur1", "eqchar", "exampleF", "beqn", "muI"]
    inconclusive = ["the2-1", "the2-2", "h-nonincreasing", "dim0form", "c2thMo"]
    got = verdicts(holds + inconclusive, hyper, cfg)
    for cid in holds:
        assert got[cid] == "holds"
    for cid in inconclusive:
        assert got[cid] == "inconclusive"


def test_ord2_verdicts(ord2):
    cfg = RunConfig(n_max=10)
    ids = ["exampleF", "ulrich", "mtHy-4", "eqchar", "U1", "U3", "dim1-3", "dim1a"]
    got = verdicts(ids, ord2, cfg)
    assert all(v == "holds" for v in got.values())


def test_ord3_verdicts(ord3):
    cfg = RunConfig(n_max=10)
    got = verdicts(["exampleF", "eqchar", "h-nonincreasing", "muI", "ulrich"], ord3, cfg)
    assert all(v == "holds" for v in got.values())


def test_dvr_verdicts():
    from agraded.examples_lib import build_example
    dv = build_example("dvr-2,3;5", DEFAULT_PRIME)
    got = verdicts(["dim0form", "mtHy-1", "geqgeq", "thm1-monotone"], dv, RunConfig(n_max=10))
    assert got["dim0form"] == "holds"
    assert got["mtHy-1"] == "holds"
    assert got["geqgeq"] == "holds"
    # a dim-0 module never exposes the monotone window
    assert got["thm1-monotone"] == "inconclusive"


def test_s5_counterexample_holds(s5):
    c = run_check("the2-counterexample", s5, RunConfig(n_max=14))
    assert c.verdict == "holds"
    assert c.witness["mu_E"] == 1
    assert c.witness["e3_A"] == -1
    # the displayed inequality really fails on this ring
    assert c.witness["lhs"] < c.witness["rhs"]


def test_s5_geqgeq_inconclusive(s5):
    c = run_check("geqgeq", s5, RunConfig(n_max=14))
    assert c.verdict == "inconclusive"
    assert "note" in c.witness


def test_ci3_verdicts(ci3):
    got = verdicts(["c2thMo", "geqgeq"], ci3, RunConfig(n_max=10))
    assert got == {"c2thMo": "holds", "geqgeq": "holds"}


def test_omega_checks_hold():
    from agraded.examples_lib import build_example
    sg = build_example("semigroup-5,6,7", DEFAULT_PRIME)
    cfg = RunConfig(n_max=12)
    rows = run_checks(["omega-1", "omega-2", "omega-3"], sg, cfg)
    assert [c.verdict for c in rows] == ["holds"] * 3
    by_id = {c.check_id: c.witness for c in rows}
    assert by_id["omega-1"]["tau"] == 2
    w2 = by_id["omega-2"]
    assert (w2["tau"], w2["e1_A"], w2["e1_omega"]) == (2, 6, 4)
    assert w2["lower_explained"] and w2["upper_explained"]
    merged = omega_bounds_check(sg, cfg)
    assert merged.check_id == "omega-bounds"
    assert merged.verdict == "holds"
    assert sorted(merged.witness) == ["omega-1", "omega-2"]


def test_omega_wrong_e0_rejected():
    from agraded.examples_lib import build_example
    sg = build_example("semigroup-5,6,7", DEFAULT_PRIME)
    ring = sg.ring
    # residue field presented as a module: e0 = 1, not e0(A) = 5
    residue = ModulePresentation(ring, 1, [(ring.poly(v),) for v in ring.var_names])
    bad = omega_instance(ring, OmegaInput(ring.label, residue), sg=sg.sg)
    with pytest.raises(PreconditionError, match="e0"):
        run_check("omega-1", bad, RunConfig(n_max=12))


def test_requirement_gap(ci3):
    mf = corpus(0, DEFAULT_PRIME, 1)[0]
    inst = instance_from_mf(mf)
    assert requirement_gap("beqn", ci3) == "a matrix factorization"
    assert requirement_gap("beqn", inst) is None
    assert requirement_gap("omega-1", ci3) == "a canonical-module presentation"
    assert requirement_gap("eqchar", inst) is None


def test_run_checks_gap_raises(ci3):
    with pytest.raises(PreconditionError, match="matrix factorization"):
        run_checks(["existR-1"], ci3, RunConfig(n_max=8))


def test_instance_from_mf():
    mf = corpus(0, DEFAULT_PRIME, 1)[0]
    inst = instance_from_mf(mf)
    assert inst.key == mf.label
    assert sorted(inst.modules) == ["K", "M"]
    got = verdicts(["existR-1", "existR-2", "beqn"], inst, RunConfig(n_max=8))
    assert all(v == "holds" for v in got.values())


def test_corpus_run_deterministic():
    cfg = RunConfig(n_max=8)
    r1 = corpus_run(cfg, count=4)
    r2 = corpus_run(cfg, count=4)
    assert r1.to_json() == r2.to_json()
    # default check set: 5 checks per member
    assert len(r1.rows) == 20
    assert r1.counts() == {"holds": 20, "fails": 0, "inconclusive": 0}
    assert r1.exit_code == 0
    assert len(r1.meta["members"]) == 4
    assert len(set(r1.meta["members"])) == 4


def test_corpus_run_count_zero():
    r = corpus_run(RunConfig(n_max=8), count=0)
    assert r.rows == []
    assert r.exit_code == 0
    with pytest.raises(PreconditionError):
        corpus_run(RunConfig(n_max=8), count=-1)


def test_report_exit_code():
    cfg = RunConfig()
    rows = [TheoremCheck("beqn", "x", "holds", {}),
            TheoremCheck("beqn", "y", "inconclusive", {})]
    assert Report(cfg, rows).exit_code == 0
    rows.append(TheoremCheck("beqn", "z", "fails", {}))
    rep = Report(cfg, rows)
    assert rep.exit_code == 1
    assert rep.counts() == {"holds": 1, "fails": 1, "inconclusive": 1}


def test_report_json_embeds_config():
    import json
    rep = corpus_run(RunConfig(n_max=8, seed=3), count=1)
    doc = json.loads(rep.to_json())
    assert doc["config"]["n_max"] == 8
    assert doc["config"]["seed"] == 3
    assert doc["config"]["p"] == DEFAULT_PRIME
    assert {r["verdict"] for r in doc["rows"]} == {"holds"}
