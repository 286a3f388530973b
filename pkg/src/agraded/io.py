"""Input documents: JSON descriptions of rings, modules, factorizations and
canonical-module inputs, with a canonical serializer.

Parsing then serializing is idempotent: polynomials come back in degree-lex
term order with symmetric residues, fields in a fixed order.  Validation
errors name the offending field; polynomial parse errors carry line and
column from the expression parser.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .core import DEFAULT_PRIME, Poly, PreconditionError, parse_poly, poly_str
from .matfac import MatrixFactorization, mf_from_strings
from .presentations import ModulePresentation, RingPresentation, ring_from_strings

_TOP_FIELDS = ("prime", "label", "variables", "ideal", "modules", "ideal_I",
               "matrix_factorizations", "omega")


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, exact for every 64-bit integer."""
    if n < 2:
        return False
    for small in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % small == 0:
            return n == small
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass
class Document:
    """Parsed input document; ring is None when only factorizations appear."""

    prime: int
    ring: RingPresentation | None = None
    modules: dict[str, ModulePresentation] = field(default_factory=dict)
    ideal_I: list[Poly] | None = None
    mfs: dict[str, MatrixFactorization] = field(default_factory=dict)
    omega_label: str | None = None
    tau: int | None = None


def _expect(cond: bool, msg: str) -> None:
    if not cond:
        raise PreconditionError(msg)


def load_document(text: str) -> Document:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as err:
        raise PreconditionError(f"input is not valid JSON: {err}") from None
    _expect(isinstance(raw, dict), "input document must be a JSON object")
    for key in raw:
        _expect(key in _TOP_FIELDS, f"unknown field {key!r}; allowed: {', '.join(_TOP_FIELDS)}")

    prime = raw.get("prime", DEFAULT_PRIME)
    _expect(isinstance(prime, int) and not isinstance(prime, bool), "'prime' must be an integer")
    _expect(is_prime(prime), f"'prime' = {prime} is not a prime number")

    doc = Document(prime=prime)
    variables = raw.get("variables")
    if variables is not None:
        _expect(
            isinstance(variables, list) and variables
            and all(isinstance(v, str) for v in variables),
            "'variables' must be a non-empty array of names",
        )
        _expect(len(set(variables)) == len(variables), "'variables' contains duplicates")
        ideal = raw.get("ideal", [])
        _expect(
            isinstance(ideal, list) and all(isinstance(s, str) for s in ideal),
            "'ideal' must be an array of polynomial strings",
        )
        label = raw.get("label", "A")
        _expect(isinstance(label, str) and label, "'label' must be a non-empty string")
        doc.ring = ring_from_strings(variables, ideal, prime, label)
    else:
        for key in ("ideal", "modules", "ideal_I", "omega"):
            _expect(key not in raw, f"'{key}' requires 'variables'")

    mods = raw.get("modules", {})
    _expect(isinstance(mods, dict), "'modules' must be a map label -> presentation")
    for name in sorted(mods):
        body = mods[name]
        _expect(isinstance(body, dict), f"module {name!r} must be an object")
        for key in body:
            _expect(key in ("generators", "relations"), f"module {name!r}: unknown field {key!r}")
        gens = body.get("generators")
        _expect(
            isinstance(gens, int) and not isinstance(gens, bool) and gens >= 1,
            f"module {name!r}: 'generators' must be a positive integer",
        )
        rels = body.get("relations", [])
        _expect(isinstance(rels, list), f"module {name!r}: 'relations' must be an array of columns")
        cols = []
        for j, col in enumerate(rels):
            _expect(
                isinstance(col, list) and len(col) == gens
                and all(isinstance(s, str) for s in col),
                f"module {name!r}: relation column {j} must hold {gens} polynomial strings",
            )
            cols.append(tuple(parse_poly(s, list(doc.ring.var_names), prime) for s in col))
        doc.modules[name] = ModulePresentation(doc.ring, gens, tuple(cols), name)

    ideal_i = raw.get("ideal_I")
    if ideal_i is not None:
        _expect(
            isinstance(ideal_i, list) and ideal_i and all(isinstance(s, str) for s in ideal_i),
            "'ideal_I' must be a non-empty array of polynomial strings",
        )
        polys = [parse_poly(s, list(doc.ring.var_names), prime) for s in ideal_i]
        for s, g in zip(ideal_i, polys):
            _expect(bool(g) and g.order() >= 1, f"ideal_I generator {s!r} is not in the maximal ideal")
        doc.ideal_I = polys

    mfs = raw.get("matrix_factorizations", {})
    _expect(isinstance(mfs, dict), "'matrix_factorizations' must be a map label -> {phi, psi}")
    for name in sorted(mfs):
        body = mfs[name]
        _expect(isinstance(body, dict), f"factorization {name!r} must be an object")
        for key in body:
            _expect(
                key in ("phi", "psi", "variables"),
                f"factorization {name!r}: unknown field {key!r}",
            )
        mf_vars = body.get("variables", variables)
        _expect(
            isinstance(mf_vars, list) and mf_vars and all(isinstance(v, str) for v in mf_vars),
            f"factorization {name!r}: needs 'variables' (own or document-level)",
        )
        phi = body.get("phi")
        _expect(
            isinstance(phi, list) and phi
            and all(isinstance(row, list) and len(row) == len(phi) for row in phi),
            f"factorization {name!r}: 'phi' must be a square matrix of polynomial strings",
        )
        psi = body.get("psi", "adjugate")
        if psi != "adjugate":
            _expect(
                isinstance(psi, list) and len(psi) == len(phi)
                and all(isinstance(row, list) and len(row) == len(phi) for row in psi),
                f"factorization {name!r}: 'psi' must be \"adjugate\" or a matrix matching phi",
            )
        doc.mfs[name] = mf_from_strings(phi, psi, list(mf_vars), prime, name)

    omega = raw.get("omega")
    if omega is not None:
        _expect(isinstance(omega, dict), "'omega' must be an object {module, tau?}")
        for key in omega:
            _expect(key in ("module", "tau"), f"'omega': unknown field {key!r}")
        label = omega.get("module")
        _expect(
            isinstance(label, str) and label in doc.modules,
            f"'omega.module' must name one of the document modules ({sorted(doc.modules)})",
        )
        tau = omega.get("tau")
        if tau is not None:
            _expect(
                isinstance(tau, int) and not isinstance(tau, bool) and tau >= 1,
                "'omega.tau' must be a positive integer",
            )
        doc.omega_label = label
        doc.tau = tau
    return doc


def load_document_file(path: str) -> Document:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as err:
        raise PreconditionError(f"cannot read input file: {err}") from None
    return load_document(text)


def serialize_document(doc: Document) -> str:
    out: dict = {"prime": doc.prime}
    if doc.ring is not None:
        names = list(doc.ring.var_names)
        out["label"] = doc.ring.label
        out["variables"] = names
        out["ideal"] = [poly_str(g, names) for g in doc.ring.q_gens]
        if doc.modules:
            out["modules"] = {
                name: {
                    "generators": mod.gens,
                    "relations": [[poly_str(e, names) for e in col] for col in mod.rel_cols],
                }
                for name, mod in sorted(doc.modules.items())
            }
        if doc.ideal_I is not None:
            out["ideal_I"] = [poly_str(g, names) for g in doc.ideal_I]
    if doc.mfs:
        out["matrix_factorizations"] = {}
        for name, mf in sorted(doc.mfs.items()):
            names = list(mf.var_names)
            out["matrix_factorizations"][name] = {
                "variables": names,
                "phi": [[poly_str(e, names) for e in row] for row in mf.phi],
                "psi": [[poly_str(e, names) for e in row] for row in mf.psi],
            }
    if doc.omega_label is not None:
        out["omega"] = {"module": doc.omega_label}
        if doc.tau is not None:
            out["omega"]["tau"] = doc.tau
    return json.dumps(out, indent=2)
