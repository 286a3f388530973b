"""Exact arithmetic substrate: prime fields, degree-lex monomials, sparse polynomials.

All computations in the library run over a configurable prime field F_p.  The
default prime is large (2**31 - 1) so that randomly drawn coefficients behave
like coefficients in an infinite field for the generic constructions used
elsewhere.  Polynomials are sparse dictionaries mapping exponent tuples to
nonzero residues; the zero polynomial has an empty term dictionary and order
+infinity.  The term order used everywhere (display, pivoting, bases) is
degree-lex: lower total degree first, ties broken lexicographically with the
first variable heaviest.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

DEFAULT_PRIME = 2147483647

INFINITE_ORDER = math.inf


class AgradedError(Exception):
    """Base class for all library errors."""


class DimensionMismatch(AgradedError):
    """Operands live over different variable counts or different primes."""


class ParseError(AgradedError):
    """Polynomial or document syntax error, with source position."""

    def __init__(self, message: str, line: int, col: int):
        super().__init__(f"{message} (line {line}, column {col})")
        self.line = line
        self.col = col


class PreconditionError(AgradedError):
    """An operation's stated precondition failed on the given input."""


class ResourceLimitError(AgradedError):
    """A truncation or basis-size cap was exceeded."""


class InternalCheckError(AgradedError):
    """A cross-assertion between two independent routes failed.

    These indicate an implementation bug, never bad user input.
    """


def _is_prime(n: int) -> bool:
    # deterministic Miller-Rabin, valid far beyond any sensible field size
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
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


@dataclass(frozen=True)
class Field:
    """Prime field F_p; elements are plain ints in [0, p)."""

    p: int = DEFAULT_PRIME

    def __post_init__(self):
        if not _is_prime(self.p):
            raise PreconditionError(f"field characteristic must be prime, got {self.p}")

    def red(self, a: int) -> int:
        return a % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("inverse of zero in prime field")
        return pow(a, self.p - 2, self.p)

    def neg(self, a: int) -> int:
        return (-a) % self.p


class MonomialTable:
    """Enumeration of all monomials of degree <= max_deg in nvars variables.

    Ids are assigned in degree-lex order (degree ascending, then exponent
    tuples lexicographically descending, so x1^d comes first within a degree).
    Ids are prefix-stable: growing the table never renumbers existing ids,
    which lets one cached table per variable count serve every truncation.
    """

    def __init__(self, nvars: int):
        if nvars < 0:
            raise PreconditionError("variable count must be >= 0")
        self.nvars = nvars
        self.max_deg = -1
        self.exps: list[tuple[int, ...]] = []
        self.id_of: dict[tuple[int, ...], int] = {}
        self.deg_start: list[int] = [0]

    def ensure(self, deg: int) -> None:
        while self.max_deg < deg:
            d = self.max_deg + 1
            if self.nvars == 0:
                block = [()] if d == 0 else []
            else:
                block = sorted(_compositions(d, self.nvars), reverse=True)
            for e in block:
                self.id_of[e] = len(self.exps)
                self.exps.append(e)
            self.deg_start.append(len(self.exps))
            self.max_deg = d

    def ids_of_degree(self, d: int) -> range:
        self.ensure(d)
        return range(self.deg_start[d], self.deg_start[d + 1])

    def count_upto(self, d: int) -> int:
        self.ensure(d)
        return self.deg_start[d + 1]

    def deg_of(self, mid: int) -> int:
        return sum(self.exps[mid])


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


_TABLES: dict[int, MonomialTable] = {}


def monomial_table(nvars: int, need_deg: int) -> MonomialTable:
    tab = _TABLES.get(nvars)
    if tab is None:
        tab = MonomialTable(nvars)
        _TABLES[nvars] = tab
    tab.ensure(need_deg)
    return tab


def _addexp(a: tuple[int, ...], b: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(x + y for x, y in zip(a, b))


class Poly:
    """Sparse multivariate polynomial over F_p.

    terms maps exponent tuples to residues in [1, p).  Instances are treated
    as immutable; arithmetic returns new objects.
    """

    __slots__ = ("nvars", "p", "terms")

    def __init__(self, nvars: int, p: int, terms: dict[tuple[int, ...], int] | None = None):
        self.nvars = nvars
        self.p = p
        self.terms = terms or {}

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero(nvars: int, p: int) -> "Poly":
        return Poly(nvars, p, {})

    @staticmethod
    def const(c: int, nvars: int, p: int) -> "Poly":
        c %= p
        if c == 0:
            return Poly.zero(nvars, p)
        return Poly(nvars, p, {(0,) * nvars: c})

    @staticmethod
    def variable(i: int, nvars: int, p: int) -> "Poly":
        e = [0] * nvars
        e[i] = 1
        return Poly(nvars, p, {tuple(e): 1})

    @staticmethod
    def from_terms(pairs, nvars: int, p: int) -> "Poly":
        terms: dict[tuple[int, ...], int] = {}
        for e, c in pairs:
            c = (terms.get(e, 0) + c) % p
            if c:
                terms[e] = c
            else:
                terms.pop(e, None)
        return Poly(nvars, p, terms)

    # -- basic structure ----------------------------------------------

    def _check(self, other: "Poly") -> None:
        if self.nvars != other.nvars or self.p != other.p:
            raise DimensionMismatch(
                f"polynomials over different contexts: "
                f"({self.nvars} vars mod {self.p}) vs ({other.nvars} vars mod {other.p})"
            )

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Poly)
            and self.nvars == other.nvars
            and self.p == other.p
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.nvars, self.p, frozenset(self.terms.items())))

    def order(self):
        """Minimal total degree of a term; +inf for the zero polynomial."""
        if not self.terms:
            return INFINITE_ORDER
        return min(sum(e) for e in self.terms)

    def degree(self):
        if not self.terms:
            return -INFINITE_ORDER
        return max(sum(e) for e in self.terms)

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        terms = dict(self.terms)
        p = self.p
        for e, c in other.terms.items():
            v = (terms.get(e, 0) + c) % p
            if v:
                terms[e] = v
            else:
                terms.pop(e, None)
        return Poly(self.nvars, p, terms)

    def __neg__(self) -> "Poly":
        p = self.p
        return Poly(self.nvars, p, {e: p - c for e, c in self.terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        p = self.p
        terms: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = _addexp(e1, e2)
                v = (terms.get(e, 0) + c1 * c2) % p
                if v:
                    terms[e] = v
                else:
                    terms.pop(e, None)
        return Poly(self.nvars, p, terms)

    def scale(self, c: int) -> "Poly":
        c %= self.p
        if c == 0:
            return Poly.zero(self.nvars, self.p)
        return Poly(self.nvars, self.p, {e: (v * c) % self.p for e, v in self.terms.items()})

    def pow(self, k: int) -> "Poly":
        if k < 0:
            raise PreconditionError("negative polynomial power")
        out = Poly.const(1, self.nvars, self.p)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base if k > 1 else base
            k >>= 1
        return out

    # -- slicing -------------------------------------------------------

    def homogeneous_part(self, d: int) -> "Poly":
        return Poly(self.nvars, self.p, {e: c for e, c in self.terms.items() if sum(e) == d})

    def truncate(self, maxdeg: int) -> "Poly":
        return Poly(self.nvars, self.p, {e: c for e, c in self.terms.items() if sum(e) <= maxdeg})

    def initial_form(self) -> "Poly":
        o = self.order()
        if o is INFINITE_ORDER:
            return self
        return self.homogeneous_part(int(o))

    # -- substitution ---------------------------------------------------

    def subs_linear(self, mat: list[list[int]], new_nvars: int) -> "Poly":
        """Substitute x_j -> sum_i mat[j][i] * x'_i (a linear change, possibly
        into a different variable count)."""
        p = self.p
        images = []
        for j in range(self.nvars):
            images.append(
                Poly.from_terms(
                    [(tuple(1 if t == i else 0 for t in range(new_nvars)), mat[j][i]) for i in range(new_nvars)],
                    new_nvars,
                    p,
                )
            )
        # memoized powers per variable
        powers: list[dict[int, Poly]] = [dict() for _ in range(self.nvars)]

        def var_pow(j: int, k: int) -> Poly:
            got = powers[j].get(k)
            if got is None:
                got = images[j].pow(k)
                powers[j][k] = got
            return got

        out = Poly.zero(new_nvars, p)
        for e, c in self.terms.items():
            term = Poly.const(c, new_nvars, p)
            for j, k in enumerate(e):
                if k:
                    term = term * var_pow(j, k)
            out = out + term
        return out

    def drop_last_var(self) -> "Poly":
        """Set the last variable to zero and forget it (nvars shrinks by one)."""
        if self.nvars == 0:
            raise PreconditionError("no variable to drop")
        terms = {e[:-1]: c for e, c in self.terms.items() if e[-1] == 0}
        return Poly(self.nvars - 1, self.p, terms)

    # -- display ---------------------------------------------------------

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda ec: (sum(ec[0]), tuple(-x for x in ec[0])))

    def __repr__(self):
        names = [f"x{i + 1}" for i in range(self.nvars)]
        return f"Poly({poly_str(self, names)})"


def poly_str(poly: Poly, var_names: list[str]) -> str:
    """Canonical display: degree-lex term order, symmetric residues."""
    if not poly.terms:
        return "0"
    parts = []
    half = poly.p // 2
    for e, c in poly.sorted_terms():
        cc = c - poly.p if c > half else c
        sign = "-" if cc < 0 else "+"
        mag = abs(cc)
        factors = []
        for name, k in zip(var_names, e):
            if k == 1:
                factors.append(name)
            elif k > 1:
                factors.append(f"{name}^{k}")
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(mag)] + factors)
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


# -- expression parser ----------------------------------------------------

_TOK_INT = "int"
_TOK_NAME = "name"
_TOK_OP = "op"
_TOK_END = "end"


def _tokenize(src: str):
    toks = []
    line, col = 1, 1
    i = 0
    n = len(src)
    while i < n:
        ch = src[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch.isspace():
            i += 1
            col += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and src[j].isdigit():
                j += 1
            toks.append((_TOK_INT, src[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < n and (src[j].isalnum()):
                j += 1
            toks.append((_TOK_NAME, src[i:j], line, col))
            col += j - i
            i = j
            continue
        if ch in "+-*^()":
            toks.append((_TOK_OP, ch, line, col))
            i += 1
            col += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col)
    toks.append((_TOK_END, "", line, col))
    return toks


class _Parser:
    def __init__(self, toks, var_names: list[str], nvars: int, p: int):
        self.toks = toks
        self.i = 0
        self.vars = {name: k for k, name in enumerate(var_names)}
        self.nvars = nvars
        self.p = p

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expr(self) -> Poly:
        node = self.term()
        while True:
            kind, val, _, _ = self.peek()
            if kind == _TOK_OP and val in "+-":
                self.take()
                rhs = self.term()
                node = node + rhs if val == "+" else node - rhs
            else:
                return node

    def term(self) -> Poly:
        node = self.factor()
        while True:
            kind, val, _, _ = self.peek()
            if kind == _TOK_OP and val == "*":
                self.take()
                node = node * self.factor()
            else:
                return node

    def factor(self) -> Poly:
        base = self.base()
        kind, val, line, col = self.peek()
        if kind == _TOK_OP and val == "^":
            self.take()
            kind, val, line, col = self.take()
            if kind != _TOK_INT:
                raise ParseError("exponent must be a nonnegative integer", line, col)
            return base.pow(int(val))
        return base

    def base(self) -> Poly:
        kind, val, line, col = self.take()
        if kind == _TOK_INT:
            return Poly.const(int(val), self.nvars, self.p)
        if kind == _TOK_NAME:
            idx = self.vars.get(val)
            if idx is None:
                raise ParseError(f"unknown variable {val!r}", line, col)
            return Poly.variable(idx, self.nvars, self.p)
        if kind == _TOK_OP and val == "(":
            node = self.expr()
            kind, val, line, col = self.take()
            if not (kind == _TOK_OP and val == ")"):
                raise ParseError("expected ')'", line, col)
            return node
        if kind == _TOK_OP and val == "-":
            return -self.factor()
        if kind == _TOK_OP and val == "+":
            return self.factor()
        raise ParseError(f"unexpected token {val!r}" if val else "unexpected end of input", line, col)


def parse_poly(src: str, var_names: list[str], p: int = DEFAULT_PRIME) -> Poly:
    """Parse an integer-coefficient polynomial expression.

    Grammar: integers, declared variable names, '+', '-', '*', '^' and
    parentheses; multiplication is always explicit.  Errors carry the
    1-based line and column of the offending token.
    """
    for name in var_names:
        if not (name and name[0].isalpha() and name.isalnum()):
            raise PreconditionError(f"invalid variable name {name!r}")
    toks = _tokenize(src)
    parser = _Parser(toks, var_names, len(var_names), p)
    out = parser.expr()
    kind, val, line, col = parser.peek()
    if kind != _TOK_END:
        raise ParseError(f"trailing input {val!r}", line, col)
    return out
