import random

import pytest

from agraded.core import (
    DEFAULT_PRIME,
    Field,
    MonomialTable,
    ParseError,
    Poly,
    PreconditionError,
    monomial_table,
    parse_poly,
    poly_str,
)


def test_field_ops():
    F = Field(7)
    assert F.red(10) == 3
    assert F.neg(3) == 4
    assert F.inv(3) == 5  # 3*5 = 15 = 1 mod 7
    with pytest.raises(ZeroDivisionError):
        F.inv(0)


def test_field_rejects_composite():
    with pytest.raises(PreconditionError):
        Field(10)


def test_field_default_prime():
    # the default characteristic must itself pass the primality check
    Field(DEFAULT_PRIME)


def test_monomial_table_degree_lex():
    t = MonomialTable(2)
    t.ensure(2)
    # degree ascending, exponents lexicographically descending within a degree
    assert t.exps[:6] == [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]
    assert t.count_upto(2) == 6
    assert list(t.ids_of_degree(1)) == [1, 2]


def test_monomial_table_prefix_stable():
    t = MonomialTable(3)
    t.ensure(2)
    before = list(t.exps)
    t.ensure(5)
    assert t.exps[: len(before)] == before


def test_monomial_table_cached():
    assert monomial_table(2, 3) is monomial_table(2, 1)


def test_poly_parse_and_print_round_trip():
    names = ["x", "y"]
    p = 101
    for src in ["x^2 + 3*x*y - y^3", "1", "0", "-x", "x*y^2 - 2"]:
        f = parse_poly(src, names, p)
        again = parse_poly(poly_str(f, names), names, p)
        assert again == f


def test_poly_str_symmetric_residues():
    names = ["x"]
    f = parse_poly("-x", names, 101)
    assert poly_str(f, names) == "-x"
    assert poly_str(parse_poly("0", names, 101), names) == "0"


def test_parse_poly_rejects_unknown_variable():
    with pytest.raises(ParseError):
        parse_poly("x + z", ["x", "y"], 101)


def test_parse_poly_rejects_garbage():
    for bad in ["x +", "^2", "x^", "(x", "x*^2"]:
        with pytest.raises(ParseError):
            parse_poly(bad, ["x", "y"], 101)


def test_poly_arithmetic_matches_reference():
    # random ring laws against direct term bookkeeping
    names = ["x", "y", "z"]
    p = 97
    rng = random.Random(5)

    def rand_poly():
        n = rng.randrange(1, 6)
        return parse_poly(
            " + ".join(
                f"{rng.randrange(1, p)}*x^{rng.randrange(3)}*y^{rng.randrange(3)}*z^{rng.randrange(3)}"
                for _ in range(n)
            ),
            names,
            p,
        )

    for _ in range(60):
        f, g, h = rand_poly(), rand_poly(), rand_poly()
        assert f + g == g + f
        assert (f + g) + h == f + (g + h)
        assert f * g == g * f
        assert f * (g + h) == f * g + f * h
        assert f - f == Poly.zero(3, p)


def test_poly_order_and_degree():
    names = ["x", "y"]
    f = parse_poly("x^2*y + x^5", names, 101)
    assert f.order() == 3
    assert f.degree() == 5
    assert not Poly.zero(2, 101)


def test_poly_context_mismatch():
    a = parse_poly("x", ["x"], 101)
    b = parse_poly("x", ["x", "y"], 101)
    from agraded.core import DimensionMismatch

    with pytest.raises(DimensionMismatch):
        a + b
