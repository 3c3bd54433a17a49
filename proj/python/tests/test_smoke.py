import pytest

import ellip

SQUARE = {"g2": "4", "g3": "0", "q": 2}


def test_commands_listed():
    names = ellip.commands()
    assert "rank1" in names and "selftest" in names and len(names) == 17


def test_rank1_zero_divisor():
    assert ellip.rank1([], q=2) == {"kind": "Algebraic", "witness": [], "sublattice_principal": True}


def test_rank1_rejects_non_principal():
    half = [{"p": {"r1": "1/2", "r2": "0"}, "v": "1"}, {"p": {"r1": "0", "r2": "0"}, "v": "-1"}]
    with pytest.raises(ellip.DomainError) as err:
        ellip.rank1(half, q=2)
    assert err.value.kind == "NotADivisorOfAFunction"


def test_zeta_defect_square_curve():
    e = ellip.zeta_defect(SQUARE)
    # (6X^2 - 2) / (2Y) = (3X^2 - 1) / (4X^3 - 4X) * Y
    assert e["b"] == {"num": ["-1/4", "0", "3/4"], "den": ["0", "-1", "0", "1"]}
    assert e["a"]["num"] == []


def test_primitive_of_x_squared():
    r = ellip.primitive(SQUARE, {"a": ["0", "0", "1"]})
    assert r["kind"] == "Primitive"
    assert r["s"] == "1/3"


def test_divisors():
    # div(X - X(P)) with P of order 3
    P = [{"p": {"r1": "1/3", "r2": "0"}, "v": "1"}, {"p": {"r1": "2/3", "r2": "0"}, "v": "1"},
         {"p": {"r1": "0", "r2": "0"}, "v": "-2"}]
    assert ellip.is_principal(P)
    assert ellip.solve_divisor([], 2)["kind"] == "Solved"
    origin = [{"p": {"r1": "0", "r2": "0"}, "v": "1"}]
    r = ellip.solve_divisor(origin, 2)
    assert r["kind"] == "NoSolution" and r["certificate"]


def test_monodromy_realize_and_corrupt():
    M1 = [["1", "1"], ["0", "1"]]
    M2 = [["1", "0"], ["0", "1"]]
    out = ellip.realize(M1, M2, precision=40)
    reply = ellip.verify_monodromy([["1", "2"], ["0", "1"]], M2, out["Z"], out["lattice"], precision=40)
    assert not reply["pass"]
    assert float(reply["result"]["residual"]) > 1e-3
    with pytest.raises(ellip.CheckFailed):
        ellip.run("monodromy-verify", {"M1": [["1", "2"], ["0", "1"]], "M2": M2, "Z": out["Z"],
                                       "lattice": out["lattice"]}, precision=40)


def test_twisted_equation_monomial():
    r = ellip.solve_twisted(SQUARE, {"terms": [{"i": 2, "j": 0, "c": {"a": ["5"]}}]}, {"terms": []},
                            a="4", c="0", p=["0", "0", "10"])
    assert r["shape"] == {"kind": "Monomial", "d": "5", "r": 2}


def test_schema_errors():
    with pytest.raises(ellip.SchemaError):
        ellip.run("rank1", {"q": 2})
    with pytest.raises(ellip.SchemaError):
        ellip.run("no-such-command")


def test_selftest_fault_is_loud():
    assert not ellip.selftest("fast", fault=True)["pass"]
