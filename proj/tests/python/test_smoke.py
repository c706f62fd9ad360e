"""Smoke tests for the Python module, with mpmath as the independent oracle."""

import mpmath
import pytest

import rrcf

DIGITS = 120
GUARD = 40
SHOWN = DIGITS - GUARD


def agree(text, value, digits=SHOWN - 2):
    x = mpmath.mpf(text)
    return abs(x - value) <= abs(value) * mpmath.mpf(10) ** (-digits)


@pytest.fixture(autouse=True)
def _precision():
    with mpmath.workdps(DIGITS + 20):
        yield


def nome(r):
    return mpmath.exp(-mpmath.pi * mpmath.sqrt(mpmath.mpf(r)))


def test_rogers_ramanujan_against_qpochhammer():
    for text, r in (("4", 4), ("26/5", mpmath.mpf(26) / 5), ("1/3", mpmath.mpf(1) / 3)):
        q = nome(r)
        expected = mpmath.root(q, 5) * mpmath.qp(q, q**5) * mpmath.qp(q**4, q**5) / (
            mpmath.qp(q**2, q**5) * mpmath.qp(q**3, q**5)
        )
        assert agree(rrcf.eval("R", text, DIGITS, GUARD), expected)
        assert agree(rrcf.eval("R_cf", text, DIGITS, GUARD), expected)


def test_thetas_and_lambda_star_against_jtheta():
    q = nome(7)
    t2 = mpmath.jtheta(2, 0, q)
    t3 = mpmath.jtheta(3, 0, q)
    assert agree(rrcf.eval("theta2", 7, DIGITS, GUARD), t2)
    assert agree(rrcf.eval("theta3", 7, DIGITS, GUARD), t3)
    assert agree(rrcf.eval("lambda_star", 7, DIGITS, GUARD), t2**2 / t3**2)


def test_euler_function_and_klein_j():
    q = nome(2)
    assert agree(rrcf.eval("f", 2, DIGITS, GUARD), mpmath.qp(q))
    tau = mpmath.mpc(0, mpmath.sqrt(5))
    assert agree(rrcf.eval("kleinJ", 5, DIGITS, GUARD), mpmath.kleinj(tau).real)


def test_recognize_round_trip():
    cand = rrcf.recognize(fn="lambda_star", arg="26/5", digits=400)
    assert cand["coeffs"] == ["1", "14999688", "140280340", "14999688", "-280560666",
                              "-14999688", "140280340", "-14999688", "1"]
    assert cand["root_index"] == 6
    golden = mpmath.nstr((1 + mpmath.sqrt(5)) / 2, DIGITS + 10)
    cand = rrcf.recognize(golden, degree=4, digits=100, guard=20)
    assert cand["coeffs"] == ["1", "-1", "-1"]
    assert cand["confidence"] == "provisional"
    assert rrcf.recognize(mpmath.nstr(mpmath.pi, 400), degree=3) is None


def test_field_and_yi():
    value = mpmath.nstr(mpmath.mpf(3) / 2 + 2 * mpmath.sqrt(2), DIGITS + 10)
    fe = rrcf.recognize_field(value, [1, 2], digits=100, guard=20)
    assert fe["text"] == "3/2+2*sqrt(2)"
    yi = rrcf.yi_recognize("13/2")
    assert yi["form"] == "-37296+16705*sqrt(5)+2*sqrt(65*(10716449-4792536*sqrt(5)))"


def test_certificates():
    cert = rrcf.check_order25(130, digits=200)
    assert cert["verdict"] == "certified"
    assert all(c["verdict"] == "certified" for c in rrcf.check_identities("0.3", digits=100))
    bundle = rrcf.reproduce("conj_16_15", digits=250)
    assert bundle["verdict"] == "numerically-supported"


def test_errors_and_cli():
    with pytest.raises(rrcf.DomainError):
        rrcf.eval("R", "0/1")
    with pytest.raises(ValueError):
        rrcf.eval("nope", "1")
    code, out, _ = rrcf.run_cli("eval", "g", "130", "--digits", "80")
    assert code == 0 and out.startswith("g(130/1) = 3.7404")
    assert rrcf.run_cli("bogus")[0] == 3
    assert rrcf.catalog()["version"] == 1
