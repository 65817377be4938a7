from subsym.scalars import (
    GR_I,
    GR_ONE,
    GR_ZERO,
    GaussianRational,
    gr,
    parse_gr,
    rat,
    rat_str,
)


def test_i_squared():
    assert GR_I * GR_I == gr(-1)


def test_arithmetic():
    a = gr(rat(1, 2), rat(-3, 4))
    b = gr(2, 1)
    assert a + b == gr(rat(5, 2), rat(1, 4))
    assert a - a == GR_ZERO
    assert a * GR_ONE == a
    assert (a * b) / b == a
    assert a * a.conjugate() == gr(a.re * a.re + a.im * a.im)


def test_division_by_zero():
    import pytest

    with pytest.raises(ZeroDivisionError):
        GR_ONE / GR_ZERO


def test_normal_form_via_backend():
    # backend rationals keep positive denominators and lowest terms
    x = rat(6, -4)
    assert x.numerator == -3 and x.denominator == 2
    assert rat_str(x) == "-3/2"


def test_serialize_roundtrip():
    for v in [gr(0), gr(5), gr(-1, 2), gr(rat(3, 7), rat(-2, 9)), gr(0, -1)]:
        assert parse_gr(str(v)) == v


def test_hash_consistency():
    assert hash(gr(3)) == hash(rat(3))
    d = {gr(1, 2): "a"}
    assert d[gr(1, 2)] == "a"


def test_parse_rejects_malformed():
    import pytest

    with pytest.raises(ValueError):
        parse_gr("*i")
    with pytest.raises(ValueError):
        parse_gr("1/2+i*")
