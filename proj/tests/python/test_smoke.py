"""Smoke tests for the python bindings."""

import charstack


P1_NONGENERIC = {
    "genus": 0,
    "eigen_group": {"rank": 4, "relations": [[1, 1, 1, 1]]},
    "punctures": [
        {"eigenvalues": [{"exp": e, "mult": 1}, {"exp": [-x for x in e], "mult": 1}]}
        for e in ([1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1])
    ],
}


def test_hlrv_kernel_value():
    out = charstack.hlrv([[1, 1]] * 4, genus=0)
    assert out["H"] == "z^2 + w^2 + 4"
    assert out["E_spec"] == "(q^2 + 4*q + 1)/q"


def test_hlrv_genus_one_point():
    out = charstack.hlrv([[1]], genus=1)
    assert out["H"] == "z^2 - 2*z*w + w^2"


def test_eseries_nongeneric():
    out = charstack.eseries(P1_NONGENERIC)
    assert out["E"] == "(q^3 + 4*q^2 - 3*q - 1)/(q^2 - 2*q + 1)"
    assert out["generic"] is False
    assert [2, 1, 1, 1, 1] in out["h_star"]


def test_mixed_poincare_nongeneric():
    got = charstack.mixed_poincare(P1_NONGENERIC)
    assert "q^3*t^6" in got


def test_verify_ff():
    rows = charstack.verify_ff(P1_NONGENERIC, [7, 11])
    assert rows[0]["realized"] is False
    assert rows[1]["realized"] is True
    assert rows[1]["match"] is True


def test_lr_coefficient():
    assert charstack.lr_coefficient([3, 2, 1], [2, 1], [2, 1]) == 2
    assert charstack.lr_coefficient([2], [1], [1]) == 1


def test_modified_macdonald():
    s = charstack.modified_macdonald_str([2])
    assert "s[2]" in s and "s[1+1]" in s
