import json

import pytest

import beztate

SQUARES = [beztate.monomial([2, 0]), beztate.monomial([0, 2])]
NET = SQUARES + [beztate.monomial([1, 1])]


def poly(*terms):
    return {"n": len(terms[0][0]) - 1, "terms": [{"exp": list(e), "coeff": str(c)} for e, c in terms]}


def test_bezoutian_of_squares():
    b = beztate.bezoutian(SQUARES, field="q")
    assert b["rho"] == 2
    assert sorted((t["xexp"], t["yexp"], t["coeff"]) for t in b["delta"]["terms"]) == [
        ([0, 0], [1, 1], "1"),
        ([0, 1], [1, 0], "1"),
        ([1, 0], [0, 1], "1"),
        ([1, 1], [0, 0], "1"),
    ]


def test_bezout_slice_is_antidiagonal():
    m = beztate.bezout_slice(SQUARES, 1, field="q")
    assert (m["rows"], m["cols"]) == (2, 2)
    assert sorted(map(tuple, m["entries"])) == [(0, 1, "1"), (1, 0, "1")]


def test_window_verifies():
    w = beztate.tate_window(1, 2, 0, -2, 2, -1, 5)
    for check in ("complex", "exactness", "cone"):
        assert beztate.verify(w, check)["status"] == "pass", check


def test_net_syzygies():
    s = beztate.syzygy_space(NET, 3, field="q")
    assert s["dim"] == 2
    assert s["koszul_dim"] == 0
    expected = [
        [poly(([0, 0], 0)), poly(([1, 0], -1)), poly(([0, 1], 1))],
        [poly(([0, 1], -1)), poly(([0, 0], 0)), poly(([1, 0], 1))],
    ]
    got = beztate.bezout_syzygies(NET, 3, field="q")
    for e in expected:
        for entry in e:
            entry["terms"] = [t for t in entry["terms"] if t["coeff"] != "0"]
    assert sorted(json.dumps(g, sort_keys=True) for g in got) == sorted(json.dumps(e, sort_keys=True) for e in expected)


def test_apolarity_and_homology():
    assert beztate.apolarity_check(SQUARES)["status"] == "pass"
    m = beztate.apolarity_matrix(SQUARES, 1)
    assert sorted(map(tuple, m["entries"])) == [(0, 1, "1"), (1, 0, "1")]
    assert beztate.homology_dim(SQUARES, 0, 1) == 2
    assert beztate.homology_dim(NET, 1, 3) == 2


def test_linear_algebra():
    m = {"rows": 2, "cols": 2, "entries": [[0, 0, "1"], [0, 1, "2"], [1, 0, "2"], [1, 1, "4"]]}
    assert beztate.rank(m, field="q") == 1
    assert beztate.kernel_basis({"rows": 1, "cols": 2, "entries": [[0, 0, "1"], [0, 1, "1"]]}, field="p:7") == [["1", "6"]]


def test_invalid_input_is_value_error():
    with pytest.raises(ValueError):
        beztate.bezoutian([beztate.monomial([2, 0]), beztate.monomial([1, 0])])


def test_selftest_and_cli():
    assert beztate.selftest()["status"] == "pass"
    code, out, _ = beztate.run_cli(["selftest", "--quiet"])
    assert code == 0
    assert json.loads(out)["status"] == "pass"
    assert beztate.run_cli(["tate", "--n", "0"])[0] == 2
