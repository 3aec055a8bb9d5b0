import json
import math

import pytest

import lpm

TORUS = {"model": "torus"}


def test_words_and_braids():
    s1 = lpm.Braid(3, "s1")
    assert str(lpm.artin_apply(s1, lpm.FreeWord(3, "x1"))) == "x1 x2 X1"
    assert str(lpm.artin_apply(s1, lpm.FreeWord(3, "x2"))) == "x1"
    assert lpm.braid_eq(lpm.Braid(3, "s1 s2 s1"), lpm.Braid(3, "s2 s1 s2"))
    assert not lpm.braid_eq(s1, lpm.Braid(3, "s2"))
    with pytest.raises(ValueError):
        lpm.Braid(2, "s2")


def test_pencil_operations():
    p = lpm.pencil(TORUS, [[1, 0], [0, 1]])
    q = p.hurwitz(lpm.Braid(2, "s1"))
    assert json.loads(q.to_json())["cycles"] == [[0, 1], [1, -1]]
    assert q.total_monodromy() == p.total_monodromy()
    assert not p.is_closed()

    abab = lpm.pencil(TORUS, [[1, 0], [0, 1], [1, 0], [0, 1]])
    arc = lpm.Arc(1, lpm.Braid(4, "S2"))
    assert abab.classify(arc) == ("Matching", "")
    braid, element = abab.kernel_element(arc)
    assert lpm.braid_eq(braid, lpm.half_twist(arc))
    assert json.loads(element) == [[1, 0], [0, 1]]
    assert abab.in_gamma(json.dumps({"braid": str(braid)}))
    assert len(abab.matching_arcs(1)) >= 2
    assert json.loads(abab.label(lpm.FreeWord(4, "x1 x2 x3 X2 X1"))) == [0, 1]
    assert len(p.hurwitz_orbit(1)) == 3


def test_bad_pencil():
    with pytest.raises(ValueError):
        lpm.pencil(TORUS, [[1]])


def test_cutoff():
    prof = lpm.CutoffProfile.build(1e4, 1, 1)
    assert prof.eps == pytest.approx(0.099158, rel=1e-5)
    assert prof(1.0) == 10.0
    assert prof(prof.outer_end) == pytest.approx(1.0, abs=1e-9)
    with pytest.raises(lpm.CutoffThresholdError) as info:
        lpm.CutoffProfile.build(50, 1, 1)
    assert info.value.min_k == pytest.approx(96.82, rel=1e-4)


def test_numerical_verifiers():
    r = lpm.radial_check(lambda t: t**-0.5, lambda t: -0.5 * t**-1.5, [4.0, 0.0])
    assert r["det"] == pytest.approx(0.125)
    assert r["lambda_min"] == pytest.approx(0.25)
    d = lpm.verify_deform(1e4, 1)
    assert d["eta_observed"] > 0
    assert lpm.solve_w(1, 0.5) == pytest.approx(2 / 3)
    c = lpm.find_good_w0([-0.25, 0, 1], [0.5], kappa=0.5)
    assert abs(c["w0"]) < 0.1
    assert c["margin"] >= c["sigma"]
    assert c["sigma"] == pytest.approx(0.1 / math.log(10) ** 2)


def test_cli_entry_point():
    code, out, _ = lpm.run_cli(["verify", "cutoff", "--k", "10000", "--D", "1", "--c0", "1"])
    assert code == 0
    assert json.loads(out)["eps"] == pytest.approx(0.099158, rel=1e-5)
    code, _, _ = lpm.run_cli(["verify", "cutoff", "--k", "50", "--D", "1", "--c0", "1"])
    assert code == 2
