"""Smoke checks of the python bindings: each main operation runs end to end
and returns the documented shape. Run directly (``python test_smoke.py``) or
under pytest."""

import fibercox as fc


def test_thicken_cycle():
    t = fc.thicken(fc.cycle_complex(5))
    labels = t["complex"]["vertices"]
    assert len(labels) == 10
    assert "x1|x3" in labels


def test_check_legal_exhaustive():
    out = fc.check_legal(fc.cycle_complex(5))
    assert out["ok"]
    assert out["certificate"]["granted"]
    assert out["report"]["mode"] == "exhaustive"
    assert out["report"]["rank"] == 5
    assert out["report"]["orbit"] == 32


def test_check_legal_refusal():
    square = {
        "vertices": ["a", "b", "c", "d"],
        "cubes": [{"dim": 2, "verts": ["a", "b", "c", "d"]}],
    }
    out = fc.check_legal(square)
    assert not out["ok"]
    assert "isolated corner" in out["certificate"]["refusal"]


def test_vcd_and_homology():
    assert fc.vcd(fc.cycle_complex(5))["vcd"] == 2
    h = fc.homology(fc.cycle_complex(5), coeffs="z")
    assert [g["betti"] for g in h["groups"]] == [1, 1]
    assert h["euler"] == 0


def test_smith_normal_form():
    s = fc.smith_normal_form([[2, 4], [6, 8]])
    assert s["rank"] == 2
    assert s["invariant_factors"] == ["2", "4"]


def test_davis_quotient_pentagon():
    out = fc.davis_quotient(
        {"vertices": ["x1", "x2", "x3", "x4", "x5"],
         "edges": [["x1", "x2"], ["x2", "x3"], ["x3", "x4"], ["x4", "x5"], ["x5", "x1"]]}
    )
    assert out["ok"]
    assert out["f_vector"] == [32, 80, 40]


def test_verify_properties():
    assert fc.verify_properties(fc.cycle_complex(5))["ok"]


def test_lemma_suite():
    rep = fc.lemma_suite(fc.thicken(fc.cycle_complex(5)), level=2, restarts=8)
    assert rep["ok"]
    assert rep["counterexamples"] == 0


def test_pipeline_chain():
    chain = fc.pipeline(cycle=6, iterations=1, restarts=4, seed=3)
    assert chain["schema"] == "fibercox.certificate-chain/1"
    assert chain["ok"]


def test_family_report():
    rep = fc.family_report([5, 6])
    assert rep["ok"]
    assert [row["vertices"] for row in rep["rows"]] == [10, 18]


def main():
    checks = [v for k, v in sorted(globals().items()) if k.startswith("test_")]
    for check in checks:
        check()
        print(f"ok {check.__name__}")
    print(f"{len(checks)} python smoke checks passed")


if __name__ == "__main__":
    main()
