import pytest

import bracekit


def test_worked_example():
    g = bracekit.resolve("paper_7_3")
    assert g.order == 21
    assert g.label(g.mul("(0,1)", "(1,0)")) == "(2,1)"
    b = bracekit.build(g, "main")
    assert b.eval("((0,1)+(0,1))(1,0)+(1,0)") == "(5,2)"
    assert b.eval("(0,1)(1,0)+(0,1)(1,0)") == "(4,2)"
    report = b.verify()
    assert report["is_left_brace"]
    assert not report["two_sided"]


def test_dict_specs_and_round_trip():
    g = bracekit.resolve({"semidirect": {"normal": "cyclic(7)", "acting": "cyclic(3)", "exponent": 2}})
    assert g.table == bracekit.resolve("paper_7_3").table
    b = bracekit.build(bracekit.resolve("heisenberg(3)"), "class2")
    again = bracekit.brace_from_dict(b.to_dict())
    assert again.additive.table == b.additive.table
    assert again.verify()["two_sided"]


def test_decompose_and_solutions():
    d = bracekit.decompose(bracekit.resolve("sl2_3"), seed=1)
    assert d["ok"]
    b = bracekit.build(bracekit.resolve("sym(4)"), "main-skew")
    assert b.kind == "skew"
    sol = bracekit.solution(b)
    check = bracekit.check_ybe(sol)
    assert check["braid"] and check["nondegenerate"]
    left = bracekit.solution(bracekit.build(bracekit.resolve("alt(4)"), "main"))
    n = left["size"]
    sigma = left["sigma"]
    sigma[5 * n], sigma[5 * n + 3] = sigma[5 * n + 3], sigma[5 * n]
    broken = bracekit.check_ybe(left)
    assert not broken["braid"]
    assert len(broken["braid_witness"]) == 3


def test_errors_and_run():
    with pytest.raises(bracekit.PreconditionError, match="Sylow 2-subgroup is non-abelian"):
        bracekit.build(bracekit.resolve("sym(4)"), "main")
    with pytest.raises(bracekit.InputError):
        bracekit.resolve("heisenberg(4)")
    report, code = bracekit.run("build", "dihedral(8)", construction="class2")
    assert code == 2
    assert "even order" in report["error"]
    report, code = bracekit.run("search", "cyclic(5)")
    assert code == 0 and report["count"] == 1
    assert len(bracekit.search(bracekit.resolve("cyclic(3)"))) == 1
