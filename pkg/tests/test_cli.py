"""Command-line interface: output contracts and exit codes."""

import json

import pytest

from racahbi.cli import main
from racahbi.morphisms import zeta
from racahbi.presentations import bannai_ito
from racahbi.terms import format_element, from_json_obj

SWAP_FILE = "alphabet X Y\nY*X -> X*Y\n"
CLASH_FILE = "alphabet a b c\nb*a -> a\nc*b -> b\n"


def run(capsys, argv):
    code = main(argv)
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_reduce_completion(capsys):
    code, out, err = run(capsys, ["reduce", "racah", "C*B*A"])
    assert code == 0
    assert out.strip() == (
        "-2*β + 2*A*B - 2*A*D - 2*B*C + 2*B*D - 2*C*D + A*B*C")
    assert err == ""


def test_reduce_bi(capsys):
    code, out, _ = run(capsys, ["reduce", "bi", "{X,Y} - Z"])
    assert code == 0
    assert out.strip() == "κ"


def test_reduce_ascii_aliases(capsys):
    code, out, _ = run(capsys, ["reduce", "racah",
                                "Omega_A - Omega_C + (1 + delta)*beta"])
    assert code == 0
    assert out.strip() == "0"


def test_reduce_json(capsys):
    code, out, _ = run(capsys, ["reduce", "bi", "Y*X", "--json"])
    assert code == 0
    obj = json.loads(out)
    rebuilt = from_json_obj(bannai_ito().alphabet, obj)
    assert rebuilt == bannai_ito().reduce("Y*X")


def test_reduce_parse_error(capsys):
    code, out, err = run(capsys, ["reduce", "bi", "(2X-3)(2X+1)/16"])
    assert code == 2
    assert out == ""
    assert err.startswith("parse error:")
    assert "line 1, column 13" in err


def test_reduce_unknown_algebra(capsys):
    code, _, err = run(capsys, ["reduce", "nope", "X"])
    assert code == 2
    assert err.startswith("error:")


def test_reduce_system_file(tmp_path, capsys):
    path = tmp_path / "swap.txt"
    path.write_text(SWAP_FILE, encoding="utf-8")
    code, out, _ = run(capsys, ["reduce", str(path), "Y*X + Y"])
    assert code == 0
    assert out.strip() == "Y + X*Y"


def test_confluence_racah(capsys):
    code, out, _ = run(capsys, ["confluence", "racah"])
    assert code == 0
    lines = out.strip().splitlines()
    assert all(line.startswith("resolvable") for line in lines[:-1])
    total = len(lines) - 1
    assert lines[-1] == f"{total}/{total} overlap ambiguities resolvable"
    assert total >= 15


def test_confluence_clash_file(tmp_path, capsys):
    path = tmp_path / "clash.txt"
    path.write_text(CLASH_FILE, encoding="utf-8")
    code, out, _ = run(capsys, ["confluence", str(path)])
    assert code == 1
    assert "UNRESOLVED  c*b*a:" in out
    assert "0/1 overlap ambiguities resolvable" in out


def test_confluence_json(tmp_path, capsys):
    path = tmp_path / "swap.txt"
    path.write_text(SWAP_FILE, encoding="utf-8")
    code, out, _ = run(capsys, ["confluence", str(path), "--json"])
    assert code == 0
    obj = json.loads(out)
    assert obj["overlaps"] == 0
    assert obj["resolvable"] == 0
    assert obj["reports"] == []


def test_map_zeta(capsys):
    code, out, _ = run(capsys, ["map", "zeta", "D"])
    assert code == 0
    assert out.strip() == format_element(zeta().apply("D"))


def test_map_tau_default_racah(capsys):
    code, out, _ = run(capsys, ["map", "tau", "D"])
    assert code == 0
    assert out.strip() == "-D"


def test_map_sigma_on_bi(capsys):
    code, out, _ = run(capsys, ["map", "sigma", "λ", "--alg", "bi"])
    assert code == 0
    assert out.strip() == "μ"


def test_map_rejects_unknown_name(capsys):
    with pytest.raises(SystemExit) as info:
        main(["map", "rho", "X"])
    assert info.value.code == 2


def test_filtration_check_yes(capsys):
    code, out, _ = run(capsys, ["filtration", "check", "4,4,6,8,9,9"])
    assert code == 0
    assert out.strip() == "filtration: yes"


def test_filtration_check_no(capsys):
    code, out, _ = run(capsys, ["filtration", "check", "0,0,1,0,0,0"])
    assert code == 1
    assert out.strip() == "filtration: no"


def test_filtration_check_sampled(capsys):
    code, out, _ = run(capsys,
                       ["filtration", "check", "1,1,2,0,0,0", "--sample", "4"])
    assert code == 0
    assert "filtration: yes" in out
    assert "consistent" in out


def test_filtration_check_sampled_witnesses(capsys):
    code, out, _ = run(capsys,
                       ["filtration", "check", "0,0,1,0,0,0", "--sample", "2"])
    assert code == 1
    assert "violations found" in out
    assert "witness Y . X -> degree 1 > 0" in out


def test_filtration_check_bad_weights(capsys):
    with pytest.raises(SystemExit) as info:
        main(["filtration", "check", "1,2"])
    assert info.value.code == 2


def test_filtration_check_json(capsys):
    code, out, _ = run(capsys, ["filtration", "check", "4,4,6,8,9,9", "--json"])
    assert code == 0
    assert json.loads(out) == {"filtration": True}


def test_filtration_lead(capsys):
    code, out, _ = run(capsys, ["filtration", "lead", "4,4,6,8,9,9", "14",
                                "1/16*Z*κ - 1/8*X*Y*Z + X - 3"])
    assert code == 0
    assert out.strip() == "1/16*Z*κ - 1/8*X*Y*Z"


def test_casimir_express(capsys):
    code, out, _ = run(capsys, ["casimir", "express", "Omega_A"])
    assert code == 0
    assert out.startswith("-315/4096 - 45/512*μ - 69/1024*λ - 45/512*κ")


def test_casimir_express_json(capsys):
    code, out, _ = run(capsys, ["casimir", "express", "Omega_C", "--json"])
    assert code == 0
    obj = json.loads(out)
    assert obj["variables"] == ["ι", "κ", "λ", "μ"]
    assert obj["terms"]
    for term in obj["terms"]:
        assert len(term["exponents"]) == 4


def test_casimir_express_non_member(capsys):
    code, out, err = run(capsys, ["casimir", "express", "A"])
    assert code == 1
    assert out == ""
    assert err.startswith("not expressible:")
    assert "not a Casimir" in err


def test_report_rank(tmp_path, capsys):
    code, out, _ = run(capsys, ["report", "rank", "--max-weight", "14",
                                "--out", str(tmp_path)])
    assert code == 0
    for name in ("rank_report.json", "rank_checks.csv",
                 "image_support.png", "weight_profile.png"):
        target = tmp_path / name
        assert target.is_file(), name
        assert target.stat().st_size > 0
        assert "wrote" in out and name in out
    obj = json.loads((tmp_path / "rank_report.json").read_text(encoding="utf-8"))
    assert obj["max_weight"] == 14
    assert obj["full_rank"] is True


def test_verify_all(capsys):
    code, out, _ = run(capsys, ["verify", "all", "--json"])
    assert code == 0
    obj = json.loads(out)
    assert obj["passed"] is True
    assert len(obj["checks"]) == 12
    assert all(c["passed"] for c in obj["checks"])
    assert obj["corpus"]["failed"] == []
    assert obj["corpus"]["total"] >= 150


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as info:
        main(["bogus-command"])
    assert info.value.code == 2
    with pytest.raises(SystemExit) as info:
        main([])
    assert info.value.code == 2
