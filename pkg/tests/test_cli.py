import io
import json
import subprocess
import sys

import pytest

from edgehrhart import cli
from edgehrhart.graphcore import format_graph
from edgehrhart.oracle import LatticePointCount
from edgehrhart.series import RationalSeries

from corpus import SMALL_CORPUS, composites


@pytest.fixture
def graph_file(tmp_path):
    def write(gr, name="g.graph"):
        path = tmp_path / name
        path.write_text(format_graph(gr))
        return str(path)
    return write


@pytest.fixture
def bowtie_file(graph_file):
    return graph_file(SMALL_CORPUS["bowtie"], "bowtie.graph")


def invoke(argv):
    out, err = io.StringIO(), io.StringIO()
    args = cli.build_parser().parse_args(argv)
    cfg = cli.RunConfig(args.subcommand, args.graph, args.order, args.fmt, args.cycle_cap,
                        args.walk_cap, args.pair_cap, args.lcm_cap, args.lp_cap,
                        getattr(args, "max_dilation", 4), getattr(args, "groebner", False),
                        getattr(args, "face", None))
    code = cli.run(cfg, out, err)
    return code, out.getvalue(), err.getvalue()


def test_series(bowtie_file):
    code, out, _ = invoke(["series", bowtie_file])
    assert code == 0
    assert out == "(1 + t + t^2 + 2*t^3)/(1-t)^7\n"


def test_check_occ(bowtie_file, graph_file):
    code, out, _ = invoke(["check-occ", bowtie_file])
    assert (code, out) == (0, "odd cycle condition: NOT satisfied; 1 exceptional pair\n")
    code, out, _ = invoke(["check-occ", graph_file(SMALL_CORPUS["k5"])])
    assert out == "odd cycle condition: satisfied; 0 exceptional pairs\n"


def test_verify_table(bowtie_file):
    code, out, _ = invoke(["verify", bowtie_file, "--max-dilation", "3"])
    assert code == 0
    rows = out.splitlines()
    assert rows[0].split() == ["m", "pipeline", "lp", "monoid", "match"]
    want = [1, 8, 36, 121]
    for m, row in enumerate(rows[1:5]):
        assert row.split() == [str(m)] + [str(want[m])] * 3 + ["yes"]
    assert rows[-1] == "all counts agree"


def test_verify_mismatch_is_internal(bowtie_file, monkeypatch):
    monkeypatch.setattr(cli, "count_lp", lambda g, m, cap: LatticePointCount(m, -1, "x"))
    code, out, _ = invoke(["verify", bowtie_file, "--max-dilation", "1"])
    assert code == 3
    assert "MISMATCH" in out


def test_poly(bowtie_file):
    code, out, _ = invoke(["poly", bowtie_file])
    assert code == 0
    assert "i(m) = C(m + 6, 6) + C(m + 5, 6) + C(m + 4, 6) + 2*C(m + 3, 6)" in out
    assert "i(0..4) = 1, 8, 36, 121, 336" in out


def test_ideal_with_groebner(bowtie_file):
    code, out, _ = invoke(["ideal", bowtie_file, "--groebner"])
    assert code == 0
    assert "θ_{0,1}*e_3 - e_0*e_2*e_4*e_6" in out
    assert "groebner basis (lex): 4" in out


def test_factor_and_face(graph_file):
    path = graph_file(composites()["c4+c4@edge"])
    code, out, _ = invoke(["factor", path])
    assert code == 0 and "equal: NO" not in out
    code, out, _ = invoke(["factor", path, "--face", "0"])
    assert code == 0
    code, _, err = invoke(["factor", path, "--face", "2"])
    assert code == 1 and "not a separating face" in err


def test_factor_face_violation_is_user_error(graph_file):
    path = graph_file(SMALL_CORPUS["bowtie"])
    code, _, err = invoke(["factor", path, "--face", "3"])
    assert code == 1 and "hypothesis (2)" in err


def test_roots_polygon_tree(graph_file):
    code, out, _ = invoke(["roots", graph_file(SMALL_CORPUS["ladder3"])])
    assert code == 0
    assert "integer roots: -2, -1" in out
    assert "critical line: Re = -1.5" in out
    assert "claim holds: yes" in out


@pytest.mark.parametrize("text, code, stage", [
    ("a b\nc d\n", 1, "parse"),
    ("a a\n", 1, "parse"),
    ("a b\na b\n", 1, "parse"),
])
def test_bad_graphs(tmp_path, text, code, stage):
    path = tmp_path / "bad.graph"
    path.write_text(text)
    got, out, err = invoke(["series", str(path)])
    assert got == code
    assert err.startswith(f"error [{stage}]")
    assert out == ""


def test_missing_file():
    code, _, err = invoke(["series", "/nonexistent/file.graph"])
    assert code == 1 and err.startswith("error [read]")


def test_resource_limit(bowtie_file):
    code, _, err = invoke(["series", bowtie_file, "--lcm-cap", "2"])
    assert code == 2 and "resource limit" in err and "[pipeline]" in err


def test_bad_caps(bowtie_file):
    code, _, err = invoke(["series", bowtie_file, "--cycle-cap", "0"])
    assert code == 1 and "cycle-cap" in err
    code, _, err = invoke(["verify", bowtie_file, "--max-dilation", "-1"])
    assert code == 1


def test_internal_error(bowtie_file, monkeypatch):
    def boom(*a, **k):
        raise AssertionError("denominator power mismatch")
    monkeypatch.setattr(cli, "run_pipeline", boom)
    code, _, err = invoke(["series", bowtie_file])
    assert code == 3 and err.startswith("internal error [pipeline]")


@pytest.mark.parametrize("cmd", cli.SUBCOMMANDS)
def test_json_output(bowtie_file, cmd):
    code, out, _ = invoke([cmd, bowtie_file, "--format", "json"]
                          + (["--max-dilation", "2"] if cmd == "verify" else []))
    assert code == 0
    doc = json.loads(out)
    assert set(doc) == {"command", "input", "graph", "order", "result", "exit_code"}
    assert doc["command"] == cmd and doc["exit_code"] == 0 and doc["order"] == "lex"
    assert doc["graph"]["edges"][0] == "v0 v1"
    series = doc["result"].get("series")
    if series:
        assert str(RationalSeries.parse(series)) == series
        assert RationalSeries.parse(series) == RationalSeries((1, 1, 1, 2), 7)


def test_json_factor_series_round_trip(graph_file):
    code, out, _ = invoke(["factor", graph_file(composites()["bowtie+L2@edge"]),
                           "--format", "json"])
    doc = json.loads(out)["result"]
    assert doc["all_equal"]
    for rep in [doc["first"]] + [s for s in doc["second"] if "full" in s]:
        for key in ("full", "predicted"):
            assert str(RationalSeries.parse(rep[key])) == rep[key]


def test_grevlex_flag(bowtie_file):
    code, out, _ = invoke(["series", bowtie_file, "--order", "grevlex"])
    assert out == "(1 + t + t^2 + 2*t^3)/(1-t)^7\n"


def test_repeat_runs_identical(bowtie_file):
    for cmd in cli.SUBCOMMANDS:
        first = invoke([cmd, bowtie_file, "--format", "json"])
        assert invoke([cmd, bowtie_file, "--format", "json"]) == first


def test_module_entry_point(bowtie_file):
    res = subprocess.run([sys.executable, "-m", "edgehrhart", "series", bowtie_file],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0
    assert res.stdout == "(1 + t + t^2 + 2*t^3)/(1-t)^7\n"


def test_main_returns_code(bowtie_file, capsys):
    assert cli.main(["check-occ", bowtie_file]) == 0
    assert "NOT satisfied" in capsys.readouterr().out
    with pytest.raises(SystemExit):
        cli.main(["nosuch", bowtie_file])
