import subprocess
import sys

import pytest

from grbrauer.cli import main
from grbrauer.graph import BrauerGraph
from grbrauer.io import (
    ParseError,
    corpus_names,
    corpus_path,
    parse_bg,
    parse_sqp,
    quiver_dot,
    serialize_bg,
    serialize_sqp,
)
from grbrauer.presentation import build_quiver


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    return code, capsys.readouterr().out


def kv(out):
    d = {}
    for line in out.splitlines():
        if line and not line.startswith(" "):
            k, _, v = line.partition(" ")
            d.setdefault(k, v)
    return d


def test_roundtrip_corpus():
    for name in corpus_names():
        text = corpus_path(name).read_text()
        if name.endswith(".bg"):
            assert serialize_bg(parse_bg(text)) == text
        else:
            assert serialize_sqp(parse_sqp(text)) == text


def test_parse_error_location():
    with pytest.raises(ParseError) as exc:
        parse_bg('{\n  "vertices": [,\n}')
    assert exc.value.line == 2


@pytest.mark.parametrize("name", ["g_t2.bg", "g_c4.bg"])
def test_validate_ok(capsys, name):
    code, out = run(capsys, "validate", corpus_path(name))
    assert code == 0 and "VALID yes" in out


def test_validate_duplicate(capsys, tmp_path):
    p = tmp_path / "dup.bg"
    p.write_text(
        '{"edges": [{"id": "1", "ends": ["a", "b"]}, {"id": "1", "ends": ["c", "d"]}],'
        ' "vertices": [{"id": "x", "multiplicity": 2, "order": ["a", "c"]},'
        ' {"id": "y", "multiplicity": 1, "order": ["b", "d"]}]}'
    )
    code, out = run(capsys, "validate", p)
    assert code == 1 and "ERROR DuplicateId" in out


def test_validate_parse_error(capsys, tmp_path):
    p = tmp_path / "bad.bg"
    p.write_text("{\n  oops\n}")
    code, out = run(capsys, "validate", p)
    assert code == 1 and kv(out)["ERROR"] == "ParseError" and kv(out)["LINE"] == "2"


def test_info_t2(capsys):
    code, out = run(capsys, "info", corpus_path("g_t2.bg"))
    d = kv(out)
    assert (d["KAPPA0"], d["KAPPA1"], d["M0"]) == ("1", "0", "2")
    assert "  v0 m=2 val=1 grd=2" in out and "  c m=1 val=3 grd=3" in out and "  u m=1 val=2 grd=2" in out


def test_info_star3_hh(capsys):
    d = kv(run(capsys, "info", corpus_path("g_star3.bg"))[1])
    assert (d["KAPPA0"], d["KAPPA1"], d["M0"]) == ("1", "0", "3")
    assert kv(run(capsys, "info", corpus_path("g_hh.bg"))[1])["KAPPA1"] == "1"


@pytest.mark.parametrize("name,algebra,verdict", [
    ("g_t2.bg", "grA", "Domestic(1)"),
    ("g_star3.bg", "grA", "NotPolynomialGrowth"),
    ("g_c4.bg", "A", "Domestic(1)"),
])
def test_classify(capsys, name, algebra, verdict):
    code, out = run(capsys, "classify", corpus_path(name), "--algebra", algebra)
    assert code == 0 and kv(out)["VERDICT"] == verdict


def test_quiver_text(capsys):
    code, out = run(capsys, "quiver", corpus_path("g_t2.bg"), "--ideal", "I2")
    assert kv(out)["ARROWS"] == "6"
    assert "  av0_0 av0_0" in out and "  au_1 au_0" in out
    assert "P 1 ac_2 ac_1 ac_0" in out and "P 3 ac_1 ac_0 ac_2" in out
    code, out = run(capsys, "quiver", corpus_path("g_star3.bg"), "--ideal", "I")
    assert "  [1] av0_0 av0_0 av0_0 - ac_3 ac_2 ac_1 ac_0" in out


def test_quiver_dot_parses(capsys):
    pydot = pytest.importorskip("pydot")
    code, out = run(capsys, "quiver", corpus_path("g_t2.bg"), "--format", "dot")
    graphs = pydot.graph_from_dot_data(out)
    assert graphs and len(graphs[0].get_edges()) == 6


def test_bands(capsys):
    code, out = run(capsys, "bands", corpus_path("kronecker.sqp"), "--max-len", 8)
    assert kv(out)["COUNT"] == "1"
    code, out = run(capsys, "bands", corpus_path("g_t2.bg"), "--max-len", 16)
    assert kv(out)["COUNT"] == "1" and "  ac_0 av0_0^-1 ac_2 ac_1" in out
    code, out = run(capsys, "bands", corpus_path("g_c4.bg"), "--max-len", 12)
    assert int(kv(out)["COUNT"]) >= 2
    assert "  aP_0 aQ_1^-1 aS_1 aP_1^-1 aQ_0 aQ_2 aS_0^-1" in out  # a rotation of the printed b1


def test_strings(capsys):
    code, out = run(capsys, "strings", corpus_path("kronecker.sqp"), "--max-len", 2)
    assert kv(out)["COUNT"] == "6"


def test_oracle_commands(capsys):
    code, out = run(capsys, "oracle", corpus_path("g_t2.bg"), "--check", "census", "--max-len", 16)
    assert code == 0 and kv(out)["AGREE"] == "yes"
    code, out = run(capsys, "oracle", corpus_path("g_t2.bg"), "--check", "rcount", "--edge", "3")
    assert code == 0 and kv(out)["OBSERVED"] == "4"
    code, out = run(capsys, "oracle", corpus_path("g_t2.bg"), "--check", "rcount", "--edge", "1")
    assert code == 0 and kv(out)["SKIPPED"] == "yes"
    code, out = run(capsys, "oracle", corpus_path("g_c4.bg"), "--check", "witness")
    assert code == 0 and kv(out)["FOUND"] == "yes"
    code, out = run(capsys, "oracle", corpus_path("g_t2.bg"), "--check", "suite", "--trials", 10)
    assert code == 0 and kv(out)["FAILURES"] == "0"


def test_oracle_disagreement_exit_code(capsys, tmp_path, monkeypatch):
    from grbrauer import oracle
    monkeypatch.setattr(oracle, "predicted_census", lambda g: 5)
    code, out = run(capsys, "oracle", corpus_path("g_t2.bg"), "--check", "census", "--max-len", 8)
    assert code == 2 and kv(out)["AGREE"] == "no"


def test_deterministic_reports(capsys):
    outs = {run(capsys, "bands", corpus_path("g_c4.bg"), "--max-len", 10)[1] for _ in range(2)}
    assert len(outs) == 1


def test_console_entry_point():
    res = subprocess.run([sys.executable, "-m", "grbrauer.cli", "classify", str(corpus_path("square.bg"))],
                         capture_output=True, text=True)
    assert res.returncode == 0 and "VERDICT Domestic(2)" in res.stdout
