import json
from pathlib import Path

import pytest
from hypothesis import given, strategies as st

from convspace.errors import ParseError, ResolveError, Unsupported
from convspace.omega import Ramp
from convspace.order import chain
from convspace.spacefile import format_doc, parse, run, to_dot, to_json, to_record, topology_from_json
from convspace.spacefile.cli import main
from convspace.topology import from_preorder, sierpinski
from conftest import spaces

DEMO = Path(__file__).resolve().parents[1] / "demos" / "worked_examples.ccc"


def test_parse_poset():
    doc = parse("poset C2 = {0 < 1}")
    (st_,) = doc.statements
    assert st_.kind == "poset" and st_.args == (("0", "1"), (("0", "1"),))


def test_parse_builtin_and_query():
    doc = parse("omega B = beta\nomega B' = coreflect B D'\nquery compare B' B expect finer\n")
    assert [s.kind for s in doc.statements] == ["omega", "omega", "query"]
    q = doc.queries[0]
    assert q.form == "compare" and q.args == ("B'", "B") and q.expect == "finer"
    assert q.span.line == 3


def test_parse_net_residues():
    doc = parse("omega E = E\nnet alt on E = seq (a, 2n+1, n)")
    assert doc.statements[1].args == ("E", ("a", Ramp(2, 1), Ramp(1, 0)))


def test_end_to_end_coreflect():
    doc = parse("poset C2 = {0 < 1}\nspace X = alexandroff of C2\nquery coreflect X D expect equal\n")
    (r,) = run(doc)
    assert r.status == "pass" and r.value == "equal"


@pytest.mark.parametrize("text, line, column", [
    ("poset P = {0 < }", 1, 16),
    ("space X = {a} opens {{}, {a}\n", 1, 29),
    ("\nquery tensor X", 2, 15),
    ("omega B = zeta", 1, 11),
    ("query coreflect X Q", 1, 19),
    ("query export X svg", 1, 16),
    ("omega W = upper of C2", 1, 20),
])
def test_parse_errors_are_located(text, line, column):
    with pytest.raises(ParseError) as info:
        parse(text, resolve=False)
    assert (info.value.line, info.value.column) == (line, column)


def test_resolve_errors():
    with pytest.raises(ResolveError) as info:
        parse("space X = alexandroff of P")
    assert info.value.name == "P"
    with pytest.raises(ParseError):
        parse("omega B = beta\nomega B = gamma")
    with pytest.raises(ResolveError):
        parse("omega B = beta\nquery sclass B nope ∞")


@given(st.text(alphabet="poset space omega net query = {}()<,#abxyDS'0123\n ", max_size=80))
def test_parser_is_total(text):
    try:
        doc = parse(text)
    except (ParseError, ResolveError):
        return
    assert parse(format_doc(doc)) == doc


def test_demo_round_trip():
    doc = parse(DEMO.read_text(encoding="utf-8"))
    text = format_doc(doc)
    assert parse(text) == doc
    assert format_doc(parse(text)) == text


def test_poset_element_order_survives():
    doc = parse("poset P = {z, a < b}")
    again = parse(format_doc(doc))
    assert again == doc and again.statements[0].args[0] == ("z", "a", "b")


def test_dot_export():
    text = to_dot(chain(2), "C2")
    assert text.count("->") == 1
    assert to_dot(from_preorder(chain(3))).count("->") == 2
    with pytest.raises(Unsupported):
        to_dot(object())


def test_sierpinski_json():
    assert json.loads(to_json(sierpinski())) == {"ground": ["⊥", "⊤"], "opens": [[], ["⊤"], ["⊥", "⊤"]]}


@given(spaces(max_size=4, t0=False))
def test_json_round_trip(X):
    from convspace.topology import relabel
    X = relabel(X, [str(x) for x in X.ground])
    again = topology_from_json(to_json(X))
    assert again == X
    assert to_json(again) == to_json(X)


def test_omega_json_is_deterministic():
    from convspace.omega import beta, coreflect_omega
    a = to_json(coreflect_omega(beta(), "D'"))
    b = to_json(coreflect_omega(beta(), "D'"))
    assert a == b and json.loads(a)["critical"] == {"fin": [], "chain": [], "tail": None}


def test_runner_reports_are_deterministic():
    doc = parse(DEMO.read_text(encoding="utf-8"))
    first = [r.as_dict() for r in run(doc)]
    second = [r.as_dict() for r in run(doc)]
    assert json.dumps(first, sort_keys=True) == json.dumps(second, sort_keys=True)
    assert all(r["status"] == "pass" for r in first)


def test_runner_expectations_and_errors():
    doc = parse("omega E = E\nquery cspace E expect true\n"
                "space S = sierpinski\nspace X = {a} opens {{}, {a}}\nquery compare S X\n")
    fail, err = run(doc)
    assert fail.status == "fail" and fail.value == "false"
    assert err.status == "error" and "Unsupported" in err.detail


def test_cli_exit_codes(tmp_path, capsys):
    assert main(["run", str(DEMO)]) == 0
    out = capsys.readouterr().out
    assert out.count("PASS") == 16
    bad = tmp_path / "bad.ccc"
    bad.write_text("omega E = E\nquery cspace E expect true\n", encoding="utf-8")
    assert main(["run", str(bad), "--json"]) == 1
    report = json.loads(capsys.readouterr().out)
    assert report[0]["status"] == "fail"
    broken = tmp_path / "broken.ccc"
    broken.write_text("space = \n", encoding="utf-8")
    assert main(["run", str(broken)]) == 2
    assert "line 1" in capsys.readouterr().err


def test_cli_export(tmp_path, capsys):
    f = tmp_path / "x.ccc"
    f.write_text("poset C2 = {0 < 1}\nspace X = alexandroff of C2\n", encoding="utf-8")
    assert main(["run", str(f), "--export", "json"]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    assert json.loads(lines[-1]) == {"X": {"ground": ["0", "1"], "opens": [[], ["1"], ["0", "1"]]}}
