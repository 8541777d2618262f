import json

import pytest

from rhoslice.cli import (
    DocumentError,
    family_spec,
    load_document,
    main,
    parse_document,
    render_document,
)

K946_DOC = {
    "schema": "rhoslice.knot/1",
    "pattern": {
        "name": "9_46",
        "seifert": [[0, 1], [2, 0]],
        "curves": [
            {"name": "alpha", "class": ["1", "0"]},
            {"name": "beta", "class": ["0", "1"]},
        ],
    },
    "companions": {"alpha": {"symbol": "rA"}, "beta": {"symbol": "rB"}},
}

FAMILY_DOC = {
    "schema": "rhoslice.knot/1",
    "pattern": K946_DOC["pattern"],
    "knots": {
        "K1": {"companions": {"alpha": {"symbol": "rA1"},
                              "beta": {"symbol": "rB1"}}},
        "K2": {"companions": {"alpha": {"symbol": "rA2"},
                              "beta": {"symbol": "rB2"}}},
    },
    "family": [
        {"knot": "K1", "multiplicity": 1},
        {"knot": "K2", "multiplicity": -2},
    ],
}

TREFOIL_DOC = {"schema": "rhoslice.knot/1", "seifert": [[-1, 1], [0, -1]]}


def write_doc(tmp_path, doc, name="knot.json"):
    path = tmp_path / name
    path.write_text(json.dumps(doc), encoding="utf-8")
    return str(path)


# -- parsing and round trips --------------------------------------------------


@pytest.mark.parametrize("doc", [K946_DOC, FAMILY_DOC, TREFOIL_DOC])
def test_parse_render_round_trip(doc):
    parsed = parse_document(doc)
    again = parse_document(json.loads(render_document(parsed)))
    assert again == parsed
    assert render_document(again) == render_document(parsed)


def test_family_spec_construction():
    spec = family_spec(parse_document(FAMILY_DOC))
    assert [m.multiplicity for m in spec.members] == [1, -2]
    assert spec.names == ("K1", "K2")
    spec1 = family_spec(parse_document(K946_DOC))
    assert len(spec1.members) == 1


@pytest.mark.parametrize("mangle, message", [
    (lambda d: d.update(seifert=[[0, 1], [1, 0]]), "±1"),
    (lambda d: d.update(seifert=[[0, 1.5], [2, 0]]), "non-integer"),
    (lambda d: d.update(schema="other/9"), "unsupported schema"),
    (lambda d: d.update(surprises=1), "unknown field"),
    (lambda d: d.pop("seifert"), "needs 'seifert' or 'pattern'"),
])
def test_parse_errors_name_the_field(mangle, message):
    doc = {"schema": "rhoslice.knot/1", "seifert": [[-1, 1], [0, -1]]}
    mangle(doc)
    with pytest.raises(DocumentError, match=message):
        parse_document(doc)


def test_parse_errors_in_pattern_documents():
    doc = json.loads(json.dumps(K946_DOC))
    doc["companions"]["gamma"] = {"symbol": "x"}
    with pytest.raises(DocumentError, match="no such curve"):
        parse_document(doc)
    doc = json.loads(json.dumps(K946_DOC))
    doc["companions"]["alpha"] = {"symbol": "x", "rho0": "1"}
    with pytest.raises(DocumentError, match="exactly one"):
        parse_document(doc)
    doc = json.loads(json.dumps(FAMILY_DOC))
    doc["family"][0]["knot"] = "K9"
    with pytest.raises(DocumentError, match="unresolved knot name"):
        parse_document(doc)
    doc = json.loads(json.dumps(FAMILY_DOC))
    doc["family"][0]["multiplicity"] = 0
    with pytest.raises(DocumentError, match="nonzero"):
        parse_document(doc)


def test_load_document_diagnostics(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text('{"schema": ', encoding="utf-8")
    with pytest.raises(DocumentError, match="line 1"):
        load_document(str(path))


# -- commands and exit codes ----------------------------------------------------


def test_info_command(tmp_path, capsys):
    path = write_doc(tmp_path, K946_DOC)
    assert main(["info", path]) == 0
    out = capsys.readouterr().out
    assert "2*t^2 - 5*t + 2" in out
    assert "Q[s]/(s - 2)" in out and "Q[s]/(s - 1/2)" in out
    assert "alpha" in out and "beta" in out
    assert "metabolizer: (1, 0)" in out


def test_info_trefoil(tmp_path, capsys):
    path = write_doc(tmp_path, TREFOIL_DOC)
    assert main(["info", path]) == 0
    out = capsys.readouterr().out
    assert "t^2 - t + 1" in out
    assert "metabolizer: none" in out


def test_obstruct_exit_codes(tmp_path, capsys):
    path = write_doc(tmp_path, K946_DOC)
    assert main(["obstruct", path, "--cmax", "2"]) == 0
    out = capsys.readouterr().out
    assert "OBSTRUCTED" in out

    equal = json.loads(json.dumps(K946_DOC))
    equal["companions"] = {"alpha": {"symbol": "r"}, "beta": {"symbol": "r"}}
    path2 = write_doc(tmp_path, equal, "equal.json")
    assert main(["obstruct", path2, "--cmax", "2"]) == 2
    out = capsys.readouterr().out
    assert "INCONCLUSIVE" in out and "witness" in out

    bad = json.loads(json.dumps(K946_DOC))
    bad["pattern"]["curves"] = [{"name": "gamma", "class": ["1", "1"]}]
    bad["companions"] = {"gamma": {"symbol": "rG"}}
    path3 = write_doc(tmp_path, bad, "bad.json")
    assert main(["obstruct", path3, "--cmax", "1"]) == 1
    err = capsys.readouterr().err
    assert "error:" in err and "gamma" in err


def test_obstruct_structured_deterministic(tmp_path, capsys):
    path = write_doc(tmp_path, K946_DOC)
    assert main(["obstruct", path, "--cmax", "2", "--output", "structured"]) == 0
    first = capsys.readouterr().out
    assert main(["obstruct", path, "--cmax", "2", "--output", "structured"]) == 0
    second = capsys.readouterr().out
    assert first == second
    data = json.loads(first)
    assert data["schema"] == "rhoslice.report/1"
    assert data["verdict"] == "OBSTRUCTED"
    assert len(data["cells"]) == 12
    assert data["uniform_in_c"] is True
    assert data["audit"]


def test_obstruct_numeric_mode(tmp_path, capsys):
    doc = json.loads(json.dumps(K946_DOC))
    doc["companions"] = {
        "alpha": {"seifert": [[1, -1], [0, 1]]},   # left trefoil: +4/3
        "beta": {"rho0": "-4/3"},
    }
    path = write_doc(tmp_path, doc, "numeric.json")
    assert main(["obstruct", path, "--cmax", "2", "--mode", "numeric"]) == 0
    assert "OBSTRUCTED" in capsys.readouterr().out


def test_signature_command(tmp_path, capsys):
    path = write_doc(tmp_path, TREFOIL_DOC)
    assert main(["signature", path]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["schema"] == "rhoslice.signature/1"
    assert data["jumps"] == [{"jump": -2, "theta": "1/6"}]
    assert data["rho0"] == {"exact": "-4/3"}

    assert main(["signature", path, "--emit", "table"]) == 0
    out = capsys.readouterr().out
    assert "(1/6, 1/2): -2" in out
    assert "signature integral: -4/3" in out


def test_signature_unknot(tmp_path, capsys):
    path = write_doc(tmp_path, {"schema": "rhoslice.knot/1", "seifert": []})
    assert main(["signature", path]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["jumps"] == []
    assert data["rho0"] == {"exact": "0"}


def test_missing_file_is_an_error(capsys):
    assert main(["info", "/nonexistent/file.json"]) == 1
    assert "error:" in capsys.readouterr().err
