import json

import pytest

import config
from run import EXIT_MATCH, EXIT_MISMATCH, EXIT_USAGE, main


@pytest.fixture(autouse=True)
def restore_config(monkeypatch):
    monkeypatch.setattr(config, "MAX_ORACLE_ORDER", config.MAX_ORACLE_ORDER)
    monkeypatch.setattr(config, "PROGRESS", config.PROGRESS)


def test_no_command_prints_help(capsys):
    assert main([]) == EXIT_MATCH
    assert "reproduce" in capsys.readouterr().out


def test_unknown_command():
    assert main(["frobnicate"]) == EXIT_USAGE


def test_classify_json(capsys):
    assert main(["-f", "json", "classify", "-g", "4,4,4,4"]) == EXIT_MATCH
    document = json.loads(capsys.readouterr().out)
    assert document["group"] == "4,4,4,4"
    assert document["verdict"] == "K3Exceptional"


def test_classify_table(capsys):
    assert main(["classify", "-g", "2,2,2,2,2,2"]) == EXIT_MATCH
    assert "ProductType" in capsys.readouterr().out


def test_bad_group(capsys):
    assert main(["classify", "-g", "2,x"]) == EXIT_USAGE
    assert capsys.readouterr().err.startswith("error:")


def test_extensions(capsys):
    assert main(["-f", "json", "extensions", "--sub", "2", "--quot", "2"]) == EXIT_MATCH
    document = json.loads(capsys.readouterr().out)
    assert set(document["extensions"]) == {"2,2", "4"}


def test_extension_exists(capsys):
    assert main(["-f", "json", "extensions", "--sub", "2", "--quot", "2", "--total", "2,4"]) == EXIT_MATCH
    assert json.loads(capsys.readouterr().out)["exists"] is False


def test_filter_baskets(tmp_path, capsys):
    baskets = [
        [{"r": 3, "b": 1, "n": 8}],
        [{"r": 2, "b": 1, "n": 9}],
    ]
    path = tmp_path / "baskets.json"
    path.write_text(json.dumps(baskets))
    assert main(["-q", "-f", "json", "filter-baskets", "-g", "2,2,2,2,2", "-i", str(path), "--mode", "cyclic"]) == EXIT_MATCH
    document = json.loads(capsys.readouterr().out)
    assert [entry["basket"] for entry in document] == [baskets[0]]


def test_reproduce_needs_a_target():
    assert main(["reproduce"]) == EXIT_USAGE


def test_reproduce_unknown_target():
    assert main(["reproduce", "-t", "table99"]) == EXIT_USAGE


def test_reproduce_target(capsys):
    assert main(["-q", "reproduce", "-t", "prop1_4"]) == EXIT_MATCH
    assert "prop1_4: 6 of 20" in capsys.readouterr().out


def test_reproduce_mismatch(tmp_path, monkeypatch, capsys):
    document = {"target": "prop8_2", "rows": [{"key": "mu=2", "feasible": True}]}
    (tmp_path / "prop8_2.json").write_text(json.dumps(document))
    monkeypatch.setattr(config, "EXPECTED_DIR", str(tmp_path))
    assert main(["-q", "reproduce", "-t", "prop8_2"]) == EXIT_MISMATCH
    assert "MISMATCH" in capsys.readouterr().out


def test_catalog_check(capsys):
    assert main(["catalog", "dump", "--check"]) == EXIT_MATCH
    out = capsys.readouterr().out
    assert out.startswith("sha256 ")
    assert "matches" in out


def test_catalog_dump_is_canonical(capsys):
    assert main(["catalog", "dump"]) == EXIT_MATCH
    first = capsys.readouterr().out
    assert main(["catalog", "dump"]) == EXIT_MATCH
    assert capsys.readouterr().out == first
    assert set(json.loads(first)) >= {"maximal_k3", "nikulin"}


def test_reproduce_json_is_one_document(capsys):
    assert main(["-q", "-f", "json", "reproduce", "-t", "prop8_2", "-t", "prop1_4"]) == EXIT_MATCH
    documents = json.loads(capsys.readouterr().out)
    assert [document["target"] for document in documents] == ["prop8_2", "prop1_4"]
    assert all(document["match"] for document in documents)


def test_max_order_reaches_the_oracles(capsys):
    assert main(["-q", "--max-order", "8", "reproduce", "-t", "table2"]) == EXIT_MATCH
    assert config.MAX_ORACLE_ORDER == 8
    assert "0 disagreements up to order 8" in capsys.readouterr().out
