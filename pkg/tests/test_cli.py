"""Command-line interface: exit codes, formats, determinism."""

import json

import pytest

from hopf16 import catalog
from hopf16.cli import run


def test_list(capsys):
    assert run(["list"]) == 0
    out = capsys.readouterr().out
    for name in catalog.NAMES:
        assert name in out


def test_verify_ok(capsys):
    assert run(["verify", "Ha1", "HC1s"]) == 0
    out = capsys.readouterr().out
    assert "ok" in out


def test_unknown_name_is_usage_error(capsys):
    assert run(["build", "NoSuchAlgebra"]) == 2
    err = capsys.readouterr().err
    assert "NoSuchAlgebra" in err
    assert "Ha1" in err            # the message lists the valid names


def test_missing_subcommand_is_usage_error(capsys):
    assert run([]) == 2
    assert run(["frobnicate"]) == 2
    capsys.readouterr()


def test_flags_accepted_after_subcommand(capsys):
    assert run(["profile", "HBX", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data[0]["name"] == "HBX"
    assert data[0]["k0_label"] == "K5.5"
    assert data[0]["certified"] is True


def test_build_out_and_external_catalog(tmp_path, monkeypatch, capsys):
    path = tmp_path / "cat.json"
    assert run(["build", "Hb1", "HE", "--out", str(path)]) == 0
    capsys.readouterr()
    dumps = json.loads(path.read_text())
    assert set(dumps) == {"Hb1", "HE"}
    monkeypatch.setenv("HOPF16_CATALOG", str(path))
    assert run(["verify"]) == 0
    capsys.readouterr()
    assert run(["verify", "Ha1"]) == 2       # not in the external catalog
    capsys.readouterr()


def test_external_catalog_failure_is_check_failure(tmp_path, monkeypatch,
                                                   capsys):
    assert run(["build", "Hb1"]) == 0
    text = capsys.readouterr().out
    data = json.loads(text)
    # corrupt an antipode coefficient so the axiom suite must fail
    data["Hb1"]["antipode"][0][2] = "-1"
    path = tmp_path / "broken.json"
    path.write_text(json.dumps(data))
    monkeypatch.setenv("HOPF16_CATALOG", str(path))
    assert run(["verify", "Hb1"]) == 1
    capsys.readouterr()


def test_fusion_json(capsys):
    assert run(["fusion", "HE", "--format", "json"]) == 0
    data = json.loads(capsys.readouterr().out)
    ring = data[0] if isinstance(data, list) else data
    assert sorted(ring["degrees"]) == [1, 1, 1, 1, 2, 2, 2]


def test_table1_deterministic(capsys):
    assert run(["table1", "--format", "md"]) == 0
    first = capsys.readouterr().out
    assert run(["table1", "--format", "md"]) == 0
    second = capsys.readouterr().out
    assert first == second
    assert first.count("|") > 16
    assert "K5.5" in first
