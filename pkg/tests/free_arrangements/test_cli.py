import doctest
import json

import pytest

from free_arrangements import InductiveChain, boolean, braid, write_arrangement
from free_arrangements.cli import run


GENERIC: str = "field 1\ndim 3\n1 0 0\n0 1 0\n0 0 1\n1 1 1\n"


@pytest.fixture
def braid3(tmp_path):
    path = tmp_path / "braid3.txt"
    path.write_text(write_arrangement(braid(3)))
    return path


@pytest.fixture
def generic(tmp_path):
    path = tmp_path / "generic.txt"
    path.write_text(GENERIC)
    return path


def test_catalog(capsys) -> None:
    assert run(["catalog", "--family", "braid", "--n", "3"]) == 0
    assert capsys.readouterr().out == write_arrangement(braid(3))
    assert run(["catalog", "--family", "monomial", "--r", "3", "--p", "3", "--l", "2", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert (data["field"], data["dim"], len(data["hyperplanes"])) == (3, 2, 3)
    assert run(["catalog", "--family", "monomial", "--r", "4", "--p", "3", "--l", "2"]) == 2
    assert "p must divide r" in capsys.readouterr().err


def test_lattice_and_charpoly(braid3, capsys) -> None:
    assert run(["lattice", str(braid3), "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["rank"] == 2
    assert [row["mobius"] for row in data["flats"]] == [1, -1, -1, -1, 2]
    assert run(["charpoly", str(braid3), "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["poincare"] == [1, 3, 2]
    assert data["characteristic"] == [0, 2, -3, 1]
    assert data["factors"] == [1, 2]


def test_restrict(braid3, capsys) -> None:
    assert run(["restrict", str(braid3), "--hyperplanes", "0", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["dim"] == 2
    assert data["preimages"] == [[1, 2]]
    assert data["coordinates"] == ["x2", "x3"]


def test_free(braid3, generic, tmp_path, capsys) -> None:
    certificate = tmp_path / "basis.txt"
    assert run(["free", str(braid3), "--certificate", str(certificate), "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["exponents"] == [0, 1, 2]
    assert certificate.read_text().startswith("basis l 3 field 1\n")
    assert run(["saito", "--input", str(braid3), "--basis", str(certificate)]) == 0
    assert "accepted" in capsys.readouterr().out
    assert run(["free", str(generic)]) == 1
    assert run(["exponents", str(generic)]) == 0
    assert "not free" in capsys.readouterr().out


def test_saito_rejects(braid3, tmp_path, capsys) -> None:
    basis = tmp_path / "basis.txt"
    basis.write_text("basis l 3 field 1\n1, 0, 0\nx1, x2, x3\nx1^2, x2^2, x3^2\n")
    assert run(["saito", str(braid3), "--basis", str(basis)]) == 1
    assert "rejected" in capsys.readouterr().out
    basis.write_text("basis l 3 field 3\n1, 1, 1\nx1, x2, x3\nx1^2, x2^2, x3^2\n")
    assert run(["saito", str(braid3), "--basis", str(basis)]) == 2


def test_indfree(braid3, generic, tmp_path, capsys) -> None:
    certificate = tmp_path / "chain.json"
    assert run(["indfree", str(braid3), "--certificate", str(certificate)]) == 0
    chain: InductiveChain = InductiveChain.load(certificate)
    assert chain.exponents == (0, 1, 2)
    capsys.readouterr()
    assert run(["indfree", str(braid3), "--verify", str(certificate), "--audit", "--json"]) == 0
    assert json.loads(capsys.readouterr().out) == {"accepted": True, "audit": True}
    assert run(["indfree", str(generic)]) == 1
    certificate.write_text('{"ordering": [0]}')
    assert run(["indfree", str(braid3), "--verify", str(certificate)]) == 2


def test_heredfree(generic, tmp_path, capsys) -> None:
    path = tmp_path / "boolean.txt"
    path.write_text(write_arrangement(boolean(3)))
    report = tmp_path / "report.json"
    assert run(["heredfree", str(path), "--certificate", str(report)]) == 0
    assert len(json.loads(report.read_text())["nodes"]) == 8
    capsys.readouterr()
    assert run(["heredfree", str(generic), "--json"]) == 1
    assert json.loads(capsys.readouterr().out)["free"] is False


def test_oracle(braid3, generic, capsys) -> None:
    assert run(["oracle", str(braid3), "--max-degree", "3", "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["agree"] and data["euler_member"]
    assert [row["oracle"] for row in data["degrees"]] == [1, 4, 10, 19]
    assert run(["oracle", str(generic), "--max-degree", "1"]) == 0


def test_derivations(braid3, capsys) -> None:
    assert run(["derivations", str(braid3), "--json"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert sorted(row["degree"] for row in data["generators"]) == [0, 1, 2]


def test_errors(tmp_path, capsys) -> None:
    assert run(["free", str(tmp_path / "missing.txt")]) == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("field 1\ndim 2\n1 0 0\n")
    assert run(["free", str(bad)]) == 2
    assert "line 3" in capsys.readouterr().err
    config = tmp_path / "settings.toml"
    config.write_text("[free-arrangements]\nthreads = 2\n")
    assert run(["free", str(bad), "--config", str(config)]) == 2
    with pytest.raises(SystemExit):
        run(["unknown"])


def test_config_file(braid3, tmp_path, capsys) -> None:
    config = tmp_path / "settings.toml"
    config.write_text("[free-arrangements]\njson = true\n")
    assert run(["free", str(braid3), "--config", str(config)]) == 0
    assert json.loads(capsys.readouterr().out)["free"] is True


def test_docstring() -> None:
    import free_arrangements.cli

    results: doctest.TestResults = doctest.testmod(free_arrangements.cli, verbose=True)
    assert results.failed == 0
