import json

import pytest
from click.testing import CliRunner

from leechkit.cli import main
from leechkit.core import catalog
from leechkit.core.lattice import Lattice
from leechkit.schemas.schemas import LatticeSchema


@pytest.fixture
def runner():
    return CliRunner(mix_stderr=False)


def _invoke(runner, *args):
    return runner.invoke(main, ["--log-level", "CRITICAL", *args])


def _dump(path, lattice):
    path.write_text(LatticeSchema.from_lattice(lattice).model_dump_json(), encoding="utf-8")
    return str(path)


def test_catalog_a2(runner):
    result = _invoke(runner, "catalog", "A2")
    assert result.exit_code == 0
    data = json.loads(result.stdout)
    assert data["gram"] == [[2, -1], [-1, 2]]
    assert data["ambient"]["basis"][0] == ["1", "-1", "0"]


def test_catalog_unknown_name(runner):
    result = _invoke(runner, "catalog", "Z9")
    assert result.exit_code == 2
    assert result.stderr.startswith("erro:")


def test_unknown_niemeier_row(runner):
    assert _invoke(runner, "niemeier", "N24").exit_code == 2


def test_enum_e8(runner, tmp_path, e8):
    result = _invoke(runner, "enum", _dump(tmp_path / "e8.json", e8), "--bound", "4")
    assert result.exit_code == 0
    data = json.loads(result.stdout)
    assert data["counts"] == {"2": 240, "4": 2160}
    assert data["minimum"] == 2


def test_enum_bound_must_be_positive(runner, tmp_path, e8):
    result = _invoke(runner, "enum", _dump(tmp_path / "e8.json", e8), "--bound", "0")
    assert result.exit_code == 2


def test_enum_limit_exceeded(runner, tmp_path, e8):
    result = _invoke(runner, "enum", _dump(tmp_path / "e8.json", e8), "--bound", "4", "--limit", "10")
    assert result.exit_code == 2


def test_isom_exit_codes(runner, tmp_path, t1, t2):
    a2 = _dump(tmp_path / "a2.json", catalog.a_n(2))
    other = _dump(tmp_path / "other.json", Lattice(((2, 1), (1, 2))))
    result = _invoke(runner, "isom", a2, other)
    assert result.exit_code == 0
    assert json.loads(result.stdout)["status"] == "isometric"
    result = _invoke(runner, "isom", _dump(tmp_path / "t1.json", t1), _dump(tmp_path / "t2.json", t2))
    assert result.exit_code == 1
    assert json.loads(result.stdout)["status"] == "not_isometric"


def test_genus_default_form(runner):
    result = _invoke(runner, "genus", "--det", "242")
    assert result.exit_code == 0
    assert len(json.loads(result.stdout)) == 2


def test_genus_only_ternary(runner):
    assert _invoke(runner, "genus", "--det", "242", "--rank", "4").exit_code == 2


def test_divisor(runner, tmp_path, t1):
    path = _dump(tmp_path / "t1.json", t1)
    result = _invoke(runner, "divisor", path, "--vector", "0,0,1")
    assert result.exit_code == 0
    assert json.loads(result.stdout) == {"vector": [0, 0, 1], "degree": 22, "divisor": 2}
    assert _invoke(runner, "divisor", path, "--vector", "a,b").exit_code == 2


def test_klein_fixed_lines(runner):
    result = _invoke(runner, "klein", "fixed-lines")
    assert result.exit_code == 0
    data = json.loads(result.stdout)
    assert data["fixed_points"] == [1, 2, 3, 4, 5]
    assert data["lines"] == [[1, 2], [1, 3], [2, 5], [3, 4], [4, 5]]


def test_klein_smooth_exit_codes(runner):
    result = _invoke(runner, "klein", "smooth", "--prime", "5")
    assert result.exit_code == 0
    assert json.loads(result.stdout)["smooth"] is True
    assert _invoke(runner, "klein", "smooth", "--prime", "3").exit_code == 2
    assert _invoke(runner, "klein", "smooth", "--prime", "2").exit_code == 2
    assert _invoke(runner, "klein", "smooth", "--prime", "4").exit_code == 2


def test_verify_single_claim(runner):
    result = _invoke(runner, "verify", "--claim", "S11-printed", "--json")
    assert result.exit_code == 0
    reports = json.loads(result.stdout)
    assert reports[0]["id"] == "S11-printed"
    assert reports[0]["status"] == "pass"


def test_verify_unknown_claim(runner):
    assert _invoke(runner, "verify", "--claim", "riemann").exit_code == 2


def test_version(runner):
    result = runner.invoke(main, ["--version"])
    assert result.exit_code == 0
    assert "leechkit" in result.stdout
