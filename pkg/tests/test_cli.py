"""명령줄 인터페이스 테스트."""

import io
import json

import pytest
from unittest.mock import patch

from pythresh import distributions
from pythresh.cli import EXIT_DOMAIN, EXIT_OK, EXIT_USAGE, main
from pythresh.invariants import Invariant
from pythresh.models.distribution import ExactDistribution


def run(*argv):
    """명령을 실행하고 (종료 코드, 표준 출력, 표준 오류)를 돌려줍니다."""
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture(autouse=True)
def _clean_environment(monkeypatch):
    monkeypatch.delenv("CI_DETERMINISTIC", raising=False)
    monkeypatch.setenv("PYTHRESH_WORKERS", "1")


def test_gen_single_vertex():
    """n = 1이면 빈 수열 세 줄이어야 합니다."""
    code, out, _ = run("gen", "--n", "1", "--count", "3", "--seed", "1")

    assert code == EXIT_OK
    assert out == "\n\n\n"


def test_gen_uniform_reproducible():
    """같은 시드로 두 번 실행하면 같은 수열이어야 합니다."""
    argv = ("gen", "--n", "5", "--count", "2", "--seed", "7", "--model", "uniform")

    first = run(*argv)[1].splitlines()
    second = run(*argv)[1].splitlines()

    assert first == second
    assert len(first) == 2
    assert all(len(line) == 4 and set(line) <= {"0", "1"} for line in first)


def test_gen_weights_default_model():
    """기본 모델은 가중치 모델이어야 합니다."""
    code, out, _ = run("gen", "--n", "6", "--count", "4", "--seed", "11")

    assert code == EXIT_OK
    assert all(len(line) == 5 for line in out.splitlines())


@pytest.mark.parametrize("argv", [("gen", "--n", "0"), ("gen", "--n", "3", "--count", "0")])
def test_gen_usage_errors(argv):
    """잘못된 인자는 종료 코드 1이어야 합니다."""
    code, _, err = run(*argv)

    assert code == EXIT_USAGE
    assert err.startswith("error:")


def test_gen_requires_seed_in_ci_mode(monkeypatch):
    """CI_DETERMINISTIC=1이면 --seed가 필요해야 합니다."""
    monkeypatch.setenv("CI_DETERMINISTIC", "1")

    code, _, err = run("gen", "--n", "3")

    assert code == EXIT_USAGE
    assert "--seed" in err


def test_invariants_report():
    """invariants는 전체 보고서를 JSON으로 내야 합니다."""
    code, out, _ = run("invariants", "--seq", "011", "--k", "2")

    data = json.loads(out)
    assert code == EXIT_OK
    assert data["n"] == 4
    assert data["h"] == 0
    assert data["nu"] == 2
    assert data["psi"] == 4
    assert data["degeneracy"] == 2
    assert data["kcore_2"] == 4


def test_invariants_empty_sequence():
    """빈 수열은 K1의 보고서여야 합니다."""
    code, out, _ = run("invariants", "--seq", "")

    data = json.loads(out)
    assert code == EXIT_OK
    assert (data["n"], data["nu"], data["psi"], data["clique"]) == (1, 0, 0, 1)


def test_invariants_invalid_character():
    """0/1 이외의 문자는 메시지와 함께 종료 코드 1이어야 합니다."""
    code, out, err = run("invariants", "--seq", "102")

    assert code == EXIT_USAGE
    assert out == ""
    assert "invalid character '2'" in err


def test_dist_csv():
    """CSV 형식의 매칭 분포를 내야 합니다."""
    code, out, _ = run("dist", "--n", "4", "--invariant", "matching", "--format", "csv")

    assert code == EXIT_OK
    rows = [line.split(",")[1:4] for line in out.splitlines()[1:]]
    assert rows == [["0", "1", "8"], ["1", "4", "8"], ["2", "3", "8"]]


def test_dist_csv_roundtrip():
    """출력한 CSV를 다시 읽으면 같은 분포여야 합니다."""
    _, out, _ = run("dist", "--n", "9", "--invariant", "kcore", "--k", "3", "--format", "csv")

    assert ExactDistribution.from_csv(out, invariant="kcore") == distributions.dist_k_core_size(9, 3)


def test_dist_json_kcore():
    """JSON 형식은 실행 보고서여야 합니다."""
    code, out, _ = run("dist", "--n", "4", "--invariant", "kcore", "--k", "2")

    data = json.loads(out)
    assert code == EXIT_OK
    assert data["command"] == "dist"
    assert data["k"] == 2
    assert data["denominator"] == 8
    assert [cell["value"] for cell in data["cells"]] == [0, 3, 4]
    assert [cell["count"] for cell in data["cells"]] == [4, 2, 2]
    assert "elapsed_ms" in data


@pytest.mark.parametrize(
    "argv",
    [
        ("dist", "--n", "2", "--invariant", "cycle"),
        ("dist", "--n", "4", "--invariant", "kcore"),
        ("dist", "--n", "4", "--invariant", "kcore", "--k", "4"),
        ("dist", "--n", "4", "--invariant", "chromatic"),
        ("dist", "--n", "4", "--invariant", "h", "--format", "xml"),
    ],
    ids=["order-too-small", "missing-k", "invalid-k", "unknown-invariant", "bad-format"],
)
def test_dist_errors(argv):
    """잘못된 분포 요청은 종료 코드 1이어야 합니다."""
    code, _, err = run(*argv)

    assert code == EXIT_USAGE
    assert err.startswith("error:")


def test_verify_passes():
    """verify --n-max 6은 통과해야 합니다."""
    code, out, _ = run("verify", "--n-max", "6")

    data = json.loads(out)
    assert code == EXIT_OK
    assert data["passed"] is True
    assert data["mismatches"] == []


def test_verify_mismatch_exit_code():
    """닫힌 형식이 틀리면 종료 코드 2와 목격 수열을 내야 합니다."""
    original = distributions.closed_form

    def corrupted(invariant, n, k=None):
        dist = original(invariant, n, k)
        if invariant is Invariant.DEGENERACY and n == 3:
            return ExactDistribution(order=3, counts={0: 2, 1: 1, 2: 1}, invariant=dist.invariant)
        return dist

    with patch("pythresh.distributions.closed_form", side_effect=corrupted):
        code, out, _ = run("verify", "--n-max", "4")

    data = json.loads(out)
    assert code == EXIT_DOMAIN
    assert data["passed"] is False
    assert data["mismatches"][0]["name"] == "dist_degeneracy"
    assert data["mismatches"][0]["witness"] == "00"


def test_verify_cap():
    """--n-max 30은 사용법 오류여야 합니다."""
    code, _, _ = run("verify", "--n-max", "30")

    assert code == EXIT_USAGE


def test_uniformity_report():
    """uniformity는 자유도 31인 JSON 보고서를 내야 합니다."""
    code, out, _ = run("uniformity", "--n", "6", "--samples", "320000", "--seed", "1")

    data = json.loads(out)
    assert code == EXIT_OK
    assert data["command"] == "uniformity"
    assert data["df"] == 31
    assert data["denominator"] == 32
    assert data["rng"] == "PCG64"
    assert data["seed"] == 1
    assert len(data["cells"]) == 32
    assert data["cells"][0]["sequence"] == "00000"
    assert sum(cell["count"] for cell in data["cells"]) == 320000
    assert data["decision"] in ("accept", "reject")


def test_uniformity_insufficient_samples():
    """표본이 부족하면 종료 코드 1이어야 합니다."""
    code, _, err = run("uniformity", "--n", "6", "--samples", "100", "--seed", "1")

    assert code == EXIT_USAGE
    assert "samples" in err


def test_recognize_k4(tmp_path):
    """K4 파일은 '111'이어야 합니다."""
    path = tmp_path / "k4.txt"
    path.write_text("4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n", encoding="utf-8")

    code, out, _ = run("recognize", str(path))

    assert code == EXIT_OK
    assert out == "111\n"


def test_recognize_k1(tmp_path):
    """K1 파일은 빈 수열이어야 합니다."""
    path = tmp_path / "k1.txt"
    path.write_text("1\n", encoding="utf-8")

    code, out, _ = run("recognize", str(path))

    assert code == EXIT_OK
    assert out == "\n"


def test_recognize_not_threshold(tmp_path):
    """C4 파일은 NotThreshold로 종료 코드 2여야 합니다."""
    path = tmp_path / "c4.txt"
    path.write_text("4\n0 1\n1 2\n2 3\n3 0\n", encoding="utf-8")

    code, out, err = run("recognize", str(path))

    assert code == EXIT_DOMAIN
    assert out == ""
    assert "no isolated or dominating vertex" in err


def test_recognize_missing_file(tmp_path):
    """없는 파일은 종료 코드 1이어야 합니다."""
    code, _, _ = run("recognize", str(tmp_path / "missing.txt"))

    assert code == EXIT_USAGE


def test_recognize_malformed_file(tmp_path):
    """형식이 잘못된 파일은 종료 코드 1이어야 합니다."""
    path = tmp_path / "bad.txt"
    path.write_text("3\n0 1 2\n", encoding="utf-8")

    code, _, _ = run("recognize", str(path))

    assert code == EXIT_USAGE


def test_uniformity_alpha_out_of_range():
    """--alpha 5는 종료 코드 1이어야 합니다."""
    code, out, err = run("uniformity", "--n", "3", "--samples", "1000", "--seed", "1", "--alpha", "5")

    assert code == EXIT_USAGE
    assert out == ""
    assert "alpha must lie in (0, 1)" in err


def test_recognize_non_utf8_file(tmp_path):
    """UTF-8이 아닌 파일은 역추적 없이 종료 코드 1이어야 합니다."""
    path = tmp_path / "binary.txt"
    path.write_bytes(b"2\n0 1\xff\n")

    code, out, err = run("recognize", str(path))

    assert code == EXIT_USAGE
    assert out == ""
    assert err.startswith("error: ")
    assert "UTF-8" in err


@pytest.mark.parametrize("model", ["weights", "uniform"])
def test_gen_long_sequences(model):
    """64자리가 넘는 수열도 자리 넘침 없이 생성되어야 합니다."""
    code, out, _ = run("gen", "--n", "70", "--count", "200", "--seed", "1", "--model", model)

    assert code == EXIT_OK
    lines = out.splitlines()
    assert len(lines) == 200
    assert all(len(line) == 69 and set(line) <= {"0", "1"} for line in lines)
    leading = sum(line[0] == "1" for line in lines) / len(lines)
    assert 0.35 < leading < 0.65


@pytest.mark.parametrize("argv", [(), ("plot",), ("gen",)], ids=["no-command", "unknown-command", "missing-flag"])
def test_argument_errors(argv):
    """인자 오류는 종료 코드 1이어야 합니다."""
    code, _, err = run(*argv)

    assert code == EXIT_USAGE
    assert err.startswith("error:")
