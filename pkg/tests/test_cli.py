import json
import subprocess
import sys
from random import Random

import pytest

from entfam.cli import run

S1 = "|0000>+|1100>+|1111>"
S2 = "|0000>+|1101>+|1110>"


def invoke(capsys, *argv):
    code = run(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestExitCodes:
    def test_overlap_found(self, capsys):
        code, out, _ = invoke(capsys, "overlap", "--state", S2)
        assert code == 10
        assert "span{000,GHZ}" in out

    def test_no_overlap(self, capsys):
        code, out, _ = invoke(capsys, "overlap", "--state", S1)
        assert code == 0
        assert "no overlap" in out

    def test_parse_error(self, capsys):
        code, _, err = invoke(capsys, "classify", "--state", "|00x0>")
        assert code == 1
        assert "position" in err

    def test_invalid_state(self, capsys):
        code, _, err = invoke(capsys, "classify", "--state", "|00000>")
        assert code == 2
        assert "qubits" in err

    def test_invalid_binding(self, capsys):
        code, _, err = invoke(
            capsys, "classify", "--state", "l1|0000>+|1111>", "--param", "l1=bogus"
        )
        assert code == 2
        assert "l1" in err

    def test_unbound_parameter(self, capsys):
        code, _, err = invoke(capsys, "classify", "--state", "l1|0000>+|1111>")
        assert code == 2
        assert "unbound" in err

    def test_orbit_check_clean(self, capsys):
        code, out, _ = invoke(
            capsys, "orbit-check", "--state", S2, "--trials", "5", "--seed", "3"
        )
        assert code == 0
        assert "failures: 0" in out


class TestClassify:
    def test_product_state_all_partitions(self, capsys):
        code, out, _ = invoke(capsys, "classify", "--state", "|0000>")
        assert code == 0
        partition_lines = [l for l in out.splitlines() if l.startswith("partition")]
        assert len(partition_lines) == 4
        assert all("rank 1  product:000" in l for l in partition_lines)
        assert "overlap: no" in out

    def test_single_partition(self, capsys):
        code, out, _ = invoke(
            capsys, "classify", "--state", S2, "--partition", "4"
        )
        assert code == 0
        assert "4|123" in out and "span{000,GHZ}" in out
        assert "1|234" not in out

    def test_json_schema(self, capsys):
        code, out, _ = invoke(
            capsys,
            "classify", "--state", "|0000>+|1100>+l1|0011>+l2|1111>",
            "--param", "l1=2", "--param", "l2=3", "--json",
        )
        assert code == 0
        data = json.loads(out)
        assert list(data) == ["state", "params", "partitions", "overlap", "distinct_labels"]
        assert data["params"] == {"l1": "2", "l2": "3"}
        assert data["partitions"]["1"]["rank"] == 2
        assert data["overlap"] is False

    def test_byte_identical_runs(self, capsys):
        _, out1, _ = invoke(capsys, "classify", "--state", S2, "--json")
        _, out2, _ = invoke(capsys, "classify", "--state", S2, "--json")
        assert out1 == out2


class TestPointClassifiers:
    def test_w_state(self, capsys):
        code, out, _ = invoke(capsys, "classify3", "--state", "|001>+|010>+|100>")
        assert code == 0
        assert out.strip() == "W"

    def test_classify2(self, capsys):
        code, out, _ = invoke(capsys, "classify2", "--state", "|00>+|11>")
        assert code == 0
        assert out.strip() == "entangled"

    def test_classify3_json(self, capsys):
        code, out, _ = invoke(
            capsys, "classify3", "--state", "|000>+|110>", "--json"
        )
        assert code == 0
        assert json.loads(out) == {"state": "|000>+|110>", "class": "0_3Psi"}


class TestInventoryCommand:
    def test_census_output(self, capsys):
        code, out, _ = invoke(
            capsys, "inventory", "--state", S2, "--partition", "1", "--json"
        )
        assert code == 0
        data = json.loads(out)
        assert data["w_points"] == "inf"
        assert data["generic_type"] == "W"

    def test_rank_one_partition_rejected(self, capsys):
        code, _, err = invoke(
            capsys, "inventory", "--state", "|0000>+|0111>", "--partition", "1"
        )
        assert code == 2
        assert "rank-1" in err


class TestDemo:
    def test_table(self, capsys):
        code, out, _ = invoke(capsys, "demo", "paper")
        assert code == 0
        assert "S1" in out and "S4" in out
        assert "span{0Psi,GHZ}" in out

    def test_json(self, capsys):
        code, out, _ = invoke(capsys, "demo", "paper", "--json")
        assert code == 0
        rows = json.loads(out)
        assert [r["name"] for r in rows] == ["S1", "S2", "S3", "S3", "S4", "S4"]
        assert rows[1]["overlap"] is True


class TestFileMode:
    def test_reports_in_input_order(self, capsys, tmp_path):
        path = tmp_path / "states.txt"
        path.write_text(f"# two probes\n{S1}\n\n{S2}\n", encoding="utf-8")
        code, out, _ = invoke(capsys, "overlap", "--file", str(path))
        assert code == 10  # S2 overlaps
        lines = out.strip().splitlines()
        assert len(lines) == 2
        assert lines[0].startswith(S1) and "no overlap" in lines[0]
        assert lines[1].startswith(S2) and "overlap" in lines[1]

    def test_parallel_matches_serial(self, capsys, tmp_path):
        path = tmp_path / "states.txt"
        path.write_text(f"{S1}\n{S2}\n|0000>\n", encoding="utf-8")
        _, serial, _ = invoke(capsys, "classify", "--file", str(path), "--json")
        _, parallel, _ = invoke(
            capsys, "classify", "--file", str(path), "--json", "--parallel"
        )
        assert serial == parallel

    def test_missing_file(self, capsys):
        code, _, err = invoke(capsys, "overlap", "--file", "/nonexistent/states.txt")
        assert code == 2
        assert err


def test_fuzzed_states_exit_one_with_diagnostics(capsys):
    rng = Random(1001)
    alphabet = "01|><+-*/()l2i "
    for _ in range(200):
        text = "".join(rng.choice(alphabet) for _ in range(rng.randint(1, 24)))
        code, _, err = invoke(capsys, "classify", "--state", text)
        assert code in (0, 1, 2), f"unexpected exit {code} for {text!r}"
        if code:
            assert err, f"silent failure for {text!r}"


def test_module_entry_point():
    result = subprocess.run(
        [sys.executable, "-m", "entfam", "overlap", "--state", S2],
        capture_output=True,
        text=True,
    )
    assert result.returncode == 10
    assert "span{000,GHZ}" in result.stdout
