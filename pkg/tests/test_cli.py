import json
import subprocess
import sys

import pytest

from keytab import cli
from keytab.keys import Configuration, CrossOutTrace
from keytab.tableau import parse_tableau

from conftest import LEFT_EXAMPLE, SMALL_EXAMPLE, CHAIN_EXAMPLE

LEFT_INLINE = LEFT_EXAMPLE.replace("\n", "/")
SMALL_INLINE = SMALL_EXAMPLE.replace("\n", "/")
CHAIN_INLINE = CHAIN_EXAMPLE.replace("\n", "/")


def run(capsys, *argv):
    code = cli.run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


class TestKeyCommands:
    def test_right_key(self, capsys):
        code, out, _ = run(capsys, "right-key", SMALL_INLINE, "-n", "9")
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "phi 834125679"
        assert lines[1].split() == ["3", "3", "8", "8", "8"]

    def test_left_key_json(self, capsys):
        code, out, _ = run(capsys, "left-key", LEFT_INLINE, "-n", "9", "--json")
        assert code == 0
        data = json.loads(out)
        assert data["permutation"] == [3, 7, 2, 1, 6, 9, 8, 5, 4]
        assert data["key"]["rows"][0] == [1, 1, 2, 2, 3]

    def test_left_trace_round_trip(self, capsys):
        _, out, _ = run(capsys, "left-key", LEFT_INLINE, "--n", "9", "--json", "--trace")
        trace = CrossOutTrace.from_dict(json.loads(out)["trace"])
        assert trace.first_column_values() == (3, 7, 2, 1, 6)
        _, text, _ = run(capsys, "left-key", LEFT_INLINE, "-n", "9", "--trace")
        assert "line 1: 3 5 6 6 6" in text

    def test_right_trace_round_trip(self, capsys):
        _, out, _ = run(capsys, "right-key", CHAIN_INLINE, "-n", "9", "--json", "--trace")
        stages = [Configuration.from_dict(d) for d in json.loads(out)["trace"]["stages"]]
        assert [c.exposed_value for c in stages] == [7, 3, 4, 8, 2]

    def test_min_chain(self, capsys):
        code, out, _ = run(capsys, "min-chain", CHAIN_INLINE, "-n", "9")
        assert code == 0
        assert out.split() == ["124563789", "135842679", "245831679", "254831679", "354821679", "734821569"]

    def test_file_input(self, capsys, tmp_path):
        f = tmp_path / "t.txt"
        f.write_text(SMALL_EXAMPLE + "\n")
        code, out, _ = run(capsys, "right-key", "-f", str(f), "-n", "9")
        assert code == 0 and out.startswith("phi 834125679")

    def test_json_input(self, capsys):
        code, out, _ = run(capsys, "right-key", '{"n": 9, "rows": [[1,3,3,6,8],[4,5],[5]]}')
        assert code == 0 and out.startswith("phi 834125679")

    def test_stdin(self):
        proc = subprocess.run(
            [sys.executable, "-m", "keytab.cli", "right-key", "-", "-n", "9"],
            input=SMALL_EXAMPLE, capture_output=True, text=True, check=False)
        assert proc.returncode == 0
        assert proc.stdout.startswith("phi 834125679")


class TestOtherCommands:
    def test_lift(self, capsys):
        assert run(capsys, "lift", "--dir", "max", "--p", "1", "--y", "2", "--w", "4321")[1].strip() == "2431"
        out = run(capsys, "lift", "--dir", "min", "--p", "5", "--y", "1,2,4,5,6", "--w", "123456789")[1]
        assert out.strip() == "124563789"
        assert run(capsys, "lift", "--dir", "max", "--p", "1", "--y", "6", "--w", "654321", "--brute")[1].strip() == \
            run(capsys, "lift", "--dir", "max", "--p", "1", "--y", "6", "--w", "654321")[1].strip()
        # the enumeration oracle refuses large n
        assert run(capsys, "lift", "--dir", "min", "--p", "1", "--y", "1", "--w", "123456789", "--brute")[0] == 2

    def test_bruhat(self, capsys):
        assert run(capsys, "bruhat-leq", "124563789", "135842679")[1].strip() == "true"
        assert run(capsys, "bruhat-leq", "135842679", "124563789")[1].strip() == "false"

    def test_demazure(self, capsys):
        code, out, _ = run(capsys, "demazure", "--shape", "2,1", "--n", "3", "--tau", "321", "--eval", "1,1,1")
        assert code == 0 and out.strip() == "8"
        out = run(capsys, "demazure", "--shape", "1", "-n", "2", "--tau", "21")[1]
        assert out.split() == ["x1", "x2"]
        out = run(capsys, "demazure", "--shape", "1", "-n", "2", "--tau", "21", "--opposite")[1]
        assert out.split() == ["x2"]

    def test_enumerate(self, capsys):
        assert run(capsys, "enumerate", "--shape", "2,1", "-n", "3", "--count")[1].strip() == "8"
        code, out, _ = run(capsys, "enumerate", "--shape", "1", "-n", "2", "--json")
        assert code == 0 and json.loads(out)["count"] == 2


class TestVerify:
    def test_exhaustive(self, capsys):
        code, out, err = run(capsys, "verify", "--exhaustive", "--max-cells", "6", "--n", "4", "--json")
        assert code == 0 and err == ""
        data = json.loads(out)
        assert data["mismatches"] == 0 and data["checked"] == 1000

    def test_random_and_single(self, capsys):
        assert run(capsys, "verify", "--random", "50", "--max-cells", "10", "-n", "6", "--seed", "3")[0] == 0
        assert run(capsys, "verify", LEFT_INLINE, "-n", "9", "--methods", "aval,willis")[0] == 0

    def test_mismatch_exit_code(self, capsys, monkeypatch):
        wrong = parse_tableau("1 1 1 1 1\n2 2\n3", 9)
        monkeypatch.setitem(cli.RIGHT_ORACLES, "mason", lambda s: wrong)
        code, out, err = run(capsys, "verify", SMALL_INLINE, "-n", "9", "--methods", "mason")
        assert code == 1
        record = json.loads(err.splitlines()[0])
        assert record["method"] == "mason" and record["side"] == "right"
        assert record["expected"] == [[3, 3, 8, 8, 8], [4, 8], [8]]

    def test_oracle_crash_is_a_mismatch(self, capsys, monkeypatch):
        def boom(s):
            raise RuntimeError("boom")
        monkeypatch.setitem(cli.LEFT_ORACLES, "aval", boom)
        code, _, err = run(capsys, "verify", LEFT_INLINE, "-n", "9", "--methods", "aval")
        assert code == 1 and "boom" in err

    def test_workers(self, capsys):
        code, out, _ = run(capsys, "verify", "--exhaustive", "--max-cells", "4", "-n", "3", "--workers", "2")
        assert code == 0 and "checked 70" in out


class TestInputErrors:
    @pytest.mark.parametrize("argv", [
        ["right-key", "2 1"],
        ["left-key", "1 1/1 2"],
        ["left-key", "1 5", "-n", "4"],
        ["right-key", "-f", "/nonexistent/file"],
        ["lift", "--dir", "max", "--p", "1", "--y", "4", "--w", "1234"],
        ["bruhat-leq", "12", "123"],
        ["bruhat-leq", "112", "123"],
        ["demazure", "--shape", "1,1,1", "-n", "2", "--tau", "12"],
        ["enumerate", "--shape", "2"],
        ["verify", "--exhaustive", "--max-cells", "50", "-n", "4"],
        ["verify", "--exhaustive", "--max-cells", "4"],
        ["verify", "1", "--methods", "nope"],
        ["bench", "--count", "0"],
    ])
    def test_exit_two(self, capsys, argv):
        code, _, err = run(capsys, *argv)
        assert code == 2 and err.startswith("error:")

    def test_usage_error(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.run(["left-key", "--bogus"])
        assert exc.value.code == 2


class TestBench:
    def test_deterministic(self, capsys):
        argv = ["bench", "--count", "30", "--max-cells", "8", "--seed", "5", "--no-timing", "--json"]
        first = run(capsys, *argv)[1]
        second = run(capsys, *argv)[1]
        assert first == second
        data = json.loads(first)
        assert set(data["methods"]) == set(cli.BENCH_METHODS)
        assert all("seconds" not in v for v in data["methods"].values())

    def test_timing_columns(self, capsys):
        code, out, _ = run(capsys, "bench", "--count", "5", "--max-cells", "6")
        assert code == 0 and "seconds" in out.splitlines()[0]
