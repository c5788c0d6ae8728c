"""Smoke tests for the python module and the CLI.

Usage: smoke_test.py [path-to-cli]. The module must be importable
(PYTHONPATH pointing at the build's python/ directory).
"""

import json
import math
import subprocess
import sys
import tempfile
import os

import nosig


def approx(x, y, tol=1e-10):
    return abs(x - y) <= tol


def test_linear_algebra():
    i2 = nosig.identity(2)
    k = nosig.kron(i2, i2)
    assert k.rows == 4 and k.cols == 4
    rows = k.tolist()
    assert rows[0][0] == 1 and rows[3][3] == 1 and rows[0][3] == 0

    eig = nosig.hermitian_eigenvalues(nosig.Matrix([[0, 1], [1, 0]]))
    assert approx(eig[0], -1) and approx(eig[1], 1)

    t = nosig.greenberger_map(0.0)
    assert t.tolist()[0] == [1, 1] and t.tolist()[1] == [0, 0]

    rho = nosig.partial_trace(
        nosig.Matrix([[0, 0, 0, 0], [0, 0.5, -0.5, 0], [0, -0.5, 0.5, 0], [0, 0, 0, 0]]),
        [("s1", 2), ("s2", 2)],
        ["s1"],
    )
    assert approx(rho.tolist()[0][0].real, 0.5) and approx(rho.tolist()[1][1].real, 0.5)


def test_states_and_network():
    s = nosig.singlet()
    r = 1 / math.sqrt(2)
    assert approx(abs(s.amplitudes[1] - r), 0)
    assert approx(abs(s.amplitudes[2] + r), 0)

    for a, b in [(0.0, 0.0), (0.9, -1.4), (2.2, 0.3)]:
        rebuilt = nosig.reconstruct_predetector(a, b)
        target = nosig.greenberger_predetector(a, b)
        assert nosig.phase_aligned_max_diff(target.amplitudes, rebuilt.amplitudes) < 1e-10


def test_channels():
    report = nosig.validate_channel([nosig.greenberger_map(0.8)], "deterministic")
    assert report["trace_preserving"] is False
    assert report["completely_positive"] is True
    assert report["min_choi_eigenvalue"] >= -1e-9

    assert nosig.choi_min_eigenvalue([nosig.identity(2)]) >= -1e-12

    d = nosig.marginal_obstruction(1 / math.sqrt(2), 0.4)
    assert approx(d["marginal_distance"], 0.5)
    assert d["achievable_deterministically"] is False


def test_scenarios_and_fuzzer():
    rep = nosig.run_greenberger(math.pi / 4, 0.0, math.pi / 2)
    assert rep["pass"] is True
    assert approx(rep["probabilities"]["P(h,d')"], 1.0)
    assert approx(rep["probabilities"]["p_success"], 0.5)

    rep = nosig.run_epr_bohm(1.1)
    assert approx(rep["probabilities"]["P(-1|map)"], 1.0)
    assert approx(rep["probabilities"]["P(-1|idle)"], 0.5)

    rep = nosig.run_stern_gerlach(0.6)
    assert rep["pass"] is True

    rep = nosig.run_erasure(1)
    assert approx(rep["probabilities"]["p_selected"], 0.5)

    assert nosig.fuzz_no_signaling(7, 200, 2, 2) <= 1e-9
    # determinism contract
    assert nosig.fuzz_no_signaling(7, 50, 2, 2) == nosig.fuzz_no_signaling(7, 50, 2, 2)


def test_cli(cli):
    def run(*args):
        return subprocess.run([cli, *args], capture_output=True, text=True)

    r = run("greenberger", "--alpha", "0.7853981634", "--beta", "0",
            "--gamma", "1.5707963268", "--format", "table")
    assert r.returncode == 0, r.stderr
    assert "P(h,d')" in r.stdout and "1.0000" in r.stdout

    r = run("fuzz", "--seed", "7", "--trials", "200", "--dims", "2x2")
    assert r.returncode == 0, r.stderr
    payload = json.loads(r.stdout)
    assert payload["pass"] is True and payload["worst_distance"] <= 1e-9

    # byte determinism of the JSON output
    again = run("fuzz", "--seed", "7", "--trials", "200", "--dims", "2x2")
    assert again.stdout == r.stdout

    # the raw collapse map fails classification with exit code 1
    channel = {
        "kind": "deterministic",
        "input_dim": 2,
        "output_dim": 2,
        "operators": [
            {"rows": 2, "cols": 2, "entries": [[1, 0], [1, 0], [0, 0], [0, 0]]}
        ],
    }
    with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as f:
        json.dump(channel, f)
        path = f.name
    try:
        r = run("classify", "--input", path)
        assert r.returncode == 1, (r.returncode, r.stdout, r.stderr)
        payload = json.loads(r.stdout)
        assert payload["trace_preserving"] is False
        assert payload["completely_positive"] is True
        assert payload["valid_for_kind"] is False
    finally:
        os.unlink(path)

    # degenerate parameters and malformed input exit with code 2
    r = run("greenberger", "--alpha", "0", "--beta", "0", "--gamma", str(math.pi))
    assert r.returncode == 2, (r.returncode, r.stdout, r.stderr)
    r = run("classify", "--input", "/nonexistent.json")
    assert r.returncode == 2
    r = run("unknown-command")
    assert r.returncode == 2

    r = run("erasure", "--outcome", "1")
    assert r.returncode == 0
    payload = json.loads(r.stdout)
    assert approx(payload["probabilities"]["p_selected"], 0.5)

    r = run("stern-gerlach", "--gamma", "0.8")
    assert r.returncode == 0 and json.loads(r.stdout)["pass"] is True

    r = run("epr", "--gamma", "0.3")
    assert r.returncode == 0 and json.loads(r.stdout)["pass"] is True


def main():
    test_linear_algebra()
    test_states_and_network()
    test_channels()
    test_scenarios_and_fuzzer()
    if len(sys.argv) > 1:
        test_cli(sys.argv[1])
        print("module + cli smoke tests passed")
    else:
        print("module smoke tests passed (no cli path given)")


if __name__ == "__main__":
    main()
