#!/usr/bin/env python3
"""End-to-end checks of the command-line interface and its exit codes."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

CLI = sys.argv[1]
failures = 0


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


def check(name, ok):
    global failures
    print(f"[{'PASS' if ok else 'FAIL'}] {name}")
    if not ok:
        failures += 1


def write(path, doc):
    path.write_text(json.dumps(doc))
    return str(path)


def main():
    tmp = Path(tempfile.mkdtemp(prefix="treehardy-cli-"))

    # verify: determinism and the exit-code contract.
    out1 = tmp / "report1.json"
    out2 = tmp / "report2.json"
    r1 = run("verify", "--q", "2", "--depth", "4", "--seed", "7", "--out", str(out1))
    r2 = run("verify", "--q", "2", "--depth", "4", "--seed", "7", "--out", str(out2))
    check("verify exits 0", r1.returncode == 0)
    check("verify stdout is deterministic", r1.stdout == r2.stdout)
    check("verify report is byte-identical", out1.read_bytes() == out2.read_bytes())
    report = json.loads(out1.read_text())
    check("verify report passes", report["pass"] is True and len(report["records"]) > 20)

    r = run("verify", "--q", "2", "--depth", "0")
    check("depth 0 is a usage error (exit 2)", r.returncode == 2)
    check("unknown subcommand is a usage error", run("bogus").returncode == 2)

    # eval: gammabar evaluated at a constant returns that constant.
    series = write(tmp / "shift.json",
                   {"coeffs": [{"prefix": [], "tail": [0, 0]},
                               {"prefix": [], "tail": [1, 0]}]})
    point = write(tmp / "half.json", {"prefix": [], "tail": [0.5, 0]})
    r = run("eval", "--series", series, "--point", point)
    doc = json.loads(r.stdout)
    check("eval exits 0", r.returncode == 0)
    check("eval of the shift returns the point",
          doc["result"]["tail"] == [0.5, 0] and doc["result"]["prefix"] == []
          and doc["in_disk"] is True)

    # eval at zero returns the constant coefficient.
    any_series = write(tmp / "s.json",
                       {"coeffs": [{"prefix": [[0.25, -1]], "tail": [0, 0]},
                                   {"prefix": [[3, 0]], "tail": [0, 0]}]})
    zero = write(tmp / "zero.json", {"prefix": [], "tail": [0, 0]})
    doc = json.loads(run("eval", "--series", any_series, "--point", zero).stdout)
    check("eval at 0 returns s_0", doc["result"]["prefix"] == [[0.25, -1.0]])

    # outside the disk: warning attached, still exit 0.
    far = write(tmp / "far.json", {"prefix": [], "tail": [2, 0]})
    r = run("eval", "--series", any_series, "--point", far)
    doc = json.loads(r.stdout)
    check("eval outside the disk warns", r.returncode == 0 and "warning" in doc
          and doc["in_disk"] is False)

    malformed = write(tmp / "bad.json", {"prefix": [], "tail": 7})
    r = run("eval", "--series", any_series, "--point", malformed)
    check("malformed document is a parse error (exit 2)", r.returncode == 2)
    check("missing file is a parse error (exit 2)",
          run("eval", "--series", any_series, "--point",
              str(tmp / "nope.json")).returncode == 2)

    # blaschke: classical coefficients at a constant point.
    r = run("blaschke", "--point", point, "--out", str(tmp / "b.json"))
    bdoc = json.loads((tmp / "b.json").read_text())
    coeffs = bdoc["coeffs"]
    want = [-0.5, 0.75, 0.375, 0.1875]
    ok = r.returncode == 0 and all(
        abs(coeffs[n]["tail"][0] - want[n]) < 1e-12 for n in range(4))
    check("blaschke emits the classical coefficients", ok)
    check("blaschke outside the disk exits 1",
          run("blaschke", "--point", far).returncode == 1)

    # schur: the Blaschke factor passes, an expansive multiplier fails.
    points = write(tmp / "pts.json",
                   {"points": [{"prefix": [], "tail": [0.3, 0]},
                               {"prefix": [[0.2, 0.1]], "tail": [0.4, 0]}]})
    r = run("schur", "--series", str(tmp / "b.json"), "--points", points)
    doc = json.loads(r.stdout)
    check("schur accepts the Blaschke multiplier",
          r.returncode == 0 and doc["psd"] is True
          and doc["min_eigenvalue"] >= -1e-8)

    two_shift = write(tmp / "two.json",
                      {"coeffs": [{"prefix": [], "tail": [0, 0]},
                                  {"prefix": [], "tail": [2, 0]}]})
    strong = write(tmp / "strong.json", {"points": [{"prefix": [], "tail": [0.7, 0]}]})
    r = run("schur", "--series", two_shift, "--points", strong)
    doc = json.loads(r.stdout)
    check("schur flags the expansive multiplier (exit 1)",
          r.returncode == 1 and doc["psd"] is False and doc["min_eigenvalue"] < 0)

    # interp: solvable problem, then a breakdown.
    problem = write(tmp / "prob.json",
                    {"points": [{"prefix": [], "tail": [0.3, 0]},
                                {"prefix": [], "tail": [0.5, 0]}]})
    r = run("interp", "--problem", problem)
    doc = json.loads(r.stdout)
    check("interp solves two points",
          r.returncode == 0 and max(doc["residuals"]) < 1e-8
          and len(doc["ks"]) == 2)

    broken = write(tmp / "broken.json",
                   {"points": [{"prefix": [], "tail": [0.4, 0]},
                               {"prefix": [], "tail": [0.4, 0]}]})
    r = run("interp", "--problem", broken)
    check("interp reports breakdown (exit 1)",
          r.returncode == 1 and "error" in json.loads(r.stdout))

    print(f"{failures} failure(s)")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
