"""Exit codes and headline outputs of the floordiag command line tool."""

import subprocess
import sys
import tempfile
from pathlib import Path

CLI = sys.argv[1]
failures = []


def run(*args):
    return subprocess.run([CLI, *args], capture_output=True, text=True)


def expect(args, code, stdout=None, contains=None):
    result = run(*args)
    label = " ".join(args)
    if result.returncode != code:
        failures.append(f"{label}: exit {result.returncode}, want {code}\n{result.stderr}")
        return
    if stdout is not None and result.stdout != stdout:
        failures.append(f"{label}: stdout {result.stdout!r}, want {stdout!r}")
    if contains is not None and contains not in result.stdout:
        failures.append(f"{label}: {contains!r} missing from {result.stdout!r}")


expect(["invariant", "gw", "--d", "3", "--g", "0"], 0, stdout="12\n")
expect(["invariant", "severi", "--d", "4", "--delta", "4"], 0, stdout="666\n")
expect(["invariant", "relative", "--d", "3", "--g", "0", "--lambda", "-", "--rho", "2,1"], 0, stdout="36\n")
expect(["invariant", "welschinger", "--d", "4"], 0, stdout="240\n")
expect(["invariant", "gw", "--d", "0", "--g", "0"], 2)
expect(["invariant", "gw", "--d", "3"], 2)
expect(["no-such-command"], 2)
expect(["enumerate", "--d", "3", "--g", "0", "--count"], 0, stdout="3\n")
expect(["enumerate", "--d", "4", "--g", "1", "--filter", "prime"], 1)
expect(["markings", "--diagram", "d=4; edges=(1,2,1);(2,3,1);(2,3,1);(3,4,2)"], 0, contains="6")
expect(["markings", "--diagram", "d=3; edges=(3,1,1)"], 1)
expect(["sequence", "z", "--max-d", "4"], 0, contains="4,138,552")
expect(["sequence", "ode-check", "--order", "8"], 0)
expect(["nodepoly", "--delta", "1", "--evaluate", "d=5"], 0, contains="48")
expect(["bijection", "to-tree", "--diagram", "d=3; edges=(1,2,1);(2,3,1)"], 0, contains="d=3; edges=")
expect(["bijection", "to-tree", "--diagram", "d=4; edges=(1,2,1);(2,3,1);(2,3,1);(3,4,2)"], 1)
expect(["counts", "--d", "5"], 0, contains="46")
expect(["verify-tables", "--suite", "all"], 0, contains="OK")
expect(["tropical", "reconstruct", "--diagram", "d=4; edges=(1,2,1);(2,3,1);(2,3,1);(3,4,2)",
        "--marking", "F1 E1.2 F2 E2.3 E2.3 F3 E3.4:2 F4 S4 S3 S4 S4"], 0, contains="round trip: ok")
expect(["tropical", "reconstruct", "--diagram", "d=4; edges=(1,2,1);(2,3,1);(2,3,1);(3,4,2)",
        "--marking", "F1 F2 E1.2 E2.3 E2.3 F3 E3.4:2 F4 S4 S3 S4 S4"], 1)
expect(["--version"], 0)

with tempfile.TemporaryDirectory() as out:
    expect(["tropical", "gallery", "--d", "3", "--g", "0", "--out", out], 0, contains="9 curves")
    svgs = sorted(Path(out).glob("*.svg"))
    if len(svgs) != 9:
        failures.append(f"gallery wrote {len(svgs)} files, want 9")
    with tempfile.TemporaryDirectory() as cache:
        first = run("--cache-dir", cache, "enumerate", "--d", "5", "--g", "1", "--format", "jsonl").stdout
        second = run("--cache-dir", cache, "enumerate", "--d", "5", "--g", "1", "--format", "jsonl").stdout
        if first != second or not first:
            failures.append("cached enumeration differs from the first run")

for f in failures:
    print("FAIL", f)
print(f"{len(failures)} failures")
sys.exit(1 if failures else 0)
