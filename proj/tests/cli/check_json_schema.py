"""Run the CLI in JSON mode and validate every document against the published schemas."""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema

DIAGRAM = "d=3; edges=(1,2,1);(2,3,2)"
GENUS_ONE = "d=4; edges=(1,2,1);(2,3,1);(2,3,1);(3,4,2)"
GENUS_ONE_MARKING = "F1 E1.2 F2 E2.3 E2.3 F3 E3.4:2 F4 S4 S3 S4 S4"

INVOCATIONS = [
    ["enumerate", "--d", "4", "--genus", "1"],
    ["enumerate", "--d", "4", "--delta", "2", "--filter", "odd", "--count"],
    ["markings", "--diagram", DIAGRAM, "--list"],
    ["markings", "--diagram", DIAGRAM, "--lambda", "2", "--rho", "1"],
    ["invariant", "gw", "--d", "3", "--g", "0"],
    ["invariant", "gw", "--table", "--max-d", "4"],
    ["invariant", "severi", "--d", "4", "--delta", "4"],
    ["invariant", "severi", "--table", "--max-d", "4"],
    ["invariant", "relative", "--d", "3", "--g", "0", "--lambda", "2", "--rho", "1"],
    ["invariant", "welschinger", "--d", "4"],
    ["nodepoly", "--delta", "2", "--evaluate", "d=7", "--aj"],
    ["sequence", "z", "--max-d", "16"],
    ["sequence", "ode-check", "--order", "8"],
    ["bijection", "to-tree", "--diagram", "d=4; edges=(1,3,1);(2,3,1);(3,4,2)"],
    ["bijection", "to-diagram", "--tree", "d=4; edges=(1,3);(2,3);(2,4)"],
    ["counts", "--d", "6", "--underlying"],
    ["tropical", "reconstruct", "--diagram", GENUS_ONE, "--marking", GENUS_ONE_MARKING, "--config", "7"],
    ["verify-tables", "--suite", "relative"],
]


def run(cli, args):
    proc = subprocess.run([cli, "--format", "json", *args], capture_output=True, check=False)
    if proc.returncode != 0:
        raise SystemExit(f"{args}: exit {proc.returncode}\n{proc.stderr.decode()}")
    return proc.stdout


def main():
    cli = sys.argv[1]
    schema_dir = pathlib.Path(sys.argv[2])
    output_schema = json.loads((schema_dir / "floordiag-output.schema.json").read_text())
    diagram_schema = json.loads((schema_dir / "diagram.schema.json").read_text())
    validator = jsonschema.Draft202012Validator(output_schema)
    line_validator = jsonschema.Draft202012Validator(diagram_schema)
    jsonschema.Draft202012Validator.check_schema(output_schema)
    jsonschema.Draft202012Validator.check_schema(diagram_schema)

    failures = 0
    for args in INVOCATIONS:
        first = run(cli, args)
        if run(cli, args) != first:
            print(f"FAIL {args}: output differs between runs")
            failures += 1
        errors = sorted(validator.iter_errors(json.loads(first)), key=str)
        if errors:
            print(f"FAIL {args}: {errors[0].message}")
            failures += 1
        else:
            print(f"ok   {' '.join(args)}")

    with tempfile.TemporaryDirectory() as out:
        args = ["tropical", "gallery", "--d", "3", "--g", "0", "--out", out]
        doc = json.loads(run(cli, args))
        errors = list(validator.iter_errors(doc))
        svgs = sorted(p.name for p in pathlib.Path(out).iterdir())
        if errors or doc["count"] != "9" or len(svgs) != 9:
            print(f"FAIL {args}: {errors[:1]} count={doc['count']} svgs={len(svgs)}")
            failures += 1
        else:
            print("ok   tropical gallery --d 3 --g 0")

    proc = subprocess.run([cli, "enumerate", "--d", "4", "--genus", "0", "--format", "jsonl"],
                          capture_output=True, check=True, text=True)
    lines = proc.stdout.splitlines()
    bad = [line for line in lines if list(line_validator.iter_errors(json.loads(line)))]
    if bad or len(lines) != 16:
        print(f"FAIL enumerate jsonl: {len(lines)} lines, {len(bad)} invalid")
        failures += 1
    else:
        print("ok   enumerate --format jsonl")

    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
