#!/usr/bin/env python3
"""Validates the CLI's JSON outputs against the schemas in schemas/.

Environment:
  ENTROKIT_CLI      path to the built CLI binary
  ENTROKIT_SCHEMAS  schemas directory (default: <repo>/schemas)
  ENTROKIT_DATA     bundled data directory (default: <repo>/data)
"""

import json
import os
import pathlib
import subprocess
import sys
import tempfile

import jsonschema

REPO = pathlib.Path(__file__).resolve().parent.parent
CLI = os.environ["ENTROKIT_CLI"]
SCHEMAS = pathlib.Path(os.environ.get("ENTROKIT_SCHEMAS", REPO / "schemas"))
DATA = pathlib.Path(os.environ.get("ENTROKIT_DATA", REPO / "data"))

failures = 0


def load_schema(name):
    return json.loads((SCHEMAS / f"{name}.schema.json").read_text())


def run(args, ok_codes=(0,)):
    result = subprocess.run([CLI, *args], capture_output=True, text=True)
    if result.returncode not in ok_codes:
        raise RuntimeError(
            f"{args}: exit {result.returncode}: {result.stderr.strip()}"
        )
    return result.stdout


def check(name, document):
    global failures
    try:
        jsonschema.validate(document, load_schema(name))
        print(f"ok   {name}")
    except jsonschema.ValidationError as error:
        failures += 1
        print(f"FAIL {name}: {error.message}")


def main():
    with tempfile.TemporaryDirectory() as tmp:
        sample = pathlib.Path(tmp) / "sample.txt"
        sample.write_text("ordinary text content for the entropy command\n" * 40)
        scenario = str(DATA / "reference_scenario.json")

        check("entropy_report",
              json.loads(run(["--format", "json", "entropy", str(sample)])))
        check("rngtest_report",
              json.loads(run(["--format", "json", "rngtest", "--all",
                              "--bytes", "8192"])))
        check("aslr_profiles",
              json.loads(run(["--format", "json", "aslr", "table"])))
        check("aslr_estimate",
              json.loads(run(["--format", "json", "aslr", "estimate", "28"])))
        check("aslr_curve",
              json.loads(run(["--format", "json", "aslr", "curve", "4", "32"])))
        check("aslr_simulation",
              json.loads(run(["--format", "json", "aslr", "simulate", "8",
                              "2000"])))
        check("mtd_result",
              json.loads(run(["--format", "json", "mtd", "run", scenario,
                              "--trials", "300"])))
        check("mtd_sweep",
              json.loads(run(["--format", "json", "mtd", "sweep", scenario,
                              "--periods", "30,60,120", "--trials", "200"])))
        check("mtd_comparison",
              json.loads(run(["--format", "json", "mtd", "compare",
                              "ip_hopping", "--trials", "300"])))
        for entry in json.loads(run(["mtd", "preset", "multi_dimensional"])):
            check("mtd_scenario", entry["scenario"])
        check("mtd_scenario", json.loads((DATA / "reference_scenario.json")
                                         .read_text()))
        check("dga_verdicts",
              json.loads(run(["--format", "json", "dga", "google.com",
                              "kq3v9z7xj2mw8r4t.com"], ok_codes=(0, 1))))
        scan_out = run(["--format", "json", "scan", tmp], ok_codes=(0, 1))
        for line in scan_out.splitlines():
            check("scan_finding", json.loads(line))
        snapshot = pathlib.Path(tmp) / "snap.jsonl"
        snapshot.write_text(scan_out)
        check("snapshot_delta",
              json.loads(run(["--format", "json", "scan", tmp,
                              "--compare-against", str(snapshot)],
                             ok_codes=(0, 1))))

    if failures:
        print(f"{failures} schema check(s) failed")
        return 1
    print("all schema checks passed")
    return 0


if __name__ == "__main__":
    sys.exit(main())
