"""Validate every JSON-emitting subcommand against the committed schema."""

import json
import subprocess
import sys

import jsonschema

CASES = [
    ["spectrum", "--a", "3", "--p", "0.5", "--coupling-g", "8", "--levels", "3"],
    ["spectrum", "--a", "3", "--lambda", "0", "--levels", "3"],
    ["wave", "--a", "3", "--coupling-g", "8", "--level", "2", "--samples", "31"],
    ["fig1", "--samples", "61"],
    ["ladder", "--a", "3", "--coupling-g", "8", "--level", "1", "--samples", "40"],
    ["ladder", "--a", "3", "--coupling-g", "8", "--level", "2", "--samples", "40"],
    ["verify", "--a", "3", "--coupling-g", "8"],
    ["verify", "--a", "3", "--coupling-g", "8", "--inject-k", "1.8119731651240849"],
    ["oracle", "--a", "3", "--coupling-g", "8", "--levels", "2", "--grid", "299", "--grid", "599"],
    ["oracle", "--a", "1", "--coupling-g", "0", "--levels", "2", "--grid", "99"],
    ["oracle", "--a", "3", "--p", "0.3", "--perturbative", "--levels", "2"],
]


def main() -> int:
    tool, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path, encoding="utf-8") as fh:
        schema = json.load(fh)
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    failures = 0
    for args in CASES:
        proc = subprocess.run([tool, *args, "--format", "json"], capture_output=True, text=True)
        if proc.returncode not in (0, 1):
            print(f"FAIL {' '.join(args)}: exit {proc.returncode}: {proc.stderr.strip()}")
            failures += 1
            continue
        errors = list(validator.iter_errors(json.loads(proc.stdout)))
        status = "ok" if not errors else "FAIL"
        print(f"{status} {' '.join(args)}")
        for err in errors:
            print(f"    {err.json_path}: {err.message}")
        failures += bool(errors)
    # Negative controls: a record without its config echo, or with a bad
    # payload, must be rejected.
    proc = subprocess.run([tool, *CASES[0], "--format", "json"], capture_output=True, text=True)
    record = json.loads(proc.stdout)
    broken = dict(record)
    del broken["config"]
    bad_payload = json.loads(proc.stdout)
    bad_payload["payload"]["levels"][0]["n"] = 0
    for name, doc in [("missing config", broken), ("level n = 0", bad_payload)]:
        if validator.is_valid(doc):
            print(f"FAIL negative control accepted: {name}")
            failures += 1
        else:
            print(f"ok negative control rejected: {name}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
