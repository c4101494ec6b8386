#!/usr/bin/env python3
"""Run every jetvar command with --format json and validate against schema/.

usage: validate_json.py <jetvar binary> <schema dir> <problem file>...
"""
import json
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource

RUNS = [
    ("el", []),
    ("el", ["--iota", "literal"]),
    ("decompose", []),
    ("decompose", ["--strategy", "max-axis"]),
    ("verify", []),
    ("verify", ["--timing"]),
]


def load_registry(schema_dir):
    schemas = {}
    registry = Registry()
    for path in sorted(schema_dir.glob("*.schema.json")):
        schema = json.loads(path.read_text())
        schemas[path.name] = schema
        registry = registry.with_resource(schema["$id"], Resource.from_contents(schema))
    return schemas, registry


def main(argv):
    if len(argv) < 4:
        print(__doc__, file=sys.stderr)
        return 2
    binary = argv[1]
    schemas, registry = load_registry(pathlib.Path(argv[2]))
    failures = 0
    for problem in argv[3:]:
        for command, extra in RUNS:
            args = [binary, command, problem, "--format", "json", *extra]
            proc = subprocess.run(args, capture_output=True, text=True)
            label = " ".join([command, pathlib.Path(problem).name, *extra])
            if proc.returncode != 0:
                print(f"FAIL {label}: exit {proc.returncode}: {proc.stderr.strip()}")
                failures += 1
                continue
            schema = schemas[f"{command}.schema.json"]
            validator = jsonschema.Draft202012Validator(schema, registry=registry)
            errors = list(validator.iter_errors(json.loads(proc.stdout)))
            for e in errors:
                print(f"FAIL {label}: {e.json_path}: {e.message}")
            failures += bool(errors)
            if not errors:
                print(f"ok   {label}")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main(sys.argv))
