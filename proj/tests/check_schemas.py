#!/usr/bin/env python3
"""Validate CLI JSON output against the shipped schemas."""
import json
import pathlib
import subprocess
import sys

import jsonschema
from referencing import Registry, Resource

CODE30 = json.dumps({
    "n": 15, "m": 1, "k": 2, "modulus": "0x3",
    "components": [
        {"j": 1, "shape": "UPow", "i": 1},
        {"j": 2, "shape": "MixedOne", "i": 1, "omega": ["0x3"]},
        {"j": 3, "shape": "UsF", "s": 0},
        {"j": 4, "shape": "UPow", "i": 0},
        {"j": 5, "shape": "UPow", "i": 2},
    ],
})
SMALL = json.dumps({
    "n": 3, "m": 2, "k": 2, "modulus": "0x7",
    "components": [{"j": 1, "shape": "TwoGen", "i": 1, "s": 0}, {"j": 2, "shape": "UsF", "s": 1},
                   {"j": 3, "shape": "UPow", "i": 1}],
})


def main():
    exe, schema_dir = sys.argv[1], pathlib.Path(sys.argv[2])
    schemas = {p.name: json.loads(p.read_text()) for p in schema_dir.glob("*.json")}
    registry = Registry().with_resources((name, Resource.from_contents(s)) for name, s in schemas.items())

    def check(schema, doc):
        cls = jsonschema.validators.validator_for(schemas[schema])
        cls.check_schema(schemas[schema])
        cls(schemas[schema], registry=registry).validate(doc)

    def run(*args):
        res = subprocess.run([exe, *args], capture_output=True, text=True, check=True)
        return res.stdout

    checks = 0
    for n, m in [(15, 1), (21, 2), (1, 3)]:
        check("factor.schema.json", json.loads(run("factor", "--n", str(n), "--m", str(m))))
        checks += 1
    for args in [("enum-selfdual", "--n", "15", "--limit", "40"), ("enum-selfdual", "--n", "3", "--m", "2", "--k", "4"),
                 ("enum-selforth", "--n", "7", "--limit", "60")]:
        for line in run(*args).splitlines():
            check("code.schema.json", json.loads(line))
            checks += 1
    for line in run("enum-ideals", "--n", "1", "--m", "2", "--k", "5").splitlines():
        check("component.schema.json", json.loads(line))
        checks += 1
    for code in (CODE30, SMALL):
        check("hull.schema.json", json.loads(run("hull", "--code", code)))
        checks += 1
    check("gray.schema.json", json.loads(run("gray", "--code", CODE30, "--genmatrix")))
    check("gray.schema.json", json.loads(run("gray", "--code", SMALL, "--genmatrix", "--weights", "--mindist")))
    checks += 2
    print(f"{checks} documents valid")


if __name__ == "__main__":
    main()
