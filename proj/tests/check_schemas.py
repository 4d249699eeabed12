"""Validates fixtures and generated reports against the JSON schemas."""
import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema

cli, root = sys.argv[1], pathlib.Path(sys.argv[2])
schemas = {n: json.loads((root / "docs" / f"{n}.schema.json").read_text())
           for n in ("fan", "toric-fan", "report")}


def check(schema, path):
    jsonschema.validate(json.loads(pathlib.Path(path).read_text()), schemas[schema])


for f in (root / "fixtures" / "toric").glob("*.json"):
    check("toric-fan", f)
for f in (root / "fixtures" / "fans").glob("*.json"):
    if f.name != "malformed.json":
        check("fan", f)
    with tempfile.TemporaryDirectory() as tmp:
        for cmd in ("validate", "smooth", "acover"):
            out = pathlib.Path(tmp) / "r.json"
            subprocess.run([cli, cmd, str(f), "--out", str(out)], capture_output=True)
            check("report", out)
print("schemas ok")
