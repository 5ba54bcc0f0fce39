"""Runs the CLI with --json and validates the report against docs/report.schema.json."""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

import jsonschema


def main() -> int:
    exe, schema_path, *args = sys.argv[1:]
    schema = json.loads(Path(schema_path).read_text())
    with tempfile.TemporaryDirectory() as tmp:
        out = Path(tmp) / "report.json"
        first = subprocess.run([exe, *args, "--json", str(out), "--timing"], capture_output=True, text=True)
        report = json.loads(out.read_text())
        jsonschema.validate(report, schema)
        if report["exit_code"] != first.returncode:
            print(f"exit code {first.returncode} != reported {report['exit_code']}")
            return 1
        # Without --timing, two runs are byte-identical.
        a, b = Path(tmp) / "a.json", Path(tmp) / "b.json"
        subprocess.run([exe, *args, "--json", str(a)], capture_output=True)
        subprocess.run([exe, *args, "--json", str(b)], capture_output=True)
        if a.read_bytes() != b.read_bytes():
            print("reports differ between runs")
            return 1
        jsonschema.validate(json.loads(a.read_text()), schema)
    print(f"{len(report['assertions'])} assertions; schema ok; byte-identical reruns")
    return 0


if __name__ == "__main__":
    sys.exit(main())
