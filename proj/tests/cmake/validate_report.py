# Copyright 2026 The Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Runs a matex command with --json and validates the report against the schema.

Usage: validate_report.py SCHEMA MATEX ARGS...
Also checks that the summary tallies match the embedded findings.
"""

import json
import subprocess
import sys

import jsonschema


def main() -> int:
    schema_path, exe, *args = sys.argv[1:]
    with open(schema_path, encoding="utf-8") as f:
        schema = json.load(f)
    proc = subprocess.run([exe, "--json", *args], capture_output=True, text=True, check=False)
    if proc.returncode not in (0, 2):
        print(proc.stdout, proc.stderr)
        print(f"exit code {proc.returncode}")
        return 1
    report = json.loads(proc.stdout)
    jsonschema.validate(report, schema)
    if report["command"] == "check" and "findings" in report:
        tally = {}
        for finding in report["findings"]:
            counts = tally.setdefault(finding["check"], {"pass": 0, "violation": 0, "error": 0})
            counts[finding["status"]] += 1
        if tally != report["summary"]:
            print("summary does not match findings")
            return 1
    print(f"{report['command']} report valid")
    return 0


if __name__ == "__main__":
    sys.exit(main())
