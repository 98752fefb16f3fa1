"""The command-line front end emits deterministic JSON reports.

Run from the repository root.  Each subcommand prints one document with the
schema tag, the sha256 of every input file, the parameters, and the result;
two runs on the same inputs are byte-identical.
"""

import json
import subprocess
import sys

CASES = [
    ["jets", "docs/golden/inputs/cusp.pres", "--order", "4"],
    ["distance", "docs/golden/inputs/x2.pres", "docs/golden/inputs/x3.pres",
     "--max-order", "6"],
    ["classify", "docs/golden/inputs/quartic.pres"],
    ["slopes", "docs/golden/inputs/plane.pres", "--which", "quasidim"],
]

for argv in CASES:
    out = subprocess.run([sys.executable, "-m", "jetmetric.cli"] + argv,
                         capture_output=True, text=True, check=True).stdout
    doc = json.loads(out)
    print("$ jetmetric " + " ".join(argv))
    print("  ->", json.dumps(doc["result"], sort_keys=True)[:120], "...")
    print()

# failures are JSON too (exit code 1), so pipelines can branch on them:
bad = subprocess.run(
    [sys.executable, "-m", "jetmetric.cli", "euler",
     "docs/golden/inputs/fat-point.pres"],
    capture_output=True, text=True)
print("$ jetmetric euler docs/golden/inputs/fat-point.pres")
print("  exit", bad.returncode, "->", bad.stdout.strip().replace(chr(10), " ")[:100])
