#!/usr/bin/env python3
"""Regenerate the committed golden CLI outputs under tests/golden/.

Run from the repository root after any intentional output-format change, then
review the diff before committing.
"""

import subprocess
import sys
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
DATA = ROOT / "tests" / "data"
GOLDEN = ROOT / "tests" / "golden"

COMMANDS = {
    "quote.json": ["quote", "--spec", str(DATA / "worked_bancor.json"),
                   "--x", "100", "--y", "100", "--dx", "100"],
    "translate_carbon.json": ["translate", "--spec", str(DATA / "worked_bancor.json"),
                              "--to", "carbon"],
    "geometry.json": ["geometry", "--spec", str(DATA / "worked_bancor.json")],
    "angle.json": ["angle", "--spec", str(DATA / "worked_bancor.json")],
    "sweep_points3.json": ["sweep", "--spec", str(DATA / "worked_bancor.json"),
                           "--points", "3"],
    "sweep_points3.csv": ["sweep", "--spec", str(DATA / "worked_bancor.json"),
                          "--points", "3", "--output", "csv"],
}


def main() -> int:
    GOLDEN.mkdir(parents=True, exist_ok=True)
    for name, argv in COMMANDS.items():
        result = subprocess.run([sys.executable, "-m", "clamm", *argv],
                                capture_output=True, check=True)
        (GOLDEN / name).write_bytes(result.stdout)
        print(f"wrote {GOLDEN / name} ({len(result.stdout)} bytes)")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
