#!/usr/bin/env python3
"""Runs wav_oracle.py and `uavg wav` on one tuple and compares exactly.

Usage: check_oracle.py path/to/uavg tuple.json
"""
import json
import subprocess
import sys
from fractions import Fraction
from pathlib import Path


def coef(c):
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    return Fraction(int(c["num"]), int(c.get("den", 1)))


def entry(e, q):
    if isinstance(e, dict) and "terms" in e:
        out = {}
        for t in e["terms"]:
            c = coef(t["coef"])
            if c:
                out[tuple(t["exp"])] = c
        return out
    c = coef(e)
    return {(0,) * q: c} if c else {}


def normal(m):
    q = m.get("q", 0)
    return [[entry(e, q) for e in row] for row in m["entries"]]


def main():
    binary, tuple_path = sys.argv[1], sys.argv[2]
    oracle = Path(__file__).with_name("wav_oracle.py")
    expected = json.loads(subprocess.run([sys.executable, str(oracle), tuple_path], check=True,
                                         capture_output=True, text=True).stdout)
    actual = json.loads(subprocess.run([binary, "wav", "-i", tuple_path], check=True,
                                       capture_output=True, text=True).stdout)["wav"]
    actual.setdefault("q", expected["q"])
    if normal(expected) != normal(actual):
        print(f"MISMATCH on {tuple_path}")
        return 1
    print(f"match on {tuple_path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
