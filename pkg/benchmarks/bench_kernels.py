"""Compare the numba kernels with the numpy fallback.

Each backend runs in its own interpreter because the switch is read at import
time.  Usage:

    python benchmarks/bench_kernels.py [--repeat 3] [--quick] [--json out.json]
"""
from __future__ import annotations

import argparse
import json
import os
import subprocess
import sys
import time

CASES = [
    # (label, p, m, n, kind, rho, what)
    ("binary [73,18]", 2, 1, 73, "s2", 1, "enum"),
    ("binary [89,22]", 2, 1, 89, "s2", 1, "enum"),
    ("GF(7) [29,8]", 7, 1, 29, "s1", 0, "enum"),
    ("GF(4) [17,8] dual", 2, 2, 17, "s2", 0, "enum-dual"),
    ("isd [61,30] GF(9)", 3, 2, 61, "s2", 1, "isd"),
]
QUICK = {"binary [73,18]", "GF(4) [17,8] dual", "isd [61,30] GF(9)"}


def _worker(repeat: int, quick: bool) -> None:
    from cyclocode._accel import backend
    from cyclocode.codes import code_from_sequence
    from cyclocode.field import gf
    from cyclocode.sequences import SequenceSpec
    from cyclocode.weights import random_codeword_upper_bound, weight_enumeration

    rows = []
    for label, p, m, n, kind, rho, what in CASES:
        if quick and label not in QUICK:
            continue
        code = code_from_sequence(SequenceSpec(kind, n, gf(p ** m), rho))
        if what == "enum-dual":
            code = code.dual()
        if what == "isd":
            def job():
                return random_codeword_upper_bound(code, 200, seed=0), 200
        else:
            def job():
                e = weight_enumeration(code, threads=1)
                return e.d, e.words
        job()  # warm-up, pays for compilation
        times = []
        for _ in range(repeat):
            t0 = time.perf_counter()
            d, units = job()
            times.append(time.perf_counter() - t0)
        best = min(times)
        rows.append({"case": label, "d": d, "units": units, "seconds": best, "rate": units / best})
    print(json.dumps({"backend": backend(), "rows": rows}))


def _run(env_flag: bool, repeat: int, quick: bool) -> dict:
    env = dict(os.environ)
    env.pop("CYCLOCODE_NO_NUMBA", None)
    if env_flag:
        env["CYCLOCODE_NO_NUMBA"] = "1"
    cmd = [sys.executable, __file__, "--worker", "--repeat", str(repeat)] + (["--quick"] if quick else [])
    out = subprocess.run(cmd, env=env, check=True, capture_output=True, text=True).stdout
    return json.loads(out.strip().splitlines()[-1])


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true")
    ap.add_argument("--json")
    ap.add_argument("--worker", action="store_true", help=argparse.SUPPRESS)
    a = ap.parse_args()
    if a.worker:
        _worker(a.repeat, a.quick)
        return
    nb = _run(False, a.repeat, a.quick)
    np_ = _run(True, a.repeat, a.quick)
    print(f"{'case':<20} {'units':>10} {nb['backend']:>12} {np_['backend']:>12} {'speedup':>8}")
    for r1, r2 in zip(nb["rows"], np_["rows"]):
        assert r1["d"] == r2["d"], (r1, r2)
        print(f"{r1['case']:<20} {r1['units']:>10} {r1['seconds']:>11.3f}s {r2['seconds']:>11.3f}s "
              f"{r2['seconds'] / r1['seconds']:>7.1f}x")
    if a.json:
        with open(a.json, "w") as fh:
            json.dump({"numba": nb, "numpy": np_}, fh, indent=2)


if __name__ == "__main__":
    main()
