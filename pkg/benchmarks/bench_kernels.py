"""Compare the compiled and pure-Python kernels.

Times each kernel directly from both backend modules on the same inputs and
checks the outputs agree, then times one end-to-end verification suite under
each backend in a subprocess.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import os
import subprocess
import sys
import timeit

from smashprod import _kernels_py
from smashprod import alphabet as al
from smashprod import combinatorics as cb

try:
    from smashprod import _ckernels
except ImportError:
    _ckernels = None


def margin_workload(n: int):
    # every margin pair used by the smash of degrees (p, q) landing in degree n
    jobs = []
    for p in range(1, n + 1):
        for q in range(n - p, n + 1):
            if max(p, q) > n or q < 1:
                continue
            for a in cb.compositions_of(p):
                for b in cb.compositions_of(q):
                    jobs.append(((n - p,) + a, (n - q,) + b))
    return jobs


def chain_workload(nvars: int, degree: int):
    expr = al.Product(al.Base("x", nvars), al.Base("y", nvars))
    bits = max(degree, 1).bit_length()
    keys, signs, repeats, shift = al._packed_letters(expr, bits)
    return [(keys, signs, repeats, alpha, False, degree, shift) for alpha in cb.compositions_of(degree)]


def run_margin(mod, jobs):
    return [mod.margin_fill(c, r) for c, r in jobs]


def run_chain(mod, jobs):
    return [mod.chain_sum(*j) for j in jobs]


def bench(label, fn, jobs, repeat):
    times = {}
    outputs = {}
    for name, mod in (("python", _kernels_py), ("cython", _ckernels)):
        if mod is None:
            continue
        outputs[name] = fn(mod, jobs)
        times[name] = min(timeit.repeat(lambda: fn(mod, jobs), number=1, repeat=repeat))
    line = f"{label:<36} jobs={len(jobs):<6} python {times['python'] * 1e3:9.2f} ms"
    if "cython" in times:
        same = _normalize(outputs["python"]) == _normalize(outputs["cython"])
        line += f"  cython {times['cython'] * 1e3:9.2f} ms  speedup {times['python'] / times['cython']:6.1f}x"
        line += "" if same else "  OUTPUT MISMATCH"
    print(line)


def _normalize(outs):
    return [sorted(o.items()) if isinstance(o, dict) else sorted(map(tuple, o)) for o in outs]


def end_to_end(suite: str, degree: int):
    code = (
        "import time; from smashprod import verify, kernels; t = time.perf_counter(); "
        f"r = verify.run_suite({suite!r}, {degree}); "
        "print(kernels.BACKEND, r.passed, time.perf_counter() - t)"
    )
    for pure in (False, True):
        env = dict(os.environ)
        env.pop("SMASHPROD_PURE_PYTHON", None)
        if pure:
            env["SMASHPROD_PURE_PYTHON"] = "1"
        out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
        backend, passed, secs = out.stdout.split()
        print(f"verify {suite} --max-degree {degree:<3}        {backend:<7} passed={passed:<5} {float(secs):7.2f} s")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _ckernels is None:
        print("compiled extension not built; timing the Python backend only")
    bench("margin_fill, target degree 6", run_margin, margin_workload(6), args.repeat)
    bench("margin_fill, target degree 7", run_margin, margin_workload(7), args.repeat)
    bench("chain_sum, 16 letters, degree 6", run_chain, chain_workload(4, 6), args.repeat)
    bench("chain_sum, 25 letters, degree 7", run_chain, chain_workload(5, 7), args.repeat)
    end_to_end("closure", 6)
    end_to_end("alphabet", 4)


if __name__ == "__main__":
    main()
