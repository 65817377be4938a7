"""Compare the two exact rational backends on representative hot kernels.

Every computation in the package is exact; the only tunable is whether the
underlying rational type is gmpy2.mpq or fractions.Fraction (selected by
SUBSYM_RATIONAL_BACKEND).  This script reruns the heavy kernels under both
backends in subprocesses and prints a timing table.

Run:  python benchmarks/bench_rational_backends.py
"""

import os
import subprocess
import sys

WORKLOADS = {
    "trace_free_kernel_3_5": (
        "from subsym.decompose import trace_free_dimension;"
        "assert trace_free_dimension(3, 5) == 2024"
    ),
    "commutant_crosscheck_3_6": (
        "from subsym.classalg import ClassElement, class_multiply;"
        "from subsym.decompose import commutant_mult_crosscheck;"
        "cp = lambda lam, mu: class_multiply(ClassElement.basis(3, lam),"
        " ClassElement.basis(3, mu)).coeffs;"
        "assert all(ok for _, _, ok in commutant_mult_crosscheck(3, 6, cp))"
    ),
    "classalg_k6_full_table": (
        "from subsym.classalg import ClassElement, class_multiply, partitions;"
        "ps = partitions(6);"
        "[class_multiply(ClassElement.basis(6, a), ClassElement.basis(6, b))"
        " for a in ps for b in ps]"
    ),
    "composition_identity_n2": (
        "import random;"
        "from subsym.ambient import AmbientModel, random_traceless,"
        " verify_composition_identity;"
        "m = AmbientModel(2); rng = random.Random(42);"
        "V = random_traceless(2, rng); W = random_traceless(2, rng);"
        "assert not verify_composition_identity(m, V, W, -1, -1, 3)"
    ),
}


def run_one(backend: str, code: str) -> float:
    env = dict(os.environ, SUBSYM_RATIONAL_BACKEND=backend)
    wrapped = (
        "import time, subsym;"
        f"assert subsym.RATIONAL_BACKEND == {backend!r}, subsym.RATIONAL_BACKEND;"
        "t0 = time.perf_counter();" + code + ";print(time.perf_counter() - t0)"
    )
    out = subprocess.run(
        [sys.executable, "-c", wrapped], env=env, capture_output=True, text=True
    )
    if out.returncode != 0:
        raise RuntimeError(out.stderr)
    return float(out.stdout.strip().splitlines()[-1])


def main():
    backends = ["fraction"]
    try:
        import gmpy2  # noqa: F401

        backends.insert(0, "gmpy2")
    except ImportError:
        print("gmpy2 not installed; benchmarking the fraction backend only")
    results = {}
    for name, code in WORKLOADS.items():
        results[name] = {}
        for backend in backends:
            results[name][backend] = run_one(backend, code)
    width = max(len(n) for n in WORKLOADS)
    header = f"{'workload':<{width}}  " + "  ".join(f"{b:>10}" for b in backends)
    if len(backends) == 2:
        header += "   speedup"
    print(header)
    print("-" * len(header))
    for name, times in results.items():
        row = f"{name:<{width}}  " + "  ".join(f"{times[b]:>9.3f}s" for b in backends)
        if len(backends) == 2:
            row += f"   {times['fraction'] / times['gmpy2']:>6.2f}x"
        print(row)
    return results


if __name__ == "__main__":
    main()
