"""Benchmark: compiled kernels against the pure-Python twins.

The two hot kernels are the Contejean-Devie completion and the
membership backtracking search; both backends implement identical
algorithms on exact Python integers.  Representative instances come
from the bundled corpus (membership batches, Aramata targets) and from
synthetic Diophantine systems.

Run:  python3 benchmarks/bench_kernels.py
"""

import random
import time

from charmonoid import _kernels_py
from charmonoid.dataio import load_bundled

try:
    from charmonoid import _kernels_cy
except ImportError:
    _kernels_cy = None


def bench(label, fn, repeat=3):
    best = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        elapsed = time.perf_counter() - start
        best = elapsed if best is None else min(best, elapsed)
    return best, result


def diophantine_instances():
    rng = random.Random(2024)
    out = []
    for _ in range(120):
        n = rng.randint(3, 5)
        k = rng.randint(2, 3)
        out.append([tuple(rng.randint(-3, 3) for _ in range(k)) for _ in range(n)])
    return out


def membership_instances():
    """Aramata-style targets against the minimized generators with the
    cached cone-prune functionals, the shape the library feeds the
    kernel."""
    from charmonoid.cone import ambient_cone_data, cached_cone_prune_rows

    out = []
    for name in ("sl23", "gl23", "a6", "sl28"):
        data = load_bundled(name)
        hb = data.hilbert()
        ambient_cone_data(hb)
        prune = cached_cone_prune_rows(hb)
        degrees = data.degrees
        targets = []
        for k in (1, 2, 3):
            for j in range(data.rank):
                targets.append(
                    tuple(k * (d - (1 if i == j else 0)) for i, d in enumerate(degrees))
                )
        out.append((list(hb.generators), targets, prune))
    return out


def aramata_system():
    data = load_bundled("sl23")
    gens = list(data.hilbert().generators)
    target = tuple(d - (1 if i == 0 else 0) for i, d in enumerate(data.degrees))
    return gens + [tuple(-x for x in target)]


def run_backend(impl):
    dio = diophantine_instances()
    mem = membership_instances()
    ara = aramata_system()
    times = {}
    times["diophantine"], dio_result = bench(
        "diophantine", lambda: [impl.solve_minimal(rows, 10**7) for rows in dio]
    )
    times["membership"], mem_result = bench(
        "membership",
        lambda: [
            impl.member_search(t, gens, prune)
            for gens, targets, prune in mem
            for t in targets
        ],
    )
    times["aramata-system"], ara_result = bench(
        "aramata-system", lambda: impl.solve_minimal(ara, 10**7)
    )
    return times, (dio_result, mem_result, ara_result)


def main():
    py_times, py_results = run_backend(_kernels_py)
    print(f"{'kernel':<18}{'python':>12}", end="")
    if _kernels_cy is not None:
        print(f"{'cython':>12}{'speedup':>10}")
        cy_times, cy_results = run_backend(_kernels_cy)
        assert py_results == cy_results, "backends disagree"
        for key in py_times:
            ratio = py_times[key] / cy_times[key]
            print(
                f"{key:<18}{py_times[key] * 1000:>10.1f}ms"
                f"{cy_times[key] * 1000:>10.1f}ms{ratio:>9.2f}x"
            )
    else:
        print()
        for key in py_times:
            print(f"{key:<18}{py_times[key] * 1000:>10.1f}ms")
        print("compiled backend not built; install with a C compiler to compare")


if __name__ == "__main__":
    main()
