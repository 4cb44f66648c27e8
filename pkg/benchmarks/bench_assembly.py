#!/usr/bin/env python3
"""Benchmark the assembly-index search kernels: compiled vs pure Python.

The search is the package's only hot loop; everything else is closed-form
arithmetic or small dense linear algebra. Run from the repository root:

    PYTHONPATH=src python3 benchmarks/bench_assembly.py [--hard] [--repeat N]

Both kernels must return identical indices and witnesses; the benchmark
asserts that while timing them.
"""

from __future__ import annotations

import argparse
import random
import time

from physcomp.assembly import active_backend, assembly_index

CASES = [
    ("periodic-12", "ab" * 6, "ab"),
    ("doubling-16", "a" * 16, "a"),
    ("random2-10", None, "ab"),
    ("random2-12", None, "ab"),
    ("random3-9", None, "abc"),
    ("random3-10", None, "abc"),
]

HARD_CASES = [
    ("random2-14", None, "ab"),
    ("random3-12", None, "abc"),
]


def materialize(cases, rng):
    out = []
    for name, target, alphabet in cases:
        if target is None:
            length = int(name.rsplit("-", 1)[1])
            target = "".join(rng.choice(alphabet) for _ in range(length))
        out.append((name, target, alphabet))
    return out


def time_backend(target: str, alphabet: str, backend: str, repeat: int):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = assembly_index(target, set(alphabet), backend=backend)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--hard", action="store_true", help="include the slow cases")
    parser.add_argument("--repeat", type=int, default=3, help="timing repetitions")
    parser.add_argument("--seed", type=int, default=7)
    args = parser.parse_args()

    if active_backend() != "compiled":
        print("compiled kernel not built (python setup.py build_ext --inplace);")
        print("timing the pure kernel only\n")

    cases = materialize(CASES + (HARD_CASES if args.hard else []), random.Random(args.seed))

    header = f"{'case':<14} {'target':<16} {'index':>5} {'pure':>10} {'compiled':>10} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, target, alphabet in cases:
        t_pure, (idx_pure, path_pure) = time_backend(target, alphabet, "pure", args.repeat)
        if active_backend() == "compiled":
            t_comp, (idx_comp, path_comp) = time_backend(
                target, alphabet, "compiled", args.repeat
            )
            assert idx_pure == idx_comp, f"{name}: kernels disagree"
            assert path_pure.steps == path_comp.steps, f"{name}: witnesses disagree"
            speedup = t_pure / t_comp if t_comp > 0 else float("inf")
            comp_s, speed_s = f"{t_comp:10.4f}", f"{speedup:7.1f}x"
        else:
            comp_s, speed_s = f"{'-':>10}", f"{'-':>8}"
        shown = target if len(target) <= 16 else target[:13] + "..."
        print(f"{name:<14} {shown:<16} {idx_pure:>5} {t_pure:10.4f} {comp_s} {speed_s}")


if __name__ == "__main__":
    main()
