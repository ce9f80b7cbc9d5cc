"""Benchmark: compiled kernel vs pure-Python fallback on the suite workload.

Usage: python benchmarks/bench_kernel.py [--trials N]

Times the same fixed slice of the law suite against both kernel
implementations (results are asserted identical), plus the raw primitive
throughput. The compiled kernel is optional; without it only the pure
numbers print.
"""

from __future__ import annotations

import argparse
import time

from hesitant._kernel import _pykernel as pure
from hesitant._kernel import compiled
from hesitant.laws.algebra import Algebra
from hesitant.laws.engine import GeneratorConfig, _make_binding, _mix
from hesitant.laws.generators import GenContext
from hesitant.laws.registry import get_law

# a representative mix: unguarded identity, guarded relation, sot family law
BENCH_LAWS = ("thm1.2", "prop2.9", "prop11.6", "thm4.4", "thm6.7", "prop13.4")


def run_slice(kern, config: GeneratorConfig, trials: int):
    alg = Algebra(kern, config.degree_grid)
    verdicts = []
    started = time.perf_counter()
    for law_id in BENCH_LAWS:
        law = get_law(law_id)
        for index in range(trials):
            stream = kern.Stream(_mix(config.seed, law.id, index))
            size = stream.randint(*config.universe_size)
            ctx = GenContext(
                den=config.degree_grid,
                size=size,
                card_lo=config.cardinality[0],
                card_hi=config.cardinality[1],
                fam_lo=config.family_size[0],
                fam_hi=config.family_size[1],
            )
            binding = _make_binding(law, alg, stream, ctx, config.max_attempts)
            verdicts.append(binding is not None and law.claim(alg, binding))
    return time.perf_counter() - started, verdicts


def bench_primitives(kern, n=200_000):
    stream = kern.Stream(7)
    hfes = [kern.gen_hfe(stream, 100, 1, 6) for _ in range(512)]
    started = time.perf_counter()
    acc = 0
    for i in range(n):
        a = hfes[i & 511]
        b = hfes[(i * 7 + 1) & 511]
        acc += kern.e_rel(2, a, b)
        acc += kern.e_sot(a, b)
        if i & 15 == 0:
            kern.e_union(a, b)
            kern.e_inter(a, b)
    return time.perf_counter() - started


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--trials", type=int, default=5000)
    args = parser.parse_args()

    config = GeneratorConfig(trials=args.trials)
    total = args.trials * len(BENCH_LAWS)

    pure_time, pure_verdicts = run_slice(pure, config, args.trials)
    print(f"pure     suite slice: {total} trials in {pure_time:.2f}s "
          f"({total / pure_time:,.0f} trials/s)")
    pure_prim = bench_primitives(pure)
    print(f"pure     primitives:  {pure_prim:.2f}s")

    if compiled is None:
        print("compiled kernel not available; build with `python setup.py build_ext --inplace`")
        return

    compiled_time, compiled_verdicts = run_slice(compiled, config, args.trials)
    print(f"compiled suite slice: {total} trials in {compiled_time:.2f}s "
          f"({total / compiled_time:,.0f} trials/s)")
    compiled_prim = bench_primitives(compiled)
    print(f"compiled primitives:  {compiled_prim:.2f}s")

    assert pure_verdicts == compiled_verdicts, "kernel implementations disagree"
    print(f"verdicts identical across kernels ({len(pure_verdicts)} trials)")
    print(f"speedup: suite slice x{pure_time / compiled_time:.1f}, "
          f"primitives x{pure_prim / compiled_prim:.1f}")


if __name__ == "__main__":
    main()
