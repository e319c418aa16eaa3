#!/usr/bin/env python3
"""Benchmark the compiled alignment kernel against the pure-Python fallback.

Generates synthetic noisy sentence pairs and times align_kernel on both
backends with identical inputs.

    python3 benchmarks/bench_align.py --pairs 2000 --length 20
"""
import argparse
import random
import statistics
import time

from geckit import _align_py

try:
    from geckit import _align_c
except ImportError:
    _align_c = None

VOCAB = [
    ("the", "the", "DET"), ("a", "a", "DET"), ("cat", "cat", "NOUN"),
    ("cats", "cat", "NOUN"), ("dog", "dog", "NOUN"), ("runs", "run", "VERB"),
    ("ran", "run", "VERB"), ("quickly", "quick", "ADV"), ("quick", "quick", "ADJ"),
    ("over", "over", "ADP"), ("and", "and", "CCONJ"), (".", ".", "PUNCT"),
    ("meeting", "meet", "NOUN"), ("meet", "meet", "VERB"), ("house", "house", "NOUN"),
]

PARAMS = (1.0, 1.0, 0.499, 0.0, 0.25, 0.5, 1.0, 4)


def make_pairs(n_pairs: int, length: int, seed: int):
    rng = random.Random(seed)
    pairs = []
    for _ in range(n_pairs):
        picks = [rng.choice(VOCAB) for _ in range(length)]
        corrupted = list(picks)
        for _ in range(rng.randint(1, max(1, length // 4))):
            action = rng.random()
            pos = rng.randrange(len(corrupted)) if corrupted else 0
            if action < 0.4 and corrupted:
                corrupted[pos] = rng.choice(VOCAB)
            elif action < 0.7 and corrupted:
                del corrupted[pos]
            elif action < 0.9:
                corrupted.insert(pos, rng.choice(VOCAB))
            elif len(corrupted) >= 2:
                pos = rng.randrange(len(corrupted) - 1)
                corrupted[pos], corrupted[pos + 1] = corrupted[pos + 1], corrupted[pos]
        src = tuple(zip(*corrupted)) if corrupted else ((), (), ())
        tgt = tuple(zip(*picks))
        pairs.append((tuple(list(x) for x in src), tuple(list(x) for x in tgt)))
    return pairs


def run(kernel, pairs):
    start = time.perf_counter()
    checksum = 0.0
    for (sf, sl, sp), (tf, tl, tp) in pairs:
        _, cost = kernel.align_kernel(sf, sl, sp, tf, tl, tp, *PARAMS)
        checksum += cost
    return time.perf_counter() - start, checksum


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--pairs", type=int, default=2000)
    parser.add_argument("--length", type=int, default=20)
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--seed", type=int, default=1)
    args = parser.parse_args()

    pairs = make_pairs(args.pairs, args.length, args.seed)
    backends = [("python", _align_py)]
    if _align_c is not None:
        backends.append(("compiled", _align_c))
    else:
        print("compiled kernel not available; timing the fallback only")

    results = {}
    for name, kernel in backends:
        times = []
        checksum = None
        for _ in range(args.repeats):
            elapsed, total = run(kernel, pairs)
            times.append(elapsed)
            checksum = total
        best = min(times)
        results[name] = (best, checksum)
        print(f"{name:>9}: best {best:.3f}s over {args.repeats} runs "
              f"({args.pairs / best:,.0f} pairs/s, median {statistics.median(times):.3f}s, "
              f"checksum {checksum:.6f})")

    if len(results) == 2:
        py_time, py_sum = results["python"]
        c_time, c_sum = results["compiled"]
        agree = "identical" if py_sum == c_sum else "DIFFERENT (bug!)"
        print(f"speedup: {py_time / c_time:.2f}x, checksums {agree}")


if __name__ == "__main__":
    main()
