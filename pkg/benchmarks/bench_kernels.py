"""Compare the compiled and pure-Python pixel kernels.

    python benchmarks/bench_kernels.py [--side 512] [--repeat 3]

Also checks that both backends return identical bits.
"""

import argparse
import timeit

import numpy as np

from lipgain import kernels


def cases(side):
    rng = np.random.default_rng(0)
    a = rng.uniform(0.5, 255.5, side * side)
    b = rng.uniform(200.0, 300.0, side * side)
    return {
        "smul": lambda k: k.smul(a, 0.731, 256.0),
        "add": lambda k: k.add(a, b, 256.0),
        "prod": lambda k: k.prod(b, b, 256.0),
        "moments": lambda k: k.moments(a),
    }


def run(side=512, repeat=3):
    backends = kernels.available_backends()
    rows = []
    for name, fn in cases(side).items():
        times = {}
        results = {}
        for bname, mod in backends.items():
            results[bname] = fn(mod)
            times[bname] = min(timeit.repeat(lambda: fn(mod), number=1, repeat=repeat))
        ref = results["python"]
        same = all(_identical(r, ref) for r in results.values())
        rows.append((name, times, same))
    return rows


def _identical(x, y):
    if isinstance(x, tuple) and isinstance(x[0], np.ndarray):
        return np.array_equal(x[0], y[0]) and x[1] == y[1]
    return x == y


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--side", type=int, default=512, help="image is side x side pixels")
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)

    rows = run(args.side, args.repeat)
    names = sorted(rows[0][1])
    print(f"{args.side}x{args.side} pixels, best of {args.repeat}")
    print(f"{'kernel':<9}" + "".join(f"{n:>12}" for n in names) + f"{'speedup':>10}  identical")
    for name, times, same in rows:
        speed = times["python"] / times["cython"] if "cython" in times else float("nan")
        cols = "".join(f"{times[n] * 1e3:>10.2f}ms" for n in names)
        print(f"{name:<9}{cols}{speed:>9.1f}x  {same}")


if __name__ == "__main__":
    main()
