"""Compiled vs pure-Python kernel timings.

    python benchmarks/bench_kernels.py [--points 2000] [--slots 200] [--repeat 3]

Both backends are called on identical inputs and their outputs are
compared before timing is reported.
"""
import argparse
import time

import numpy as np

from semcom import _kernels_py, adapt, data, kernels, topo


def best_of(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--points", type=int, default=2000)
    ap.add_argument("--slots", type=int, default=200)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    fast = kernels.compiled()
    if fast is None:
        raise SystemExit("compiled extension not built; run pip install -e . first")

    image = data.demo_image(128)
    pts = topo.sample_vertices(image, args.points, seed=0)
    tris = fast.delaunay_rect(pts)
    ctl = adapt.Controller(adapt.default_model(), adapt.AdaptConfig())
    gains = adapt.fading_gains(args.slots, seed=0)

    cases = [
        ("delaunay_rect", lambda k: k.delaunay_rect(pts)),
        ("assign_pixels", lambda k: k.assign_pixels(pts, tris, image.width, image.height)),
        ("simulate_slots", lambda k: ctl.simulate(gains, backend=k).energy),
    ]
    print(f"{'kernel':<16}{'python s':>12}{'cython s':>12}{'speedup':>10}  same")
    for name, call in cases:
        t_py, out_py = best_of(lambda: call(_kernels_py), args.repeat)
        t_c, out_c = best_of(lambda: call(fast), args.repeat)
        same = np.array_equal(np.asarray(out_py), np.asarray(out_c))
        print(f"{name:<16}{t_py:12.4f}{t_c:12.4f}{t_py / t_c:10.1f}x  {same}")


if __name__ == "__main__":
    main()
