"""Time the numba kernels against the numpy fallbacks.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--maps 200000]

Both backends are called directly from the kernel tables, so the result does
not depend on MVKIT_NUMBA. Each row checks the two outputs agree before
reporting the timings.
"""
import argparse
import timeit

import numpy as np

from mvkit import chain, direct_product
from mvkit.kernels import NUMBA_KERNELS, NUMPY_KERNELS


def cases(n_maps, seed):
    rng = np.random.default_rng(seed)
    A16 = chain(16)
    P = direct_product(chain(3), chain(3))
    C6 = chain(6)
    maps = rng.integers(0, C6.order, size=(n_maps, C6.order), dtype=np.int64)
    yield "axiom_witnesses S16", "axiom_witnesses", (A16.oplus, A16.neg)
    yield "axiom_witnesses S3xS3", "axiom_witnesses", (P.oplus, P.neg)
    yield f"leibniz_mask S6 x{n_maps}", "leibniz_mask", (maps, C6.odot, C6.oplus)
    yield f"homomorphic_mask S6 x{n_maps}", "homomorphic_mask", (maps, C6.oplus)
    yield f"isotone_mask S6 x{n_maps}", "isotone_mask", (maps, C6.leq)


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=5)
    p.add_argument("--maps", type=int, default=200_000)
    p.add_argument("--seed", type=int, default=0)
    args = p.parse_args(argv)

    print(f"{'kernel':<34}{'numpy ms':>12}{'numba ms':>12}{'speedup':>10}")
    for label, name, inputs in cases(args.maps, args.seed):
        fnp, fnb = NUMPY_KERNELS[name], NUMBA_KERNELS[name]
        ref = fnp(*inputs)
        if not np.array_equal(ref, fnb(*inputs)):  # also warms the jit
            raise SystemExit(f"{label}: backends disagree")
        t_np = min(timeit.repeat(lambda: fnp(*inputs), number=1, repeat=args.repeat))
        t_nb = min(timeit.repeat(lambda: fnb(*inputs), number=1, repeat=args.repeat))
        print(f"{label:<34}{t_np * 1e3:>12.2f}{t_nb * 1e3:>12.2f}{t_np / t_nb:>9.1f}x")


if __name__ == "__main__":
    main()
