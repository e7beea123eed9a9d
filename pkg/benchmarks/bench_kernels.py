"""Time the compiled and pure-Python integer kernels on the same inputs.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import random
import timeit

from valgebras import _pykernels, kernels
from valgebras.algebra import PHI_POSITIONS, builtin, tensor

try:
    from valgebras import _ckernels
except ImportError:
    _ckernels = None


def cases():
    rng = random.Random(1)
    octo = builtin("octonions").integer_form()[1]
    rand6 = [rng.randint(-2, 2) for _ in range(6 ** 3)]
    left8, _ = _pykernels.left_right(octo, 8)
    yield "left_right octonions (n=8)", "left_right", (octo, 8)
    yield "left_right random (n=6)", "left_right", (rand6, 6)
    yield "permuted_rows octonions", "permuted_rows", (left8, 8, PHI_POSITIONS)
    yield "tensor_table octonions x octonions", "tensor_table", (octo, 8, octo, 8)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    backends = {"python": _pykernels}
    if _ckernels is not None:
        backends["cython"] = _ckernels
    print(f"backends: {', '.join(backends)} (default {kernels.backend_name()})")
    print(f"{'case':<38}" + "".join(f"{b:>12}" for b in backends) + f"{'speedup':>10}")
    for label, fn, inputs in cases():
        times, outputs = {}, {}
        for name, mod in backends.items():
            f = getattr(mod, fn)
            outputs[name] = f(*inputs)
            times[name] = min(timeit.repeat(lambda: f(*inputs), number=1, repeat=args.repeat))
        if len(outputs) == 2:
            assert outputs["python"] == outputs["cython"], label
        speed = f"{times['python'] / times['cython']:.1f}x" if "cython" in times else "-"
        print(f"{label:<38}" + "".join(f"{times[b] * 1e3:>10.2f}ms" for b in backends) + f"{speed:>10}")
    # end-to-end, with the analysis caches cleared each run
    from valgebras import algebra

    def run():
        for cached in (algebra._left_right_ints, algebra._associator_ints, algebra.identity_rows):
            cached.cache_clear()
        return algebra.annihilator(tensor(builtin("quaternions"), builtin("octonions")))

    for name in backends:
        kernels.use_backend(name)
        t = min(timeit.repeat(run, number=1, repeat=args.repeat))
        print(f"annihilator(quaternions x octonions) [{name}]: {t * 1e3:.1f}ms")
    kernels.use_backend(None)


if __name__ == "__main__":
    main()
