"""Time the compiled kernels against the pure-Python fallback.

Run with ``python3 benchmarks/bench_kernels.py``; prints one row per kernel
and input with the best-of-N time for each backend and the speedup.
"""

from __future__ import annotations

import argparse
import timeit

from semitop import _kernels_py as py
from semitop.algebra import boolean, self_module, trunc_nat, vector_module, zmod
from semitop.classes import select_class
from semitop.lattice import lattice_of

try:
    from semitop import _kernels as native
except ImportError:  # pragma: no cover
    native = None


def cases():
    mods = {
        "F2^3": vector_module(zmod(2), 3),
        "F2^4": vector_module(zmod(2), 4),
        "B^3": vector_module(boolean(), 3),
        "N3^2": vector_module(trunc_nat(3), 2),
        "Z6": self_module(zmod(6)),
    }
    for name, M in mods.items():
        args = (M.flat_add, M.flat_action, len(M), len(M.ring), M.zero)
        yield f"subsemimodules {name}", lambda k, a=args: k.subsemimodules(*a, 1 << 20)
        yield f"closure x all seeds {name}", lambda k, a=args, top=M.top: [k.closure(*a, s) for s in range(0, top + 1, max(1, top // 255))]
    for name, M, kind in [("F2^3", mods["F2^3"], "proper"), ("F2^3", mods["F2^3"], "maximal"), ("B^3", mods["B^3"], "irreducible")]:
        lat = lattice_of(M)
        pts = select_class(kind, lat).masks
        ups = py.up_masks(lat.subs, pts)
        if len(pts) > 20:
            continue
        full = (1 << len(pts)) - 1
        yield f"up_masks {name}/{kind}", lambda k, s=lat.subs, p=pts: k.up_masks(s, p)
        yield f"union_closure {name}/{kind}", lambda k, u=ups: k.union_closure(u, 1 << 22)
        basis = py.union_closure(ups, 1 << 22)
        yield f"intersection_closure {name}/{kind}", lambda k, b=basis, f=full: k.intersection_closure(b, f, 1 << 22)


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if native is None:
        print("compiled extension not built; only the pure backend is available")
    print(f"{'kernel':44s} {'python ms':>10s} {'cython ms':>10s} {'speedup':>8s}")
    for label, fn in cases():
        t_py = min(timeit.repeat(lambda: fn(py), number=1, repeat=args.repeat)) * 1e3
        if native is None:
            print(f"{label:44s} {t_py:10.3f} {'-':>10s} {'-':>8s}")
            continue
        assert sorted(fn(native)) == sorted(fn(py))
        t_c = min(timeit.repeat(lambda: fn(native), number=1, repeat=args.repeat)) * 1e3
        print(f"{label:44s} {t_py:10.3f} {t_c:10.3f} {t_py / t_c:7.1f}x")


if __name__ == "__main__":
    main()
