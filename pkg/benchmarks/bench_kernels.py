"""Compare the compiled and pure-Python kernel backends.

Every kernel runs on the same connected chordal graphs (the inputs the clique
and colouring algorithms see in practice).  Reported times are the best of
``--rounds`` runs, in milliseconds.  The LexBFS verifier is cubic, so it is
skipped above ``--verifier-cap`` vertices.

    python3 benchmarks/bench_kernels.py --sizes 1000 4000 16000
"""

import argparse
import gc
import timeit
from array import array

from lexelim import _kernels
from lexelim.generators import gen_chordal


def kernel_calls(G):
    indptr, indices = G.csr
    order = _kernels.python.lexbfs_order(indptr, indices, G.n, 0)
    weights = array("q", [1 + v % 7 for v in range(G.n)])
    matrix = G.adjacency_matrix()
    row = (G.n + 7) >> 3
    return {
        "lexbfs_order": lambda m: m.lexbfs_order(indptr, indices, G.n, 0),
        "inverse_permutation": lambda m: m.inverse_permutation(order),
        "lexbfs_violation": lambda m: m.lexbfs_violation(indptr, indices, order),
        "peo_violation": lambda m: m.peo_violation(indptr, indices, order),
        "prefix_clique_weights": lambda m: m.prefix_clique_weights(indptr, indices, order, weights),
        "c4_scan": lambda m: m.c4_scan(indptr, indices, order, weights, matrix, row),
        "c6_scan": lambda m: m.c6_scan(indptr, indices, order, weights, matrix, row),
        "greedy_colors": lambda m: m.greedy_colors(indptr, indices, order),
    }


def _plain(result):
    # scans return tuples of arrays and ints; orderings come back as arrays
    if isinstance(result, tuple):
        return [_plain(x) for x in result]
    return list(result) if hasattr(result, "__len__") else result


def best_ms(fn, module, rounds):
    return 1000 * min(timeit.repeat(lambda: fn(module), number=1, repeat=rounds))


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", type=int, nargs="+", default=[1000, 4000, 16000])
    ap.add_argument("--rounds", type=int, default=5)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--verifier-cap", type=int, default=4000)
    args = ap.parse_args(argv)

    if _kernels.compiled is None:
        print("compiled backend not built; only the Python backend is timed")
    print(f"{'kernel':<22} {'n':>7} {'m':>8} {'python ms':>10} {'cython ms':>10} {'speedup':>8}")
    gc.disable()
    for n in args.sizes:
        G = gen_chordal(n, 0.5, args.seed)
        for name, fn in kernel_calls(G).items():
            if name == "lexbfs_violation" and n > args.verifier_cap:
                continue
            if _kernels.compiled is not None:
                # both backends must agree before their times mean anything
                assert _plain(fn(_kernels.python)) == _plain(fn(_kernels.compiled)), name
            py = best_ms(fn, _kernels.python, args.rounds)
            if _kernels.compiled is None:
                print(f"{name:<22} {n:>7} {G.m:>8} {py:>10.2f} {'-':>10} {'-':>8}")
                continue
            cy = best_ms(fn, _kernels.compiled, args.rounds)
            print(f"{name:<22} {n:>7} {G.m:>8} {py:>10.2f} {cy:>10.3f} {py / cy:>7.1f}x")
    gc.enable()


if __name__ == "__main__":
    main()
