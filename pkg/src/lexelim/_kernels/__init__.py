"""Hot loops with a compiled backend and a pure-Python fallback.

The Cython extension is used when it was built; otherwise the fallback in
``_pykernels`` is imported.  Both modules are importable on their own so
tests and benchmarks can compare them.
"""

from . import _pykernels as python

try:
    from . import _ckernels as compiled
except ImportError:  # extension not built
    compiled = None

active = compiled if compiled is not None else python
BACKEND = active.BACKEND

lexbfs_order = active.lexbfs_order
inverse_permutation = active.inverse_permutation
lexbfs_violation = active.lexbfs_violation
peo_violation = active.peo_violation
prefix_clique_weights = active.prefix_clique_weights
c4_scan = active.c4_scan
c6_scan = active.c6_scan
greedy_colors = active.greedy_colors


def available_backends():
    return [m for m in (compiled, python) if m is not None]
