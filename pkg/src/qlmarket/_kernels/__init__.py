"""Stepping-kernel backends: compiled Cython core with a numpy fallback.

The compiled extension is optional; whichever backend imports successfully
is selected once here and used by `evolve` for the hot marching loop. Both
backends expose the same `run_split_steps` contract and agree to roundoff
(covered by tests and the benchmark in benchmarks/).
"""
from ._split_py import run_split_steps as run_split_steps_py

try:
    from ._split_cy import run_split_steps as _run_split_steps_compiled
except ImportError:
    _run_split_steps_compiled = None

HAVE_COMPILED = _run_split_steps_compiled is not None

run_split_steps = _run_split_steps_compiled if HAVE_COMPILED else run_split_steps_py


def backend_name() -> str:
    return "cython" if HAVE_COMPILED else "python"
