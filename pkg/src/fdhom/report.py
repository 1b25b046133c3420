"""Structured result documents for the command line interface.

Reports are plain dicts with a stable field order, deterministic given the
inputs and seed; the wall-clock ``timing_s`` field is the only volatile
entry and is ignored by comparisons.
"""

import time

from . import __version__


def start_clock():
    return time.monotonic()


def make_report(command, inputs, results, exit_code, seed=None, t0=None):
    return {
        "tool": "fdhom",
        "version": __version__,
        "command": list(command),
        "seed": seed,
        "inputs": inputs,
        "results": results,
        "exit_code": exit_code,
        "timing_s": round(time.monotonic() - t0, 6) if t0 is not None else None,
    }


def reports_equal(a: dict, b: dict) -> bool:
    """Semantic equality: every field except the timing."""
    strip = {"timing_s"}
    return {k: v for k, v in a.items() if k not in strip} == \
        {k: v for k, v in b.items() if k not in strip}
