"""Exact stringy E-functions of Pfaffian varieties and their linear sections."""

import json

from ._core import (
    Error,
    InvariantError,
    ParityError,
    RangeError,
    RatFunc,
    classify,
    cut_f,
    discrepancy,
    e_strata_pf,
    euler_gap,
    gauss_binomial,
    l_iso,
    relation_check,
    relation_rhs,
    run_cli,
    sod,
    stringy,
)


def verify(suite="all", grid=None, threads=1):
    """Run a verification suite; returns the parsed JSON report."""
    args = ["--format", "json", "--threads", str(threads), "verify", "--suite", suite]
    for key, (lo, hi) in (grid or {}).items():
        args += ["--grid", f"{key}={lo}..{hi}"]
    code, out, err = run_cli(args)
    if code not in (0, 1):
        raise ValueError(err.strip())
    return json.loads(out)


__all__ = [name for name in dir() if not name.startswith("_")]
