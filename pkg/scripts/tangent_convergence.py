#!/usr/bin/env python3
"""Convergence sweep for the numeric tangent-algebra extraction.

Compares the finite-difference structure constants of the unit-octonion
chart against the exact catalog tensor over a range of step sizes and
prints the max-abs error together with the observed convergence order.
"""

import argparse

import numpy as np

from mnl.algebra import catalog_algebra
from mnl.loops import tangent_structure_constants, unit_octonion_chart


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--steps", type=float, nargs="+",
                        default=[3e-2, 1e-2, 3e-3, 1e-3, 3e-4])
    args = parser.parse_args()

    chart = unit_octonion_chart()
    exact = np.zeros((7, 7, 7))
    for (i, j, k), v in catalog_algebra("m7").entries.items():
        exact[i, j, k] = float(v)

    print(f"{'step':>10}  {'max |error|':>12}  {'order':>6}")
    prev = None
    for step in args.steps:
        err = float(np.abs(tangent_structure_constants(chart, step) - exact).max())
        order = ""
        if prev is not None:
            p_step, p_err = prev
            order = f"{np.log(p_err / err) / np.log(p_step / step):6.3f}"
        print(f"{step:10.1e}  {err:12.3e}  {order:>6}")
        prev = (step, err)


if __name__ == "__main__":
    main()
