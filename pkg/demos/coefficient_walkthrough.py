"""Compute one coefficient three ways and watch the reduction trace.

Run:  python3 demos/coefficient_walkthrough.py
"""

from catlattice import (
    coefficient,
    enumerate_catalan,
    is_realizable,
    oracle_coefficient,
    parse_state,
    render,
    render_state,
)
from catlattice.coeff import render_trace

STATE = "cat(2,3): T1-L1, T2-T3, L2-B1, R1-B2, R2-B3"


def main():
    C = parse_state(STATE)
    print(f"state: {render_state(C)}")
    print(f"realizable: {is_realizable(C)}")

    value, trace = coefficient(C)
    print(f"\ncoefficient: {render(value)}")
    print(render_trace(trace))

    check = oracle_coefficient(C)
    print(f"\noracle agrees: {check == value}")

    # the coefficient vanishes exactly on the unrealizable states
    zero = next(D for D in enumerate_catalan(2, 3) if not is_realizable(D))
    v, _ = coefficient(zero)
    print(f"\nunrealizable example: {render_state(zero)}")
    print(f"its coefficient: {render(v)}")


if __name__ == "__main__":
    main()
