"""Factor a 4x6 state through a local family of arcs.

A run of consecutive boundary points matched among themselves can, under
a window condition on the side levels it touches, be slid off the state:
the coefficient becomes a product of the family's own rectangle and the
state with the family replaced by a nested rainbow.

Run:  python3 demos/factoring_tour.py
"""

from catlattice import parse_state, render, render_state
from catlattice.coeff import (
    coefficient,
    iter_vertical_factorizations,
    vertical_factor_parts,
)
from catlattice.laurent import mul
from catlattice.samples import FACTOR_SAMPLE_TEXT


def main():
    C = parse_state(FACTOR_SAMPLE_TEXT)
    print(f"state: {render_state(C)}")

    fams = list(iter_vertical_factorizations(C))
    print(f"\n{len(fams)} local families detected:")
    for fam in fams:
        names = ", ".join(f"{p[0]}{p[1]}-{q[0]}{q[1]}" for p, q in fam.arcs)
        print(f"  offset {fam.start}, {fam.length // 2} arcs: {names}")

    fam = fams[0]
    side, residue = vertical_factor_parts(C, fam)
    print(f"\nfamily rectangle: {render_state(side)}")
    print(f"rainbow residue:  {render_state(residue)}")

    left, _ = coefficient(side)
    right, _ = coefficient(residue)
    whole, _ = coefficient(C)
    print(f"\nfactor 1: {render(left)}")
    print(f"factor 2: {render(right)}")
    print(f"product:  {render(mul(left, right))}")
    print(f"whole:    {render(whole)}")
    print(f"agree:    {mul(left, right) == whole}")


if __name__ == "__main__":
    main()
