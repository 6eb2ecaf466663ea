"""Plucking polynomials: paths, wedges, stars, delays, and splittings.

Run:  python3 demos/plucking_basics.py
"""

from catlattice import parse_tree, plucking, q_binomial, render_tree
from catlattice.laurent import mul, render
from catlattice.trees import (
    complementary_tree,
    find_splitting_subtree,
    ordered_rooted_sum,
    path_tree,
    split_subtree,
)


def show(label, poly):
    print(f"{label:<28} {render(poly, var='q')}")


def main():
    # a bare path plucks in one forced order
    show("path with 5 edges:", plucking(path_tree(5)))

    # wedging two paths at the root counts shuffles of the two orders
    w = ordered_rooted_sum(path_tree(2), path_tree(3))
    print(f"\nwedge: {render_tree(w)}")
    show("its plucking polynomial:", plucking(w))
    show("the Gaussian binomial:", q_binomial(5, 2))

    # delays hold a leaf back for a number of rounds
    t = parse_tree("(()():2)")
    print(f"\ndelayed tree: {render_tree(t)}")
    show("plucking polynomial:", plucking(t))

    # a subtree whose leaves wait no longer than the rest factors out
    star = parse_tree("(()()())")
    split = find_splitting_subtree(star)
    inner = split_subtree(star, split)
    outer = complementary_tree(star, split)
    print(f"\nsplitting {render_tree(star)}:")
    print(f"  subtree       {render_tree(inner)}")
    print(f"  complement    {render_tree(outer)}")
    show("  product:", mul(plucking(inner), plucking(outer)))
    show("  whole tree:", plucking(star))


if __name__ == "__main__":
    main()
