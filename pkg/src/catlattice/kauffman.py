"""Brute-force bracket expansion of an m x n grid of crossings.

Every crossing carries a +1 or -1 marker; smoothing each crossing by its
marker turns the grid into a boundary connection plus closed loops.  The
weighted sum over all 2^(mn) marker grids is the reference ("oracle")
value every shortcut in this package is checked against.
"""

from __future__ import annotations

import os
from typing import NamedTuple

from .laurent import Laurent, ONE, ZERO, add, monomial, mul
from .states import Connection, glue_vertical, identity_state, new_connection

MarkerGrid = tuple[tuple[int, ...], ...]

#: Bracket weight of one closed loop.
LOOP_WEIGHT: Laurent = {-2: -1, 2: -1}

#: Smoothing convention: a +1 marker joins north-east and south-west tile
#: ports (so -1 joins north-west and south-east).  Flipping this swaps the
#: roles of the two markers everywhere; calibration tests pin the choice.
POSITIVE_JOINS_EAST = True

DEFAULT_BUDGET_BITS = 20


class BudgetError(Exception):
    """A request would enumerate more than 2^budget marker grids."""


class Resolution(NamedTuple):
    state: Connection
    loops: int


def _budget(budget_bits) -> int:
    if budget_bits is not None:
        return budget_bits
    return int(os.environ.get("ORACLE_BUDGET_BITS", DEFAULT_BUDGET_BITS))


def _check_budget(m: int, n: int, budget_bits) -> None:
    budget = _budget(budget_bits)
    if m * n > budget:
        raise BudgetError(
            f"oracle budget exceeded: a {m}x{n} grid needs {m * n} bits, "
            f"budget is {budget}"
        )


def smooth(grid: MarkerGrid) -> Resolution:
    """Replace every crossing by its marker smoothing.

    INPUT: a nonempty rectangular tuple of rows of +1/-1 markers.

    OUTPUT: Resolution(state, loops) — the boundary connection of the
    smoothed diagram and the number of closed loops.
    """
    m = len(grid)
    if m == 0 or len(grid[0]) == 0:
        raise ValueError("grid must have at least one row and column")
    n = len(grid[0])
    parent: dict = {}

    def find(x):
        root = x
        while parent.setdefault(root, root) != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def union(x, y):
        parent[find(x)] = find(y)

    # ports: (i, j, "N") is the north port of tile (i, j), which is also the
    # south port of tile (i-1, j); (i, j, "W") likewise serves tile (i, j-1).
    for i, row in enumerate(grid, start=1):
        if len(row) != n:
            raise ValueError("grid is not rectangular")
        for j, marker in enumerate(row, start=1):
            if marker not in (-1, 1):
                raise ValueError(f"bad marker {marker!r}")
            north, west = (i, j, "N"), (i, j, "W")
            south, east = (i + 1, j, "N"), (i, j + 1, "W")
            if (marker == 1) == POSITIVE_JOINS_EAST:
                union(north, east)
                union(south, west)
            else:
                union(north, west)
                union(south, east)

    port_of = {}
    for j in range(1, n + 1):
        port_of[("T", j)] = (1, j, "N")
        port_of[("B", j)] = (m + 1, j, "N")
    for i in range(1, m + 1):
        port_of[("L", i)] = (i, 1, "W")
        port_of[("R", i)] = (i, n + 1, "W")

    ends: dict = {}
    for pt, port in port_of.items():
        ends.setdefault(find(port), []).append(pt)
    pairs = []
    for group in ends.values():
        if len(group) != 2:
            raise AssertionError("strand with one end — smoothing bug")
        pairs.append(tuple(group))
    loops = sum(
        1 for node in list(parent) if find(node) == node and node not in ends
    )
    return Resolution(new_connection(m, n, n, pairs), loops)


def _row_resolutions(n: int) -> list[tuple[Connection, Laurent]]:
    """All 2^n smoothings of a single row with their marker weights."""
    out = []
    for bits in range(1 << n):
        row = tuple(1 if bits >> k & 1 else -1 for k in range(n))
        res = smooth((row,))
        if res.loops:
            raise AssertionError("single row produced a loop")
        out.append((res.state, monomial(sum(row))))
    return out


def bracket_table(m: int, n: int, budget_bits=None) -> dict[Connection, Laurent]:
    """Bracket coefficient of every Catalan state of the m x n grid.

    Folds the grid one row at a time: partial connections accumulate their
    total weight, and loops closed while stacking a row contribute the loop
    weight.  This regroups the plain sum over all marker grids term by
    term, so it agrees exactly with enumeration.
    """
    _check_budget(m, n, budget_bits)
    if n == 0:
        flat = new_connection(
            m, 0, 0, [(("L", i), ("R", i)) for i in range(1, m + 1)]
        )
        return {flat: dict(ONE)}
    if m == 0:
        return {identity_state(n): dict(ONE)}
    rows = _row_resolutions(n)
    table: dict[Connection, Laurent] = {}
    for state, w in rows:
        table[state] = add(table.get(state, ZERO), w)
    for _ in range(m - 1):
        nxt: dict[Connection, Laurent] = {}
        for partial, coef in table.items():
            for state, w in rows:
                glued, loops = glue_vertical(partial, state)
                contrib = mul(coef, w)
                for _k in range(loops):
                    contrib = mul(contrib, LOOP_WEIGHT)
                if not contrib:
                    continue
                cur = nxt.get(glued)
                total = add(cur, contrib) if cur is not None else contrib
                if total:
                    nxt[glued] = total
                else:
                    nxt.pop(glued, None)
        table = nxt
    return table


def bracket_table_by_enumeration(
    m: int, n: int, budget_bits=None
) -> dict[Connection, Laurent]:
    """Literal sum over all 2^(mn) marker grids (slow reference path)."""
    _check_budget(m, n, budget_bits)
    if m == 0 or n == 0:
        return bracket_table(m, n, budget_bits)
    table: dict[Connection, Laurent] = {}
    for bits in range(1 << (m * n)):
        cells = [1 if bits >> k & 1 else -1 for k in range(m * n)]
        grid = tuple(
            tuple(cells[r * n : (r + 1) * n]) for r in range(m)
        )
        state, loops = smooth(grid)
        w = monomial(sum(cells))
        for _k in range(loops):
            w = mul(w, LOOP_WEIGHT)
        total = add(table.get(state, ZERO), w)
        if total:
            table[state] = total
        else:
            table.pop(state, None)
    return table


_TABLE_CACHE: dict[tuple[int, int], dict[Connection, Laurent]] = {}


def oracle_coefficient(C: Connection, budget_bits=None) -> Laurent:
    """Reference coefficient of a Catalan state, straight from the bracket."""
    key = (C.m, C.n)
    _check_budget(C.m, C.n, budget_bits)
    table = _TABLE_CACHE.get(key)
    if table is None:
        table = bracket_table(C.m, C.n, budget_bits)
        _TABLE_CACHE[key] = table
    return dict(table.get(C, ZERO))


def bracket_coefficient_at(C: Connection) -> Laurent:
    """Bracket coefficient of one Catalan state via a target-pruned fold.

    Same weighted sum over marker grids as ``oracle_coefficient``, regrouped
    row by row, but partial connections that can no longer close up to ``C``
    are dropped as soon as that is certain: once both ends of a strand sit on
    already-placed boundary points (top or a finished side row), the pair is
    frozen, so it must already be a pair of ``C``.  Strands still touching
    the open interface stay, whatever ``C`` says.  This keeps the working
    table small for a single wide target where the full table of its grid
    would be far beyond any budget.

    The grid is folded along its shorter side; a quarter turn of the diagram
    inverts ``A``, which is undone on the way out.
    """
    if not C.is_catalan:
        raise ValueError("connection is not a Catalan state")
    if C.n > C.m:
        from .laurent import substitute_power
        from .states import rotate_quarter

        turned = bracket_coefficient_at(rotate_quarter(C))
        return substitute_power(turned, -1) if turned else dict(ZERO)
    m, n = C.m, C.n
    if m == 0 or n == 0:
        return dict(bracket_table(m, n).get(C, ZERO))
    frozen_ok = {frozenset(pair) for pair in C.pairs}

    def consistent(partial: Connection) -> bool:
        for p, q in partial.pairs:
            if p[0] != "B" and q[0] != "B" and frozenset((p, q)) not in frozen_ok:
                return False
        return True

    rows = _row_resolutions(n)
    table: dict[Connection, Laurent] = {}
    for state, w in rows:
        if consistent(state):
            table[state] = add(table.get(state, ZERO), w)
    for _ in range(m - 1):
        nxt: dict[Connection, Laurent] = {}
        for partial, coef in table.items():
            for state, w in rows:
                glued, loops = glue_vertical(partial, state)
                if not consistent(glued):
                    continue
                contrib = mul(coef, w)
                for _k in range(loops):
                    contrib = mul(contrib, LOOP_WEIGHT)
                if not contrib:
                    continue
                cur = nxt.get(glued)
                total = add(cur, contrib) if cur is not None else contrib
                if total:
                    nxt[glued] = total
                else:
                    nxt.pop(glued, None)
        table = nxt
    return dict(table.get(C, ZERO))
