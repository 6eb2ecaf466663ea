"""The coefficient engine.

Strategy pipeline for the coefficient of a Catalan state: realizability
short-circuit, the tree formula when one boundary edge is return-free,
vertical decomposition at saturated lines, removable-arc reduction,
vertical factorization through local families, and finally the
brute-force oracle within budget.  Every rewrite is logged in a trace
whose factors multiply back to the reported value.
"""

from __future__ import annotations

from typing import Iterator, NamedTuple, Optional

from .kauffman import BudgetError, oracle_coefficient, _budget
from .laurent import (
    Laurent,
    ONE,
    ZERO,
    div_exact,
    is_monomial,
    max_degree,
    min_degree,
    monomial,
    monomial_shift,
    mul,
    power,
    render,
    star_normalize,
    substitute_power,
)
from .maxseq import beta
from .states import (
    Connection,
    Pair,
    _adjacent_descriptions,
    _point_text,
    boundary_points,
    classify,
    extended_labels,
    find_removable_arcs,
    is_realizable,
    is_vertically_decomposable,
    line_intersections,
    new_connection,
    remove_arc,
    rotate_pi,
    split_at,
)
from .trees import plucking, tree_from_state

#: Read a local family's arch pattern clockwise along its boundary interval
#: when building the side-anchored companion state (the calibrated choice).
PATTERN_CLOCKWISE = True


class TraceStep(NamedTuple):
    kind: str
    detail: str
    factor: Laurent


def render_trace(steps) -> str:
    lines = [
        f"step {k}: {s.kind} {s.detail} factor={render(s.factor)}"
        for k, s in enumerate(steps, start=1)
    ]
    return "\n".join(lines)


def coeff_no_bottom_returns(C: Connection) -> Laurent:
    """Coefficient of a state whose bottom edge carries no return.

    The state's plane rooted tree T(C) determines everything: the value is
    A^(2*beta - mn) times the plucking polynomial of T(C), normalized to
    minimum degree 0 and evaluated at q = A^-4.
    """
    if classify(C).bottom_returns:
        raise ValueError("state has bottom returns")
    if not is_realizable(C):
        return dict(ZERO)
    q = star_normalize(plucking(tree_from_state(C)))
    return monomial_shift(substitute_power(q, -4), 2 * beta(C) - C.m * C.n)


def reduce_removable(C: Connection) -> Optional[tuple[Laurent, Connection]]:
    """First removable-arc rewrite: (monomial factor, reduced state)."""
    arcs = find_removable_arcs(C)
    if not arcs:
        return None
    c = arcs[0]
    a, b = extended_labels(C, c)
    return monomial(b - a), remove_arc(C, c)


class LocalFamily(NamedTuple):
    """A run of 2*lam consecutive boundary points matched among themselves."""

    start: int
    length: int
    arcs: tuple[Pair, ...]


def iter_vertical_factorizations(C: Connection) -> Iterator[LocalFamily]:
    """All local families along which the coefficient factors.

    A family qualifies when its boundary interval avoids one vertical side
    entirely, and the side-hugging arcs inside and outside it occupy
    disjoint level windows, so the family can slide to the top or bottom
    edge independently of the rest.
    """
    m, n = C.m, C.n
    pts = boundary_points(m, n, n)
    N = len(pts)
    total_arcs = len(C.pairs)
    outside_js: dict[Pair, set[int]] = {
        arc: _adjacent_descriptions(arc, m, n) for arc in C.pairs
    }
    for start in range(N):
        for length in range(4, N, 2):
            interval = [pts[(start + k) % N] for k in range(length)]
            iset = set(interval)
            lam_arcs = []
            closed = True
            for arc in C.pairs:
                inside = (arc[0] in iset) + (arc[1] in iset)
                if inside == 1:
                    closed = False
                    break
                if inside == 2:
                    lam_arcs.append(arc)
            if not closed or 2 * len(lam_arcs) != length:
                continue
            if not 1 < len(lam_arcs) < total_arcs:
                continue
            sides = {p[0] for p in interval}
            if "L" in sides and "R" in sides:
                continue
            lam_js = sorted(
                j for arc in lam_arcs for j in outside_js[arc]
            )
            if lam_js:
                if lam_js[0] < 0 or lam_js[-1] > m:
                    continue
                lam_set = set(lam_arcs)
                foreign = (
                    j
                    for arc in C.pairs
                    if arc not in lam_set
                    for j in outside_js[arc]
                )
                if any(lam_js[0] < j < lam_js[-1] for j in foreign):
                    continue
            yield LocalFamily(start, length, tuple(lam_arcs))


def find_vertical_factorization(C: Connection) -> Optional[LocalFamily]:
    """First local family in (interval start, length) order, if any."""
    for fam in iter_vertical_factorizations(C):
        return fam
    return None


def vertical_factor_parts(
    C: Connection, fam: LocalFamily
) -> tuple[Connection, Connection]:
    """Split off a local family: C's coefficient is the parts' product.

    The first part re-homes the family in a lam x 2*lam rectangle: the top
    edge carries the family's arch pattern, every bottom point routes to
    the nearest side point.  The second part is C with the family replaced
    by the nested rainbow on its interval.
    """
    m, n = C.m, C.n
    pts = boundary_points(m, n, n)
    N = len(pts)
    interval = [pts[(fam.start + k) % N] for k in range(fam.length)]
    lam = fam.length // 2

    # rainbow replacement
    lam_set = {frozenset(arc) for arc in fam.arcs}
    kept = [arc for arc in C.pairs if frozenset(arc) not in lam_set]
    rainbow = [(interval[k], interval[fam.length - 1 - k]) for k in range(lam)]
    C_lam = new_connection(m, n, n, kept + rainbow)

    # side-anchored companion state on the family's own rectangle
    order = interval if PATTERN_CLOCKWISE else list(reversed(interval))
    top_index = {p: k + 1 for k, p in enumerate(order)}
    pattern = [
        (("T", top_index[p]), ("T", top_index[q])) for p, q in fam.arcs
    ]
    wiring = [(("B", i), ("L", lam + 1 - i)) for i in range(1, lam + 1)]
    wiring += [(("B", lam + i), ("R", i)) for i in range(1, lam + 1)]
    C_T = new_connection(lam, 2 * lam, 2 * lam, pattern + wiring)
    return C_T, C_lam


def vertical_decompose(C: Connection) -> list[Connection]:
    """Indecomposable blocks between consecutive saturated interior lines."""
    n = C.n
    cuts = [
        i
        for i in range(1, C.m)
        if line_intersections(C, "horizontal", i) == n
    ]
    parts = []
    rest = C
    taken = 0
    for i in cuts:
        top, rest = split_at(rest, i - taken)
        parts.append(top)
        taken = i
    parts.append(rest)
    return parts


def coefficient(
    C: Connection, budget_bits=None
) -> tuple[Laurent, list[TraceStep]]:
    """Coefficient of a Catalan state, with the reduction trace.

    The product of the trace factors equals the returned polynomial.
    """
    trace: list[TraceStep] = []
    value = _reduce(C, trace, frozenset(), budget_bits)
    return value, trace


def _reduce(C, trace, seen, budget_bits) -> Laurent:
    if not is_realizable(C):
        trace.append(
            TraceStep("realizability", "a cut line is crossed too often", dict(ZERO))
        )
        return dict(ZERO)
    census = classify(C)
    if census.bottom_returns == 0:
        value = coeff_no_bottom_returns(C)
        trace.append(
            TraceStep(
                "tree-formula",
                f"m={C.m} n={C.n} beta={beta(C)}",
                value,
            )
        )
        return value
    if census.top_returns == 0:
        trace.append(
            TraceStep("rotate-pi", "bottom returns only; half-turn image", dict(ONE))
        )
        flipped = rotate_pi(C)
        value = coeff_no_bottom_returns(flipped)
        trace.append(
            TraceStep(
                "tree-formula",
                f"m={C.m} n={C.n} beta={beta(flipped)}",
                value,
            )
        )
        return value
    parts = vertical_decompose(C)
    if len(parts) > 1:
        trace.append(
            TraceStep(
                "vertical-decompose",
                f"{len(parts)} blocks at saturated lines",
                dict(ONE),
            )
        )
        value = dict(ONE)
        for part in parts:
            value = mul(value, _reduce(part, trace, frozenset(), budget_bits))
        return value
    step = reduce_removable(C)
    if step is not None:
        factor, reduced = step
        arc = find_removable_arcs(C)[0]
        trace.append(
            TraceStep(
                "removable-arc",
                f"{_point_text(arc[0])}-{_point_text(arc[1])}",
                factor,
            )
        )
        return mul(factor, _reduce(reduced, trace, seen, budget_bits))
    for fam in iter_vertical_factorizations(C):
        C_T, C_lam = vertical_factor_parts(C, fam)
        if C_lam == C or C_lam in seen:
            continue
        trace.append(
            TraceStep(
                "vertical-factor",
                f"{fam.length // 2} arcs at boundary offset {fam.start}",
                dict(ONE),
            )
        )
        left = _reduce(C_T, trace, frozenset(), budget_bits)
        right = _reduce(C_lam, trace, seen | {C}, budget_bits)
        return mul(left, right)
    if C.m * C.n <= _budget(budget_bits):
        value = oracle_coefficient(C, budget_bits)
        trace.append(
            TraceStep("oracle", f"{C.m}x{C.n} bracket table", value)
        )
        return value
    raise BudgetError(
        f"unreachable within budget: no reduction applies to this "
        f"{C.m}x{C.n} state and its grid exceeds the oracle budget"
    )


# -- closed forms for width-3 states ---------------------------------------

_Y: Laurent = {-2: 1, 2: 1}
_X: Laurent = {-4: 1, 0: 1, 4: 1}


class Lm3Form(NamedTuple):
    kind: str  # "decomposable" | "indecomposable"
    a: int
    b: int
    c: int

    def value(self) -> Laurent:
        base = mul(monomial(self.a), power(_Y, self.b))
        if self.kind == "decomposable":
            return mul(base, power(_X, self.c))
        bracket = dict(power(_Y, 2 * self.c))
        bracket[0] = bracket.get(0, 0) - 1
        return mul(base, div_exact(bracket, _X))


def lm3_closed_form(C: Connection) -> Lm3Form:
    """Closed-form parameters (a, b, c) of a realizable width-3 state.

    Vertically decomposable states have coefficient A^a Y^b X^c and the
    others A^a Y^b (Y^(2c) - 1)/X, with Y = A^-2 + A^2, X = A^-4 + 1 + A^4.
    A failed fit raises: the shapes are guaranteed, so failure is a bug.
    """
    if C.n != 3:
        raise ValueError("closed forms need width 3")
    if not is_realizable(C):
        raise ValueError("state is not realizable")
    P, _ = coefficient(C)
    if is_vertically_decomposable(C) is not None:
        c = 0
        while True:
            try:
                nxt = div_exact(P, _X)
            except ValueError:
                break
            P, c = nxt, c + 1
        b = 0
        while True:
            try:
                nxt = div_exact(P, _Y)
            except ValueError:
                break
            P, b = nxt, b + 1
        if not is_monomial(P) or P[min_degree(P)] != 1:
            raise AssertionError("decomposable fit failed")
        return Lm3Form("decomposable", min_degree(P), b, c)
    PX = mul(P, _X)
    for b in (0, 1):
        try:
            S = div_exact(PX, power(_Y, b))
        except ValueError:
            continue
        span = max_degree(S) - min_degree(S)
        if span % 8:
            continue
        c = span // 8
        if c < 1:
            continue
        bracket = dict(power(_Y, 2 * c))
        bracket[0] = bracket.get(0, 0) - 1
        try:
            residue = div_exact(S, bracket)
        except ValueError:
            continue
        if is_monomial(residue) and residue[min_degree(residue)] == 1:
            return Lm3Form("indecomposable", min_degree(residue), b, c)
    raise AssertionError("indecomposable fit failed")
