"""Noncrossing boundary connections of a rectangular grid.

A connection pairs up the boundary points of an m-row grid piece: top
points T1..Tn_t (left to right), bottom points B1..Bn_b (left to right),
left points L1..Lm and right points R1..Rm (both top to bottom).  Pairs
never cross inside the rectangle.  A *Catalan state* is a connection with
equal top and bottom width.

Text form (Catalan states only)::

    cat(1,2): T1-T2, L1-B1, R1-B2

Points are written T<i>, B<i>, L<i>, R<i>; pairs are listed in reading
order (top, left, right, then bottom points, index ascending), with the
earlier endpoint of each pair written first.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Optional

Point = tuple[str, int]
Pair = tuple[Point, Point]


class _Zero:
    """Absorbing zero for the vertical product (loop or width mismatch)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "K0"


K0 = _Zero()


@dataclass(frozen=True)
class Connection:
    """A noncrossing perfect matching of grid boundary points.

    Build through :func:`new_connection`, which validates and canonicalizes;
    the constructor itself trusts its arguments.

    Attributes:
        m: number of rows (points per vertical side).
        n_t: top width.
        n_b: bottom width.
        pairs: canonically ordered matched pairs.
    """

    m: int
    n_t: int
    n_b: int
    pairs: tuple[Pair, ...]

    @property
    def n(self) -> int:
        """Common width of a Catalan state."""
        if self.n_t != self.n_b:
            raise ValueError("connection is not a Catalan state")
        return self.n_t

    @property
    def is_catalan(self) -> bool:
        return self.n_t == self.n_b

    def __repr__(self):
        if self.is_catalan:
            return render_state(self)
        body = ", ".join(f"{_point_text(p)}-{_point_text(q)}" for p, q in self.pairs)
        return f"conn({self.m},{self.n_t},{self.n_b}): {body}"


def boundary_points(m: int, n_t: int, n_b: int) -> list[Point]:
    """All boundary points in clockwise order starting at the top left."""
    out: list[Point] = [("T", i) for i in range(1, n_t + 1)]
    out += [("R", j) for j in range(1, m + 1)]
    out += [("B", i) for i in range(n_b, 0, -1)]
    out += [("L", j) for j in range(m, 0, -1)]
    return out


def _point_text(p: Point) -> str:
    return f"{p[0]}{p[1]}"


_SIDE_RANK = {"T": 0, "L": 1, "R": 2, "B": 3}


def _rank(p: Point) -> tuple[int, int]:
    """Reading order used for the canonical pair list: T, L, R, then B."""
    return (_SIDE_RANK[p[0]], p[1])


def _positions(m: int, n_t: int, n_b: int) -> dict[Point, int]:
    return {p: k for k, p in enumerate(boundary_points(m, n_t, n_b))}


def new_connection(m: int, n_t: int, n_b: int, pairs) -> Connection:
    """Validate and canonicalize a set of pairs into a Connection.

    Args:
        m: rows; n_t / n_b: top and bottom widths.
        pairs: iterable of 2-tuples of points.

    Raises:
        ValueError: on an unknown point, a duplicate point, an unmatched
            point, or a crossing pair.
    """
    pos = _positions(m, n_t, n_b)
    seen: set[Point] = set()
    arcs: list[tuple[int, int, Pair]] = []
    for raw in pairs:
        p, q = raw
        for pt in (p, q):
            if pt not in pos:
                raise ValueError(f"unknown point {_point_text(pt)}")
            if pt in seen:
                raise ValueError(f"duplicate point {_point_text(pt)}")
            seen.add(pt)
        a, b = pos[p], pos[q]
        if a > b:
            p, q, a, b = q, p, b, a
        arcs.append((a, b, (p, q)))
    if len(seen) != len(pos):
        missing = next(pt for pt in boundary_points(m, n_t, n_b) if pt not in seen)
        raise ValueError(f"unmatched point {_point_text(missing)}")
    arcs.sort()
    for i, (a1, b1, pr1) in enumerate(arcs):
        for a2, b2, pr2 in arcs[i + 1 :]:
            if a2 > b1:
                break
            # a1 < a2 by sort; crossing iff the second arc straddles b1
            if a2 < b1 < b2:
                raise ValueError(
                    f"crossing pair {_point_text(pr1[0])}-{_point_text(pr1[1])} / "
                    f"{_point_text(pr2[0])}-{_point_text(pr2[1])}"
                )
    canon = []
    for _, _, (p, q) in arcs:
        if _rank(q) < _rank(p):
            p, q = q, p
        canon.append((p, q))
    canon.sort(key=lambda pr: _rank(pr[0]))
    return Connection(m, n_t, n_b, tuple(canon))


def render_state(C: Connection) -> str:
    """Canonical text form of a Catalan state."""
    if not C.is_catalan:
        raise ValueError("only Catalan states have a text form")
    body = ", ".join(f"{_point_text(p)}-{_point_text(q)}" for p, q in C.pairs)
    return f"cat({C.m},{C.n_t}):" + (" " + body if body else "")


_STATE_HEAD = re.compile(r"^\s*cat\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*:\s*(.*?)\s*$", re.S)
_PAIR_RE = re.compile(r"^\s*([TBLR])\s*(\d+)\s*-\s*([TBLR])\s*(\d+)\s*$")


def parse_state(s: str) -> Connection:
    """Parse the ``cat(m,n): P-P, ...`` text form."""
    head = _STATE_HEAD.match(s)
    if not head:
        raise ValueError(f"state text must start with 'cat(m,n):', got {s!r}")
    m, n, tail = int(head.group(1)), int(head.group(2)), head.group(3)
    pairs = []
    if tail:
        for chunk in tail.split(","):
            pm = _PAIR_RE.match(chunk)
            if not pm:
                raise ValueError(f"bad pair {chunk.strip()!r} in state text")
            pairs.append(
                ((pm.group(1), int(pm.group(2))), (pm.group(3), int(pm.group(4))))
            )
    return new_connection(m, n, n, pairs)


def identity_state(n: int) -> Connection:
    """The Cat(0,n) state wiring Ti straight down to Bi."""
    return new_connection(0, n, n, [(("T", i), ("B", i)) for i in range(1, n + 1)])


def enumerate_catalan(m: int, n: int) -> Iterator[Connection]:
    """Yield every Catalan state of Cat(m,n) in a fixed lexicographic order.

    The order sorts by the canonical pair list under the clockwise position
    encoding; the count is the Catalan number of m+n.
    """
    points = boundary_points(m, n, n)

    def match(ps: list[Point]) -> Iterator[list[Pair]]:
        if not ps:
            yield []
            return
        first = ps[0]
        for k in range(1, len(ps), 2):
            for inside in match(ps[1:k]):
                for outside in match(ps[k + 1 :]):
                    yield [(first, ps[k])] + inside + outside

    for pairing in match(points):
        yield new_connection(m, n, n, pairing)


def coordinate(p: Point, m: int, n: int) -> int:
    """Boundary coordinate used by the exponent-counting formulas.

    Right points R_i get i, left points L_i get 1-n-i, top points T_i get
    i-n; bottom points have no coordinate.
    """
    side, i = p
    if side == "R":
        return i
    if side == "L":
        return 1 - n - i
    if side == "T":
        return i - n
    raise ValueError("bottom point has no coordinate")


def line_intersections(C: Connection, orientation: str, i: int) -> int:
    """Number of arcs crossing a horizontal or vertical cut line.

    Horizontal line i (0 <= i <= m) separates the top edge plus the first
    i points of each vertical side; vertical line j (0 <= j <= n) separates
    the left edge plus the first j points of top and bottom.
    """
    if orientation == "horizontal":
        if not 0 <= i <= C.m:
            raise ValueError("line index out of range")
        region = {p for p in boundary_points(C.m, C.n_t, C.n_b) if p[0] == "T"}
        region |= {("L", j) for j in range(1, i + 1)}
        region |= {("R", j) for j in range(1, i + 1)}
    elif orientation == "vertical":
        n = C.n  # vertical cuts need a Catalan state
        if not 0 <= i <= n:
            raise ValueError("line index out of range")
        region = {("L", j) for j in range(1, C.m + 1)}
        region |= {("T", k) for k in range(1, i + 1)}
        region |= {("B", k) for k in range(1, i + 1)}
    else:
        raise ValueError(f"unknown orientation {orientation!r}")
    return sum((p in region) != (q in region) for p, q in C.pairs)


def is_realizable(C: Connection) -> bool:
    """Whether the state is reachable by smoothing an m x n crossing grid.

    True iff no interior horizontal line is crossed more than n times and
    no interior vertical line more than m times.
    """
    n = C.n
    for i in range(1, C.m):
        if line_intersections(C, "horizontal", i) > n:
            return False
    for j in range(1, n):
        if line_intersections(C, "vertical", j) > C.m:
            return False
    return True


class StateClass(NamedTuple):
    """Arc census of a state (returns = arcs with both ends on one edge)."""

    top_returns: int
    bottom_returns: int
    left_returns: int
    right_returns: int
    top_bottom_arcs: int


def classify(C: Connection) -> StateClass:
    census = {"TT": 0, "BB": 0, "LL": 0, "RR": 0, "TB": 0}
    for p, q in C.pairs:
        key = "".join(sorted((p[0], q[0])))
        key = {"BT": "TB"}.get(key, key)
        if key in census:
            census[key] += 1
    return StateClass(
        top_returns=census["TT"],
        bottom_returns=census["BB"],
        left_returns=census["LL"],
        right_returns=census["RR"],
        top_bottom_arcs=census["TB"],
    )


def is_proper_arc(C: Connection, c: Pair) -> bool:
    """Proper arcs may be removed: no top-to-bottom strands, no side returns."""
    sides = {c[0][0], c[1][0]}
    if sides == {"T", "B"}:
        return False
    if sides == {"L"} or sides == {"R"}:
        return False
    return True


# -- symmetries ---------------------------------------------------------


def rotate_pi(C: Connection) -> Connection:
    """Rotate the rectangle by a half turn (an involution)."""

    def f(p: Point) -> Point:
        side, i = p
        if side == "T":
            return ("B", C.n_t + 1 - i)
        if side == "B":
            return ("T", C.n_b + 1 - i)
        if side == "L":
            return ("R", C.m + 1 - i)
        return ("L", C.m + 1 - i)

    return new_connection(C.m, C.n_b, C.n_t, [(f(p), f(q)) for p, q in C.pairs])


def reflect(C: Connection) -> Connection:
    """Reflect across the vertical axis (an involution)."""

    def f(p: Point) -> Point:
        side, i = p
        if side == "T":
            return ("T", C.n_t + 1 - i)
        if side == "B":
            return ("B", C.n_b + 1 - i)
        return ("R" if side == "L" else "L", i)

    return new_connection(C.m, C.n_t, C.n_b, [(f(p), f(q)) for p, q in C.pairs])


def rotate_quarter(C: Connection) -> Connection:
    """Rotate a Catalan state clockwise by a quarter turn: Cat(m,n) -> Cat(n,m)."""
    n = C.n

    def f(p: Point) -> Point:
        side, i = p
        if side == "L":
            return ("T", C.m + 1 - i)
        if side == "T":
            return ("R", i)
        if side == "R":
            return ("B", C.m + 1 - i)
        return ("L", i)

    return new_connection(n, C.m, C.m, [(f(p), f(q)) for p, q in C.pairs])


# -- gluing and the vertical product -------------------------------------


def glue_vertical(C1: Connection, C2: Connection) -> tuple[Connection, int]:
    """Stack C1 on top of C2, joining C1's bottom to C2's top.

    Returns the glued connection together with the number of closed loops
    swallowed at the interface.  Widths must agree.
    """
    if C1.n_b != C2.n_t:
        raise ValueError("widths do not match")
    partner = {}
    for tag, conn in ((1, C1), (2, C2)):
        for p, q in conn.pairs:
            partner[(tag, p)] = (tag, q)
            partner[(tag, q)] = (tag, p)

    def inner(pt: Point):
        """Product boundary point -> node of the piece that owns it."""
        side, i = pt
        if side == "T":
            return (1, pt)
        if side == "B":
            return (2, pt)
        if i <= C1.m:
            return (1, pt)
        return (2, (side, i - C1.m))

    def outer(node) -> Optional[Point]:
        """Node -> product boundary point, or None on the glued interface."""
        tag, (side, i) = node
        if tag == 1 and side == "B":
            return None
        if tag == 2 and side == "T":
            return None
        if tag == 2 and side in ("L", "R"):
            return (side, C1.m + i)
        return (side, i)

    def across(node):
        tag, (side, i) = node
        return (2, ("T", i)) if tag == 1 else (1, ("B", i))

    m = C1.m + C2.m
    done: set[Point] = set()
    touched = set()
    pairs: list[Pair] = []
    for start in boundary_points(m, C1.n_t, C2.n_b):
        if start in done:
            continue
        node = partner[inner(start)]
        while outer(node) is None:
            touched.add(node)
            hop = across(node)
            touched.add(hop)
            node = partner[hop]
        end = outer(node)
        done.add(start)
        done.add(end)
        pairs.append((start, end))
    loops = 0
    for node in partner:
        if outer(node) is not None or node in touched:
            continue
        loops += 1
        cur = node
        while cur not in touched:
            touched.add(cur)
            hop = across(cur)
            touched.add(hop)
            cur = partner[hop]
    return new_connection(m, C1.n_t, C2.n_b, pairs), loops


def vertical_product(C1, C2):
    """Stack two states; K0 absorbs width mismatches and closed loops."""
    if C1 is K0 or C2 is K0:
        return K0
    if C1.n_b != C2.n_t:
        return K0
    glued, loops = glue_vertical(C1, C2)
    return K0 if loops else glued


# -- sliding side points over the top edge --------------------------------


def tau_shift(C: Connection, t: int) -> Connection:
    """Slide t points of each side onto the top edge (t < 0 folds back down).

    Positive t turns the first t left points and first t right points into
    new top corners, giving a connection with m-t rows and top width
    n_t + 2t; the boundary sequence itself is unchanged, so noncrossing is
    preserved.  Negative t = -s folds the s outermost top points of each
    corner down the sides.  The bottom edge never moves.
    """
    if t == 0:
        return C
    n_t = C.n_t
    if t > 0:
        if t > C.m:
            raise ValueError("shift out of range")

        def f(p: Point) -> Point:
            side, i = p
            if side == "B":
                return p
            if side == "L":
                return ("T", t + 1 - i) if i <= t else ("L", i - t)
            if side == "R":
                return ("T", t + n_t + i) if i <= t else ("R", i - t)
            return ("T", t + i)

        return new_connection(
            C.m - t, n_t + 2 * t, C.n_b, [(f(p), f(q)) for p, q in C.pairs]
        )
    s = -t
    if 2 * s > n_t:
        raise ValueError("shift out of range")

    def g(p: Point) -> Point:
        side, i = p
        if side == "B":
            return p
        if side == "L":
            return ("L", i + s)
        if side == "R":
            return ("R", i + s)
        if i <= s:
            return ("L", s + 1 - i)
        if i > n_t - s:
            return ("R", i - (n_t - s))
        return ("T", i - s)

    return new_connection(
        C.m + s, n_t - 2 * s, C.n_b, [(g(p), g(q)) for p, q in C.pairs]
    )


# -- arc removal ----------------------------------------------------------


def _find_pair(C: Connection, c) -> Pair:
    want = frozenset(c)
    for pr in C.pairs:
        if frozenset(pr) == want:
            return pr
    raise ValueError("arc not in state")


def remove_arc(C: Connection, c) -> Connection:
    """Delete a proper arc, absorbing one row: Cat(m,n) -> Cat(m-1,n).

    An arc with no bottom end is erased on the fully unfolded word and the
    word is folded back one row short; an arc with a bottom end is handled
    through the half-turn symmetry.
    """
    n = C.n
    if C.m == 0:
        raise ValueError("no rows left to absorb a removal")
    c = _find_pair(C, c)
    if not is_proper_arc(C, c):
        raise ValueError("arc is not proper")
    if "B" in (c[0][0], c[1][0]):
        flip = rotate_pi(C)
        fc = _find_pair(flip, (_rot_pi_point(C, c[0]), _rot_pi_point(C, c[1])))
        return rotate_pi(remove_arc(flip, fc))
    D = tau_shift(C, C.m)

    def unfolded(p: Point) -> int:
        side, i = p
        if side == "L":
            return C.m + 1 - i
        if side == "T":
            return C.m + i
        return C.m + n + i  # R

    a, b = sorted((unfolded(c[0]), unfolded(c[1])))

    def squeeze(p: Point) -> Point:
        side, i = p
        if side == "B":
            return p
        return ("T", i - (i > a) - (i > b))

    kept = [
        (squeeze(p), squeeze(q))
        for p, q in D.pairs
        if frozenset((p, q)) != frozenset((("T", a), ("T", b)))
    ]
    D2 = new_connection(0, D.n_t - 2, D.n_b, kept)
    return tau_shift(D2, -(C.m - 1)) if C.m > 1 else D2


def _rot_pi_point(C: Connection, p: Point) -> Point:
    side, i = p
    if side == "T":
        return ("B", C.n_t + 1 - i)
    if side == "B":
        return ("T", C.n_b + 1 - i)
    if side == "L":
        return ("R", C.m + 1 - i)
    return ("L", C.m + 1 - i)


# -- extended labels and removability -------------------------------------


def extended_labels(C: Connection, c) -> tuple[int, int]:
    """Labels (a, b) writing a proper arc as joining L_a to R_b.

    The left and bottom edges extend the left-side numbering (top points
    count down from 0, bottom points continue past m); symmetrically for
    the right side.  Returns and corner arcs are labeled through the
    extension; side returns are rejected.
    """
    m, n = C.m, C.n
    c = _find_pair(C, c)
    by_side: dict[str, list[int]] = {}
    for side, i in c:
        by_side.setdefault(side, []).append(i)
    sides = frozenset(by_side)
    if sides == frozenset({"L", "R"}):
        return by_side["L"][0], by_side["R"][0]
    if sides == frozenset({"L", "T"}):
        return by_side["L"][0], by_side["T"][0] - n
    if sides == frozenset({"T", "R"}):
        return 1 - by_side["T"][0], by_side["R"][0]
    if sides == frozenset({"T"}):
        i, j = sorted(by_side["T"])
        return 1 - i, j - n
    if sides == frozenset({"L", "B"}):
        return by_side["L"][0], m + n + 1 - by_side["B"][0]
    if sides == frozenset({"R", "B"}):
        return m + by_side["B"][0], by_side["R"][0]
    if sides == frozenset({"B"}):
        i, j = sorted(by_side["B"])
        return m + i, m + n + 1 - j
    raise ValueError("arc has no extended labels")


def _left_walk(p: Point, m: int, n: int) -> Optional[int]:
    """Index of p on the extended left-side walk, None for right points."""
    side, i = p
    if side == "T":
        return 1 - i
    if side == "L":
        return i
    if side == "B":
        return m + i
    return None


def _right_walk(p: Point, m: int, n: int) -> Optional[int]:
    side, i = p
    if side == "T":
        return i - n
    if side == "R":
        return i
    if side == "B":
        return m + n + 1 - i
    return None


def _adjacent_descriptions(c: Pair, m: int, n: int) -> set[int]:
    """Walk indices j such that c joins consecutive slots j, j+1 of a side walk."""
    out: set[int] = set()
    for walk in (_left_walk, _right_walk):
        u, v = walk(c[0], m, n), walk(c[1], m, n)
        if u is not None and v is not None and abs(u - v) == 1:
            out.add(min(u, v))
    return out


def _two_sides(C: Connection, c: Pair) -> tuple[set[Point], set[Point]]:
    """Boundary points on each side of c: (touching top, touching bottom)."""
    n = C.n
    tokens: list = [("T", i) for i in range(1, n + 1)]
    tokens += [("R", j) for j in range(1, C.m + 1)]
    tokens.append("botmid")
    tokens += [("B", i) for i in range(n, 0, -1)]
    tokens += [("L", j) for j in range(C.m, 0, -1)]
    tokens.append("topmid")
    pos = {tk: k for k, tk in enumerate(tokens)}
    a, b = sorted((pos[c[0]], pos[c[1]]))
    between = {tk for tk in tokens if a < pos[tk] < b}
    outside = {tk for tk in tokens if tk not in between} - {c[0], c[1]}
    if "B" in (c[0][0], c[1][0]):
        A1, A2 = (between, outside) if "topmid" in between else (outside, between)
    else:
        A2, A1 = (between, outside) if "botmid" in between else (outside, between)
    A1.discard("topmid")
    A1.discard("botmid")
    A2.discard("topmid")
    A2.discard("botmid")
    return A1, A2


def is_removable(C: Connection, c) -> bool:
    """Whether deleting c costs only a monomial factor.

    True when c is proper and the side-walk neighbours of every other arc
    can be swept to one region: everything that hugs the boundary above
    some level j0 sits on c's top side, everything below on its bottom
    side.
    """
    if C.m == 0:
        return False
    c = _find_pair(C, c)
    if not is_proper_arc(C, c):
        return False
    A1, A2 = _two_sides(C, c)
    m, n = C.m, C.n
    top_side = [0]
    bottom_side = [m]
    for arc in C.pairs:
        if arc == c:
            continue
        bucket = top_side if arc[0] in A1 else bottom_side
        bucket.extend(_adjacent_descriptions(arc, m, n))
    return max(top_side) <= min(bottom_side) - 1


def find_removable_arcs(C: Connection) -> list[Pair]:
    """All removable arcs, in canonical pair order."""
    return [arc for arc in C.pairs if is_removable(C, arc)]


# -- saturated horizontal lines -------------------------------------------


def is_vertically_decomposable(C: Connection) -> Optional[int]:
    """Smallest i with n arcs crossing horizontal line i, if any (0..m)."""
    n = C.n
    for i in range(C.m + 1):
        if line_intersections(C, "horizontal", i) == n:
            return i
    return None


def split_at(C: Connection, i: int) -> tuple[Connection, Connection]:
    """Cut along a saturated horizontal line into Cat(i,n) * Cat(m-i,n)."""
    n = C.n
    if not 0 <= i <= C.m:
        raise ValueError("line index out of range")
    if line_intersections(C, "horizontal", i) != n:
        raise ValueError("line is not saturating")
    upper = {("T", k) for k in range(1, n + 1)}
    upper |= {("L", j) for j in range(1, i + 1)}
    upper |= {("R", j) for j in range(1, i + 1)}

    def walk_pos(p: Point) -> int:
        side, k = p
        if side == "L":
            return i - k
        if side == "T":
            return i + k
        return i + n + k  # R

    def lower_point(p: Point) -> Point:
        side, k = p
        if side == "B":
            return p
        return (side, k - i)

    crossing = []
    upper_pairs = []
    lower_pairs = []
    for p, q in C.pairs:
        inside = (p in upper) + (q in upper)
        if inside == 2:
            upper_pairs.append((p, q))
        elif inside == 0:
            lower_pairs.append((lower_point(p), lower_point(q)))
        else:
            top_end, bot_end = (p, q) if p in upper else (q, p)
            crossing.append((walk_pos(top_end), top_end, bot_end))
    crossing.sort(key=lambda rec: rec[0])
    for j, (_, top_end, bot_end) in enumerate(crossing, start=1):
        upper_pairs.append((top_end, ("B", j)))
        lower_pairs.append((("T", j), lower_point(bot_end)))
    return (
        new_connection(i, n, n, upper_pairs),
        new_connection(C.m - i, n, n, lower_pairs),
    )
