"""
Joint placement of curve diagrams and exact geometric intersection numbers.

Two embedded diagrams are placed transversally by choosing one global
interleaving of their crossings along every edge.  Crossings between the
curves are then exactly the interleaved chord pairs.  Minimal position
is reached by removing bigons: a bigon is witnessed by a pair of
crossings adjacent along both curves whose bounding loop (one arc of
each curve) is null-homotopic; such a bigon is automatically innermost,
and the removal reroutes one arc parallel to the other curve, dropping
exactly two crossings.  The bigon criterion guarantees the remaining
count is the geometric intersection number.

The default placement stacks strands along each edge in "itinerary
order": two strands crossing an edge the same way are ordered by where
their forward paths first diverge, which reproduces the geodesic-like
stacking and leaves few or no bigons to remove.  A plain per-component
stacking is kept as a fallback; both placements are corrected by the
bigon loop, so the choice only affects speed.
"""

from fractions import Fraction

from . import words as W
from .diagrams import (CurveDiagram, DiagramError, entry_avatar, exit_avatar,
                       interleave, side_of, tauten)


class ReductionError(RuntimeError):
    pass


# -- walk states for the itinerary comparator --------------------------------

def _advance(curve, m, direction):
    return (m + direction) % len(curve.events)


def _crossing_copy(curve, m, direction):
    """Side copy through which the walk exits at event m."""
    return curve.events[m][1] * direction


def _walk_exit_side(curve, m, direction):
    """(side, copy, edge) of the walk's next departure after event m."""
    m2 = _advance(curve, m, direction)
    e2, _s2 = curve.events[m2]
    copy = _crossing_copy(curve, m2, direction)
    return side_of(curve.genus, e2, copy), copy, e2, m2


def _compare_same_direction(curves, a, b, memo):
    """Order along the edge of two walk crossings sharing a direction.

    a and b are (comp, event, dir) with equal exit copies on the same
    edge.  Returns -1/0/+1 for the sign of t_a - t_b; 0 means the
    forward itineraries are parallel forever.
    """
    key = (a, b)
    if key in memo:
        return memo[key]
    memo[key] = 0  # provisional: a revisit means periodic parallelism
    ca, ma, da = a
    cb, mb, db = b
    chi = _crossing_copy(curves[ca], ma, da)
    genus = curves[ca].genus
    nsides = 4 * genus
    side_a, copy_a, edge_a, ma2 = _walk_exit_side(curves[ca], ma, da)
    side_b, copy_b, edge_b, mb2 = _walk_exit_side(curves[cb], mb, db)
    entry_side = side_of(genus, curves[ca].events[ma][0], -chi)
    off_a = (side_a - entry_side) % nsides
    off_b = (side_b - entry_side) % nsides
    if (side_a, copy_a) != (side_b, copy_b):
        res = (1 if off_a > off_b else -1) * chi
    else:
        rec = _compare_same_direction(curves, (ca, ma2, da), (cb, mb2, db), memo)
        res = rec * chi * copy_a
    memo[key] = res
    return res


def _compare_crossings(curves, x, y):
    """Total order of two crossings (comp, event) along their shared edge."""
    ca, ma = x
    cb, mb = y
    # normalize both walks to exit through the positive copy
    da = curves[ca].events[ma][1]
    db = curves[cb].events[mb][1]
    res = _compare_same_direction(curves, (ca, ma, da), (cb, mb, db), {})
    if res == 0:
        res = _compare_same_direction(curves, (ca, ma, -da), (cb, mb, -db), {})
    if res == 0:
        # fully parallel strands: stack by component, then event index
        res = -1 if (ca, ma) < (cb, mb) else 1
    return res


def place(curves, mode="itinerary"):
    """Joint positions for a list of diagrams: comp -> list of Fractions."""
    genus = curves[0].genus
    per_edge = {}
    for ci, c in enumerate(curves):
        for m, (e, _s) in enumerate(c.events):
            per_edge.setdefault(e, []).append((ci, m))
    pos = [[None] * len(c.events) for c in curves]
    import functools
    for e, xs in per_edge.items():
        if mode == "itinerary":
            cmp = functools.cmp_to_key(lambda x, y: _compare_crossings(curves, x, y))
            xs_sorted = sorted(xs, key=cmp)
        else:
            xs_sorted = sorted(xs, key=lambda x: (x[0], curves[x[0]].pos[x[1]]))
        den = len(xs_sorted) + 1
        for rank, (ci, m) in enumerate(xs_sorted):
            pos[ci][m] = Fraction(rank + 1, den)
    return pos


def _chords(curve, pos):
    n = len(curve.events)
    out = []
    for m in range(n):
        e0, s0 = curve.events[m]
        e1, s1 = curve.events[(m + 1) % n]
        out.append((entry_avatar(curve.genus, e0, s0, pos[m]),
                    exit_avatar(curve.genus, e1, s1, pos[(m + 1) % n])))
    return out


def _self_embedded(curve, pos):
    ch = _chords(curve, pos)
    n = len(ch)
    for i in range(n):
        for j in range(i + 1, n):
            if interleave(ch[i][0], ch[i][1], ch[j][0], ch[j][1]):
                return False
    return True


class PairSystem:
    """Two diagrams in joint position, with crossing bookkeeping."""

    def __init__(self, c1, c2, mode="itinerary"):
        if c1.genus != c2.genus:
            raise DiagramError("genus mismatch")
        self.genus = c1.genus
        self.c1 = c1
        self.c2 = c2
        pos = place([c1, c2], mode=mode)
        if not (_self_embedded(c1, pos[0]) and _self_embedded(c2, pos[1])):
            pos = place([c1, c2], mode="stacked")
            if not (_self_embedded(c1, pos[0]) and _self_embedded(c2, pos[1])):
                raise ReductionError("cannot realize a joint embedding")
        self.pos = pos
        self._refresh()

    def _refresh(self):
        self.ch1 = _chords(self.c1, self.pos[0])
        self.ch2 = _chords(self.c2, self.pos[1])
        self.crossings = []
        for i, (a1, b1) in enumerate(self.ch1):
            for j, (a2, b2) in enumerate(self.ch2):
                if interleave(a1, b1, a2, b2):
                    self.crossings.append((i, j))

    def count(self):
        return len(self.crossings)

    def _order_along(self, which):
        """Crossings sorted along curve 1 or 2: list of crossing ids.

        Along a chord, crossings with the pairwise disjoint chords of the
        other curve are ordered by where those chords' endpoints sit on
        the boundary arc from the chord's start: nested chords cross
        closer to the start when their endpoint does.
        """
        chords = self.ch1 if which == 1 else self.ch2
        other = self.ch2 if which == 1 else self.ch1
        nsides = 4 * self.genus
        keyed = []
        for cid, (i, j) in enumerate(self.crossings):
            mine = i if which == 1 else j
            theirs = j if which == 1 else i
            start, end = chords[mine]
            span = (end - start) % nsides
            a, b = other[theirs]
            da = (a - start) % nsides
            db = (b - start) % nsides
            inside = da if 0 < da < span else db
            keyed.append(((mine, inside), cid))
        keyed.sort()
        return [cid for _k, cid in keyed]

    def crossing_orders(self):
        """Per-crossing placement data for the twist and census layers.

        Returns a list indexed by crossing id with fields
        (chord1, rank1, chord2, rank2, sign): ranks count crossings along
        the chord from its start, and sign is +1 when the frame (curve-1
        direction, curve-2 direction) is positively oriented, detected by
        the counterclockwise endpoint pattern (d0, c0, d1, c1)... here
        (start1, start2, end1, end2).
        """
        o1 = self._order_along(1)
        o2 = self._order_along(2)
        nsides = 4 * self.genus
        rank1 = {}
        seen = {}
        for cid in o1:
            i = self.crossings[cid][0]
            rank1[cid] = seen[i] = seen.get(i, -1) + 1
        rank2 = {}
        seen = {}
        for cid in o2:
            j = self.crossings[cid][1]
            rank2[cid] = seen[j] = seen.get(j, -1) + 1
        out = []
        for cid, (i, j) in enumerate(self.crossings):
            a0, a1 = self.ch1[i]
            b0, b1 = self.ch2[j]
            db0 = (b0 - a0) % nsides
            da1 = (a1 - a0) % nsides
            db1 = (b1 - a0) % nsides
            sign = 1 if db0 < da1 < db1 else -1
            out.append((i, rank1[cid], j, rank2[cid], sign))
        return out

    def find_bigons(self):
        """Crossing pairs adjacent along both curves with trivial loop word."""
        if len(self.crossings) < 2:
            return []
        o1 = self._order_along(1)
        o2 = self._order_along(2)
        n = len(self.crossings)
        succ2 = {}
        for k, cid in enumerate(o2):
            succ2[cid] = o2[(k + 1) % n]
        out = []
        for k, x in enumerate(o1):
            y = o1[(k + 1) % n]
            if x == y:
                continue
            for dw, ok in ((1, succ2.get(x) == y), (-1, succ2.get(y) == x)):
                if not ok:
                    continue
                if W.is_trivial(self._loop_word(x, y, dw), self.genus):
                    out.append((x, y, dw))
        return out

    def _arc_events(self, curve_id, i1, i2, direction):
        """Event indices passed travelling from chord i1 to chord i2.

        Forward travel from a point on chord i1 to a point on chord i2
        passes events i1+1 .. i2; backward travel passes i1 .. i2+1.
        Callers guard the empty case i1 == i2.
        """
        curve = self.c1 if curve_id == 1 else self.c2
        n = len(curve.events)
        out = []
        if direction > 0:
            m = (i1 + 1) % n
            out.append(m)
            while m != i2 % n:
                m = (m + 1) % n
                out.append(m)
        else:
            m = i1 % n
            out.append(m)
            while m != (i2 + 1) % n:
                m = (m - 1) % n
                out.append(m)
        return out

    def _bigon_arcs(self, x, y, dw):
        """(u event indices, w event indices, w travel letters) of a bigon."""
        i1, j1 = self.crossings[x]
        i2, j2 = self.crossings[y]
        u_idx = [] if i1 == i2 else self._arc_events(1, i1, i2, 1)
        if j1 == j2:
            w_idx = []
        else:
            w_idx = self._arc_events(2, j1, j2, dw)
        if dw > 0:
            w_letters = [self.c2.events[m] for m in w_idx]
        else:
            w_letters = [(self.c2.events[m][0], -self.c2.events[m][1]) for m in w_idx]
        return u_idx, w_idx, w_letters

    def _loop_word(self, x, y, dw):
        """Word of the loop: arc of c1 from x to y, then arc of c2 back."""
        u_idx, _w_idx, w_letters = self._bigon_arcs(x, y, dw)
        wu = tuple(self.c1.events[m] for m in u_idx)
        wv_back = tuple((e, -s) for e, s in reversed(w_letters))
        return W.free_reduce(wu + wv_back)

    def remove_bigon(self, x, y, dw):
        """Reroute the c1 arc of the bigon parallel to the c2 arc.

        The new arc copies the c2 events with positions immediately next
        to them on the side away from the bigon; the correct side is the
        one that drops the crossing count by two.
        """
        i1, _j1 = self.crossings[x]
        i2, _j2 = self.crossings[y]
        n1 = len(self.c1.events)
        u_idx, w_idx, w_letters = self._bigon_arcs(x, y, dw)
        before = self.count()
        kept = n1 - len(u_idx)
        start = ((i2 if u_idx else i1) + 1) % n1
        base_events = [self.c1.events[(start + k) % n1] for k in range(kept)]
        base_pos = [self.pos[0][(start + k) % n1] for k in range(kept)]
        for side in (1, -1):
            new_pos_vals = []
            for m, (e, s_travel) in zip(w_idx, w_letters):
                t = self.pos[1][m]
                new_pos_vals.append(self._adjacent_position(e, t, side * s_travel))
            cand_events = base_events + w_letters
            cand_pos = base_pos + new_pos_vals
            cand = CurveDiagram(self.genus, cand_events, cand_pos, check=False)
            if not _self_embedded(cand, cand_pos):
                continue
            old_c1, old_pos = self.c1, self.pos
            self.c1 = cand
            self.pos = [list(cand_pos), self.pos[1]]
            self._refresh()
            if self.count() <= before - 2:
                return True
            self.c1, self.pos = old_c1, old_pos
            self._refresh()
        raise ReductionError("bigon removal failed on both sides")

    def _adjacent_position(self, edge, t, shift):
        """A fresh position next to t on the given edge, in direction shift."""
        taken = sorted(set(self.pos[0][m] for m, (e, _s) in enumerate(self.c1.events) if e == edge)
                       | set(self.pos[1][m] for m, (e, _s) in enumerate(self.c2.events) if e == edge))
        if shift > 0:
            higher = [v for v in taken if v > t]
            nxt = higher[0] if higher else Fraction(1)
            return (t + nxt) / 2
        lower = [v for v in taken if v < t]
        prv = lower[-1] if lower else Fraction(0)
        return (t + prv) / 2

    def reduce(self, max_steps=100000):
        steps = 0
        while True:
            bigons = self.find_bigons()
            if not bigons:
                return self
            x, y, dw = bigons[0]
            self.remove_bigon(x, y, dw)
            steps += 1
            if steps > max_steps:
                raise ReductionError("bigon reduction did not terminate")


def intersection_number(c1, c2):
    """Exact geometric intersection number of two embedded closed curves."""
    sys = PairSystem(c1, c2)
    sys.reduce()
    return sys.count()


def minimal_pair(c1, c2):
    """The pair in joint minimal position (reduced PairSystem)."""
    sys = PairSystem(c1, c2)
    sys.reduce()
    return sys


def _clone(sys):
    new = object.__new__(PairSystem)
    new.genus = sys.genus
    new.c1, new.c2 = sys.c1, sys.c2
    new.pos = [list(sys.pos[0]), list(sys.pos[1])]
    new._refresh()
    return new


def _state_key(sys):
    """Canonical key of the joint configuration: words plus edge orders."""
    orders = []
    for e in sorted(set(x[0] for x in sys.c1.events + sys.c2.events)):
        items = [(sys.pos[0][m], 0, m) for m, (ee, _s) in enumerate(sys.c1.events) if ee == e]
        items += [(sys.pos[1][m], 1, m) for m, (ee, _s) in enumerate(sys.c2.events) if ee == e]
        items.sort()
        orders.append((e, tuple((which, m) for _t, which, m in items)))
    return (sys.c1.events, sys.c2.events, tuple(orders))


def intersection_number_bruteforce(c1, c2, max_crossings=14):
    """Oracle: minimum crossing count over every bigon-removal sequence.

    Exponential search with memoization on the joint state; intended for
    cross-checking the deterministic engine on small examples.
    """
    start = PairSystem(c1, c2, mode="stacked")
    if start.count() > max_crossings:
        raise ValueError("too many crossings for the brute-force oracle")
    seen = {}

    def explore(sys):
        key = _state_key(sys)
        if key in seen:
            return seen[key]
        best = sys.count()
        seen[key] = best
        for (x, y, dw) in sys.find_bigons():
            branch = _clone(sys)
            branch.remove_bigon(x, y, dw)
            best = min(best, explore(branch))
        seen[key] = best
        return best

    return explore(start)
