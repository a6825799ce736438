"""
Taut curve diagrams over the one-vertex polygon model of Sigma_g.

The surface is a 4g-gon with side pairs glued so that the quotient has a
single vertex and a single 2-cell.  The 2g glued edges are named by the
pi_1 letters their crossings record: a curve transverse to the edge
system, avoiding the vertex, is encoded by its cyclic sequence of
crossing events (edge, direction, position along the edge), and the
sequence of recorded letters is a word representing the free homotopy
class of the curve.  The side assignment below is arranged so that a
small loop around the vertex reads exactly the relator
[x_1,y_1]...[x_g,y_g]; ``_vertex_link_word`` checks this.

Between consecutive events a curve runs as a straight chord of the
polygon.  Two chords cross if and only if their boundary endpoints
interleave, so a diagram is embedded exactly when no two of its chords
interleave.  Tautness (no bigon against an edge) is equivalent to the
crossing word being cyclically reduced in the free group, and is reached
by removing innermost back-track chords.
"""

from fractions import Fraction

from . import words as W


class DiagramError(ValueError):
    pass


class NonEmbeddable(DiagramError):
    pass


class InessentialCurve(DiagramError):
    pass


# -- polygon schema ----------------------------------------------------------

def side_of(genus, gid, copy):
    """Polygon side hosting the given copy (+1/-1) of edge ``gid``."""
    k = gid // 2
    if gid % 2 == 0:  # records x_{k+1}
        base = 4 * k + 3 if copy > 0 else 4 * k + 5
    else:             # records y_{k+1}
        base = 4 * k + 6 if copy > 0 else 4 * k + 4
    return base % (4 * genus)


def side_table(genus):
    """side index -> (edge gid, copy sign)."""
    table = {}
    for gid in range(2 * genus):
        for copy in (1, -1):
            table[side_of(genus, gid, copy)] = (gid, copy)
    return table


def _vertex_link_word(genus):
    """Letters read by a small loop around the vertex.

    Travelling around the vertex, the loop hops wedges by the rule
    "cross side s near its starting corner, reappear near the end of the
    partner side, continue with the next side".  The recorded word must
    be a rotation of the relator; this pins the side assignment.
    """
    table = side_table(genus)
    out = []
    s = side_of(genus, 0, 1)
    for _ in range(4 * genus):
        gid, copy = table[s]
        out.append((gid, copy))
        partner = side_of(genus, gid, -copy)
        s = (partner + 1) % (4 * genus)
    return tuple(out)


def check_schema(genus):
    """Assert the polygon layout realizes the standard relator."""
    link = _vertex_link_word(genus)
    rel = W.relator(genus)
    rots = [rel[k:] + rel[:k] for k in range(len(rel))]
    if link not in rots:
        raise AssertionError("vertex link %s is not a rotation of the relator"
                             % (W.format_word(link),))
    # single vertex: the wedge trace visits every side exactly once
    if len(set(_trace_sides(genus))) != 4 * genus:
        raise AssertionError("side gluing does not produce a one-vertex complex")


def _trace_sides(genus):
    table = side_table(genus)
    sides = []
    s = side_of(genus, 0, 1)
    for _ in range(4 * genus):
        sides.append(s)
        gid, copy = table[s]
        s = (side_of(genus, gid, -copy) + 1) % (4 * genus)
    return sides


def vertex_rotation(genus):
    """Cyclic order of (edge, end) pairs around the vertex.

    Crossing side s near its start corner passes the edge end incident
    to that corner; the wedge trace therefore lists the edge ends in
    their cyclic order around the vertex.  An (edge, end) pair is
    (gid, copy, which) with which = 0 for the parameter-0 end of the
    edge on that copy... the census layer only needs the side sequence.
    """
    return _trace_sides(genus)


# -- events and avatars ------------------------------------------------------

def exit_avatar(genus, edge, sign, t):
    """Boundary angle where the curve leaves the polygon at this event."""
    side = side_of(genus, edge, sign)
    u = t if sign > 0 else 1 - t
    return side + u


def entry_avatar(genus, edge, sign, t):
    """Boundary angle where the curve re-enters the polygon."""
    side = side_of(genus, edge, -sign)
    u = t if sign < 0 else 1 - t
    return side + u


def interleave(a1, b1, a2, b2):
    """Do chords {a1,b1} and {a2,b2} cross (angles on the boundary circle)?"""
    lo, hi = (a1, b1) if a1 < b1 else (b1, a1)
    in1 = lo < a2 < hi
    in2 = lo < b2 < hi
    return in1 != in2


class CurveDiagram:
    """An embedded closed curve as a cyclic event sequence plus positions.

    events: tuple of (edge gid, sign); pos: tuple of Fractions in (0,1),
    the parameter of each crossing along its edge.  The diagram is taut
    when its crossing word is cyclically reduced (no back-track chords).
    """

    __slots__ = ("genus", "events", "pos", "_word", "_key")

    def __init__(self, genus, events, pos, check=True):
        self.genus = genus
        self.events = tuple((int(e), int(s)) for e, s in events)
        self.pos = tuple(Fraction(t) for t in pos)
        self._word = None
        self._key = None
        if len(self.events) != len(self.pos):
            raise DiagramError("event/position length mismatch")
        if check:
            self.check_embedded()

    def __len__(self):
        return len(self.events)

    def word(self):
        if self._word is None:
            self._word = tuple(self.events)
        return self._word

    def key(self):
        """Canonical label of the unoriented free homotopy class."""
        if self._key is None:
            self._key = W.canonical_cyclic(self.word(), self.genus, unoriented=True)
        return self._key

    def same_class(self, other):
        return self.key() == other.key()

    def chords(self, pos=None):
        """Chord endpoint angle pairs (entry of event m -> exit of m+1)."""
        pos = self.pos if pos is None else pos
        n = len(self.events)
        out = []
        for m in range(n):
            e0, s0 = self.events[m]
            e1, s1 = self.events[(m + 1) % n]
            out.append((entry_avatar(self.genus, e0, s0, pos[m]),
                        exit_avatar(self.genus, e1, s1, pos[(m + 1) % n])))
        return out

    def check_embedded(self):
        n = len(self.events)
        for m, t in enumerate(self.pos):
            if not 0 < t < 1:
                raise DiagramError("event %d position %s outside (0,1)" % (m, t))
        per_edge = {}
        for m, (e, s) in enumerate(self.events):
            per_edge.setdefault(e, []).append(self.pos[m])
        for e, ts in per_edge.items():
            if len(set(ts)) != len(ts):
                raise NonEmbeddable("coincident crossings on edge %d" % e)
        ch = self.chords()
        for i in range(n):
            for j in range(i + 1, n):
                if interleave(ch[i][0], ch[i][1], ch[j][0], ch[j][1]):
                    raise NonEmbeddable("chords %d and %d cross" % (i, j))

    def normalized(self):
        """Evenly respace crossings along each edge (slots), same isotopy class."""
        order = {}
        for e in set(ev[0] for ev in self.events):
            idxs = [m for m, ev in enumerate(self.events) if ev[0] == e]
            idxs.sort(key=lambda m: self.pos[m])
            order[e] = idxs
        newpos = list(self.pos)
        for e, idxs in order.items():
            den = len(idxs) + 1
            for rank, m in enumerate(idxs):
                newpos[m] = Fraction(rank + 1, den)
        return CurveDiagram(self.genus, self.events, newpos, check=False)

    def rotated(self, k):
        n = len(self.events)
        k %= n
        return CurveDiagram(self.genus, self.events[k:] + self.events[:k],
                            self.pos[k:] + self.pos[:k], check=False)

    def reversed_(self):
        """The same unoriented curve traversed backwards."""
        ev = tuple((e, -s) for e, s in reversed(self.events))
        ps = tuple(reversed(self.pos))
        return CurveDiagram(self.genus, ev, ps, check=False)

    def slots(self):
        """Events with integer slot indices, for serialization."""
        ranks = {}
        for e in set(ev[0] for ev in self.events):
            idxs = sorted((m for m, ev in enumerate(self.events) if ev[0] == e),
                          key=lambda m: self.pos[m])
            for rank, m in enumerate(idxs):
                ranks[m] = rank
        return [(self.events[m][0], self.events[m][1], ranks[m])
                for m in range(len(self.events))]

    def to_record(self, name=None):
        rec = {"events": [[W.gen_name(e), s, slot] for e, s, slot in self.slots()],
               "word": W.format_word(self.word())}
        if name is not None:
            rec["name"] = name
        return rec

    @staticmethod
    def from_record(rec, genus):
        events = []
        slots = []
        for item in rec["events"]:
            name, sign, slot = item
            gid = W.parse_word(name, genus)[0][0]
            events.append((gid, int(sign)))
            slots.append(int(slot))
        counts = {}
        for (e, _s) in events:
            counts[e] = counts.get(e, 0) + 1
        pos = []
        for (e, _s), slot in zip(events, slots):
            if not 0 <= slot < counts[e]:
                raise DiagramError("slot %d out of range on edge %d" % (slot, e))
            pos.append(Fraction(slot + 1, counts[e] + 1))
        return CurveDiagram(genus, events, pos)

    def __repr__(self):
        return "CurveDiagram(g=%d, %s)" % (self.genus, W.format_word(self.word()) or "-")


def tauten(curve):
    """Remove back-track chords until the crossing word is cyclically reduced.

    A chord with both endpoints on the same side copy bounds a disk with
    a sub-arc of that edge; removing the innermost such chord (smallest
    gap, necessarily free of other crossings for an embedded curve) is
    an isotopy deleting two events.  Raises InessentialCurve if the
    diagram empties out.
    """
    events = list(curve.events)
    pos = list(curve.pos)
    genus = curve.genus
    while True:
        n = len(events)
        if n == 0:
            raise InessentialCurve("curve is null-homotopic")
        best = None
        for m in range(n):
            e0, s0 = events[m]
            e1, s1 = events[(m + 1) % n]
            if e0 != e1 or s0 != -s1:
                continue
            # chord from entry avatar of m to exit avatar of m+1 lies on
            # one side copy exactly when the signs are opposite
            gap = abs(pos[m] - pos[(m + 1) % n])
            if best is None or gap < best[0]:
                best = (gap, m)
        if best is None:
            result = CurveDiagram(genus, events, pos, check=False)
            return result.normalized()
        _, m = best
        n1 = (m + 1) % n
        for idx in sorted((m, n1), reverse=True):
            del events[idx]
            del pos[idx]


def is_taut(curve):
    n = len(curve.events)
    for m in range(n):
        e0, s0 = curve.events[m]
        e1, s1 = curve.events[(m + 1) % n]
        if e0 == e1 and s0 == -s1:
            return False
    return n > 0


def reference_curve(genus, name):
    """Hand-built diagrams for a_i and b_i (single crossing each)."""
    if name.startswith("a"):
        i = int(name[1:])
        return CurveDiagram(genus, [(W.x_gen(i), 1)], [Fraction(1, 2)])
    if name.startswith("b"):
        i = int(name[1:])
        return CurveDiagram(genus, [(W.y_gen(i), 1)], [Fraction(1, 2)])
    raise DiagramError("only a_i and b_i are hand-built; got %r" % name)
