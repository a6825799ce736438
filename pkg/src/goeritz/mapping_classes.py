"""
Dehn twists, handle relabelings, eyeglass twists and the standard
generator set, acting exactly on curve diagrams.

A twist along c applied to d is computed in joint minimal position: each
crossing grafts one full parallel copy of c into d.  The graft inserted
at a crossing sitting at parameter q_X along c is placed at annulus
level 2((q_m - q_X) mod 1) - 1 when passing the crossing of c at
parameter q_m, which is exactly the height of the image spiral in the
twisting annulus; all grafts therefore nest without crossing each other
and the output stays embedded.  Left-handed means the image of an arc
crossing the annulus drifts in the direction of the orientation of c as
it climbs from the entry side to the exit side; the opposite exponent
gives the mirror spiral.
"""

from fractions import Fraction

from . import words as W
from .diagrams import CurveDiagram, DiagramError, tauten
from .pairing import PairSystem, minimal_pair


class MappingClassError(ValueError):
    pass


def dehn_twist_apply(c, d, exponent):
    """Image of the curve d under the twist along c to the given power.

    exponent +1 is the left-handed twist; powers are applied by
    iteration.  Exact: the result is tautened and renormalized.
    """
    if exponent == 0:
        return tauten(d)
    step = 1 if exponent > 0 else -1
    out = d
    for _ in range(abs(exponent)):
        out = _twist_once(c, out, step)
    return out


def _twist_once(c, d, sign):
    sys = minimal_pair(c, d)
    if sys.count() == 0:
        return tauten(d)
    cc, dd = sys.c1, sys.c2
    pos_c, pos_d = sys.pos
    n_c = len(cc.events)
    orders = sys.crossing_orders()

    # parameter of each crossing along c: chord i runs between events i
    # and i+1, so a crossing at rank r of k on chord i sits at
    # (i + (r+1)/(k+1)) / n_c; events themselves sit at m / n_c.
    per_chord_c = {}
    for (i, r, _j, _r2, _e) in orders:
        per_chord_c[i] = per_chord_c.get(i, 0) + 1
    q_cross = []
    for (i, r, _j, _r2, _e) in orders:
        q_cross.append((Fraction(i) + Fraction(r + 1, per_chord_c[i] + 1)) / n_c)

    # grafts in splice order along d: per d-chord, by rank along it
    by_d_chord = {}
    for cid, (_i, _r, j, r2, _e) in enumerate(orders):
        by_d_chord.setdefault(j, []).append((r2, cid))
    for j in by_d_chord:
        by_d_chord[j].sort()

    # inserted positions: per c-event, all graft levels, placed into the
    # free gaps next to the event's joint position
    levels = {m: [] for m in range(n_c)}
    for cid, (_i, _r, _j, _r2, eps) in enumerate(orders):
        for m in range(n_c):
            q_m = Fraction(m, n_c)
            if sign > 0:
                ell = 2 * ((q_m - q_cross[cid]) % 1) - 1
            else:
                ell = 2 * ((q_cross[cid] - q_m) % 1) - 1
            levels[m].append((cid, ell))

    occupied = {}
    for mm, (e, _s) in enumerate(cc.events):
        occupied.setdefault(e, []).append(pos_c[mm])
    for mm, (e, _s) in enumerate(dd.events):
        occupied.setdefault(e, []).append(pos_d[mm])
    for e in occupied:
        occupied[e].sort()

    # Each insertion is anchored at a c-event position t_m with a signed
    # level offset; insertions land in the free gap on the level's side
    # of t_m.  A gap between two adjacent anchors receives insertions
    # from both ends, ordered: positives of the lower anchor (ascending
    # level, closest to the anchor first), then negatives of the upper
    # anchor (also ascending level, since these approach the upper
    # anchor).  Level 0 means the graft's core crossing lands exactly on
    # the event; sliding just past it is an isotopy, so it counts as
    # positive.
    by_edge = {}
    for m in range(n_c):
        e, s_m = cc.events[m]
        t = pos_c[m]
        for cid, ell in levels[m]:
            v = ell * s_m
            by_edge.setdefault(e, []).append((t, v, cid, m))
    insert_pos = {}  # (cid, m) -> Fraction
    for e, items in by_edge.items():
        anchors = occupied[e]
        bounds = [Fraction(0)] + anchors + [Fraction(1)]
        gaps = {}
        for (t, v, cid, m) in items:
            k = anchors.index(t)
            if v >= 0:
                glo, ghi = bounds[k + 1], bounds[k + 2]
                order_key = (0, v)
            else:
                glo, ghi = bounds[k], bounds[k + 1]
                order_key = (1, v)
            gaps.setdefault((glo, ghi), []).append((order_key, cid, m))
        for (glo, ghi), lst in gaps.items():
            lst.sort()
            den = len(lst) + 1
            for k, (_key, cid, m) in enumerate(lst):
                insert_pos[(cid, m)] = glo + (ghi - glo) * Fraction(k + 1, den)

    def graft(cid):
        i, _r, _j, _r2, eps = orders[cid]
        # eps orients the (c, d) frame; the side of c that d approaches
        # from is read off the (d, c) frame, which is its negation
        rho = -eps
        direction = -rho * sign
        events, pos = [], []
        for step in range(1, n_c + 1):
            m = (i + step) % n_c if direction > 0 else (i + 1 - step) % n_c
            e, s = cc.events[m]
            events.append((e, s * direction))
            pos.append(insert_pos[(cid, m)])
        return events, pos

    new_events, new_pos = [], []
    n_d = len(dd.events)
    for m in range(n_d):
        new_events.append(dd.events[m])
        new_pos.append(pos_d[m])
        for _r2, cid in by_d_chord.get(m, ()):
            ge, gp = graft(cid)
            new_events.extend(ge)
            new_pos.extend(gp)
    result = CurveDiagram(dd.genus, new_events, new_pos, check=True)
    return tauten(result)


class MappingClass:
    """A finite composition of signed twists and handle relabelings.

    factors are applied right to left, matching function composition.
    Each factor is ("twist", CurveDiagram, exponent) or
    ("relabel", permutation tuple of handle indices 0..g-1).
    """

    def __init__(self, genus, factors=(), name=None):
        self.genus = genus
        self.factors = tuple(factors)
        self.name = name

    def __mul__(self, other):
        if self.genus != other.genus:
            raise MappingClassError("genus mismatch")
        return MappingClass(self.genus, self.factors + other.factors)

    def inverse(self):
        inv = []
        for kind, *rest in reversed(self.factors):
            if kind == "twist":
                curve, exp = rest
                inv.append(("twist", curve, -exp))
            else:
                perm = rest[0]
                unperm = [0] * len(perm)
                for i, p in enumerate(perm):
                    unperm[p] = i
                inv.append(("relabel", tuple(unperm)))
        return MappingClass(self.genus, inv)

    def apply(self, curve):
        out = curve
        for kind, *rest in reversed(self.factors):
            if kind == "twist":
                tcurve, exp = rest
                out = dehn_twist_apply(tcurve, out, exp)
            else:
                out = relabel_curve(out, rest[0])
        return out

    def __repr__(self):
        if self.name:
            return "MappingClass(%s)" % self.name
        parts = []
        for kind, *rest in self.factors:
            if kind == "twist":
                parts.append("twist(%s,%+d)" % (W.format_word(rest[0].word()), rest[1]))
            else:
                parts.append("relabel%s" % (rest[0],))
        return "MappingClass[%s]" % ", ".join(parts)


def identity(genus):
    return MappingClass(genus, ())


def dehn_twist(c, exponent=1):
    """The twist along c as a one-factor mapping class."""
    if exponent not in (1, -1):
        raise MappingClassError("exponent must be +1 or -1")
    return MappingClass(c.genus, [("twist", tauten(c), exponent)])


def relabel_curve(curve, perm):
    """Push a curve through the handle permutation i -> perm[i].

    The polygon blocks are interchanged wholesale, so events map edge
    2k -> 2 perm[k] (and odd likewise) with positions kept; this is the
    diagram action of the relabeling homeomorphism, which extends over
    both handlebodies.
    """
    g = curve.genus
    if sorted(perm) != list(range(g)):
        raise MappingClassError("not a permutation of 0..g-1: %r" % (perm,))
    events = [(2 * perm[e // 2] + (e % 2), s) for e, s in curve.events]
    return CurveDiagram(g, events, curve.pos, check=False)


def relabeling(genus, perm, name=None):
    return MappingClass(genus, [("relabel", tuple(perm))], name=name)


def eyeglass_twist(a, b, e_arc):
    """The eyeglass twist with lenses a, b and bridge e_arc.

    Requires disjoint lenses with a bounding a disk in H1 and b in H2;
    the class factors as twist(a) twist(b) twist(boundary)^{-1} where the
    boundary is the banding of a and b along the bridge.
    """
    from . import words as WW
    from .ribbon import band
    from .pairing import intersection_number

    if intersection_number(a, b) != 0:
        raise MappingClassError("lenses must be disjoint")
    if not WW.bounds_disk(a.word(), WW.H1):
        raise MappingClassError("first lens must bound a disk in H1")
    if not WW.bounds_disk(b.word(), WW.H2):
        raise MappingClassError("second lens must bound a disk in H2")
    c = band(a, b, e_arc)
    cls = MappingClass(a.genus,
                       [("twist", tauten(a), 1),
                        ("twist", tauten(b), 1),
                        ("twist", c, -1)],
                       name="eyeglass")
    cls.boundary = c
    return cls


def conjugate_twist_check(phi, c, d):
    """Does phi twist(c) and twist(phi(c)) phi agree on d, as classes?"""
    lhs = (phi * dehn_twist(c)).apply(d)
    rhs = (dehn_twist(phi.apply(c)) * phi).apply(d)
    return lhs.same_class(rhs)
