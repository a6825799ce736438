"""
Word algebra for the fundamental group of the closed genus-g surface.

Elements of pi_1 are words in the 2g generators x_1..x_g, y_1..y_g with
the single relator

    R_g = [x_1,y_1][x_2,y_2]...[x_g,y_g].

A letter is encoded as a pair (gid, sign) where gid is an integer in
0..2g-1 (even gids are x-generators, odd gids are y-generators) and sign
is +1 or -1.  A word is a tuple of letters.  Free homotopy classes of
loops correspond to conjugacy classes of words, and unoriented curves to
conjugacy classes up to inversion.

The surface relator satisfies the C'(1/6) small cancellation condition
(pieces are single letters), so Dehn's algorithm decides the word
problem: a nontrivial geodesic word contains no subword longer than half
the relator.  The conjugacy problem is decided by cyclic Dehn reduction
followed by closure under rotations and half-relator swaps.
"""

from fractions import Fraction  # noqa: F401  (re-exported convenience for callers)


class WordError(ValueError):
    pass


def x_gen(i):
    """gid of x_i (1-based handle index)."""
    return 2 * (i - 1)


def y_gen(i):
    """gid of y_i (1-based handle index)."""
    return 2 * (i - 1) + 1


def gen_name(gid):
    i = gid // 2 + 1
    return ("x%d" if gid % 2 == 0 else "y%d") % i


def parse_word(text, genus):
    """Parse whitespace-separated tokens like ``x1 y2 x1^`` into a word.

    A trailing ``^`` marks the inverse letter.  Raises WordError on
    unknown tokens or handle indices above the genus.
    """
    word = []
    for tok in text.split():
        raw = tok
        sign = 1
        if tok.endswith("^") or tok.endswith("'"):
            sign = -1
            tok = tok[:-1]
        if tok.endswith("^-1"):
            sign = -1
            tok = tok[:-3]
        if len(tok) < 2 or tok[0] not in "xy":
            raise WordError("unknown token %r" % raw)
        try:
            idx = int(tok[1:])
        except ValueError:
            raise WordError("unknown token %r" % raw)
        if not 1 <= idx <= genus:
            raise WordError("handle index out of range in %r (genus %d)" % (raw, genus))
        gid = x_gen(idx) if tok[0] == "x" else y_gen(idx)
        word.append((gid, sign))
    return tuple(word)


def format_word(word):
    if not word:
        return ""
    return " ".join(gen_name(g) + ("" if s > 0 else "^") for g, s in word)


def inverse(word):
    return tuple((g, -s) for g, s in reversed(word))


def free_reduce(word):
    """Delete adjacent inverse pairs until none remain.  Idempotent."""
    out = []
    for let in word:
        if out and out[-1][0] == let[0] and out[-1][1] == -let[1]:
            out.pop()
        else:
            out.append(let)
    return tuple(out)


def cyclic_free_reduce(word):
    """Free reduction of the cyclic word: also cancel across the seam."""
    w = list(free_reduce(word))
    while len(w) >= 2 and w[0][0] == w[-1][0] and w[0][1] == -w[-1][1]:
        w = w[1:-1]
    return tuple(w)


def concat(*words):
    out = []
    for w in words:
        out.extend(w)
    return free_reduce(tuple(out))


def conjugate(word, by):
    return concat(by, word, inverse(by))


def relator(genus):
    """R_g = [x_1,y_1]...[x_g,y_g], length 4g."""
    out = []
    for i in range(1, genus + 1):
        x, y = x_gen(i), y_gen(i)
        out += [(x, 1), (y, 1), (x, -1), (y, -1)]
    return tuple(out)


def _relator_rotations(genus):
    """All cyclic rotations of R_g and of its inverse."""
    rots = []
    for base in (relator(genus), inverse(relator(genus))):
        n = len(base)
        for k in range(n):
            rots.append(base[k:] + base[:k])
    return rots


_ROT_CACHE = {}


def _rotations_by_first(genus):
    """Relator rotations bucketed by first letter, for fast matching."""
    if genus not in _ROT_CACHE:
        buckets = {}
        for rot in _relator_rotations(genus):
            buckets.setdefault(rot[0], []).append(rot)
        _ROT_CACHE[genus] = buckets
    return _ROT_CACHE[genus]


def _find_piece(word, genus, min_len, cyclic):
    """Locate a subword matching >= min_len letters of a relator rotation.

    Returns (start, match_length, rotation) for the first such subword,
    or None.  In cyclic mode subwords may wrap around the seam; the
    match length is capped at len(word).
    """
    n = len(word)
    if n == 0:
        return None
    buckets = _rotations_by_first(genus)
    doubled = word + word if cyclic else word
    for start in range(n):
        cap = min(4 * genus, n) if cyclic else min(4 * genus, n - start)
        for rot in buckets.get(doubled[start], ()):
            m = 1
            while m < cap and doubled[start + m] == rot[m]:
                m += 1
            if m >= min_len:
                return (start, m, rot)
    return None


def dehn_reduce(word, genus):
    """Shorten a freely reduced word by Dehn's algorithm (linear word).

    Replaces any subword matching more than half of a relator rotation
    r = u v (u the matched part) by the strictly shorter v^{-1}.
    """
    w = free_reduce(word)
    while True:
        hit = _find_piece(w, genus, 2 * genus + 1, cyclic=False)
        if hit is None:
            return w
        start, m, rot = hit
        w = free_reduce(w[:start] + inverse(rot[m:]) + w[start + m:])


def is_trivial(word, genus):
    """Word problem: does the word represent 1 in pi_1(Sigma_g)?"""
    return len(dehn_reduce(word, genus)) == 0


def cyclic_dehn_reduce(word, genus):
    """Shorten a cyclic word: free cyclic reduction plus cyclic Dehn moves."""
    w = cyclic_free_reduce(word)
    while w:
        hit = _find_piece(w, genus, 2 * genus + 1, cyclic=True)
        if hit is None:
            return w
        start, m, rot = hit
        n = len(w)
        lin = w[start:] + w[:start]  # same cyclic class, subword now a prefix
        w = cyclic_free_reduce(inverse(rot[m:]) + lin[m:])
    return w


def _half_swaps(w, genus):
    """Length-preserving rewritings replacing half a relator by the other half.

    The cyclic word w is scanned for subwords of length exactly 2g
    matching half of a relator rotation r = u v with |u| = |v| = 2g; the
    subword u is replaced by v^{-1}.  Together with rotation these are
    the elementary moves between geodesic cyclic words in a surface
    group.  Results are cyclically reduced and may come out shorter.
    """
    n = len(w)
    half = 2 * genus
    if n < half:
        return
    doubled = w + w
    buckets = _rotations_by_first(genus)
    for start in range(n):
        for rot in buckets.get(doubled[start], ()):
            m = 1
            while m < half and doubled[start + m] == rot[m]:
                m += 1
            if m == half:
                lin = w[start:] + w[:start]
                yield cyclic_free_reduce(inverse(rot[half:]) + lin[half:])


def canonical_cyclic(word, genus, unoriented=False):
    """Canonical form of the conjugacy class of ``word``.

    Reduces the cyclic word to minimal length (free + Dehn moves), then
    closes under rotation and half-relator swaps and returns the
    lexicographically smallest representative.  With ``unoriented`` the
    minimum is also taken over the inverse word, matching the convention
    that curves are unoriented.
    """
    if unoriented:
        a = canonical_cyclic(word, genus, unoriented=False)
        b = canonical_cyclic(inverse(word), genus, unoriented=False)
        return min(a, b)
    w = cyclic_dehn_reduce(word, genus)
    while True:
        seen = set()
        stack = [w]
        shorter = None
        while stack and shorter is None:
            cur = stack.pop()
            if cur in seen:
                continue
            seen.add(cur)
            for k in range(len(cur)):
                rot = cur[k:] + cur[:k]
                if rot not in seen:
                    stack.append(rot)
            for nxt in _half_swaps(cur, genus):
                if len(nxt) < len(w):
                    shorter = nxt
                    break
                if nxt not in seen:
                    stack.append(nxt)
        if shorter is None:
            return min(seen) if seen else w
        w = cyclic_dehn_reduce(shorter, genus)


def conjugacy_equal(w1, w2, genus, unoriented=False):
    """Are w1 and w2 conjugate in pi_1(Sigma_g)?

    With ``unoriented`` also accepts w1 conjugate to w2^{-1}.
    """
    if canonical_cyclic(w1, genus) == canonical_cyclic(w2, genus):
        return True
    if unoriented:
        return canonical_cyclic(w1, genus) == canonical_cyclic(inverse(w2), genus)
    return False


def conjugacy_equal_bruteforce(w1, w2, genus, max_conj_len=None):
    """Independent conjugacy oracle: exhaustive conjugator search.

    Checks triviality of u w1 u^{-1} w2^{-1} by Dehn's algorithm for
    every word u up to length 4g (default).  Exponential; test use only.
    """
    if max_conj_len is None:
        max_conj_len = 4 * genus
    letters = [(g, s) for g in range(2 * genus) for s in (1, -1)]
    from itertools import product

    target_inv = inverse(w2)
    for L in range(max_conj_len + 1):
        for combo in product(letters, repeat=L):
            u = free_reduce(combo)
            if len(u) != L:
                continue
            if is_trivial(concat(u, w1, inverse(u), target_inv), genus):
                return True
    return False


# -- handlebody quotients ---------------------------------------------------

H1 = "H1"
H2 = "H2"


def handlebody_image(word, side):
    """Image of a word in the free quotient pi_1(H_side).

    H1 is the handlebody in which the x-classes bound disks, so its
    quotient deletes every x-letter; H2 deletes every y-letter.  The
    result is freely reduced in the free group on the surviving letters.
    """
    if side == H1:
        kept = tuple(let for let in word if let[0] % 2 == 1)
    elif side == H2:
        kept = tuple(let for let in word if let[0] % 2 == 0)
    else:
        raise WordError("side must be H1 or H2, got %r" % (side,))
    return free_reduce(kept)


def handlebody_image_trace(word, side):
    """Like handlebody_image but also returns the cancellation trace.

    The trace lists the surviving letters after deletion followed by the
    successive adjacent cancellations, witnessing triviality when the
    image is empty.
    """
    if side == H1:
        kept = [let for let in word if let[0] % 2 == 1]
    elif side == H2:
        kept = [let for let in word if let[0] % 2 == 0]
    else:
        raise WordError("side must be H1 or H2, got %r" % (side,))
    trace = [tuple(kept)]
    out = []
    for let in kept:
        if out and out[-1][0] == let[0] and out[-1][1] == -let[1]:
            cancelled = out.pop()
            trace.append(("cancel", cancelled, let))
        else:
            out.append(let)
    return tuple(out), trace


def bounds_disk(word, side):
    """Does a simple closed curve with this word bound a disk in H_side?

    For a simple closed curve on the boundary of a handlebody,
    null-homotopy in the handlebody is equivalent to bounding an
    embedded compressing disk (loop theorem), and the handlebody
    quotient is free, so the test is word triviality of the image.
    """
    return len(handlebody_image(word, side)) == 0


class SurfaceSchema:
    """The fixed genus-g one-vertex 4g-gon model and its named classes.

    reference_table maps the standard curve names to their words:
    a_i -> x_i,  b_i -> y_i,  c_i -> [x_i,y_i],
    c_i* -> [x_1,y_1]...[x_i,y_i].
    """

    def __init__(self, genus):
        if genus < 2:
            raise WordError("schema requires genus >= 2, got %d" % genus)
        self.genus = genus
        self.relator = relator(genus)
        table = {}
        for i in range(1, genus + 1):
            x, y = x_gen(i), y_gen(i)
            table["a%d" % i] = ((x, 1),)
            table["b%d" % i] = ((y, 1),)
            table["c%d" % i] = ((x, 1), (y, 1), (x, -1), (y, -1))
        for i in range(1, genus):
            w = []
            for k in range(1, i + 1):
                x, y = x_gen(k), y_gen(k)
                w += [(x, 1), (y, 1), (x, -1), (y, -1)]
            table["c%d*" % i] = tuple(w)
        self.reference_table = table

    def parse(self, text):
        return parse_word(text, self.genus)

    def format(self, word):
        return format_word(word)

    def canonical(self, word, unoriented=True):
        return canonical_cyclic(word, self.genus, unoriented=unoriented)
