"""Word problem for the geometric presentations: pair classification,
shortening, semi-normal and normal forms.

Words are tuples of generators (positive letters only; an inverse is the
iota-partner).  A consecutive pair either cancels (the letters are iota
partners), turns (the pair occurs in a square relator) or is straight.
Semi-normal means a turn prefix followed by a straight suffix with no
shortening or cancellation anywhere; such words are geodesic, and the
normal form is the lexicographically least semi-normal representative.
"""

from dataclasses import dataclass, field

CANCEL, TURN, STRAIGHT = 0, 1, 2


class WordError(ValueError):
    pass


@dataclass
class PairTable:
    pres: object
    order: dict                       # generator -> lexicographic rank
    cls: dict                         # (g, h) -> CANCEL | TURN | STRAIGHT
    turn_alts: dict                   # (g, h) -> sorted alternative pairs
    shorten: dict = field(default_factory=dict)   # (g, h, k) -> generator

    def classify_pair(self, g, h):
        return self.cls[(g, h)]


def classify(p):
    """Build the full pair table of a geometric presentation."""
    order = {g: i for i, g in enumerate(p.gens)}
    iota = p.iota
    cls = {}
    for g in p.gens:
        for h in p.gens:
            cls[(g, h)] = CANCEL if h == iota[g] else STRAIGHT
    turn_alts = {}
    shorten = {}

    def words_of(quad):
        w = p.boundary_word(quad)
        rev = tuple(iota[x] for x in reversed(w))
        return (w, rev)

    for quad in p.relators:
        for w in words_of(quad):
            for r in range(4):
                cyc = w[r:] + w[:r]
                pair = (cyc[0], cyc[1])
                alt = (iota[cyc[3]], iota[cyc[2]])
                if cls[pair] == CANCEL:
                    raise WordError("relator %s contains a cancelling pair" % (w,))
                cls[pair] = TURN
                if alt != pair:
                    turn_alts.setdefault(pair, set()).add(alt)
                triple = (cyc[0], cyc[1], cyc[2])
                target = iota[cyc[3]]
                if shorten.get(triple, target) != target:
                    raise WordError("ambiguous shortening for %s" % (triple,))
                shorten[triple] = target
    turn_alts = {k: sorted(v, key=lambda pr: (order[pr[0]], order[pr[1]]))
                 for k, v in turn_alts.items()}
    return PairTable(p, order, cls, turn_alts, shorten)


def _scan_reduce(t, w, steps):
    """Apply cancellations and shortenings eagerly, leftmost first."""
    iota = t.pres.iota
    changed = True
    while changed:
        changed = False
        i = 0
        while i + 1 < len(w):
            if w[i + 1] == iota[w[i]]:
                del w[i:i + 2]
                steps[0] += 1
                changed = True
                i = max(i - 1, 0)
                continue
            if i + 2 < len(w):
                target = t.shorten.get((w[i], w[i + 1], w[i + 2]))
                if target is not None:
                    w[i:i + 3] = [target]
                    steps[0] += 1
                    changed = True
                    i = max(i - 1, 0)
                    continue
            i += 1
    return w


def _pattern(t, w):
    """Classes of consecutive pairs."""
    return [t.cls[(w[i], w[i + 1])] for i in range(len(w) - 1)]


def is_semi_normal(t, w):
    w = list(w)
    if any(w[i + 1] == t.pres.iota[w[i]] for i in range(len(w) - 1)):
        return False
    for i in range(len(w) - 2):
        if (w[i], w[i + 1], w[i + 2]) in t.shorten:
            return False
    pat = _pattern(t, w)
    seen_straight = False
    for c in pat:
        if c == STRAIGHT:
            seen_straight = True
        elif seen_straight:
            return False
    return True


def _measure(t, w):
    """(length, straight-suffix length, turn gap); semi-normal words get
    the minimal middle entries so any rewrite toward them improves."""
    pat = _pattern(t, w)
    i = next((j for j, c in enumerate(pat) if c == STRAIGHT), None)
    if i is None:
        return (len(w), 0, 0)
    k = next((j for j in range(i + 1, len(pat)) if pat[j] == TURN), None)
    if k is None:
        return (len(w), 0, 0)
    return (len(w), len(w) - i, k - i)


def semi_normal_form(t, word, count=None):
    """Turn-prefix-then-straight form by the quadratic rewriting schedule:
    cancel and shorten eagerly; otherwise rewrite the first turn pair that
    follows a straight pair, choosing an alternative that strictly
    decreases the (length, straight-suffix, turn-gap) measure.  At least
    one alternative always does on the presentations in scope; words from
    other presentations may raise."""
    steps = count if count is not None else [0]
    w = _scan_reduce(t, list(word), steps)
    while True:
        m = _measure(t, w)
        if m[1] == 0:
            return w
        pat = _pattern(t, w)
        first_straight = next(i for i, c in enumerate(pat) if c == STRAIGHT)
        k = next(i for i in range(first_straight + 1, len(pat))
                 if pat[i] == TURN)
        pair = (w[k], w[k + 1])
        alts = t.turn_alts.get(pair)
        if not alts:
            raise WordError("turn pair %s has no rewriting" % (pair,))
        chosen = None
        for alt in alts:
            cand = w[:k] + list(alt) + w[k + 2:]
            local = [0]
            cand = _scan_reduce(t, cand, local)
            if _measure(t, cand) < m:
                chosen = cand
                steps[0] += 1 + local[0]
                break
        if chosen is None:
            raise WordError("no measure-decreasing rewriting at %s" % (pair,))
        w = chosen


def normal_form(t, word, count=None):
    """The unique lexicographically least semi-normal representative."""
    steps = count if count is not None else [0]
    w = semi_normal_form(t, word, count=steps)
    i = 0
    while i + 1 < len(w):
        pair = (w[i], w[i + 1])
        best = pair
        for alt in t.turn_alts.get(pair, ()):
            cand = w[:i] + list(alt) + w[i + 2:]
            if not is_semi_normal(t, cand):
                continue
            if (t.order[alt[0]], t.order[alt[1]]) < (t.order[best[0]], t.order[best[1]]):
                best = alt
        if best != pair:
            w[i], w[i + 1] = best
            steps[0] += 1
        i += 2
    return tuple(w)


def equal(t, w1, w2):
    return normal_form(t, w1) == normal_form(t, w2)


def is_geodesic_length(t, word):
    return len(normal_form(t, word))
