"""BMW groups: presentations acting on products of two trees, the two-sided
normal form w_A * w_X, the associated square complexes with their
vertex-regular four-group action, and the catalog of known finite-residual
elements.

Letters are strings; a directed letter is (letter, +1|-1); words are tuples
of directed letters.  A letter is either involutive (declared `l l` in the
pairing section, so l^2 = 1) or free (its inverse is the formal (l, -1)).
The four-letter square relators induce exactly one rewrite rule per
(X-directed-letter, A-directed-letter) pair pushing A letters left;
completeness and bijectivity of that table is the product-of-trees
condition and is checked at construction.
"""


class BMWError(ValueError):
    pass


def parse_word(text, letters):
    """`a x' b` style: a trailing apostrophe inverts the letter."""
    out = []
    for tok in text.split():
        inv = tok.endswith("'")
        l = tok[:-1] if inv else tok
        if l not in letters:
            raise BMWError("unknown letter %r" % l)
        out.append((l, -1 if inv else 1))
    return tuple(out)


def word_str(word):
    return " ".join(l + ("'" if s < 0 else "") for l, s in word)


class BMWPresentation:
    def __init__(self, agens, xgens, involutive, squares, name=""):
        self.agens = list(agens)
        self.xgens = list(xgens)
        self.involutive = set(involutive)
        self.name = name
        self.letters = set(self.agens) | set(self.xgens)
        self._family = {}
        for l in self.agens:
            self._family[l] = 'A'
        for l in self.xgens:
            self._family[l] = 'X'
        self.squares = [self.parse(s) if isinstance(s, str) else tuple(s)
                        for s in squares]
        self.rules = self._derive_rules()

    def parse(self, text):
        return parse_word(text, self.letters)

    def family(self, letter):
        return self._family[letter]

    def canon(self, dl):
        l, s = dl
        if s < 0 and l in self.involutive:
            return (l, 1)
        return dl

    def inv(self, dl):
        l, s = dl
        return self.canon((l, -s))

    def dirletters(self, fam):
        out = []
        for l in (self.agens if fam == 'A' else self.xgens):
            out.append((l, 1))
            if l not in self.involutive:
                out.append((l, -1))
        return out

    def _derive_rules(self):
        rules = {}

        def add(xi, al, al2, xi2):
            key = (self.canon(xi), self.canon(al))
            val = (self.canon(al2), self.canon(xi2))
            if rules.get(key, val) != val:
                raise BMWError("conflicting rules for %s %s" % key)
            rules[key] = val

        for rel in self.squares:
            w = [self.canon(dl) for dl in rel]
            if len(w) != 4:
                raise BMWError("square relator %s has length != 4" % (rel,))
            fams = [self.family(l) for l, _ in w]
            if fams == ['X', 'A', 'X', 'A']:
                w = w[1:] + w[:1]
                fams = fams[1:] + fams[:1]
            if fams != ['A', 'X', 'A', 'X']:
                raise BMWError("square relator %s does not alternate" % (rel,))
            a1, x1, a2, x2 = w
            # a1 x1 a2 x2 = 1, read at its four corners
            add(x1, a2, self.inv(a1), self.inv(x2))
            add(x2, a1, self.inv(a2), self.inv(x1))
            add(self.inv(x1), self.inv(a1), a2, x2)
            add(self.inv(x2), self.inv(a2), a1, x1)

        xs = self.dirletters('X')
        As = self.dirletters('A')
        missing = [(x, a) for x in xs for a in As if (x, a) not in rules]
        if missing:
            raise BMWError("rule table incomplete: %d missing pairs, e.g. %s"
                           % (len(missing), missing[0]))
        if len(set(rules.values())) != len(rules):
            raise BMWError("rule table is not a bijection")
        return rules

    # -- normal forms -------------------------------------------------------
    def normal_form(self, word):
        """Unique (w_A, w_X) with A letters first, both sides freely reduced.
        Terminates: rewrites remove X-before-A inversions, cancellations
        shorten the word."""
        if isinstance(word, str):
            word = self.parse(word)
        w = [self.canon(dl) for dl in word]
        changed = True
        while changed:
            changed = False
            i = 0
            while i + 1 < len(w):
                u, v = w[i], w[i + 1]
                fu, fv = self.family(u[0]), self.family(v[0])
                if fu == fv and v == self.inv(u):
                    del w[i:i + 2]
                    changed = True
                    i = max(i - 1, 0)
                    continue
                if fu == 'X' and fv == 'A':
                    w[i], w[i + 1] = self.rules[(u, v)]
                    changed = True
                    i = max(i - 1, 0)
                    continue
                i += 1
        wa = tuple(dl for dl in w if self.family(dl[0]) == 'A')
        wx = tuple(dl for dl in w if self.family(dl[0]) == 'X')
        return wa, wx

    def normal_form_word(self, word):
        wa, wx = self.normal_form(word)
        return wa + wx

    def equal(self, w1, w2):
        return self.normal_form(w1) == self.normal_form(w2)

    def is_trivial(self, word):
        return self.normal_form(word) == ((), ())

    def inverse_word(self, word):
        if isinstance(word, str):
            word = self.parse(word)
        return tuple(self.inv(dl) for dl in reversed(word))

    def commutator(self, u, v):
        if isinstance(u, str):
            u = self.parse(u)
        if isinstance(v, str):
            v = self.parse(v)
        return tuple(u) + tuple(v) + self.inverse_word(u) + self.inverse_word(v)


# ---------------------------------------------------------------------------
# presentation file format

def loads(text, name=""):
    """Sections `agens:`, `xgens:`, `pairs:` (a line `l l` declares an
    involution; letters not mentioned are free), `squares:` (one relator
    word per line)."""
    agens, xgens, square_texts = [], [], []
    involutive = set()
    section = None
    for ln, raw in enumerate(text.splitlines(), 1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        if line.endswith(':') and line[:-1] in ('agens', 'xgens', 'pairs', 'squares'):
            section = line[:-1]
            continue
        if section == 'agens':
            agens.extend(line.split())
        elif section == 'xgens':
            xgens.extend(line.split())
        elif section == 'pairs':
            a, b = line.split()
            if a != b:
                raise BMWError("line %d: only involutive self-pairs are "
                               "supported (got %s %s)" % (ln, a, b))
            involutive.add(a)
        elif section == 'squares':
            square_texts.append(line)
        else:
            raise BMWError("line %d: content outside any section" % ln)
    return BMWPresentation(agens, xgens, involutive, square_texts, name=name)


def dumps(p):
    lines = ["agens:", "  " + " ".join(p.agens), "xgens:", "  " + " ".join(p.xgens),
             "pairs:"]
    for l in sorted(p.involutive):
        lines.append("  %s %s" % (l, l))
    lines.append("squares:")
    for rel in p.squares:
        lines.append("  " + word_str(rel))
    return "\n".join(lines) + "\n"


GAMMA_R_TEXT = """\
# Radu's degree (6,6) BMW presentation; every generator is an involution
agens:
  a b c
xgens:
  x y z
pairs:
  a a
  b b
  c c
  x x
  y y
  z z
squares:
  a x a x
  a y a y
  a z b z
  b x b x
  b y c y
  c x c z
"""

GAMMA_JW_TEXT = """\
# Janzen-Wise degree (8,8) BMW presentation; free generators
agens:
  a b
xgens:
  x y
pairs:
squares:
  a x a y
  a x' b y'
  a y' b' x'
  b x b' y'
"""


def gamma_r():
    return loads(GAMMA_R_TEXT, name="gamma_R")


def gamma_jw():
    return loads(GAMMA_JW_TEXT, name="gamma_JW")


# ---------------------------------------------------------------------------
# square complexes

class SquareComplex:
    """Four-vertex square complex of a BMW presentation.

    Vertex types: v00 -> 1 and v11 -> 2 (the distinguished opposite
    corners), v10 and v01 -> 0.  Squares are (bottom, right, top, left)
    edge names with bottom: v10-v00, right: v11-v10, top: v11-v01,
    left: v01-v00.  sigma_a/sigma_x give the vertex-regular four-group as
    edge maps name -> (name, orientation sign).
    """

    def __init__(self, vertex_types, edges, squares, sigma_a, sigma_x, name=""):
        self.vertex_types = vertex_types
        self.edges = edges
        self.squares = squares
        self.sigma_a = sigma_a
        self.sigma_x = sigma_x
        self.name = name

    def degree(self):
        d1 = sum(1 for t, h in self.edges.values() if {t, h} == {'v00', 'v10'})
        d2 = sum(1 for t, h in self.edges.values() if {t, h} == {'v00', 'v01'})
        return d1, d2


def edge_name(p, dl, primed=False):
    l, s = p.canon(dl)
    return l + ("~" if s < 0 else "") + ("'" if primed else "")


def square_complex_of(p, warn=None):
    """Quotient square complex of the product of trees.

    One square per rewrite rule (xi, al) -> (al', xi'): sides are
    bottom = (al')^-1 unprimed, left = xi unprimed, right = (xi')^-1
    primed, top = al primed; the `~` suffix marks the reversed free letter
    and `'` the primed copy.  Squares are ordered A-major/X-minor by
    (bottom, left), matching the triangle tables of the shipped complexes.
    """
    vtypes = {'v00': 1, 'v10': 0, 'v01': 0, 'v11': 2}
    edges = {}
    for dl in p.dirletters('A'):
        edges[edge_name(p, dl)] = ('v10', 'v00')
        edges[edge_name(p, dl, True)] = ('v11', 'v01')
    for dl in p.dirletters('X'):
        edges[edge_name(p, dl)] = ('v01', 'v00')
        edges[edge_name(p, dl, True)] = ('v11', 'v10')

    a_order = {edge_name(p, dl): i for i, dl in enumerate(p.dirletters('A'))}
    x_order = {edge_name(p, dl): i for i, dl in enumerate(p.dirletters('X'))}

    squares = []
    for (xi, al), (al2, xi2) in p.rules.items():
        squares.append((edge_name(p, p.inv(al2)),          # bottom
                        edge_name(p, p.inv(xi2), True),    # right
                        edge_name(p, al, True),            # top
                        edge_name(p, xi)))                 # left
    squares.sort(key=lambda s: (a_order[s[0]], x_order[s[3]]))

    # the deck maps covering the two vertex swaps, written in the same edge
    # naming as the squares (so the bar appears on the prime-switching legs)
    sigma_a, sigma_x = {}, {}
    for dl in p.dirletters('A'):
        n, npr = edge_name(p, dl), edge_name(p, dl, True)
        bar, barp = edge_name(p, p.inv(dl)), edge_name(p, p.inv(dl), True)
        sigma_a[n] = (bar, -1)
        sigma_a[npr] = (barp, -1)
        sigma_x[n] = (barp, 1)
        sigma_x[npr] = (bar, 1)
    for dl in p.dirletters('X'):
        n, npr = edge_name(p, dl), edge_name(p, dl, True)
        bar, barp = edge_name(p, p.inv(dl)), edge_name(p, p.inv(dl), True)
        sigma_x[n] = (bar, -1)
        sigma_x[npr] = (barp, -1)
        sigma_a[n] = (barp, 1)
        sigma_a[npr] = (bar, 1)

    sq = SquareComplex(vtypes, edges, squares, sigma_a, sigma_x, name=p.name)
    d1, d2 = sq.degree()
    if min(d1, d2) < 2 and warn is not None:
        warn("square complex of degree (%d,%d) is not firm" % (d1, d2))
    check_square_complex(sq)
    return sq


def check_square_complex(sq):
    """Vertex links complete bipartite and the sigma maps an involutive,
    square-preserving, vertex-regular four-group."""
    for v in sq.vertex_types:
        a_side = sorted(e for e, ends in sq.edges.items()
                        if v in ends and _is_a_side(sq, e))
        x_side = sorted(e for e, ends in sq.edges.items()
                        if v in ends and not _is_a_side(sq, e))
        count = {}
        for (b, r, t, l) in sq.squares:
            for ea, ex in ((b, l), (b, r), (t, l), (t, r)):
                shared = set(sq.edges[ea]) & set(sq.edges[ex])
                if len(shared) == 1 and v in shared:
                    count[(ea, ex)] = count.get((ea, ex), 0) + 1
        for ea in a_side:
            for ex in x_side:
                if count.get((ea, ex), 0) != 1:
                    raise BMWError("link at %s is not complete bipartite: pair"
                                   " (%s,%s) bounds %d squares"
                                   % (v, ea, ex, count.get((ea, ex), 0)))
    _check_sigma(sq, sq.sigma_a,
                 {'v00': 'v10', 'v10': 'v00', 'v01': 'v11', 'v11': 'v01'})
    _check_sigma(sq, sq.sigma_x,
                 {'v00': 'v01', 'v01': 'v00', 'v10': 'v11', 'v11': 'v10'})


def _is_a_side(sq, e):
    t, h = sq.edges[e]
    return {t, h} in ({'v00', 'v10'}, {'v01', 'v11'})


def _check_sigma(sq, sigma, vmap):
    for e, (img, sign) in sigma.items():
        t, h = sq.edges[e]
        it, ih = sq.edges[img]
        if sign < 0:
            it, ih = ih, it
        if (vmap[t], vmap[h]) != (it, ih):
            raise BMWError("sigma does not respect incidence at %s" % e)
        if sigma[img][0] != e:
            raise BMWError("sigma is not an involution at %s" % e)
    square_keys = {frozenset(s) for s in sq.squares}
    for s in sq.squares:
        if frozenset(sigma[e][0] for e in s) not in square_keys:
            raise BMWError("sigma does not permute the squares")


def dumps_square(sq):
    lines = ["vertices:"]
    for v in ('v00', 'v10', 'v01', 'v11'):
        lines.append("  %s %d" % (v, sq.vertex_types[v]))
    lines.append("edges:")
    for e, (t, h) in sorted(sq.edges.items()):
        lines.append("  %s %s %s" % (e, t, h))
    lines.append("squares:")
    for s in sq.squares:
        lines.append("  (%s,%s,%s,%s)" % s)
    for label, sigma in (("sigma_a", sq.sigma_a), ("sigma_x", sq.sigma_x)):
        lines.append("%s:" % label)
        for e in sorted(sigma):
            img, sign = sigma[e]
            lines.append("  %s %s %s" % (e, img, '+' if sign > 0 else '-'))
    return "\n".join(lines) + "\n"


def loads_square(text, name=""):
    vertex_types = {}
    edges = {}
    squares = []
    sigma_a = {}
    sigma_x = {}
    section = None
    for ln, raw in enumerate(text.splitlines(), 1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        if line.endswith(':') and line[:-1] in ('vertices', 'edges', 'squares',
                                                'sigma_a', 'sigma_x'):
            section = line[:-1]
            continue
        if section == 'vertices':
            v, t = line.split()
            vertex_types[v] = int(t)
        elif section == 'edges':
            e, t, h = line.split()
            edges[e] = (t, h)
        elif section == 'squares':
            squares.append(tuple(x.strip() for x in line.strip('()').split(',')))
        elif section in ('sigma_a', 'sigma_x'):
            e, img, sign = line.split()
            (sigma_a if section == 'sigma_a' else sigma_x)[e] = \
                (img, 1 if sign == '+' else -1)
        else:
            raise BMWError("line %d: content outside any section" % ln)
    sq = SquareComplex(vertex_types, edges, squares, sigma_a, sigma_x, name=name)
    check_square_complex(sq)
    return sq


# ---------------------------------------------------------------------------
# shipped facts: residual elements

JW_LOOP_LETTERS = {'x', 'x~', 'y', 'y~'}

JW_RESIDUAL_LOOPS = (
    "x' x~ x' y~ y' y~ y' x x~' x y~' y y~' y",
    "y' y~ y' x~ x' x~ x' y y~' y x~' x x~' x",
)


def residual_elements(group):
    """Known finite-residual elements.

    'R': (xz)^4 and (zx)^4 are proved members; the two commutators are the
    disjunctive pair of which at least one lies in the residual.
    'JW': [x^3, y^4] and [y^3, x^4], plus the corresponding edge loops on
    the square complex (words over x, x~, y, y~).
    """
    if group == 'R':
        p = gamma_r()
        delta2 = "x z x z"
        return {
            'presentation': p,
            'proved': [p.parse("x z x z x z x z"), p.parse("z x z x z x z x")],
            'disjunctive': [p.commutator("y " + delta2 + " y", "x z"),
                            p.commutator("y " + delta2 + " y", "x z b")],
        }
    if group == 'JW':
        p = gamma_jw()
        return {
            'presentation': p,
            'proved': [p.commutator("x x x", "y y y y"),
                       p.commutator("y y y", "x x x x")],
            'loops': [parse_word(s, JW_LOOP_LETTERS) for s in JW_RESIDUAL_LOOPS],
        }
    raise BMWError("unknown group %r" % group)


def bmw_normal_form(p, word):
    return p.normal_form_word(word)


def verify_identity(p, lhs, rhs):
    return p.equal(lhs, rhs)
