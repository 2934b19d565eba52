"""Dyadic (2-adic) arithmetic, Hensel lifting for the three quadratics
behind the tree representation of the degree-(6,6) lattice, the
representation itself with its validation gate, valuation certificates for
the free-subgroup argument, and the shortest-kernel-word enumeration.

Numbers are tracked as value = 2^v * u with u odd, u known mod 2^prec;
matrices are 2x2 over these.  The representation maps the index-4
type-preserving subgroup into GL2; its images are validated by mapping
every rewritten relator of that subgroup to the identity before any kernel
enumeration runs.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import bmw

DEFAULT_PRECISION = 128


class PadicError(ValueError):
    pass


@dataclass(frozen=True)
class Padic:
    v: int                     # valuation; None encodes zero-at-precision
    u: int                     # odd unit mod 2^prec (ignored when zero)
    prec: int                  # number of known unit bits

    @classmethod
    def zero(cls, prec=DEFAULT_PRECISION):
        return cls(None, 0, prec)

    @classmethod
    def from_int(cls, n, prec=DEFAULT_PRECISION):
        return cls.from_fraction(Fraction(n), prec)

    @classmethod
    def from_fraction(cls, q, prec=DEFAULT_PRECISION):
        q = Fraction(q)
        if q == 0:
            return cls.zero(prec)
        num, den = q.numerator, q.denominator
        v = 0
        while num % 2 == 0:
            num //= 2
            v += 1
        while den % 2 == 0:
            den //= 2
            v -= 1
        u = num * pow(den, -1, 1 << prec) % (1 << prec)
        return cls(v, u, prec)

    @classmethod
    def from_unit(cls, v, u, prec=DEFAULT_PRECISION):
        if u % 2 == 0:
            raise PadicError("unit part must be odd")
        return cls(v, u % (1 << prec), prec)

    def is_zero(self):
        return self.v is None

    def valuation(self):
        if self.is_zero():
            raise PadicError("zero at working precision has no valuation")
        return self.v

    def abs2(self):
        """|x|_2 as a Fraction."""
        v = self.valuation()
        return Fraction(1, 2 ** v) if v >= 0 else Fraction(2 ** (-v))

    def truncate(self, prec):
        if self.is_zero():
            return Padic(None, 0, min(self.prec, prec))
        p = min(self.prec, prec)
        return Padic(self.v, self.u % (1 << p), p)

    def __add__(self, other):
        # zero-at-precision p means the value lies in 2^p Z2
        if self.is_zero() and other.is_zero():
            return Padic(None, 0, min(self.prec, other.prec))
        if self.is_zero() or other.is_zero():
            z, x = (self, other) if self.is_zero() else (other, self)
            if x.v >= z.prec:
                return Padic(None, 0, z.prec)
            p = min(x.prec, z.prec - x.v)
            return Padic(x.v, x.u % (1 << p), p)
        if self.v <= other.v:
            lo, hi = self, other
        else:
            lo, hi = other, self
        shift = hi.v - lo.v
        # known modulo 2^p from the less precise operand
        p = min(lo.prec, hi.prec + shift)
        if shift > p:
            return Padic(lo.v, lo.u % (1 << p), p)
        total = (lo.u + (hi.u << shift)) % (1 << p)
        if total == 0:
            return Padic(None, 0, lo.v + p)
        gain = 0
        while total % 2 == 0:
            total //= 2
            gain += 1
        newp = p - gain
        return Padic(lo.v + gain, total % (1 << newp), newp)

    def __neg__(self):
        if self.is_zero():
            return self
        return Padic(self.v, (-self.u) % (1 << self.prec), self.prec)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if self.is_zero() or other.is_zero():
            return Padic(None, 0, min(self.prec, other.prec))
        p = min(self.prec, other.prec)
        return Padic(self.v + other.v, (self.u * other.u) % (1 << p), p)

    def inverse(self):
        if self.is_zero():
            raise PadicError("division by zero")
        return Padic(-self.v, pow(self.u, -1, 1 << self.prec), self.prec)

    def residue(self, modulus_bits):
        """The value mod 2^modulus_bits (requires v >= 0)."""
        v = self.valuation()
        if v < 0:
            raise PadicError("negative valuation has no integer residue")
        if v >= modulus_bits:
            return 0
        if self.prec + v < modulus_bits:
            raise PadicError("insufficient precision for the residue")
        return (self.u << v) % (1 << modulus_bits)

    def congruent_int(self, n, modulus):
        bits = (modulus - 1).bit_length()
        if (1 << bits) != modulus:
            raise PadicError("modulus must be a power of two")
        return (self.residue(bits) - n) % modulus == 0


def hensel_quadratic(c1, c0, seed, seed_modulus, prec=DEFAULT_PRECISION):
    """Root of t^2 + c1 t + c0 congruent to `seed` mod `seed_modulus`.

    Requires |f(seed)| < |f'(seed)|^2; Newton iteration doubles the
    precision each step.
    """
    def f(t, mod):
        return (t * t + c1 * t + c0) % mod

    def fp(t, mod):
        return (2 * t + c1) % mod

    mod = 1 << (prec + 16)
    fa = f(seed, mod)
    da = fp(seed, mod)
    v_f = _v2(fa, prec + 16)
    v_d = _v2(da, prec + 16)
    if v_d is None or (v_f is not None and v_f <= 2 * v_d):
        raise PadicError("Hensel inequality fails at seed %d" % seed)
    t = seed
    for _ in range(prec.bit_length() + 6):
        ft = f(t, mod)
        if ft == 0:
            break
        d = fp(t, mod)
        vd = _v2(d, prec + 16)
        t = (t - (ft >> vd) * pow(d >> vd, -1, mod)) % mod
    if f(t, mod) % (1 << prec) != 0:
        raise PadicError("Newton iteration did not converge")
    if (t - seed) % seed_modulus != 0:
        raise PadicError("root does not match the seed congruence")
    t %= (1 << prec)
    v = _v2(t, prec)
    if v is None:
        return Padic(None, 0, prec)
    return Padic(v, (t >> v) % (1 << (prec - v)), prec - v)


def _v2(x, cap):
    x %= (1 << cap)
    if x == 0:
        return None
    v = 0
    while x % 2 == 0:
        x //= 2
        v += 1
    return v


# ---------------------------------------------------------------------------
# 2x2 matrices

@dataclass(frozen=True)
class Padic2x2:
    a: Padic
    b: Padic
    c: Padic
    d: Padic

    @classmethod
    def identity(cls, prec=DEFAULT_PRECISION):
        one = Padic.from_int(1, prec)
        zero = Padic.zero(prec)
        return cls(one, zero, zero, one)

    def __mul__(self, o):
        return Padic2x2(self.a * o.a + self.b * o.c,
                        self.a * o.b + self.b * o.d,
                        self.c * o.a + self.d * o.c,
                        self.c * o.b + self.d * o.d)

    def det(self):
        return self.a * self.d - self.b * self.c

    def inverse(self):
        di = self.det().inverse()
        return Padic2x2(self.d * di, (-self.b) * di,
                        (-self.c) * di, self.a * di)

    def conjugate_by_diag(self, s):
        """D M D^-1 for D = diag(1, s)."""
        si = s.inverse()
        return Padic2x2(self.a, self.b * si, self.c * s, self.d)

    def is_identity(self, bits=None, slack=8):
        """Identity at precision: off-diagonal entries and diagonal-minus-one
        vanish to at least bits-slack dyadic digits."""
        if bits is None:
            bits = min(self.a.prec, 96)
        one = Padic.from_int(1, self.a.prec)
        threshold = bits - slack
        for entry in (self.b, self.c, self.a - one, self.d - one):
            if entry.is_zero():
                if entry.prec < threshold:
                    raise PadicError("identity test at insufficient precision")
                continue
            if entry.v < threshold:
                return False
            raise PadicError("borderline identity test; raise the precision")
        return True


# ---------------------------------------------------------------------------
# the representation

@dataclass
class PhiData:
    prec: int
    alpha: Padic
    beta: Padic
    gamma: Padic
    pair_images: dict           # two-letter word (e.g. 'ab') -> Padic2x2
    presentation: object        # the BMW presentation
    expressions: dict           # derived expressions in the generators
    validated: bool = False


def roots(prec=DEFAULT_PRECISION):
    """The three dyadic roots: alpha (unit root of t^2-t-4, = 21 mod 32),
    beta (valuation-2 root of t^2-t+4, = 20 mod 64), gamma (unit root of
    t^2-(alpha-12), = 13 mod 16)."""
    pad = prec + 32
    alpha = hensel_quadratic(-1, -4, 21, 32, prec=pad)
    beta = hensel_quadratic(-1, 4, 20, 64, prec=pad)
    a_int = alpha.residue(pad)
    gamma = hensel_quadratic(0, -(a_int - 12), 13, 16, prec=prec)
    return alpha.truncate(prec), beta.truncate(prec), gamma.truncate(prec)


def _phi_base_matrices(alpha, beta, gamma, prec):
    quarter = Padic.from_fraction(Fraction(1, 4), prec)
    half = Padic.from_fraction(Fraction(1, 2), prec)
    sixteenth = Padic.from_fraction(Fraction(1, 16), prec)
    one = Padic.from_int(1, prec)
    m1 = (-alpha + gamma) * quarter
    m2 = (-alpha - gamma) * quarter
    zero = Padic.zero(prec)
    M = Padic2x2(m1, zero, zero, m2)
    s = (-one) + alpha * half + beta * quarter + \
        Padic.from_int(-3, prec) * alpha * beta * sixteenth
    d = beta * gamma * half + beta * gamma * gamma * gamma * sixteenth
    K = Padic2x2(one, s + d, s - d, one)
    return M, K


def phi_generators(prec=DEFAULT_PRECISION, validate=True):
    """Images of the pair generators of the type-preserving subgroup.

    Base images: the diagonal matrix for the A-side pair 'ab' and the
    K-matrix for the X-side pair 'yx'.  The remaining pair images are
    derived: 'ac' by the conjugation identity ac = yx ab xy, and the
    X-side pairs by expressing them in the generators {ab, xy} through a
    breadth-first search over two-sided normal forms.  The validation gate
    maps every rewritten relator of the subgroup to the identity.
    """
    alpha, beta, gamma = roots(prec)
    M, K = _phi_base_matrices(alpha, beta, gamma, prec)
    p = bmw.gamma_r()
    Ki = K.inverse()
    Mi = M.inverse()
    AC = K * M * Ki
    imgs = {'ab': M, 'ba': Mi, 'yx': K, 'xy': Ki, 'ac': AC, 'ca': AC.inverse()}
    imgs['bc'] = Mi * AC
    imgs['cb'] = imgs['bc'].inverse()

    expressions = {'ac': (('y', 1), ('x', 1), ('a', 1), ('b', 1), ('x', 1), ('y', 1))}
    for target in ('xz', 'yz'):
        word = _express_in_pair_generators(p, target)
        expressions[target] = word
        imgs[target] = _eval_pair_word(imgs, word)
        rev = target[::-1]
        imgs[rev] = imgs[target].inverse()

    data = PhiData(prec, alpha, beta, gamma, imgs, p, expressions)
    if validate:
        validate_phi(data)
    return data


def _express_in_pair_generators(p, target):
    """Search a word over {ab, ba, xy, yx} equal to the two-letter element,
    returned as a tuple over those pair names."""
    target_nf = p.normal_form(target[0] + " " + target[1])
    gens = [('ab', p.parse("a b")), ('ba', p.parse("b a")),
            ('xy', p.parse("x y")), ('yx', p.parse("y x"))]
    seen = {((), ()): ()}
    frontier = [(((), ()), ())]
    for _ in range(10):
        new = []
        for (nf, word) in frontier:
            base = nf[0] + nf[1]
            for name, w in gens:
                nxt = p.normal_form(base + w)
                if nxt in seen:
                    continue
                seen[nxt] = word + (name,)
                if nxt == target_nf:
                    return word + (name,)
                new.append((nxt, word + (name,)))
        frontier = new
    raise PadicError("could not express %s in the pair generators" % target)


def _eval_pair_word(imgs, word):
    out = None
    for name in word:
        m = imgs[name]
        out = m if out is None else out * m
    return out


def evaluate_phi(data, word):
    """Image of an even-even word (string or parsed) of the presentation."""
    p = data.presentation
    if isinstance(word, str):
        word = p.parse(word)
    wa, wx = p.normal_form(word)
    if len(wa) % 2 or len(wx) % 2:
        raise PadicError("word is not in the type-preserving subgroup")
    out = Padic2x2.identity(data.prec)
    for side in (wa, wx):
        for i in range(0, len(side), 2):
            out = out * data.pair_images[side[i][0] + side[i + 1][0]]
    return out


def subgroup_relators(p):
    """Rewritten relators of the index-4 type-preserving subgroup, via the
    Schreier transversal {1, a, x, ax}; each is an even-even word."""
    transversal = {(0, 0): p.parse(""), (1, 0): p.parse("a"),
                   (0, 1): p.parse("x"), (1, 1): p.parse("a x")}

    def parity(word):
        pa = sum(1 for l, _ in word if p.family(l) == 'A') % 2
        px = sum(1 for l, _ in word if p.family(l) == 'X') % 2
        return (pa, px)

    relators = [p.parse(" ".join([l, l])) for l in sorted(p.letters)]
    relators += [tuple(rel) for rel in p.squares]
    out = []
    for t in transversal.values():
        for rel in relators:
            w = tuple(t) + tuple(rel) + p.inverse_word(t)
            if parity(w) != (0, 0):
                raise PadicError("rewritten relator has odd type")
            out.append(w)
    return out


def validate_phi(data):
    """Mandatory gate: every rewritten subgroup relator maps to the
    identity at working precision."""
    p = data.presentation
    for rel in subgroup_relators(p):
        img = evaluate_phi(data, rel)
        if not img.is_identity():
            raise PadicError("relator image is not the identity: %s"
                             % (bmw.word_str(rel),))
    data.validated = True
    return True


# ---------------------------------------------------------------------------
# reports

def normalized_k_matrix(data):
    """The X-side base image conjugated by diag(1, 4), the frame in which
    the published entry valuations hold (|k12| = 1, |k21| = 1/2)."""
    four = Padic.from_int(4, data.prec)
    return data.pair_images['yx'].conjugate_by_diag(four)


def hyperbolic_translation(mat):
    """Translation length (in edges) of a diagonalizable matrix acting on
    the dyadic tree: |v(lambda1) - v(lambda2)|.  Rejects elliptic input."""
    if not mat.b.is_zero() or not mat.c.is_zero():
        raise PadicError("expected a diagonal matrix")
    v1 = mat.a.valuation()
    v2 = mat.d.valuation()
    if v1 == v2:
        raise PadicError("equal eigenvalue valuations: no axis (elliptic)")
    return abs(v1 - v2)


def axis_certificate(data):
    """Valuation data for the ping-pong argument: eigenvalue valuations of
    the A-side image, entry valuations of the normalized K-matrix, and the
    adjacency of the two lattice classes spanned by its columns."""
    if not data.validated:
        raise PadicError("validate_phi must pass first")
    M = data.pair_images['ab']
    K = normalized_k_matrix(data)
    ev = (M.a.valuation(), M.d.valuation())
    translation = hyperbolic_translation(M)
    kv = {'k11': K.a.valuation(), 'k12': K.b.valuation(),
          'k21': K.c.valuation(), 'k22': K.d.valuation()}
    # lattice classes [Z2 k11 e1 + Z2 k21 e2] shifted by the eigenvalue
    # action, vs [Z2 e1 + Z2 e2]: elementary divisor gap
    v0 = (kv['k11'] + 1, kv['k21'] - 1)
    gap = abs((v0[0] - v0[1]) - 0)
    return {
        'eigenvalue_valuations': ev,
        'translation_length': translation,
        'k_valuations': kv,
        'det_k': K.det(),
        'vertex_gap': gap,
        'adjacent': gap == 1,
    }


def kernel_words(data, maxlen=8, recheck=True):
    """All nontrivial elements of the type-preserving subgroup of length at
    most maxlen whose image is the identity at working precision; each hit
    is re-verified at doubled precision before being reported."""
    if not data.validated:
        raise PadicError("validate_phi must pass first")
    p = data.presentation
    hits = []
    deep = None
    for wa in _even_words(p, 'A', maxlen):
        for wx in _even_words(p, 'X', maxlen - len(wa)):
            if not wa and not wx:
                continue
            word = wa + wx
            if evaluate_phi(data, word).is_identity():
                if recheck:
                    if deep is None:
                        deep = phi_generators(prec=data.prec * 2)
                    if not evaluate_phi(deep, word).is_identity():
                        raise PadicError("precision-ambiguous kernel candidate "
                                         "%s" % (bmw.word_str(word),))
                hits.append(word)
    return hits


def _even_words(p, fam, maxlen):
    """Freely reduced even-length words over one involutive family."""
    letters = [ (l, 1) for l in (p.agens if fam == 'A' else p.xgens)]
    out = [()]
    frontier = [()]
    length = 0
    while length + 2 <= maxlen:
        nxt = []
        for w in frontier:
            for l in letters:
                if w and w[-1] == l:
                    continue
                for l2 in letters:
                    if l2 == l:
                        continue
                    nxt.append(w + (l, l2))
        # dedupe freely-equal words (reduced by construction)
        frontier = nxt
        out.extend(nxt)
        length += 2
    return out
