"""Exact rational group-algebra arithmetic over Cayley balls and
verification of sum-of-squares certificates for the shifted Laplacian
Delta^2 - eps*Delta, yielding certified spectral-gap constants.

All arithmetic is integer/rational; verification is bit-reproducible.  A
certificate carries an exact rational eps, a rational scale, a basis of
ball elements, and integer matrix rows; it passes when every row sums to
zero and C*nu < eps for nu the l1 coefficient norm of the defect and
C = 2^(2*ceil(log2 R)) with R the support radius of the basis.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from . import words


class SOSError(ValueError):
    pass


@dataclass
class GroupRingElement:
    ball: object
    coeffs: dict               # element id -> Fraction (no zeros)

    def __post_init__(self):
        self.coeffs = {i: Fraction(c) for i, c in self.coeffs.items() if c != 0}

    def star(self):
        out = {}
        for i, c in self.coeffs.items():
            j = self.ball.inv(i)
            if j is None:
                raise SOSError("inverse of element %d escapes the ball" % i)
            out[j] = c
        return GroupRingElement(self.ball, out)

    def augmentation(self):
        return sum(self.coeffs.values(), Fraction(0))

    def l1(self):
        return sum((abs(c) for c in self.coeffs.values()), Fraction(0))

    def support_radius(self):
        return max((self.ball.dist[i] for i in self.coeffs), default=0)

    def __add__(self, other):
        out = dict(self.coeffs)
        for i, c in other.coeffs.items():
            out[i] = out.get(i, Fraction(0)) + c
        return GroupRingElement(self.ball, out)

    def __sub__(self, other):
        out = dict(self.coeffs)
        for i, c in other.coeffs.items():
            out[i] = out.get(i, Fraction(0)) - c
        return GroupRingElement(self.ball, out)

    def scale(self, c):
        return GroupRingElement(self.ball,
                                {i: Fraction(c) * v for i, v in self.coeffs.items()})


def multiply(x, y):
    """Exact convolution; raises if a product escapes the enumerated ball."""
    ball = x.ball
    out = {}
    table = ball.table
    for i, ci in x.coeffs.items():
        wi = ball.elements[i]
        for j, cj in y.coeffs.items():
            w = words.normal_form(table, wi + ball.elements[j])
            k = ball.index.get(w)
            if k is None:
                raise SOSError("product escapes the enumerated ball")
            out[k] = out.get(k, Fraction(0)) + ci * cj
    return GroupRingElement(ball, out)


def laplacian(ball, gens=None):
    """|S| - sum of the generators, as an element over the ball."""
    gens = list(gens) if gens is not None else list(ball.gens)
    iota = ball.pres.iota
    for g in gens:
        if iota[g] not in gens:
            raise SOSError("generating set is not symmetric at %s" % g)
    coeffs = {0: Fraction(len(gens))}
    for g in gens:
        i = ball.index.get((g,))
        if i is None or i == 0:
            raise SOSError("generator %s is trivial or missing" % g)
        coeffs[i] = coeffs.get(i, Fraction(0)) - 1
    return GroupRingElement(ball, coeffs)


# ---------------------------------------------------------------------------
# certificates

@dataclass
class SOSCertificate:
    group_id: str
    s_size: int
    eps: Fraction
    scale: Fraction            # every row entry is integer * scale
    basis: list                # words (tuples of generators); ball ids resolved later
    rows: list                 # list of integer lists, len(basis) each

    def row_sums(self):
        return [sum(r) for r in self.rows]


def dumps_certificate(cert):
    lines = ["soscert:",
             "  group %s" % cert.group_id,
             "  ssize %d" % cert.s_size,
             "  eps %s" % _frac_str(cert.eps),
             "  scale %s" % _frac_str(cert.scale),
             "  m %d" % len(cert.basis),
             "  n %d" % len(cert.rows),
             "basis:"]
    for w in cert.basis:
        lines.append("  " + (".".join(w) if w else "1"))
    lines.append("rows:")
    for r in cert.rows:
        lines.append("  " + " ".join(str(x) for x in r))
    return "\n".join(lines) + "\n"


def _frac_str(q):
    q = Fraction(q)
    return "%d/%d" % (q.numerator, q.denominator)


def loads_certificate(text):
    header = {}
    basis = []
    rows = []
    section = None
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith('#'):
            continue
        if line in ('soscert:', 'basis:', 'rows:'):
            section = line[:-1]
            continue
        if section == 'soscert':
            key, _, val = line.partition(' ')
            header[key] = val
        elif section == 'basis':
            basis.append(() if line == "1" else tuple(line.split('.')))
        elif section == 'rows':
            rows.append([int(x) for x in line.split()])
    try:
        cert = SOSCertificate(header['group'], int(header['ssize']),
                              Fraction(header['eps']), Fraction(header['scale']),
                              basis, rows)
    except KeyError as e:
        raise SOSError("certificate header missing %s" % e)
    if int(header['m']) != len(basis) or int(header['n']) != len(rows):
        raise SOSError("certificate shape mismatch")
    for r in rows:
        if len(r) != len(basis):
            raise SOSError("row length mismatch")
    return cert


@dataclass
class VerificationReport:
    passes: bool
    eps: Fraction
    nu: Fraction
    support_radius: int
    constant: int              # C = 2^(2 ceil log2 R)
    certified_eps: Fraction    # eps - omega with omega = C*nu
    kazhdan_lower: Fraction    # rational lower bound on sqrt(2 eps'/|S|)
    failures: list


def shift_constant(radius):
    if radius <= 0:
        raise SOSError("support radius must be positive")
    ceil_log = (radius - 1).bit_length()
    return 2 ** (2 * ceil_log)


def verify_certificate(ball, cert, gens=None):
    """Exact verification of x = sum_i q_i^* q_i against Delta^2 - eps Delta.

    q_i = scale * sum_j rows[i][j] * basis_j.  Requires every row to sum to
    zero (so x lies in the augmentation ideal); nu is the l1 norm of
    Delta^2 - eps*Delta - x and the certificate passes iff C*nu < eps.
    """
    failures = []
    basis_ids = []
    for w in cert.basis:
        nf = words.normal_form(ball.table, w)
        i = ball.index.get(nf)
        if i is None:
            raise SOSError("basis word %s outside the ball" % (w,))
        basis_ids.append(i)
    if len(set(basis_ids)) != len(basis_ids):
        raise SOSError("basis words are not distinct elements")
    radius = max((ball.dist[i] for i in basis_ids), default=0)
    for k, r in enumerate(cert.rows):
        if sum(r) != 0:
            failures.append("row %d sums to %d, not 0" % (k, sum(r)))
    delta = laplacian(ball, gens)
    target = multiply(delta, delta) - delta.scale(cert.eps)

    inv_ids = [ball.inv(i) for i in basis_ids]
    prod_ids = {}
    for a, ia in enumerate(inv_ids):
        wa = ball.elements[ia]
        for b, ib in enumerate(basis_ids):
            w = words.normal_form(ball.table, wa + ball.elements[ib])
            k = ball.index.get(w)
            if k is None:
                raise SOSError("basis product escapes the ball")
            prod_ids[(a, b)] = k

    acc = {}
    for r in cert.rows:
        support = [(j, c) for j, c in enumerate(r) if c]
        for a, ca in support:
            for b, cb in support:
                k = prod_ids[(a, b)]
                acc[k] = acc.get(k, 0) + ca * cb
    s2 = cert.scale * cert.scale
    x = GroupRingElement(ball, {k: s2 * v for k, v in acc.items()})
    defect = target - x
    nu = defect.l1()
    C = shift_constant(radius)
    omega = C * nu
    passes = not failures and omega < cert.eps
    if omega >= cert.eps:
        failures.append("C*nu = %s is not below eps = %s" % (omega, cert.eps))
    certified = cert.eps - omega if passes else Fraction(0)
    s_size = cert.s_size
    kaz = kazhdan_bound(certified, s_size) if passes else Fraction(0)
    return VerificationReport(passes, cert.eps, nu, radius, C, certified,
                              kaz, failures)


def lemma_replay(eps, nu, radius, s_size, omega=None):
    """The acceptance arithmetic of a reported verification run: given the
    exact defect norm nu, the support radius and |S|, recompute the shifted
    constant and the certified bounds."""
    eps = Fraction(eps)
    nu = Fraction(nu)
    C = shift_constant(radius)
    if omega is None:
        omega = C * nu
    omega = Fraction(omega)
    if omega < C * nu or omega >= eps:
        raise SOSError("omega must lie in [C*nu, eps)")
    certified = eps - omega
    return {
        'constant': C,
        'passes': C * nu < eps,
        'certified_eps': certified,
        'kazhdan_lower': kazhdan_bound(certified, s_size),
    }


def kazhdan_bound(eps, s_size, digits=6):
    """Greatest rational with `digits` decimals below sqrt(2*eps/s_size)."""
    eps = Fraction(eps)
    if eps < 0:
        raise SOSError("eps must be nonnegative")
    if eps == 0:
        return Fraction(0)
    val = 2 * eps / s_size
    scale = 10 ** digits
    # floor(scale * sqrt(val)) via integer sqrt of num/den
    num = val.numerator * scale * scale
    den = val.denominator
    root = isqrt(num // den)
    while (root + 1) ** 2 * den <= num:
        root += 1
    while root ** 2 * den > num:
        root -= 1
    return Fraction(root, scale)
