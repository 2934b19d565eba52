"""Cayley-graph balls of the geometric presentations: breadth-first
enumeration keyed on normal forms, ball exports with multiplication
tables, ball automorphism groups fixing the center, and the discreteness
criterion bounding the full automorphism group of the building.
"""

from dataclasses import dataclass, field

from . import graphs, words


class BallError(ValueError):
    pass


@dataclass
class CayleyBall:
    pres: object
    table: object                  # PairTable
    radius: int
    elements: list                 # normal forms (tuples of generators)
    index: dict                    # normal form -> id
    dist: list
    adj: list                      # id -> list over generator position
    gens: list

    def __len__(self):
        return len(self.elements)

    def sphere_sizes(self):
        out = [0] * (self.radius + 1)
        for d in self.dist:
            out[d] += 1
        return out

    def mult(self, i, j):
        """Id of element i * element j, or None if outside the ball."""
        w = words.normal_form(self.table, self.elements[i] + self.elements[j])
        return self.index.get(w)

    def inv(self, i):
        iota = self.pres.iota
        w = words.normal_form(
            self.table, tuple(iota[g] for g in reversed(self.elements[i])))
        return self.index.get(w)

    def simple_adjacency(self):
        return [sorted({x for x in row if x is not None and x != i})
                for i, row in enumerate(self.adj)]


def enumerate_ball(p, radius, table=None):
    """BFS over the generators with normal-form canonical keys."""
    t = table if table is not None else words.classify(p)
    elements = [()]
    index = {(): 0}
    dist = [0]
    frontier = [0]
    for d in range(1, radius + 1):
        new = []
        for i in frontier:
            base = elements[i]
            for g in p.gens:
                w = words.normal_form(t, base + (g,))
                if w not in index:
                    if len(w) != d:
                        raise BallError("normal form of a frontier product has "
                                        "length %d at depth %d" % (len(w), d))
                    index[w] = len(elements)
                    elements.append(w)
                    dist.append(d)
                    new.append(index[w])
        frontier = new
    adj = []
    for i, base in enumerate(elements):
        row = []
        for g in p.gens:
            row.append(index.get(words.normal_form(t, base + (g,))))
        adj.append(row)
    return CayleyBall(p, t, radius, elements, index, dist, adj, list(p.gens))


def export_ball(ball, mult_radius=None):
    """Text export: elements with distances and adjacency, then the
    multiplication table of the sub-ball as (i, j, k) triples."""
    lines = ["ball:",
             "  radius %d" % ball.radius,
             "  generators " + " ".join(ball.gens),
             "elements:"]
    for i, w in enumerate(ball.elements):
        row = " ".join('-' if x is None else str(x) for x in ball.adj[i])
        lines.append("  %d %s %d %s" % (i, ".".join(w) if w else "1",
                                        ball.dist[i], row))
    if mult_radius is not None:
        sub = [i for i in range(len(ball.elements)) if ball.dist[i] <= mult_radius]
        lines.append("products:")
        for i in sub:
            for j in sub:
                k = ball.mult(i, j)
                if k is None:
                    raise BallError("product %d*%d escapes the ball" % (i, j))
                lines.append("  %d %d %d" % (i, j, k))
    return "\n".join(lines) + "\n"


def parse_ball_export(text):
    """Inverse of export_ball; returns (gens, elements, dist, adj, products)."""
    gens = None
    elements = []
    dist = []
    adj = []
    products = {}
    section = None
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith('#'):
            continue
        if line in ('ball:', 'elements:', 'products:'):
            section = line[:-1]
            continue
        if section == 'ball':
            key, _, rest = line.partition(' ')
            if key == 'generators':
                gens = rest.split()
            continue
        if section == 'elements':
            parts = line.split()
            i = int(parts[0])
            assert i == len(elements)
            elements.append(() if parts[1] == "1" else tuple(parts[1].split('.')))
            dist.append(int(parts[2]))
            adj.append([None if x == '-' else int(x) for x in parts[3:]])
        elif section == 'products':
            i, j, k = map(int, line.split())
            products[(i, j)] = k
    return gens, elements, dist, adj, products


# ---------------------------------------------------------------------------
# automorphisms

@dataclass
class BallAutReport:
    order: int
    generators: list
    fixed_radius: int              # largest r' with B_{r'} pointwise fixed
    projection_orders: dict        # m -> order of the image in Aut(B_m)


def ball_automorphisms(ball, center=0):
    """All automorphisms of the undirected unlabeled ball graph fixing the
    center; the initial coloring by distance is automorphism-invariant."""
    adj = ball.simple_adjacency()
    colors = list(ball.dist)
    grp = graphs.automorphism_group(adj, colors)
    fixed = 0
    for r in range(1, ball.radius + 1):
        shell = [i for i in range(len(ball.elements)) if ball.dist[i] <= r]
        if grp.fixes_pointwise(shell):
            fixed = r
        else:
            break
    projections = {}
    for m in range(1, ball.radius + 1):
        sub = [i for i in range(len(ball.elements)) if ball.dist[i] <= m]
        restricted = grp.restriction(sub)
        projections[m] = _perm_group_order(restricted)
    return BallAutReport(grp.order(), grp.generators, fixed, projections)


def _perm_group_order(perm_tuples):
    """Order of the group generated by permutation tuples (small degrees)."""
    n = len(perm_tuples[0]) if perm_tuples else 0
    ident = tuple(range(n))
    gens = [p for p in perm_tuples if p != ident]
    if not gens:
        return 1
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for q in frontier:
            for p in gens:
                r = tuple(q[p[i]] for i in range(n))
                if r not in seen:
                    seen.add(r)
                    nxt.append(r)
        frontier = nxt
        if len(seen) > 10 ** 7:
            raise BallError("projection group too large to enumerate")
    return len(seen)


def pointwise_fixing_automorphisms(ball, fixed_ids):
    """Automorphism group of the ball fixing the given vertices pointwise
    (and the center)."""
    adj = ball.simple_adjacency()
    colors = [2 * d for d in ball.dist]
    bump = max(colors) + 1
    for k, i in enumerate(sorted(fixed_ids)):
        colors[i] = bump + k
    return graphs.automorphism_group(adj, colors)


@dataclass
class DiscretenessReport:
    criterion_holds: bool
    stabilizer_bound: int          # |A^3_1(1)|
    free_b1_points: list           # X: ids in B1 with trivial stabilizer in A^3_1
    fixed_set: list                # F


def discreteness_check(p, table=None, ball=None):
    """Appendix-style criterion on the radius-3 ball.

    Computes A^3 = Aut(B3, center), its image on B1, the set X of B1
    elements with trivial stabilizer there, F = B1(1) plus the B1-balls
    around inverses of X, and decides whether the pointwise stabilizer of F
    inside A^3 acts trivially on B2.  When it does, vertex stabilizers in
    the ambient automorphism group have order at most |A^3_1(1)|.
    """
    ball = ball if ball is not None else enumerate_ball(p, 3, table=table)
    adj = ball.simple_adjacency()
    grp = graphs.automorphism_group(adj, list(ball.dist))
    b1 = [i for i in range(len(ball)) if ball.dist[i] <= 1]
    restricted = grp.restriction(b1)
    elems = _perm_group_elements(restricted)
    a31_order = len(elems)
    pos = {v: k for k, v in enumerate(b1)}
    x_set = []
    for i in b1:
        if i == 0:
            continue
        stab = [q for q in elems if q[pos[i]] == pos[i]]
        if len(stab) == 1:
            x_set.append(i)
    fixed = set(b1)
    for i in x_set:
        j = ball.inv(i)
        for k in (x for x in ball.adj[j] if x is not None):
            fixed.add(k)
        fixed.add(j)
    sub = pointwise_fixing_automorphisms(ball, fixed)
    b2 = [i for i in range(len(ball)) if ball.dist[i] <= 2]
    holds = sub.fixes_pointwise(b2)
    return DiscretenessReport(holds, a31_order, x_set, sorted(fixed))


def _perm_group_elements(perm_tuples):
    n = len(perm_tuples[0]) if perm_tuples else 0
    ident = tuple(range(n))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for q in frontier:
            for p in perm_tuples:
                r = tuple(q[p[i]] for i in range(n))
                if r not in seen:
                    seen.add(r)
                    nxt.append(r)
        frontier = nxt
        if len(seen) > 10 ** 6:
            raise BallError("stabilizer enumeration too large")
    return seen
