"""Geometric presentations of vertex-regular lattice extensions.

From a GAB candidate with one special vertex of each type and an involution
swapping them, the extension acting regularly on special vertices is
presented on the long edges: R1 pairs each generator with its involution
partner, R2 consists of the square boundaries around the non-special
vertices (one per choice of two edges towards each special vertex).  Also
here: the index-2 Reidemeister-Schreier rewrite for the type-preserving
subgroup, spanning-tree presentations of the fundamental group, and the
homotopy translation of edge loops into long-edge words.
"""

from dataclasses import dataclass, field

from . import complexes


class PresentError(ValueError):
    pass


@dataclass
class Involution:
    vertex_map: dict
    edge_map: dict            # edge -> (edge, sign); sign -1 reverses

    def check(self, cx):
        for v, w in self.vertex_map.items():
            if self.vertex_map.get(w) != v:
                raise PresentError("vertex map is not an involution at %s" % v)
        special = {cx.vertices[v] for v in cx.vertices if cx.vertices[v] > 0}
        for v, w in self.vertex_map.items():
            tv, tw = cx.vertices[v], cx.vertices[w]
            if tv == 0 and tw != 0:
                raise PresentError("involution does not fix the non-special type")
            if tv > 0 and tw != ({1, 2} - {tv}).pop():
                raise PresentError("involution does not swap the special types")
        for e, (img, sign) in self.edge_map.items():
            i2, s2 = self.edge_map[img]
            if i2 != e or s2 != sign:
                raise PresentError("edge map is not an involution at %s" % e)
            t, h = cx.edges[e]
            it, ih = cx.edges[img]
            if sign < 0:
                it, ih = ih, it
            if (self.vertex_map[t], self.vertex_map[h]) != (it, ih):
                raise PresentError("edge map not simplicial at %s" % e)
        tri_keys = {}
        for tri in cx.triangles:
            tri_keys.setdefault(frozenset(tri), 0)
            tri_keys[frozenset(tri)] += 1
        for tri in cx.triangles:
            img = frozenset(self.edge_map[e][0] for e in tri)
            if img not in tri_keys:
                raise PresentError("involution does not permute triangles")


def involution_from_ef_swap(cx):
    """The involution induced by matching e-edges with the f-edges of equal
    index (the y1q2 and ykq3 convention): e<i> maps to f<i> reversed, and
    the long-edge images are forced by triangle matching."""
    edge_map = {}
    vertex_map = {}
    for e in cx.edges:
        if e.startswith('e'):
            partner = 'f' + e[1:]
            if partner not in cx.edges:
                raise PresentError("no partner for %s" % e)
            edge_map[e] = (partner, -1)
            edge_map[partner] = (e, -1)
            w, u = cx.edges[e]
            upartner, v = cx.edges[partner]
            vertex_map[w] = v
            vertex_map[v] = w
            vertex_map[u] = upartner
            vertex_map[upartner] = u
    pair_to_g = {}
    for (e, f, g) in cx.triangles:
        key = (e, f)
        if key in pair_to_g:
            raise PresentError("pair (%s,%s) lies in two triangles" % key)
        pair_to_g[key] = g
    for (e, f, g) in cx.triangles:
        fe = edge_map[e][0]
        ef = edge_map[f][0]
        img = pair_to_g.get((ef, fe))
        if img is None:
            raise PresentError("triangle (%s,%s,%s) has no involution image"
                               % (e, f, g))
        if g in edge_map and edge_map[g] != (img, -1):
            raise PresentError("inconsistent long-edge image for %s" % g)
        edge_map[g] = (img, -1)
    rho = Involution(vertex_map, edge_map)
    rho.check(cx)
    return rho


def canon_boundary(q):
    a, b, c, d = q
    return min((a, b, c, d), (c, d, a, b), (d, c, b, a), (b, a, d, c))


@dataclass
class GeometricPresentation:
    gens: list                # long-edge ids, in id order
    iota: dict                # generator -> its R1 partner
    relators: list            # canonical boundary quadruples (a, b, c, d)
    name: str = ""
    by_vertex: dict = field(default_factory=dict)

    def boundary_word(self, quad):
        """Quadruple -> positive word over the generators via iota."""
        a, b, c, d = quad
        return (a, self.iota[b], c, self.iota[d])

    def word(self, signed):
        """Signed letters [(g, +-1), ...] -> positive word via iota."""
        return tuple(g if s > 0 else self.iota[g] for g, s in signed)

    def parse(self, text):
        out = []
        for tok in text.split():
            if tok.endswith("'"):
                out.append(self.iota[tok[:-1]])
            else:
                out.append(tok)
        for g in out:
            if g not in self.iota:
                raise PresentError("unknown generator in %r" % text)
        return tuple(out)


def geometric_presentation(cx, rho, name=""):
    """Presentation of the special-vertex-regular extension."""
    rho.check(cx)
    specials = {1: [], 2: []}
    for v, t in cx.vertices.items():
        if t:
            specials[t].append(v)
    if len(specials[1]) != 1 or len(specials[2]) != 1:
        raise PresentError("need exactly one vertex of each special type")
    v0, w0 = specials[1][0], specials[2][0]
    gens = sorted((e for e, (t, h) in cx.edges.items() if (t, h) == (v0, w0)),
                  key=_gen_key)
    if not gens:
        raise PresentError("no long edges %s -> %s" % (v0, w0))
    iota = {}
    for g in gens:
        img, sign = rho.edge_map[g]
        if sign >= 0 or img not in gens:
            raise PresentError("involution image of %s is not an inverted "
                               "long edge" % g)
        iota[g] = img
    pair_to_g = {}
    for (e, f, g) in cx.triangles:
        if (e, f) in pair_to_g:
            raise PresentError("link not simple at pair (%s,%s)" % (e, f))
        pair_to_g[(e, f)] = g
    relators = []
    by_vertex = {}
    for u, t in sorted(cx.vertices.items()):
        if t != 0:
            continue
        es = sorted((e for e in cx.vertex_edges(u) if cx.edges[e][0] == w0),
                    key=_gen_key)
        fs = sorted((f for f in cx.vertex_edges(u) if cx.edges[f][1] == v0),
                    key=_gen_key)
        local = []
        for i1 in range(len(es)):
            for i2 in range(i1 + 1, len(es)):
                for j1 in range(len(fs)):
                    for j2 in range(j1 + 1, len(fs)):
                        quad = (pair_to_g[(es[i1], fs[j1])],
                                pair_to_g[(es[i1], fs[j2])],
                                pair_to_g[(es[i2], fs[j2])],
                                pair_to_g[(es[i2], fs[j1])])
                        local.append(canon_boundary(quad))
        by_vertex[u] = local
        relators.extend(local)
    return GeometricPresentation(gens, iota, relators, name=name,
                                 by_vertex=by_vertex)


def _gen_key(name):
    head = name.rstrip('0123456789')
    tail = name[len(head):]
    return (head, int(tail) if tail else -1)


# ---------------------------------------------------------------------------
# Reidemeister-Schreier for the index-2 type-preserving subgroup

@dataclass
class RSPresentation:
    base: str
    gens: list                 # h-generators, named by the underlying g
    relators: list             # words as tuples of (gen, +-1)
    conjugation: dict          # h -> (h', sign): conjugation by the base

    def free_reduce(word):
        return _free_reduce(word)


def _free_reduce(word):
    out = []
    for l, s in word:
        if out and out[-1] == (l, -s):
            out.pop()
        else:
            out.append((l, s))
    return tuple(out)


def reidemeister_schreier_index2(p, base):
    """Presentation of the even-length-word subgroup, transversal {1, base}.

    Generators h_g = base*g for g != base; a relator is rewritten once from
    each coset.  Requires iota(base) = base so that the transversal is
    Schreier.  The conjugation table describes the action of the base
    element: h_g -> h_{iota(g)}^{-1}.
    """
    if p.iota[base] != base:
        raise PresentError("base generator must be an involution")
    gens = [g for g in p.gens if g != base]

    def s_even(g):
        # Schreier generator at the identity coset: g * base^-1
        if p.iota[g] == base:
            return ()
        return ((p.iota[g], -1),)

    def s_odd(g):
        # Schreier generator at the base coset: base * g
        if g == base:
            return ()
        return ((g, 1),)

    relator_words = [((g, 1), (p.iota[g], 1)) for g in p.gens]
    relator_words += [tuple((x, 1) for x in p.boundary_word(q)) for q in p.relators]

    out = []
    for word in relator_words:
        pair = []
        for start in (0, 1):
            coset = start
            emitted = []
            for (g, sign) in word:
                if sign > 0:
                    emitted.extend(s_even(g) if coset == 0 else s_odd(g))
                    coset ^= 1
                else:
                    coset ^= 1
                    inv = s_even(g) if coset == 0 else s_odd(g)
                    emitted.extend((l, -s) for l, s in reversed(inv))
            reduced = _free_reduce(emitted)
            if reduced:
                pair.append(reduced)
        # positive-leading rewrite first
        pair.sort(key=lambda w: w[0][1] < 0)
        out.extend(pair)
    conj = {g: (p.iota[g], -1) for g in gens}
    return RSPresentation(base, gens, out, conj)


# ---------------------------------------------------------------------------
# fundamental groups of the complexes themselves

@dataclass
class Pi1Presentation:
    basepoint: str
    gens: list                 # non-tree edge ids
    relators: list             # words as tuples of (gen, +-1)
    tree: set

    def loop_word(self, loop, cx):
        """Edge loop [(edge, sign), ...] at the basepoint -> word."""
        at = self.basepoint
        word = []
        for e, s in loop:
            t, h = cx.edges[e]
            if s < 0:
                t, h = h, t
            if t != at:
                raise PresentError("loop breaks at %s" % e)
            at = h
            if e not in self.tree:
                word.append((e, s))
        if at != self.basepoint:
            raise PresentError("loop does not close")
        return _free_reduce(word)


def pi1_presentation(cx, basepoint):
    if basepoint not in cx.vertices:
        raise PresentError("basepoint %s absent" % basepoint)
    _, tree = complexes.spanning_tree(cx, base=basepoint)
    gens = sorted((e for e in cx.edges if e not in tree), key=_gen_key)
    relators = []
    for tri in cx.triangles:
        word = _free_reduce([(e, 1) for e in tri if e not in tree])
        relators.append(word)
    pres = Pi1Presentation(basepoint, gens, relators, tree)
    return pres


def long_edge_word(cx, loop, basepoint):
    """Rewrite an edge loop at the special base vertex into a long-edge word
    [(g, +-1), ...], replacing every passage through a non-special vertex by
    the two long edges of a triangle corner.

    The choice of auxiliary triangle at each passage does not change the
    represented group element; the least-id triangle partner is used.
    """
    tri_by_pair = {}
    e_partners = {}
    f_partners = {}
    for (e, f, g) in cx.triangles:
        tri_by_pair[(e, f)] = g
        e_partners.setdefault(f, []).append(e)
        f_partners.setdefault(e, []).append(f)

    at = basepoint
    word = []
    pending = None             # short edge that entered a type-0 vertex
    for e, s in loop:
        t, h = cx.edges[e]
        if s < 0:
            t, h = h, t
        if t != at:
            raise PresentError("loop breaks at %s" % e)
        if cx.vertices[at] != 0 and cx.vertices[h] != 0:
            word.append((e, s))
            at = h
            continue
        if cx.vertices[h] == 0:
            if pending is not None:
                raise PresentError("two consecutive entering edges")
            pending = (e, s)
            at = h
            continue
        # leaving a non-special vertex: combine with the entering edge
        enter, es = pending
        pending = None
        word.extend(_corner_word(cx, tri_by_pair, e_partners, f_partners,
                                 (enter, es), (e, s)))
        at = h
    if pending is not None or at != basepoint:
        raise PresentError("loop does not close")
    return _free_reduce(word)


def _corner_word(cx, tri_by_pair, e_partners, f_partners, entering, leaving):
    """Long-edge word homotopic to (entering then leaving) across a
    non-special vertex."""
    (e_in, s_in), (e_out, s_out) = entering, leaving
    kind_in = 'f' if s_in < 0 else 'e'   # f^-1 comes from v, e comes from w
    kind_out = 'f' if s_out > 0 else 'e'
    if kind_in == 'f' and kind_out == 'f':
        ee = sorted(e_partners[e_in], key=_gen_key)[0]
        return [(tri_by_pair[(ee, e_in)], 1), (tri_by_pair[(ee, e_out)], -1)]
    if kind_in == 'f' and kind_out == 'e':
        return [(tri_by_pair[(e_out, e_in)], 1)]
    if kind_in == 'e' and kind_out == 'f':
        return [(tri_by_pair[(e_in, e_out)], -1)]
    ff = sorted(f_partners[e_in], key=_gen_key)[0]
    return [(tri_by_pair[(e_in, ff)], -1), (tri_by_pair[(e_out, ff)], 1)]


# ---------------------------------------------------------------------------
# Smith normal form (abelianization oracle)

def abelian_invariants(gens, relators):
    """Invariant factors (excluding 1s) plus free rank of the abelianized
    presentation; relators are words of (gen, +-1)."""
    index = {g: i for i, g in enumerate(gens)}
    rows = []
    for word in relators:
        row = [0] * len(gens)
        for g, s in word:
            row[index[g]] += s
        if any(row):
            rows.append(row)
    factors = smith_invariant_factors(rows, len(gens))
    nontrivial = [d for d in factors if d > 1]
    rank = len(gens) - len(factors)
    return nontrivial, rank


def smith_invariant_factors(mat, ncols):
    """Nonzero diagonal of the Smith normal form (full row/column
    reduction over the integers)."""
    a = [row[:] for row in mat]
    m = len(a)
    n = ncols
    out = []
    t = 0
    while t < min(m, n):
        piv = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j]:
                    if piv is None or abs(a[i][j]) < abs(a[piv[0]][piv[1]]):
                        piv = (i, j)
        if piv is None:
            break
        i0, j0 = piv
        a[t], a[i0] = a[i0], a[t]
        for row in a:
            row[t], row[j0] = row[j0], row[t]
        while True:
            # clear column t
            dirty = False
            for i in range(m):
                if i != t and a[i][t]:
                    q = a[i][t] // a[t][t]
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                    if a[i][t]:
                        a[t], a[i] = a[i], a[t]
                        dirty = True
            if dirty:
                continue
            # clear row t
            for j in range(n):
                if j != t and a[t][j]:
                    q = a[t][j] // a[t][t]
                    for row in a:
                        row[j] -= q * row[t]
                    if a[t][j]:
                        for row in a:
                            row[t], row[j] = row[j], row[t]
                        dirty = True
            if not dirty:
                break
        # divisibility fixup for true invariant factors
        fix = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if a[i][j] % a[t][t]:
                    fix = i
                    break
            if fix is not None:
                break
        if fix is not None:
            a[t] = [x + y for x, y in zip(a[t], a[fix])]
            continue
        out.append(abs(a[t][t]))
        t += 1
    return out
