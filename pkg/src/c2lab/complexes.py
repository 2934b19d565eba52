"""Finite typed triangle (chamber) complexes: data model, file format,
validators, vertex links, the local building conditions, isomorphism,
square-complex subdivision, embeddings, and finite covers.

A complex has vertices typed over {0,1,2}, directed labeled edges, and
triangles stored as directed 3-cycles (e, f, g) through one vertex of each
type.  Convention: type 0 vertices are the non-special ones (link angle
pi/2 in the Euclidean C2-tilde case); types 1 and 2 are the two special
classes, and triangles are normalized to start with the edge whose tail
has type 2.
"""

from collections import Counter, deque
from dataclasses import dataclass, field
from fractions import Fraction

from . import graphs


class ComplexError(ValueError):
    """Malformed complex file or broken structural precondition."""


class InvariantError(ValueError):
    """A chamber-complex invariant fails; names the invariant and cell."""


@dataclass
class ChamberComplex:
    vertices: dict            # id -> type in {0,1,2}
    edges: dict               # id -> (tail id, head id)
    triangles: list           # list of (e, f, g) edge-id triples
    name: str = ""

    def edge_type(self, e):
        """Type pair of an edge, named by the complementary vertex type."""
        t, h = self.edges[e]
        pair = {self.vertices[t], self.vertices[h]}
        return ({0, 1, 2} - pair).pop()

    def vertex_edges(self, v):
        return [e for e, (t, h) in self.edges.items() if v in (t, h)]

    def triangles_at(self, v):
        out = []
        for tri in self.triangles:
            if v in self.triangle_vertices(tri):
                out.append(tri)
        return out

    def triangle_vertices(self, tri):
        return {x for e in tri for x in self.edges[e]}

    def counts(self):
        return (len(self.vertices), len(self.edges), len(self.triangles))


def _normalize_triangle(cx, tri):
    """Rotate a directed 3-cycle so the first edge's tail has type 2."""
    for rot in range(3):
        t = tri[rot:] + tri[:rot]
        if cx.vertices[cx.edges[t[0]][0]] == 2:
            return tuple(t)
    raise ComplexError("triangle %s visits no vertex of type 2" % (tri,))


def _check_structure(cx):
    for e, (t, h) in cx.edges.items():
        if t not in cx.vertices or h not in cx.vertices:
            raise ComplexError("edge %s has unknown endpoint" % e)
        if cx.vertices[t] == cx.vertices[h]:
            raise InvariantError("edge %s joins two vertices of equal type" % e)
    fixed = []
    for tri in cx.triangles:
        if len(tri) != 3 or len(set(tri)) != 3:
            raise ComplexError("triangle %s is not three distinct edges" % (tri,))
        for e in tri:
            if e not in cx.edges:
                raise ComplexError("triangle %s uses unknown edge %s" % (tri, e))
        for i in range(3):
            if cx.edges[tri[i]][1] != cx.edges[tri[(i + 1) % 3]][0]:
                raise ComplexError("triangle %s is not a directed 3-cycle" % (tri,))
        types = {cx.vertices[cx.edges[e][0]] for e in tri}
        if types != {0, 1, 2}:
            raise ComplexError("triangle %s misses a vertex type" % (tri,))
        fixed.append(_normalize_triangle(cx, tri))
    cx.triangles = fixed


def validate(cx, firm=True):
    """Invariant check; returns the list of violations (strings)."""
    problems = []
    edge_tris = Counter()
    vert_tris = Counter()
    for tri in cx.triangles:
        for e in tri:
            edge_tris[e] += 1
        for v in cx.triangle_vertices(tri):
            vert_tris[v] += 1
    for v in cx.vertices:
        if vert_tris[v] == 0:
            problems.append("purity: vertex %s lies in no triangle" % v)
    for e in cx.edges:
        if edge_tris[e] == 0:
            problems.append("purity: edge %s lies in no triangle" % e)
        elif firm and edge_tris[e] < 2:
            problems.append("firmness: edge %s lies in only one triangle" % e)
    adj, index = _vertex_graph(cx)
    if not graphs.is_connected(adj):
        problems.append("connectivity: complex is disconnected")
    for v in cx.vertices:
        ladj, _ = link(cx, v)
        if ladj and not graphs.is_connected(ladj):
            problems.append("link connectivity: link of %s is disconnected" % v)
    return problems


def _vertex_graph(cx):
    index = {v: i for i, v in enumerate(sorted(cx.vertices))}
    adj = [set() for _ in index]
    for t, h in cx.edges.values():
        adj[index[t]].add(index[h])
        adj[index[h]].add(index[t])
    return [sorted(a) for a in adj], index


def link(cx, v):
    """Link of a vertex: bipartite graph on the edges at v, one link-edge
    per triangle through v.  Returns (adjacency, list of edge ids)."""
    incident = sorted(cx.vertex_edges(v))
    index = {e: i for i, e in enumerate(incident)}
    adj = [[] for _ in incident]
    for tri in cx.triangles:
        here = [e for e in tri if v in cx.edges[e]]
        if len(here) == 2:
            a, b = index[here[0]], index[here[1]]
            adj[a].append(b)
            adj[b].append(a)
    return adj, incident


@dataclass
class VertexLinkReport:
    vertex: str
    vertex_type: int
    sides: tuple              # (left degree set, right degree set) by edge type
    girth: int
    diameter: int
    simple: bool
    firm: bool
    classification: str       # "generalized m-gon" or "fails"
    m: int | None


@dataclass
class LinkReport:
    per_vertex: list
    angle_sum: Fraction       # sum of the three type angles, as multiple of pi
    curvature: str            # "euclidean" | "hyperbolic" | "positive"
    passes: bool
    expected: dict | None


def check_gab(cx, expected=None):
    """Classify every vertex link and evaluate the combinatorial curvature
    condition.  `expected` maps vertex type -> m; when given, the report
    passes iff every type-t link is a generalized expected[t]-gon and the
    angle sum is at most pi (with which case recorded)."""
    per_vertex = []
    worst = {}
    for v in sorted(cx.vertices):
        adj, incident = link(cx, v)
        simple = all(len(a) == len(set(a)) for a in adj)
        simple_adj = [sorted(set(a)) for a in adj]
        sides = {}
        for e in incident:
            sides.setdefault(cx.edge_type(e), []).append(e)
        degs = tuple(sorted({len(a) for a in simple_adj})) if adj else ()
        g = graphs.girth(simple_adj) if simple else 2
        d = graphs.diameter(simple_adj)
        firm = bool(adj) and min(len(a) for a in simple_adj) >= 2
        bip = graphs.is_bipartite(simple_adj) is not None
        m = None
        if simple and bip and firm and g is not None and d is not None and g == 2 * d:
            m = d
        cls = "generalized %d-gon" % m if m else "fails"
        t = cx.vertices[v]
        per_vertex.append(VertexLinkReport(v, t, degs, g, d, simple, firm, cls, m))
        if g is not None:
            worst[t] = min(worst.get(t, g), g)
    angle = sum((Fraction(2, worst[t]) for t in worst), Fraction(0))
    curvature = ("euclidean" if angle == 1 else
                 "hyperbolic" if angle < 1 else "positive")
    passes = curvature in ("euclidean", "hyperbolic")
    if expected is not None:
        for rep in per_vertex:
            if rep.m != expected.get(rep.vertex_type):
                passes = False
    return LinkReport(per_vertex, angle, curvature, passes, expected)


# ---------------------------------------------------------------------------
# incidence-graph encoding for isomorphism


def _incidence_graph(cx):
    """Colored incidence graph whose color-preserving automorphisms are the
    complex automorphisms.  Nodes: vertices, edges, two half-edges per edge
    (tail/head), triangles; colors separate kinds, vertex types and edge
    type pairs."""
    nodes = []
    color = []
    index = {}

    def add(key, col):
        index[key] = len(nodes)
        nodes.append(key)
        color.append(col)

    for v in sorted(cx.vertices):
        add(('v', v), ('v', cx.vertices[v]))
    for e in sorted(cx.edges):
        add(('e', e), ('e', cx.edge_type(e)))
        add(('t', e), ('t',))
        add(('h', e), ('h',))
    for i, tri in enumerate(cx.triangles):
        add(('T', i), ('T',))
    adj = [set() for _ in nodes]

    def join(a, b):
        adj[index[a]].add(index[b])
        adj[index[b]].add(index[a])

    for e, (t, h) in cx.edges.items():
        join(('e', e), ('t', e))
        join(('e', e), ('h', e))
        join(('t', e), ('v', t))
        join(('h', e), ('v', h))
    for i, tri in enumerate(cx.triangles):
        for e in tri:
            join(('T', i), ('e', e))
    names = sorted(set(color))
    cmap = {c: i for i, c in enumerate(names)}
    colors = [cmap[c] for c in color]
    return [sorted(a) for a in adj], colors, nodes, index


def isomorphic(c1, c2):
    """Type-preserving cell bijection commuting with incidence, or None.

    Deterministic; the map is returned as {'vertices': {...}, 'edges': {...}}.
    """
    if sorted(Counter(c1.vertices.values()).items()) != \
       sorted(Counter(c2.vertices.values()).items()):
        return None
    if len(c1.edges) != len(c2.edges) or len(c1.triangles) != len(c2.triangles):
        return None
    a1, col1, nodes1, _ = _incidence_graph(c1)
    a2, col2, nodes2, _ = _incidence_graph(c2)
    perm = graphs.find_isomorphism(a1, col1, a2, col2)
    if perm is None:
        return None
    vmap = {}
    emap = {}
    for i, key in enumerate(nodes1):
        kind, name = key
        target = nodes2[perm[i]]
        if kind == 'v':
            vmap[name] = target[1]
        elif kind == 'e':
            emap[name] = target[1]
    verify_cell_map(c1, c2, vmap, emap)
    return {'vertices': vmap, 'edges': emap}


def verify_cell_map(c1, c2, vmap, emap):
    """Cell-by-cell verification of a claimed isomorphism."""
    assert sorted(vmap) == sorted(c1.vertices) and sorted(set(vmap.values())) == sorted(c2.vertices)
    assert sorted(emap) == sorted(c1.edges) and sorted(set(emap.values())) == sorted(c2.edges)
    for v, t in c1.vertices.items():
        assert c2.vertices[vmap[v]] == t, "type broken at %s" % v
    for e, (t, h) in c1.edges.items():
        assert c2.edges[emap[e]] == (vmap[t], vmap[h]), "incidence broken at %s" % e
    t1 = Counter(tuple(sorted(tri)) for tri in c1.triangles)
    t2 = Counter(tuple(sorted(tri)) for tri in c2.triangles)
    timg = Counter(tuple(sorted(emap[e] for e in tri)) for tri in c1.triangles)
    assert t1.total() == t2.total() and timg == t2, "triangle sets differ"


def isomorphic_bruteforce(c1, c2):
    """Independent oracle for GAB-shaped complexes (one special vertex of
    each type): exhaustive backtracking over type-preserving cell maps,
    processing the non-special vertices one at a time.

    At each non-special vertex the two short-edge classes are matched by
    all possible bijections, which forces long-edge images through the
    triangles; contradictory forcings are pruned.  Returns a vertex map or
    None after exhausting the search space.
    """
    from itertools import permutations

    if sorted(Counter(c1.vertices.values()).items()) != \
       sorted(Counter(c2.vertices.values()).items()):
        return None

    def shape(cx):
        us = sorted(v for v, t in cx.vertices.items() if t == 0)
        pair_to_g = {}
        es = {u: [] for u in us}
        fs = {u: [] for u in us}
        for (e, f, g) in cx.triangles:
            u = (cx.triangle_vertices((e, f, g)) -
                 {x for x, t in cx.vertices.items() if t != 0}).pop()
            es[u].append(e)
            fs[u].append(f)
            if (e, f) in pair_to_g:
                return None
            pair_to_g[(e, f)] = g
        for u in us:
            es[u] = sorted(set(es[u]))
            fs[u] = sorted(set(fs[u]))
        return us, es, fs, pair_to_g

    s1 = shape(c1)
    s2 = shape(c2)
    if s1 is None or s2 is None:
        raise InvariantError("oracle requires simple links")
    us1, es1, fs1, p2g1 = s1
    us2, es2, fs2, p2g2 = s2
    if len(us1) != len(us2):
        return None

    def extend(i, used, gmap):
        if i == len(us1):
            return {}
        u = us1[i]
        for u2 in us2:
            if u2 in used:
                continue
            if len(es1[u]) != len(es2[u2]) or len(fs1[u]) != len(fs2[u2]):
                continue
            inv0 = {v: k for k, v in gmap.items()}
            for eperm in permutations(es2[u2]):
                for fperm in permutations(fs2[u2]):
                    new = dict(gmap)
                    inv = dict(inv0)
                    ok = True
                    for a, ea in enumerate(es1[u]):
                        for b, fa in enumerate(fs1[u]):
                            g = p2g1.get((ea, fa))
                            g2 = p2g2.get((eperm[a], fperm[b]))
                            if (g is None) != (g2 is None):
                                ok = False
                                break
                            if g is not None:
                                if new.get(g, g2) != g2 or inv.get(g2, g) != g:
                                    ok = False
                                    break
                                new[g] = g2
                                inv[g2] = g
                        if not ok:
                            break
                    if not ok:
                        continue
                    rest = extend(i + 1, used | {u2}, new)
                    if rest is not None:
                        rest[u] = u2
                        return rest
        return None

    vmap = extend(0, set(), {})
    if vmap is None:
        return None
    for v, t in c1.vertices.items():
        if t != 0:
            vmap[v] = next(w for w, t2 in c2.vertices.items() if t2 == t)
    return vmap


# ---------------------------------------------------------------------------
# file format

def dumps(cx):
    lines = ["# chamber complex %s" % cx.name if cx.name else "# chamber complex"]
    lines.append("vertices:")
    for v in cx.vertices:
        lines.append("  %s %d" % (v, cx.vertices[v]))
    lines.append("edges:")
    for e, (t, h) in cx.edges.items():
        lines.append("  %s %s %s" % (e, t, h))
    lines.append("triangles:")
    for tri in cx.triangles:
        lines.append("  (%s,%s,%s)" % tri)
    return "\n".join(lines) + "\n"


def loads(text, name=""):
    """Parse and fully validate a complex file (see `dumps` for the layout).
    Raises ComplexError on parse/structure problems and InvariantError when
    a chamber-complex invariant fails."""
    vertices = {}
    edges = {}
    triangles = []
    section = None
    for ln, raw in enumerate(text.splitlines(), 1):
        line = raw.split('#', 1)[0].strip()
        if not line:
            continue
        if line.endswith(':') and line[:-1] in ('vertices', 'edges', 'triangles'):
            section = line[:-1]
            continue
        if section == 'vertices':
            try:
                v, t = line.split()
                t = int(t)
            except ValueError:
                raise ComplexError("line %d: bad vertex line %r" % (ln, raw))
            if t not in (0, 1, 2):
                raise ComplexError("line %d: vertex type must be 0,1,2" % ln)
            if v in vertices:
                raise ComplexError("line %d: duplicate vertex %s" % (ln, v))
            vertices[v] = t
        elif section == 'edges':
            try:
                e, t, h = line.split()
            except ValueError:
                raise ComplexError("line %d: bad edge line %r" % (ln, raw))
            if e in edges:
                raise ComplexError("line %d: duplicate edge %s" % (ln, e))
            edges[e] = (t, h)
        elif section == 'triangles':
            body = line.strip()
            if not (body.startswith('(') and body.endswith(')')):
                raise ComplexError("line %d: bad triangle line %r" % (ln, raw))
            tri = tuple(x.strip() for x in body[1:-1].split(','))
            triangles.append(tri)
        else:
            raise ComplexError("line %d: content outside any section" % ln)
    cx = ChamberComplex(vertices, edges, triangles, name=name)
    _check_structure(cx)
    return cx


def load_complex(text, name="", firm=True):
    """loads() plus the invariant gate; raises on any violation."""
    cx = loads(text, name=name)
    problems = validate(cx, firm=firm)
    if problems:
        raise InvariantError("; ".join(problems))
    return cx


# ---------------------------------------------------------------------------
# square complexes and subdivision

def subdivide_squares(sq):
    """Split each square of a BMW square complex along the diagonal between
    the two distinguished opposite corners (types 1 and 2), labeling the new
    diagonals g1, g2, ... in square order.  Produces the triangle complex
    with the e/f/g naming used by the shipped GAB files."""
    vertices = {}
    for v, t in sq.vertex_types.items():
        vertices[v] = t
    edges = {}
    for e, (t, h) in sq.edges.items():
        tt, ht = vertices[t], vertices[h]
        if {tt, ht} == {0, 1}:       # f-style: u -> v
            edges[e] = (t, h) if (tt, ht) == (0, 1) else (h, t)
        elif {tt, ht} == {0, 2}:     # e-style: w -> u
            edges[e] = (t, h) if (tt, ht) == (2, 0) else (h, t)
        else:
            raise ComplexError("square edge %s joins the two special corners" % e)
    triangles = []
    for i, square in enumerate(sq.squares, 1):
        bottom, right, top, left = square
        d = "g%d" % i
        corner1 = _common_vertex(sq, bottom, left, vertices, 1)
        corner2 = _common_vertex(sq, right, top, vertices, 2)
        edges[d] = (corner1, corner2)
        # triangle through the corner shared by bottom and right
        triangles.append(_close_triangle(edges, vertices, right, bottom, d))
        triangles.append(_close_triangle(edges, vertices, top, left, d))
    cx = ChamberComplex(vertices, edges, triangles,
                        name=(sq.name + "-subdivided") if sq.name else "")
    _check_structure(cx)
    return cx


def _common_vertex(sq, e1, e2, vertices, want_type):
    shared = set(sq.edges[e1]) & set(sq.edges[e2])
    for v in shared:
        if vertices[v] == want_type:
            return v
    raise ComplexError("square corners do not carry the required types")


def _close_triangle(edges, vertices, e, f, g):
    # e: w->u, f: u->v, g: v->w after orientation normalization
    tri = (e, f, g)
    if edges[e][1] != edges[f][0] or edges[f][1] != edges[g][0] or edges[g][1] != edges[e][0]:
        raise ComplexError("triangle (%s,%s,%s) does not close" % tri)
    return tri


# ---------------------------------------------------------------------------
# embeddings

def find_embedding(sub, sup, seed_vertices=None, seed_edges=None):
    """Extend a partial cell map to an injective, type-compatible simplicial
    map of `sub` onto a subcomplex of `sup`, or return None.

    Propagates forced assignments through triangles (two mapped sides force
    the third in a simple-linked target), then backtracks over the leftover
    choices.  Only injectivity and subcomplex closure are checked; local
    convexity of the image is assumed from the caller's context.
    """
    vmap = dict(seed_vertices or {})
    emap = dict(seed_edges or {})
    for v, w in vmap.items():
        if sub.vertices[v] != sup.vertices[w]:
            raise ComplexError("seed maps %s to a vertex of different type" % v)
    for e, x in emap.items():
        ends = sub.edges[e]
        tgt = sup.edges[x]
        for i in (0, 1):
            if ends[i] in vmap and vmap[ends[i]] != tgt[i]:
                raise ComplexError("seed inconsistent at edge %s" % e)
            vmap[ends[i]] = tgt[i]

    pair_index = {}
    for tri in sup.triangles:
        for i in range(3):
            for j in range(3):
                if i != j:
                    pair_index.setdefault((tri[i], tri[j]), []).append(tri)

    def propagate(vmap, emap):
        changed = True
        while changed:
            changed = False
            for tri in sub.triangles:
                mapped = [e for e in tri if e in emap]
                if len(mapped) == 2:
                    a, b = mapped
                    cands = [t for t in pair_index.get((emap[a], emap[b]), [])]
                    images = {tuple(t) for t in cands}
                    if not images:
                        return False
                    if len(images) > 1:
                        continue
                    img = images.pop()
                    missing = [e for e in tri if e not in emap][0]
                    target = _aligned_edge(tri, img, emap, missing)
                    if target is None:
                        return False
                    if missing in emap and emap[missing] != target:
                        return False
                    if _assign(sub, sup, vmap, emap, missing, target) is False:
                        return False
                    changed = True
        return True

    if not propagate(vmap, emap):
        return None
    remaining = [e for e in sorted(sub.edges) if e not in emap]
    result = _embed_backtrack(sub, sup, vmap, emap, remaining)
    if result is None:
        return None
    vmap, emap = result
    if len(set(emap.values())) != len(emap) or len(set(vmap.values())) != len(vmap):
        return None
    # subcomplex closure: every sub triangle maps onto a sup triangle
    sup_tris = {tuple(sorted(t)) for t in sup.triangles}
    image_tris = []
    for tri in sub.triangles:
        img = tuple(sorted(emap[e] for e in tri))
        if img not in sup_tris:
            return None
        image_tris.append(img)
    return {'vertices': vmap, 'edges': emap, 'triangles': image_tris}


def _aligned_edge(tri, img, emap, missing):
    """Cyclic-position alignment: all mapped edges of `tri` must sit at a
    common offset inside `img`; the image of `missing` is then forced."""
    img = tuple(img)
    offsets = set()
    for i, e in enumerate(tri):
        if e in emap:
            if emap[e] not in img:
                return None
            offsets.add((img.index(emap[e]) - i) % 3)
    if len(offsets) != 1:
        return None
    off = offsets.pop()
    return img[(tri.index(missing) + off) % 3]


def _assign(sub, sup, vmap, emap, e, x):
    if sub.edge_type(e) != sup.edge_type(x):
        return False
    emap[e] = x
    for i in (0, 1):
        v, w = sub.edges[e][i], sup.edges[x][i]
        if vmap.get(v, w) != w:
            return False
        vmap[v] = w
    return True


def _embed_backtrack(sub, sup, vmap, emap, remaining):
    if not remaining:
        return vmap, emap
    e = remaining[0]
    t, h = sub.edges[e]
    for x, (xt, xh) in sorted(sup.edges.items()):
        if x in emap.values():
            continue
        if vmap.get(t, xt) != xt or vmap.get(h, xh) != xh:
            continue
        if sub.edge_type(e) != sup.edge_type(x):
            continue
        vm, em = dict(vmap), dict(emap)
        if _assign(sub, sup, vm, em, e, x) is False:
            continue
        res = _embed_backtrack(sub, sup, vm, em, remaining[1:])
        if res is not None:
            return res
    return None


# ---------------------------------------------------------------------------
# covers

def spanning_tree(cx, base=None):
    """BFS spanning tree from the lexicographically least special vertex
    (type > 0), or from `base`.  Returns (base, set of tree edge ids,
    parent paths as edge id sequences)."""
    if base is None:
        special = sorted(v for v, t in cx.vertices.items() if t > 0)
        base = special[0] if special else sorted(cx.vertices)[0]
    out_edges = {}
    for e in sorted(cx.edges):
        t, h = cx.edges[e]
        out_edges.setdefault(t, []).append((e, h, +1))
        out_edges.setdefault(h, []).append((e, t, -1))
    tree = set()
    seen = {base}
    q = deque([base])
    while q:
        v = q.popleft()
        for e, w, _ in sorted(out_edges.get(v, [])):
            if w not in seen:
                seen.add(w)
                tree.add(e)
                q.append(w)
    if len(seen) != len(cx.vertices):
        raise InvariantError("connectivity: complex is disconnected")
    return base, tree


def build_cover(cx, action, sheets, base=None):
    """Finite cover from a permutation action of the non-tree edges.

    `action` maps edge ids to permutations (tuples) of range(sheets); tree
    edges act trivially.  The action must kill every triangle relator, i.e.
    the product of edge permutations around each triangle is the identity;
    otherwise an InvariantError names the triangle.
    """
    base, tree = spanning_tree(cx, base)
    ident = tuple(range(sheets))

    def perm_of(e):
        return ident if e in tree else tuple(action[e])

    def act(p, s):
        return p[s]

    for tri in cx.triangles:
        for s in range(sheets):
            t = s
            for e in tri:
                t = act(perm_of(e), t)
            if t != s:
                raise InvariantError(
                    "cover action: triangle %s acts nontrivially" % (tri,))

    vertices = {}
    for v, t in cx.vertices.items():
        for s in range(sheets):
            vertices["%s.%d" % (v, s)] = t
    edges = {}
    for e, (t, h) in cx.edges.items():
        p = perm_of(e)
        for s in range(sheets):
            edges["%s.%d" % (e, s)] = ("%s.%d" % (t, s), "%s.%d" % (h, act(p, s)))
    triangles = []
    for tri in cx.triangles:
        for s in range(sheets):
            t = s
            lift = []
            for e in tri:
                lift.append("%s.%d" % (e, t))
                t = act(perm_of(e), t)
            triangles.append(tuple(lift))
    cover = ChamberComplex(vertices, edges, triangles,
                           name=(cx.name + "-cover%d" % sheets) if cx.name else "")
    _check_structure(cover)
    return cover


def quotient_by_sheets(cover, sheets):
    """Forget the sheet decoration `name.s` -> `name`; inverse of
    build_cover up to isomorphism.  Each base triangle appears `sheets`
    times among the lifts."""
    def strip(x):
        return x.rsplit('.', 1)[0]
    vertices = {}
    for v, t in cover.vertices.items():
        vertices[strip(v)] = t
    edges = {}
    for e, (t, h) in cover.edges.items():
        edges[strip(e)] = (strip(t), strip(h))
    counted = Counter(tuple(strip(e) for e in tri) for tri in cover.triangles)
    out = []
    for t, k in sorted(counted.items()):
        if k % sheets:
            raise InvariantError("not a %d-sheet decoration" % sheets)
        out.extend([t] * (k // sheets))
    cx = ChamberComplex(vertices, edges, out, name="quotient")
    _check_structure(cx)
    return cx
