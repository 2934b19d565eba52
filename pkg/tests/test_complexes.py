"""Chamber complexes: loading, invariants, links, local building conditions,
isomorphism (vs. the brute-force oracle), subdivision and covers."""

import random

import pytest

from c2lab import assets, bmw, complexes

EXPECT = {0: 2, 1: 4, 2: 4}


def test_load_y1q2_counts():
    cx = assets.load_gab('y1q2')
    assert cx.counts() == (7, 45, 45)


def test_load_ykq3_counts():
    for name in ('y1q3', 'y2q3', 'y3q3', 'y4q3'):
        cx = assets.load_gab(name)
        assert cx.counts() == (12, 120, 160)


def test_single_triangle_fails_firmness():
    text = """
vertices:
  u 0
  v 1
  w 2
edges:
  e w u
  f u v
  g v w
triangles:
  (e,f,g)
"""
    with pytest.raises(complexes.InvariantError) as err:
        complexes.load_complex(text)
    assert 'firmness' in str(err.value)
    # structurally fine though
    cx = complexes.loads(text)
    assert cx.counts() == (3, 3, 1)


def test_loader_rejects_malformed():
    with pytest.raises(complexes.ComplexError):
        complexes.loads("vertices:\n  v 7\n")
    with pytest.raises(complexes.ComplexError):
        complexes.loads("vertices:\n  v 1\n  w 2\nedges:\n  g v w\n"
                        "triangles:\n  (g,g,g)\n")


def test_gab_y1q2():
    cx = assets.load_gab('y1q2')
    rep = complexes.check_gab(cx, expected=EXPECT)
    assert rep.passes and rep.curvature == 'euclidean'
    by_vertex = {r.vertex: r for r in rep.per_vertex}
    for u in ('u1', 'u2', 'u3', 'u4', 'u5'):
        r = by_vertex[u]
        assert (r.girth, r.diameter, r.m) == (4, 2, 2)
        assert r.sides == (3,)
    for s in ('v', 'w'):
        r = by_vertex[s]
        assert (r.girth, r.diameter, r.m) == (8, 4, 4)
        assert r.sides == (3,)


def test_gab_ykq3():
    for name in ('y1q3', 'y2q3', 'y3q3', 'y4q3'):
        cx = assets.load_gab(name)
        rep = complexes.check_gab(cx, expected=EXPECT)
        assert rep.passes and rep.curvature == 'euclidean'
        by_vertex = {r.vertex: r for r in rep.per_vertex}
        for u, r in by_vertex.items():
            if u.startswith('u'):
                assert (r.girth, r.diameter, r.m, r.sides) == (4, 2, 2, (4,))
            else:
                assert (r.girth, r.diameter, r.m, r.sides) == (8, 4, 4, (4,))


def test_k22_link_is_generalized_2gon():
    # a 4-cycle link: complete bipartite K_{2,2}
    from c2lab import graphs
    adj = [[1, 3], [0, 2], [1, 3], [0, 2]]
    assert graphs.girth(adj) == 4 and graphs.diameter(adj) == 2


def test_isomorphic_relabeled():
    cx = assets.load_gab('y1q2')
    rng = random.Random(7)
    vperm = {v: v for v in cx.vertices}
    us = [v for v in cx.vertices if v.startswith('u')]
    shuffled = us[:]
    rng.shuffle(shuffled)
    vperm.update(dict(zip(us, shuffled)))
    eperm = {}
    enames = sorted(cx.edges)
    shuffled_e = enames[:]
    rng.shuffle(shuffled_e)
    eperm.update(dict(zip(enames, shuffled_e)))
    relabeled = complexes.ChamberComplex(
        {vperm[v]: t for v, t in cx.vertices.items()},
        {eperm[e]: (vperm[t], vperm[h]) for e, (t, h) in cx.edges.items()},
        [tuple(eperm[e] for e in tri) for tri in cx.triangles])
    found = complexes.isomorphic(cx, relabeled)
    assert found is not None
    rep = complexes.check_gab(relabeled, expected=EXPECT)
    assert rep.passes  # classification invariant under relabeling


def test_isomorphic_reflexive_symmetric():
    c1 = assets.load_gab('y1q3')
    assert complexes.isomorphic(c1, c1) is not None


def test_y1q3_vs_y2q3_matches_bruteforce_oracle():
    c1 = assets.load_gab('y1q3')
    c2 = assets.load_gab('y2q3')
    fast = complexes.isomorphic(c1, c2)
    slow = complexes.isomorphic_bruteforce(c1, c2)
    assert (fast is None) == (slow is None)


def test_subdivide_one_square():
    p = bmw.BMWPresentation(['a'], ['x'], {'a', 'x'}, ['a x a x'])
    sq = bmw.square_complex_of(p)
    sub = complexes.subdivide_squares(sq)
    assert len(sub.triangles) == 2
    assert sum(1 for e in sub.edges if e.startswith('g')) == 1


def test_subdivide_sq_radu():
    sub = complexes.subdivide_squares(assets.load_square('sq_radu'))
    assert len(sub.triangles) == 18
    assert sum(1 for e in sub.edges if e.startswith('g')) == 9


def test_subdivide_sq_jw():
    sub = complexes.subdivide_squares(assets.load_square('sq_jw'))
    assert len(sub.triangles) == 32
    assert sum(1 for e in sub.edges if e.startswith('g')) == 16


def _standard_seed(p, q):
    """Edge seed of the subdivision embedding: unprimed X -> f1.., unprimed
    A -> f(dX+1).., primed likewise into e; diagonals to the same index."""
    ren = {}
    xn = [bmw.edge_name(p, dl) for dl in p.dirletters('X')]
    an = [bmw.edge_name(p, dl) for dl in p.dirletters('A')]
    for i, n in enumerate(xn, 1):
        ren[n] = 'f%d' % i
        ren[n + "'"] = 'e%d' % i
    for j, n in enumerate(an, 1):
        ren[n] = 'f%d' % (len(xn) + j)
        ren[n + "'"] = 'e%d' % (len(xn) + j)
    for s in range(1, q + 1):
        ren['g%d' % s] = 'g%d' % s
    return ren


def test_embedding_sq_radu_into_y1q2():
    p = bmw.gamma_r()
    sub = complexes.subdivide_squares(bmw.square_complex_of(p))
    sup = assets.load_gab('y1q2')
    seed = _standard_seed(p, 9)
    emb = complexes.find_embedding(sub, sup, seed_edges=seed)
    assert emb is not None
    image = {tuple(sorted(t)) for t in emb['triangles']}
    first18 = {tuple(sorted(t)) for t in sup.triangles[:18]}
    assert image == first18


def test_identity_embedding():
    sup = assets.load_gab('y1q2')
    emb = complexes.find_embedding(sup, sup,
                                   seed_edges={e: e for e in sup.edges})
    assert emb is not None
    assert emb['vertices'] == {v: v for v in sup.vertices}


def test_build_cover_trivial():
    cx = assets.load_gab('y1q2')
    _, tree = complexes.spanning_tree(cx)
    action = {e: (0,) for e in cx.edges if e not in tree}
    cov = complexes.build_cover(cx, action, 1)
    assert complexes.isomorphic(cx, cov) is not None


def test_build_cover_bad_action_rejected():
    cx = assets.load_gab('y1q2')
    _, tree = complexes.spanning_tree(cx)
    action = {e: (0, 1) for e in cx.edges if e not in tree}
    action[sorted(action)[0]] = (1, 0)
    with pytest.raises(complexes.InvariantError):
        complexes.build_cover(cx, action, 2)
