#!/usr/bin/env python3
"""Regenerate the derivable data assets in src/c2lab/data/.

* gamma_r.bmw / gamma_jw.bmw: the two BMW presentations.
* sq_radu.sqc / sq_jw.sqc: their square complexes.
* y1q2.cplx: the thickness-3 GAB.  Its first 18 triangles are the
  subdivision image of sq_radu under the standard edge naming; the 27
  triangles around u3/u4/u5 are solved from the published boundary
  four-cycle tables (R3/R4/R5 below) as the unique fill (up to joint
  relabeling of the e/f edges at each vertex) consistent with the
  involution swapping v and w.

The q=3 complexes are transcribed data and are not regenerated here; the
test suite cross-validates them instead.
"""

import os
import sys
from itertools import permutations

sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', 'src'))

from c2lab import bmw, complexes

DATA = os.path.join(os.path.dirname(__file__), '..', 'src', 'c2lab', 'data')

# involution on the long-edge indices of y1q2 (g_i -> g_RHO[i] reversed)
RHO = {1: 1, 2: 2, 4: 4, 10: 10, 11: 11, 13: 13, 15: 15,
       3: 6, 6: 3, 5: 8, 8: 5, 7: 9, 9: 7, 12: 14, 14: 12}

# boundary four-cycles (a,b,c,d) meaning g_a g_b^-1 g_c g_d^-1, around
# u3, u4, u5 of y1q2
R3 = [(3, 11, 6, 15), (3, 11, 12, 13), (3, 14, 4, 13), (3, 14, 13, 15),
      (4, 12, 6, 13), (4, 12, 11, 14), (4, 13, 15, 13), (6, 13, 14, 11),
      (6, 15, 13, 12)]
R4 = [(2, 12, 7, 12), (2, 12, 15, 14), (2, 14, 9, 14), (2, 14, 10, 12),
      (7, 10, 9, 15), (7, 10, 14, 12), (7, 12, 14, 15), (9, 14, 12, 10),
      (9, 15, 12, 14)]
R5 = [(1, 10, 5, 11), (1, 10, 15, 10), (1, 11, 8, 10), (1, 11, 13, 11),
      (5, 11, 10, 15), (5, 13, 8, 15), (5, 13, 11, 10), (8, 10, 11, 13),
      (8, 15, 10, 11)]


def canon_cycle(q):
    a, b, c, d = q
    return min((a, b, c, d), (c, d, a, b), (d, c, b, a), (b, a, d, c))


def boundaries_of(M):
    out = []
    for i1, i2 in ((0, 1), (0, 2), (1, 2)):
        for j1, j2 in ((0, 1), (0, 2), (1, 2)):
            out.append(canon_cycle((M[i1][j1], M[i1][j2], M[i2][j2], M[i2][j1])))
    return sorted(out)


def solve_matrix(cycles):
    """3x3 fill whose nine axis-rectangles realize the given four-cycles and
    which is transpose-equivariant under RHO; unique up to joint row/column
    relabeling, of which the lexicographically least is returned."""
    target = sorted(canon_cycle(q) for q in cycles)
    cells = sorted(x for q in cycles for x in q)
    multiset = []
    for x in sorted(set(cells)):
        multiset.extend([x] * (cells.count(x) // 4))
    assert len(multiset) == 9, multiset
    reps = set()
    for perm in set(permutations(multiset)):
        M = [list(perm[0:3]), list(perm[3:6]), list(perm[6:9])]
        if any(M[j][i] != RHO[M[i][j]] for i in range(3) for j in range(3)):
            continue
        if boundaries_of(M) != target:
            continue
        reps.add(min(tuple(tuple(M[p[i]][p[j]] for j in range(3)) for i in range(3))
                     for p in permutations(range(3))))
    if len(reps) != 1:
        raise SystemExit("expected a unique solution, found %d" % len(reps))
    return reps.pop()


def standard_edge_rename(p):
    """Square-complex edge name -> (e/f index) per the subdivision naming:
    f1..f_{dX} are the unprimed X edges in order, then the unprimed A edges;
    e-indices likewise for the primed copies."""
    xnames = [bmw.edge_name(p, dl) for dl in p.dirletters('X')]
    anames = [bmw.edge_name(p, dl) for dl in p.dirletters('A')]
    ren = {}
    for i, n in enumerate(xnames, 1):
        ren[n] = "f%d" % i
        ren[n + "'"] = "e%d" % i
    for j, n in enumerate(anames, 1):
        ren[n] = "f%d" % (len(xnames) + j)
        ren[n + "'"] = "e%d" % (len(xnames) + j)
    return ren


def build_y1q2():
    p = bmw.gamma_r()
    sq = bmw.square_complex_of(p)
    sub = complexes.subdivide_squares(sq)
    ren = standard_edge_rename(p)
    vren = {'v00': 'v', 'v11': 'w', 'v10': 'u1', 'v01': 'u2'}

    vertices = {'v': 1, 'w': 2}
    for j in range(1, 6):
        vertices['u%d' % j] = 0
    u_of_e = lambda i: (i + 2) // 3
    u_of_f = lambda i: {1: 2, 2: 1}.get((i + 2) // 3, (i + 2) // 3)
    edges = {}
    for i in range(1, 16):
        edges['e%d' % i] = ('w', 'u%d' % u_of_e(i))
        edges['f%d' % i] = ('u%d' % u_of_f(i), 'v')
        edges['g%d' % i] = ('v', 'w')
    triangles = []
    for (e, f, g) in sub.triangles:
        triangles.append((ren[e], ren[f], g))
    for M, off in ((solve_matrix(R3), 6), (solve_matrix(R4), 9),
                   (solve_matrix(R5), 12)):
        for i in range(3):
            for j in range(3):
                triangles.append(("e%d" % (off + i + 1), "f%d" % (off + j + 1),
                                  "g%d" % M[i][j]))
    cx = complexes.ChamberComplex(vertices, edges, triangles, name="y1q2")
    text = complexes.dumps(cx)
    complexes.load_complex(text)          # full invariant gate
    rep = complexes.check_gab(complexes.loads(text), expected={0: 2, 1: 4, 2: 4})
    if not rep.passes:
        raise SystemExit("y1q2 fails the local building conditions")
    return text


def main():
    with open(os.path.join(DATA, 'gamma_r.bmw'), 'w') as fh:
        fh.write(bmw.GAMMA_R_TEXT)
    with open(os.path.join(DATA, 'gamma_jw.bmw'), 'w') as fh:
        fh.write(bmw.GAMMA_JW_TEXT)
    for name, p in (('sq_radu.sqc', bmw.gamma_r()), ('sq_jw.sqc', bmw.gamma_jw())):
        with open(os.path.join(DATA, name), 'w') as fh:
            fh.write(bmw.dumps_square(bmw.square_complex_of(p)))
    with open(os.path.join(DATA, 'y1q2.cplx'), 'w') as fh:
        fh.write(build_y1q2())
    print("data assets written to", os.path.abspath(DATA))


if __name__ == '__main__':
    main()
