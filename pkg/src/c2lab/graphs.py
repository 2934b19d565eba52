"""Plain-graph machinery shared by link checks, ball automorphisms and
complex isomorphism: BFS metrics, equitable partition refinement, and a
partition-backtracking automorphism/isomorphism engine.

Graphs are simple and undirected, given as adjacency lists over 0..n-1.
Colorings are dense lists of small ints.  Refinement assigns color names in
a label-invariant way, so isomorphic colored graphs refine to identically
named partitions; the matcher relies on this to prune by name.
"""

from collections import deque


def bfs_distances(adj, source):
    dist = {source: 0}
    q = deque([source])
    while q:
        x = q.popleft()
        for y in adj[x]:
            if y not in dist:
                dist[y] = dist[x] + 1
                q.append(y)
    return dist


def is_connected(adj):
    n = len(adj)
    return n == 0 or len(bfs_distances(adj, 0)) == n


def diameter(adj):
    """Exact diameter; None if disconnected or empty."""
    n = len(adj)
    if n == 0:
        return None
    best = 0
    for s in range(n):
        dist = bfs_distances(adj, s)
        if len(dist) != n:
            return None
        best = max(best, max(dist.values()))
    return best


def girth(adj):
    """Length of a shortest cycle; None if the graph is a forest."""
    n = len(adj)
    best = None
    for s in range(n):
        dist = {s: 0}
        parent = {s: -1}
        q = deque([s])
        while q:
            x = q.popleft()
            for y in adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    q.append(y)
                elif parent[x] != y and dist[y] >= dist[x]:
                    c = dist[x] + dist[y] + 1
                    if best is None or c < best:
                        best = c
        if best == 3:
            return 3
    return best


def is_bipartite(adj):
    """Two-coloring by side, or None if an odd cycle exists."""
    n = len(adj)
    side = [None] * n
    for s in range(n):
        if side[s] is not None:
            continue
        side[s] = 0
        q = deque([s])
        while q:
            x = q.popleft()
            for y in adj[x]:
                if side[y] is None:
                    side[y] = 1 - side[x]
                    q.append(y)
                elif side[y] == side[x]:
                    return None
    return side


def densify(colors):
    """Rename colors to 0..k-1 preserving relative order of names."""
    names = sorted(set(colors))
    remap = {c: i for i, c in enumerate(names)}
    return [remap[c] for c in colors]


def refine(adj, colors, active=None):
    """Equitable refinement (1-WL) of a coloring; returns dense colors.

    `active`, when given, lists the only color names whose cells changed
    since the coloring was last equitable; refinement then runs
    incrementally.  Splitting order and new names depend only on color
    names and counts, never on vertex ids.
    """
    colors = list(colors)
    if active is None:
        colors = densify(colors)
    cells = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    fresh = max(cells) + 1 if cells else 0
    queue = deque(sorted(cells) if active is None else sorted(set(active)))
    queued = set(queue)
    while queue:
        splitter = queue.popleft()
        queued.discard(splitter)
        members = cells.get(splitter)
        if not members:
            continue
        counts = {}
        for v in members:
            for w in adj[v]:
                counts[w] = counts.get(w, 0) + 1
        touched = {}
        for w, k in counts.items():
            touched.setdefault(colors[w], {}).setdefault(k, []).append(w)
        for c in sorted(touched):
            groups = touched[c]
            cell = cells[c]
            if len(groups) == 1 and len(next(iter(groups.values()))) == len(cell):
                continue
            zero = len(cell) - sum(len(g) for g in groups.values())
            parts = []
            if zero:
                present = set()
                for g in groups.values():
                    present.update(g)
                parts.append([v for v in cell if v not in present])
            for k in sorted(groups):
                parts.append(groups[k])
            keep = max(range(len(parts)), key=lambda i: (len(parts[i]), -i))
            for i, part in enumerate(parts):
                if i == keep:
                    cells[c] = part
                    continue
                cells[fresh] = part
                for v in part:
                    colors[v] = fresh
                if fresh not in queued:
                    queue.append(fresh)
                    queued.add(fresh)
                fresh += 1
            if c not in queued:
                queue.append(c)
                queued.add(c)
    return densify(colors)


def _cells_of(colors):
    cells = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    return cells


def _individualize_refine(adj, colors, v):
    """Split {v} off its cell (fresh largest name) and re-refine."""
    out = list(colors)
    old = out[v]
    fresh = max(out) + 1
    out[v] = fresh
    return refine(adj, out, active=[old, fresh])


def is_automorphism(adj, perm):
    for v in range(len(adj)):
        if sorted(perm[w] for w in adj[v]) != sorted(adj[perm[v]]):
            return False
    return True


def _histogram(colors):
    h = {}
    for c in colors:
        h[c] = h.get(c, 0) + 1
    return h


def _check_leaf(adj1, colors1, adj2, colors2):
    cells1 = _cells_of(colors1)
    cells2 = _cells_of(colors2)
    perm = [None] * len(colors1)
    for c, vs in cells1.items():
        if c not in cells2 or len(cells2[c]) != 1:
            return None
        perm[vs[0]] = cells2[c][0]
    for v in range(len(adj1)):
        if sorted(perm[w] for w in adj1[v]) != sorted(adj2[perm[v]]):
            return None
    return perm


def find_isomorphism(adj1, colors1, adj2, colors2):
    """Color-preserving isomorphism between two graphs, or None."""
    if len(adj1) != len(adj2):
        return None
    return _match_clean(adj1, refine(adj1, list(colors1)),
                        adj2, refine(adj2, list(colors2)))


def _match_clean(adj1, colors1, adj2, colors2):
    """Iterative DFS matcher; colorings must be refined already."""
    if _histogram(colors1) != _histogram(colors2):
        return None
    # frame: [left_refined_coloring, cell_color, candidates, next_idx, right_coloring]
    stack = []

    def open_node(c1, c2):
        """Push a frame for (c1, c2) or return a leaf permutation/'fail'."""
        cells1 = _cells_of(c1)
        if all(len(vs) == 1 for vs in cells1.values()):
            return _check_leaf(adj1, c1, adj2, c2)
        c = min((cc for cc, vs in cells1.items() if len(vs) > 1),
                key=lambda cc: (len(cells1[cc]), cc))
        v = min(cells1[c])
        r1 = _individualize_refine(adj1, c1, v)
        stack.append([r1, c, None, 0, c2])
        return None

    res = open_node(colors1, colors2)
    if res is not None:
        return res
    while stack:
        r1, c, cands, idx, c2 = stack[-1]
        if cands is None:
            cands = sorted(_cells_of(c2).get(c, []))
            stack[-1][2] = cands
        if idx >= len(cands):
            stack.pop()
            continue
        stack[-1][3] = idx + 1
        u = cands[idx]
        r2 = _individualize_refine(adj2, c2, u)
        if _histogram(r1) != _histogram(r2):
            continue
        res = open_node(r1, r2)
        if res is not None:
            return res
    return None


class AutomorphismGroup:
    """Complete automorphism search result.

    `generators` generate the full group of color-preserving automorphisms;
    `base`/`orbit_sizes` give the stabilizer chain along the canonical first
    path, so order() multiplies exactly.
    """

    def __init__(self, n, generators, base, orbit_sizes):
        self.n = n
        self.generators = generators
        self.base = base
        self.orbit_sizes = orbit_sizes

    def order(self):
        out = 1
        for s in self.orbit_sizes:
            out *= s
        return out

    def orbit(self, v):
        seen = {v}
        todo = [v]
        while todo:
            x = todo.pop()
            for g in self.generators:
                y = g[x]
                if y not in seen:
                    seen.add(y)
                    todo.append(y)
        return seen

    def fixes_pointwise(self, vertices):
        return all(len(self.orbit(v)) == 1 for v in vertices)

    def restriction(self, vertices):
        """Restrict generators to an invariant vertex set, as tuples."""
        vs = sorted(vertices)
        index = {v: i for i, v in enumerate(vs)}
        out = set()
        for g in self.generators:
            out.add(tuple(index[g[v]] for v in vs))
        return sorted(out)


def automorphism_group(adj, colors):
    """All color-preserving automorphisms, by individualization-refinement.

    Walks the canonical first path v_1, v_2, ... (always the least vertex of
    the chosen cell); at level i every other member u of the cell is tested
    for an automorphism fixing v_1..v_{i-1} and mapping v_i to u, skipping
    members already in the known orbit.  The found maps are a strong
    generating set relative to that base.
    """
    generators = []
    base = []
    level_colors = []
    colors = refine(adj, list(colors))
    while True:
        cells = _cells_of(colors)
        nonsingleton = {c: vs for c, vs in cells.items() if len(vs) > 1}
        if not nonsingleton:
            break
        c = min(nonsingleton, key=lambda cc: (len(nonsingleton[cc]), cc))
        v = min(nonsingleton[c])
        base.append((v, c))
        level_colors.append(colors)
        colors = _individualize_refine(adj, colors, v)

    orbit_sizes = []
    for i in range(len(base) - 1, -1, -1):
        v, c = base[i]
        colors_i = level_colors[i]
        cell = sorted(_cells_of(colors_i)[c])
        r1 = _individualize_refine(adj, colors_i, v)
        fixed = [b for b, _ in base[:i]]
        orbit = _orbit_under(generators, v, fixed)
        for u in cell:
            if u in orbit:
                continue
            r2 = _individualize_refine(adj, colors_i, u)
            perm = _match_clean(adj, r1, adj, r2)
            if perm is not None:
                assert is_automorphism(adj, perm)
                generators.append(perm)
                orbit = _orbit_under(generators, v, fixed)
        orbit_sizes.append(len(orbit))
    orbit_sizes.reverse()
    return AutomorphismGroup(len(adj), generators, [b for b, _ in base], orbit_sizes)


def _orbit_under(generators, v, fixed_prefix):
    fixed = set(fixed_prefix)
    gens = [g for g in generators if all(g[x] == x for x in fixed)]
    seen = {v}
    todo = [v]
    while todo:
        x = todo.pop()
        for g in gens:
            y = g[x]
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return seen


def refinement_hash(adj, colors):
    """Isomorphism-invariant fingerprint from the equitable refinement.
    Collisions possible; for tabu bookkeeping only."""
    stable = refine(adj, list(colors))
    sig = sorted((stable[v], tuple(sorted(stable[w] for w in adj[v])))
                 for v in range(len(adj)))
    return hash(tuple(sig))
