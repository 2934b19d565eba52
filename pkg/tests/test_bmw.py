"""Presentations on products of trees: rewrite tables, two-sided normal
forms, verified identities, square complexes."""

import random

import pytest

from c2lab import bmw


def test_rule_tables_complete():
    r = bmw.gamma_r()
    assert len(r.rules) == 9
    jw = bmw.gamma_jw()
    assert len(jw.rules) == 16
    assert len(set(jw.rules.values())) == 16


def test_normal_form_shapes():
    p = bmw.gamma_r()
    assert p.normal_form("") == ((), ())
    wa, wx = p.normal_form("x z a")
    assert all(p.family(l) == 'A' for l, _ in wa)
    assert all(p.family(l) == 'X' for l, _ in wx)


def test_delta_conjugation_facts():
    # the half-turn element delta = xz satisfies delta a = b delta,
    # delta b = a delta, and delta^2 c = c delta^-2
    p = bmw.gamma_r()
    assert p.normal_form("x z a") == p.normal_form("b x z")
    assert bmw.bmw_normal_form(p, p.parse("x z a")) == p.parse("b x z")
    assert p.normal_form("x z b") == p.normal_form("a x z")
    assert bmw.verify_identity(p, p.parse("x z x z c"), p.parse("c z x z x"))
    assert bmw.verify_identity(p, p.parse("a c"), p.parse("y x a b x y"))
    assert p.is_trivial(p.parse("a a"))


def test_normal_form_idempotent_and_lengths():
    p = bmw.gamma_r()
    rng = random.Random(11)
    letters = list(p.letters)
    for _ in range(200):
        w = [(rng.choice(letters), 1) for _ in range(rng.randrange(0, 12))]
        wa, wx = p.normal_form(w)
        again = p.normal_form(wa + wx)
        assert again == (wa, wx)
    # swap-side lengths agree: normalizing X-first gives the same lengths
    for _ in range(100):
        w = tuple((rng.choice(letters), 1) for _ in range(8))
        wa, wx = p.normal_form(w)
        inv = p.normal_form(p.inverse_word(w))
        assert (len(inv[0]), len(inv[1])) == (len(wa), len(wx))


def test_normal_form_uniqueness_bfs():
    # spot check: words equal under relator insertion get equal normal forms
    p = bmw.gamma_jw()
    rng = random.Random(3)
    dirs = p.dirletters('A') + p.dirletters('X')
    rels = [tuple(rel) for rel in p.squares]
    for _ in range(150):
        w = tuple(rng.choice(dirs) for _ in range(6))
        rel = rng.choice(rels)
        if rng.random() < 0.5:
            rel = p.inverse_word(rel)
        pos = rng.randrange(len(w) + 1)
        v = w[:pos] + rel + w[pos:]
        assert p.normal_form(w) == p.normal_form(v)


def test_jw_commutators_nontrivial():
    p = bmw.gamma_jw()
    cat = bmw.residual_elements('JW')
    for w in cat['proved']:
        assert not p.is_trivial(w)
    assert len(cat['loops'][0]) == 14


def test_r_catalog():
    p = bmw.gamma_r()
    cat = bmw.residual_elements('R')
    assert cat['proved'][0] == p.parse("x z x z x z x z")
    assert not p.is_trivial(cat['proved'][0])
    assert len(cat['disjunctive']) == 2


def test_square_complex_r():
    sq = bmw.square_complex_of(bmw.gamma_r())
    assert sq.degree() == (3, 3)
    assert len(sq.squares) == 9
    assert len(sq.edges) == 12


def test_square_complex_jw():
    sq = bmw.square_complex_of(bmw.gamma_jw())
    assert sq.degree() == (4, 4)
    assert len(sq.squares) == 16
    assert len(sq.edges) == 16


def test_square_complex_sigma_tables_r():
    # published four-group action on the degree-(3,3) complex
    sq = bmw.square_complex_of(bmw.gamma_r())
    assert sq.sigma_a['a'] == ('a', -1)
    assert sq.sigma_a['x'] == ("x'", 1)
    assert sq.sigma_x['a'] == ("a'", 1)
    assert sq.sigma_x['x'] == ('x', -1)
    # the two maps commute and their product moves every vertex
    for e in sq.edges:
        ax = sq.sigma_x[sq.sigma_a[e][0]][0]
        xa = sq.sigma_a[sq.sigma_x[e][0]][0]
        assert ax == xa


def test_square_roundtrip_file():
    sq = bmw.square_complex_of(bmw.gamma_jw())
    text = bmw.dumps_square(sq)
    back = bmw.loads_square(text)
    assert back.squares == sq.squares
    assert back.sigma_a == sq.sigma_a


def test_thin_presentation_rejected_for_links():
    # one A-involution and one X-involution: a single square, links K_{1,1}
    warns = []
    p = bmw.BMWPresentation(['a'], ['x'], {'a', 'x'}, ['a x a x'])
    sq = bmw.square_complex_of(p, warn=warns.append)
    assert sq.degree() == (1, 1)
    assert len(sq.squares) == 1
    assert warns and 'not firm' in warns[0]


def test_incomplete_rules_rejected():
    with pytest.raises(bmw.BMWError):
        bmw.BMWPresentation(['a', 'b'], ['x'], {'a', 'b', 'x'}, ['a x a x'])
