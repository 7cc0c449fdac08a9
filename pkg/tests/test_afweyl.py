import pytest

from afweyl import AffineRoot, affine_group
from rootsys import build


def test_a1_lengths_and_omega():
    rs = build('A', 1)
    aff = affine_group(rs)
    s = rs.simple_reflection(0)
    assert aff.length(aff.translation((1,))) == 1
    assert aff.length(aff.translation((2,))) == 2
    assert aff.omega[1] == aff.element((1,), s)
    assert aff.length(aff.omega_element(1)) == 0
    with pytest.raises(KeyError):
        aff.omega_element(2)
    assert aff.reduced_word(aff.translation((1,))) == (1, [1])


def test_simple_reflections_are_involutions():
    aff = affine_group(build('B', 2))
    for i in range(3):
        s = aff.simple_reflection(i)
        assert aff.multiply(s, s) == aff.e
        assert aff.length(s) == 1


@pytest.mark.parametrize('kind,rank', [('A', 2), ('B', 2)])
def test_inverse(kind, rank):
    aff = affine_group(build(kind, rank))
    for w in aff.ball(3):
        assert aff.multiply(w, aff.inverse(w)) == aff.e


@pytest.mark.parametrize('kind,rank', [('A', 1), ('A', 2), ('B', 2)])
def test_length_counts_inversions(kind, rank):
    aff = affine_group(build(kind, rank))
    for w in aff.ball(3):
        assert aff.length(w) == len(aff.brute_force_inversions(w))


@pytest.mark.parametrize('kind,rank', [('A', 2), ('B', 2), ('G', 2)])
def test_reduced_words_rebuild_the_element(kind, rank):
    aff = affine_group(build(kind, rank))
    for w in aff.ball(3):
        for prefer in ('smallest', 'largest'):
            r, word = aff.reduced_word(w, prefer=prefer)
            assert len(word) == aff.length(w)
            assert aff.from_word(r, word) == w


def test_associated_roots_are_the_inversions():
    aff = affine_group(build('A', 2))
    w = aff.translation((1, 1))
    r, word = aff.reduced_word(w)
    roots = aff.associated_root_sequence(w, word)
    assert all(a.is_positive() for a in roots)
    assert set(roots) == set(aff.brute_force_inversions(w))
    with pytest.raises(ValueError):
        aff.associated_root_sequence(w, word[:-1])


def test_omega_permutes_affine_simple_roots():
    aff = affine_group(build('A', 2))
    for r in (1, 2):
        perm = aff.omega_permutation(r)
        assert sorted(perm.values()) == [0, 1, 2]
        assert all(perm[i] != i for i in perm)
    assert affine_group(build('G', 2)).omega == {0: affine_group(build('G', 2)).e}


def test_affine_root_sign():
    assert AffineRoot((-1, 0), 1).is_positive()
    assert not AffineRoot((1, 0), -1).is_positive()
    assert (-AffineRoot((1, 1), 0)) == AffineRoot((-1, -1), 0)


def test_associated_roots_reject_a_word_for_another_element():
    aff = affine_group(build('A', 1))
    w = aff.translation((2,))
    r, word = aff.reduced_word(w)
    assert len(word) == 2
    with pytest.raises(ValueError):
        aff.associated_root_sequence(w, list(reversed(word)))


@pytest.mark.parametrize('kind,rank', [('A', 2), ('B', 2)])
def test_translation_length_depends_on_dominant_coweight(kind, rank):
    rs = build(kind, rank)
    aff = affine_group(rs)
    for y in [(1, 0), (0, 1), (1, 1), (2, -1), (-1, -1)]:
        assert aff.length(aff.translation(y)) == aff.length(aff.translation(rs.dominant_coweight(y)))


@pytest.mark.parametrize('kind,rank', [('A', 2), ('B', 2), ('G', 2)])
def test_length_adds_over_dominant_translations(kind, rank):
    rs = build(kind, rank)
    aff = affine_group(rs)
    for lam in [(1, 0), (0, 1), (1, 1)]:
        t_len = aff.length(aff.translation(lam))
        for w in rs.weyl_group():
            # w tau(lam) = tau(w lam) w
            assert aff.length(aff.element(w.coweight(lam), w)) == w.length + t_len


@pytest.mark.parametrize('kind,rank', [('A', 1), ('A', 2), ('B', 2)])
def test_descents_change_length_by_one(kind, rank):
    aff = affine_group(build(kind, rank))
    for w in aff.ball(3):
        for i in range(rank + 1):
            ws = aff.multiply(w, aff.simple_reflection(i))
            descent = not aff.act_on_affine_root(w, aff.simple_root(i)).is_positive()
            assert aff.length(ws) == aff.length(w) + (-1 if descent else 1)
