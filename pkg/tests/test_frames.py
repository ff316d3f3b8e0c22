import random

import pytest

from hurwitz_braid.braid_core import (
    BraidWord,
    concat,
    conjugate,
    delta_squared_factorization,
    delta_squared_indices,
    delta_squared_word,
    generator,
)
from hurwitz_braid.errors import NotEquivalent
from hurwitz_braid.frames import (
    Frame,
    FrameFactorization,
    conj_certificate,
    frame_elements,
    main_theorem_certificate,
    one_conj_certificate,
    pi2_shift_certificate,
    pi_shift_certificate,
    realize,
    same_frame_certificate,
    standard_pattern,
)
from hurwitz_braid.garside import equal
from hurwitz_braid.hurwitz import Certificate, Factorization, R, replay, verify_certificate

from oracles import random_rewrite, random_word


def gens(n, indices, b=None):
    fr = Frame(n, BraidWord(n, ()) if b is None else b)
    return realize(FrameFactorization(fr, tuple(indices)))


def test_frame_elements_examples():
    assert [w.letters for w in frame_elements(Frame.standard(4))] == [(1,), (2,), (3,)]
    n = 5
    fr = Frame(n, BraidWord(n, (n - 1,)))
    assert frame_elements(fr)[n - 3].letters == (-(n - 1), n - 2, n - 1)
    assert equal(frame_elements(fr)[0], generator(n, 1))


@pytest.mark.parametrize("seed", range(10))
def test_frame_relations_hold_for_random_conjugators(seed):
    rng = random.Random(seed)
    n = rng.randint(3, 6)
    els = frame_elements(Frame(n, random_word(rng, n, 6)))
    for i, a in enumerate(els):
        for j, b in enumerate(els):
            if abs(i - j) > 1:
                assert equal(concat(a, b), concat(b, a))
            elif abs(i - j) == 1:
                assert equal(concat(a, b, a), concat(b, a, b))


def test_realize_examples():
    assert realize(standard_pattern(Frame.standard(4))) == delta_squared_factorization(4)
    assert len(realize(FrameFactorization(Frame(3, BraidWord(3, (1, -2))), ()))) == 0
    rng = random.Random(1)
    for _ in range(10):
        n = rng.randint(2, 5)
        f = realize(standard_pattern(Frame(n, random_word(rng, n, 6))))
        assert equal(f.product(), delta_squared_word(n))


def test_frame_factorization_json():
    ff = FrameFactorization(Frame(3, BraidWord(3, (1, -2))), (1, 2, 1, 2, 1, 2))
    data = ff.to_json()
    assert data == {"n": 3, "conjugator": [1, -2], "indices": [1, 2, 1, 2, 1, 2]}
    assert FrameFactorization.from_json(data) == ff


def test_same_frame_examples():
    std = Frame.standard(3)
    a = FrameFactorization(std, (1, 2, 1, 2, 1, 2))
    b = FrameFactorization(std, (1, 2, 1, 1, 2, 1))
    assert len(same_frame_certificate(a, a)) == 0
    c = same_frame_certificate(a, b)
    assert len(c) > 0 and verify_certificate(realize(a), realize(b), c)
    rng = random.Random(4)
    for _ in range(5):
        fr = Frame(3, random_word(rng, 3, 5))
        a2, b2 = FrameFactorization(fr, a.indices), FrameFactorization(fr, b.indices)
        assert same_frame_certificate(a2, b2) == c
        assert verify_certificate(realize(a2), realize(b2), c)


def test_same_frame_rejects_non_full_twist():
    std = Frame.standard(3)
    with pytest.raises(NotEquivalent):
        same_frame_certificate(standard_pattern(std), FrameFactorization(std, (1, 1, 1, 2, 1, 2)))


def test_pi_shift_examples():
    assert pi_shift_certificate(2, 3).moves == (R(2), R(1))
    for n, i in [(4, 3), (4, 2)]:
        pi = tuple(range(1, n))
        assert verify_certificate(gens(n, (i,) + pi), gens(n, pi + (i - 1,)), pi_shift_certificate(i, n))
    with pytest.raises(ValueError):
        pi_shift_certificate(1, 4)


def test_pi2_shift_examples():
    f = gens(2, (1, 1, 1))
    assert verify_certificate(f, f, pi2_shift_certificate(2))
    assert verify_certificate(gens(3, (1, 1, 2, 1, 2)), gens(3, (1, 2, 1, 2, 2)), pi2_shift_certificate(3))
    assert verify_certificate(gens(4, (1, 1, 2, 3, 1, 2, 3)), gens(4, (1, 2, 3, 1, 2, 3, 3)), pi2_shift_certificate(4))


def _one_conj_ok(j, n, cert):
    start = delta_squared_factorization(n)
    target = realize(standard_pattern(Frame(n, generator(n, j))))
    return verify_certificate(start, target, cert)


@pytest.mark.parametrize("n, j", [(3, 2), (3, 1), (5, 2), (6, 3)])
def test_one_conj_examples(n, j):
    assert _one_conj_ok(j, n, one_conj_certificate(j, n))


def test_one_conj_unchecked_build_matches_checked():
    assert one_conj_certificate(2, 5, check=False) == one_conj_certificate(2, 5)


def test_conj_examples():
    n = 4
    assert len(conj_certificate(BraidWord(n, ()))) == 0
    for j in range(1, n):
        assert conj_certificate(generator(n, j)) == one_conj_certificate(j, n)
    b = BraidWord(n, (-2,))
    c = conj_certificate(b)
    assert verify_certificate(delta_squared_factorization(n), realize(standard_pattern(Frame(n, b))), c)


def test_conj_composition_order():
    # the certificate for y1 y2 runs the y2 step first
    n = 4
    a = one_conj_certificate(1, n)
    b = one_conj_certificate(3, n)
    assert conj_certificate(BraidWord(n, (1, 3))).moves == b.moves + a.moves


def test_main_theorem_examples():
    std = Frame.standard(3)
    a = FrameFactorization(std, delta_squared_indices(3))
    b = FrameFactorization(std, (2, 1, 2, 1, 2, 1))
    assert main_theorem_certificate(a, b) == same_frame_certificate(a, b)
    fr2 = Frame(3, BraidWord(3, (1, 2)))
    ff2 = standard_pattern(fr2)
    c = main_theorem_certificate(a, ff2)
    assert verify_certificate(realize(a), realize(ff2), c)


def test_main_theorem_random_n4():
    rng = random.Random(9)
    base = delta_squared_indices(4)
    for _ in range(3):
        ff1 = FrameFactorization(Frame(4, random_word(rng, 4, 3)), random_rewrite(rng, base, 30))
        ff2 = FrameFactorization(Frame(4, random_word(rng, 4, 3)), random_rewrite(rng, base, 30))
        c = main_theorem_certificate(ff1, ff2)
        assert verify_certificate(realize(ff1), realize(ff2), c)
        assert verify_certificate(realize(ff2), realize(ff1), c.reversed())


def test_main_theorem_rejects_non_full_twist():
    std = Frame.standard(3)
    with pytest.raises(NotEquivalent):
        main_theorem_certificate(standard_pattern(std), FrameFactorization(std, (1, 1, 1, 1, 1, 1)))


def test_equal_frames_with_different_conjugators():
    n = 4
    d2 = delta_squared_word(n)
    fr1 = Frame(n, BraidWord(n, (1, -2)))
    fr2 = Frame(n, concat(d2, fr1.conjugator))
    assert fr1.same_as(fr2) and fr1 != fr2
