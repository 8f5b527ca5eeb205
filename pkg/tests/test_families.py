import random

import pytest

import rainbowdom as rd
from rainbowdom import Family, KOutOfRange, ParameterTooSmall, UnsupportedK
from conftest import random_cayley_cubic_spec


def test_formula_prism_examples():
    r = rd.formula_prism(6, 4)
    assert r.value == 8 and r.case_tag == "m ≡ 0 (mod 6)"
    assert r.source == "prism-closed-form"
    assert rd.formula_prism(10, 4).value == 15
    assert rd.formula_prism(7, 5).value == 12
    assert rd.formula_prism(3, 2).value == 3
    assert rd.formula_prism(6, 1).value == 4
    assert rd.formula_prism(8, 9).value == 16
    with pytest.raises(ParameterTooSmall):
        rd.formula_prism(2, 3)


def test_formula_mobius_examples():
    assert rd.formula_mobius(3, 3).value == 3
    assert rd.formula_mobius(4, 1).value == 3
    assert rd.formula_mobius(2, 3).value == 3
    assert rd.formula_mobius(9, 4).value == 12
    assert rd.formula_mobius(8, 5).value == 14
    with pytest.raises(ParameterTooSmall):
        rd.formula_mobius(1, 3)


def test_formula_cycle_examples():
    assert rd.formula_cycle(6, 2).value == 4
    assert rd.formula_cycle(6, 3).value == 5
    assert rd.formula_cycle(5, 7).value == 5
    with pytest.raises(UnsupportedK):
        rd.formula_cycle(6, 1)
    with pytest.raises(ParameterTooSmall):
        rd.formula_cycle(2, 2)


def test_formula_sandwich_and_monotone():
    for m in range(3, 31):
        n = 2 * m
        prev_p = prev_m = None
        for k in range(1, 8):
            for fn, prev in ((rd.formula_prism, prev_p), (rd.formula_mobius, prev_m)):
                v = fn(m, k).value
                assert rd.lower_bound_regular(n, 3, k) <= v <= n
                if prev is not None:
                    assert v <= rd.upper_bound_monotone(prev, k - 1, k)
            prev_p = rd.formula_prism(m, k).value
            prev_m = rd.formula_mobius(m, k).value


def test_construct_prism_examples():
    f = rd.construct_prism_function(6, 4)
    assert rd.weight(f) == 8
    assert rd.verify_krdf(rd.prism(6), f).valid
    assert rd.weight(rd.construct_prism_function(12, 5)) == 20
    assert rd.weight(rd.construct_prism_function(10, 4)) == 15
    with pytest.raises(KOutOfRange):
        rd.construct_prism_function(6, 3)
    with pytest.raises(ParameterTooSmall):
        rd.construct_prism_function(2, 4)


def test_construct_mobius_examples():
    assert rd.weight(rd.construct_mobius_function(9, 3)) == 9
    assert rd.weight(rd.construct_mobius_function(9, 4)) == 12
    assert rd.weight(rd.construct_mobius_function(8, 5)) == 14
    with pytest.raises(KOutOfRange):
        rd.construct_mobius_function(5, 2)


def test_constructions_verify_sampled():
    for m in range(3, 20):
        for k in (4, 5):
            f = rd.construct_prism_function(m, k)
            assert rd.verify_krdf(rd.prism(m), f).valid
            assert rd.weight(f) == rd.formula_prism(m, k).value
    for m in range(2, 20):
        for k in (3, 4, 5):
            f = rd.construct_mobius_function(m, k)
            assert rd.verify_krdf(rd.mobius_ladder(m), f).valid
            assert rd.weight(f) == rd.formula_mobius(m, k).value


def test_construct_kdd():
    f = rd.construct_kdd_function(3, 3)
    assert [sorted(cs) for cs in f.colors[:3]] == [[1], [2], [3]]
    assert rd.weight(f) == 3
    f = rd.construct_kdd_function(3, 4)
    assert [sorted(cs) for cs in f.colors[:3]] == [[1, 4], [2], [3]]
    assert rd.weight(f) == 4
    f = rd.construct_kdd_function(2, 4)
    assert [sorted(cs) for cs in f.colors[:2]] == [[1, 3], [2, 4]]
    assert rd.weight(f) == 4
    with pytest.raises(KOutOfRange):
        rd.construct_kdd_function(3, 7)
    with pytest.raises(KOutOfRange):
        rd.construct_kdd_function(3, 2)


def test_classifier_examples():
    spec = rd.AbelianGroupSpec((6,), (1, 5, 3))
    cls = rd.classify_cubic_abelian_cayley(spec)
    assert cls.kind is Family.MOBIUS and cls.m == 3
    spec = rd.AbelianGroupSpec((6,), (2, 4, 3))
    cls = rd.classify_cubic_abelian_cayley(spec)
    assert cls.kind is Family.PRISM and cls.m == 3
    spec = rd.AbelianGroupSpec((2, 2, 2), ((1, 0, 0), (0, 1, 0), (0, 0, 1)))
    cls = rd.classify_cubic_abelian_cayley(spec)
    assert cls.kind is Family.PRISM and cls.m == 4


def test_classifier_mapping_verified():
    rng = random.Random(123)
    for _ in range(6):
        spec = random_cayley_cubic_spec(rng, max_order=16)
        g = rd.cayley_abelian(spec)
        cls = rd.classify_cubic_abelian_cayley(spec)
        target = rd.prism(cls.m) if cls.kind is Family.PRISM else rd.mobius_ladder(cls.m)
        mapped = {tuple(sorted((cls.mapping[a], cls.mapping[b]))) for a, b in g.edges}
        assert mapped == set(target.edges)


def test_classifier_errors():
    with pytest.raises(rd.NotCubic):
        rd.classify_cubic_abelian_cayley(rd.AbelianGroupSpec((5,), (1, 4)))
    with pytest.raises(rd.NotConnected):
        rd.classify_cubic_abelian_cayley(rd.AbelianGroupSpec((8,), (2, 6, 4)))


def test_classifier_roundtrip_on_generated_ladders():
    # prisms and Moebius ladders expressed as Cayley graphs classify back
    for m in (3, 4, 5, 6):
        spec = rd.AbelianGroupSpec((m, 2), ((1, 0), (m - 1, 0), (0, 1)))
        cls = rd.classify_cubic_abelian_cayley(spec)
        assert cls.kind is Family.PRISM and cls.m == m
    for m in (2, 3, 4, 5):
        spec = rd.AbelianGroupSpec((2 * m,), (1, 2 * m - 1, m))
        cls = rd.classify_cubic_abelian_cayley(spec)
        assert cls.kind is Family.MOBIUS and cls.m == m


def test_rdr_cayley_catalog():
    assert rd.rdr_cayley_catalog(6) == (True, False)
    assert rd.rdr_cayley_catalog(9) == (False, True)
    assert rd.rdr_cayley_catalog(5) == (False, False)
    for m in range(3, 11):
        cat = rd.rdr_cayley_catalog(m)
        assert cat == (rd.is_rdr(rd.prism(m)), rd.is_rdr(rd.mobius_ladder(m)))
