import dataclasses
import random
from fractions import Fraction

import pytest

from census.service import build_census, class_counts, constant_C, get_census
from core.errors import BudgetExceeded, CensusUnavailable
from core.settings import get_settings
from gauss.service import enumerate_gauss_words, word_to_map
from providers.impl.jobs_process_pool import ProcessPoolJobRunner
from ribbon.service import canonical_form, map_from_key, trace_boundaries


def _with_census(**changes):
    s = get_settings()
    return dataclasses.replace(s, census=dataclasses.replace(s.census, **changes))


def _face_degrees(cls):
    faces = trace_boundaries(map_from_key(cls.canonical_key)).faces
    return tuple(sorted((len(f) for f in faces), reverse=True))


def _signature(census):
    return [(c.canonical_key, c.h, c.b, c.aut_order, c.baut, c.witness) for c in census.classes]


def test_census_k0_is_the_annulus():
    census = build_census(0)
    assert len(census.classes) == 1
    c = census.classes[0]
    assert c.canonical_key == b""
    assert (c.h, c.b, c.baut_order) == (0, 2, 2)
    assert c.witness.to_text() == "@"


def test_census_k1_is_the_figure_eight():
    census = build_census(1)
    assert len(census.classes) == 1
    c = census.classes[0]
    assert (c.k, c.h, c.b, c.aut_order, c.baut_order) == (1, 0, 3, 2, 2)


def test_census_k2():
    census = build_census(2)
    assert class_counts(census) == {0: 2, 1: 1}

    planar = census.genus_classes(0)
    assert sorted(_face_degrees(c) for c in planar) == [(3, 3, 1, 1), (4, 2, 1, 1)]
    assert all(c.baut_order == 2 for c in planar)

    (torus,) = census.genus_classes(1)
    assert torus.b == 2
    assert torus.baut_order == 1
    assert _face_degrees(torus) == (6, 2)


def test_constants_for_small_k():
    assert constant_C(0, 0, build_census(0)) == Fraction(1, 2)
    assert constant_C(1, 0, build_census(1)) == Fraction(1, 2)
    assert constant_C(1, 1, build_census(1)) == 0
    assert constant_C(1, 5, build_census(1)) == 0

    c2 = build_census(2)
    assert constant_C(2, 0, c2) == 1
    assert constant_C(2, 1, c2) == 1

    c3 = build_census(3)
    assert constant_C(3, 0, c3) == Fraction(7, 2)


def test_constant_uses_the_cached_census():
    assert constant_C(1) == Fraction(1, 2)
    assert get_census(1) is get_census(1)


@pytest.mark.parametrize("k", [2, 3])
def test_census_is_independent_of_word_order(k):
    words = list(enumerate_gauss_words(k))
    random.Random(k).shuffle(words)
    assert _signature(build_census(k, words=words)) == _signature(build_census(k))


def test_census_is_independent_of_sharding():
    coarse = build_census(3, settings=_with_census(shard_depth=1))
    fine = build_census(3, settings=_with_census(shard_depth=5))
    assert _signature(coarse) == _signature(fine)


def test_process_pool_matches_inline():
    inline = build_census(3)
    pooled = build_census(3, runner=ProcessPoolJobRunner(workers=2))
    assert _signature(pooled) == _signature(inline)


def _check_structure(census):
    k = census.k
    keys = set()
    for c in census.classes:
        assert c.b == k + 2 - 2 * c.h
        assert k + 1 - 2 * c.h >= 0
        assert c.canonical_key not in keys
        keys.add(c.canonical_key)
        assert canonical_form(word_to_map(c.witness)) == c.canonical_key
        if k:
            assert (4 * k) % c.aut_order == 0
            assert c.aut_order % c.baut_order == 0


@pytest.mark.parametrize("k", [0, 1, 2, 3, 4, 5, 6])
def test_census_structure(k):
    _check_structure(build_census(k))


def test_census_respects_the_word_budget():
    with pytest.raises(BudgetExceeded):
        build_census(3, settings=_with_census(word_budget=100))


def test_census_above_cap_is_unavailable(monkeypatch):
    monkeypatch.setenv("CURVES_MAX_K", "2")
    get_settings.cache_clear()

    with pytest.raises(CensusUnavailable):
        get_census(3)
    assert len(get_census(2).classes) == 3


def test_words_of_the_wrong_rank_are_rejected():
    with pytest.raises(ValueError):
        build_census(2, words=list(enumerate_gauss_words(1)))
