"""Smoke tests for the python bindings."""

import pytest

import gsisemigroups as g


def test_semigroup_basics():
    s = g.NumericalSemigroup([6, 14, 22, 23])
    assert s.minimal_generators == [6, 14, 22, 23]
    assert s.frobenius == 39
    assert s.genus == 21
    assert s.multiplicity == 6
    assert 24 in s
    assert 5 not in s
    assert repr(s) == "⟨6,14,22,23⟩"

    n = g.naturals()
    assert n.frobenius == -1
    assert n.gaps() == []

    assert g.NumericalSemigroup([4, 6, 2, 3]) == g.NumericalSemigroup([2, 3])


def test_errors():
    with pytest.raises(g.SemigroupError):
        g.NumericalSemigroup([4, 6])
    with pytest.raises(g.SemigroupError):
        g.frobenius_two_generators(4, 6)


def test_classification():
    r = g.classify(g.NumericalSemigroup([6, 14, 22, 23]))
    assert (r.si, r.gsi, r.telescopic, r.free, r.complete_intersection) == (
        False,
        True,
        False,
        False,
        False,
    )
    assert r.gsi_witness.base.minimal_generators == [3, 7, 11]
    assert r.gsi_witness.d == 2
    assert r.gsi_witness.gamma == 23


def test_gap_partition():
    spec = g.make_gluing_spec(g.NumericalSemigroup([2, 7]), 2, 15)
    assert spec.is_gsi
    part = g.gsi_gaps(spec)
    assert part.a_blocks == [[17, 21, 25]]
    assert g.gsi_frobenius(spec) == 25
    assert g.gsi_genus(spec) == 13
    assert part.flatten() == g.glue_spec(spec).gaps()


def test_catalog():
    catalog = g.enumerate_gsi_up_to(15)
    assert catalog.total() == 18
    assert [e.gens for e in catalog.entries[15]] == [[2, 17], [4, 6, 13], [6, 8, 10, 11]]
    stats = g.catalog_stats(catalog)
    assert stats.total == 18


def test_even_search():
    assert g.find_gsi_with_even_frobenius(42) is None
    w = g.find_gsi_with_even_frobenius(4620)
    assert w.d == 13 and w.gamma == 372
    assert g.gsi_frobenius(w) == 4620
    assert g.s_family(10).minimal_generators == [4, 7, 9]
    assert g.evens_from_seed(g.NumericalSemigroup([3, 4, 5]), 3, 50) == [38, 40, 44, 46, 50]


def test_seed_lists():
    lists = g.semigroups_with_frobenius(4)
    assert [s.minimal_generators for s in lists] == [[3, 5, 7], [5, 6, 7, 8, 9]]
