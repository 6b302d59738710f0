"""Tests for the existence catalog and the conjecture probe."""
from __future__ import annotations

from math import comb

import pytest

from nutcirc.circulant import is_nut_kernel, is_nut_spectral
from nutcirc.errors import ParameterError
from nutcirc.search import catalog, conjecture_probe, enumerate_sets


def test_enumerate_counts_unbalanced():
    sets = list(enumerate_sets(14, 8, balanced_only=False))
    assert len(sets) == comb(6, 4) == 15
    assert sets == sorted(sets, key=lambda g: g.elements)


def test_enumerate_counts_balanced():
    sets = list(enumerate_sets(8, 4, balanced_only=True))
    assert [g.elements for g in sets] == [(1, 2), (2, 3)]
    assert len(list(enumerate_sets(16, 8, balanced_only=True))) == 18


def test_enumerate_validation():
    with pytest.raises(ParameterError):
        list(enumerate_sets(14, 7))
    with pytest.raises(ParameterError):
        list(enumerate_sets(8, 8))
    with pytest.raises(ParameterError):
        list(enumerate_sets(9, 4))


def test_catalog_degree_four():
    entries = {e.n: e for e in catalog(4, 6, 20)}
    assert not entries[6].exists
    for n in range(8, 21, 2):
        assert entries[n].exists, n
        assert entries[n].witness is not None
        assert entries[n].sets_enumerated == comb(n // 2 - 1, 2)


def test_catalog_degree_six_is_empty():
    assert not any(e.exists for e in catalog(6, 8, 16))


def test_catalog_witnesses_are_lexicographically_least_and_valid():
    for entry in catalog(8, 14, 20):
        if not entry.exists:
            continue
        witness = entry.witness
        assert is_nut_spectral(witness).is_nut
        assert is_nut_kernel(witness).is_nut
        for g in enumerate_sets(entry.n, entry.d):
            if g.elements == witness.elements:
                break
            assert not is_nut_spectral(g).is_nut


def test_catalog_deterministic_across_jobs():
    solo = catalog(8, 12, 18, jobs=1)
    multi = catalog(8, 12, 18, jobs=3)
    assert solo == multi


def test_catalog_balanced_pruning_preserves_existence():
    for d in (2, 4, 6, 8):
        full = catalog(d, 6, 20, balanced_only=False)
        pruned = catalog(d, 6, 20, balanced_only=True)
        assert [e.exists for e in full] == [e.exists for e in pruned]
        assert [e.witness for e in full] == [e.witness for e in pruned]


def test_catalog_capacity_marks_skipped():
    entries = catalog(8, 20, 24, capacity=10)
    assert all(e.skipped for e in entries)
    assert all(not e.exists and e.witness is None for e in entries)


def test_catalog_validation():
    with pytest.raises(ParameterError):
        catalog(8, 20, 10)
    with pytest.raises(ParameterError):
        catalog(7, 10, 20)
    with pytest.raises(ParameterError):
        catalog(8, 10, 20, jobs=0)


def test_catalog_unrealizable_degree_reports_nonexistence():
    entries = {e.n: e for e in catalog(8, 8, 12)}
    assert not entries[8].exists and entries[8].sets_enumerated == 0


def test_conjecture_probe_t4():
    entries = conjecture_probe([4], 16)
    by_n = {e.n: e for e in entries}
    assert sorted(by_n) == [24, 26, 28, 30, 32]
    for n in (24, 28, 32):
        entry = by_n[n]
        assert entry.mode == "search"
        assert entry.found and entry.witness is not None
        assert is_nut_spectral(entry.witness).is_nut
    for n in (26, 30):
        entry = by_n[n]
        assert entry.mode == "family-control"
        assert entry.found and entry.witness is not None
        assert is_nut_spectral(entry.witness).is_nut


def test_conjecture_probe_empty_and_validation():
    assert conjecture_probe([], 16) == []
    with pytest.raises(ParameterError):
        conjecture_probe([3], 16)
    with pytest.raises(ParameterError):
        conjecture_probe([2], 16)


def test_conjecture_probe_capacity_skip():
    entries = conjecture_probe([4], 8, capacity=5)
    searched = [e for e in entries if e.mode == "search"]
    assert searched and all(e.skipped and not e.found for e in searched)


def test_degree_constraint_sweep():
    # Over every even order up to 24 and every realizable degree: a nut
    # verdict forces 4 | d, and degree 4t never occurs at order 4t + 2.
    for n in range(4, 25, 2):
        for k in range(0, n // 2):
            d = 2 * k
            for g in enumerate_sets(n, d):
                if is_nut_spectral(g).is_nut:
                    assert d % 4 == 0, (n, d, g.elements)
                    assert n != d + 2, (n, d, g.elements)
