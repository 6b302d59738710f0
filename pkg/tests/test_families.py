"""Tests for family construction, family polynomials, and residue tables."""
from __future__ import annotations

import shutil

import pytest

from nutcirc.circulant import is_nut_kernel, is_nut_spectral, parity_balanced
from nutcirc.errors import ConfigurationError, ParameterError
from nutcirc.families import (
    FamilyId,
    FamilyPolyId,
    appendix_golden_check,
    build_family,
    exponent_set,
    family_nut_check,
    family_poly,
    format_table_line,
    generate_table,
    golden_data_dir,
    unique_remainder_exists,
)
from nutcirc.polyalg import SparsePoly, sparse_to_text


def test_family_id_validation_messages():
    with pytest.raises(ParameterError, match="odd t"):
        FamilyId("dprime", 2, 16)
    with pytest.raises(ParameterError, match="4 \\| n"):
        FamilyId("dprime", 3, 18)
    with pytest.raises(ParameterError, match="4t\\+4"):
        FamilyId("dprime", 3, 12)
    with pytest.raises(ParameterError, match="2 \\(mod 4\\)"):
        FamilyId("ddprime", 2, 16)
    with pytest.raises(ParameterError, match="4t\\+6"):
        FamilyId("ddprime", 2, 10)
    with pytest.raises(ParameterError, match="odd t >= 3"):
        FamilyId("ds", 1, 16)
    with pytest.raises(ParameterError, match="1 \\(mod 10\\)"):
        FamilyId("ds", 11, 48)
    with pytest.raises(ParameterError, match="15 \\(mod 18\\)"):
        FamilyId("ds", 15, 64)
    with pytest.raises(ParameterError, match="unknown family variant"):
        FamilyId("dsx", 3, 16)


def test_build_family_examples():
    assert build_family(FamilyId("dprime", 3, 16)).elements == (1, 2, 4, 5, 6, 7)
    assert build_family(FamilyId("dprime", 1, 8)).elements == (2, 3)
    assert build_family(FamilyId("ddprime", 2, 14)).elements == (1, 4, 5, 6)
    assert build_family(FamilyId("ds", 3, 16)).elements == (1, 2, 4, 5, 6, 7)


def test_build_family_size_and_balance():
    ids = [FamilyId("dprime", t, n) for t in (1, 3, 5) for n in range(4 * t + 4, 4 * t + 29, 4)]
    ids += [FamilyId("ddprime", t, n) for t in (1, 2, 3, 4) for n in range(4 * t + 6, 4 * t + 31, 4)]
    ids += [FamilyId("ds", t, n) for t in (3, 5) for n in range(4 * t + 4, 4 * t + 21, 2)]
    for fid in ids:
        g = build_family(fid)
        assert len(g.elements) == 2 * fid.t
        assert parity_balanced(g)


def test_family_poly_examples():
    assert family_poly(FamilyPolyId("q", 3)) == SparsePoly(
        {5: 2, 4: 1, 3: -1, 2: 1, 1: -1, 0: -2}
    )
    assert family_poly(FamilyPolyId("u", 2)) == SparsePoly(
        {8: 1, 7: 2, 5: -2, 3: 2, 1: -2, 0: -1}
    )
    assert family_poly(FamilyPolyId("w", 2)) == SparsePoly(
        {8: -1, 7: 2, 5: -2, 3: 2, 1: -2, 0: 1}
    )


def test_family_poly_validation():
    with pytest.raises(ParameterError):
        FamilyPolyId("q", 4)
    with pytest.raises(ParameterError):
        FamilyPolyId("r", 1)
    with pytest.raises(ParameterError):
        FamilyPolyId("u", 1)
    with pytest.raises(ParameterError):
        FamilyPolyId("z", 3)


def test_family_polys_have_six_terms_and_vanish_at_plus_minus_one():
    pids = [FamilyPolyId(k, t) for k in ("q", "r") for t in range(3, 16, 2)]
    pids += [FamilyPolyId(k, t) for k in ("u", "w") for t in range(2, 11)]
    for pid in pids:
        poly = family_poly(pid)
        assert poly.term_count() == 6
        assert len(exponent_set(pid)) == 6
        assert poly.evaluate(1) == 0
        assert poly.evaluate(-1) == 0


def test_exponent_set_examples():
    assert exponent_set(FamilyPolyId("q", 3)) == {0, 1, 2, 3, 4, 5}
    assert exponent_set(FamilyPolyId("u", 2)) == {0, 1, 3, 5, 7, 8}
    assert exponent_set(FamilyPolyId("q", 5)) == {0, 3, 4, 5, 6, 9}


def test_unique_remainder_examples():
    assert unique_remainder_exists(FamilyPolyId("q", 3), 5)
    assert unique_remainder_exists(FamilyPolyId("u", 2), 7)
    # L_7 = {0, 5, 6, 7, 8, 13} has residues {0,0,1,2,3,3} mod 5.
    assert unique_remainder_exists(FamilyPolyId("q", 7), 5)


def test_unique_remainder_validation():
    with pytest.raises(ParameterError):
        unique_remainder_exists(FamilyPolyId("q", 3), 3)
    with pytest.raises(ParameterError):
        unique_remainder_exists(FamilyPolyId("u", 2), 5)
    with pytest.raises(ParameterError):
        unique_remainder_exists(FamilyPolyId("q", 3), 9)


def test_unique_remainder_grid():
    for t in range(3, 26, 2):
        for kind in ("q", "r"):
            for p in (5, 7, 11, 13):
                assert unique_remainder_exists(FamilyPolyId(kind, t), p)
    for t in range(2, 26):
        for kind in ("u", "w"):
            for p in (7, 11, 13):
                assert unique_remainder_exists(FamilyPolyId(kind, t), p)


def test_family_nut_check_examples():
    assert family_nut_check(FamilyId("dprime", 3, 16)).is_nut
    assert family_nut_check(FamilyId("ddprime", 2, 14)).is_nut
    assert family_nut_check(FamilyId("dprime", 1, 8)).is_nut
    with pytest.raises(ParameterError):
        family_nut_check(FamilyId("ds", 3, 16))


def test_prior_family_grid_is_spectrally_nut():
    # t in {3, 5, 7} clears both congruence exclusions; every even order from
    # 4t+4 to 4t+24 must give a nut graph.
    for t in (3, 5, 7):
        for n in range(4 * t + 4, 4 * t + 25, 2):
            g = build_family(FamilyId("ds", t, n))
            assert is_nut_spectral(g).is_nut, (t, n)
    assert is_nut_kernel(build_family(FamilyId("ds", 3, 20))).is_nut


def test_family_nut_check_agrees_with_both_routes_small_grid():
    ids = [FamilyId("dprime", t, n) for t in (1, 3) for n in range(4 * t + 4, 4 * t + 21, 4)]
    ids += [FamilyId("ddprime", t, n) for t in (1, 2, 3) for n in range(4 * t + 6, 4 * t + 23, 4)]
    for fid in ids:
        g = build_family(fid)
        family_verdict = family_nut_check(fid)
        assert family_verdict.is_nut
        assert is_nut_spectral(g).is_nut
        assert is_nut_kernel(g).is_nut


def test_generate_table_known_rows():
    q3 = {row.residue: row for row in generate_table("q", 3)}
    assert q3[0].reduced == SparsePoly({2: 3, 0: -3})
    assert q3[0].remainder.coeffs == (-6, -3)

    r5 = {row.residue: row for row in generate_table("r", 5)}
    assert r5[2].reduced == SparsePoly({0: -1, 1: 3, 2: -3, 3: 1})
    assert r5[2].remainder.coeffs == (-1, 3, -3, 1)

    u6 = {row.residue: row for row in generate_table("u", 6)}
    assert u6[1].reduced == SparsePoly({0: 1, 4: -1})
    assert u6[1].remainder.coeffs == (1, 1)

    w30 = {row.residue: row for row in generate_table("w", 30)}
    assert w30[29].remainder.coeffs == (3, -2, 0, -1, -2, -2, 1, -1)


def test_generate_table_validation():
    with pytest.raises(ParameterError):
        generate_table("q", 7)
    with pytest.raises(ParameterError):
        generate_table("x", 3)


def test_all_table_remainders_nonzero():
    for kind in ("q", "r", "u", "w"):
        for modulus in (3, 5, 6, 10, 15, 30):
            for row in generate_table(kind, modulus):
                assert not row.remainder.is_zero(), (kind, modulus, row.residue)


def test_table_rows_depend_only_on_residue_class():
    # Spot-check a second representative of the same class.
    from nutcirc.families import _family_terms
    from nutcirc.polyalg import reduce_mod_xb

    for kind, modulus, residue, rep2 in (("q", 6, 0, 12), ("u", 10, 3, 13), ("w", 5, 2, 7)):
        row = {r.residue: r for r in generate_table(kind, modulus)}[residue]
        again = reduce_mod_xb(SparsePoly(_family_terms(kind, rep2)), modulus)
        assert again == row.reduced


def test_appendix_golden_check_passes():
    report = appendix_golden_check()
    assert report.rows_checked == 4 * (3 + 5 + 6 + 10 + 15 + 30)
    assert report.mismatches == ()
    assert report.zero_remainders == ()
    assert report.ok


def test_appendix_golden_check_detects_injected_fault(tmp_path):
    data = tmp_path / "appendix"
    shutil.copytree(golden_data_dir(), data)
    target = data / "q_3.txt"
    lines = target.read_text().splitlines()
    # Perturb one coefficient of one remainder.
    residue, reduced, remainder = lines[1].split()
    broken = remainder.replace(":", ":9", 1)
    lines[1] = f"{residue} {reduced} {broken}"
    target.write_text("\n".join(lines) + "\n")
    report = appendix_golden_check(data)
    assert len(report.mismatches) == 1
    mismatch = report.mismatches[0]
    assert (mismatch.kind, mismatch.modulus, mismatch.residue) == ("q", 3, 1)
    assert mismatch.field == "remainder"


def test_appendix_golden_check_missing_file(tmp_path):
    with pytest.raises(ConfigurationError):
        appendix_golden_check(tmp_path)


def test_format_table_line_round_trip():
    row = generate_table("q", 3)[0]
    assert format_table_line(row) == f"0 {sparse_to_text(row.reduced)} {sparse_to_text(row.remainder.to_sparse())}"
