"""Piecewise formula machinery: coverage semantics and the erratum ledger."""

import pytest

from antimagic import formula as F
from antimagic.formula import ALWAYS, CoverageError, Piecewise, Variant, br


def _pw(*branches):
    return Piecewise("test.pw", tuple(branches))


def _ref(fid, m, n, i, j):
    raise AssertionError("no references expected")


def test_single_branch_evaluates():
    pw = _pw(br("always", ALWAYS, lambda m, n, i, j, _: m + n + i + j))
    value, label = pw.evaluate(1, 2, 3, 4, _ref)
    assert (value, label) == (10, "always")


def test_gap_raises_coverage_error():
    pw = _pw(br("i odd", lambda m, n, i, j: i % 2 == 1, lambda m, n, i, j, _: 1))
    with pytest.raises(CoverageError, match="no branch matches"):
        pw.evaluate(3, 1, 2, 1, _ref)


def test_overlap_raises_coverage_error():
    pw = _pw(
        br("first", ALWAYS, lambda m, n, i, j, _: 1),
        br("second", lambda m, n, i, j: i == 2, lambda m, n, i, j, _: 2),
    )
    with pytest.raises(CoverageError, match="overlap"):
        pw.evaluate(3, 1, 2, 1, _ref)


def test_zero_branch_formula_always_errors():
    pw = Piecewise("test.empty", ())
    with pytest.raises(CoverageError):
        pw.evaluate(3, 1, 1, 1, _ref)


def test_registry_variants_and_ledger():
    F.define("test.reg.demo", br("always", ALWAYS, lambda m, n, i, j, _: 5))
    assert F.evaluate("test.reg.demo", Variant.AS_PRINTED, 3, 1, 1, 1) == (5, "always")
    F.patch("test.reg.demo", "value is 6", "forced by the test",
            br("always", ALWAYS, lambda m, n, i, j, _: 6))
    assert F.evaluate("test.reg.demo", Variant.AS_PRINTED, 3, 1, 1, 1) == (5, "always")
    assert F.evaluate("test.reg.demo", Variant.ERRATA, 3, 1, 1, 1) == (6, "always")
    ledger = F.errata("test.reg.")
    assert len(ledger) == 1
    assert ledger[0].note == "value is 6"
    assert ledger[0].evidence


def test_ledger_is_append_only():
    F.define("test.appendonly", br("always", ALWAYS, lambda m, n, i, j, _: 1))
    F.patch("test.appendonly", "x", "y", br("always", ALWAYS, lambda m, n, i, j, _: 2))
    with pytest.raises(ValueError, match="append-only"):
        F.patch("test.appendonly", "z", "w", br("always", ALWAYS, lambda m, n, i, j, _: 3))


def test_duplicate_definition_rejected():
    F.define("test.dup", br("always", ALWAYS, lambda m, n, i, j, _: 1))
    with pytest.raises(ValueError, match="already defined"):
        F.define("test.dup", br("always", ALWAYS, lambda m, n, i, j, _: 1))


def test_every_scheme_erratum_has_evidence():
    scheme_entries = [
        entry for prefix in ("wheel.", "helm.", "flower.")
        for entry in F.errata(prefix)
    ]
    assert len(scheme_entries) >= 10
    for entry in scheme_entries:
        assert entry.note
        assert len(entry.evidence) > 40
        assert entry.replacement.branches


def test_references_resolve_at_same_variant():
    F.define("test.refbase", br("always", ALWAYS, lambda m, n, i, j, _: 10))
    F.patch("test.refbase", "now 20", "test", br("always", ALWAYS, lambda m, n, i, j, _: 20))
    F.define("test.refuser",
             br("always", ALWAYS, F.ref_value("test.refbase", 1)))
    assert F.evaluate("test.refuser", Variant.AS_PRINTED, 3, 1, 1, 1)[0] == 11
    assert F.evaluate("test.refuser", Variant.ERRATA, 3, 1, 1, 1)[0] == 21
