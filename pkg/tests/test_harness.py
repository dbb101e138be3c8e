"""The theorem harness: registry hygiene, corpus runs, open-problem scan."""

import json
import re
from pathlib import Path

import pytest

from reslat.harness import (
    REGISTRY,
    Corpus,
    HarnessReport,
    TheoremCheck,
    TheoremResult,
    UnknownTheorem,
    ViolationRecord,
    _run_theorem,
    registry,
    render_findings,
    render_report,
    search_open_problems,
    standard_corpus,
    theorem_ids,
    verify_corpus,
)

DOCS = Path(__file__).resolve().parent.parent / "docs" / "THEOREMS.md"


class TestRegistry:
    def test_ids_are_unique_kebab_case(self):
        ids = theorem_ids()
        assert len(ids) == len(set(ids))
        for ident in ids:
            assert re.fullmatch(r"[a-z0-9]+(-[a-z0-9]+)*", ident)

    def test_count_and_scopes(self):
        checks = registry()
        assert len(checks) == 41
        scopes = {c.scope for c in checks}
        assert scopes == {"algebra", "pair"}
        assert sum(1 for c in checks if c.scope == "pair") == 5

    def test_statements_are_prose(self):
        for c in registry():
            assert c.statement.strip().endswith(".")
            assert len(c.statement) > 30

    def test_every_check_is_documented(self):
        text = DOCS.read_text(encoding="utf-8")
        documented = dict(re.findall(r"^## ([a-z0-9-]+) \((algebra|pair)\)$", text, re.M))
        for c in registry():
            assert documented.get(c.ident) == c.scope, c.ident
        assert set(documented) == set(theorem_ids())


class TestCorpus:
    def test_standard_counts(self, corpus5):
        assert len(corpus5.algebras) == 41
        assert len(corpus5.pairs()) == 196
        assert corpus5.size_max == 5

    def test_fixtures_only(self):
        c = standard_corpus(fixtures_only=True)
        assert len(c.algebras) == 4
        assert c.label == "fixtures"

    def test_describe_shape(self, corpus5):
        d = corpus5.describe()
        assert d["algebra_count"] == 41
        assert d["pair_count"] == 196
        assert d["pair_size_cap"] == 4
        assert "godel3" in d["algebras"]

    def test_pairs_respect_size_cap(self, corpus5):
        for x, y in corpus5.pairs():
            assert x.size <= 4 and y.size <= 4


class TestVerifyCorpus:
    def test_full_run_has_no_violations(self, full_report):
        assert full_report.violation_count == 0
        assert len(full_report.results) == 41
        for r in full_report.results:
            assert r.violations == ()
            if r.scope == "algebra":
                assert r.instances_checked == 41
            else:
                assert r.instances_checked == 196

    def test_results_sorted_by_id(self, full_report):
        ids = [r.ident for r in full_report.results]
        assert ids == sorted(ids)

    def test_subset_selection(self):
        c = standard_corpus(fixtures_only=True)
        rep = verify_corpus(c, theorems=["radical-facts", "chain-facts"])
        assert [r.ident for r in rep.results] == ["chain-facts", "radical-facts"]
        assert rep.violation_count == 0

    def test_unknown_theorem_rejected(self):
        c = standard_corpus(fixtures_only=True)
        with pytest.raises(UnknownTheorem, match="no-such-claim"):
            verify_corpus(c, theorems=["no-such-claim"])

    def test_json_identical_across_thread_counts(self):
        c = standard_corpus(fixtures_only=True)
        serial = json.dumps(verify_corpus(c, jobs=1).to_json_dict(), sort_keys=True)
        threaded = json.dumps(verify_corpus(c, jobs=3).to_json_dict(), sort_keys=True)
        assert serial == threaded

    def test_json_shape(self, full_report):
        d = full_report.to_json_dict()
        assert d["schema_version"] == 1
        assert d["theorem_count"] == 41
        assert d["violation_count"] == 0
        assert "seconds" not in json.dumps(d)


class TestRunTheorem:
    def test_internal_errors_become_violations(self, corpus5):
        from reslat.algebra import AlgebraError

        def boom(a):
            raise AlgebraError("forced failure")

        check = TheoremCheck("always-raises", "Synthetic.", "algebra", boom)
        small = Corpus(algebras=corpus5.algebras[:3], label="tiny", size_max=None)
        result = _run_theorem(check, small)
        assert result.instances_checked == 3
        assert len(result.violations) == 3
        assert all(
            v.witness["kind"] == "internal-error" for v in result.violations
        )

    def test_witness_flood_is_truncated(self, corpus5):
        def flood(a):
            return [{"kind": "synthetic", "index": i} for i in range(40)]

        check = TheoremCheck("always-floods", "Synthetic.", "algebra", flood)
        small = Corpus(algebras=corpus5.algebras[:1], label="tiny", size_max=None)
        result = _run_theorem(check, small)
        assert len(result.violations) == 26
        markers = [
            v.witness
            for v in result.violations
            if v.witness["kind"] == "truncated"
        ]
        assert markers == [{"kind": "truncated", "dropped": 15}]


class TestRendering:
    def test_clean_report_text(self, full_report):
        text = render_report(full_report)
        assert text.splitlines()[0].startswith("corpus: fixtures plus all")
        assert "FAIL" not in text
        assert text.count("ok  ") == 41
        assert text.splitlines()[-1] == "checked 41 theorems, 0 violations"

    def test_failing_report_text(self):
        rep = HarnessReport(
            corpus={
                "label": "synthetic",
                "algebra_count": 1,
                "pair_count": 0,
            },
            results=(
                TheoremResult(
                    ident="some-claim",
                    statement="Synthetic.",
                    scope="algebra",
                    instances_checked=1,
                    violations=(
                        ViolationRecord(
                            algebra="g", witness={"kind": "bad", "x": 1}
                        ),
                    ),
                    seconds=0.0,
                ),
            ),
        )
        text = render_report(rep)
        assert "FAIL some-claim" in text
        assert '"kind": "bad"' in text
        assert text.splitlines()[-1] == "checked 1 theorems, 1 violations"


class TestOpenProblems:
    def test_full_corpus_findings(self, corpus5):
        f = search_open_problems(corpus5)
        assert f.blp_without_star == ()
        assert f.star_star_without_blp == ()
        assert f.witness_count_histogram == {0: 4, 1: 141, 2: 37}

    def test_fixtures_only_findings(self):
        f = search_open_problems(standard_corpus(fixtures_only=True))
        assert f.witness_count_histogram == {0: 2, 1: 12, 2: 1}
        assert f.to_json_dict()["witness_count_histogram"] == {
            "0": 2, "1": 12, "2": 1,
        }

    def test_rendered_findings(self, corpus5):
        text = render_findings(search_open_problems(corpus5))
        assert "none found" in text
        assert "match counts per element:" in text
