import json

from qgroups.report import Check, CheckReport


class TestCheckReport:
    def setup_method(self):
        self.report = CheckReport("example")
        self.report.add("first", True, "3 cases")
        self.report.add("second", False, "fails", "a*b")

    def test_verdict(self):
        assert not self.report.passed
        assert [c.name for c in self.report.failures] == ["second"]

    def test_mapping_interface(self):
        assert list(self.report) == ["first", "second"]
        assert self.report["first"] == Check("first", True, "3 cases", None)
        self.report["third"] = (True, "set directly", None)
        assert len(self.report) == 3
        del self.report["second"]
        assert self.report.passed

    def test_extend_with_prefix(self):
        other = CheckReport("other").extend(self.report, "sub/")
        assert list(other) == ["sub/first", "sub/second"]

    def test_json(self):
        payload = json.loads(self.report.to_json())
        assert payload["passed"] is False
        assert payload["checks"][1] == {
            "name": "second", "passed": False, "detail": "fails", "witness": "a*b"
        }

    def test_text_shows_witness_of_failures_only(self):
        text = repr(self.report)
        assert text.startswith("example\n")
        assert "witness: a*b" in text
        assert text.count("witness") == 1

    def test_empty_report_passes(self):
        assert CheckReport().passed
