# -*- coding: utf-8 -*-

# Copyright: (c) 2026, hopf-adams contributors
# GNU General Public License v3.0+ (see COPYING or https://www.gnu.org/licenses/gpl-3.0.txt)

from sympy import QQ

from hopf_adams.report import Report


class TestReport:
    def test_keeps_first_violation(self):
        report = Report("check")
        report.fail("first", degree=2)
        report.fail("second", degree=3)
        assert not report.passed
        assert report.msg == "first"
        assert report.witness == {"degree": 2}

    def test_child_failure_propagates(self):
        report = Report("outer")
        ok = report.child("ok")
        ok.tick(3)
        bad = report.child("bad")
        bad.fail("broken")
        assert ok.passed
        assert not report.passed
        assert report.first_failure() is bad

    def test_as_dict(self):
        report = Report("outer")
        report.data["a"] = QQ(1, 2)
        report.child("inner").fail("broken", coefficient=QQ(-3))
        assert report.as_dict() == {
            "name": "outer",
            "passed": False,
            "checked": 0,
            "data": {"a": "1/2"},
            "children": [
                {"name": "inner", "passed": False, "checked": 0, "msg": "broken", "witness": {"coefficient": "-3"}},
            ],
        }

    def test_passing_report_has_no_failure(self):
        report = Report("clean")
        report.tick()
        assert report.passed
        assert report.first_failure() is None
        assert report.as_dict() == {"name": "clean", "passed": True, "checked": 1}
