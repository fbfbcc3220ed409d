from __future__ import annotations

import re
from collections import defaultdict

_CRITERION = re.compile(r"test_criterion_(\d+)")
_outcomes: dict[int, list[bool]] = defaultdict(list)

CRITERIA = {
    1: "Table 1 reproduction",
    2: "Table 2 reproduction",
    3: "Z57 example: distributions, energies, CRT strings, inequivalence",
    4: "construction matrix",
    5: "t(alpha) class selection: perfect, YP and sign agree",
    6: "SLCE / Yamada bridge identities",
    7: "Hadamard matrices up to order 116",
    8: "Z38 perfect array and its Z19 decomposition",
    9: "property suites",
    10: "enumeration cardinalities",
}


def pytest_runtest_logreport(report):
    m = _CRITERION.search(report.nodeid)
    if not m:
        return
    if report.when == "call" or report.outcome in ("failed", "skipped"):
        passed = report.outcome == "passed"
        _outcomes[int(m.group(1))].append(passed)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(CRITERIA):
        if num not in _outcomes:
            continue
        results = _outcomes[num]
        verdict = "PASS" if all(results) else "FAIL"
        detail = f"{sum(results)}/{len(results)} checks"
        terminalreporter.write_line(f"criterion {num:2d} {verdict}  {CRITERIA[num]} ({detail})")
