import pytest

CRITERIA = {
    1: "composition agrees with the pointwise oracle",
    2: "caret walks normalize to one standard symbol",
    3: "Lenz equality coincides with equality of maps",
    4: "maximal prefix codes: counts, scan, caret reduction",
    5: "Boolean laws and complements of idempotents",
    6: "group axioms and word problem",
    7: "Cantor algebra laws CA1 and CA2",
    8: "worked example and its term",
    9: "freeness and unit automorphisms",
    10: "groupoid laws, index additivity, stream agreement",
    11: "restriction axioms RS1-RS4",
    12: "tight covers agree with the brute-force scan",
}

_results = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(k): acceptance criterion number k")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    k = marker.args[0]
    if report.when == "call" or report.failed:
        ok = report.passed and _results.get(k, (True, 0.0))[0]
        _results[k] = (ok, _results.get(k, (True, 0.0))[1] + report.duration)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(CRITERIA):
        if k not in _results:
            continue
        ok, secs = _results[k]
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"criterion {k:2d}: {status}  {CRITERIA[k]} ({secs:.1f}s)")
