import pytest

TITLES = {
    1: "oracle verdict matches classification over the 4-edge atlas, k=2,3",
    2: "certificate exists iff the smoothed graph has more than one edge",
    3: "cycles have no cut subcontinua, every other atlas graph has one",
    4: "path graphs: 2n-1 nodes and a path-shaped hyperspace graph",
    5: "tangle paths verify for every tangle, start and avoided point",
    6: "growth paths verify for every FT atlas graph and start",
    7: "triod splits into 4 components, branch vertices disconnect",
    8: "triod certificate family converges at exact rates",
    9: "metric axioms, sampling agreement, subdivision invariance",
}

_results = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None or not (rep.when == "call" or rep.failed):
        return
    ok, details = _results.get(marker.args[0], (True, []))
    details = details + [v for k, v in item.user_properties if k == "detail"]
    _results[marker.args[0]] = (ok and rep.passed, details)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_results):
        ok, details = _results[n]
        line = f"criterion {n}: {'PASS' if ok else 'FAIL'}  {TITLES.get(n, '')}"
        if details:
            line += "  [" + "; ".join(details) + "]"
        terminalreporter.write_line(line)
