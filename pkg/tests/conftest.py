from collections import OrderedDict

from hypothesis import HealthCheck, settings

settings.register_profile(
    "default", deadline=None, max_examples=60,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.register_profile("thorough", deadline=None, max_examples=400)
settings.load_profile("default")

CRITERIA = OrderedDict([
    ("AC1", "top-to-random minimal polynomial, n = 2..6"),
    ("AC2", "reverse top-to-random minimal polynomials n = 2..6, L(n) spectrum n = 2..8"),
    ("AC3", "F_3 minimal polynomial of w0 T_1 at n = 4"),
    ("AC4", "annihilation, minimal polynomial and minimality for all alpha, n <= 5"),
    ("AC5", "face-operator triangularity and eigenspace dimensions, n <= 5"),
    ("AC6", "weighted generalization, n <= 4"),
    ("AC7", "worked-example goldens"),
    ("AC8", "property suites"),
])

_outcomes: dict[str, list[str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(tag): acceptance criterion the test belongs to")


def pytest_runtest_logreport(report):
    tag = _tags.get(report.nodeid)
    if tag is None:
        return
    if report.skipped:
        return
    if report.when == "call" or report.failed:
        _outcomes.setdefault(tag, []).append(report.outcome)


_tags: dict[str, str] = {}


def pytest_collection_modifyitems(items):
    for item in items:
        marker = item.get_closest_marker("acceptance")
        if marker is not None:
            _tags[item.nodeid] = marker.args[0]


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for tag, text in CRITERIA.items():
        results = _outcomes.get(tag)
        if results is None:
            status = "NOT RUN"
        elif all(r == "passed" for r in results):
            status = "PASS"
        else:
            status = "FAIL"
        terminalreporter.write_line(f"{tag} {status:7s} {text} ({len(results or [])} checks)")
