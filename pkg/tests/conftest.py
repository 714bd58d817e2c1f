import pytest

from lsf.laurent import KnotPoly1, LinkPoly2


def link(terms):
    return LinkPoly2(terms)


def knot(coeffs, low):
    return KnotPoly1.from_coeffs(coeffs, low)


# (x + y - 1)(xy - x - y), the L7a5 pair with an unknotted component
L7A5 = LinkPoly2({(2, 1): 1, (1, 2): 1, (2, 0): -1, (0, 2): -1, (1, 1): -3, (1, 0): 1, (0, 1): 1})
WHITEHEAD = LinkPoly2({(1, 1): -1, (1, 0): 1, (0, 1): 1, (0, 0): -1})
TREFOIL = KnotPoly1.from_coeffs([1, -1, 1], -1)


@pytest.fixture
def l7a5():
    return L7A5


# filled by test_acceptance.py, one (criterion, passed, seconds, note) row per test
ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, passed, seconds, note in sorted(ACCEPTANCE):
        status = "PASS" if passed else "FAIL"
        terminalreporter.write_line(f"criterion {number:>2}: {status}  ({seconds:.2f}s)  {note}")
