from hypothesis import settings, strategies as st

from eqrimhook.partitions import Partition
from eqrimhook.polyring import TPoly

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")


@st.composite
def tpolys(draw, indices=(-2, 9), max_terms=4, max_degree=3):
    lo, hi = indices
    terms = {}
    for _ in range(draw(st.integers(0, max_terms))):
        key = tuple(sorted(draw(st.lists(st.integers(lo, hi), max_size=max_degree))))
        terms[key] = terms.get(key, 0) + draw(st.integers(-5, 5))
    return TPoly(terms)


@st.composite
def partitions(draw, max_rows=3, max_part=6):
    parts = draw(st.lists(st.integers(0, max_part), max_size=max_rows))
    return Partition(sorted(parts, reverse=True))


@st.composite
def boxed(draw, k, n):
    parts = draw(st.lists(st.integers(0, n - k), min_size=k, max_size=k))
    return Partition(sorted(parts, reverse=True))


# one line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE = []


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number, ok, title, detail in sorted(ACCEPTANCE):
        terminalreporter.write_line("%-4s %2d  %s  (%s)" % ("PASS" if ok else "FAIL", number, title, detail))
