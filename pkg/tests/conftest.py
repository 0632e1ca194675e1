from fractions import Fraction

import pytest
from hypothesis import settings, strategies as st

from wittleibniz.scalar import Scalar

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

rationals = st.fractions(max_denominator=50).filter(lambda q: abs(q) < 10**6)
scalars = st.builds(Scalar, rationals, rationals)
real_scalars = st.builds(Scalar, rationals)
small_index = st.integers(min_value=-8, max_value=8)


def gaussian(re, im=0) -> Scalar:
    return Scalar(Fraction(re), Fraction(im))


_ACCEPTANCE: list = []


@pytest.fixture
def acceptance():
    """Record one PASS/FAIL line for an acceptance criterion, then assert it."""
    def record(number: int, title: str, ok: bool, detail: str = ""):
        line = f"criterion {number} {'PASS' if ok else 'FAIL'}: {title}"
        if detail:
            line += f" [{detail}]"
        _ACCEPTANCE.append(line)
        print(line)
        assert ok, line
    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
