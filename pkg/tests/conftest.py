import itertools
import sys

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

settings.register_profile(
    "default",
    deadline=None,
    max_examples=200,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")


def words_over(letters: str, max_size: int, min_size: int = 0):
    return st.text(alphabet=letters, min_size=min_size, max_size=max_size)


def all_words(letters: str, max_len: int, min_len: int = 0):
    for n in range(min_len, max_len + 1):
        for tup in itertools.product(letters, repeat=n):
            yield "".join(tup)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "REPORT", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
