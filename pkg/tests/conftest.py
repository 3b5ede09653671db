import pytest

from acceptance_log import RESULTS, SOFT


def pytest_terminal_summary(terminalreporter):
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        ok, title = RESULTS[number]
        terminalreporter.write_line(f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {title}")
    for line in SOFT:
        terminalreporter.write_line(f"soft check: {line}")


@pytest.fixture
def brute_up_closure():
    from borelnet.monomial import up_moves

    def closure(m):
        seen = {m}
        stack = [m]
        while stack:
            u = stack.pop()
            for v in up_moves(u):
                if v not in seen:
                    seen.add(v)
                    stack.append(v)
        return seen

    return closure
