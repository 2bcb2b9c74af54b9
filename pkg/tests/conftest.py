import random

import pytest

ACCEPTANCE_LINES: dict[int, str] = {}


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def criterion():
    """Record one PASS/FAIL line for an acceptance criterion.

    Usage: ``with criterion(3, "massless states") as errs: errs.append(...)``.
    Each appended ``(err, tol)`` pair is checked after the block.
    """
    from contextlib import contextmanager

    @contextmanager
    def record(number: int, title: str):
        errs: list[tuple[float, float]] = []
        ACCEPTANCE_LINES[number] = f"criterion {number} FAIL  {title} (did not complete)"
        yield errs
        worst = max((e / t if t else (0.0 if e == 0 else float("inf")) for e, t in errs), default=0.0)
        ok = bool(errs) and all(e <= t for e, t in errs)
        worst_err = max((e for e, _ in errs), default=float("nan"))
        ACCEPTANCE_LINES[number] = (
            f"criterion {number} {'PASS' if ok else 'FAIL'}  {title}  "
            f"[{len(errs)} checks, max err {worst_err:.2e}, worst err/tol {worst:.2e}]"
        )
        assert ok, ACCEPTANCE_LINES[number]

    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[n])
