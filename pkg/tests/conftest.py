from hypothesis import settings

settings.register_profile("ci", derandomize=True, max_examples=150)
settings.load_profile("ci")

ACCEPTANCE_RESULTS: dict[str, tuple[bool, str]] = {}


def record_criterion(name: str, ok: bool, note: str = "") -> None:
    ACCEPTANCE_RESULTS[name] = (ok, note)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name in sorted(ACCEPTANCE_RESULTS):
        ok, note = ACCEPTANCE_RESULTS[name]
        status = "PASS" if ok else "FAIL"
        line = f"{name}: {status}"
        if note:
            line += f" ({note})"
        terminalreporter.write_line(line)
