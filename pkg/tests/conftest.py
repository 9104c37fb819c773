from support import ACCEPTANCE


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for criterion, parts in ACCEPTANCE.items():
        failed = [p for p, ok, _ in parts if not ok]
        status = "FAIL" if failed else "PASS"
        note = f" (failed: {', '.join(failed)})" if failed else ""
        tr.write_line(f"{criterion}: {status}{note}")
        for part, ok, detail in parts:
            tr.write_line(f"    {'ok ' if ok else 'BAD'} {part} {detail}".rstrip())
