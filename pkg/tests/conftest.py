import json
from fractions import Fraction
from functools import lru_cache
from pathlib import Path

from hookdist.tables import preset_table, render_decimal, truncate_decimal

GOLDEN_DIR = Path(__file__).parent / "goldens"


def load_golden(name):
    return json.loads((GOLDEN_DIR / f"{name}.json").read_text())


@lru_cache(maxsize=None)
def cached_preset(name):
    # psi2 needs the series up to 5100; build it once per session
    return preset_table(name)


def reference_matches(value: Fraction, ref: str):
    """Return 'exact', 'round', 'trunc' or None for a reference table cell."""
    if "." not in ref:
        return "exact" if value == int(ref) else None
    places = len(ref.split(".")[1])
    if render_decimal(value, places) == ref:
        return "round"
    if truncate_decimal(value, places) == ref:
        return "trunc"
    return None


def golden_mismatches(name):
    """Compare a preset table with its golden; list of (n, a, reference, computed) failures."""
    gold = load_golden(name)
    rep = cached_preset(name)
    index = {n: i for i, n in enumerate(rep.rows)}
    bad = []
    for n_text, ref_row in gold["rows"].items():
        i = index[int(n_text)]
        for a, ref in enumerate(ref_row):
            if reference_matches(rep.cells[i][a], ref) is None:
                bad.append((int(n_text), a, ref, render_decimal(rep.cells[i][a], 6)))
    return bad


# one line per acceptance criterion, echoed in the terminal summary
ACCEPTANCE_LINES = {}


def record_criterion(number, ok, detail):
    line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE_LINES[number] = line
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for number in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[number])
