"""Shared fixtures and hooks: catalog CSV writer, acceptance summary."""

import csv

import pytest

# filled by tests/test_acceptance.py as (number, name, outcome) tuples
acceptance_results: list[tuple[int, str, str]] = []


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not acceptance_results:
        return
    terminalreporter.write_sep("-", "acceptance summary")
    for num, name, outcome in sorted(acceptance_results):
        terminalreporter.write_line(f"criterion {num:2d} ({name}): {outcome}")


@pytest.fixture
def make_catalog_csv(tmp_path):
    """Write rows to a catalog CSV and return its path.

    Rows are (date, deaths) pairs or longer tuples including weapon and
    source; pass header=... to test malformed files.
    """

    def _write(rows, header=("date", "deaths", "weapon", "source"), name="catalog.csv"):
        path = tmp_path / name
        with open(path, "w", newline="") as fh:
            writer = csv.writer(fh)
            writer.writerow(header)
            for row in rows:
                writer.writerow(row)
        return path

    return _write
