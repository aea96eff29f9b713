import json
import pathlib

import pytest

from hmds.formats import code_from_json
from hmds.verifier import monotonicity_violations, record_verdicts

FIXTURES = pathlib.Path(__file__).parent / "fixtures"

_SESSION_LOG: list = []


def load_fixture(name):
    with open(FIXTURES / name) as fh:
        return json.load(fh)


@pytest.fixture(scope="session", autouse=True)
def verdict_log():
    """Every MDS(l) verdict issued during the test session."""
    with record_verdicts() as log:
        yield log
        _SESSION_LOG.extend(log)


@pytest.fixture(scope="session")
def fixture_codes():
    """Frozen codes with their known MDS orders (see fixtures/codes.json)."""
    data = load_fixture("codes.json")
    return [(entry["name"], code_from_json(entry["code"]), entry) for entry in data["codes"]]


def pytest_terminal_summary(terminalreporter):
    if not _SESSION_LOG:
        return
    bad = monotonicity_violations(_SESSION_LOG)
    terminalreporter.write_line(
        f"monotonicity audit over the whole session: {len(_SESSION_LOG)} verdicts, "
        f"{len(bad)} violations")
