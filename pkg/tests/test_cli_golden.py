"""CLI runs compared byte-for-byte with files in tests/golden/expected.

Set DGLAB_REGEN_GOLDEN=1 to rewrite the expected files after an intended change.
"""
import json
import os
from pathlib import Path

import pytest

from dglab.cli import main

GOLDEN = Path(__file__).parent / "golden"
CASES = json.loads((GOLDEN / "cases.json").read_text())
REGEN = os.environ.get("DGLAB_REGEN_GOLDEN") == "1"


def _render(code: int, out: str, err: str) -> str:
    text = f"exit: {code}\n--- stdout\n{out}"
    if code != 0:
        text += f"--- stderr\n{err}"
    return text


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden(name, capsys, monkeypatch):
    case = CASES[name]
    monkeypatch.chdir(GOLDEN / "inputs")
    code = main(case["args"])
    captured = capsys.readouterr()
    got = _render(code, captured.out, captured.err)
    path = GOLDEN / "expected" / f"{name}.txt"
    if REGEN:
        path.parent.mkdir(exist_ok=True)
        path.write_text(got)
    assert code == case["exit"]
    assert got == path.read_text()


SUBCOMMANDS = {
    ("positivity", "check"), ("sandwich", "solve"), ("riesz", "interpolate"),
    ("coker", "solve"), ("coker", "in-image"), ("coker", "s-map"), ("coker", "positive-rep"),
    ("kms", "spectrum"), ("kms", "classify"), ("kms", "trace"), ("verify",),
}


def test_every_subcommand_has_a_case():
    words = {w for c in SUBCOMMANDS for w in c}
    seen = {tuple(a for a in case["args"] if a in words)[:2] for case in CASES.values()}
    seen = {s[:1] if s[0] == "verify" else s for s in seen}
    assert SUBCOMMANDS <= seen
