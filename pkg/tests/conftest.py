"""Shared helpers for the test suite.

Tests import graphs from ``fixtures/`` (regenerated byte-for-byte by
``fixtures/MANIFEST``) and drive the CLI in-process through ``run_cli``.
"""

from __future__ import annotations

import contextlib
import io
import sys
from pathlib import Path

from hypothesis import settings

from tensorgraphs.cli import main
from tensorgraphs.graphs import ColoredGraph, parse
from tensorgraphs.ribbon import RibbonStructure, parse_ribbon

ROOT = Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "fixtures"

# Every *.cg fixture that is closed (no legs); used by whole-corpus checks.
CLOSED_FIXTURES = [
    "dipole3.cg",
    "melon.cg",
    "r0.cg",
    "r1.cg",
    "necklace.cg",
    "necklace-base1.cg",
    "c1.cg",
    "c2.cg",
    "c3.cg",
    "o.cg",
    "n.cg",
    "qg2.cg",
    "kg2.cg",
    "p.cg",
    "m.cg",
]

OPEN_FIXTURES = ["twopoint.cg", "t1.cg", "qgbc-0-1-1.cg", "l-2-3.cg"]

RIBBON_FIXTURES = ["w.rg", "q.rg", "r.rg"]

# Closed *and* built on exactly three colors: the surface-geometry corpus.
# (p.cg / m.cg are rank-3 closures on four colors and do not belong here.)
CLOSED_3COLOR_FIXTURES = [
    "dipole3.cg",
    "r0.cg",
    "r1.cg",
    "c1.cg",
    "c2.cg",
    "c3.cg",
    "o.cg",
    "n.cg",
    "qg2.cg",
    "kg2.cg",
]

# Closed fixtures on four colors (jacket corpus).
CLOSED_4COLOR_FIXTURES = [
    "melon.cg",
    "necklace.cg",
    "necklace-base1.cg",
    "p.cg",
    "m.cg",
]


def fixture_text(name: str) -> str:
    return (FIXTURES / name).read_text(encoding="utf-8")


def load_fixture(name: str) -> ColoredGraph:
    return parse(fixture_text(name))


def load_ribbon_fixture(name: str) -> RibbonStructure:
    return parse_ribbon(fixture_text(name))


def run_cli(argv: list[str], stdin_text: str = "") -> tuple[int, str, str]:
    """Run the CLI in-process; returns (exit_code, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    old_stdin = sys.stdin
    sys.stdin = io.StringIO(stdin_text)
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            try:
                code = main(argv)
            except SystemExit as exc:  # argparse usage errors
                code = exc.code if isinstance(exc.code, int) else 0
    finally:
        sys.stdin = old_stdin
    return code, out.getvalue(), err.getvalue()


settings.register_profile("suite", deadline=None, max_examples=60)
settings.load_profile("suite")
