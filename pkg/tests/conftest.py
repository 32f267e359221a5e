from __future__ import annotations

import random
from pathlib import Path

import pytest

from repkit import documents as docs
from repkit.exactfield import GF, QQ, cyclotomic

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

FIELDS = [QQ, GF(2), GF(7), cyclotomic(3), cyclotomic(4), cyclotomic(12)]


def fixture_path(name: str) -> Path:
    return FIXTURES / name


def load_rep(name: str):
    return docs.load_rep(FIXTURES / name).rep


def all_rep_names() -> list[str]:
    return sorted(p.name for p in FIXTURES.glob("*.rep"))


def random_matrix(F, n: int, rng: random.Random, m: int | None = None, bound: int = 4):
    from repkit.linalg import Matrix

    m = n if m is None else m
    return Matrix._raw(F, [[F.random(rng, bound) for _ in range(m)] for _ in range(n)], n, m)


def random_singular(F, n: int, rng: random.Random):
    """A random matrix whose last row is a combination of the others."""
    from repkit.linalg import Matrix

    rows = [[F.random(rng, 3) for _ in range(n)] for _ in range(n - 1)]
    c = [F.random(rng, 2) for _ in range(n - 1)]
    last = [F.sum(F.mul(c[i], rows[i][j]) for i in range(n - 1)) for j in range(n)]
    return Matrix._raw(F, rows + [last], n, n)


@pytest.fixture
def rng():
    return random.Random(20261016)


# one line per acceptance criterion, filled in by test_acceptance.py
ACCEPTANCE: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for n in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[n])
