"""Shared corpus of test graphs with known trichotomy classes."""

from __future__ import annotations

import pytest

from walkgauge import FamilySpec, Graph, disjoint_union, generate

# (name, class) with class one of "wr" (walk-regular),
# "rnwr" (regular, not walk-regular), "nr" (non-regular)
def _build_corpus() -> dict[str, tuple[Graph, str]]:
    corpus: dict[str, tuple[Graph, str]] = {}
    for n in range(2, 9):
        corpus[f"K{n}"] = (generate(FamilySpec("complete", n=n)), "wr")
    for n in range(3, 13):
        corpus[f"C{n}"] = (generate(FamilySpec("cycle", n=n)), "wr")
    corpus["petersen"] = (generate(FamilySpec("petersen")), "wr")
    corpus["Q3"] = (generate(FamilySpec("hypercube", dim=3)), "wr")
    corpus["Q4"] = (generate(FamilySpec("hypercube", dim=4)), "wr")
    corpus["circ8_12"] = (
        generate(FamilySpec("circulant", n=8, connections=(1, 2))),
        "wr",
    )
    corpus["circ9_13"] = (
        generate(FamilySpec("circulant", n=9, connections=(1, 3))),
        "wr",
    )
    corpus["twin_k4e"] = (generate(FamilySpec("twin_k4e")), "rnwr")
    for n in (3, 4, 5):
        corpus[f"P{n}"] = (generate(FamilySpec("path", n=n)), "nr")
    corpus["K13"] = (generate(FamilySpec("star", n=4)), "nr")
    corpus["K14"] = (generate(FamilySpec("star", n=5)), "nr")
    corpus["K23"] = (generate(FamilySpec("complete_bipartite", n=2, k=3)), "nr")
    return corpus


_CORPUS = _build_corpus()
_C3C4 = disjoint_union(
    generate(FamilySpec("cycle", n=3)), generate(FamilySpec("cycle", n=4))
)


@pytest.fixture(scope="session")
def corpus() -> dict[str, tuple[Graph, str]]:
    """Connected corpus: 29 graphs spanning all three classes, n <= 16."""
    return dict(_CORPUS)


@pytest.fixture(scope="session")
def full_corpus() -> dict[str, tuple[Graph, str]]:
    """Connected corpus plus the disconnected C3+C4 and an edgeless graph."""
    extended = dict(_CORPUS)
    extended["C3uC4"] = (_C3C4, "rnwr")
    extended["edgeless4"] = (generate(FamilySpec("edgeless", n=4)), "wr")
    return extended


@pytest.fixture(scope="session")
def c3c4() -> Graph:
    return _C3C4
