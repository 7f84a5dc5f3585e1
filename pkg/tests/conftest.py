from __future__ import annotations

import sys
from dataclasses import dataclass
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from compnum import Graph, all_labeled_graphs, competition_number, general_bound
from compnum.bounds import BoundReport
from compnum.realizer import RealizationWitness


@pytest.fixture(scope="session")
def graphs_up_to_3() -> list[Graph]:
    out = []
    for n in range(4):
        out.extend(all_labeled_graphs(n))
    return out


@pytest.fixture(scope="session")
def graphs_4() -> list[Graph]:
    return list(all_labeled_graphs(4))


@pytest.fixture(scope="session")
def graphs_5() -> list[Graph]:
    return list(all_labeled_graphs(5))


@dataclass(frozen=True)
class SweepEntry:
    graph: Graph
    report: BoundReport  # unpruned: every per-m term is exact
    k: int
    witness: RealizationWitness


@dataclass(frozen=True)
class SweepData:
    entries: list[SweepEntry]
    elapsed_seconds: float


@pytest.fixture(scope="session")
def sweep(graphs_4, graphs_5) -> SweepData:
    """Exact bound report and competition number for every labeled graph on
    4 and on 5 vertices; shared by the acceptance criteria.

    The solver starts at k = 0 on purpose: every value below the returned k
    is then proven infeasible independently of the lower bounds, so comparing
    the two is a real soundness check rather than a tautology.
    """
    import time

    started = time.perf_counter()
    entries = []
    for g in graphs_4 + graphs_5:
        report = general_bound(g)
        k, witness = competition_number(g, start_k=0)
        entries.append(SweepEntry(g, report, k, witness))
    return SweepData(entries, time.perf_counter() - started)
