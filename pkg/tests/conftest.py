import random

import pytest

from fraccolor import graph as gr

ACCEPTANCE_LINES = []


def named_graphs():
    """The named suite: K_2..K_8, C_3..C_9, Petersen, Grotzsch."""
    out = {f"K{n}": gr.complete_graph(n) for n in range(2, 9)}
    out.update({f"C{n}": gr.cycle_graph(n) for n in range(3, 10)})
    out["Petersen"] = gr.petersen_graph()
    out["Grotzsch"] = gr.grotzsch_graph()
    return out


def random_graphs(count, max_n, seed, min_n=1):
    rng = random.Random(seed)
    graphs = []
    for _ in range(count):
        n = rng.randint(min_n, max_n)
        graphs.append(gr.gnp_random_graph(n, rng.choice([0.2, 0.4, 0.5, 0.6, 0.8]), rng))
    return graphs


@pytest.fixture
def record_criterion():
    def record(number, passed, detail):
        ACCEPTANCE_LINES.append(f"criterion {number}: {'PASS' if passed else 'FAIL'} - {detail}")

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
