import random

import pytest

from kmcds.fixtures import FIXTURES, fixture
from kmcds.generators import gen_random_k_connected
from kmcds.graph import Graph


@pytest.fixture(params=sorted(FIXTURES))
def named_graph(request):
    return request.param, fixture(request.param)


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


def small_corpus(count: int, seed: int, n_max: int = 12) -> list[Graph]:
    """Fixtures plus seeded Erdos-Renyi and k-connected graphs of at most n_max vertices."""
    rng = random.Random(seed)
    graphs = [fixture(name) for name in sorted(FIXTURES) if fixture(name).n <= n_max]
    while len(graphs) < count:
        n = rng.randint(4, n_max)
        if rng.random() < 0.5:
            graphs.append(random_graph(rng, n, rng.uniform(0.2, 0.8)))
        else:
            k = rng.randint(1, min(4, n - 1))
            graphs.append(gen_random_k_connected(n, k, rng.uniform(0.0, 0.4), rng.randrange(10**6)))
    return graphs


ACCEPTANCE = pytest.StashKey[dict]()


def record_criterion(config, number: int, passed: bool, line: str) -> None:
    config.stash.setdefault(ACCEPTANCE, {})[number] = (passed, line)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    results = config.stash.get(ACCEPTANCE, {})
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(results):
        passed, line = results[number]
        terminalreporter.write_line(f"[{'PASS' if passed else 'FAIL'}] criterion {number}: {line}")
