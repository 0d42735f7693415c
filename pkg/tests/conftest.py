import random

import pytest

import rainbowlab as rl


def make_k4():
    return rl.complete_one_factorization(4)


def make_c4_rainbow():
    return rl.ColoredGraph.from_edges(4, [(0, 1, 0), (1, 2, 1), (2, 3, 2), (0, 3, 3)])


def make_k23():
    # left side {0, 1} has degree 3, right side {2, 3, 4} degree 2
    edges = [(u, 2 + v, (u + v) % 3) for u in range(2) for v in range(3)]
    return rl.ColoredGraph.from_edges(5, edges), rl.Bipartition.from_left(5, [0, 1])


def make_k33():
    edges = [(u, 3 + v, (u + v) % 3) for u in range(3) for v in range(3)]
    return rl.ColoredGraph.from_edges(6, edges), rl.Bipartition.from_left(6, [0, 1, 2])


@pytest.fixture
def k4():
    return make_k4()


@pytest.fixture
def c4_rainbow():
    return make_c4_rainbow()


@pytest.fixture
def k23():
    return make_k23()


@pytest.fixture
def k33():
    return make_k33()


@pytest.fixture
def k6():
    return rl.complete_one_factorization(6)


@pytest.fixture
def q3():
    return rl.hypercube(3)


@pytest.fixture
def path3():
    return rl.ColoredGraph.from_edges(3, [(0, 1, 0), (1, 2, 1)])


@pytest.fixture
def single_edge():
    return rl.ColoredGraph.from_edges(2, [(0, 1, 0)])


@pytest.fixture
def star4():
    return rl.ColoredGraph.from_edges(5, [(0, i, i - 1) for i in range(1, 5)])


@pytest.fixture
def k4_pendant():
    return rl.ColoredGraph.from_edges(
        5, [(0, 1, 0), (2, 3, 0), (0, 2, 1), (1, 3, 1), (0, 3, 2), (1, 2, 2), (3, 4, 3)]
    )


@pytest.fixture
def planted_loose4():
    # loose 4-cycle with links 2, 4, 6, 0; padding keeps tripartitions roomy
    return rl.LinearTripleSystem.from_triples(
        12, [(0, 1, 2), (2, 3, 4), (4, 5, 6), (0, 6, 7)]
    )


@pytest.fixture
def loose_triangle():
    return rl.LinearTripleSystem.from_triples(6, [(0, 1, 2), (2, 3, 4), (0, 4, 5)])


def build_corpus(count: int = 100, max_n: int = 10, max_degree: int = 5) -> list:
    """Seeded random properly colored graphs, rejection-sampled to a degree cap."""
    rng = random.Random(20240)
    graphs = []
    seed = 0
    while len(graphs) < count:
        n = rng.randint(4, max_n)
        m_cap = min(n * (n - 1) // 2, max_degree * n // 2)
        m = rng.randint(3, m_cap)
        g = rl.random_colored(n, m, seed)
        seed += 1
        if g.max_degree <= max_degree:
            graphs.append(g)
    return graphs


@pytest.fixture(scope="session")
def corpus():
    return build_corpus()


@pytest.fixture(scope="session")
def bipartite_corpus():
    out = []
    for seed in range(50):
        rng = random.Random(9000 + seed)
        a = rng.randint(2, 5)
        b = rng.randint(2, 5)
        m = rng.randint(min(a, b), a * b)
        out.append(rl.random_bipartite(a, b, m, seed))
    return out


@pytest.fixture(scope="session")
def linear_corpus():
    out = []
    for seed in range(50):
        rng = random.Random(7000 + seed)
        n = rng.randint(6, 12)
        m = rng.randint(2, 8)
        out.append(rl.random_linear_triple_system(n, m, seed))
    return out
