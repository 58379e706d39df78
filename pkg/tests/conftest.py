import numpy as np
import pytest

import resistweave as rw


def rng_for(seed):
    return np.random.default_rng(seed)


def regular_corpus():
    """Named regular graphs with n <= 16, used by the expansion/decomposition audits."""
    graphs = {
        "K4": rw.complete_graph(4),
        "K5": rw.complete_graph(5),
        "K6": rw.complete_graph(6),
        "K8": rw.complete_graph(8),
        "C5": rw.cycle_graph(5),
        "C6": rw.cycle_graph(6),
        "C8": rw.cycle_graph(8),
        "C12": rw.cycle_graph(12),
        "C16": rw.cycle_graph(16),
        "Q3": rw.hypercube_graph(3),
        "Q4": rw.hypercube_graph(4),
        "petersen": rw.petersen_graph(),
        "K33": rw.generators.complete_bipartite(3, 3),
        "K44": rw.generators.complete_bipartite(4, 4),
        "circ10_12": rw.circulant_graph(10, [1, 2]),
        "circ12_13": rw.circulant_graph(12, [1, 3]),
        "circ16_125": rw.circulant_graph(16, [1, 2, 5]),
        "rand3_12": rw.random_regular_graph(12, 3, rng_for(101)),
        "rand4_14": rw.random_regular_graph(14, 4, rng_for(102)),
        "rand6_16": rw.random_regular_graph(16, 6, rng_for(103)),
    }
    return graphs


@pytest.fixture(scope="session")
def corpus():
    return regular_corpus()
