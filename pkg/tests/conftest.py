import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from maxbisect import gen_complete, gen_cycle, gen_gnp, gen_path, gen_star


def named_family_graphs():
    """Small named instances used across the suite; id -> Graph."""
    graphs = {}
    for m in range(1, 14, 2):
        graphs[f"star{m}"] = gen_star(m)
    for n in range(2, 13):
        graphs[f"path{n}"] = gen_path(n)
    for n in range(3, 13):
        graphs[f"cycle{n}"] = gen_cycle(n)
    for n in range(2, 13):
        graphs[f"complete{n}"] = gen_complete(n)
    return graphs


def gnp_corpus(ns, ps, seeds):
    return {
        f"gnp-n{n}-p{p}-s{s}": gen_gnp(n, p, s)
        for n in ns
        for p in ps
        for s in seeds
    }


@pytest.fixture(scope="session")
def named_families():
    return named_family_graphs()


@pytest.fixture(scope="session")
def small_corpus(named_families):
    """Named families plus seeded G(n, p), everything with n <= 12."""
    corpus = {k: g for k, g in named_families.items() if g.n <= 12}
    corpus.update(gnp_corpus(ns=(4, 6, 8, 9, 10, 12), ps=(0.2, 0.5, 0.8), seeds=(1, 2)))
    return corpus
