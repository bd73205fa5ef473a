import os

import pytest

from glpaths import planar

TEST_DIR = os.path.dirname(__file__)

TEST_DATA_DIR = os.path.join(TEST_DIR, 'unit_test_data/')


def _checked(fn):
    def wrapper(*args, **kwargs):
        emb = fn(*args, **kwargs)
        if isinstance(emb, planar.Embedding):
            assert emb.check(), f"inconsistent embedding from {fn.__name__}"
        return emb
    return wrapper


@pytest.fixture
def checked_embeddings(monkeypatch):
    """Every embedding built while the test runs must pass Embedding.check()"""
    monkeypatch.setattr(planar, "planar_embed", _checked(planar.planar_embed))
    monkeypatch.setattr(planar, "swap_parallel_pair", _checked(planar.swap_parallel_pair))
