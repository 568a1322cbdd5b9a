from pathlib import Path

import pytest

from compactlocus import catalog

GOLDENS = Path(__file__).parent / "goldens"


def image_set(sub):
    """Image tuples of a Subgroup's elements."""
    return frozenset(sub.group.elements[i].images for i in sub.elements)


def group_set(G):
    return frozenset(e.images for e in G.elements)


@pytest.fixture(scope="session")
def d10():
    return catalog.dihedral(10)


@pytest.fixture(scope="session")
def c5():
    return catalog.cyclic(5)


@pytest.fixture(scope="session")
def small_catalog():
    return catalog.builtin_catalog(24)


def by_label(G, label):
    (c,) = [c for c in G.classes if c.label == label]
    return c
