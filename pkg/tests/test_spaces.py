import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from compactlocus.errors import IllegalThomason, NotClosed, ParseError
from compactlocus.oracles import (
    all_closed_sets,
    is_union_of_components,
    localization_oracle,
    random_poset,
)
from compactlocus.spaces import (
    INF,
    ChromaticSpace,
    ChromaticSubset,
    FinitePoset,
    PosetSubset,
    complement,
    finite_localization_locus,
    is_clopen,
    largest_specialization_closed_inside,
    p_localization_subset,
    sh_localization_locus,
)

SIERPINSKI = FinitePoset(["eta", "s"], [("eta", "s")])

# 6-point fence: a0 < b0 > a1 < b1 > a2 < b2 with the a's generic
FENCE = FinitePoset(
    ["a0", "a1", "a2", "b0", "b1", "b2"],
    [("a0", "b0"), ("a1", "b0"), ("a1", "b1"), ("a2", "b1"), ("a2", "b2")],
)
FENCE_EDGES = [("a0", "b0"), ("a1", "b0"), ("a1", "b1"), ("a2", "b1"), ("a2", "b2")]


def closed(X, members):
    return PosetSubset(X, frozenset(members), "closed")


def test_sierpinski():
    assert finite_localization_locus(SIERPINSKI, closed(SIERPINSKI, {"s"})).members == frozenset()
    assert finite_localization_locus(SIERPINSKI, closed(SIERPINSKI, set())).members == {"eta", "s"}
    assert not is_clopen(SIERPINSKI, {"s"})
    assert is_clopen(SIERPINSKI, set())
    assert is_clopen(SIERPINSKI, {"eta", "s"})


def test_not_closed_is_rejected():
    with pytest.raises(NotClosed):
        closed(SIERPINSKI, {"eta"})
    with pytest.raises(NotClosed):
        finite_localization_locus(SIERPINSKI, {"eta"})
    with pytest.raises(NotClosed):
        PosetSubset(SIERPINSKI, {"s"}, "open")


def test_two_chains_clopen():
    X = FinitePoset(["a", "b", "c", "d", "e"], [("a", "b"), ("b", "c"), ("d", "e")])
    assert is_clopen(X, {"a", "b", "c"})
    assert is_clopen(X, {"d", "e"})
    assert not is_clopen(X, {"c"})
    assert finite_localization_locus(X, {"d", "e"}).members == {"a", "b", "c"}


def test_fence_against_closed_set_enumeration():
    pts = FENCE.points
    every_closed = all_closed_sets(pts, FENCE_EDGES)
    for U in [{"a1", "b0", "b1"}, {"a0", "b0", "b2"}, {"b0", "b1", "b2"}, {"a0", "a1", "a2"}]:
        want = frozenset().union(*[Z for Z in every_closed if Z <= U])
        assert largest_specialization_closed_inside(FENCE, U).members == want
    assert largest_specialization_closed_inside(FENCE, set(pts)).members == set(pts)
    assert largest_specialization_closed_inside(FENCE, set()).members == frozenset()


def test_poset_structure():
    assert FENCE.closure("a1") == {"a1", "b0", "b1"}
    assert FENCE.generizations("b1") == {"a1", "a2", "b1"}
    assert sorted(FENCE.cover_pairs()) == sorted(FENCE_EDGES)
    assert FENCE.components() == [tuple(FENCE.points)]
    assert FENCE.height("a0") == 0 and FENCE.height("b1") == 1
    with pytest.raises(ValueError):
        FinitePoset(["x", "y"], [("x", "y"), ("y", "x")])


def test_parse_roundtrip():
    X = FinitePoset.parse(FENCE.to_text())
    assert X.points == FENCE.points and sorted(X.cover_pairs()) == sorted(FENCE_EDGES)
    with pytest.raises(ParseError):
        FinitePoset.parse("point a\nspec a b\n")
    with pytest.raises(ParseError):
        FinitePoset.parse("node a\n")


def test_subset_json_roundtrip():
    Y = closed(FENCE, {"b0", "b1"})
    assert PosetSubset.from_json(FENCE, Y.to_json()) == Y
    assert Y.to_json() == {"members": ["b0", "b1"], "closed": True}


posets = st.builds(lambda seed, n: random_poset(random.Random(seed), n), st.integers(0, 10**9), st.integers(1, 8))


@settings(max_examples=80, deadline=None)
@given(posets, st.integers(0, 10**9))
def test_localization_matches_oracle(poset, seed):
    points, edges = poset
    X = FinitePoset(points, edges)
    cl = all_closed_sets(points, edges)
    Y = random.Random(seed).choice(cl)
    Z = finite_localization_locus(X, Y)
    assert Z.members == localization_oracle(points, edges, Y, cl)
    assert Z.is_closed and not (Z.members & Y)
    # idempotent: localizing at the complement of Z again returns Z
    assert largest_specialization_closed_inside(X, Z.members).members == Z.members
    assert is_clopen(X, Y) == (Z.members == frozenset(points) - Y) == is_union_of_components(points, edges, Y)


@settings(max_examples=60, deadline=None)
@given(posets, st.integers(0, 10**9))
def test_localization_antitone(poset, seed):
    points, edges = poset
    X = FinitePoset(points, edges)
    cl = all_closed_sets(points, edges)
    rng = random.Random(seed)
    A, B = rng.choice(cl), rng.choice(cl)
    Y1, Y2 = A & B, A
    assert finite_localization_locus(X, Y2).members <= finite_localization_locus(X, Y1).members


# -- chromatic model ----------------------------------------------------------

TOP = 12


def column_poset():
    """One column truncated at height TOP, with the generic point below it."""
    pts = ["g"] + [f"c{n}" for n in range(2, TOP + 1)]
    edges = [("g", "c2")] + [(f"c{n}", f"c{n + 1}") for n in range(2, TOP)]
    return pts, edges


def truncated_oracle(Y, primes):
    """Per-column exhaustive localization on the truncated model; returns thresholds and generic flag."""
    pts, edges = column_poset()
    cl = all_closed_sets(pts, edges)
    cols, generic = {}, True
    for p in primes:
        t = Y.column(p)
        ymem = frozenset() if t is None else frozenset(f"c{n}" for n in range(t, TOP + 1))
        if Y.generic:
            ymem |= {"g"}
        Z = localization_oracle(pts, edges, ymem, cl)
        heights = sorted(int(x[1:]) for x in Z if x != "g")
        cols[p] = heights[0] if heights else None
        if heights:
            assert heights == list(range(heights[0], TOP + 1))
        generic &= "g" in Z
    return cols, generic


CHROMATIC_CASES = [
    ChromaticSubset({2: 4}),
    ChromaticSubset({2: None, 3: 2, 5: 2}, default=2),
    ChromaticSubset(),
    ChromaticSubset({3: 7, 5: 2}),
    ChromaticSubset({2: 2, 3: 2, 5: 2}, default=2, generic=True),
]


@pytest.mark.parametrize("Y", CHROMATIC_CASES, ids=lambda y: y.dumps())
def test_sh_localization_matches_truncation(Y):
    space = ChromaticSpace((2, 3, 5))
    Z = sh_localization_locus(space, Y)
    cols, generic = truncated_oracle(Y, (2, 3, 5))
    assert {p: Z.column(p) for p in (2, 3, 5)} == cols
    assert Z.generic == generic


def test_sh_localization_examples():
    space = ChromaticSpace((2, 3, 5))
    Z = sh_localization_locus(space, p_localization_subset(space, 2))
    assert Z.column(2) == 2 and Z.column(3) is None and Z.column(7) is None and not Z.generic
    Z = sh_localization_locus(space, ChromaticSubset())
    assert Z.generic and Z.default == 2 and all(Z.column(p) == 2 for p in (2, 3, 5))
    Z = sh_localization_locus(space, ChromaticSubset({2: 4}))
    assert Z.column(2) is None and Z.column(3) == 2 and Z.column(11) == 2 and not Z.generic


def test_illegal_thomason():
    space = ChromaticSpace((2,))
    with pytest.raises(IllegalThomason):
        sh_localization_locus(space, ChromaticSubset({2: INF}))
    with pytest.raises(ValueError):
        ChromaticSubset({2: 3}, default=2, generic=True)
    with pytest.raises(ValueError):
        ChromaticSubset({2: 1})


def test_chromatic_membership_and_json():
    Y = ChromaticSubset({2: 4, 3: INF}, default=None)
    assert Y.contains(2, 4) and Y.contains(2, 100) and not Y.contains(2, 3)
    assert Y.contains(3, INF) and not Y.contains(3, 50)
    assert not Y.contains(7, 2) and not Y.contains(2, 1)
    assert ChromaticSubset.from_json(Y.to_json()) == Y
    assert Y.to_json()["columns"]["3"] == {"from": "inf"}
