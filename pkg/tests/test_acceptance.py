"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line with its runtime."""

import random
import time
from contextlib import contextmanager

import pytest

from compactlocus import catalog, render
from compactlocus.groups import group_from_generators, is_p_subnormal, o_p, prime_divisors
from compactlocus.loci import (
    GENERIC,
    geometric_fixed_locus,
    inflation_locus,
    locus_contains,
    n_free_locus,
)
from compactlocus.oracles import (
    is_union_of_components,
    localization_oracle,
    o_p_oracle,
    p_subnormal_chain_oracle,
    poset_corpus,
    sample_closed,
)
from compactlocus.spaces import (
    ChromaticSpace,
    FinitePoset,
    finite_localization_locus,
    is_clopen,
    p_localization_subset,
    sh_localization_locus,
)

CATALOG = catalog.builtin_names(60)


@contextmanager
def criterion(capsys, number, title, limit=None):
    start = time.perf_counter()
    status = "FAIL"
    note = ""
    try:
        yield
        elapsed = time.perf_counter() - start
        if limit is not None and elapsed >= limit:
            note = f" over limit {limit}s"
            raise AssertionError(f"criterion {number} took {elapsed:.2f}s, limit {limit}s")
        status = "PASS"
    finally:
        elapsed = time.perf_counter() - start
        with capsys.disabled():
            print(f"\n[acceptance {number}] {status} {title} ({elapsed:.2f}s){note}")


def _images(sub):
    return frozenset(sub.group.elements[i].images for i in sub.elements)


def test_criterion_1_cyclic_inflation(capsys):
    with criterion(capsys, 1, "inflation locus of C_p with N = C_p", limit=1.0):
        for p in (2, 3, 5, 7):
            G = catalog.cyclic(p)
            L = inflation_locus(G, G.classes[-1])
            assert L.spectrum.columns == (p, GENERIC)
            assert L.tall[0] == (True, True) and L.height_one[0]
            assert L.tall[1] == (False, True) and not L.height_one[1]
            for q in (2, 3, 5, 7, 11):
                assert L.member(1, q) == (q != p)


def test_criterion_2_p_localization(capsys):
    with criterion(capsys, 2, "finite localization of SH for p-localization", limit=1.0):
        for p in (2, 3, 5):
            space = ChromaticSpace((2, 3, 5))
            Z = sh_localization_locus(space, p_localization_subset(space, p))
            assert Z.column(p) == 2 and Z.contains(p, float("inf"))
            assert all(Z.column(q) is None for q in (2, 3, 5, 7, 11) if q != p)
            assert not Z.generic and not Z.contains(p, 1)


def test_criterion_3_whole_iff_trivial(capsys):
    with criterion(capsys, 3, f"inflation locus whole iff N = 1 over {len(CATALOG)} groups", limit=60.0):
        cases = 0
        for name in CATALOG:
            G = catalog.by_name(name)
            for n in G.classes:
                if n.is_normal:
                    assert inflation_locus(G, n).is_whole() == (n.order == 1), (name, n.label)
                    cases += 1
        assert cases > 0


def test_criterion_4_n_free_d10(capsys):
    with criterion(capsys, 4, "N-free locus strictly inside inflation locus for D10", limit=1.0):
        G = catalog.dihedral(10)
        for label in ("C5", "D10"):
            (n,) = [c for c in G.classes if c.label == label]
            a, b = inflation_locus(G, n), n_free_locus(G, n)
            assert locus_contains(a, b) and a != b
        (c5,) = [c for c in G.classes if c.label == "C5"]
        nf = n_free_locus(G, c5)
        assert [c.label for c in nf.classes_fully_included()] == ["1", "C2"]
        assert not any(any(r) for r in nf.tall[2:])


def test_criterion_5_group_oracles(capsys):
    with criterion(capsys, 5, "o_p and p-subnormality against brute-force oracles", limit=300.0):
        cases = 0
        for name in CATALOG:
            G = catalog.by_name(name)
            G_set = frozenset(e.images for e in G.elements)
            for c in G.classes:
                H = c.subgroup
                H_set = _images(H)
                for p in prime_divisors(G.order):
                    assert _images(o_p(H, p)) == o_p_oracle(H_set, p), (name, c.label, p)
                    assert is_p_subnormal(H, G, p) == p_subnormal_chain_oracle(H_set, G_set, p), (name, c.label, p)
                    cases += 1
        assert cases > 2000


@pytest.fixture(scope="module")
def corpus():
    rng = random.Random(0)
    out = []
    for points, edges in poset_corpus(200, 10, seed=0):
        closed, sample = sample_closed(points, edges, rng, limit=50)
        out.append((points, edges, closed, sample))
    return out


def test_criterion_6_localization_oracle(capsys, corpus):
    with criterion(capsys, 6, "finite localization locus against closed-set union", limit=30.0):
        n = 0
        for points, edges, closed, sample in corpus:
            X = FinitePoset(points, edges)
            for Y in sample:
                assert finite_localization_locus(X, Y).members == localization_oracle(points, edges, Y, closed)
                n += 1
        assert len(corpus) == 200 and n > 1000


def test_criterion_7_clopen(capsys, corpus):
    with criterion(capsys, 7, "clopen iff locus is complement iff union of components"):
        for points, edges, _closed, sample in corpus:
            X = FinitePoset(points, edges)
            for Y in sample:
                a = is_clopen(X, Y)
                b = finite_localization_locus(X, Y).members == frozenset(points) - Y
                c = is_union_of_components(points, edges, Y)
                assert a == b == c


def test_criterion_8_invariants(capsys):
    with criterion(capsys, 8, "invariant suite over the catalog"):
        rng = random.Random(8)
        for name in CATALOG:
            G = catalog.by_name(name)
            normals = [c for c in G.classes if c.is_normal]
            reps = [c.subgroup.conjugate(rng.randrange(G.order)) for c in G.classes]
            infl = {}
            for n in normals:
                L = inflation_locus(G, n)
                infl[n.representative] = L
                for out in (L, geometric_fixed_locus(G, n), n_free_locus(G, n)):
                    assert all(all(r) or not h for r, h in zip(out.tall, out.height_one))
                assert inflation_locus(G, n, reps=reps) == L
                assert geometric_fixed_locus(G, n, reps=reps) == geometric_fixed_locus(G, n)
            for a in normals:
                for b in normals:
                    if a.subgroup <= b.subgroup:
                        assert locus_contains(infl[a.representative], infl[b.representative])
            for c in G.classes:
                for p in prime_divisors(G.order):
                    r = o_p(c, p)
                    assert o_p(r, p) == r
            if G.order <= 24:
                gens = list(G.generators) + [rng.choice(G.elements)]
                rng.shuffle(gens)
                H = group_from_generators(G.degree, gens, name=G.name)
                assert [(c.representative, c.class_size) for c in H.classes] == [
                    (c.representative, c.class_size) for c in G.classes
                ]


def test_criterion_9_figure_determinism(capsys):
    from test_render import EXT, GOLDENS

    with criterion(capsys, 9, "figure goldens byte-stable across two runs"):
        for name, G in (("infl_c5_c5", catalog.cyclic(5)), ("infl_d10_d10", catalog.dihedral(10))):
            for fmt in render.FORMATS:
                first = render.render_eq_locus(inflation_locus(G, G.classes[-1]), fmt)
                second = render.render_eq_locus(inflation_locus(G, G.classes[-1]), fmt)
                assert first == second == (GOLDENS / f"{name}.{EXT[fmt]}").read_bytes()
