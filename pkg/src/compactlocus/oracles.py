"""Brute-force oracles and the verification suite.

Everything here works on raw image tuples or raw edge lists, never on the
multiplication tables, closure kernels or transitive closures used by the
production code paths it checks.
"""

from __future__ import annotations

import random
from functools import reduce
from itertools import combinations

from . import catalog
from .groups import is_p_subnormal, is_power_of, o_p, prime_divisors
from .loci import inflation_locus, locus_contains, n_free_locus
from .spaces import FinitePoset, finite_localization_locus, is_clopen


def compose(a, b):
    """Image tuple of ``a * b`` (``b`` acts first)."""
    return tuple(a[i] for i in b)


def inverse(a):
    inv = [0] * len(a)
    for i, j in enumerate(a):
        inv[j] = i
    return tuple(inv)


def identity(degree):
    return tuple(range(degree))


def naive_closure(gens, degree):
    """Close ``{1} ∪ gens`` under products by squaring the set until stable."""
    S = {identity(degree)} | set(gens)
    while True:
        nxt = S | {compose(a, b) for a in S for b in S}
        if nxt == S:
            return frozenset(S)
        S = nxt


def product_set(A, B):
    return frozenset(compose(a, b) for a in A for b in B)


def is_closed_subset(S):
    return all(compose(a, b) in S for a in S for b in S)


def subgroups_by_subsets(elements):
    """Every subgroup, by testing all subsets containing the identity. Tiny groups only."""
    elements = sorted(elements)
    e = elements[0]
    rest = elements[1:]
    out = []
    for k in range(len(rest) + 1):
        for combo in combinations(rest, k):
            S = frozenset((e,) + combo)
            if is_closed_subset(S):
                out.append(S)
    return out


def conjugate_set(S, g):
    gi = inverse(g)
    return frozenset(compose(compose(gi, s), g) for s in S)


def conjugacy_classes_of_subgroups(subgroups, G):
    classes = []
    for S in subgroups:
        if not any(S in c for c in classes):
            classes.append({conjugate_set(S, g) for g in G})
    return classes


def normal_subgroups(H):
    """All normal subgroups of the group ``H`` (a set of image tuples).

    Normal subgroups are the joins of normal closures of single elements, and
    the join of two normal subgroups is their product set.
    """
    H = frozenset(H)
    degree = len(next(iter(H)))
    closures = set()
    for x in H:
        cls = {compose(compose(inverse(g), x), g) for g in H}
        closures.add(naive_closure(cls, degree))
    found = {frozenset([identity(degree)])}
    frontier = list(found)
    while frontier:
        nxt = []
        for M in frontier:
            for K in closures:
                if K <= M:
                    continue
                J = product_set(M, K)
                if J not in found:
                    found.add(J)
                    nxt.append(J)
        frontier = nxt
    return found


def o_p_oracle(H, p):
    """Intersection of every normal subgroup of ``H`` with p-power index."""
    H = frozenset(H)
    picks = [M for M in normal_subgroups(H) if is_power_of(len(H) // len(M), p)]
    return reduce(lambda a, b: a & b, picks, H)


def p_subnormal_chain_oracle(H, G, p):
    """Search for ``H = H_0 ⊴ H_1 ⊴ ... ⊴ H_k = G`` with every step of index ``p``."""
    G = frozenset(G)
    seen = set()

    def climb(K):
        if K == G:
            return True
        if K in seen:
            return False
        seen.add(K)
        for g in G - K:
            gp = g
            for _ in range(p - 1):
                gp = compose(gp, g)
            if gp not in K or conjugate_set(K, g) != K:
                continue
            cosets = set(K)
            gi = g
            for _ in range(p - 1):
                cosets |= {compose(k, gi) for k in K}
                gi = compose(gi, g)
            if climb(frozenset(cosets)):
                return True
        return False

    return climb(frozenset(H))


# -- posets -------------------------------------------------------------------


def random_poset(rng, n, density=None):
    """Random point names and raw specialization edges ``i -> j`` with ``i < j``."""
    density = rng.uniform(0.1, 0.5) if density is None else density
    points = [f"x{i}" for i in range(n)]
    edges = [(points[i], points[j]) for i in range(n) for j in range(i + 1, n) if rng.random() < density]
    return points, edges


def closed_by_edges(members, edges):
    return all(b in members for a, b in edges if a in members)


def all_closed_sets(points, edges):
    out = []
    for mask in range(1 << len(points)):
        S = frozenset(x for i, x in enumerate(points) if mask >> i & 1)
        if closed_by_edges(S, edges):
            out.append(S)
    return out


def localization_oracle(points, edges, Y, closed_sets=None):
    """Union of every closed set avoiding ``Y``."""
    closed_sets = all_closed_sets(points, edges) if closed_sets is None else closed_sets
    V = frozenset(points) - Y
    return frozenset().union(*[Z for Z in closed_sets if Z <= V])


def comparability_components(points, edges):
    parent = {x: x for x in points}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for a, b in edges:
        parent[find(a)] = find(b)
    comps = {}
    for x in points:
        comps.setdefault(find(x), set()).add(x)
    return [frozenset(c) for c in comps.values()]


def is_union_of_components(points, edges, Y):
    return all(c <= Y or not (c & Y) for c in comparability_components(points, edges))


def poset_corpus(count=200, max_points=10, seed=0):
    rng = random.Random(seed)
    return [random_poset(rng, rng.randint(1, max_points)) for _ in range(count)]


def sample_closed(points, edges, rng, limit=50):
    closed = all_closed_sets(points, edges)
    if len(closed) <= limit:
        return closed, closed
    return closed, rng.sample(closed, limit)


# -- verification suite -------------------------------------------------------


class Check:
    def __init__(self, name):
        self.name = name
        self.cases = 0
        self.failures = []

    def record(self, ok, detail=""):
        self.cases += 1
        if not ok:
            self.failures.append(detail)

    @property
    def passed(self):
        return not self.failures


def run_verification(max_order=60, n_posets=200, seed=0, corrupt=False, names=None):
    """Run every oracle over the builtin catalog; returns a list of Check."""
    op_check = Check("o_p vs normal-subgroup intersection")
    sub_check = Check("p-subnormal vs chain search")
    rem69 = Check("whole inflation locus iff N = 1")
    rem611 = Check("N-free locus inside inflation locus")
    loc_check = Check("finite localization vs closed-set union")
    clopen_check = Check("clopen iff locus is complement iff components")

    for name in names or catalog.builtin_names(max_order):
        G = catalog.by_name(name)
        G_set = frozenset(e.images for e in G.elements)
        primes = prime_divisors(G.order)
        for c in G.classes:
            H = c.subgroup
            H_set = frozenset(G.elements[i].images for i in H.elements)
            for p in primes:
                got = frozenset(G.elements[i].images for i in o_p(H, p).elements)
                want = o_p_oracle(H_set, p)
                if corrupt and c.order == G.order and p == primes[0]:
                    want = frozenset()
                op_check.record(got == want, f"{name} {c.label} p={p}")
                sub_check.record(
                    is_p_subnormal(H, G, p) == p_subnormal_chain_oracle(H_set, G_set, p),
                    f"{name} {c.label} p={p}",
                )
        for c in G.classes:
            if not c.is_normal:
                continue
            inf = inflation_locus(G, c)
            rem69.record(inf.is_whole() == (c.order == 1), f"{name} N={c.label}")
            rem611.record(locus_contains(inf, n_free_locus(G, c)), f"{name} N={c.label}")

    rng = random.Random(seed)
    for points, edges in poset_corpus(n_posets, 10, seed):
        X = FinitePoset(points, edges)
        closed, sample = sample_closed(points, edges, rng)
        for Y in sample:
            got = finite_localization_locus(X, Y).members
            loc_check.record(got == localization_oracle(points, edges, Y, closed), f"{edges} Y={sorted(Y)}")
            a = is_clopen(X, Y)
            b = got == frozenset(points) - Y
            c = is_union_of_components(points, edges, Y)
            clopen_check.record(a == b == c, f"{edges} Y={sorted(Y)}")
    return [op_check, sub_check, rem69, rem611, loc_check, clopen_check]
