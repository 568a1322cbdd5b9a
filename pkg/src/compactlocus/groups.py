"""Finite permutation groups and their subgroup lattices up to conjugacy.

Groups are small: every element is materialized, sorted by its image tuple,
and addressed by index. Index 0 is always the identity. Subgroups are sorted
tuples of element indices.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass, field
from functools import cached_property
from math import gcd

import numpy as np

from . import kernels
from .errors import CapExceeded, InvalidPermutation, NotASubgroup, NotNormal, ParseError

DEFAULT_ORDER_CAP = 10000
DEFAULT_LATTICE_CAP = 200
TABLE_CAP = 2000


def order_cap():
    env = os.environ.get("LOCUS_MAX_ORDER")
    return int(env) if env else DEFAULT_ORDER_CAP


def lattice_cap():
    env = os.environ.get("LOCUS_MAX_ORDER")
    return int(env) if env else DEFAULT_LATTICE_CAP


def is_prime(p):
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def prime_divisors(n):
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def is_power_of(n, p):
    while n % p == 0:
        n //= p
    return n == 1


class Permutation:
    """A bijection of ``{0, ..., degree-1}`` stored as its image tuple.

    ``(p * q)[i] == p[q[i]]``: the right factor acts first.
    """

    __slots__ = ("images", "_hash")

    def __init__(self, images):
        images = tuple(int(i) for i in images)
        if sorted(images) != list(range(len(images))):
            raise InvalidPermutation(f"{images} is not a permutation")
        self.images = images
        self._hash = hash(images)

    @classmethod
    def identity(cls, degree):
        return cls(range(degree))

    @classmethod
    def from_cycles(cls, degree, cycles, one_based=False):
        images = list(range(degree))
        seen = set()
        for cyc in cycles:
            pts = [int(c) - (1 if one_based else 0) for c in cyc]
            for a in pts:
                if not 0 <= a < degree or a in seen:
                    raise InvalidPermutation(f"bad cycle {tuple(cyc)} for degree {degree}")
                seen.add(a)
            for a, b in zip(pts, pts[1:] + pts[:1]):
                images[a] = b
        return cls(images)

    @classmethod
    def parse(cls, text, degree, one_based=True):
        """Parse cycle notation such as ``(1 2 3)(4 5)``; ``()`` is the identity."""
        text = text.strip()
        if not re.fullmatch(r"(\(\s*[\d\s,]*\))+", text):
            raise ParseError(f"cannot parse cycle notation {text!r}")
        cycles = [
            [int(t) for t in re.split(r"[\s,]+", body.strip()) if t]
            for body in re.findall(r"\(([^)]*)\)", text)
        ]
        return cls.from_cycles(degree, [c for c in cycles if c], one_based=one_based)

    @property
    def degree(self):
        return len(self.images)

    def __mul__(self, other):
        a = self.images
        return Permutation(a[i] for i in other.images)

    def inverse(self):
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(inv)

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __lt__(self, other):
        return self.images < other.images

    def __hash__(self):
        return self._hash

    def __getitem__(self, i):
        return self.images[i]

    def is_identity(self):
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self):
        seen, out = set(), []
        for start in range(len(self.images)):
            if start in seen or self.images[start] == start:
                continue
            cyc, x = [], start
            while x not in seen:
                seen.add(x)
                cyc.append(x)
                x = self.images[x]
            out.append(tuple(cyc))
        return out

    def order(self):
        k = 1
        for c in self.cycles():
            k = k * len(c) // gcd(k, len(c))
        return k

    def cycle_string(self, one_based=True):
        off = 1 if one_based else 0
        cyc = self.cycles()
        if not cyc:
            return "()"
        return "".join("(" + " ".join(str(i + off) for i in c) + ")" for c in cyc)

    def __repr__(self):
        return f"Permutation({self.cycle_string(one_based=False)}; degree={self.degree})"


class PermGroup:
    """A finite permutation group with every element materialized."""

    def __init__(self, degree, generators, elements, name=None):
        self.degree = degree
        self.generators = tuple(generators)
        self.elements = tuple(elements)
        self.name = name
        self._index = {e.images: i for i, e in enumerate(self.elements)}

    @property
    def order(self):
        return len(self.elements)

    def __repr__(self):
        label = self.name or f"degree {self.degree}"
        return f"<PermGroup {label} order={self.order}>"

    def index(self, perm):
        try:
            return self._index[perm.images]
        except KeyError:
            raise NotASubgroup(f"{perm!r} is not an element of {self!r}") from None

    # -- lazily built arithmetic tables ---------------------------------

    def _require_table(self):
        if self.order > TABLE_CAP:
            raise CapExceeded(f"order {self.order} exceeds table cap {TABLE_CAP}")

    @cached_property
    def table(self):
        """``table[a, b]`` is the index of ``elements[a] * elements[b]``."""
        self._require_table()
        n = self.order
        imgs = np.array([e.images for e in self.elements], dtype=np.int32).reshape(n, self.degree)
        out = np.empty((n, n), dtype=np.int32)
        index = self._index
        for a in range(n):
            prods = imgs[a][imgs]
            out[a] = [index[tuple(r)] for r in prods.tolist()]
        return out

    @cached_property
    def inverses(self):
        t = self.table
        return np.argmin(t, axis=1).astype(np.int32)

    @cached_property
    def conj(self):
        """``conj[g, h]`` is the index of ``g^-1 h g``."""
        t = self.table
        n = self.order
        left = t[self.inverses, :]
        return np.ascontiguousarray(t[left, np.arange(n)[:, None]], dtype=np.int32)

    @cached_property
    def element_orders(self):
        return kernels.element_orders(self.table)

    # -- subgroups -------------------------------------------------------

    def whole(self):
        return Subgroup(self, tuple(range(self.order)))

    def trivial(self):
        return Subgroup(self, (0,))

    def subgroup(self, elements):
        """Wrap an index set, checking that it is a subgroup."""
        elems = tuple(sorted(set(int(e) for e in elements)))
        if not elems or elems[0] != 0 or elems[-1] >= self.order:
            raise NotASubgroup("index set must contain the identity and valid indices")
        arr = np.array(elems)
        prods = self.table[np.ix_(arr, arr)]
        if not np.isin(prods, arr).all():
            raise NotASubgroup("index set is not closed under multiplication")
        return Subgroup(self, elems)

    def generate(self, gens):
        """Subgroup generated by element indices or permutations."""
        idx = [self.index(g) if isinstance(g, Permutation) else int(g) for g in gens]
        return Subgroup(self, tuple(kernels.closure(self.table, idx)))

    @cached_property
    def classes(self):
        return subgroup_classes(self)


@dataclass(frozen=True, eq=False)
class Subgroup:
    group: PermGroup
    elements: tuple

    @property
    def order(self):
        return len(self.elements)

    @cached_property
    def members(self):
        return frozenset(self.elements)

    def __contains__(self, idx):
        return idx in self.members

    def __eq__(self, other):
        return isinstance(other, Subgroup) and self.group is other.group and self.elements == other.elements

    def __hash__(self):
        return hash(self.elements)

    def __le__(self, other):
        return self.members <= other.members

    def __lt__(self, other):
        return self.members < other.members

    def __and__(self, other):
        return Subgroup(self.group, tuple(sorted(self.members & other.members)))

    def conjugate(self, g):
        """``g^-1 H g`` for an element index ``g``."""
        row = self.group.conj[g]
        return Subgroup(self.group, tuple(sorted(int(row[h]) for h in self.elements)))

    def is_trivial(self):
        return self.elements == (0,)

    def is_normal(self, within=None):
        """Normality in ``within`` (default: the ambient group)."""
        conj = self.group.conj
        gs = range(self.group.order) if within is None else within.elements
        arr = np.array(self.elements)
        sub = conj[np.ix_(np.array(list(gs)), arr)]
        return bool(np.isin(sub, arr).all())

    def is_cyclic(self):
        orders = self.group.element_orders
        return any(orders[e] == self.order for e in self.elements)

    def is_abelian(self):
        arr = np.array(self.elements)
        sub = self.group.table[np.ix_(arr, arr)]
        return bool((sub == sub.T).all())

    def perms(self):
        return [self.group.elements[i] for i in self.elements]

    def __repr__(self):
        return f"<Subgroup order={self.order} of {self.group!r}>"


@dataclass(frozen=True, eq=False)
class SubgroupClass:
    ambient: PermGroup
    representative: tuple
    order: int
    is_normal: bool
    class_size: int
    generators: tuple = field(default=(), repr=False)
    label: str = ""

    @property
    def subgroup(self):
        return Subgroup(self.ambient, self.representative)

    def __repr__(self):
        return f"<SubgroupClass {self.label or self.order} size={self.class_size}>"


@dataclass(frozen=True)
class SubgroupFamily:
    ambient: PermGroup
    member_classes: tuple

    def labels(self):
        return [c.label for c in self.member_classes]

    def __contains__(self, cls):
        return any(c is cls for c in self.member_classes)


def group_from_generators(degree, gens, cap=None, name=None):
    """Materialize the group generated by ``gens`` by breadth-first closure."""
    cap = order_cap() if cap is None else cap
    gens = [g if isinstance(g, Permutation) else Permutation(g) for g in gens]
    for g in gens:
        if g.degree != degree:
            raise InvalidPermutation(f"generator {g!r} does not have degree {degree}")
    ident = Permutation.identity(degree)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if len(seen) > cap:
                        raise CapExceeded(f"group order exceeds cap {cap}")
        frontier = nxt
    return PermGroup(degree, gens, sorted(seen), name=name)


def as_subgroup(h, group=None):
    """Coerce a Subgroup, SubgroupClass, PermGroup or index iterable."""
    if isinstance(h, Subgroup):
        return h
    if isinstance(h, SubgroupClass):
        return h.subgroup
    if isinstance(h, PermGroup):
        return h.whole()
    if group is None:
        raise TypeError("an index set needs an ambient group")
    return group.subgroup(h)


def _prime_power_extenders(G):
    """One generator per cyclic subgroup of prime-power order > 1."""
    orders = G.element_orders
    seen, out = set(), []
    for x in range(1, G.order):
        o = orders[x]
        if len(prime_divisors(o)) != 1:
            continue
        cyc = tuple(kernels.closure(G.table, [x]))
        if cyc not in seen:
            seen.add(cyc)
            out.append(x)
    return out


def subgroup_classes(G):
    """All conjugacy classes of subgroups, sorted by (order, representative).

    Cyclic extension: every subgroup is a join of prime-power cyclic
    subgroups, and extending each class representative by every such cyclic
    subgroup reaches every class.
    """
    cap = lattice_cap()
    if G.order > cap:
        raise CapExceeded(f"order {G.order} exceeds lattice cap {cap}")
    table, conj = G.table, G.conj
    extenders = _prime_power_extenders(G)
    found = {(0,): ((), G.order)}
    frontier = [((0,), ())]
    seen = {(0,)}
    while frontier:
        nxt = []
        for rep, gens in frontier:
            members = set(rep)
            for x in extenders:
                if x in members:
                    continue
                new_gens = gens + (x,)
                joined = tuple(kernels.closure(table, new_gens))
                if joined in seen:
                    continue
                seen.add(joined)
                canon, g, stab = kernels.canonical_conjugate(conj, joined)
                seen.add(canon)
                if canon in found:
                    continue
                canon_gens = tuple(int(conj[g, y]) for y in new_gens)
                found[canon] = (canon_gens, stab)
                nxt.append((canon, canon_gens))
        frontier = nxt
    classes = []
    for rep in sorted(found, key=lambda r: (len(r), r)):
        gens, stab = found[rep]
        size = G.order // stab
        classes.append(SubgroupClass(G, rep, len(rep), size == 1, size, gens))
    return _label_classes(G, classes)


def _structure_label(G, H):
    n = H.order
    if n == 1:
        return "1"
    if n == G.order and G.name:
        return G.name
    if H.is_cyclic():
        return f"C{n}"
    if H.is_abelian():
        return "V4" if n == 4 else f"Ab{n}"
    orders = G.element_orders
    if n % 2 == 0:
        for x in H.elements:
            if orders[x] == n // 2:
                cyc = set(kernels.closure(G.table, [x]))
                if all(orders[y] == 2 for y in H.elements if y not in cyc):
                    return f"D{n}"
    return f"H{n}"


def _label_classes(G, classes):
    base = [_structure_label(G, c.subgroup) for c in classes]
    counts = {}
    for b in base:
        counts[b] = counts.get(b, 0) + 1
    used = {}
    out = []
    for c, b in zip(classes, base):
        label = b
        if counts[b] > 1:
            k = used.get(b, 0)
            used[b] = k + 1
            label = f"{b}{chr(ord('a') + k)}" if k < 26 else f"{b}_{k}"
        out.append(
            SubgroupClass(c.ambient, c.representative, c.order, c.is_normal, c.class_size, c.generators, label)
        )
    return out


def class_of(G, h):
    """The SubgroupClass containing subgroup ``h``."""
    h = as_subgroup(h, G)
    canon, _, _ = kernels.canonical_conjugate(G.conj, h.elements)
    for c in G.classes:
        if c.representative == canon:
            return c
    raise NotASubgroup("subgroup not found in the class list")


def o_p(h, p, group=None):
    """Smallest normal subgroup of ``h`` with p-power index.

    Generated by the elements of ``h`` whose order is coprime to ``p``.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    h = as_subgroup(h, group)
    orders = h.group.element_orders
    gens = [x for x in h.elements if orders[x] % p != 0 and x != 0]
    return Subgroup(h.group, tuple(kernels.closure(h.group.table, gens)))


def is_p_subnormal(h, G, p):
    """Whether ``h`` contains ``o_p(G)``."""
    if isinstance(h, Subgroup):
        G.subgroup(h.elements)
    h = as_subgroup(h, G)
    return o_p(G.whole(), p) <= h


def is_p_perfect(h, p, group=None):
    h = as_subgroup(h, group)
    return o_p(h, p) == h


def family_from_predicate(G, kind, N):
    """Subgroup family ``n_free`` (K meets N trivially) or ``not_containing`` (K does not contain N)."""
    n = as_subgroup(N, G)
    if not n.is_normal():
        raise NotNormal("N must be normal in G")
    if kind == "n_free":
        # N normal: K∩N trivial is conjugation invariant, but check every conjugate anyway
        def keep(c):
            return all((c.subgroup.conjugate(g) & n).is_trivial() for g in range(G.order))
    elif kind == "not_containing":
        def keep(c):
            return not n <= c.subgroup
    else:
        raise ValueError(f"unknown family kind {kind!r}")
    return SubgroupFamily(G, tuple(c for c in G.classes if keep(c)))


def parse_group_spec(text, name=None):
    """Parse ``degree N`` followed by one 1-based cycle-notation generator per line."""
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ParseError("empty group spec")
    m = re.fullmatch(r"degree\s+(\d+)", lines[0])
    if not m:
        raise ParseError("group spec must start with 'degree N'")
    degree = int(m.group(1))
    try:
        gens = [Permutation.parse(ln, degree, one_based=True) for ln in lines[1:]]
    except InvalidPermutation as exc:
        raise ParseError(str(exc)) from exc
    return group_from_generators(degree, gens, name=name)
