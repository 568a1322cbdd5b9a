"""Loci inside the symbolic spectrum of SH(G)^c for a finite group G.

A point is P(H, p, n) for a subgroup class H, a prime p and a chromatic
height 1 <= n <= inf, with P(H, p, 1) shared by all primes. Every locus
computed here is n-uniform above height 2, so a locus is stored as one flag
per (class, column) plus one height-one flag per class. Columns are the
primes dividing |G| followed by ``generic``, which stands for every other
prime at once.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import SpectrumMismatch
from . import kernels
from .groups import Subgroup, SubgroupClass, as_subgroup, is_prime, o_p, prime_divisors
from .spaces import ChromaticSubset

GENERIC = "generic"


@dataclass(frozen=True, eq=False)
class EqSpectrum:
    group: object
    classes: tuple
    primes: tuple

    @property
    def columns(self):
        return self.primes + (GENERIC,)

    def class_index(self, cls):
        for i, c in enumerate(self.classes):
            if c is cls or c.representative == getattr(cls, "representative", None):
                return i
        raise KeyError(cls)


def spectrum(G, primes=None):
    """The spectrum model of ``G``, cached on the group.

    Explicit columns are the primes dividing |G| plus any extra ``primes``.
    """
    cols = set(prime_divisors(G.order))
    if primes:
        bad = [p for p in primes if not is_prime(p)]
        if bad:
            raise ValueError(f"not prime: {bad}")
        cols |= set(primes)
    key = tuple(sorted(cols))
    cache = G.__dict__.setdefault("_spectra", {})
    if key not in cache:
        cache[key] = EqSpectrum(G, tuple(G.classes), key)
    return cache[key]


@dataclass(frozen=True, eq=False)
class EqLocus:
    """Membership flags: ``tall[i][j]`` for class i and column j, ``height_one[i]``."""

    spectrum: EqSpectrum
    tall: tuple
    height_one: tuple
    kind: str = ""
    normal: str = ""

    def __post_init__(self):
        tall = tuple(tuple(bool(v) for v in row) for row in self.tall)
        h1 = tuple(bool(v) for v in self.height_one)
        object.__setattr__(self, "tall", tall)
        object.__setattr__(self, "height_one", h1)
        ncol = len(self.spectrum.columns)
        if len(tall) != len(self.spectrum.classes) or any(len(r) != ncol for r in tall):
            raise ValueError("flag table does not match the spectrum")
        for row, h in zip(tall, h1):
            if h and not all(row):
                raise ValueError("height-one point present without every column above it")

    def __eq__(self, other):
        return (
            isinstance(other, EqLocus)
            and self.spectrum is other.spectrum
            and self.tall == other.tall
            and self.height_one == other.height_one
        )

    def __hash__(self):
        return hash((self.tall, self.height_one))

    def is_whole(self):
        return all(self.height_one)

    def is_empty(self):
        return not any(any(r) for r in self.tall)

    def member(self, cls, column, n=2):
        """Membership of P(H, column, n); ``column`` ignored at n == 1."""
        i = cls if isinstance(cls, int) else self.spectrum.class_index(cls)
        if n == 1:
            return self.height_one[i]
        cols = self.spectrum.columns
        j = cols.index(column) if column in cols else cols.index(GENERIC)
        return self.tall[i][j]

    def classes_fully_included(self):
        return [c for c, h in zip(self.spectrum.classes, self.height_one) if h]

    def to_json(self):
        S = self.spectrum
        out = {"group": S.group.name or "G"}
        if self.normal:
            out["normal"] = self.normal
        if self.kind:
            out["kind"] = self.kind
        out["primes"] = list(S.primes)
        out["classes"] = [
            {
                "label": c.label,
                "order": c.order,
                "rep": rep_string(c),
                "columns": {str(col): v for col, v in zip(S.columns, row)},
                "height_one": h,
            }
            for c, row, h in zip(S.classes, self.tall, self.height_one)
        ]
        return out

    def dumps(self):
        return json.dumps(self.to_json(), indent=2) + "\n"

    @classmethod
    def from_json(cls, data, G):
        """Rebuild against ``G``; classes are matched by their generators."""
        if isinstance(data, str):
            data = json.loads(data)
        S = spectrum(G, data["primes"])
        if list(S.primes) != list(data["primes"]):
            raise SpectrumMismatch("prime list does not match the group")
        from .groups import Permutation, class_of

        tall = [[False] * len(S.columns) for _ in S.classes]
        h1 = [False] * len(S.classes)
        seen = set()
        for entry in data["classes"]:
            gens = parse_rep(entry["rep"], G.degree)
            c = class_of(G, G.generate([Permutation(g) for g in gens]))
            i = S.class_index(c)
            seen.add(i)
            tall[i] = [bool(entry["columns"][str(col)]) for col in S.columns]
            h1[i] = bool(entry["height_one"])
        if len(seen) != len(S.classes):
            raise SpectrumMismatch("class list does not match the group")
        return cls(S, tall, h1, data.get("kind", ""), data.get("normal", ""))


def rep_string(c):
    """Generators of the class representative in 1-based cycle notation."""
    G = c.ambient
    if not c.generators:
        return "<>"
    return "<" + ", ".join(G.elements[g].cycle_string() for g in c.generators) + ">"


def parse_rep(text, degree):
    from .groups import Permutation

    body = text.strip()
    if not (body.startswith("<") and body.endswith(">")):
        raise ValueError(f"bad representative string {text!r}")
    body = body[1:-1].strip()
    if not body:
        return []
    return [Permutation.parse(part, degree).images for part in body.split(",")]


def _make(S, rows, kind="", normal=""):
    # height one iff every column holds: p not dividing |H| behaves like the generic column
    return EqLocus(S, rows, [all(r) for r in rows], kind, normal)


def whole_locus(G, primes=None):
    S = spectrum(G, primes)
    return EqLocus(S, [[True] * len(S.columns)] * len(S.classes), [True] * len(S.classes), "whole")


def empty_locus(G, primes=None):
    S = spectrum(G, primes)
    return EqLocus(S, [[False] * len(S.columns)] * len(S.classes), [False] * len(S.classes), "empty")


def _normal(G, N):
    from .errors import NotNormal

    n = as_subgroup(N, G)
    if not n.is_normal():
        raise NotNormal("N must be a normal subgroup")
    return n


def _reps(S, reps):
    if reps is None:
        return [c.subgroup for c in S.classes]
    reps = [as_subgroup(r, S.group) for r in reps]
    if len(reps) != len(S.classes):
        raise ValueError("one representative per class required")
    return reps


def _label(G, n):
    from .groups import class_of

    return class_of(G, n).label


def _column_o_p(H, col):
    return H if col == GENERIC or H.order % col else o_p(H, col)


def inflation_locus(G, N, reps=None, primes=None):
    """Locus of inflation from G/N: P(H,p,n) present iff N∩H lies in o_p(H)."""
    n = _normal(G, N)
    S = spectrum(G, primes)
    rows = []
    for H in _reps(S, reps):
        meet = n & H
        rows.append([meet <= _column_o_p(H, col) for col in S.columns])
    return _make(S, rows, "inflation", _label(G, n))


def geometric_fixed_locus(G, N, reps=None, primes=None):
    """Locus of relative geometric N-fixed points: P(H,p,n) present iff o_p(H) contains N."""
    n = _normal(G, N)
    S = spectrum(G, primes)
    rows = []
    for H in _reps(S, reps):
        rows.append([n <= _column_o_p(H, col) for col in S.columns])
    return _make(S, rows, "geomfix", _label(G, n))


def absolute_geometric_fixed_locus(H, primes=None):
    """Locus of absolute geometric H-fixed points, a subset of Spc(SH^c).

    Column p is present (from height 2) iff H is p-perfect. Columns are listed
    for the primes dividing the ambient order; every other prime is covered by
    the default, where p-perfection is automatic.
    """
    h = as_subgroup(H)
    primes = sorted(set(prime_divisors(h.group.order)) | set(primes or ()))
    cols = {p: (2 if o_p(h, p) == h else None) for p in primes}
    generic = all(t == 2 for t in cols.values())
    return ChromaticSubset(cols, default=2, generic=generic)


def _subconjugate(G, small, big):
    return kernels.is_subconjugate(G.conj, small.elements, big.elements)


def orbit_support(G, H, primes=None):
    """Support of the orbit G/H_+: every class subconjugate to H, fully."""
    S = spectrum(G, primes)
    h = as_subgroup(H, G)
    flags = [_subconjugate(G, c.subgroup, h) for c in S.classes]
    label = H.label if isinstance(H, SubgroupClass) else ""
    return EqLocus(S, [[f] * len(S.columns) for f in flags], flags, "support", label)


def n_free_locus(G, N, primes=None):
    """Union of the orbit supports over the family of subgroups meeting N trivially."""
    from .groups import family_from_predicate

    n = _normal(G, N)
    fam = family_from_predicate(G, "n_free", n)
    out = empty_locus(G, primes)
    for c in fam.member_classes:
        out = locus_union(out, orbit_support(G, c, primes))
    return EqLocus(out.spectrum, out.tall, out.height_one, "nfree", _label(G, n))


def _same(a, b):
    if a.spectrum is not b.spectrum:
        raise SpectrumMismatch("loci live on different spectra")


def locus_union(a, b):
    _same(a, b)
    rows = [[x or y for x, y in zip(r, s)] for r, s in zip(a.tall, b.tall)]
    return EqLocus(a.spectrum, rows, [x or y for x, y in zip(a.height_one, b.height_one)])


def locus_intersect(a, b):
    _same(a, b)
    rows = [[x and y for x, y in zip(r, s)] for r, s in zip(a.tall, b.tall)]
    return EqLocus(a.spectrum, rows, [x and y for x, y in zip(a.height_one, b.height_one)])


def locus_contains(a, b):
    """Whether ``b`` is a subset of ``a``."""
    _same(a, b)
    for r, s in zip(a.tall, b.tall):
        if any(y and not x for x, y in zip(r, s)):
            return False
    return all(x or not y for x, y in zip(a.height_one, b.height_one))


__all__ = [
    "GENERIC",
    "EqLocus",
    "EqSpectrum",
    "Subgroup",
    "absolute_geometric_fixed_locus",
    "empty_locus",
    "geometric_fixed_locus",
    "inflation_locus",
    "locus_contains",
    "locus_intersect",
    "locus_union",
    "n_free_locus",
    "orbit_support",
    "spectrum",
    "whole_locus",
]
