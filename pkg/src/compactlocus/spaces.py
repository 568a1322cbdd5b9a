"""Finite spectral spaces as specialization posets, and the chromatic model of Spc(SH^c).

In a finite spectral space every specialization-closed subset is Thomason,
so closed sets, Thomason subsets and up-sets of the specialization relation
all coincide here.
"""

from __future__ import annotations

import json
import math
import re
from dataclasses import dataclass

from .errors import IllegalThomason, NotClosed, ParseError

INF = math.inf


class FinitePoset:
    """Points with a specialization relation ``x ⤳ y`` (``y`` lies in the closure of ``x``).

    The relation given is closed reflexively and transitively; cycles are
    rejected since distinct points of a spectral space have distinct closures.
    """

    def __init__(self, points, specializations=()):
        self.points = tuple(points)
        if len(set(self.points)) != len(self.points):
            raise ValueError("duplicate point names")
        self._pos = {x: i for i, x in enumerate(self.points)}
        n = len(self.points)
        up = [1 << i for i in range(n)]
        for a, b in specializations:
            up[self._pos[a]] |= 1 << self._pos[b]
        changed = True
        while changed:
            changed = False
            for i in range(n):
                acc = up[i]
                rest = acc & ~(1 << i)
                while rest:
                    j = (rest & -rest).bit_length() - 1
                    rest &= rest - 1
                    acc |= up[j]
                if acc != up[i]:
                    up[i] = acc
                    changed = True
        for i in range(n):
            for j in range(n):
                if i != j and up[i] >> j & 1 and up[j] >> i & 1:
                    raise ValueError(f"{self.points[i]} and {self.points[j]} have equal closures")
        self._up = up
        self._down = [sum(1 << j for j in range(n) if up[j] >> i & 1) for i in range(n)]

    def __len__(self):
        return len(self.points)

    def __repr__(self):
        return f"<FinitePoset {len(self.points)} points>"

    def mask(self, members):
        m = 0
        for x in members:
            try:
                m |= 1 << self._pos[x]
            except KeyError:
                raise ValueError(f"unknown point {x!r}") from None
        return m

    def members(self, mask):
        return frozenset(x for i, x in enumerate(self.points) if mask >> i & 1)

    def full_mask(self):
        return (1 << len(self.points)) - 1

    def closure(self, x):
        """All specializations of ``x``, including ``x``."""
        return self.members(self._up[self._pos[x]])

    def generizations(self, x):
        return self.members(self._down[self._pos[x]])

    def specializes(self, a, b):
        return bool(self._up[self._pos[a]] >> self._pos[b] & 1)

    def cover_pairs(self):
        """Hasse edges ``(a, b)`` with ``a ⤳ b`` and nothing strictly between."""
        n, out = len(self.points), []
        for i in range(n):
            strict = self._up[i] & ~(1 << i)
            for j in range(n):
                if not strict >> j & 1:
                    continue
                between = strict & self._down[j] & ~(1 << j)
                if not between:
                    out.append((self.points[i], self.points[j]))
        return out

    def is_specialization_closed(self, members):
        m = self.mask(members)
        return all(self._up[i] & ~m == 0 for i in range(len(self.points)) if m >> i & 1)

    def is_generization_closed(self, members):
        m = self.mask(members)
        return all(self._down[i] & ~m == 0 for i in range(len(self.points)) if m >> i & 1)

    def components(self):
        """Connected components of the comparability graph, in point order."""
        n = len(self.points)
        comp = [-1] * n
        out = []
        for s in range(n):
            if comp[s] >= 0:
                continue
            stack, cur = [s], []
            comp[s] = len(out)
            while stack:
                i = stack.pop()
                cur.append(i)
                nbrs = self._up[i] | self._down[i]
                for j in range(n):
                    if nbrs >> j & 1 and comp[j] < 0:
                        comp[j] = len(out)
                        stack.append(j)
            out.append(tuple(self.points[i] for i in sorted(cur)))
        return out

    def height(self, x):
        """Length of the longest strict generization chain ending at ``x``."""
        memo = {}

        def h(i):
            if i not in memo:
                below = self._down[i] & ~(1 << i)
                memo[i] = 1 + max((h(j) for j in range(len(self.points)) if below >> j & 1), default=-1)
            return memo[i]

        return h(self._pos[x])

    @classmethod
    def parse(cls, text):
        """Lines ``point a`` and ``spec a b`` (``a`` specializes to ``b``); ``#`` comments."""
        points, specs = [], []
        for lineno, raw in enumerate(text.splitlines(), 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            parts = line.split()
            if parts[0] == "point" and len(parts) == 2:
                if parts[1] not in points:
                    points.append(parts[1])
            elif parts[0] == "spec" and len(parts) == 3:
                specs.append((parts[1], parts[2]))
            else:
                raise ParseError(f"line {lineno}: cannot parse {raw!r}")
        for a, b in specs:
            for x in (a, b):
                if x not in points:
                    raise ParseError(f"undeclared point {x!r}")
        try:
            return cls(points, specs)
        except ValueError as exc:
            raise ParseError(str(exc)) from exc

    def to_text(self):
        lines = [f"point {x}" for x in self.points]
        lines += [f"spec {a} {b}" for a, b in self.cover_pairs()]
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class PosetSubset:
    carrier: FinitePoset
    members: frozenset
    flavor: str = "arbitrary"

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(self.members))
        if self.flavor not in ("closed", "open", "arbitrary"):
            raise ValueError(f"unknown flavor {self.flavor!r}")
        if self.flavor == "closed" and not self.carrier.is_specialization_closed(self.members):
            raise NotClosed(f"{sorted(self.members)} is not specialization-closed")
        if self.flavor == "open" and not self.carrier.is_generization_closed(self.members):
            raise NotClosed(f"{sorted(self.members)} is not open")

    @property
    def is_closed(self):
        return self.carrier.is_specialization_closed(self.members)

    def ordered(self):
        return [x for x in self.carrier.points if x in self.members]

    def to_json(self):
        return {"members": self.ordered(), "closed": self.is_closed}

    @classmethod
    def from_json(cls, carrier, data):
        flavor = "closed" if data.get("closed") else "arbitrary"
        return cls(carrier, frozenset(data["members"]), flavor)


def complement(Y):
    return PosetSubset(Y.carrier, frozenset(Y.carrier.points) - Y.members)


def largest_specialization_closed_inside(X, U):
    """Points whose whole closure lies in ``U``."""
    members = U.members if isinstance(U, PosetSubset) else frozenset(U)
    m = X.mask(members)
    keep = [x for i, x in enumerate(X.points) if X._up[i] & ~m == 0]
    return PosetSubset(X, frozenset(keep), "closed")


def finite_localization_locus(X, Y):
    """Locus of the finite localization away from the closed subset ``Y``.

    The largest closed subset of ``X`` inside ``X \\ Y``.
    """
    members = Y.members if isinstance(Y, PosetSubset) else frozenset(Y)
    if not X.is_specialization_closed(members):
        raise NotClosed(f"{sorted(members)} is not specialization-closed")
    return largest_specialization_closed_inside(X, frozenset(X.points) - members)


def is_clopen(X, Y):
    members = Y.members if isinstance(Y, PosetSubset) else frozenset(Y)
    return X.is_specialization_closed(members) and X.is_generization_closed(members)


# -- chromatic model ------------------------------------------------------------


def _check_threshold(t):
    if t is None:
        return None
    if t == INF:
        return INF
    if isinstance(t, bool) or int(t) != t or t < 2:
        raise ValueError(f"column threshold must be an integer >= 2 or inf, got {t!r}")
    return int(t)


def _threshold_json(t):
    if t is None:
        return None
    return {"from": "inf" if t == INF else t}


def _threshold_from_json(d):
    if d is None:
        return None
    v = d["from"]
    return INF if v in ("inf", "infinity") else _check_threshold(v)


@dataclass(frozen=True)
class ChromaticSpace:
    """Spc(SH^c) with explicit primes; other primes are covered by a default rule."""

    primes: tuple

    def __post_init__(self):
        object.__setattr__(self, "primes", tuple(sorted(set(int(p) for p in self.primes))))


@dataclass(frozen=True)
class ChromaticSubset:
    """A subset of Spc(SH^c) described column by column.

    ``columns`` maps explicit primes to ``None`` (empty column) or a threshold
    ``n``, meaning heights ``n..inf``. ``default`` applies to every other
    prime. ``generic`` is membership of the shared height-one point.
    """

    columns: tuple = ()
    default: object = None
    generic: bool = False

    def __post_init__(self):
        cols = dict(self.columns) if not isinstance(self.columns, dict) else self.columns
        cols = tuple(sorted((int(p), _check_threshold(t)) for p, t in cols.items()))
        object.__setattr__(self, "columns", cols)
        object.__setattr__(self, "default", _check_threshold(self.default))
        if self.generic and (self.default != 2 or any(t != 2 for _, t in cols)):
            raise ValueError("a subset holding the generic point must contain every column from height 2")

    def column(self, p):
        for q, t in self.columns:
            if q == p:
                return t
        return self.default

    def contains(self, p, n):
        if n == 1:
            return self.generic
        t = self.column(p)
        return t is not None and n >= t

    def is_empty(self):
        return not self.generic and self.default is None and all(t is None for _, t in self.columns)

    def to_json(self):
        return {
            "columns": {str(p): _threshold_json(t) for p, t in self.columns},
            "default": _threshold_json(self.default),
            "generic": self.generic,
        }

    def dumps(self):
        return json.dumps(self.to_json(), sort_keys=False)

    @classmethod
    def from_json(cls, data):
        if isinstance(data, str):
            data = json.loads(data)
        return cls(
            {int(p): _threshold_from_json(v) for p, v in data["columns"].items()},
            _threshold_from_json(data.get("default")),
            bool(data.get("generic", False)),
        )


def p_localization_subset(space, p):
    """Thomason subset whose finite localization is p-localization: every column but ``p``."""
    return ChromaticSubset({q: (None if q == p else 2) for q in sorted(set(space.primes) | {p})}, default=2)


def sh_localization_locus(space, Y):
    """Locus of the finite localization of SH away from ``Y``, column by column.

    Each column's closure contains its top point, so a column survives only
    when ``Y`` misses it entirely; the generic point survives only for empty ``Y``.
    """
    primes = sorted(set(space.primes) | {p for p, _ in Y.columns})
    if Y.generic and not all(Y.column(p) == 2 for p in primes):
        raise IllegalThomason("Y holds the generic point but is not the whole space")
    for t in [Y.default] + [Y.column(p) for p in primes]:
        if t == INF:
            raise IllegalThomason("closure of a height-infinity point is not Thomason")
    cols = {p: (2 if Y.column(p) is None else None) for p in primes}
    default = 2 if Y.default is None else None
    empty = Y.default is None and all(Y.column(p) is None for p in primes) and not Y.generic
    return ChromaticSubset(cols, default, empty)


def parse_point_list(text):
    """Comma- or space-separated point names; empty string gives the empty set."""
    return frozenset(t for t in re.split(r"[\s,]+", text.strip()) if t)
