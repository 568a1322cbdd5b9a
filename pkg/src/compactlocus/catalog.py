"""Named groups: ``C<n>``, ``D<2n>``, ``S<n>``, ``A<n>``, ``C<n>xC<m>``."""

import re

from .errors import ParseError
from .groups import Permutation, group_from_generators


def _cycle(degree, pts):
    return Permutation.from_cycles(degree, [pts]) if len(pts) > 1 else Permutation.identity(degree)


def cyclic(n):
    return group_from_generators(n, [_cycle(n, list(range(n)))] if n > 1 else [], name=f"C{n}")


def dihedral(order):
    """Dihedral group of the given (even) order."""
    if order % 2 or order < 2:
        raise ParseError(f"dihedral order must be even, got {order}")
    n = order // 2
    name = f"D{order}"
    if n == 1:
        return group_from_generators(2, [_cycle(2, [0, 1])], name=name)
    if n == 2:
        a = Permutation.from_cycles(4, [(0, 1), (2, 3)])
        b = Permutation.from_cycles(4, [(0, 2), (1, 3)])
        return group_from_generators(4, [a, b], name=name)
    rot = _cycle(n, list(range(n)))
    ref = Permutation([(-i) % n for i in range(n)])
    return group_from_generators(n, [rot, ref], name=name)


def symmetric(n):
    gens = [] if n < 2 else [_cycle(n, [0, 1]), _cycle(n, list(range(n)))]
    return group_from_generators(max(n, 1), gens, name=f"S{n}")


def alternating(n):
    gens = [_cycle(n, [0, 1, k]) for k in range(2, n)]
    return group_from_generators(max(n, 1), gens, name=f"A{n}")


def cyclic_product(n, m):
    deg = n + m
    gens = [g for g in (_cycle(deg, list(range(n))), _cycle(deg, list(range(n, deg)))) if not g.is_identity()]
    return group_from_generators(deg, gens, name=f"C{n}xC{m}")


_PATTERNS = [
    (re.compile(r"C(\d+)x[C](\d+)"), lambda a, b: cyclic_product(int(a), int(b))),
    (re.compile(r"C(\d+)"), lambda a: cyclic(int(a))),
    (re.compile(r"D(\d+)"), lambda a: dihedral(int(a))),
    (re.compile(r"S(\d+)"), lambda a: symmetric(int(a))),
    (re.compile(r"A(\d+)"), lambda a: alternating(int(a))),
]


def is_catalog_name(name):
    return any(p.fullmatch(name) for p, _ in _PATTERNS)


def by_name(name):
    for pat, build in _PATTERNS:
        m = pat.fullmatch(name)
        if m:
            if any(int(x) < 1 for x in m.groups()):
                raise ParseError(f"bad group name {name!r}")
            return build(*m.groups())
    raise ParseError(f"unknown group name {name!r}")


def builtin_names(max_order=60):
    """Catalog names with group order at most ``max_order``.

    C_n (n <= 64), D_2n (n <= 32), S_n and A_n (n <= 5), C_n x C_m (2 <= n <= m, nm <= 64).
    """
    from math import factorial

    names = [f"C{n}" for n in range(1, 65) if n <= max_order]
    names += [f"D{2 * n}" for n in range(2, 33) if 2 * n <= max_order]
    names += [f"S{n}" for n in range(1, 6) if factorial(n) <= max_order]
    names += [f"A{n}" for n in range(1, 6) if max(1, factorial(n) // 2) <= max_order]
    names += [
        f"C{n}xC{m}" for n in range(2, 33) for m in range(n, 33) if n * m <= 64 and n * m <= max_order
    ]
    return names


def builtin_catalog(max_order=60):
    return [by_name(n) for n in builtin_names(max_order)]
