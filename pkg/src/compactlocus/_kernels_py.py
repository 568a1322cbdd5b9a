"""Pure-Python implementations of the group kernels.

Every function here has a drop-in twin in ``_kernels.pyx``; the two must
return identical values. Tables are ``(n, n)`` integer arrays where
``table[a, b]`` is the index of ``a * b`` and index 0 is the identity.
"""


def closure(table, gens):
    """Sorted element indices of the subgroup generated by ``gens``."""
    rows = table.tolist() if hasattr(table, "tolist") else table
    gens = [int(g) for g in gens]
    seen = {0}
    queue = [0]
    i = 0
    while i < len(queue):
        row = rows[queue[i]]
        i += 1
        for g in gens:
            y = row[g]
            if y not in seen:
                seen.add(y)
                queue.append(y)
    return sorted(seen)


def element_orders(table):
    rows = table.tolist() if hasattr(table, "tolist") else table
    out = []
    for x in range(len(rows)):
        k, y = 1, x
        while y != 0:
            y = rows[y][x]
            k += 1
        out.append(k)
    return out


def canonical_conjugate(conj, elems):
    """Lexicographically least conjugate of ``elems``.

    Returns ``(rep, g, stab)`` where ``rep`` is the sorted tuple
    ``conj[g, elems]`` for the first minimizing ``g`` and ``stab`` counts the
    ``g`` with ``conj[g, elems] == elems`` (the normalizer order).
    """
    rows = conj.tolist() if hasattr(conj, "tolist") else conj
    elems = [int(e) for e in elems]
    own = tuple(sorted(elems))
    best, arg, stab = None, 0, 0
    for g, row in enumerate(rows):
        img = tuple(sorted(row[e] for e in elems))
        if img == own:
            stab += 1
        if best is None or img < best:
            best, arg = img, g
    return best, arg, stab


def is_subconjugate(conj, small, big):
    """True if some conjugate of ``small`` lies inside ``big``."""
    rows = conj.tolist() if hasattr(conj, "tolist") else conj
    big = set(int(b) for b in big)
    small = [int(s) for s in small]
    return any(all(row[s] in big for s in small) for row in rows)
