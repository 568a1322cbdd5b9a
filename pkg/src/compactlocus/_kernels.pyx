# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled group kernels; see ``_kernels_py`` for the reference semantics."""

import numpy as np
cimport numpy as cnp

cnp.import_array()


def closure(table, gens):
    cdef int[:, ::1] t = np.ascontiguousarray(table, dtype=np.int32)
    cdef Py_ssize_t n = t.shape[0]
    cdef int[::1] g = np.asarray(list(gens), dtype=np.int32)
    cdef Py_ssize_t ng = g.shape[0]
    cdef unsigned char[::1] seen = np.zeros(n, dtype=np.uint8)
    cdef int[::1] queue = np.empty(n, dtype=np.int32)
    cdef Py_ssize_t head = 0, tail = 1, j
    cdef int x, y
    queue[0] = 0
    seen[0] = 1
    while head < tail:
        x = queue[head]
        head += 1
        for j in range(ng):
            y = t[x, g[j]]
            if not seen[y]:
                seen[y] = 1
                queue[tail] = y
                tail += 1
    return [i for i in range(n) if seen[i]]


def element_orders(table):
    cdef int[:, ::1] t = np.ascontiguousarray(table, dtype=np.int32)
    cdef Py_ssize_t n = t.shape[0], x
    cdef int y, k
    out = []
    for x in range(n):
        k = 1
        y = <int>x
        while y != 0:
            y = t[y, x]
            k += 1
        out.append(k)
    return out


def canonical_conjugate(conj, elems):
    cdef int[:, ::1] c = np.ascontiguousarray(conj, dtype=np.int32)
    cdef Py_ssize_t n = c.shape[0], g, j
    own_arr = np.sort(np.asarray(list(elems), dtype=np.int32))
    cdef int[::1] own = own_arr
    cdef Py_ssize_t k = own.shape[0]
    cdef int[::1] best = own_arr.copy()
    cdef int[::1] img
    cdef unsigned char[::1] mark = np.zeros(n, dtype=np.uint8)
    cdef Py_ssize_t arg = 0, stab = 0, pos
    cdef int cmp
    img_arr = np.empty(k, dtype=np.int32)
    img = img_arr
    for g in range(n):
        # conjugation is a bijection, so a membership sweep yields the sorted image
        for j in range(k):
            mark[c[g, own[j]]] = 1
        pos = 0
        for j in range(n):
            if mark[j]:
                mark[j] = 0
                img[pos] = <int>j
                pos += 1
        cmp = 0
        for j in range(k):
            if img[j] != own[j]:
                cmp = 1
                break
        if cmp == 0:
            stab += 1
        if g == 0:
            best[:] = img
            arg = 0
            continue
        for j in range(k):
            if img[j] != best[j]:
                if img[j] < best[j]:
                    best[:] = img
                    arg = g
                break
    return tuple(int(v) for v in best), int(arg), int(stab)


def is_subconjugate(conj, small, big):
    cdef int[:, ::1] c = np.ascontiguousarray(conj, dtype=np.int32)
    cdef Py_ssize_t n = c.shape[0], g, j
    cdef int[::1] s = np.asarray(list(small), dtype=np.int32)
    cdef Py_ssize_t k = s.shape[0]
    cdef unsigned char[::1] inbig = np.zeros(n, dtype=np.uint8)
    cdef bint ok
    for b in big:
        inbig[<Py_ssize_t>b] = 1
    for g in range(n):
        ok = True
        for j in range(k):
            if not inbig[c[g, s[j]]]:
                ok = False
                break
        if ok:
            return True
    return False
