# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled kernels; same contract as ``_kernels_py``.

Element masks are limited to 64 bits and point masks to 24 bits here; the
dispatcher in ``kernels`` routes larger inputs to the pure backend.
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free, calloc

from .errors import CapExceeded


cdef uint64_t _closure(const int* add, const int* act, int m, int n, int zero, uint64_t seed) noexcept nogil:
    cdef uint64_t mask = seed | ((<uint64_t>1) << zero)
    cdef int members[64]
    cdef int count = 0, i, j, r, x, y, row
    cdef uint64_t s = mask
    for x in range(m):
        if (s >> x) & 1:
            members[count] = x
            count += 1
    i = 0
    while i < count:
        x = members[i]
        for r in range(n):
            y = act[r * m + x]
            if not ((mask >> y) & 1):
                mask |= (<uint64_t>1) << y
                members[count] = y
                count += 1
        row = x * m
        for j in range(i + 1):
            y = add[row + members[j]]
            if not ((mask >> y) & 1):
                mask |= (<uint64_t>1) << y
                members[count] = y
                count += 1
        i += 1
    return mask


cdef int* _as_c(seq) except NULL:
    cdef Py_ssize_t k, size = len(seq)
    cdef int* buf = <int*>malloc(max(size, 1) * sizeof(int))
    if buf == NULL:
        raise MemoryError()
    for k in range(size):
        buf[k] = seq[k]
    return buf


def closure(add, act, int m, int n, int zero, seed):
    cdef int* a = _as_c(add)
    cdef int* c = _as_c(act)
    cdef uint64_t out
    try:
        out = _closure(a, c, m, n, zero, <uint64_t>seed)
    finally:
        free(a)
        free(c)
    return out


def subsemimodules(add, act, int m, int n, int zero, Py_ssize_t cap):
    cdef int* a = _as_c(add)
    cdef int* c = _as_c(act)
    cdef int x
    cdef uint64_t s, t, g
    cdef Py_ssize_t ci, fi
    try:
        cyclic = sorted({_closure(a, c, m, n, zero, (<uint64_t>1) << x) for x in range(m)})
        seen = set(cyclic)
        frontier = list(cyclic)
        while frontier:
            nxt = []
            for fi in range(len(frontier)):
                s = frontier[fi]
                for ci in range(len(cyclic)):
                    g = cyclic[ci]
                    if g & ~s == 0:
                        continue
                    t = _closure(a, c, m, n, zero, s | g)
                    if t not in seen:
                        seen.add(t)
                        if len(seen) > cap:
                            raise CapExceeded(f"more than {cap} subsemimodules")
                        nxt.append(t)
            frontier = nxt
    finally:
        free(a)
        free(c)
    return sorted(seen)


cdef list _closure_family(list gens, unsigned int start, unsigned int width, bint use_or, Py_ssize_t cap, str what):
    cdef Py_ssize_t size = (<Py_ssize_t>1) << width
    cdef unsigned char* seen = <unsigned char*>calloc(size, 1)
    cdef unsigned int* g
    cdef unsigned int* queue
    cdef Py_ssize_t ng = len(gens), head = 0, tail = 0, k, count = 0
    cdef unsigned int s, t
    if seen == NULL:
        raise MemoryError()
    g = <unsigned int*>malloc(max(ng, 1) * sizeof(unsigned int))
    queue = <unsigned int*>malloc(min(size, cap + 1) * sizeof(unsigned int))
    if g == NULL or queue == NULL:
        free(seen); free(g); free(queue)
        raise MemoryError()
    try:
        for k in range(ng):
            g[k] = gens[k]
        seen[start] = 1
        queue[tail] = start
        tail += 1
        count = 1
        for k in range(ng):
            if not seen[g[k]]:
                seen[g[k]] = 1
                count += 1
                if count > cap:
                    raise CapExceeded(f"more than {cap} sets in {what} closure")
                queue[tail] = g[k]
                tail += 1
        while head < tail:
            s = queue[head]
            head += 1
            for k in range(ng):
                t = (s | g[k]) if use_or else (s & g[k])
                if not seen[t]:
                    seen[t] = 1
                    count += 1
                    if count > cap:
                        raise CapExceeded(f"more than {cap} sets in {what} closure")
                    queue[tail] = t
                    tail += 1
        out = [queue[k] for k in range(tail)]
    finally:
        free(seen)
        free(g)
        free(queue)
    out.sort()
    return out


def union_closure(masks, Py_ssize_t cap):
    gens = sorted(set(masks))
    width = max((x.bit_length() for x in gens), default=0)
    return _closure_family(gens, 0, width, True, cap, "union")


def intersection_closure(masks, full, Py_ssize_t cap):
    gens = sorted(set(masks))
    return _closure_family(gens, full, full.bit_length(), False, cap, "intersection")


def up_masks(subs, points):
    cdef Py_ssize_t i, k, np_ = len(points), ns = len(subs)
    cdef uint64_t s, v
    cdef uint64_t* pts = <uint64_t*>malloc(max(np_, 1) * sizeof(uint64_t))
    if pts == NULL:
        raise MemoryError()
    out = []
    try:
        for i in range(np_):
            pts[i] = points[i]
        for k in range(ns):
            s = subs[k]
            v = 0
            for i in range(np_):
                if s & ~pts[i] == 0:
                    v |= (<uint64_t>1) << i
            out.append(v)
    finally:
        free(pts)
    return out
