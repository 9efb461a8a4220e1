# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled grid kernels; mirrors ``_pure.py`` exactly.

Keep the two implementations in lockstep: the parity tests generate random
pages and compare outputs element-for-element.
"""

from libc.stdlib cimport free, malloc


cdef inline bint _isect(long long ax, long long ay, long long aw, long long ah,
                        long long bx, long long by, long long bw, long long bh) nogil:
    return ax < bx + bw and bx < ax + aw and ay < by + bh and by < ay + ah


cdef long long _min_free_y(long long x, long long w, long long h, long long floor,
                           long long* sx, long long* sy, long long* sw, long long* sh,
                           int ns):
    cdef long long* cand = <long long*> malloc((ns + 1) * sizeof(long long))
    cdef int nc = 0, k, a, b
    cdef long long tmp, y, result = floor
    cdef bint is_free
    cand[nc] = floor
    nc += 1
    for k in range(ns):
        if sy[k] + sh[k] >= floor:
            cand[nc] = sy[k] + sh[k]
            nc += 1
    for a in range(1, nc):
        tmp = cand[a]
        b = a - 1
        while b >= 0 and cand[b] > tmp:
            cand[b + 1] = cand[b]
            b -= 1
        cand[b + 1] = tmp
    for a in range(nc):
        if a > 0 and cand[a] == cand[a - 1]:
            continue
        y = cand[a]
        is_free = True
        for k in range(ns):
            if _isect(x, y, w, h, sx[k], sy[k], sw[k], sh[k]):
                is_free = False
                break
        if is_free:
            result = y
            break
    free(cand)
    return result


cdef class _Arrays:
    cdef long long* x
    cdef long long* y
    cdef long long* w
    cdef long long* h
    cdef int n

    def __cinit__(self, rects):
        cdef int n = len(rects)
        self.n = n
        self.x = <long long*> malloc(n * sizeof(long long)) if n else NULL
        self.y = <long long*> malloc(n * sizeof(long long)) if n else NULL
        self.w = <long long*> malloc(n * sizeof(long long)) if n else NULL
        self.h = <long long*> malloc(n * sizeof(long long)) if n else NULL
        cdef int i
        for i in range(n):
            self.x[i] = rects[i][0]
            self.y[i] = rects[i][1]
            self.w[i] = rects[i][2]
            self.h[i] = rects[i][3]

    def __dealloc__(self):
        free(self.x)
        free(self.y)
        free(self.w)
        free(self.h)


def overlapping_pairs(rects):
    """All index pairs (i < j) whose rects intersect."""
    cdef _Arrays a = _Arrays(rects)
    cdef int i, j
    out = []
    for i in range(a.n):
        for j in range(i + 1, a.n):
            if _isect(a.x[i], a.y[i], a.w[i], a.h[i],
                      a.x[j], a.y[j], a.w[j], a.h[j]):
                out.append((i, j))
    return out


def has_overlap(rects):
    """Early-exit variant of :func:`overlapping_pairs`."""
    cdef _Arrays a = _Arrays(rects)
    cdef int i, j
    for i in range(a.n):
        for j in range(i + 1, a.n):
            if _isect(a.x[i], a.y[i], a.w[i], a.h[i],
                      a.x[j], a.y[j], a.w[j], a.h[j]):
                return True
    return False


def compact(rects):
    """Move each rect to the smallest collision-free y, x unchanged."""
    cdef _Arrays a = _Arrays(rects)
    cdef int n = a.n
    if n == 0:
        return []
    order = sorted(range(n), key=lambda i: (rects[i][1], rects[i][0]))
    cdef long long* sx = <long long*> malloc(n * sizeof(long long))
    cdef long long* sy = <long long*> malloc(n * sizeof(long long))
    cdef long long* sw = <long long*> malloc(n * sizeof(long long))
    cdef long long* sh = <long long*> malloc(n * sizeof(long long))
    cdef int ns = 0, i
    cdef long long ny
    out = [None] * n
    try:
        for i in order:
            ny = _min_free_y(a.x[i], a.w[i], a.h[i], 0, sx, sy, sw, sh, ns)
            out[i] = (a.x[i], ny, a.w[i], a.h[i])
            sx[ns] = a.x[i]
            sy[ns] = ny
            sw[ns] = a.w[i]
            sh[ns] = a.h[i]
            ns += 1
    finally:
        free(sx)
        free(sy)
        free(sw)
        free(sh)
    return out


def push_down(rects, int anchor):
    """Resolve collisions against a fixed anchor by pushing rects down."""
    cdef _Arrays a = _Arrays(rects)
    cdef int n = a.n
    if n == 0:
        return []
    order = sorted(
        (i for i in range(n) if i != anchor),
        key=lambda i: (rects[i][1], rects[i][0]),
    )
    cdef long long* sx = <long long*> malloc(n * sizeof(long long))
    cdef long long* sy = <long long*> malloc(n * sizeof(long long))
    cdef long long* sw = <long long*> malloc(n * sizeof(long long))
    cdef long long* sh = <long long*> malloc(n * sizeof(long long))
    cdef int ns = 0, i, k
    cdef long long y
    cdef bint blocked
    out = [None] * n
    try:
        out[anchor] = (a.x[anchor], a.y[anchor], a.w[anchor], a.h[anchor])
        sx[ns] = a.x[anchor]
        sy[ns] = a.y[anchor]
        sw[ns] = a.w[anchor]
        sh[ns] = a.h[anchor]
        ns += 1
        for i in order:
            y = a.y[i]
            blocked = False
            for k in range(ns):
                if _isect(a.x[i], y, a.w[i], a.h[i], sx[k], sy[k], sw[k], sh[k]):
                    blocked = True
                    break
            if blocked:
                y = _min_free_y(a.x[i], a.w[i], a.h[i], y, sx, sy, sw, sh, ns)
            out[i] = (a.x[i], y, a.w[i], a.h[i])
            sx[ns] = a.x[i]
            sy[ns] = y
            sw[ns] = a.w[i]
            sh[ns] = a.h[i]
            ns += 1
    finally:
        free(sx)
        free(sy)
        free(sw)
        free(sh)
    return out
