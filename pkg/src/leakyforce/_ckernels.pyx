# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels on 64-bit vertex masks (graphs with at most 64 vertices).

Mirrors ``_pykernels`` exactly, including search order and node counts.
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport malloc, free

BACKEND = "cython"
MAX_VERTICES = 64

cdef extern from *:
    """
    static inline int lf_popcount(unsigned long long x) { return __builtin_popcountll(x); }
    static inline int lf_ctz(unsigned long long x) { return __builtin_ctzll(x); }
    """
    int lf_popcount(unsigned long long x) nogil
    int lf_ctz(unsigned long long x) nogil


cdef inline uint64_t _full(int n) noexcept nogil:
    if n >= 64:
        return <uint64_t>0xFFFFFFFFFFFFFFFF
    return ((<uint64_t>1) << n) - 1


cdef uint64_t _closure(const uint64_t* adj, int n, uint64_t colored,
                       uint64_t leaks) noexcept nogil:
    cdef uint64_t full = _full(n)
    cdef uint64_t active, unc
    cdef bint changed = True
    while changed and colored != full:
        changed = False
        active = colored & ~leaks
        while active:
            unc = adj[lf_ctz(active)] & ~colored
            active &= active - 1
            if unc and not (unc & (unc - 1)):
                colored |= unc
                changed = True
    return colored


cdef uint64_t* _load(adj) except NULL:
    cdef Py_ssize_t n = len(adj), i
    if n > 64:
        raise ValueError("compiled kernels support at most 64 vertices")
    cdef uint64_t* buf = <uint64_t*>malloc((n if n > 0 else 1) * sizeof(uint64_t))
    if buf == NULL:
        raise MemoryError()
    for i in range(n):
        buf[i] = adj[i]
    return buf


def closure_mask(adj, initial, leaks):
    cdef uint64_t* a = _load(adj)
    cdef uint64_t res
    try:
        res = _closure(a, len(adj), initial, leaks)
    finally:
        free(a)
    return res


def failing_leak_sets(adj, candidate, int size, int lo, int hi, int limit):
    cdef int n = len(adj)
    cdef uint64_t* a = _load(adj)
    cdef uint64_t cand = candidate
    cdef uint64_t full = _full(n)
    cdef int cap = limit if limit > 0 else 1
    cdef uint64_t* out_leaks = <uint64_t*>malloc(cap * sizeof(uint64_t))
    cdef uint64_t* out_cl = <uint64_t*>malloc(cap * sizeof(uint64_t))
    cdef int* idx = <int*>malloc((size + 1) * sizeof(int))
    cdef int found = 0, j, t
    cdef uint64_t leaks, cl
    if out_leaks == NULL or out_cl == NULL or idx == NULL:
        free(a); free(out_leaks); free(out_cl); free(idx)
        raise MemoryError()
    try:
        with nogil:
            if size == 0:
                if lo == 0:
                    cl = _closure(a, n, cand, 0)
                    if cl != full:
                        out_leaks[0] = 0
                        out_cl[0] = cl
                        found = 1
            elif lo < hi and lo + size <= n:
                for j in range(size):
                    idx[j] = lo + j
                while True:
                    leaks = 0
                    for j in range(size):
                        leaks |= (<uint64_t>1) << idx[j]
                    cl = _closure(a, n, cand, leaks)
                    if cl != full:
                        out_leaks[found] = leaks
                        out_cl[found] = cl
                        found += 1
                        if found >= limit:
                            break
                    j = size - 1
                    while j >= 0 and idx[j] == n - size + j:
                        j -= 1
                    if j < 0:
                        break
                    idx[j] += 1
                    for t in range(j + 1, size):
                        idx[t] = idx[t - 1] + 1
                    if idx[0] >= hi:
                        break
        return [(out_leaks[j], out_cl[j]) for j in range(found)]
    finally:
        free(a); free(out_leaks); free(out_cl); free(idx)


def minimize_mask(adj, t, leaks):
    cdef int n = len(adj)
    cdef uint64_t* a = _load(adj)
    cdef uint64_t full = _full(n)
    cdef uint64_t cur = t, lk = leaks, scan, low, residual
    cdef bint restart = True
    with nogil:
        while restart:
            restart = False
            scan = cur
            while scan:
                low = scan & (~scan + 1)
                scan ^= low
                residual = full & ~_closure(a, n, full & ~(cur & ~low), lk)
                if residual:
                    cur = residual
                    restart = True
                    break
    free(a)
    return cur


cdef struct Search:
    int nf
    int k
    const uint64_t* forts
    const int* req
    uint64_t* rest_buf     # (depth, nf)
    int* need_buf          # (depth, nf)
    int* order             # scratch, nf
    int* counts            # scratch, 66
    uint64_t best
    int best_size
    bint best_found
    bint has_best
    long long nodes


cdef void _search(Search* s, uint64_t chosen, uint64_t excluded, int size,
                  int depth) noexcept nogil:
    cdef int nf = s.nf
    cdef uint64_t* rest = s.rest_buf + <Py_ssize_t>depth * nf
    cdef int* need = s.need_buf + <Py_ssize_t>depth * nf
    cdef int d = 0, i, p, lb
    cdef int nd
    cdef uint64_t r, free_mask = 0, used, low
    s.nodes += 1
    for i in range(nf):
        nd = s.req[i] - lf_popcount(s.forts[i] & chosen)
        if nd > 0:
            r = s.forts[i] & ~chosen & ~excluded
            if lf_popcount(r) < nd:
                return
            rest[d] = r
            need[d] = nd
            free_mask |= r
            d += 1
    if d == 0:
        if (not s.has_best) or size < s.best_size or (size == s.best_size and not s.best_found):
            s.best = chosen
            s.best_size = size
            s.best_found = True
            s.has_best = True
        return
    # stable counting sort of deficits by remainder size
    for p in range(66):
        s.counts[p] = 0
    for i in range(d):
        s.counts[lf_popcount(rest[i]) + 1] += 1
    for p in range(1, 66):
        s.counts[p] += s.counts[p - 1]
    for i in range(d):
        p = lf_popcount(rest[i])
        s.order[s.counts[p]] = i
        s.counts[p] += 1
    used = 0
    lb = size
    for p in range(d):
        i = s.order[p]
        if not (rest[i] & used):
            used |= rest[i]
            lb += need[i]
    if s.has_best and (lb > s.best_size or (lb == s.best_size and s.best_found)):
        return
    low = free_mask & (~free_mask + 1)
    _search(s, chosen | low, excluded, size + 1, depth + 1)
    _search(s, chosen, excluded | low, size, depth + 1)


def multicover(n, forts, k, fixed_in, fixed_out, upper=None, saturate=False):
    forts = list(dict.fromkeys(forts))
    cdef int nf = len(forts), i
    cdef int depth = n + 2
    cdef Search s
    cdef uint64_t fin = fixed_in, fout = fixed_out
    cdef uint64_t* fbuf = <uint64_t*>malloc((nf + 1) * sizeof(uint64_t))
    cdef int* rbuf = <int*>malloc((nf + 1) * sizeof(int))
    s.rest_buf = <uint64_t*>malloc(<Py_ssize_t>depth * (nf + 1) * sizeof(uint64_t))
    s.need_buf = <int*>malloc(<Py_ssize_t>depth * (nf + 1) * sizeof(int))
    s.order = <int*>malloc((nf + 1) * sizeof(int))
    s.counts = <int*>malloc(66 * sizeof(int))
    try:
        if (fbuf == NULL or rbuf == NULL or s.rest_buf == NULL
                or s.need_buf == NULL or s.order == NULL or s.counts == NULL):
            raise MemoryError()
        for i in range(nf):
            fbuf[i] = forts[i]
            rbuf[i] = min(k, lf_popcount(fbuf[i])) if saturate else k
        s.nf = nf
        s.k = k
        s.forts = fbuf
        s.req = rbuf
        s.nodes = 0
        s.best_found = False
        if upper is not None:
            s.best = upper
            s.best_size = lf_popcount(s.best)
            s.has_best = True
        else:
            s.best = 0
            s.best_size = n + 1
            s.has_best = False
        with nogil:
            _search(&s, fin, fout & ~fin, lf_popcount(fin), 0)
        if not s.has_best:
            return None, s.nodes
        return s.best, s.nodes
    finally:
        free(fbuf); free(rbuf); free(s.rest_buf); free(s.need_buf)
        free(s.order); free(s.counts)
