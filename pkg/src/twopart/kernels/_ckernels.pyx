# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True, initializedcheck=False
"""Compiled bitset kernels.  Same contract as ``_pykernels``.

Rows are stored as ``W`` 64-bit words per vertex.  The search itself runs
without the GIL so root subproblems can be spread over threads.
"""

from libc.stdint cimport uint64_t, int64_t
from libc.stdlib cimport malloc, free
from libc.string cimport memcpy, memset
from posix.time cimport clock_gettime, timespec, CLOCK_MONOTONIC


cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef struct Search:
    int W
    const uint64_t* adj
    int* clique
    int* best_clique
    int best
    int target
    bint counting
    int64_t count
    int64_t nodes
    double deadline
    bint timed_out
    bint oom


cdef inline double _now() noexcept nogil:
    cdef timespec ts
    clock_gettime(CLOCK_MONOTONIC, &ts)
    return <double>ts.tv_sec + <double>ts.tv_nsec * 1e-9


cdef void _expand(Search* s, const uint64_t* p_in, int size) noexcept nogil:
    cdef int W = s.W
    cdef int cnt = 0
    cdef int w, i, k, idx, v, b
    cdef uint64_t bit
    cdef bint nonempty
    cdef const uint64_t* row
    for w in range(W):
        cnt += __builtin_popcountll(p_in[w])
    cdef char* mem = <char*>malloc(3 * W * sizeof(uint64_t) + 2 * cnt * sizeof(int))
    if mem == NULL:
        s.oom = True
        return
    cdef uint64_t* p = <uint64_t*>mem
    cdef uint64_t* q = p + W
    cdef uint64_t* np_ = q + W
    cdef int* order = <int*>(np_ + W)
    cdef int* colors = order + cnt
    memcpy(p, p_in, W * sizeof(uint64_t))
    memcpy(q, p_in, W * sizeof(uint64_t))

    # greedy coloring; np_ doubles as the current color class
    k = 0
    idx = 0
    while idx < cnt:
        k += 1
        memcpy(np_, q, W * sizeof(uint64_t))
        for w in range(W):
            while np_[w]:
                b = __builtin_ctzll(np_[w])
                bit = (<uint64_t>1) << b
                v = w * 64 + b
                q[w] &= ~bit
                np_[w] &= ~bit
                row = s.adj + <int64_t>v * W
                for i in range(w, W):
                    np_[i] &= ~row[i]
                order[idx] = v
                colors[idx] = k
                idx += 1

    idx = cnt - 1
    while idx >= 0:
        if s.counting:
            if size + colors[idx] < s.target:
                break
        elif size + colors[idx] <= s.best:
            break
        s.nodes += 1
        if s.deadline > 0 and (s.nodes & 1023) == 0 and _now() > s.deadline:
            s.timed_out = True
            break
        v = order[idx]
        s.clique[size] = v
        row = s.adj + <int64_t>v * W
        nonempty = False
        for w in range(W):
            np_[w] = p[w] & row[w]
            if np_[w]:
                nonempty = True
        if s.counting:
            if size + 1 == s.target:
                s.count += 1
            elif nonempty:
                _expand(s, np_, size + 1)
        elif nonempty:
            _expand(s, np_, size + 1)
        elif size + 1 > s.best:
            s.best = size + 1
            memcpy(s.best_clique, s.clique, (size + 1) * sizeof(int))
        if s.timed_out or s.oom:
            break
        p[v >> 6] &= ~((<uint64_t>1) << (v & 63))
        idx -= 1
    free(mem)


cdef class CliqueKernel:
    cdef uint64_t* _adj
    cdef readonly int nv
    cdef int W
    cdef public object adj
    backend = "cython"

    def __cinit__(self, adj_rows):
        self._adj = NULL

    def __init__(self, adj_rows):
        rows = list(adj_rows)
        self.adj = rows
        self.nv = len(rows)
        self.W = max(1, (self.nv + 63) // 64)
        self._adj = <uint64_t*>malloc(max(1, self.nv) * self.W * sizeof(uint64_t))
        if self._adj == NULL:
            raise MemoryError()
        for v, row in enumerate(rows):
            self._load(<int64_t>v * self.W, row)

    def __dealloc__(self):
        if self._adj != NULL:
            free(self._adj)

    cdef void _load(self, int64_t offset, object value):
        _to_words(value, self._adj + offset, self.W)

    def max_clique(self, candidates, int base_size=0, int lower=0, deadline=None):
        cdef Search s
        cdef int total = self.nv + base_size + 1
        cdef uint64_t* p = <uint64_t*>malloc(self.W * sizeof(uint64_t))
        s.clique = <int*>malloc(total * sizeof(int))
        s.best_clique = <int*>malloc(total * sizeof(int))
        if p == NULL or s.clique == NULL or s.best_clique == NULL:
            free(p); free(s.clique); free(s.best_clique)
            raise MemoryError()
        _to_words(candidates, p, self.W)
        s.W = self.W
        s.adj = self._adj
        s.best = lower
        s.counting = False
        s.target = 0
        s.count = 0
        s.nodes = 0
        s.deadline = -1.0 if deadline is None else <double>deadline
        s.timed_out = False
        s.oom = False
        found = None
        try:
            if candidates:
                with nogil:
                    _expand(&s, p, base_size)
                if s.oom:
                    raise MemoryError()
                if s.best > lower:
                    found = [s.best_clique[i] for i in range(base_size, s.best)]
            elif base_size > lower:
                s.best = base_size
                found = []
            return s.best, found, s.nodes, bool(s.timed_out)
        finally:
            free(p)
            free(s.clique)
            free(s.best_clique)

    def count_cliques(self, candidates, int target, int base_size=0, deadline=None):
        cdef Search s
        if target <= base_size:
            return int(target == base_size), 0, False
        cdef int total = self.nv + base_size + 1
        cdef uint64_t* p = <uint64_t*>malloc(self.W * sizeof(uint64_t))
        s.clique = <int*>malloc(total * sizeof(int))
        s.best_clique = NULL
        if p == NULL or s.clique == NULL:
            free(p); free(s.clique)
            raise MemoryError()
        _to_words(candidates, p, self.W)
        s.W = self.W
        s.adj = self._adj
        s.best = 0
        s.counting = True
        s.target = target
        s.count = 0
        s.nodes = 0
        s.deadline = -1.0 if deadline is None else <double>deadline
        s.timed_out = False
        s.oom = False
        try:
            if candidates:
                with nogil:
                    _expand(&s, p, base_size)
                if s.oom:
                    raise MemoryError()
            return s.count, s.nodes, bool(s.timed_out)
        finally:
            free(p)
            free(s.clique)


cdef void _to_words(object value, uint64_t* out, int W) except *:
    cdef bytes raw = int(value).to_bytes(W * 8, "little")
    cdef const unsigned char* src = raw
    cdef int w, j
    cdef uint64_t word
    for w in range(W):
        word = 0
        for j in range(8):
            word |= (<uint64_t>src[w * 8 + j]) << (8 * j)
        out[w] = word


def delta_fmask(uint64_t fmask, int n):
    cdef int members[64]
    cdef int cnt = _unpack(fmask, members)
    cdef uint64_t out = 0
    cdef int i, j
    for i in range(cnt):
        for j in range(cnt):
            out |= (<uint64_t>1) << (members[i] & ~members[j])
    return out


def meet_join_fmask(uint64_t f, uint64_t g, int n):
    cdef int fa[64]
    cdef int gb[64]
    cdef int cf = _unpack(f, fa)
    cdef int cg = _unpack(g, gb)
    cdef uint64_t meet = 0, join = 0
    cdef int i, j
    for i in range(cf):
        for j in range(cg):
            meet |= (<uint64_t>1) << (fa[i] & gb[j])
            join |= (<uint64_t>1) << (fa[i] | gb[j])
    return meet, join


cdef inline int _unpack(uint64_t x, int* out) noexcept nogil:
    cdef int cnt = 0
    while x:
        out[cnt] = __builtin_ctzll(x)
        x &= x - 1
        cnt += 1
    return cnt
