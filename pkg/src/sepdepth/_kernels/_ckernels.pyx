# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; interface mirrors ``_pure``.

Bitsets cross the boundary as Python ints and are unpacked into arrays of
64-bit words (little-endian host assumed; checked by the selector).
"""
from libc.stdlib cimport malloc, calloc, free
from libc.string cimport memcpy, memset
from libc.stdint cimport uint64_t, uint32_t, uint8_t, int8_t
from cpython.bytes cimport PyBytes_FromStringAndSize

cdef extern from *:
    int ctz64 "__builtin_ctzll"(unsigned long long) nogil
    int popcount64 "__builtin_popcountll"(unsigned long long) nogil
    int ctz32 "__builtin_ctz"(unsigned int) nogil
    int popcount32 "__builtin_popcount"(unsigned int) nogil

BACKEND = "cython"


cdef class PackedGraph:
    cdef readonly int n
    cdef int W
    cdef uint64_t* adj
    cdef uint64_t* a
    cdef uint64_t* b
    cdef uint64_t* c
    cdef uint64_t* d

    def __cinit__(self, adj):
        cdef int v
        self.n = len(adj)
        self.W = max(1, (self.n + 63) // 64)
        self.adj = <uint64_t*> calloc(self.n * self.W + 4 * self.W, sizeof(uint64_t))
        if self.adj == NULL:
            raise MemoryError()
        self.a = self.adj + self.n * self.W
        self.b = self.a + self.W
        self.c = self.b + self.W
        self.d = self.c + self.W
        for v in range(self.n):
            self._load(adj[v], self.adj + v * self.W)

    def __dealloc__(self):
        free(self.adj)

    cdef int _load(self, object mask, uint64_t* out) except -1:
        cdef bytes raw = (<object> mask).to_bytes(self.W * 8, "little")
        memcpy(out, <char*> raw, self.W * 8)
        return 0

    cdef object _store(self, uint64_t* words):
        return int.from_bytes(PyBytes_FromStringAndSize(<char*> words, self.W * 8), "little")

    def neighborhood(self, mask):
        cdef int W = self.W, i, j, u
        cdef uint64_t w
        cdef uint64_t* row
        self._load(mask, self.a)
        memset(self.b, 0, W * sizeof(uint64_t))
        for i in range(W):
            w = self.a[i]
            while w:
                u = i * 64 + ctz64(w)
                w &= w - 1
                row = self.adj + u * W
                for j in range(W):
                    self.b[j] |= row[j]
        for j in range(W):
            self.b[j] &= ~self.a[j]
        return self._store(self.b)

    def components(self, mask):
        """Connected components of G[mask], ordered by smallest member."""
        cdef int W = self.W, i, j, u, start
        cdef uint64_t w, any_bits
        cdef uint64_t* row
        cdef uint64_t* rest = self.a
        cdef uint64_t* comp = self.b
        cdef uint64_t* frontier = self.c
        cdef uint64_t* nxt = self.d
        out = []
        self._load(mask, rest)
        start = 0
        while True:
            while start < W and rest[start] == 0:
                start += 1
            if start == W:
                break
            memset(comp, 0, W * sizeof(uint64_t))
            memset(frontier, 0, W * sizeof(uint64_t))
            w = rest[start] & (~rest[start] + 1)
            comp[start] = w
            frontier[start] = w
            rest[start] ^= w
            any_bits = 1
            while any_bits:
                memset(nxt, 0, W * sizeof(uint64_t))
                for i in range(W):
                    w = frontier[i]
                    while w:
                        u = i * 64 + ctz64(w)
                        w &= w - 1
                        row = self.adj + u * W
                        for j in range(W):
                            nxt[j] |= row[j]
                any_bits = 0
                for j in range(W):
                    nxt[j] &= rest[j]
                    rest[j] ^= nxt[j]
                    comp[j] |= nxt[j]
                    frontier[j] = nxt[j]
                    any_bits |= nxt[j]
            out.append(self._store(comp))
        return out


cdef inline uint32_t _flood32(const uint32_t* adj, uint32_t seed, uint32_t within) nogil:
    cdef uint32_t comp = seed, frontier = seed, nxt, f
    while frontier:
        nxt = 0
        f = frontier
        while f:
            nxt |= adj[ctz32(f)]
            f &= f - 1
        nxt &= within & ~comp
        comp |= nxt
        frontier = nxt
    return comp


def treedepth_subsets(adj, int n):
    """Treedepth by the vertex-removal recurrence over all 2^n subsets."""
    if n == 0:
        return 0
    if n > 30:
        raise ValueError("treedepth_subsets supports at most 30 vertices")
    cdef uint32_t adjm[32]
    cdef int v
    for v in range(n):
        adjm[v] = <uint32_t> adj[v]
    cdef uint32_t full = (<uint32_t> 1 << n) - 1 if n < 32 else 0xFFFFFFFF
    cdef uint8_t* td = <uint8_t*> malloc((<size_t> full) + 1)
    if td == NULL:
        raise MemoryError()
    cdef uint32_t mask, comp, m, low
    cdef uint8_t best, t, a, b
    with nogil:
        td[0] = 0
        mask = 1
        while True:
            low = mask & (~mask + 1)
            comp = _flood32(adjm, low, mask)
            if comp != mask:
                a = td[comp]
                b = td[mask ^ comp]
                td[mask] = a if a > b else b
            else:
                best = 255
                m = mask
                while m:
                    t = td[mask ^ (m & (~m + 1))]
                    if t < best:
                        best = t
                    m &= m - 1
                td[mask] = best + 1
            if mask == full:
                break
            mask += 1
    result = td[full]
    free(td)
    return result


def treewidth_subsets(adj, int n, upper=None):
    """Exact treewidth and an optimal elimination order (full-table subset DP).

    ``upper`` is accepted for interface parity and ignored.
    """
    if n == 0:
        return -1, []
    if n > 28:
        raise ValueError("treewidth_subsets supports at most 28 vertices")
    cdef uint32_t adjm[32]
    cdef uint32_t outside[32]
    cdef uint32_t comps[32]
    cdef int v, k, ncomp, q
    for v in range(n):
        adjm[v] = <uint32_t> adj[v]
    cdef uint32_t full = (<uint32_t> 1 << n) - 1
    cdef int8_t* tw = <int8_t*> malloc((<size_t> full) + 1)
    cdef uint8_t* choice = <uint8_t*> malloc((<size_t> full) + 1)
    if tw == NULL or choice == NULL:
        free(tw)
        free(choice)
        raise MemoryError()
    cdef uint32_t s, rest, comp, m, nb, f
    cdef int best, val, prev, bestv
    with nogil:
        tw[0] = -1
        choice[0] = 0
        s = 1
        while True:
            # components of G[s] and how many outside vertices each touches
            ncomp = 0
            rest = s
            while rest:
                comp = _flood32(adjm, rest & (~rest + 1), rest)
                rest &= ~comp
                nb = 0
                f = comp
                while f:
                    nb |= adjm[ctz32(f)]
                    f &= f - 1
                comps[ncomp] = comp
                outside[ncomp] = popcount32(nb & ~s)
                ncomp += 1
            best = 127
            bestv = 0
            m = s
            while m:
                v = ctz32(m)
                m &= m - 1
                k = 0
                while not (comps[k] >> v) & 1:
                    k += 1
                q = outside[k]
                prev = tw[s ^ (<uint32_t> 1 << v)]
                val = prev if prev > q else q
                if val < best:
                    best = val
                    bestv = v
            tw[s] = best
            choice[s] = bestv
            if s == full:
                break
            s += 1
    width = tw[full]
    order = []
    s = full
    while s:
        v = choice[s]
        order.append(v)
        s ^= (<uint32_t> 1 << v)
    free(tw)
    free(choice)
    order.reverse()
    return width, order
