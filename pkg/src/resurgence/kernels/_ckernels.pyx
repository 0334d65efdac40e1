# cython: boundscheck=False, wraparound=False, cdivision=True
"""C versions of the hot kernels; see _pykernels for the reference semantics."""

from cpython.mem cimport PyMem_Malloc, PyMem_Free
from cpython.bytes cimport PyBytes_FromStringAndSize
from libc.stdlib cimport qsort
from libc.string cimport memcmp, memcpy

from ._pykernels import BudgetExceeded


cdef int _row_width = 0


cdef int _cmp_rows(const void* a, const void* b) noexcept nogil:
    return memcmp_ints(<const int*>a, <const int*>b, _row_width)


cdef inline int memcmp_ints(const int* a, const int* b, int n) noexcept nogil:
    cdef int i
    for i in range(n):
        if a[i] < b[i]:
            return -1
        if a[i] > b[i]:
            return 1
    return 0


cdef inline bint _divides(const int* a, const int* b, int nv) noexcept nogil:
    cdef int i
    for i in range(nv):
        if a[i] > b[i]:
            return False
    return True


cdef list _minimal_rows(int* rows, Py_ssize_t n, int nv):
    """Rows are laid out as [degree, e_0 .. e_{nv-1}]; sorts them in place."""
    global _row_width
    cdef int w = nv + 1
    cdef Py_ssize_t i, k, nkept = 0, lower = 0
    cdef int cur_deg = -1
    cdef Py_ssize_t* kept
    cdef int* r
    cdef bint dominated
    if n == 0:
        return []
    _row_width = w
    qsort(rows, n, w * sizeof(int), _cmp_rows)
    kept = <Py_ssize_t*>PyMem_Malloc(n * sizeof(Py_ssize_t))
    if kept == NULL:
        raise MemoryError()
    try:
        for i in range(n):
            r = rows + i * w
            if i > 0 and memcmp(r, r - w, w * sizeof(int)) == 0:
                continue
            if r[0] != cur_deg:
                lower = nkept
                cur_deg = r[0]
            dominated = False
            for k in range(lower):
                if _divides(rows + kept[k] * w + 1, r + 1, nv):
                    dominated = True
                    break
            if not dominated:
                kept[nkept] = i
                nkept += 1
        out = []
        for k in range(nkept):
            r = rows + kept[k] * w + 1
            out.append(tuple([r[i] for i in range(nv)]))
    finally:
        PyMem_Free(kept)
    out.sort()
    return out


cdef int* _load(list gens, int nv, Py_ssize_t* n_out) except NULL:
    cdef Py_ssize_t n = len(gens), i
    cdef int j
    cdef int* a = <int*>PyMem_Malloc((n * nv + 1) * sizeof(int))
    if a == NULL:
        raise MemoryError()
    for i in range(n):
        g = gens[i]
        for j in range(nv):
            a[i * nv + j] = g[j]
    n_out[0] = n
    return a


def minimalize(gens):
    gens = list(gens)
    if not gens:
        return []
    cdef int nv = len(gens[0])
    cdef Py_ssize_t n = len(gens), i
    cdef int j, d, x
    cdef int w = nv + 1
    cdef int* rows = <int*>PyMem_Malloc(n * w * sizeof(int))
    if rows == NULL:
        raise MemoryError()
    try:
        for i in range(n):
            g = gens[i]
            d = 0
            for j in range(nv):
                x = g[j]
                rows[i * w + 1 + j] = x
                d += x
            rows[i * w] = d
        return _minimal_rows(rows, n, nv)
    finally:
        PyMem_Free(rows)


cdef list _combine(list a, list b, bint use_max):
    if not a or not b:
        return []
    cdef int nv = len(a[0])
    cdef int w = nv + 1
    cdef Py_ssize_t na, nb, i, k, row
    cdef int j, d, x, y
    cdef int* A = _load(a, nv, &na)
    cdef int* B = NULL
    cdef int* rows = NULL
    try:
        B = _load(b, nv, &nb)
        rows = <int*>PyMem_Malloc(na * nb * w * sizeof(int))
        if rows == NULL:
            raise MemoryError()
        row = 0
        for i in range(na):
            for k in range(nb):
                d = 0
                for j in range(nv):
                    x = A[i * nv + j]
                    y = B[k * nv + j]
                    if use_max:
                        if y > x:
                            x = y
                    else:
                        x = x + y
                    rows[row * w + 1 + j] = x
                    d += x
                rows[row * w] = d
                row += 1
        return _minimal_rows(rows, row, nv)
    finally:
        PyMem_Free(A)
        PyMem_Free(B)
        PyMem_Free(rows)


def product_min(a, b):
    return _combine(list(a), list(b), False)


def intersect_min(a, b):
    return _combine(list(a), list(b), True)


cdef class _Search:
    cdef int nv, ng, mindeg
    cdef int* G
    cdef int* caps
    cdef int* stack     # residual vectors, one per depth
    cdef int* chosen
    cdef long nodes, budget
    cdef set failed

    def __cinit__(self, list G, int nv, int t, long budget):
        cdef int i, j, d
        self.nv = nv
        self.ng = len(G)
        self.G = <int*>PyMem_Malloc((self.ng * nv + 1) * sizeof(int))
        self.caps = <int*>PyMem_Malloc((nv + 1) * sizeof(int))
        self.stack = <int*>PyMem_Malloc(((t + 1) * (nv + 1) + 1) * sizeof(int))
        self.chosen = <int*>PyMem_Malloc((t + 1) * sizeof(int))
        if self.G == NULL or self.caps == NULL or self.stack == NULL or self.chosen == NULL:
            raise MemoryError()
        self.mindeg = -1
        for j in range(nv):
            self.caps[j] = 0
        for i in range(self.ng):
            g = G[i]
            d = 0
            for j in range(nv):
                self.G[i * nv + j] = g[j]
                d += g[j]
                if g[j] > self.caps[j]:
                    self.caps[j] = g[j]
            if self.mindeg < 0 or d < self.mindeg:
                self.mindeg = d
        self.nodes = 0
        self.budget = budget
        self.failed = set()

    def __dealloc__(self):
        PyMem_Free(self.G)
        PyMem_Free(self.caps)
        PyMem_Free(self.stack)
        PyMem_Free(self.chosen)

    cdef int search(self, int k) except -1:
        # residual for level k lives at stack[k * (nv + 1)]
        cdef int nv = self.nv
        cdef int* res = self.stack + k * (nv + 1)
        cdef int* nxt
        cdef int j, idx, c, total
        cdef int* g
        if k == 0:
            return 1
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(self.nodes)
        total = 0
        for j in range(nv):
            c = self.caps[j] * k
            if res[j] > c:
                res[j] = c
            total += res[j]
        if total < k * self.mindeg:
            return 0
        key = (PyBytes_FromStringAndSize(<char*>res, nv * sizeof(int)), k)
        if key in self.failed:
            return 0
        nxt = self.stack + (k - 1) * (nv + 1)
        for idx in range(self.ng):
            g = self.G + idx * nv
            if _divides(g, res, nv):
                for j in range(nv):
                    nxt[j] = res[j] - g[j]
                self.chosen[k - 1] = idx
                if self.search(k - 1):
                    return 1
        self.failed.add(key)
        return 0


def member_of_power(gens, m, int t, long budget):
    if t == 0:
        return ()
    gens = list(gens)
    if not gens:
        return None
    order = sorted(range(len(gens)), key=lambda i: (-sum(gens[i]), gens[i]))
    G = [gens[i] for i in order]
    cdef int nv = len(m), j, k
    cdef _Search S = _Search(G, nv, t, budget)
    for j in range(nv):
        S.stack[t * (nv + 1) + j] = m[j]
    if S.search(t):
        return tuple(sorted(order[S.chosen[k]] for k in range(t)))
    return None


def enumerate_symbolic(int nvars, primes, int s):
    primes = [tuple(sorted(p)) for p in primes]
    cdef int npr = len(primes)
    cdef int i, j, k
    lasts = [max(p) for p in primes]
    member = [[k for k in range(npr) if j in primes[k]] for j in range(nvars)]
    closing = [[k for k in range(npr) if lasts[k] == j] for j in range(nvars)]
    settled = [[] for _ in range(nvars)]
    for i in range(nvars):
        if member[i]:
            settled[max(lasts[k] for k in member[i])].append(i)
    cdef _Enum E = _Enum(nvars, npr, s, member, closing, settled)
    E.rec(0)
    out = E.out
    out.sort()
    return out


cdef int* _flatten(list lists, int* offsets) except NULL:
    cdef int total = 0, i, pos = 0
    for i in range(len(lists)):
        total += len(lists[i])
    cdef int* flat = <int*>PyMem_Malloc((total + 1) * sizeof(int))
    if flat == NULL:
        raise MemoryError()
    for i in range(len(lists)):
        offsets[i] = pos
        for x in lists[i]:
            flat[pos] = x
            pos += 1
    offsets[len(lists)] = pos
    return flat


cdef class _Enum:
    cdef int nvars, npr, s
    cdef int* sums
    cdef int* e
    cdef int* mem
    cdef int* mem_off
    cdef int* clo
    cdef int* clo_off
    cdef int* stl
    cdef int* stl_off
    cdef list out

    def __cinit__(self, int nvars, int npr, int s, list member, list closing, list settled):
        self.nvars = nvars
        self.npr = npr
        self.s = s
        self.sums = <int*>PyMem_Malloc((npr + 1) * sizeof(int))
        self.e = <int*>PyMem_Malloc((nvars + 1) * sizeof(int))
        self.mem_off = <int*>PyMem_Malloc((nvars + 1) * sizeof(int))
        self.clo_off = <int*>PyMem_Malloc((nvars + 1) * sizeof(int))
        self.stl_off = <int*>PyMem_Malloc((nvars + 1) * sizeof(int))
        if (self.sums == NULL or self.e == NULL or self.mem_off == NULL
                or self.clo_off == NULL or self.stl_off == NULL):
            raise MemoryError()
        self.mem = _flatten(member, self.mem_off)
        self.clo = _flatten(closing, self.clo_off)
        self.stl = _flatten(settled, self.stl_off)
        cdef int i
        for i in range(npr):
            self.sums[i] = 0
        for i in range(nvars):
            self.e[i] = 0
        self.out = []

    def __dealloc__(self):
        PyMem_Free(self.sums)
        PyMem_Free(self.e)
        PyMem_Free(self.mem)
        PyMem_Free(self.mem_off)
        PyMem_Free(self.clo)
        PyMem_Free(self.clo_off)
        PyMem_Free(self.stl)
        PyMem_Free(self.stl_off)

    cdef int rec(self, int j) except -1:
        cdef int s = self.s
        cdef int lo = 0, hi, v, a, b, i, minsum
        cdef bint ok, tight
        if j == self.nvars:
            self.out.append(tuple([self.e[i] for i in range(self.nvars)]))
            return 0
        for a in range(self.clo_off[j], self.clo_off[j + 1]):
            if s - self.sums[self.clo[a]] > lo:
                lo = s - self.sums[self.clo[a]]
        if self.mem_off[j + 1] > self.mem_off[j]:
            minsum = self.sums[self.mem[self.mem_off[j]]]
            for a in range(self.mem_off[j], self.mem_off[j + 1]):
                if self.sums[self.mem[a]] < minsum:
                    minsum = self.sums[self.mem[a]]
            hi = s - minsum
            if hi < 0:
                hi = 0
        else:
            hi = 0
        for v in range(lo, hi + 1):
            self.e[j] = v
            for a in range(self.mem_off[j], self.mem_off[j + 1]):
                self.sums[self.mem[a]] += v
            ok = True
            for b in range(self.stl_off[j], self.stl_off[j + 1]):
                i = self.stl[b]
                if self.e[i] > 0:
                    tight = False
                    for a in range(self.mem_off[i], self.mem_off[i + 1]):
                        if self.sums[self.mem[a]] == s:
                            tight = True
                            break
                    if not tight:
                        ok = False
                        break
            if ok:
                self.rec(j + 1)
            for a in range(self.mem_off[j], self.mem_off[j + 1]):
                self.sums[self.mem[a]] -= v
        self.e[j] = 0
        return 0
