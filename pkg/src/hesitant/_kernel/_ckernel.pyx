# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernel: integer-grid twin of `_pykernel`.

Same contract, restricted to integer degrees (grid numerators). Random
streams are bit-identical to the pure implementation. Degree values must fit
comfortably in 64 bits (the engine caps the grid denominator at 10**9 and
cardinalities at 64, so cross-multiplied mean sums stay far below 2**63).
"""

IMPLEMENTATION = "compiled"

REL_P, REL_A, REL_M, REL_S, REL_T, REL_N = 0, 1, 2, 3, 4, 5

ctypedef unsigned long long u64_t
ctypedef long long i64

cdef extern from *:
    ctypedef unsigned long long u128 "unsigned __int128"

cdef u64_t _GOLDEN = 0x9E3779B97F4A7C15ULL
cdef u64_t _MIX1 = 0xBF58476D1CE4E5B9ULL
cdef u64_t _MIX2 = 0x94D049BB133111EBULL

# Scratch capacity for merged multisets; the engine never exceeds a few
# hundred degrees per element (folds of <=8 sets of cardinality <=64).
cdef int _CAP = 2048


cdef class Stream:
    """SplitMix64 random stream; deterministic function of its seed."""

    cdef public u64_t state

    def __cinit__(self, seed):
        self.state = <u64_t> (seed & 0xFFFFFFFFFFFFFFFF)

    cdef inline u64_t _next(self):
        self.state += _GOLDEN
        cdef u64_t z = self.state
        z = (z ^ (z >> 30)) * _MIX1
        z = (z ^ (z >> 27)) * _MIX2
        return z ^ (z >> 31)

    def u64(self):
        return self._next()

    cdef inline u64_t _below(self, u64_t n):
        cdef u128 m = <u128> self._next() * n
        return <u64_t> (m >> 64)

    def below(self, n):
        return self._below(<u64_t> n)

    cdef inline i64 _randint(self, i64 lo, i64 hi):
        return lo + <i64> self._below(<u64_t> (hi - lo + 1))

    def randint(self, lo, hi):
        return self._randint(<i64> lo, <i64> hi)


cdef int _load(tuple t, i64 *buf) except -1:
    cdef Py_ssize_t i, n = len(t)
    if n > _CAP:
        raise OverflowError("hfe too large for compiled kernel scratch")
    for i in range(n):
        buf[i] = <i64> t[i]
    return <int> n


cdef void _isort_desc(i64 *v, int n) noexcept:
    # insertion sort: inputs are concatenations of two sorted runs, n is small
    cdef int i, j
    cdef i64 key
    for i in range(1, n):
        key = v[i]
        j = i - 1
        while j >= 0 and v[j] < key:
            v[j + 1] = v[j]
            j -= 1
        v[j + 1] = key


cdef tuple _pack(i64 *v, int n):
    cdef list out = []
    cdef int i
    for i in range(n):
        out.append(v[i])
    return tuple(out)


def canon(values):
    cdef i64 buf[2048]
    cdef int n = 0
    for g in values:
        if n >= _CAP:
            raise OverflowError("hfe too large for compiled kernel scratch")
        buf[n] = <i64> g
        n += 1
    _isort_desc(buf, n)
    return _pack(buf, n)


cdef tuple _union(tuple a, tuple b):
    cdef i64 buf[2048]
    cdef i64 tmp[2048]
    cdef int na = _load(a, buf)
    cdef int nb = _load(b, buf + na)
    cdef i64 lo = buf[na - 1]
    cdef int i, n = 0
    if buf[na + nb - 1] > lo:
        lo = buf[na + nb - 1]
    for i in range(na + nb):
        if buf[i] >= lo:
            tmp[n] = buf[i]
            n += 1
    _isort_desc(tmp, n)
    return _pack(tmp, n)


cdef tuple _inter(tuple a, tuple b):
    cdef i64 buf[2048]
    cdef i64 tmp[2048]
    cdef int na = _load(a, buf)
    cdef int nb = _load(b, buf + na)
    cdef i64 hi = buf[0]
    cdef int i, n = 0
    if buf[na] < hi:
        hi = buf[na]
    for i in range(na + nb):
        if buf[i] <= hi:
            tmp[n] = buf[i]
            n += 1
    _isort_desc(tmp, n)
    return _pack(tmp, n)


cdef tuple _compl(tuple a, i64 unit):
    cdef i64 buf[2048]
    cdef int n = _load(a, buf)
    cdef list out = []
    cdef int i
    for i in range(n):
        out.append(unit - buf[n - 1 - i])
    return tuple(out)


def e_union(tuple a, tuple b):
    return _union(a, b)


def e_inter(tuple a, tuple b):
    return _inter(a, b)


def e_compl(tuple a, one):
    return _compl(a, <i64> one)


cdef bint _rel(int code, i64 *a, int na, i64 *b, int nb) except? 0:
    cdef int i
    cdef i64 sa = 0, sb = 0
    if code == 0:    # p
        return a[0] <= b[0]
    if code == 1:    # a
        return a[0] <= b[0] and a[na - 1] <= b[nb - 1]
    if code == 2:    # m
        for i in range(na):
            sa += a[i]
        for i in range(nb):
            sb += b[i]
        return sa * nb <= sb * na
    if code == 3:    # s
        if na < nb:
            return False
        for i in range(nb):
            if b[i] < a[i]:
                return False
        return True
    if code == 4:    # t
        if na >= nb:
            return False
        for i in range(na):
            if b[i] < a[i]:
                return False
        return True
    if code == 5:    # n
        return a[0] <= b[nb - 1]
    raise ValueError(f"unknown relation code {code}")


def e_rel(int code, tuple a, tuple b):
    cdef i64 ba[2048]
    cdef i64 bb[2048]
    cdef int na = _load(a, ba)
    cdef int nb = _load(b, bb)
    return bool(_rel(code, ba, na, bb, nb))


cdef int _sot(i64 *a, int na, i64 *b, int nb) except? -1:
    if _rel(3, a, na, b, nb):
        return 1
    if _rel(4, a, na, b, nb):
        return 2
    return 0


def e_sot(tuple a, tuple b):
    cdef i64 ba[2048]
    cdef i64 bb[2048]
    cdef int na = _load(a, ba)
    cdef int nb = _load(b, bb)
    return _sot(ba, na, bb, nb)


def pointwise_leq(v, w):
    cdef Py_ssize_t n = len(v)
    if n != len(w):
        raise ValueError(f"length mismatch: {len(v)} vs {len(w)}")
    cdef Py_ssize_t i
    for i in range(n):
        if <i64> v[i] > <i64> w[i]:
            return False
    return True


def best_q(tuple a, q):
    cdef int qq = <int> q
    if not 1 <= qq <= len(a):
        raise ValueError(f"q={q} out of range 1..{len(a)}")
    return a[:qq]


def is_subseq(tuple sub, tuple whole):
    cdef i64 bs[2048]
    cdef i64 bw[2048]
    cdef int ns = _load(sub, bs)
    cdef int nw = _load(whole, bw)
    cdef int i = 0, j
    for j in range(ns):
        while i < nw and bw[i] > bs[j]:
            i += 1
        if i >= nw or bw[i] != bs[j]:
            return False
        i += 1
    return True


def u_union(tuple A, tuple B):
    cdef Py_ssize_t i, n = len(A)
    cdef list out = []
    for i in range(n):
        out.append(_union(<tuple> A[i], <tuple> B[i]))
    return tuple(out)


def u_inter(tuple A, tuple B):
    cdef Py_ssize_t i, n = len(A)
    cdef list out = []
    for i in range(n):
        out.append(_inter(<tuple> A[i], <tuple> B[i]))
    return tuple(out)


def u_compl(tuple A, one):
    cdef Py_ssize_t i, n = len(A)
    cdef i64 unit = <i64> one
    cdef list out = []
    for i in range(n):
        out.append(_compl(<tuple> A[i], unit))
    return tuple(out)


def u_rel(int code, tuple A, tuple B):
    cdef i64 ba[2048]
    cdef i64 bb[2048]
    cdef Py_ssize_t i, n = len(A)
    cdef int na, nb
    for i in range(n):
        na = _load(<tuple> A[i], ba)
        nb = _load(<tuple> B[i], bb)
        if not _rel(code, ba, na, bb, nb):
            return False
    return True


def u_sot(tuple A, tuple B):
    cdef i64 ba[2048]
    cdef i64 bb[2048]
    cdef Py_ssize_t i, n = len(A)
    cdef int na, nb
    for i in range(n):
        na = _load(<tuple> A[i], ba)
        nb = _load(<tuple> B[i], bb)
        if _sot(ba, na, bb, nb) == 0:
            return False
    return True


def u_equal(tuple A, tuple B):
    return A == B


cdef tuple _gen_hfe(Stream stream, i64 den, int card_lo, int card_hi):
    cdef int k = <int> stream._randint(card_lo, card_hi)
    cdef i64 buf[2048]
    cdef int i
    for i in range(k):
        buf[i] = <i64> stream._below(<u64_t> (den + 1))
    _isort_desc(buf, k)
    return _pack(buf, k)


def gen_hfe(Stream stream, den, card_lo, card_hi):
    return _gen_hfe(stream, <i64> den, <int> card_lo, <int> card_hi)


def gen_hfs(Stream stream, den, size, card_lo, card_hi):
    cdef int i, sz = <int> size
    cdef i64 d = <i64> den
    cdef int lo = <int> card_lo, hi = <int> card_hi
    cdef list out = []
    for i in range(sz):
        out.append(_gen_hfe(stream, d, lo, hi))
    return tuple(out)
