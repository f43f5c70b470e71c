# distutils: language = c++
# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the kernels in ``_kernels_py``."""

from libc.stdint cimport uint64_t
from libcpp.unordered_map cimport unordered_map
from libcpp.vector cimport vector
from libcpp.pair cimport pair

ctypedef long long i64

cdef extern from *:
    """
    static inline int smash_add_ovf(long long a, long long b, long long *r) {
        return __builtin_add_overflow(a, b, r);
    }
    """
    bint smash_add_ovf(long long a, long long b, long long *r)


cdef void _fill_row(int i, int j, long remaining, int nrows, int ncols,
                    vector[long]& caps, vector[long]& tail, vector[long]& entries,
                    vector[long]& row_sums, list out):
    cdef long lo, hi, v
    cdef int base
    if j == ncols:
        if remaining == 0:
            _fill_rows(i + 1, nrows, ncols, caps, entries, row_sums, out)
        return
    hi = caps[j] if caps[j] < remaining else remaining
    lo = remaining - (tail[j] - caps[j])
    if lo < 0:
        lo = 0
    if i == 0 and j == 0:
        if lo > 0:
            return
        hi = 0
    base = i * ncols + j
    v = lo
    while v <= hi:
        entries[base] = v
        caps[j] -= v
        _fill_row(i, j + 1, remaining - v, nrows, ncols, caps, tail, entries, row_sums, out)
        caps[j] += v
        v += 1
    entries[base] = 0


cdef void _fill_rows(int i, int nrows, int ncols, vector[long]& caps,
                     vector[long]& entries, vector[long]& row_sums, list out):
    cdef int j, base
    cdef vector[long] tail
    if i == nrows - 1:
        if i == 0 and caps[0] != 0:
            return
        base = i * ncols
        for j in range(ncols):
            entries[base + j] = caps[j]
        out.append(tuple([entries[k] for k in range(nrows * ncols)]))
        return
    tail.resize(ncols + 1, 0)
    for j in range(ncols - 1, -1, -1):
        tail[j] = tail[j + 1] + caps[j]
    _fill_row(i, 0, row_sums[i], nrows, ncols, caps, tail, entries, row_sums, out)


def margin_fill(col_sums, row_sums):
    cdef int ncols = len(col_sums), nrows = len(row_sums)
    cdef vector[long] caps, entries, rows
    cdef list out = []
    if nrows == 0 or ncols == 0 or sum(col_sums) != sum(row_sums):
        return out
    if min(col_sums) < 0 or min(row_sums) < 0:
        return out
    for c in col_sums:
        caps.push_back(c)
    for r in row_sums:
        rows.push_back(r)
    entries.resize(nrows * ncols, 0)
    _fill_rows(0, nrows, ncols, caps, entries, rows, out)
    return out


def chain_sum(keys, signs, repeats, parts, bint reverse, long long max_degree, int shift):
    cdef Py_ssize_t nl = len(keys), r = len(parts), step, idx, jj, j
    cdef vector[uint64_t] ks
    cdef vector[long long] sg, ps
    cdef vector[int] rep
    cdef int flag
    cdef vector[unordered_map[uint64_t, i64]] levels
    cdef pair[uint64_t, i64] kv
    cdef uint64_t key, mult, nk
    cdef long long d, da, limit, a, s, cur, res
    for k in keys:
        ks.push_back(k)
    for k in signs:
        sg.push_back(k)
    for k in parts:
        ps.push_back(k)
    for k in repeats:
        flag = 1 if k else 0
        rep.push_back(flag)
    levels.resize(r + 1)
    levels[0][0] = 1
    for step in range(nl):
        idx = nl - 1 - step if reverse else step
        key = ks[idx]
        s = sg[idx]
        d = <long long>(key >> shift)
        for jj in range(r):
            if rep[idx]:
                j = jj + 1
            else:
                j = r - jj
            a = ps[j - 1]
            da = d * a
            if da > max_degree or levels[j - 1].empty():
                continue
            mult = key * <uint64_t>a
            limit = max_degree - da
            for kv in levels[j - 1]:
                if <long long>(kv.first >> shift) > limit:
                    continue
                nk = kv.first + mult
                cur = levels[j][nk]
                if smash_add_ovf(cur, kv.second * s, &res):
                    raise OverflowError("coefficient exceeds 64 bits")
                levels[j][nk] = res
    out = {}
    for kv in levels[r]:
        if kv.second != 0:
            out[kv.first] = kv.second
    return out
