"""Pure-Python versions of the hot loops.

Used when the compiled extension is missing, when ``SMASHPROD_PURE_PYTHON``
is set, or when an input does not fit the compiled kernel's fixed-width
integers.  Results are identical to the compiled versions.
"""


def margin_fill(col_sums, row_sums):
    """All non-negative integer matrices with the given margins and a zero
    top-left entry, as flat row-major tuples in lexicographic order."""
    ncols = len(col_sums)
    nrows = len(row_sums)
    if nrows == 0 or ncols == 0 or sum(col_sums) != sum(row_sums):
        return []
    if min(col_sums) < 0 or min(row_sums) < 0:
        return []
    out = []
    entries = [0] * (nrows * ncols)
    caps = list(col_sums)

    def fill_row(i, j, remaining, tail):
        # tail[j] = sum of caps[j:] at the start of row i
        if j == ncols:
            if remaining == 0:
                fill_rows(i + 1)
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
        for v in range(lo, hi + 1):
            entries[base] = v
            caps[j] -= v
            fill_row(i, j + 1, remaining - v, tail)
            caps[j] += v
        entries[base] = 0

    def fill_rows(i):
        if i == nrows - 1:
            if i == 0 and caps[0] != 0:
                return
            base = i * ncols
            entries[base:base + ncols] = caps
            out.append(tuple(entries))
            return
        tail = [0] * (ncols + 1)
        for j in range(ncols - 1, -1, -1):
            tail[j] = tail[j + 1] + caps[j]
        fill_row(i, 0, row_sums[i], tail)

    fill_rows(0)
    return out


def chain_sum(keys, signs, repeats, parts, reverse, max_degree, shift):
    """Sum over chains of letters of the product of ``letter ** part``.

    ``keys`` are packed monomials (degree in the bits above ``shift``), in
    alphabet order.  Chains run through the letters in increasing order, or
    decreasing order when ``reverse`` is true.  Consecutive parts may sit on
    the same letter only where ``repeats`` is true.  Each used letter
    multiplies the coefficient by its sign once per part.  Terms of degree
    above ``max_degree`` are dropped.
    """
    r = len(parts)
    levels = [{0: 1}] + [{} for _ in range(r)]
    order = range(len(keys) - 1, -1, -1) if reverse else range(len(keys))
    up = list(range(1, r + 1))
    down = up[::-1]
    for idx in order:
        key = keys[idx]
        sg = signs[idx]
        d = key >> shift
        # ascending levels reuse this letter's own contributions
        for j in (up if repeats[idx] else down):
            a = parts[j - 1]
            da = d * a
            if da > max_degree:
                continue
            src = levels[j - 1]
            if not src:
                continue
            dst = levels[j]
            mult = key * a
            limit = max_degree - da
            for k, c in src.items():
                if (k >> shift) > limit:
                    continue
                nk = k + mult
                dst[nk] = dst.get(nk, 0) + c * sg
    return {k: c for k, c in levels[r].items() if c}
