"""Numba kernel for homomorphism counting.

Importing this module compiles nothing; compilation happens on first call
and is cached on disk.  Import failures are handled by the caller, which
falls back to the numpy path.
"""

import numba
import numpy as np


@numba.njit(cache=True, nogil=True)
def count_dfs(table_flat, inv, n, ngens, letters, starts, ends,
              lvl_start, lvl_end, lo, hi):
    """Pruned depth-first count of relator-satisfying assignments.

    ``table_flat`` is the n*n multiplication table; relators are grouped by
    the highest generator they mention and checked as soon as that generator
    receives a value.  Counts assignments whose first generator lies in
    [lo, hi).
    """
    choice = np.zeros(ngens, dtype=np.int64)
    cand = np.zeros(ngens, dtype=np.int64)
    cand[0] = lo - 1
    level = 0
    total = 0
    while True:
        cand[level] += 1
        limit = hi if level == 0 else n
        if cand[level] >= limit:
            if level == 0:
                break
            level -= 1
            continue
        choice[level] = cand[level]
        ok = True
        for ri in range(lvl_start[level], lvl_end[level]):
            cur = 0
            for li in range(starts[ri], ends[ri]):
                lt = letters[li]
                v = choice[lt >> 1]
                if lt & 1:
                    v = inv[v]
                cur = table_flat[cur * n + v]
            if cur != 0:
                ok = False
                break
        if not ok:
            continue
        if level == ngens - 1:
            total += 1
        else:
            level += 1
            cand[level] = -1
    return total
