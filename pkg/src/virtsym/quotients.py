"""Evaluation of words in finite quotients and brute-force hom counting.

Finite targets are multiplication tables, so the inner loops of
:func:`hom_count` are pure table lookups.  The counting kernel has a numba
path and a vectorized numpy fallback; set ``VIRTSYM_DISABLE_NUMBA=1`` to
force the fallback.
"""

from __future__ import annotations

import functools
import itertools
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .permutations import Permutation
from .presentations import Presentation
from .words import GenSym, Word

DEFAULT_BUDGET = 10 ** 9


class BudgetExceeded(RuntimeError):
    pass


class FiniteGroup:
    """A finite group given by its multiplication table.

    ``table[a, b]`` is the index of the product a*b; element 0 is the
    identity.  ``labels`` are hashable descriptions used for lookups.
    """

    def __init__(self, name: str, table: np.ndarray, labels: Sequence):
        table = np.asarray(table, dtype=np.int32)
        n = table.shape[0]
        if table.shape != (n, n) or len(labels) != n:
            raise ValueError("inconsistent multiplication table")
        self.name = name
        self.table = table
        self.labels = list(labels)
        self.index = {lab: k for k, lab in enumerate(self.labels)}
        if any(table[0, k] != k or table[k, 0] != k for k in range(n)):
            raise ValueError("element 0 must be the identity")
        self.inverse = np.empty(n, dtype=np.int32)
        for a in range(n):
            hits = np.nonzero(table[a] == 0)[0]
            if len(hits) != 1 or table[hits[0], a] != 0:
                raise ValueError("table has no unique two-sided inverse")
            self.inverse[a] = hits[0]

    @property
    def size(self) -> int:
        return self.table.shape[0]

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverse[a])

    def element_order(self, a: int) -> int:
        k, cur = 1, a
        while cur != 0:
            cur = self.mul(cur, a)
            k += 1
        return k

    def __repr__(self):
        return f"FiniteGroup({self.name}, order {self.size})"


@functools.lru_cache(maxsize=None)
def symmetric_group(k: int) -> FiniteGroup:
    """S_k as a table group; elements in lexicographic one-line order,
    which puts the identity first."""
    if not 1 <= k <= 7:
        raise ValueError("symmetric_group supports 1 <= k <= 7")
    elems = list(itertools.permutations(range(1, k + 1)))
    idx = {e: i for i, e in enumerate(elems)}
    n = len(elems)
    table = np.empty((n, n), dtype=np.int32)
    for a, pa in enumerate(elems):
        for b, pb in enumerate(elems):
            table[a, b] = idx[tuple(pa[x - 1] for x in pb)]
    return FiniteGroup(f"S{k}", table, elems)


@functools.lru_cache(maxsize=None)
def cyclic_group(k: int) -> FiniteGroup:
    table = np.fromfunction(lambda a, b: (a + b) % k, (k, k), dtype=int)
    return FiniteGroup(f"Z{k}", table, list(range(k)))


def direct_product(a: FiniteGroup, b: FiniteGroup) -> FiniteGroup:
    labels = [(la, lb) for la in a.labels for lb in b.labels]
    n = a.size * b.size
    table = np.empty((n, n), dtype=np.int32)
    for i in range(n):
        ia, ib = divmod(i, b.size)
        for j in range(n):
            ja, jb = divmod(j, b.size)
            table[i, j] = a.table[ia, ja] * b.size + b.table[ib, jb]
    return FiniteGroup(f"{a.name}x{b.name}", table, labels)


@functools.lru_cache(maxsize=None)
def parse_target(spec: str) -> FiniteGroup:
    """Parse target names like ``S3``, ``Z2``, ``Z2xZ2xZ2``."""
    parts = spec.split("x")
    groups = []
    for part in parts:
        if part.startswith("S") and part[1:].isdigit():
            groups.append(symmetric_group(int(part[1:])))
        elif part.startswith("Z") and part[1:].isdigit():
            groups.append(cyclic_group(int(part[1:])))
        else:
            raise ValueError(f"unknown target group: {part!r}")
    out = groups[0]
    for g in groups[1:]:
        out = direct_product(out, g)
    return out


def perm_index(group: FiniteGroup, p: Permutation) -> int:
    return group.index[p.images]


@dataclass
class QuotientMap:
    """A generator assignment into a finite table group."""

    domain: Presentation
    target: FiniteGroup
    assignment: Dict[GenSym, int]

    def eval(self, w: Word) -> int:
        cur = 0
        for sym, exp in w.letters:
            if sym not in self.assignment:
                raise KeyError(f"symbol {sym} has no assigned image")
            v = self.assignment[sym]
            if exp < 0:
                v = self.target.inv(v)
            cur = self.target.mul(cur, v)
        return cur

    def eval_letters(self, letters) -> int:
        cur = 0
        for sym, exp in letters:
            v = self.assignment[sym]
            if exp < 0:
                v = self.target.inv(v)
            cur = self.target.mul(cur, v)
        return cur

    def check(self) -> Tuple[bool, List[Word]]:
        failing = [r for r in self.domain.relators if self.eval(r) != 0]
        return (not failing, failing)


def check_homomorphism(m: QuotientMap) -> Tuple[bool, List[Word]]:
    return m.check()


def symmetric_image(p: Presentation, n: int) -> QuotientMap:
    """The map sending every single-index generator with index i to the
    adjacent transposition (i, i+1) of S_n."""
    group = symmetric_group(n)
    assignment = {}
    for g in p.generators:
        if g.family not in ("sigma", "s", "y", "rho", "tau") or g.i is None:
            raise ValueError(f"no symmetric image for generator {g}")
        assignment[g] = perm_index(group, Permutation.transposition(g.i, n))
    return QuotientMap(p, group, assignment)


def parity_image(p: Presentation) -> QuotientMap:
    """Abelianization onto Z_2 x Z_2: first bit counts s/y letters,
    second bit counts rho letters."""
    group = parse_target("Z2xZ2")
    assignment = {}
    for g in p.generators:
        if g.family in ("s", "y", "sigma"):
            assignment[g] = group.index[(1, 0)]
        elif g.family == "rho":
            assignment[g] = group.index[(0, 1)]
        else:
            raise ValueError(f"no parity image for generator {g}")
    return QuotientMap(p, group, assignment)


# ---------------------------------------------------------------------------
# Homomorphism counting


def _encode(p: Presentation):
    """Relators as flat letter arrays grouped by the highest generator used."""
    gens = list(p.generators)
    gidx = {g: k for k, g in enumerate(gens)}
    rels = []
    for r in p.relators:
        letters = [(gidx[s] << 1) | (1 if e < 0 else 0) for s, e in r.letters]
        level = max(l >> 1 for l in letters)
        rels.append((level, letters))
    rels.sort(key=lambda t: t[0])
    letters_flat: List[int] = []
    starts, ends, levels = [], [], []
    for level, letters in rels:
        starts.append(len(letters_flat))
        letters_flat.extend(letters)
        ends.append(len(letters_flat))
        levels.append(level)
    ngens = len(gens)
    lvl_start = np.zeros(ngens, dtype=np.int64)
    lvl_end = np.zeros(ngens, dtype=np.int64)
    pos = 0
    for lv in range(ngens):
        lvl_start[lv] = pos
        while pos < len(rels) and levels[pos] == lv:
            pos += 1
        lvl_end[lv] = pos
    return (np.asarray(letters_flat, dtype=np.int64),
            np.asarray(starts, dtype=np.int64),
            np.asarray(ends, dtype=np.int64),
            lvl_start, lvl_end)


def _count_numpy(table, inv, ngens, letters, starts, ends,
                 lvl_start, lvl_end, lo, hi) -> int:
    """Pruned depth-first count; the last generator level is vectorized."""
    n = table.shape[0]
    all_idx = np.arange(n)

    def relator_ok(ri, choice) -> bool:
        cur = 0
        for li in range(starts[ri], ends[ri]):
            lt = letters[li]
            v = choice[lt >> 1]
            if lt & 1:
                v = inv[v]
            cur = table[cur, v]
        return cur == 0

    def last_level_count(choice) -> int:
        ok = np.ones(n, dtype=bool)
        last = ngens - 1
        for ri in range(lvl_start[last], lvl_end[last]):
            cur = np.zeros(n, dtype=np.int64)
            for li in range(starts[ri], ends[ri]):
                lt = letters[li]
                gi = lt >> 1
                if gi == last:
                    v = inv[all_idx] if lt & 1 else all_idx
                else:
                    v = choice[gi]
                    if lt & 1:
                        v = int(inv[v])
                cur = table[cur, v]
            ok &= cur == 0
        return int(ok.sum())

    choice = [0] * ngens
    total = 0

    def walk(level, first, limit):
        nonlocal total
        if level == ngens - 1:
            if level == 0:
                # single generator: restrict the vectorized count to [lo, hi)
                ok_count = 0
                for c in range(first, limit):
                    choice[0] = c
                    if all(relator_ok(ri, choice)
                           for ri in range(lvl_start[0], lvl_end[0])):
                        ok_count += 1
                total += ok_count
                return
            total += last_level_count(choice)
            return
        for c in range(first, limit):
            choice[level] = c
            if all(relator_ok(ri, choice)
                   for ri in range(lvl_start[level], lvl_end[level])):
                walk(level + 1, 0, n)

    if ngens == 1:
        walk(0, lo, hi)
    else:
        for c in range(lo, hi):
            choice[0] = c
            if all(relator_ok(ri, choice)
                   for ri in range(lvl_start[0], lvl_end[0])):
                walk(1, 0, n)
    return total


def _numba_counter():
    if os.environ.get("VIRTSYM_DISABLE_NUMBA"):
        return None
    try:
        from ._njit_kernels import count_dfs
        return count_dfs
    except Exception:
        return None


def active_backend() -> str:
    return "numpy" if _numba_counter() is None else "numba"


def hom_count(p: Presentation, target: FiniteGroup,
              budget: int = DEFAULT_BUDGET, jobs: int = 1,
              backend: Optional[str] = None) -> int:
    """Exact number of homomorphisms from the presented group to the target.

    Enumerates generator assignments depth first, checking each relator as
    soon as all its generators are assigned.  Deterministic; independent of
    ``jobs``, which only splits the first generator's candidate range.
    """
    ngens = len(p.generators)
    n = target.size
    if n ** ngens > budget:
        raise BudgetExceeded(
            f"{n}^{ngens} assignments exceed the budget of {budget}")
    if ngens == 0:
        return 1
    if not p.relators:
        return n ** ngens
    letters, starts, ends, lvl_start, lvl_end = _encode(p)
    counter = None
    if backend in (None, "numba"):
        counter = _numba_counter()
        if counter is None and backend == "numba":
            raise RuntimeError("numba backend requested but unavailable")
    flat_table = np.ascontiguousarray(target.table.astype(np.int64)).ravel()
    inv = target.inverse.astype(np.int64)
    table2d = target.table.astype(np.int64)

    def run(lo, hi):
        if counter is not None:
            return int(counter(flat_table, inv, n, ngens, letters,
                               starts, ends, lvl_start, lvl_end, lo, hi))
        return _count_numpy(table2d, inv, ngens, letters, starts, ends,
                            lvl_start, lvl_end, lo, hi)

    jobs = max(1, min(jobs, n))
    if jobs == 1:
        return run(0, n)
    bounds = np.linspace(0, n, jobs + 1).astype(int)
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(run, int(a), int(b))
                   for a, b in zip(bounds[:-1], bounds[1:]) if a < b]
        return sum(f.result() for f in futures)
