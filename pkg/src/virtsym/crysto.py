"""Exact arithmetic in the semidirect product Z^{n(n-1)/2} x| S_n.

Translation vectors are indexed by pairs i < j; the symmetric group acts by
the signed pair rule e_{i,j} -> e_{sigma(i),sigma(j)}, where an out-of-order
image pair flips the sign (the pair symbol with reversed indices is the
inverse).  Everything here is integer arithmetic on small dense tuples.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .permutations import Permutation, all_permutations
from .quotients import BudgetExceeded
from .words import Word

Pair = Tuple[int, int]


def pair_list(n: int) -> List[Pair]:
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def pair_position(n: int) -> Dict[Pair, int]:
    return {p: k for k, p in enumerate(pair_list(n))}


def zero_vector(n: int) -> Tuple[int, ...]:
    return (0,) * (n * (n - 1) // 2)


def basis_vector(n: int, i: int, j: int) -> Tuple[int, ...]:
    v = [0] * (n * (n - 1) // 2)
    v[pair_position(n)[(i, j)]] = 1
    return tuple(v)


def act(sigma: Permutation, v: Sequence[int]) -> Tuple[int, ...]:
    """Signed pair action, extended linearly."""
    n = sigma.n
    pairs = pair_list(n)
    pos = pair_position(n)
    if len(v) != len(pairs):
        raise ValueError("vector dimension does not match the permutation")
    out = [0] * len(pairs)
    for k, (i, j) in enumerate(pairs):
        c = v[k]
        if not c:
            continue
        a, b = sigma(i), sigma(j)
        if a < b:
            out[pos[(a, b)]] += c
        else:
            out[pos[(b, a)]] -= c
    return tuple(out)


def act_unsigned(sigma: Permutation, v: Sequence[int]) -> Tuple[int, ...]:
    """The action on unordered pairs with no signs; kept as a negative
    control, it is not faithful (already for n = 2)."""
    n = sigma.n
    pairs = pair_list(n)
    pos = pair_position(n)
    out = [0] * len(pairs)
    for k, (i, j) in enumerate(pairs):
        if v[k]:
            a, b = sorted((sigma(i), sigma(j)))
            out[pos[(a, b)]] += v[k]
    return tuple(out)


@dataclass(frozen=True)
class CrystoElement:
    """(translation vector, permutation); identity is (0, id)."""

    n: int
    v: Tuple[int, ...]
    perm: Permutation

    def __post_init__(self):
        if self.perm.n != self.n or len(self.v) != self.n * (self.n - 1) // 2:
            raise ValueError("inconsistent dimensions")

    @staticmethod
    def identity(n: int) -> "CrystoElement":
        return CrystoElement(n, zero_vector(n), Permutation.identity(n))

    def __mul__(self, other: "CrystoElement") -> "CrystoElement":
        if self.n != other.n:
            raise ValueError("dimension mismatch")
        moved = act(self.perm, other.v)
        v = tuple(a + b for a, b in zip(self.v, moved))
        return CrystoElement(self.n, v, self.perm * other.perm)

    def inverse(self) -> "CrystoElement":
        pinv = self.perm.inverse()
        v = tuple(-x for x in act(pinv, self.v))
        return CrystoElement(self.n, v, pinv)

    def __pow__(self, k: int) -> "CrystoElement":
        if k < 0:
            return self.inverse() ** (-k)
        out = CrystoElement.identity(self.n)
        for _ in range(k):
            out = out * self
        return out

    def is_identity(self) -> bool:
        return self.perm.is_identity() and not any(self.v)

    def order(self) -> Optional[int]:
        """Finite order, or None for infinite.

        The permutation part of (v, s)^k is s^k, so only k = order(s) can
        kill it; the power is then the orbit sum of v, which must vanish.
        """
        t = self.perm.order()
        total = [0] * len(self.v)
        sk = Permutation.identity(self.n)
        for _ in range(t):
            moved = act(sk, self.v)
            total = [a + b for a, b in zip(total, moved)]
            sk = sk * self.perm
        return t if not any(total) else None

    def to_json(self) -> dict:
        pairs = pair_list(self.n)
        coords = {f"{i},{j}": c for (i, j), c in zip(pairs, self.v) if c}
        return {"v": coords, "perm": list(self.perm.images)}

    @staticmethod
    def from_json(data: dict) -> "CrystoElement":
        perm = Permutation(data["perm"])
        n = perm.n
        pos = pair_position(n)
        v = [0] * (n * (n - 1) // 2)
        for key, c in data.get("v", {}).items():
            i, j = (int(t) for t in key.split(","))
            if (i, j) not in pos:
                raise ValueError(f"bad pair index {key!r} for n={n}")
            v[pos[(i, j)]] = int(c)
        return CrystoElement(n, tuple(v), perm)


def multiply(a: CrystoElement, b: CrystoElement) -> CrystoElement:
    return a * b


def inverse(a: CrystoElement) -> CrystoElement:
    return a.inverse()


def order(a: CrystoElement) -> Optional[int]:
    return a.order()


def orbit_representatives(sigma: Permutation) -> List[Pair]:
    """Lexicographically least unordered pair of each orbit of sigma."""
    n = sigma.n
    seen = set()
    reps = []
    for p in pair_list(n):
        if p in seen:
            continue
        reps.append(p)
        cur = p
        while True:
            cur = tuple(sorted((sigma(cur[0]), sigma(cur[1]))))
            if cur == p:
                break
            seen.add(cur)
    return reps


def consecutive_cycles_permutation(n: int, cycle_type: Sequence[int]) -> Permutation:
    """Disjoint cycles on consecutive indices 1..sum(m_k)."""
    cycles = []
    base = 0
    for m in cycle_type:
        cycles.append(tuple(range(base + 1, base + m + 1)))
        base += m
    return Permutation.from_cycles(n, cycles)


def free_parameter_count(cycle_type: Sequence[int]) -> int:
    return sum(1 if m == 2 else m - 1 for m in cycle_type)


def torsion_element(n: int, cycle_type: Sequence[int],
                    params: Sequence[int]) -> CrystoElement:
    """An element of order lcm(cycle_type) whose permutation has the given
    cycle type on consecutive indices.

    The translation part is supported on the orbit of the leading pair of
    each cycle block; all but the last orbit coordinate per block are free
    integer parameters and the last is solved from the orbit-sum-zero order
    criterion.  Distinct parameter vectors give distinct elements.
    """
    cycle_type = list(cycle_type)
    if any(m < 2 for m in cycle_type):
        raise ValueError("cycle lengths must be at least 2")
    if sum(cycle_type) > n:
        raise ValueError(f"cycle type needs {sum(cycle_type)} points, n={n}")
    expected = free_parameter_count(cycle_type)
    params = list(params)
    if len(params) != expected:
        raise ValueError(f"expected {expected} free parameters, got {len(params)}")
    theta = consecutive_cycles_permutation(n, cycle_type)
    pos = pair_position(n)
    dim = n * (n - 1) // 2
    v = [0] * dim
    cursor = 0
    base = 0
    for m in cycle_type:
        lead = (base + 1, base + 2)
        if m == 2:
            v[pos[lead]] += params[cursor]
            cursor += 1
        else:
            orbit_pairs = []
            cur = lead
            for _ in range(m):
                orbit_pairs.append(cur)
                cur = (theta(cur[0]), theta(cur[1]))
            for k in range(m - 1):
                a, b = orbit_pairs[k]
                if a < b:
                    v[pos[(a, b)]] += params[cursor]
                else:
                    v[pos[(b, a)]] -= params[cursor]
                cursor += 1
            v = _solve_last(n, theta, v, orbit_pairs[m - 1])
        base += m
    elem = CrystoElement(n, tuple(v), theta)
    want = math.lcm(*cycle_type)
    got = elem.order()
    if got != want:
        raise AssertionError(f"constructed element has order {got}, wanted {want}")
    return elem


def _orbit_sum(elem_n: int, theta: Permutation, v: Sequence[int]) -> List[int]:
    total = [0] * len(v)
    sk = Permutation.identity(elem_n)
    for _ in range(theta.order()):
        moved = act(sk, v)
        total = [a + b for a, b in zip(total, moved)]
        sk = sk * theta
    return total


def _solve_last(n: int, theta: Permutation, v: List[int], last_pair: Pair) -> List[int]:
    """Choose the final orbit coordinate so the orbit sums vanish."""
    pos = pair_position(n)
    a, b = last_pair
    key = (a, b) if a < b else (b, a)
    sign = 1 if a < b else -1
    unit = [0] * len(v)
    unit[pos[key]] = sign
    s0 = _orbit_sum(n, theta, v)
    su = _orbit_sum(n, theta, unit)
    x = None
    for c0, cu in zip(s0, su):
        if cu == 0:
            if c0 != 0:
                raise ValueError(
                    f"orbit sum {c0} at a coordinate the free pair cannot reach")
            continue
        cand, rem = divmod(-c0, cu)
        if rem:
            raise ValueError(f"orbit sum constraint has no integer solution")
        if x is None:
            x = cand
        elif x != cand:
            raise ValueError("inconsistent orbit sum constraints")
    x = 0 if x is None else x
    v = v[:]
    v[pos[key]] += sign * x
    return v


def verify_orbit_sums(elem: CrystoElement) -> List[Pair]:
    """Orbit representatives whose orbit sum is nonzero (empty iff the
    element has finite order)."""
    total = _orbit_sum(elem.n, elem.perm, elem.v)
    pos = pair_position(elem.n)
    bad = []
    for rep in orbit_representatives(elem.perm):
        if total[pos[rep]] != 0:
            bad.append(rep)
    return bad


# ---------------------------------------------------------------------------
# Actions as data: the built-in pair action plus loadable signed actions


class SignedAction:
    """A signed coordinate action of S_n given per adjacent transposition.

    ``mats[i-1]`` maps basis index k to (target index, sign).  Arbitrary
    permutations act through a transposition decomposition, so the data must
    satisfy the symmetric group relations; see :func:`coxeter_check`.
    """

    def __init__(self, n: int, dim: int, mats: Sequence[Sequence[Tuple[int, int]]]):
        self.n = n
        self.dim = dim
        if len(mats) != n - 1:
            raise ValueError("need one signed matrix per adjacent transposition")
        self.mats = [list(m) for m in mats]
        for m in self.mats:
            if sorted(t for t, _ in m) != list(range(dim)):
                raise ValueError("matrix is not a signed permutation")

    def act_transposition(self, i: int, v: Sequence[int]) -> Tuple[int, ...]:
        out = [0] * self.dim
        for k, (target, sign) in enumerate(self.mats[i - 1]):
            out[target] = sign * v[k]
        return tuple(out)

    def act(self, sigma: Permutation, v: Sequence[int]) -> Tuple[int, ...]:
        word = _transposition_word(sigma)
        out = tuple(v)
        for i in reversed(word):
            out = self.act_transposition(i, out)
        return out

    def to_json(self) -> dict:
        return {"n": self.n, "dim": self.dim,
                "mats": [[[t, s] for t, s in m] for m in self.mats]}

    @staticmethod
    def from_json(data: dict) -> "SignedAction":
        mats = [[(int(t), int(s)) for t, s in m] for m in data["mats"]]
        return SignedAction(int(data["n"]), int(data["dim"]), mats)


def _transposition_word(sigma: Permutation) -> List[int]:
    """sigma as a product of adjacent transpositions, left to right."""
    images = list(sigma.images)
    swaps = []
    changed = True
    while changed:
        changed = False
        for k in range(len(images) - 1):
            if images[k] > images[k + 1]:
                images[k], images[k + 1] = images[k + 1], images[k]
                swaps.append(k + 1)
                changed = True
    # sigma * t_{i1} * ... * t_{ik} = id, hence sigma = t_{ik} * ... * t_{i1}
    return list(reversed(swaps))


def pair_action_spec(n: int) -> SignedAction:
    """The built-in signed pair action as loadable data."""
    pairs = pair_list(n)
    pos = pair_position(n)
    mats = []
    for i in range(1, n):
        tau = Permutation.transposition(i, n)
        rows = []
        for (a, b) in pairs:
            x, y = tau(a), tau(b)
            if x < y:
                rows.append((pos[(x, y)], 1))
            else:
                rows.append((pos[(y, x)], -1))
        mats.append(rows)
    return SignedAction(n, len(pairs), mats)


def coxeter_check(action: SignedAction) -> bool:
    """Exhaustively verify the symmetric group relations on basis vectors."""
    n, dim = action.n, action.dim
    basis = [tuple(1 if t == k else 0 for t in range(dim)) for k in range(dim)]

    def a(i, v):
        return action.act_transposition(i, v)

    for i in range(1, n):
        for e in basis:
            if a(i, a(i, e)) != e:
                return False
    for i in range(1, n - 1):
        for e in basis:
            if a(i, a(i + 1, a(i, e))) != a(i + 1, a(i, a(i + 1, e))):
                return False
    for i in range(1, n):
        for j in range(i + 2, n):
            for e in basis:
                if a(i, a(j, e)) != a(j, a(i, e)):
                    return False
    return True


def holonomy_faithful(n: int, action=None, limit: int = 8) -> bool:
    """True iff every non-identity permutation moves some basis vector.
    Exhaustive over S_n; refuses n beyond the configured limit."""
    if n > limit:
        raise BudgetExceeded(f"holonomy check over S_{n} exceeds the limit {limit}")
    dim = n * (n - 1) // 2
    basis = [tuple(1 if t == k else 0 for t in range(dim)) for k in range(dim)]
    act_fn = act if action is None else action.act
    for sigma in all_permutations(n):
        if sigma.is_identity():
            continue
        if all(act_fn(sigma, e) == e for e in basis):
            return False
    return True


def holonomy_faithful_unsigned(n: int, limit: int = 8) -> bool:
    if n > limit:
        raise BudgetExceeded(f"holonomy check over S_{n} exceeds the limit {limit}")
    dim = n * (n - 1) // 2
    basis = [tuple(1 if t == k else 0 for t in range(dim)) for k in range(dim)]
    for sigma in all_permutations(n):
        if sigma.is_identity():
            continue
        if all(act_unsigned(sigma, e) == e for e in basis):
            return False
    return True


# ---------------------------------------------------------------------------
# Letter-by-letter folding of ambient words


def letter_fold(n: int, w: Word) -> CrystoElement:
    """Fold a word in {y_i, rho_i} through the quotient: y_i maps to
    (e_{i,i+1}, tau_i) and rho_i to (0, tau_i)."""
    out = CrystoElement.identity(n)
    for sym, exp in w.letters:
        if sym.family == "y":
            elem = CrystoElement(n, basis_vector(n, sym.i, sym.i + 1),
                                 Permutation.transposition(sym.i, n))
        elif sym.family == "rho":
            elem = CrystoElement(n, zero_vector(n),
                                 Permutation.transposition(sym.i, n))
        else:
            raise ValueError(f"cannot fold symbol {sym}")
        if exp < 0:
            elem = elem.inverse()
        out = out * elem
    return out


def kappa_exponent_vector(n: int, kappa_word: Word) -> Tuple[int, ...]:
    """Abelianized pair-symbol word as a translation vector."""
    pos = pair_position(n)
    v = [0] * (n * (n - 1) // 2)
    for sym, exp in kappa_word.letters:
        if sym.family != "kappa":
            raise ValueError(f"not a pair symbol: {sym}")
        v[pos[(sym.i, sym.j)]] += exp
    return tuple(v)
