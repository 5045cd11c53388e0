"""Reidemeister-Schreier rewriting: transversals, subgroup generators and
subgroup presentations, plus the pair-symbol rewriting of pure words.

Subgroup generators gamma(mu, a) = (mu a)(rep(mu a))^-1 are tabulated per
(coset representative, ambient generator).  Their values are reduced in the
quotient where the ambient involutive generators square to the identity;
generators with equal or mutually inverse values are identified, which is
exactly the bookkeeping needed to obtain the compact generating sets of the
commutator subgroups.  Raw free values are kept alongside: substituting them
back into a rewritten word telescopes to the input word on the nose, which
is the exactness property the tests rely on.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .permutations import Permutation
from .presentations import (Presentation, family, make_presentation,
                            pair_symbols, tietze_eliminate)
from .quotients import QuotientMap, parity_image, symmetric_image
from .words import (EMPTY, GenSym, Letter, Word, involution_normalize, word)


class SchreierTransversal:
    """A prefix-closed set of coset representatives for the kernel of a
    finite quotient, one word per target element."""

    def __init__(self, qmap: QuotientMap, rep_words: Sequence[Word],
                 name: str = "transversal"):
        self.qmap = qmap
        self.rep_words = list(rep_words)
        self.name = name
        self.involutions = qmap.domain.involutions()
        if len(self.rep_words) != qmap.target.size:
            raise ValueError("need exactly one representative per element")
        self.pos_of_elem: Dict[int, int] = {}
        for pos, w in enumerate(self.rep_words):
            elem = qmap.eval(w)
            if elem in self.pos_of_elem:
                raise ValueError(f"duplicate coset representative {w}")
            self.pos_of_elem[elem] = pos
        if self.rep_words[self.pos_of_elem[0]] != EMPTY:
            raise ValueError("the identity coset must be represented by 1")
        self._rep_index = {w.letters: pos for pos, w in enumerate(self.rep_words)}
        self._rewriters: Dict[object, "SubgroupRewriter"] = {}

    def representative(self, w: Word) -> Word:
        return self.rep_words[self.pos_of_elem[self.qmap.eval(w)]]

    def rep_position(self, w: Word) -> int:
        pos = self._rep_index.get(w.letters)
        if pos is None:
            raise ValueError(f"{w} is not a coset representative")
        return pos

    def is_prefix_closed(self) -> bool:
        reps = {w.letters for w in self.rep_words}
        return all(w.letters[:k] in reps
                   for w in self.rep_words for k in range(len(w)))

    def rewriter(self, aliases=None) -> "SubgroupRewriter":
        if aliases is not None:
            return SubgroupRewriter(self.qmap.domain, self, aliases)
        if "default" not in self._rewriters:
            self._rewriters["default"] = SubgroupRewriter(self.qmap.domain, self)
        return self._rewriters["default"]


@dataclass(frozen=True)
class RSGenerator:
    """One Schreier generator gamma(mu, a).

    ``value`` is reduced using the ambient involution relations; ``raw``
    is the plain freely reduced word (mu a)(rep(mu a))^-1.
    """

    mu: Word
    a: GenSym
    value: Word
    raw: Word

    @property
    def is_trivial(self) -> bool:
        return not self.value


def transversal_m2(p: Presentation, split: Optional[GenSym] = None
                   ) -> SchreierTransversal:
    """The four-element transversal {1, c, rho_1, c rho_1} over the parity
    quotient, where c is the split generator (s_1 or y_1)."""
    families = {g.family for g in p.generators}
    if not families <= {"s", "y", "rho"} or "rho" not in families \
            or not families & {"s", "y"}:
        raise ValueError("parity transversal needs a twin or triplet family")
    if split is None:
        split = min((g for g in p.generators if g.family in ("s", "y")),
                    key=lambda g: g.sort_key)
    rho1 = GenSym("rho", 1)
    if rho1 not in p.generators or split not in p.generators:
        raise ValueError("presentation lacks the transversal generators")
    qmap = parity_image(p)
    reps = [EMPTY, word(split), word(rho1), word(split, rho1)]
    return SchreierTransversal(qmap, reps, name="m2")


def _staircase_factor(k: int, i: int) -> List[Letter]:
    """rho_k rho_{k-1} ... rho_{i+1}; empty when i == k."""
    return [(GenSym("rho", t), 1) for t in range(k, i, -1)]


def transversal_mn(n: int) -> SchreierTransversal:
    """The n! staircase representatives over the symmetric quotient of the
    virtual triplet family."""
    if n < 2:
        raise ValueError("transversal_mn needs n >= 2")
    p = family("virtual_triplet", n)
    qmap = symmetric_image(p, n)
    reps = []
    ranges = [range(k, -1, -1) for k in range(1, n)]
    for choice in itertools.product(*ranges):
        letters: List[Letter] = []
        for k, i in enumerate(choice, start=1):
            letters.extend(_staircase_factor(k, i))
        reps.append(Word(letters))
    return SchreierTransversal(qmap, reps, name="mn")


def gamma(T: SchreierTransversal, mu: Word, a: GenSym) -> RSGenerator:
    T.rep_position(mu)
    extended = mu * word(a)
    raw = extended * ~T.representative(extended)
    value = involution_normalize(raw, T.involutions)
    return RSGenerator(mu, a, value, raw)


def _scan(T: SchreierTransversal, letters: Iterable[Letter]):
    """Yield ((rep_position, generator), sign) per letter of a kernel word."""
    target = T.qmap.target
    assignment = T.qmap.assignment
    state = 0
    for sym, exp in letters:
        img = assignment[sym]
        if exp == 1:
            yield (T.pos_of_elem[state], sym), 1
            state = target.mul(state, img)
        else:
            state = target.mul(state, target.inv(img))
            yield (T.pos_of_elem[state], sym), -1
    if state != 0:
        raise ValueError("not a kernel word for this transversal")


class SubgroupRewriter:
    """Precomputed gamma table with value-based identification of generators.

    Two gammas with equal values share a symbol; a gamma whose value is the
    inverse of another's maps to the inverse symbol.  Default symbols are
    ``g<rep>_<gen>`` after the least member of each class; an alias map may
    rename classes, keyed by that least member.
    """

    def __init__(self, p: Presentation, T: SchreierTransversal, aliases=None):
        self.presentation = p
        self.transversal = T
        gens = list(p.generators)
        self._gamma: Dict[Tuple[int, GenSym], RSGenerator] = {}
        norm_of: Dict[Tuple[int, int], Word] = {}
        for pos, mu in enumerate(T.rep_words):
            for gi, a in enumerate(gens):
                rs = gamma(T, mu, a)
                self._gamma[(pos, a)] = rs
                if rs.value:
                    norm_of[(pos, gi)] = rs.value

        inv = T.involutions

        def wkey(w: Word):
            return w.sort_key()

        buckets: Dict[tuple, List[Tuple[int, int]]] = {}
        for key, value in sorted(norm_of.items()):
            value_inv = involution_normalize(~value, inv)
            bucket_key = min(wkey(value), wkey(value_inv))
            buckets.setdefault(bucket_key, []).append(key)

        self.symbol_of: Dict[Tuple[int, GenSym], Tuple[GenSym, int]] = {}
        self.values: Dict[GenSym, Word] = {}
        alias_map = aliases or {}
        ordered: List[Tuple[Tuple[int, int], GenSym]] = []
        for bucket_key in sorted(buckets):
            members = sorted(buckets[bucket_key])
            rep_pos, rep_gi = members[0]
            orient = norm_of[(rep_pos, rep_gi)]
            sym = alias_map.get((rep_pos, gens[rep_gi]))
            if sym is None:
                sym = GenSym("g", rep_pos, rep_gi)
            ordered.append(((rep_pos, rep_gi), sym))
            self.values[sym] = orient
            for pos, gi in members:
                sign = 1 if norm_of[(pos, gi)] == orient else -1
                self.symbol_of[(pos, gens[gi])] = (sym, sign)
        ordered.sort()
        self.generators = [sym for _, sym in ordered]

    def rewrite(self, letters: Iterable[Letter]) -> Word:
        out: List[Letter] = []
        for key, sign in _scan(self.transversal, letters):
            rs = self._gamma[key]
            if not rs.value:
                continue
            sym, orient = self.symbol_of[key]
            out.append((sym, orient * sign))
        return Word(out)

    def rewrite_raw(self, letters: Iterable[Letter]) -> List[Tuple[Tuple[int, GenSym], int]]:
        """Letters over raw gamma keys, omitting only freely trivial gammas."""
        out = []
        for key, sign in _scan(self.transversal, letters):
            if self._gamma[key].raw:
                out.append((key, sign))
        return out

    def raw_value(self, key: Tuple[int, GenSym]) -> Word:
        return self._gamma[key].raw

    def substitute_raw(self, rewritten) -> Word:
        out = EMPTY
        for key, sign in rewritten:
            v = self._gamma[key].raw
            out = out * (v if sign == 1 else ~v)
        return out


def paper_aliases(p: Presentation, T: SchreierTransversal) -> Dict:
    """The conventional names for the parity-transversal gamma classes:
    x_i/z_i/w for the twin family, alpha_i/beta_i/delta for the triplet."""
    if T.name != "m2":
        raise ValueError("aliases are defined for the parity transversal")
    split = T.rep_words[1].letters[0][0]
    if split.family == "s":
        base, mid, last = "x", "z", GenSym("w")
    else:
        base, mid, last = "alpha", "beta", GenSym("delta")
    out: Dict[Tuple[int, GenSym], GenSym] = {}
    for g in p.generators:
        if g.family == "rho" and g.i >= 2:
            out[(0, g)] = GenSym(base, g.i)
            out[(1, g)] = GenSym(mid, g.i)
    out[(2, split)] = last
    return out


def tau_rewrite(T: SchreierTransversal, w: Word, aliases=None) -> Word:
    """Rewrite a kernel word as a word in the identified subgroup generators.

    Gammas with trivial value are omitted.  ``aliases="paper"`` applies the
    conventional naming on the parity transversal.
    """
    if aliases == "paper":
        aliases = paper_aliases(T.qmap.domain, T)
    return T.rewriter(aliases).rewrite(w.letters)


def subgroup_presentation(p: Presentation, T: SchreierTransversal,
                          aliases=None, tietze: bool = False) -> Presentation:
    """Presentation of the kernel subgroup on the identified gamma generators,
    with relators tau(mu r mu^-1) over all representatives and relators."""
    if aliases == "paper":
        aliases = paper_aliases(p, T)
    rw = T.rewriter(aliases) if p is T.qmap.domain else SubgroupRewriter(p, T, aliases)
    rels = []
    for mu in T.rep_words:
        mu_inv_letters = tuple((s, -e) for s, e in reversed(mu.letters))
        for r in p.relators:
            rels.append(rw.rewrite(mu.letters + r.letters + mu_inv_letters))
    out = make_presentation(f"{p.name}-kernel", rw.generators, rels)
    if tietze:
        out = tietze_eliminate(out, "auto")
    return out


# ---------------------------------------------------------------------------
# Pure words and pair symbols


def kappa_defining_word(n: int, i: int, j: int) -> Word:
    """The pair generator as a word in the ambient generators:
    k_{i,i+1} = y_i rho_i, conjugated down the staircase for j > i+1."""
    if not 1 <= i < j <= n:
        raise ValueError("need 1 <= i < j <= n")
    core = [(GenSym("y", i), 1), (GenSym("rho", i), 1)]
    left = [(GenSym("rho", t), 1) for t in range(j - 1, i, -1)]
    right = [(GenSym("rho", t), 1) for t in range(i + 1, j)]
    return Word(left + core + right)


def _perm_image(n: int, w: Word) -> Permutation:
    q = Permutation.identity(n)
    for sym, _ in w.letters:
        q = q * Permutation.transposition(sym.i, n)
    return q


def pure_to_kappa(n: int, w: Word) -> Word:
    """Rewrite a pure word in {y_i, rho_i} as a word in the pair symbols.

    Scans left to right keeping the permutation image q of the accumulated
    rho-tail; each y_i emits the pair (q(i), q(i+1)) (inverted when out of
    order, since k_{j,i} = k_{i,j}^-1) and folds rho_i into the tail.  The
    leftover tail has trivial image and is discarded.  Inverse exponents on
    y letters are normalized away first using the involution relation.
    """
    for sym, _ in w.letters:
        if sym.family not in ("y", "rho") or sym.i is None or not 1 <= sym.i < n:
            raise ValueError(f"unexpected symbol {sym} for a pure word at n={n}")
    if not _perm_image(n, w).is_identity():
        raise ValueError("word does not lie in the pure subgroup")
    q = list(range(1, n + 1))
    out: List[Letter] = []
    for sym, _ in w.letters:
        i = sym.i
        if sym.family == "y":
            a, b = q[i - 1], q[i]
            if a < b:
                out.append((GenSym("kappa", a, b), 1))
            else:
                out.append((GenSym("kappa", b, a), -1))
        q[i - 1], q[i] = q[i], q[i - 1]
    return Word(out)


def pvl_generator_images(n: int, T: Optional[SchreierTransversal] = None
                         ) -> Dict[Tuple[int, int], List[Word]]:
    """For each representative mu and ambient generator y_i, the pair-symbol
    image of gamma(mu, y_i); keyed by the (i, j) pair it lands on."""
    T = T or transversal_mn(n)
    out: Dict[Tuple[int, int], List[Word]] = {}
    for mu in T.rep_words:
        for i in range(1, n):
            g = word(GenSym("y", i))
            val = (mu * g) * ~T.representative(mu * g)
            img = pure_to_kappa(n, val)
            if len(img) != 1:
                raise AssertionError(f"gamma({mu}, y_{i}) is not a single pair")
            sym = img.letters[0][0]
            out.setdefault((sym.i, sym.j), []).append(img)
    return out


def pvl_subgroup_presentation(n: int) -> Presentation:
    """Kernel presentation of the symmetric quotient of the triplet family,
    rewritten into pair symbols via :func:`pure_to_kappa`."""
    p = family("virtual_triplet", n)
    T = transversal_mn(n)
    gens = pair_symbols(n, "kappa")
    covered = set(pvl_generator_images(n, T))
    expected = {(g.i, g.j) for g in gens}
    if covered != expected:
        raise AssertionError("pair generators do not cover all index pairs")
    rels = []
    for mu in T.rep_words:
        for r in p.relators:
            rels.append(pure_to_kappa(n, mu * r * ~mu))
    return make_presentation(f"PVL{n}-rs", gens, rels)
