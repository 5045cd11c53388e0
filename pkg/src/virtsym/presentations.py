"""Finite group presentations and the family constructors.

Every relation u = v is stored as the single relator u v^-1 in canonical
form (see :func:`virtsym.words.relator_canonical`); relators are
deduplicated by canonical form with first occurrence kept.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .words import (EMPTY, GenSym, Word, parse_symbol, parse_word,
                    relator_canonical, word)


class RangeError(ValueError):
    """Parameter outside the validity range of a presentation family."""


@dataclass(frozen=True)
class Presentation:
    name: str
    generators: Tuple[GenSym, ...]
    relators: Tuple[Word, ...]

    def __post_init__(self):
        gens = set(self.generators)
        if len(gens) != len(self.generators):
            raise ValueError("duplicate generators")
        for r in self.relators:
            extra = r.symbols() - gens
            if extra:
                raise ValueError(f"relator uses unknown symbols: {extra}")

    def relator_multiset(self) -> Dict[Word, int]:
        out: Dict[Word, int] = {}
        for r in self.relators:
            out[r] = out.get(r, 0) + 1
        return out

    def involutions(self) -> set:
        """Generators g whose square is listed as a relator."""
        rels = set(self.relators)
        return {g for g in self.generators
                if relator_canonical(word(g) * word(g)) in rels}

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "generators": [str(g) for g in self.generators],
            "relators": [str(r) for r in self.relators],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)

    @staticmethod
    def from_json(data: dict) -> "Presentation":
        gens = tuple(parse_symbol(t) for t in data["generators"])
        rels = [parse_word(t) for t in data["relators"]]
        return make_presentation(data.get("name", "presentation"), gens, rels)

    def __str__(self) -> str:
        gens = ", ".join(str(g) for g in self.generators)
        rels = ", ".join(str(r) for r in self.relators)
        return f"<{gens} | {rels}>"


def make_presentation(name: str, generators: Sequence[GenSym],
                      relators: Iterable[Word]) -> Presentation:
    """Canonicalize and deduplicate relators, dropping trivial ones."""
    seen = set()
    canon: List[Word] = []
    for r in relators:
        c = relator_canonical(r)
        if not c or c in seen:
            continue
        seen.add(c)
        canon.append(c)
    return Presentation(name, tuple(generators), tuple(canon))


def _rel(u: Word, v: Word = EMPTY) -> Word:
    return u * ~v


def _sym(family, i=None, j=None):
    return GenSym(family, i, j)


def _braid(a: GenSym, b: GenSym) -> Word:
    return _rel(word(a, b, a), word(b, a, b))


def _comm(a: GenSym, b: GenSym) -> Word:
    return _rel(word(a, b), word(b, a))


def _square(a: GenSym) -> Word:
    return word(a, a)


FAMILY_KINDS = (
    "symmetric", "braid", "twin", "triplet",
    "virtual_braid", "virtual_twin", "virtual_triplet",
    "virtual_twin_reduced", "virtual_triplet_reduced",
    "vt_commutator", "vl_commutator", "pvl", "pvt_raag",
)


def family(kind: str, n: int) -> Presentation:
    """Construct one of the built-in presentation families at size n."""
    if kind not in FAMILY_KINDS:
        raise ValueError(f"unknown family kind: {kind!r}")
    min_n = {"virtual_twin_reduced": 3, "virtual_triplet_reduced": 3}.get(kind, 2)
    if n < min_n:
        raise RangeError(f"family {kind!r} requires n >= {min_n}, got {n}")
    return _FAMILY_BUILDERS[kind](n)


def _adjacent(n):
    """Ordered index pairs at distance 1."""
    return [(i, j) for i in range(1, n) for j in range(1, n) if abs(i - j) == 1]


def _distant(n):
    """Ordered index pairs at distance >= 2."""
    return [(i, j) for i in range(1, n) for j in range(1, n) if abs(i - j) >= 2]


def _symmetric(n):
    t = [_sym("tau", i) for i in range(1, n)]
    rels = [_square(x) for x in t]
    rels += [_braid(t[i - 1], t[j - 1]) for i, j in _adjacent(n)]
    rels += [_comm(t[i - 1], t[j - 1]) for i, j in _distant(n)]
    return make_presentation(f"S{n}", t, rels)


def _braid_group(n):
    s = [_sym("sigma", i) for i in range(1, n)]
    rels = [_comm(s[i - 1], s[j - 1]) for i, j in _distant(n)]
    rels += [_braid(s[i - 1], s[j - 1]) for i, j in _adjacent(n)]
    return make_presentation(f"B{n}", s, rels)


def _twin(n):
    s = [_sym("s", i) for i in range(1, n)]
    rels = [_square(x) for x in s]
    rels += [_comm(s[i - 1], s[j - 1]) for i, j in _distant(n)]
    return make_presentation(f"T{n}", s, rels)


def _triplet(n):
    y = [_sym("y", i) for i in range(1, n)]
    rels = [_square(x) for x in y]
    rels += [_braid(y[i - 1], y[j - 1]) for i, j in _adjacent(n)]
    return make_presentation(f"L{n}", y, rels)


def _virtual(n, letter_family, name, with_letter_square, with_letter_braid,
             with_letter_far):
    a = [_sym(letter_family, i) for i in range(1, n)]
    r = [_sym("rho", i) for i in range(1, n)]
    rels: List[Word] = []
    if with_letter_square:
        rels += [_square(x) for x in a]
    rels += [_square(x) for x in r]
    if with_letter_far:
        rels += [_comm(a[i - 1], a[j - 1]) for i, j in _distant(n)]
    rels += [_comm(r[i - 1], r[j - 1]) for i, j in _distant(n)]
    rels += [_comm(a[i - 1], r[j - 1]) for i, j in _distant(n)]
    if with_letter_braid:
        rels += [_braid(a[i - 1], a[j - 1]) for i, j in _adjacent(n)]
    rels += [_braid(r[i - 1], r[j - 1]) for i, j in _adjacent(n)]
    # rho_i a_j rho_i = rho_j a_i rho_j for |i-j| = 1
    rels += [_rel(word(r[i - 1], a[j - 1], r[i - 1]),
                  word(r[j - 1], a[i - 1], r[j - 1]))
             for i, j in _adjacent(n)]
    return make_presentation(name, a + r, rels)


def _virtual_braid(n):
    return _virtual(n, "sigma", f"VB{n}", False, True, True)


def _virtual_twin(n):
    return _virtual(n, "s", f"VT{n}", True, False, True)


def _virtual_triplet(n):
    return _virtual(n, "y", f"VL{n}", True, True, False)


def _virtual_twin_reduced(n):
    s1 = _sym("s", 1)
    r = [_sym("rho", i) for i in range(1, n)]
    gens = [s1] + r
    rels = [_square(s1)] + [_square(x) for x in r]
    if n == 3:
        rels.append(word(r[0], r[1]) ** 3)
        return make_presentation("VT3-reduced", gens, rels)
    rels += [_comm(r[i - 1], r[j - 1]) for i, j in _distant(n)]
    rels += [_braid(r[i - 1], r[i]) for i in range(1, n - 1)]
    rels += [_comm(r[i - 1], s1) for i in range(3, n)]
    rels.append(word(s1, r[1], r[0], r[2], r[1]) ** 4)
    return make_presentation(f"VT{n}-reduced", gens, rels)


def _virtual_triplet_reduced(n):
    y1 = _sym("y", 1)
    r = [_sym("rho", i) for i in range(1, n)]
    gens = [y1] + r
    rels = [_square(y1)] + [_square(x) for x in r]
    rels += [_comm(r[i - 1], r[j - 1]) for i, j in _distant(n)]
    rels += [_braid(r[i - 1], r[i]) for i in range(1, n - 1)]
    rels += [_comm(r[i - 1], y1) for i in range(3, n)]
    rels.append(word(y1, r[0], r[1], y1, r[1], r[0]) ** 3)
    return make_presentation(f"VL{n}-reduced", gens, rels)


def _commutator_core(n, x, z, w):
    """Relators shared by the printed twin and triplet commutator lists."""
    rels = [word(x[2]) ** 3]
    rels += [word(x[j]) ** 2 for j in range(3, n)]
    rels.append(z ** 3)
    rels += [(word(x[i]) * ~word(x[i + 1])) ** 3 for i in range(2, n - 1)]
    rels += [(word(x[i]) * ~word(x[j])) ** 2
             for i in range(2, n - 1) for j in range(i + 2, n)]
    rels += [(word(x[j]) * w) ** 2 for j in range(3, n)]
    rels.append((z * ~w * ~word(x[3])) ** 3)
    rels += [(z * ~w * ~word(x[j])) ** 2 for j in range(4, n)]
    return rels


def _vt_commutator(n):
    name = f"VT{n}'"
    z_sym, w_sym = _sym("z"), _sym("w")
    if n == 2:
        return make_presentation(name, [w_sym], [])
    x = {i: _sym("x", i) for i in range(2, n)}
    if n == 3:
        return make_presentation(name, [x[2], z_sym, w_sym],
                                 [word(x[2]) ** 3, word(z_sym) ** 3])
    z, w = word(z_sym), word(w_sym)
    rels = _commutator_core(n, x, z, w)
    rels.append((z * ~w * ~word(x[3]) * ~z * word(x[2]) * word(x[3]) * ~word(x[2])) ** 2)
    rels.append((w * ~z * word(x[3]) * w * z * ~w
                 * ~word(x[2]) * ~word(x[3]) * word(x[2])) ** 2)
    return make_presentation(name, [x[i] for i in range(2, n)] + [z_sym, w_sym], rels)


def _vl_commutator(n):
    name = f"VL{n}'"
    b_sym, d_sym = _sym("beta"), _sym("delta")
    if n == 2:
        return make_presentation(name, [d_sym], [])
    a = {i: _sym("alpha", i) for i in range(2, n)}
    if n == 3:
        return make_presentation(name, [a[2], b_sym, d_sym],
                                 [word(a[2]) ** 3, word(b_sym) ** 3])
    b, d = word(b_sym), word(d_sym)
    rels = _commutator_core(n, a, b, d)
    rels.append((~word(a[2]) * b) ** 3)
    rels.append((d * b * ~d * ~word(a[2])) ** 3)
    return make_presentation(name, [a[i] for i in range(2, n)] + [b_sym, d_sym], rels)


def pair_symbols(n: int, family: str = "kappa") -> List[GenSym]:
    return [_sym(family, i, j)
            for i in range(1, n + 1) for j in range(i + 1, n + 1)]


def _pvl(n):
    gens = pair_symbols(n, "kappa")
    k = {(g.i, g.j): g for g in gens}
    rels = []
    for i, j, l in itertools.combinations(range(1, n + 1), 3):
        u = word(k[i, j], k[i, l], k[j, l])
        v = word(k[j, l], k[i, l], k[i, j])
        rels.append(_rel(u, v))
    return make_presentation(f"PVL{n}", gens, rels)


def _pvt_raag(n):
    gens = pair_symbols(n, "lambda")
    lam = {(g.i, g.j): g for g in gens}
    rels = []
    for (a, b), (c, d) in itertools.combinations(
            sorted(lam), 2):
        if len({a, b, c, d}) == 4:
            rels.append(_comm(lam[a, b], lam[c, d]))
    return make_presentation(f"PVT{n}", gens, rels)


_FAMILY_BUILDERS = {
    "symmetric": _symmetric,
    "braid": _braid_group,
    "twin": _twin,
    "triplet": _triplet,
    "virtual_braid": _virtual_braid,
    "virtual_twin": _virtual_twin,
    "virtual_triplet": _virtual_triplet,
    "virtual_twin_reduced": _virtual_twin_reduced,
    "virtual_triplet_reduced": _virtual_triplet_reduced,
    "vt_commutator": _vt_commutator,
    "vl_commutator": _vl_commutator,
    "pvl": _pvl,
    "pvt_raag": _pvt_raag,
}


# ---------------------------------------------------------------------------
# Tietze elimination


def _occurrences(r: Word, g: GenSym) -> List[int]:
    return [k for k, (sym, _) in enumerate(r.letters) if sym == g]


def _solve(r: Word, g: GenSym) -> Word:
    """Solve relator r (containing g exactly once) for g."""
    pos = _occurrences(r, g)
    assert len(pos) == 1
    k = pos[0]
    rot = r.letters[k:] + r.letters[:k]
    exp = rot[0][1]
    rest = Word(rot[1:])
    return ~rest if exp == 1 else rest


def _substitute(r: Word, g: GenSym, value: Word) -> Word:
    letters = []
    for sym, exp in r.letters:
        if sym == g:
            letters.extend(value.letters if exp == 1 else (~value).letters)
        else:
            letters.append((sym, exp))
    return Word(letters)


def _eliminate_one(p: Presentation, g: GenSym, r: Word) -> Presentation:
    value = _solve(r, g)
    new_rels = [_substitute(other, g, value)
                for other in p.relators if other is not r]
    new_gens = tuple(h for h in p.generators if h != g)
    return make_presentation(p.name, new_gens, new_rels)


def tietze_eliminate(p: Presentation, policy="auto") -> Presentation:
    """Eliminate generators that occur exactly once in some relator.

    Under ``auto``, repeatedly take the smallest eligible relator (by length,
    then canonical order) and eliminate the single-occurrence generator whose
    occurrence sits last in it; this reproduces substitutions of the form
    "last letter equals the rest".  With an explicit list, the named
    generators are eliminated in the given order, each via its smallest
    eligible relator.
    """
    if policy == "auto":
        while True:
            best = None
            for r in sorted(p.relators, key=lambda r: (len(r), r.sort_key())):
                singles = [g for g in r.symbols() if len(_occurrences(r, g)) == 1]
                if singles:
                    g = max(singles, key=lambda g: _occurrences(r, g)[0])
                    best = (g, r)
                    break
            if best is None:
                return p
            p = _eliminate_one(p, *best)
    else:
        for g in policy:
            candidates = [r for r in p.relators if len(_occurrences(r, g)) == 1]
            if not candidates:
                raise ValueError(f"generator {g} is not eliminable")
            r = min(candidates, key=lambda r: (len(r), r.sort_key()))
            p = _eliminate_one(p, g, r)
        return p


def rename_generators(p: Presentation, rename: Dict[GenSym, GenSym],
                      name: Optional[str] = None) -> Presentation:
    gens = tuple(rename.get(g, g) for g in p.generators)
    rels = [Word((rename.get(s, s), e) for s, e in r.letters) for r in p.relators]
    return make_presentation(name or p.name, gens, rels)


def same_relator_set(p: Presentation, q: Presentation,
                     rename: Dict[GenSym, GenSym]) -> bool:
    """True iff the canonical relator multisets agree after renaming p's
    generators by the given bijection onto q's."""
    if set(rename.keys()) != set(p.generators):
        raise ValueError("rename must be defined exactly on p's generators")
    values = list(rename.values())
    if len(set(values)) != len(values) or set(values) != set(q.generators):
        raise ValueError("rename must be a bijection onto q's generators")
    renamed = rename_generators(p, rename)
    return renamed.relator_multiset() == q.relator_multiset()
