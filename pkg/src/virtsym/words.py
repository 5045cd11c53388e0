"""Free-group words over a typed generator alphabet.

Words are immutable, freely reduced sequences of signed generator symbols.
Torsion relations (involutions etc.) are never folded into plain reduction;
callers that want them use :func:`involution_normalize` explicitly.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence, Tuple

# Fixed family order; it determines the total order on symbols and hence
# every canonical form in the package.
FAMILIES = (
    "sigma", "s", "y", "rho", "tau", "kappa", "lambda",
    "x", "z", "w", "alpha", "beta", "delta",
)
_FAMILY_RANK = {f: k for k, f in enumerate(FAMILIES)}
_CUSTOM_RANK = len(FAMILIES)

# Families that always carry exactly one index.
_ONE_INDEX = {"sigma", "s", "y", "rho", "tau", "x", "alpha"}
# Families that carry exactly two (distinct) indices.
_TWO_INDEX = {"kappa", "lambda"}
# Families that carry zero or one index.
_OPT_INDEX = {"z", "w", "beta", "delta"}

_FAMILY_TEXT = {
    "sigma": "sigma", "s": "s", "y": "y", "rho": "rho", "tau": "tau",
    "kappa": "k", "lambda": "l", "x": "x", "z": "z", "w": "w",
    "alpha": "alpha", "beta": "beta", "delta": "delta",
}
_TEXT_FAMILY = sorted(((t, f) for f, t in _FAMILY_TEXT.items()),
                      key=lambda p: -len(p[0]))


@dataclass(frozen=True)
class GenSym:
    """A generator symbol: family tag plus up to two integer indices."""

    family: str
    i: Optional[int] = None
    j: Optional[int] = None

    def __post_init__(self):
        fam = self.family
        if fam in _ONE_INDEX:
            if self.i is None or self.j is not None:
                raise ValueError(f"{fam} symbols take exactly one index")
        elif fam in _TWO_INDEX:
            if self.i is None or self.j is None:
                raise ValueError(f"{fam} symbols take two indices")
            if self.i == self.j:
                raise ValueError(f"{fam} indices must be distinct")
        elif fam in _OPT_INDEX:
            if self.j is not None:
                raise ValueError(f"{fam} symbols take at most one index")
        elif not fam.isidentifier():
            raise ValueError(f"invalid generator family: {fam!r}")

    @property
    def sort_key(self):
        rank = _FAMILY_RANK.get(self.family, _CUSTOM_RANK)
        return (rank, self.family,
                -1 if self.i is None else self.i,
                -1 if self.j is None else self.j)

    def __str__(self) -> str:
        text = _FAMILY_TEXT.get(self.family, self.family)
        if self.i is not None:
            text += str(self.i)
        if self.j is not None:
            text += f"_{self.j}"
        return text

    def __repr__(self) -> str:
        return f"GenSym({self})"


_SYM_RE = re.compile(r"^([A-Za-z]+)(\d+)?(?:_(\d+))?$")


def parse_symbol(text: str) -> GenSym:
    """Parse a symbol like ``rho1``, ``k1_3``, ``w`` or a custom ``g0_2``."""
    for prefix, family in _TEXT_FAMILY:
        if text.startswith(prefix):
            rest = text[len(prefix):]
            m = re.fullmatch(r"(\d+)?(?:_(\d+))?", rest)
            if m is None:
                continue
            i = int(m.group(1)) if m.group(1) else None
            j = int(m.group(2)) if m.group(2) else None
            try:
                return GenSym(family, i, j)
            except ValueError:
                continue
    m = _SYM_RE.match(text)
    if m is None:
        raise ValueError(f"cannot parse generator symbol: {text!r}")
    i = int(m.group(2)) if m.group(2) else None
    j = int(m.group(3)) if m.group(3) else None
    return GenSym(m.group(1), i, j)


Letter = Tuple[GenSym, int]


def _reduce(letters: Iterable[Letter]) -> Tuple[Letter, ...]:
    stack: list[Letter] = []
    for sym, exp in letters:
        if exp not in (1, -1):
            raise ValueError("letter exponents must be +1 or -1")
        if stack and stack[-1][0] == sym and stack[-1][1] == -exp:
            stack.pop()
        else:
            stack.append((sym, exp))
    return tuple(stack)


class Word:
    """A freely reduced word. The empty word is the identity."""

    __slots__ = ("letters",)

    def __init__(self, letters: Iterable[Letter] = ()):
        object.__setattr__(self, "letters", _reduce(letters))

    def __setattr__(self, name, value):
        raise AttributeError("Word is immutable")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __eq__(self, other) -> bool:
        return isinstance(other, Word) and self.letters == other.letters

    def __hash__(self) -> int:
        return hash(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def __invert__(self) -> "Word":
        return Word((sym, -exp) for sym, exp in reversed(self.letters))

    def __pow__(self, n: int) -> "Word":
        if n < 0:
            return (~self) ** (-n)
        out = EMPTY
        for _ in range(n):
            out = out * self
        return out

    def symbols(self) -> set:
        return {sym for sym, _ in self.letters}

    def sort_key(self):
        return tuple((s.sort_key, 0 if e > 0 else 1) for s, e in self.letters)

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        return " ".join(f"{s}" if e > 0 else f"{s}^-1" for s, e in self.letters)

    def __repr__(self) -> str:
        return f"Word({self})"


EMPTY = Word()


def word(*items) -> Word:
    """Build a word from symbols and (symbol, exponent) pairs."""
    letters = []
    for it in items:
        if isinstance(it, GenSym):
            letters.append((it, 1))
        else:
            letters.append(it)
    return Word(letters)


def free_reduce(letters: Sequence[Letter]) -> Word:
    return Word(letters)


def concat(u: Word, v: Word) -> Word:
    return u * v


def invert(w: Word) -> Word:
    return ~w


def conjugate(w: Word, g: Word) -> Word:
    """g w g^-1."""
    return g * w * ~g


def commutator(a: Word, b: Word) -> Word:
    """a b a^-1 b^-1."""
    return a * b * ~a * ~b


def parse_word(text: str) -> Word:
    """Parse the textual word syntax, e.g. ``"rho1 s1 rho1^-1"``.

    ``1`` or the empty string denote the identity.  An integer exponent
    after ``^`` is expanded into repeated letters.
    """
    text = text.strip()
    if text in ("", "1"):
        return EMPTY
    letters: list[Letter] = []
    for token in text.split():
        if "^" in token:
            name, _, exp_text = token.partition("^")
            try:
                exp = int(exp_text)
            except ValueError:
                raise ValueError(f"bad exponent in token {token!r}")
        else:
            name, exp = token, 1
        sym = parse_symbol(name)
        sign = 1 if exp > 0 else -1
        letters.extend((sym, sign) for _ in range(abs(exp)))
    return Word(letters)


def _cyclic_reduce(letters: Tuple[Letter, ...]) -> Tuple[Letter, ...]:
    while len(letters) >= 2 and letters[0][0] == letters[-1][0] \
            and letters[0][1] == -letters[-1][1]:
        letters = letters[1:-1]
    return letters


def relator_canonical(w: Word) -> Word:
    """Canonical form of a relator.

    Cyclically reduces, then returns the lexicographically least word among
    all rotations of the result and of its inverse.  Two relators in the same
    canonical class define the same cyclic word up to rotation and inversion;
    relators equal only up to conjugation by other words are not detected.
    """
    letters = _cyclic_reduce(w.letters)
    if not letters:
        return EMPTY
    inv = tuple((s, -e) for s, e in reversed(letters))
    best = None
    best_key = None
    n = len(letters)
    for base in (letters, inv):
        for r in range(n):
            cand = base[r:] + base[:r]
            key = tuple((s.sort_key, 0 if e > 0 else 1) for s, e in cand)
            if best_key is None or key < best_key:
                best_key = key
                best = cand
    return Word(best)


def involution_normalize(w: Word, involutions: set) -> Word:
    """Normal form in the quotient where each symbol in `involutions`
    squares to the identity (free product of Z_2 factors times a free group).

    Inverse exponents on involutive symbols become positive, and adjacent
    equal involutive letters cancel.  Confluent, so the result is canonical.
    """
    stack: list[Letter] = []
    for sym, exp in w.letters:
        if sym in involutions:
            exp = 1
        if stack:
            top_sym, top_exp = stack[-1]
            if top_sym == sym and (top_exp == -exp or
                                   (sym in involutions and top_exp == exp)):
                stack.pop()
                continue
        stack.append((sym, exp))
    return Word(stack)
