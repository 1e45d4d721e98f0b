"""Signed Dehn-twist words: parsing, moves, sums, and relator substitution.

A word is an ordered tuple of letters, each a curve with exponent +-1;
powers in the text form expand into repeated letters.  The printed order
is the functional order of composition: in ``c1 c2`` the twist about c2
acts first.  All operations return new words; words are immutable.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from . import symplectic
from .errors import (
    GenusMismatchError,
    ParameterError,
    SubstitutionError,
    TrivialityError,
    WordParseError,
)
from .surface import Curve, CurveCatalog, default_catalog, star_parameter_range


@dataclass(frozen=True)
class TwistLetter:
    """A single signed Dehn twist."""

    curve: Curve
    exponent: int = 1

    def __post_init__(self) -> None:
        if self.exponent not in (1, -1):
            raise WordParseError(f"letter exponent must be +-1, got {self.exponent}")

    def inverse(self) -> "TwistLetter":
        return TwistLetter(self.curve, -self.exponent)


@dataclass(frozen=True)
class TwistWord:
    """An ordered sequence of twist letters on one surface."""

    genus: int
    letters: tuple[TwistLetter, ...]

    def __post_init__(self) -> None:
        for letter in self.letters:
            if letter.curve.genus != self.genus:
                raise GenusMismatchError(
                    f"letter {letter.curve.name!r} has genus {letter.curve.genus}, "
                    f"word has genus {self.genus}"
                )

    def __len__(self) -> int:
        return len(self.letters)

    def __add__(self, other: "TwistWord") -> "TwistWord":
        if self.genus != other.genus:
            raise GenusMismatchError("concatenation across different genera")
        return TwistWord(self.genus, self.letters + other.letters)

    @property
    def positive_count(self) -> int:
        return sum(1 for l in self.letters if l.exponent == 1)

    @property
    def negative_count(self) -> int:
        return sum(1 for l in self.letters if l.exponent == -1)

    @property
    def all_positive(self) -> bool:
        return self.negative_count == 0

    def inverse(self) -> "TwistWord":
        return TwistWord(self.genus, tuple(l.inverse() for l in reversed(self.letters)))

    def repeat(self, k: int) -> "TwistWord":
        if k < 0:
            raise ParameterError("repeat count must be nonnegative")
        return TwistWord(self.genus, self.letters * k)


@dataclass(frozen=True)
class Relator:
    """A trusted identity between two positive twist words.

    ``word`` stores the full trivial word: the left side X_1..X_m followed
    by the inverted, reversed right side Y_n^-1..Y_1^-1.  ``left_len`` = m
    marks the split.  Substitution removes a match of the left side and
    inserts the right side.
    """

    word: TwistWord
    left_len: int
    provenance: str = "custom"

    def __post_init__(self) -> None:
        if not 0 <= self.left_len <= len(self.word):
            raise ParameterError(
                f"left_len {self.left_len} outside word of length {len(self.word)}"
            )
        if not symplectic.evaluate(self.word).is_identity:
            raise TrivialityError(
                f"relator {self.provenance!r} is not homologically trivial"
            )

    def left_side(self) -> TwistWord:
        return TwistWord(self.word.genus, self.word.letters[: self.left_len])

    def right_side(self) -> TwistWord:
        tail = TwistWord(self.word.genus, self.word.letters[self.left_len :])
        return tail.inverse()

    def swapped(self) -> "Relator":
        """The same identity read right-to-left (for undoing substitutions)."""
        right = self.right_side()
        word = right + self.left_side().inverse()
        return Relator(word, len(right), provenance=f"{self.provenance}(swapped)")


# ---------------------------------------------------------------------------
# text form
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"(?P<name>[^\s^]+)(?:\^(?P<exp>[+-]?\d+))?$")


def parse_word(
    text: str, catalog: CurveCatalog, genus: int | None = None
) -> TwistWord:
    """Parse whitespace-separated tokens ``name``, ``name^k``, ``name^-k``.

    Tokens resolve against the catalog; powers expand into |k| letters.
    ``#`` starts a comment running to the end of the line.
    """
    g = catalog.genus if genus is None else genus
    if genus is not None and genus != catalog.genus:
        raise GenusMismatchError(
            f"requested genus {genus}, catalog has {catalog.genus}"
        )
    letters: list[TwistLetter] = []
    for raw_line in text.splitlines():
        line = raw_line.split("#", 1)[0]
        for token in line.split():
            m = _TOKEN.match(token)
            if not m:
                raise WordParseError(f"malformed token {token!r}")
            name = m.group("name")
            exp = 1 if m.group("exp") is None else int(m.group("exp"))
            if exp == 0:
                raise WordParseError(f"zero exponent in token {token!r}")
            if not catalog.has(name):
                raise WordParseError(
                    f"unknown curve {name!r} (genus {g}); not in catalog"
                )
            curve = catalog.curve(name)
            sign = 1 if exp > 0 else -1
            letters.extend(TwistLetter(curve, sign) for _ in range(abs(exp)))
    return TwistWord(g, tuple(letters))


def serialize_word(word: TwistWord) -> str:
    """Inverse of :func:`parse_word`; collapses equal adjacent letters."""
    parts: list[str] = []
    i = 0
    letters = word.letters
    while i < len(letters):
        j = i
        while j < len(letters) and letters[j] == letters[i]:
            j += 1
        run = j - i
        exp = letters[i].exponent * run
        name = letters[i].curve.name
        parts.append(name if exp == 1 else f"{name}^{exp}")
        i = j
    return " ".join(parts)


# ---------------------------------------------------------------------------
# moves
# ---------------------------------------------------------------------------

def _conjugate_letter(
    letter: TwistLetter, by: symplectic.SymplecticMatrix
) -> TwistLetter:
    """Transport a letter's curve through a homology map."""
    cur = letter.curve
    vec = by.apply(cur.hclass)
    base = cur.name.split("@", 1)[0]
    depth = cur.name.count("@") + 1
    new = Curve(f"{base}@{depth}", cur.genus, tuple(vec), cur.separating)
    return TwistLetter(new, letter.exponent)


def hurwitz_move(word: TwistWord, i: int) -> TwistWord:
    """Swap letters i, i+1 (1-based): A_i A_{i+1} -> (A_{i+1})^{A_i} A_i.

    The letter moving left is conjugated by the letter it passes; the total
    homology image is unchanged.
    """
    n = len(word)
    if not 1 <= i < n:
        raise ParameterError(f"hurwitz index {i} outside 1..{n - 1}")
    a = word.letters[i - 1]
    b = word.letters[i]
    m = symplectic.transvection(a.curve, a.exponent)
    new = list(word.letters)
    new[i - 1] = _conjugate_letter(b, m)
    new[i] = a
    return TwistWord(word.genus, tuple(new))


def hurwitz_move_inverse(word: TwistWord, i: int) -> TwistWord:
    """Undo :func:`hurwitz_move` at i: A_i A_{i+1} -> A_{i+1} (A_i)^{A_{i+1}^-1}.

    The letter moving right is conjugated; the letter moving left is not.
    """
    n = len(word)
    if not 1 <= i < n:
        raise ParameterError(f"hurwitz index {i} outside 1..{n - 1}")
    a = word.letters[i - 1]
    b = word.letters[i]
    m = symplectic.transvection(b.curve, -b.exponent)
    new = list(word.letters)
    new[i - 1] = b
    new[i] = _conjugate_letter(a, m)
    return TwistWord(word.genus, tuple(new))


def global_conjugate(word: TwistWord, phi: TwistWord) -> TwistWord:
    """Conjugate the whole factorization by phi (classes move by M(phi))."""
    if word.genus != phi.genus:
        raise GenusMismatchError("conjugation across different genera")
    if not phi.letters:
        return word
    m = symplectic.evaluate(phi)
    return TwistWord(
        word.genus, tuple(_conjugate_letter(l, m) for l in word.letters)
    )


def fiber_sum(w1: TwistWord, w2: TwistWord, phi: TwistWord | None = None) -> TwistWord:
    """Concatenate w1 with w2 conjugated by the gluing word phi.

    Both summands must be positive factorizations of the identity.
    """
    if phi is None:
        phi = TwistWord(w1.genus, ())
    if w1.genus != w2.genus or w1.genus != phi.genus:
        raise GenusMismatchError("fiber sum across different genera")
    for w, tag in ((w1, "first"), (w2, "second")):
        if not w.all_positive:
            raise TrivialityError(f"fiber sum rejects a non-positive {tag} word")
        if not symplectic.evaluate(w).is_identity:
            raise TrivialityError(f"fiber sum rejects a non-trivial {tag} word")
    return w1 + global_conjugate(w2, phi)


def _classes_match(a: Curve, b: Curve) -> bool:
    if a.separating != b.separating:
        return False
    return a.hclass == b.hclass or a.hclass == tuple(-x for x in b.hclass)


def substitute(word: TwistWord, at: int, relator: Relator) -> TwistWord:
    """Replace the left side of ``relator`` by its right side at ``at`` (0-based).

    Letters match when exponents agree exactly and curve classes agree up to
    a global sign per letter.  The new word equals the old one in homology.
    """
    if word.genus != relator.word.genus:
        raise GenusMismatchError("substitution across different genera")
    left = relator.left_side().letters
    m = len(left)
    if at < 0 or at + m > len(word):
        raise SubstitutionError(
            f"no room for a length-{m} match at position {at} in a word of "
            f"length {len(word)}"
        )
    for k in range(m):
        have = word.letters[at + k]
        want = left[k]
        if have.exponent != want.exponent or not _classes_match(have.curve, want.curve):
            raise SubstitutionError(
                f"letter {at + k} ({have.curve.name}^{have.exponent}) does not "
                f"match relator letter {k} ({want.curve.name}^{want.exponent})"
            )
    right = relator.right_side().letters
    return TwistWord(
        word.genus, word.letters[:at] + right + word.letters[at + m :]
    )


# ---------------------------------------------------------------------------
# the relator families
# ---------------------------------------------------------------------------

def _letters(curves: Iterable[Curve], exponent: int = 1) -> list[TwistLetter]:
    return [TwistLetter(c, exponent) for c in curves]


def _word(g: int, letters: Sequence[TwistLetter]) -> TwistWord:
    return TwistWord(g, tuple(letters))


def build_relator(
    kind: str, g: int, h: int | None = None, catalog: CurveCatalog | None = None
) -> Relator:
    """Construct a named relator family member on genus g.

    Kinds: ``chain_odd``  (C_1...C_{2g+1})^{2g+2} = 1,
           ``chain_even`` (C_1...C_{2g})^{4g+2} = 1,
           ``hyperelliptic`` (C_1...C_{2g} C_{2g+1}^2 C_{2g}...C_1)^2 = 1,
           ``matsumoto`` (B_0...B_g C)^2 = 1 for even g and
                         (B_0...B_g A^2 B^2)^2 = 1 for odd g,
           ``star``      (C'_{2h+1} C_{2h+1}...C_1)^{2h+1} = D_{h+1} C_{2h+3}^h E_{h+2}
                         (needs 1 <= h <= g-2).
    The chain relators are taken on the closed surface, so both sides beyond
    the power are empty.
    """
    cat = default_catalog(g) if catalog is None else catalog
    if cat.genus != g:
        raise GenusMismatchError(f"catalog has genus {cat.genus}, requested {g}")

    if kind == "chain_odd":
        chain = cat.family("chain")
        period = _letters(chain)
        word = _word(g, period * (2 * g + 2))
        return Relator(word, len(word), provenance="chain_odd")

    if kind == "chain_even":
        chain = cat.family("chain")[: 2 * g]
        period = _letters(chain)
        word = _word(g, period * (4 * g + 2))
        return Relator(word, len(word), provenance="chain_even")

    if kind == "hyperelliptic":
        chain = cat.family("chain")
        up = _letters(chain[: 2 * g])
        top = _letters([chain[2 * g]]) * 2
        down = _letters(chain[: 2 * g][::-1])
        word = _word(g, (up + top + down) * 2)
        return Relator(word, len(word), provenance="hyperelliptic")

    if kind == "matsumoto":
        if g < 2:
            raise ParameterError(f"matsumoto family needs g >= 2, got {g}")
        fam = {c.name: c for c in cat.family("matsumoto")}
        bs = [fam[f"b{i}"] for i in range(g + 1)]
        if g % 2 == 0:
            period = _letters(bs) + _letters([fam["c"]])
        else:
            period = _letters(bs) + _letters([fam["a"]]) * 2 + _letters([fam["b"]]) * 2
        word = _word(g, period * 2)
        return Relator(word, len(word), provenance="matsumoto")

    if kind == "star":
        if h is None:
            raise ParameterError("star relator needs a height h")
        if h not in star_parameter_range(g):
            raise ParameterError(
                f"star height h={h} outside 1..{g - 2} at genus {g}"
            )
        fam = {c.name: c for c in cat.family("star", h)}
        arm = fam[f"c'{2 * h + 1}"]
        chain_desc = [fam[f"c{i}"] for i in range(2 * h + 1, 0, -1)]
        period = _letters([arm]) + _letters(chain_desc)
        left = period * (2 * h + 1)
        right_inv = (
            _letters([fam[f"e{h + 2}"]], -1)
            + _letters([fam[f"c{2 * h + 3}"]], -1) * h
            + _letters([fam[f"d{h + 1}"]], -1)
        )
        word = _word(g, left + right_inv)
        return Relator(word, len(left), provenance="star")

    raise ParameterError(f"unknown relator kind {kind!r}")
