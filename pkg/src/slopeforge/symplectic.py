"""Integer symplectic matrices and the homology action of Dehn twists.

A right-handed twist about a curve with class v acts on homology by the
transvection x |-> x + <x, v> v, where <x, v> = x^T J v.  Words of twists
evaluate to products of transvection matrices; the product is taken with
the rightmost letter acting first, matching the printed order of a word.

All arithmetic is exact (arbitrary-precision integers); every produced
matrix satisfies M^T J M = J on the nose.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence, TYPE_CHECKING

from .errors import GenusMismatchError, SlopeforgeError
from .surface import Curve, is_primitive, pairing, symplectic_form

if TYPE_CHECKING:  # pragma: no cover
    from .words import TwistWord

Matrix = tuple[tuple[int, ...], ...]


def _identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def _mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def _mat_vec(a: Matrix, v: Sequence[int]) -> tuple[int, ...]:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def _transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


@dataclass(frozen=True)
class SymplecticMatrix:
    """An element of Sp(2g, Z), stored as a tuple-of-tuples of ints."""

    g: int
    entries: Matrix

    def __post_init__(self) -> None:
        n = 2 * self.g
        if len(self.entries) != n or any(len(r) != n for r in self.entries):
            raise SlopeforgeError(f"matrix is not {n}x{n}")

    @classmethod
    def identity(cls, g: int) -> "SymplecticMatrix":
        return cls(g, _identity(2 * g))

    @property
    def is_identity(self) -> bool:
        return self.entries == _identity(2 * self.g)

    def __mul__(self, other: "SymplecticMatrix") -> "SymplecticMatrix":
        if self.g != other.g:
            raise GenusMismatchError("matrix product across different genera")
        return SymplecticMatrix(self.g, _mat_mul(self.entries, other.entries))

    def apply(self, v: Sequence[int]) -> tuple[int, ...]:
        return _mat_vec(self.entries, v)

    def inverse(self) -> "SymplecticMatrix":
        # For M in Sp(2g,Z): M^{-1} = J^{-1} M^T J = -J M^T J.
        j = symplectic_form(self.g)
        mt = _transpose(self.entries)
        inv = _mat_mul(_mat_mul(j, mt), j)
        inv = tuple(tuple(-x for x in row) for row in inv)
        return SymplecticMatrix(self.g, inv)

    def power(self, k: int) -> "SymplecticMatrix":
        base = self if k >= 0 else self.inverse()
        out = SymplecticMatrix.identity(self.g)
        for _ in range(abs(k)):
            out = out * base
        return out

    def preserves_form(self) -> bool:
        j = symplectic_form(self.g)
        return _mat_mul(_mat_mul(_transpose(self.entries), j), self.entries) == j

    def rows(self) -> list[str]:
        """Row-major integer grid, for debugging output."""
        w = max(len(str(x)) for row in self.entries for x in row)
        return [" ".join(f"{x:>{w}}" for x in row) for row in self.entries]


def transvection(c: Curve, exponent: int = 1) -> SymplecticMatrix:
    """Homology action of the (signed) Dehn twist about ``c``.

    Positive twist: x |-> x + <x, v> v with v = [c]; the separating case
    (v = 0) acts trivially.  The result is symplectic by construction.
    """
    if exponent not in (1, -1):
        raise SlopeforgeError(f"twist exponent must be +-1, got {exponent}")
    g = c.genus
    n = 2 * g
    v = c.hclass
    j = symplectic_form(g)
    jv = _mat_vec(j, v)
    rows = []
    for i in range(n):
        row = list(_identity(n)[i])
        for k in range(n):
            row[k] += exponent * v[i] * jv[k]
        rows.append(tuple(row))
    return SymplecticMatrix(g, tuple(rows))


def evaluate(word: "TwistWord") -> SymplecticMatrix:
    """Product of the per-letter transvections, rightmost letter first."""
    out = SymplecticMatrix.identity(word.genus)
    for letter in word.letters:
        out = out * transvection(letter.curve, letter.exponent)
    return out


def is_homologically_trivial(word: "TwistWord") -> bool:
    return evaluate(word).is_identity


# ---------------------------------------------------------------------------
# transporters: short twist words moving one primitive class onto another
# ---------------------------------------------------------------------------

def _aux_curve(g: int, vec: Sequence[int], tag: int) -> Curve:
    return Curve(f"aux{tag}", g, tuple(vec), separating=not any(vec))


def solve_linear_over_integers(
    a: Sequence[Sequence[int]], rhs: Sequence[int]
) -> tuple[int, ...] | None:
    """One integer solution u of A u = rhs, or None when none exists.

    Column-reduction with a tracked unimodular transform; intended for the
    very wide, very short systems used here (m <= 2 rows).
    """
    m = len(a)
    n = len(a[0])
    rows = [list(r) for r in a]
    basis = [[int(i == k) for k in range(n)] for i in range(n)]  # columns of U

    def col_sub(dst: int, src: int, q: int) -> None:
        for t in range(m):
            rows[t][dst] -= q * rows[t][src]
        for t in range(n):
            basis[t][dst] -= q * basis[t][src]

    def col_swap(i: int, k: int) -> None:
        for t in range(m):
            rows[t][i], rows[t][k] = rows[t][k], rows[t][i]
        for t in range(n):
            basis[t][i], basis[t][k] = basis[t][k], basis[t][i]

    pivots: list[tuple[int, int]] = []  # (row, column)
    next_col = 0
    for r in range(m):
        while any(rows[r][k] for k in range(next_col + 1, n)):
            nzs = [k for k in range(next_col, n) if rows[r][k]]
            k0 = min(nzs, key=lambda k: abs(rows[r][k]))
            if k0 != next_col:
                col_swap(next_col, k0)
            for k in range(next_col + 1, n):
                if rows[r][k]:
                    col_sub(k, next_col, rows[r][k] // rows[r][next_col])
        if next_col < n and rows[r][next_col]:
            pivots.append((r, next_col))
            next_col += 1
    # Transformed system is lower triangular on the pivot columns.
    y = [0] * n
    for r in range(m):
        acc = sum(rows[r][k] * y[k] for k in range(n))
        resid = rhs[r] - acc
        pivot = next((c for (pr, c) in pivots if pr == r), None)
        if pivot is None:
            if resid:
                return None
            continue
        if resid % rows[r][pivot]:
            return None
        y[pivot] = resid // rows[r][pivot]
    return tuple(
        sum(basis[i][k] * y[k] for k in range(n)) for i in range(n)
    )


def _solve_two_pairings(v: Sequence[int], w: Sequence[int], g: int):
    """An integer u with <v, u> = 1 and <u, w> = 1, or None.

    The two conditions are linear in u; solvability can fail mod p when
    w is proportional to v modulo p with ratio != -1.
    """
    j = symplectic_form(g)
    r1 = _mat_vec(_transpose(j), v)  # r1 . u = v^T J u = <v, u>
    r2 = _mat_vec(j, w)              # r2 . u = u^T J w = <u, w>
    u = solve_linear_over_integers([r1, r2], [1, 1])
    if u is None:
        return None
    if pairing(v, u) != 1 or pairing(u, w) != 1:  # defensive
        return None
    return u


def _hop_word(g: int, route: Sequence[Sequence[int]], tag_start: int = 0):
    """Letters realizing v0 -> +-v_last along a route of +-1-pairing hops.

    For each consecutive pair (x, y) the two-letter pattern (T_x, T_y)
    maps x to +-y; hops compose by concatenating later hops on the left.
    """
    from .words import TwistLetter

    letters: list[TwistLetter] = []
    tag = tag_start
    for x, y in zip(route, route[1:]):
        hop = [
            TwistLetter(_aux_curve(g, x, tag), 1),
            TwistLetter(_aux_curve(g, y, tag + 1), 1),
        ]
        tag += 2
        letters = hop + letters
    return letters


def symplectic_transporter(v: Sequence[int], w: Sequence[int], g: int) -> "TwistWord":
    """A short positive twist word phi with evaluate(phi) . v = +-w.

    Both classes must be primitive.  When <v, w> = +-1 two letters suffice;
    otherwise the route goes through an auxiliary class u with
    <v, u> = <u, w> = 1 (four letters).  For the rare pairs where no such u
    exists over the integers, a second auxiliary hop is inserted (six
    letters).  Consumers never rely on the sign of the image.
    """
    from .words import TwistWord

    v = tuple(int(x) for x in v)
    w = tuple(int(x) for x in w)
    if len(v) != 2 * g or len(w) != 2 * g:
        raise GenusMismatchError("class vectors do not match the genus")
    if not (is_primitive(v) and is_primitive(w)):
        raise SlopeforgeError("transporter requires primitive classes")
    if v == w or v == tuple(-x for x in w):
        return TwistWord(g, ())
    if pairing(v, w) in (1, -1):
        return TwistWord(g, tuple(_hop_word(g, [v, w])))
    u = _solve_two_pairings(v, w, g)
    if u is not None:
        return TwistWord(g, tuple(_hop_word(g, [v, u, w])))
    # Two-hop fallback: v -> b -> u -> w with b = b0 + k v for small k.
    b0 = _first_unit_partner(v, g)
    for k in range(0, 64):
        b = tuple(x + k * y for x, y in zip(b0, v))
        u = _solve_two_pairings(b, w, g)
        if u is not None:
            return TwistWord(g, tuple(_hop_word(g, [v, b, u, w])))
    raise SlopeforgeError("transporter fallback exhausted")  # pragma: no cover


def _first_unit_partner(v: Sequence[int], g: int) -> tuple[int, ...]:
    """Some primitive b with <v, b> = 1 (exists for every primitive v)."""
    n = 2 * g
    j = symplectic_form(g)
    r1 = _mat_vec(_transpose(j), v)  # r1 . u = <v, u>
    # Extended gcd across the entries of r1.
    idx = [i for i in range(n) if r1[i]]
    acc_g = 0
    coeffs: dict[int, int] = {}
    for i in idx:
        if acc_g == 0:
            acc_g, coeffs = abs(r1[i]), {i: 1 if r1[i] > 0 else -1}
            continue
        gg = math.gcd(acc_g, r1[i])
        # find s, t with s*acc_g + t*r1[i] = gg
        s, t = _bezout(acc_g, r1[i])
        coeffs = {k: s * c for k, c in coeffs.items()}
        coeffs[i] = coeffs.get(i, 0) + t
        acc_g = gg
    if acc_g != 1:
        raise SlopeforgeError("class is not primitive")  # pragma: no cover
    out = [0] * n
    for i, c in coeffs.items():
        out[i] = c
    return tuple(out)


def _bezout(a: int, b: int) -> tuple[int, int]:
    """s, t with s*a + t*b = gcd(a, b)."""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_s, old_t = -old_s, -old_t
    return old_s, old_t
