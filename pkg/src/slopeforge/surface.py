"""Surfaces, homology classes, and the named curve families.

A closed oriented genus-g surface carries the standard symplectic basis
a_1, b_1, ..., a_g, b_g of its first homology, ordered handle by handle.
Curves are tracked purely through their integer homology class (plus a
separating flag); no geometric curve data is kept.  The catalog families
collect the named curves used by the classical relator constructions:
the twist chain, the hyperelliptic configuration, the Matsumoto
configuration, and the embedded star configuration.

Conventions:

* class vectors have length 2g and are ordered (a_1, b_1, ..., a_g, b_g);
* the symplectic form J is block-diagonal with blocks [[0, 1], [-1, 0]],
  so <a_i, b_i> = +1;
* a curve is separating exactly when its class vector is zero, and a
  nonseparating curve has a primitive class vector;
* class vectors are only meaningful up to a global sign (curves are
  unoriented); every consumer in this package is sign-insensitive.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .errors import CatalogError, GenusMismatchError

Vector = tuple[int, ...]


# ---------------------------------------------------------------------------
# basis bookkeeping
# ---------------------------------------------------------------------------

def basis_symbols(g: int) -> tuple[str, ...]:
    """Ordered homology basis names a_1, b_1, ..., a_g, b_g."""
    out: list[str] = []
    for i in range(1, g + 1):
        out.append(f"a{i}")
        out.append(f"b{i}")
    return tuple(out)


def basis_index(symbol: str, g: int) -> int:
    m = re.fullmatch(r"([ab])(\d+)", symbol)
    if not m:
        raise CatalogError(f"unknown basis symbol {symbol!r}")
    i = int(m.group(2))
    if not 1 <= i <= g:
        raise CatalogError(f"basis symbol {symbol!r} out of range for genus {g}")
    return 2 * (i - 1) + (0 if m.group(1) == "a" else 1)


def class_vector(g: int, coeffs: Mapping[str, int]) -> Vector:
    """Build a length-2g class vector from a {basis symbol: coefficient} map."""
    v = [0] * (2 * g)
    for sym, c in coeffs.items():
        v[basis_index(sym, g)] += c
    return tuple(v)


def class_coeffs(vec: Sequence[int]) -> dict[str, int]:
    """Inverse of :func:`class_vector`; drops zero coefficients."""
    g = len(vec) // 2
    syms = basis_symbols(g)
    return {syms[i]: vec[i] for i in range(2 * g) if vec[i]}


def symplectic_form(g: int) -> tuple[Vector, ...]:
    """The 2g x 2g intersection form J (one [[0,1],[-1,0]] block per handle)."""
    n = 2 * g
    rows = [[0] * n for _ in range(n)]
    for i in range(g):
        rows[2 * i][2 * i + 1] = 1
        rows[2 * i + 1][2 * i] = -1
    return tuple(tuple(r) for r in rows)


def is_primitive(vec: Sequence[int]) -> bool:
    nz = [abs(x) for x in vec if x]
    return bool(nz) and math.gcd(*nz) == 1


@dataclass(frozen=True)
class SurfaceContext:
    """A closed genus-g surface with its homology basis and intersection form."""

    genus: int

    def __post_init__(self) -> None:
        if self.genus < 1:
            raise CatalogError(f"genus must be positive, got {self.genus}")

    @property
    def basis(self) -> tuple[str, ...]:
        return basis_symbols(self.genus)

    @property
    def form(self) -> tuple[Vector, ...]:
        return symplectic_form(self.genus)


# ---------------------------------------------------------------------------
# curves
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Curve:
    """A named simple closed curve, known only through homology.

    ``separating`` should hold exactly when ``hclass`` is zero; the pair is
    stored as given so that :func:`validate_catalog` can report violations
    instead of refusing to construct them.
    """

    name: str
    genus: int
    hclass: Vector
    separating: bool

    def __post_init__(self) -> None:
        object.__setattr__(self, "hclass", tuple(int(x) for x in self.hclass))

    @classmethod
    def from_coeffs(cls, name: str, g: int, coeffs: Mapping[str, int]) -> "Curve":
        vec = class_vector(g, coeffs)
        return cls(name, g, vec, separating=not any(vec))

    @classmethod
    def from_vector(cls, name: str, vec: Sequence[int]) -> "Curve":
        vec = tuple(int(x) for x in vec)
        if len(vec) % 2:
            raise CatalogError(f"class vector for {name!r} has odd length {len(vec)}")
        return cls(name, len(vec) // 2, vec, separating=not any(vec))

    def violations(self) -> list[str]:
        """Constraint violations of this single curve (empty when sound)."""
        out = []
        if len(self.hclass) != 2 * self.genus:
            out.append(f"{self.name}: class vector length {len(self.hclass)} != 2g")
            return out
        zero = not any(self.hclass)
        if self.separating != zero:
            out.append(f"{self.name}: separating flag must mirror a zero class vector")
        if not zero and not is_primitive(self.hclass):
            out.append(f"{self.name}: nonseparating class must be primitive")
        return out


def intersection_number(u: Curve, v: Curve) -> int:
    """Algebraic intersection <[u], [v]> = [u]^T J [v]."""
    if u.genus != v.genus:
        raise GenusMismatchError(
            f"curves {u.name!r} (g={u.genus}) and {v.name!r} (g={v.genus}) "
            "live on different surfaces"
        )
    x, y = u.hclass, v.hclass
    total = 0
    for i in range(u.genus):
        total += x[2 * i] * y[2 * i + 1] - x[2 * i + 1] * y[2 * i]
    return total


def pairing(x: Sequence[int], y: Sequence[int]) -> int:
    """Symplectic pairing of raw class vectors (same convention as curves)."""
    g = len(x) // 2
    total = 0
    for i in range(g):
        total += x[2 * i] * y[2 * i + 1] - x[2 * i + 1] * y[2 * i]
    return total


# ---------------------------------------------------------------------------
# the standard twist chain
# ---------------------------------------------------------------------------

def standard_chain_classes(g: int) -> tuple[Curve, ...]:
    """Curves c_1, ..., c_{2g+1} of the standard chain on genus g.

    Even-index curves run through single handles ([c_{2i}] = a_i) and
    odd-index curves connect consecutive handles ([c_{2i-1}] = b_{i-1} + b_i,
    with b_0 and b_{g+1} read as zero).  Consecutive curves meet once and
    all other pairs are disjoint.
    """
    if g < 1:
        raise CatalogError(f"genus must be positive, got {g}")
    curves = []
    for i in range(1, g + 2):
        coeffs = {}
        if i - 1 >= 1:
            coeffs[f"b{i - 1}"] = 1
        if i <= g:
            coeffs[f"b{i}"] = coeffs.get(f"b{i}", 0) + 1
        curves.append(Curve.from_coeffs(f"c{2 * i - 1}", g, coeffs))
        if i <= g:
            curves.append(Curve.from_coeffs(f"c{2 * i}", g, {f"a{i}": 1}))
    curves.sort(key=lambda c: int(c.name[1:]))
    return tuple(curves)


# ---------------------------------------------------------------------------
# catalog data for the Matsumoto and star configurations
# ---------------------------------------------------------------------------
#
# These class vectors are not free: they are pinned by the anchor suite in
# the test battery (all family relators must act trivially on homology; the
# signature engine must reproduce the known signatures -4/-8 of the Matsumoto
# fibrations and the substitution deltas of the star relator).  The
# generators below were solved for under those constraints; the tests
# re-verify every anchor, so any change here that breaks one fails loudly.
#
# Matsumoto curves live in the sublattice spanned by a_i - a_{k+i} and
# b_i - b_{k+i} (plus the last handle when g is odd); quotienting by it
# leaves exactly the homology that survives in the fibration's total space.
# In those coordinates the classes follow a staircase recursion.

def _staircase(k: int) -> list[tuple[int, ...]]:
    """Reduced Matsumoto class vectors for genus 2k.

    Coordinates are (e_1, f_1, ..., e_k, f_k) in the difference sublattice.
    S_1 = (f1, e1, e1+f1) and
    S_k = (f_k, e_k - f_k) + [v + s(v) e_k for v in S_{k-1}],
    with s(v) the e_{k-1}-coefficient of v, read as -1 when zero.
    The scaled transvections along S_k multiply to -I, which is what makes
    the squared Matsumoto word act trivially on homology.
    """
    vecs: list[tuple[int, ...]] = [(0, 1), (1, 0), (1, 1)]
    for m in range(2, k + 1):
        n = 2 * m
        prev_e = 2 * (m - 1) - 2
        ek = tuple(int(i == n - 2) for i in range(n))
        fk = tuple(int(i == n - 1) for i in range(n))
        out = [fk, tuple(a - b for a, b in zip(ek, fk))]
        for v in vecs:
            s = v[prev_e] if v[prev_e] else -1
            lifted = tuple(v) + (0, 0)
            out.append(tuple(a + s * b for a, b in zip(lifted, ek)))
        vecs = out
    return vecs


def _lift_difference(vec: Sequence[int], k: int, g: int) -> dict[str, int]:
    """Reduced coords -> ambient coefficients a_j - a_{k+j}, b_j - b_{k+j}."""
    coeffs: dict[str, int] = {}
    for j in range(k):
        ea, eb = vec[2 * j], vec[2 * j + 1]
        if ea:
            coeffs[f"a{j + 1}"] = coeffs.get(f"a{j + 1}", 0) + ea
            coeffs[f"a{k + j + 1}"] = coeffs.get(f"a{k + j + 1}", 0) - ea
        if eb:
            coeffs[f"b{j + 1}"] = coeffs.get(f"b{j + 1}", 0) + eb
            coeffs[f"b{k + j + 1}"] = coeffs.get(f"b{k + j + 1}", 0) - eb
    return {s: c for s, c in coeffs.items() if c}


def matsumoto_classes(g: int) -> dict[str, dict[str, int]]:
    """Class data for the Matsumoto configuration on genus g >= 2.

    Even g = 2k: curves b_0..b_g from the lifted staircase plus the
    separating curve c.  Odd g = 2k+1: the staircase is decorated with the
    last handle's b-class (same sign rule), followed by b_g itself; the
    doubled letters are a = a_g and b = a_g + b_g.
    """
    if g < 2:
        raise CatalogError(f"matsumoto configuration needs g >= 2, got {g}")
    if g % 2 == 0:
        k = g // 2
        data = {
            f"b{i}": _lift_difference(v, k, g)
            for i, v in enumerate(_staircase(k))
        }
        data["c"] = {}
        return data
    k = (g - 1) // 2
    e_top = 2 * k - 2
    data = {}
    for i, v in enumerate(_staircase(k)):
        coeffs = _lift_difference(v, k, g)
        s = v[e_top] if v[e_top] else -1
        coeffs[f"b{g}"] = coeffs.get(f"b{g}", 0) + s
        data[f"b{i}"] = {sym: c for sym, c in coeffs.items() if c}
    data[f"b{g}"] = {f"b{g}": 1}
    data["a"] = {f"a{g}": 1}
    data["b"] = {f"a{g}": 1, f"b{g}": 1}
    return data


def star_extra_classes(g: int, h: int) -> dict[str, dict[str, int]]:
    """The non-chain curves of the embedded star configuration at height h.

    The second arm c'_{2h+1} runs parallel to the chain across handles
    h..h+2; d_{h+1} and e_{h+2} are the remaining boundary curves of the
    configuration's neighborhood.  All three are nonseparating.
    """
    if not 1 <= h <= g - 2:
        raise CatalogError(f"star height h={h} outside 1..{g - 2} at genus {g}")
    return {
        f"c'{2 * h + 1}": {f"b{h}": 1, f"b{h + 1}": 2, f"b{h + 2}": 1},
        f"d{h + 1}": {f"b{h + 1}": 2, f"b{h + 2}": 1},
        f"e{h + 2}": {f"b{h + 1}": 1},
    }


# ---------------------------------------------------------------------------
# catalogs
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CurveCatalog:
    """All named curves on one surface, grouped into relator families.

    ``curves`` maps names to curves; ``families`` maps a family key
    ("chain", "hyperelliptic", "matsumoto", "star(h=1)", ...) to the ordered
    curve names it uses.  Catalogs are immutable after construction and safe
    to share between threads.
    """

    genus: int
    curves: Mapping[str, Curve]
    families: Mapping[str, tuple[str, ...]] = field(default_factory=dict)

    def curve(self, name: str) -> Curve:
        try:
            return self.curves[name]
        except KeyError:
            raise CatalogError(
                f"unknown curve {name!r} on genus-{self.genus} surface; "
                f"known: {', '.join(sorted(self.curves))}"
            ) from None

    def has(self, name: str) -> bool:
        return name in self.curves

    def family(self, kind: str, h: int | None = None) -> tuple[Curve, ...]:
        key = kind if h is None else f"{kind}(h={h})"
        if key not in self.families:
            raise CatalogError(
                f"no family {key!r} in this catalog; known: "
                f"{', '.join(sorted(self.families))}"
            )
        return tuple(self.curves[n] for n in self.families[key])

    def with_curves(self, extra: Iterable[Curve]) -> "CurveCatalog":
        """A new catalog with additional named curves (families unchanged)."""
        merged = dict(self.curves)
        for c in extra:
            if c.genus != self.genus:
                raise GenusMismatchError(
                    f"curve {c.name!r} has genus {c.genus}, catalog has {self.genus}"
                )
            existing = merged.get(c.name)
            if existing is not None and existing != c:
                raise CatalogError(f"curve {c.name!r} redeclared with different data")
            merged[c.name] = c
        return CurveCatalog(self.genus, merged, self.families)


def star_parameter_range(g: int) -> range:
    """Admissible star heights on genus g: 1 <= h <= g - 2."""
    return range(1, g - 1)


@lru_cache(maxsize=None)
def default_catalog(g: int) -> CurveCatalog:
    """The built-in catalog for genus g.

    Contains the chain curves c_1..c_{2g+1} (which double as the
    hyperelliptic configuration), the Matsumoto configuration where data is
    shipped, and one embedded star configuration per admissible height with
    shipped data.
    """
    if g < 1:
        raise CatalogError(f"genus must be positive, got {g}")
    curves: dict[str, Curve] = {}
    families: dict[str, tuple[str, ...]] = {}

    chain = standard_chain_classes(g)
    for c in chain:
        curves[c.name] = c
    families["chain"] = tuple(c.name for c in chain)

    star_hs = [h for h in star_parameter_range(g) if h in _STAR_DATA]
    for h in star_hs:
        names = []
        for name, coeffs in _STAR_DATA[h].items():
            cur = Curve.from_coeffs(name, g, coeffs)
            prev = curves.get(name)
            if prev is not None and prev != cur:
                raise CatalogError(f"star(h={h}) redefines curve {name!r}")
            curves[name] = cur
            names.append(name)
        chain_part = [f"c{i}" for i in range(1, 2 * h + 2)]
        families[f"star(h={h})"] = tuple(chain_part + [f"c{2 * h + 3}"] + names)

    hyper = list(families["chain"])
    if "d2" in curves:
        hyper.append("d2")
    families["hyperelliptic"] = tuple(hyper)

    if g in _MATSUMOTO_DATA:
        names = []
        for name, coeffs in _MATSUMOTO_DATA[g].items():
            cur = Curve.from_coeffs(name, g, coeffs)
            if name in curves and curves[name] != cur:
                raise CatalogError(f"matsumoto data redefines curve {name!r}")
            curves[name] = cur
            names.append(name)
        families["matsumoto"] = tuple(names)

    return CurveCatalog(g, curves, families)


# ---------------------------------------------------------------------------
# catalog files
# ---------------------------------------------------------------------------

_CURVE_LINE = re.compile(
    r"curve\s+(?P<name>\S+)\s+g=(?P<g>\d+)\s+class=(?P<cls>-?\d+(?:,-?\d+)*)\s*$"
)


def parse_curve_line(line: str) -> Curve:
    m = _CURVE_LINE.match(line.strip())
    if not m:
        raise CatalogError(f"malformed curve line: {line.strip()!r}")
    g = int(m.group("g"))
    vec = tuple(int(x) for x in m.group("cls").split(","))
    if len(vec) != 2 * g:
        raise CatalogError(
            f"curve {m.group('name')!r}: class has {len(vec)} entries, expected {2 * g}"
        )
    return Curve(m.group("name"), g, vec, separating=not any(vec))


def format_curve_line(c: Curve) -> str:
    return f"curve {c.name} g={c.genus} class={','.join(str(x) for x in c.hclass)}"


def load_catalog(path: str, genus: int | None = None) -> CurveCatalog:
    """Read a catalog file: one ``curve`` line per curve, ``#`` comments."""
    curves: dict[str, Curve] = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                c = parse_curve_line(line)
            except CatalogError as exc:
                raise CatalogError(f"{path}:{lineno}: {exc}") from None
            if genus is not None and c.genus != genus:
                continue
            if c.name in curves and curves[c.name] != c:
                raise CatalogError(f"{path}:{lineno}: curve {c.name!r} redeclared")
            curves[c.name] = c
    if not curves:
        raise CatalogError(f"{path}: no curves" + (f" at genus {genus}" if genus else ""))
    genera = {c.genus for c in curves.values()}
    if len(genera) > 1:
        raise CatalogError(
            f"{path}: mixed genera {sorted(genera)}; pass an explicit genus"
        )
    return CurveCatalog(genera.pop(), curves)


def save_catalog(catalog: CurveCatalog, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"# curve catalog, genus {catalog.genus}\n")
        for c in catalog.curves.values():
            fh.write(format_curve_line(c) + "\n")


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------

@dataclass
class CatalogReport:
    """Outcome of :func:`validate_catalog`: failures grouped per family."""

    failures: dict[str, list[str]]

    @property
    def passed(self) -> bool:
        return not any(self.failures.values())

    def lines(self) -> list[str]:
        out = []
        for key in sorted(self.failures):
            msgs = self.failures[key]
            if msgs:
                out.append(f"{key}: FAIL")
                out.extend(f"  - {m}" for m in msgs)
            else:
                out.append(f"{key}: pass")
        return out


def _chain_pattern_violations(chain: Sequence[Curve]) -> list[str]:
    out = []
    for i, u in enumerate(chain):
        for j in range(i + 1, len(chain)):
            v = chain[j]
            n = intersection_number(u, v)
            if j == i + 1 and n not in (1, -1):
                out.append(f"<[{u.name}],[{v.name}]> = {n}, expected +-1")
            if j > i + 1 and n != 0:
                out.append(f"<[{u.name}],[{v.name}]> = {n}, expected 0")
    return out


def validate_catalog(catalog: CurveCatalog) -> CatalogReport:
    """Check curve-level invariants and the homological triviality of every
    relator family present in the catalog."""
    from . import words  # deferred: words depends on this module
    from .symplectic import evaluate

    failures: dict[str, list[str]] = {"curves": []}
    for c in catalog.curves.values():
        failures["curves"].extend(c.violations())

    def relator_check(key: str, kind: str, h: int | None = None) -> None:
        failures.setdefault(key, [])
        try:
            rel = words.build_relator(kind, catalog.genus, h=h, catalog=catalog)
        except Exception as exc:  # report, do not raise
            failures[key].append(f"relator construction failed: {exc}")
            return
        if not evaluate(rel.word).is_identity:
            failures[key].append("relator word is not homologically trivial")

    if "chain" in catalog.families:
        failures["chain"] = _chain_pattern_violations(catalog.family("chain"))
        relator_check("chain", "chain_odd")
        if catalog.genus >= 1:
            relator_check("chain", "chain_even")
    if "hyperelliptic" in catalog.families:
        relator_check("hyperelliptic", "hyperelliptic")
    if "matsumoto" in catalog.families:
        relator_check("matsumoto", "matsumoto")
    for key in catalog.families:
        m = re.fullmatch(r"star\(h=(\d+)\)", key)
        if m:
            relator_check(key, "star", int(m.group(1)))
    return CatalogReport(failures)
