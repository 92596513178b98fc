"""Character-graded lattice point counts of dilated polytopes.

A Character is a finite-order homomorphism Z^n -> Q/Z given by
v -> (coeffs . v)/modulus mod 1.  Interior points of the k-th dilate of
a polytope are bucketed by character value; once the character kills
every vertex, the generating series of each bucket is a polynomial of
degree at most dim+1 over (1-t)^(dim+1), and those coefficient vectors
(called phi here) drive the whole Hodge recursion downstream.

Convention: the 0-th dilate counts as empty in every bucket, even for a
point polytope.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import comb, gcd

from . import intlinalg as ila
from .errors import InternalConsistencyError

try:
    import numpy as _np
except ImportError:  # pragma: no cover - numpy is a hard dependency
    _np = None

_ZERO = Fraction(0)


@dataclass(frozen=True)
class Character:
    """Finite-order character of Z^n, v -> exp(2*pi*i*(coeffs.v)/modulus).

    Instances normalize themselves: coefficients are reduced mod the
    modulus and the common gcd with the modulus is divided out, so equal
    characters compare and hash equal.
    """

    modulus: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        d = int(self.modulus)
        if d < 1:
            raise ValueError("character modulus must be positive")
        cs = tuple(int(c) % d for c in self.coeffs)
        g = reduce(gcd, cs, d)
        if g > 1:
            d //= g
            cs = tuple(c // g for c in cs)
        object.__setattr__(self, "modulus", d)
        object.__setattr__(self, "coeffs", cs)

    @staticmethod
    def trivial(n: int) -> "Character":
        return Character(1, (0,) * n)

    @property
    def is_trivial(self) -> bool:
        return self.modulus == 1

    def value(self, v) -> Fraction:
        """Character value of an ambient lattice point, in [0, 1)."""
        return Fraction(ila.dot(self.coeffs, v) % self.modulus, self.modulus)


def conj(alpha: Fraction) -> Fraction:
    """The bucket of the inverse character value: 1 - alpha mod 1."""
    return _ZERO if alpha == 0 else 1 - alpha


_COUNTS: dict = {}
_PALPHA: dict = {}


def relint_counts(poly, char: Character, k: int) -> dict[Fraction, int]:
    """Bucketed count of interior lattice points of the k-th dilate.

    Keys are character values (Fractions in [0,1)), values are positive
    counts.  k = 0 returns {}.  The relative interior of a point is the
    point itself.
    """
    if k == 0:
        return {}
    key = (poly.key, char, k)
    hit = _COUNTS.get(key)
    if hit is not None:
        return hit
    d = char.modulus
    if poly.dim == 0:
        r = (k * ila.dot(char.coeffs, poly.points[0])) % d
        out = {Fraction(r, d): 1}
    else:
        w = [ila.dot(char.coeffs, b) for b in poly.chart.basis]
        off = k * ila.dot(char.coeffs, poly.chart.origin)
        kind, data = poly.lattice_scan(k, relint=True)
        if kind == "np":
            box = poly.bounding_box(k)
            maxabs = max(max(abs(lo), abs(hi)) for lo, hi in box)
            worst = sum(abs(x) for x in w) * maxabs + abs(off)
            if worst >= 2 ** 62:
                kind = "py"
                data = [tuple(int(x) for x in row) for row in data]
        if kind == "np":
            vals = (data @ _np.asarray(w, dtype=_np.int64) + off) % d
            binc = _np.bincount(vals, minlength=d)
            out = {Fraction(r, d): int(c) for r, c in enumerate(binc) if c}
        else:
            raw: dict[int, int] = {}
            for y in data:
                r = (off + ila.dot(w, y)) % d
                raw[r] = raw.get(r, 0) + 1
            out = {Fraction(r, d): c for r, c in sorted(raw.items())}
    _COUNTS[key] = out
    return out


def p_alpha(poly, char: Character) -> dict[Fraction, tuple[int, ...]]:
    """Numerator coefficients of each bucket's interior Ehrhart series.

    Returns {alpha: (phi_0, ..., phi_{dim+1})} where
    sum_k |relint(k*poly)|_alpha t^k = (phi_0 + ... + phi_{dim+1} t^{dim+1})
    / (1-t)^{dim+1}.  Requires the character to vanish on every vertex;
    polynomiality of the numerator is verified out to degree 2*(dim+1)
    rather than assumed.
    """
    key = (poly.key, char)
    hit = _PALPHA.get(key)
    if hit is not None:
        return hit
    for v in poly.vertices:
        if char.value(v) != 0:
            raise InternalConsistencyError(
                f"character {char.coeffs}/{char.modulus} is not trivial on vertex {v}"
            )
    m = poly.dim
    kmax = 2 * (m + 1)
    counts = [relint_counts(poly, char, k) for k in range(kmax + 1)]
    alphas = set()
    for c in counts:
        alphas |= set(c)
    out = {}
    for a in sorted(alphas):
        ell = [c.get(a, 0) for c in counts]
        phi = []
        for j in range(kmax + 1):
            s = 0
            for k in range(1, j + 1):
                c = j - k
                if c <= m + 1:
                    s += (-1) ** c * comb(m + 1, c) * ell[k]
            phi.append(s)
        for j in range(m + 2, kmax + 1):
            if phi[j]:
                raise InternalConsistencyError(
                    "interior Ehrhart series has unexpected degree "
                    f"(bucket {a}, coefficient {j} is {phi[j]})"
                )
        out[a] = tuple(phi[: m + 2])
    _PALPHA[key] = out
    return out


def phi_tilde(poly, char: Character) -> dict[Fraction, int]:
    """Per bucket, the sum of phi_0..phi_dim (the top coefficient omitted)."""
    out = {}
    for a, tup in p_alpha(poly, char).items():
        s = sum(tup[: poly.dim + 1])
        if s:
            out[a] = s
    return out


def skeleton_counts(poly, char: Character) -> dict[Fraction, int]:
    """Bucketed count of lattice points on the 0- and 1-faces.

    Vertices plus the interior lattice points of every edge; each point
    is counted once.
    """
    d = char.modulus
    raw: dict[int, int] = {}
    for i in poly.vertex_ids:
        r = ila.dot(char.coeffs, poly.points[i]) % d
        raw[r] = raw.get(r, 0) + 1
    for a, step, g in poly.edge_steps:
        base = ila.dot(char.coeffs, a)
        s = ila.dot(char.coeffs, step)
        for j in range(1, g):
            r = (base + j * s) % d
            raw[r] = raw.get(r, 0) + 1
    return {Fraction(r, d): c for r, c in sorted(raw.items())}


def normalized_volume(poly, char: Character | None = None) -> int:
    """dim! times the intrinsic-lattice volume, via the Ehrhart numerator."""
    if char is None:
        char = Character.trivial(poly.ambient_dim)
    total = 0
    for tup in p_alpha(poly, char).values():
        total += sum(tup)
    if total <= 0:
        raise InternalConsistencyError("normalized volume must be positive")
    return total


def clear_ehrhart_cache():
    _COUNTS.clear()
    _PALPHA.clear()
