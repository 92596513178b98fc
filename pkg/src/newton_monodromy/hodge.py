"""Equivariant Hodge-Deligne tables of nondegenerate torus hypersurfaces.

hodge_table(poly, char) returns the table e^{p,q}_alpha of the
hypersurface cut out, inside the torus of poly's intrinsic lattice, by
a generic Laurent polynomial with Newton polytope poly, graded by the
finite mu_d-action that char encodes.  Entries live at 0 <= p, q <= dim-1
and character buckets alpha in [0,1); tables are plain dicts
{(p, q, alpha): int} with zero entries dropped.

The computation is the classical one: closed formulas for both extreme
rows and for the high range p+q > dim-1, a stratification of the
closure in the toric variety of a simplicially refined normal fan,
Poincare duality for that closure, and row-sum targets to recover the
middle anti-diagonal.  Every table is cross-checked before it is cached:
the boundary formulas must be reproduced, conjugation symmetry
e^{p,q}_alpha = e^{q,p}_{-alpha} must hold, and the total must equal
the signed normalized volume.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb

from . import ehrhart, fan as fans
from .ehrhart import Character, conj
from .errors import InputError, InternalConsistencyError

_ZERO = Fraction(0)

_TABLES: dict = {}


def _merge(acc: dict, table: dict, scale: int = 1) -> None:
    for k, v in table.items():
        acc[k] = acc.get(k, 0) + scale * v


def _clean(table: dict) -> dict:
    return {k: v for k, v in table.items() if v}


def lefschetz_twist(table: dict, k: int) -> dict:
    """Multiply a table by (1 - L)^k; L shifts (p, q) by (1, 1)."""
    out: dict = {}
    for i in range(k + 1):
        c = (-1) ** i * comb(k, i)
        for (p, q, a), v in table.items():
            kk = (p + i, q + i, a)
            out[kk] = out.get(kk, 0) + c * v
    return _clean(out)


def torus_factor(table: dict, j: int) -> dict:
    """Multiply a table by (L - 1)^j, the table of a j-dimensional torus."""
    out: dict = {}
    for i in range(j + 1):
        c = (-1) ** (j - i) * comb(j, i)
        for (p, q, a), v in table.items():
            kk = (p + i, q + i, a)
            out[kk] = out.get(kk, 0) + c * v
    return _clean(out)


def boundary_values(poly, char: Character):
    """Directly computable table entries and row-sum targets.

    Returns (bv, targets, alphas):
      bv[(p, q, alpha)]    entries of the extreme rows p = 0 / q = 0 and
                           of the whole high range p + q > dim - 1;
      targets[(p, alpha)]  the value of sum_q e^{p,q}_alpha;
      alphas               every bucket seen, closed under conjugation.
    """
    m = poly.dim
    sign = (-1) ** (m - 1)
    lat = poly.face_lattice
    lsum: dict[int, dict] = {d: {} for d in range(2, m + 1)}
    for face, fdim in lat.items():
        if 2 <= fdim <= m:
            cnt = ehrhart.relint_counts(poly.face_polytope(face), char, 1)
            tgt = lsum[fdim]
            for a, c in cnt.items():
                tgt[a] = tgt.get(a, 0) + c
    pa = ehrhart.p_alpha(poly, char)
    skel = ehrhart.skeleton_counts(poly, char)
    alphas = {_ZERO} | set(skel) | set(pa)
    for d in lsum:
        alphas |= set(lsum[d])
    alphas |= {conj(a) for a in alphas}

    bv = {}
    for a in alphas:
        if a == _ZERO:
            bv[(0, 0, a)] = sign * (skel.get(_ZERO, 0) - 1)
        else:
            bv[(0, 0, a)] = sign * skel.get(conj(a), 0)
        for p in range(1, m):
            bv[(p, 0, a)] = sign * lsum[p + 1].get(a, 0)
            bv[(0, p, a)] = sign * lsum[p + 1].get(conj(a), 0)
        for p in range(m):
            for q in range(m):
                if p + q > m - 1:
                    if p == q and a == _ZERO:
                        bv[(p, q, a)] = (-1) ** (m + p + 1) * comb(m, p + 1)
                    else:
                        bv[(p, q, a)] = 0

    targets = {}
    for a in alphas:
        tup = pa.get(a)
        for p in range(m):
            t = (-1) ** (m + 1) * (tup[m - p] if tup else 0)
            if a == _ZERO:
                t += (-1) ** (p + m + 1) * comb(m, p + 1)
            targets[(p, a)] = t
    return bv, targets, alphas


def _strata_sum(poly, char: Character, m: int) -> dict:
    """Sum over torus orbits of the boundary strata of the closure.

    The orbit of a refined normal cone sigma meets the closure in the
    hypersurface of the face where sum(rays of sigma) is minimized,
    times a torus factor soaking up the dimension defect.  Faces that
    are single vertices contribute nothing (their hypersurface is
    empty).
    """
    cones = fans.simplicial_refinement(fans.normal_fan(poly))
    S: dict = {}
    for sigma in sorted(cones, key=lambda c: (len(c), sorted(c))):
        if not sigma:
            continue
        u0 = tuple(sum(col) for col in zip(*sorted(sigma)))
        sub = poly.face_polytope(fans.min_face(poly, u0))
        if sub.dim == 0:
            continue
        j = (m - len(sigma)) - sub.dim
        if j < 0:
            raise InternalConsistencyError(
                "stratum dimension defect is negative"
            )
        _merge(S, torus_factor(hodge_table(sub, char), j))
    return _clean(S)


def hodge_table(poly, char: Character) -> dict:
    """e^{p,q}_alpha of the nondegenerate hypersurface with this Newton
    polytope, graded by char.  Memoized; the returned dict must not be
    mutated."""
    key = (poly.key, char)
    hit = _TABLES.get(key)
    if hit is not None:
        return hit
    m = poly.dim
    if m < 1:
        raise InternalConsistencyError("hypersurface table needs dim >= 1")
    bv, targets, alphas = boundary_values(poly, char)
    if m == 1:
        table = dict(bv)
        for (p, a), t in targets.items():
            if table.get((0, 0, a), 0) != t:
                raise InternalConsistencyError(
                    f"row target mismatch in dimension 1 at bucket {a}"
                )
    else:
        S = _strata_sum(poly, char, m)
        alphas = set(alphas) | {a for (_, _, a) in S}
        alphas |= {conj(a) for a in alphas}
        table = {}
        for a in alphas:
            for p in range(m):
                for q in range(m):
                    if p + q > m - 1:
                        table[(p, q, a)] = bv.get((p, q, a), 0)
        for a in alphas:
            for p in range(m):
                for q in range(m):
                    if p + q < m - 1:
                        dp, dq = m - 1 - p, m - 1 - q
                        closure = table[(dp, dq, conj(a))] + S.get(
                            (dp, dq, conj(a)), 0
                        )
                        table[(p, q, a)] = closure - S.get((p, q, a), 0)
        for a in alphas:
            for p in range(m):
                q = m - 1 - p
                rest = sum(
                    table.get((p, qq, a), 0) for qq in range(m) if qq != q
                )
                table[(p, q, a)] = targets.get((p, a), 0) - rest
    _post_checks(poly, char, table, bv, m)
    out = _clean(table)
    _TABLES[key] = out
    return out


def _post_checks(poly, char, table, bv, m):
    for k, v in bv.items():
        got = table.get(k, 0)
        if got != v:
            raise InternalConsistencyError(
                f"assembled table contradicts boundary value at {k}: "
                f"{got} != {v}"
            )
    for (p, q, a), v in table.items():
        if table.get((q, p, conj(a)), 0) != v:
            raise InternalConsistencyError(
                f"conjugation symmetry broken at {(p, q, a)}"
            )
    total = sum(table.values())
    want = (-1) ** (m - 1) * ehrhart.normalized_volume(poly, char)
    if total != want:
        raise InternalConsistencyError(
            f"table total {total} does not match signed volume {want}"
        )


def pseudo_prime_row_sums(poly, char: Character, alpha: Fraction) -> dict[int, int]:
    """Anti-diagonal sums sum_{p+q=r} e^{p,q}_alpha of the hypersurface
    table, obtained by inclusion-exclusion over the face lattice without
    building the table itself.  Valid for every nontrivial bucket alpha
    when the polytope is pseudo-prime (in particular when it is prime);
    both conditions are enforced."""
    if poly.primeness == "neither":
        raise InputError("anti-diagonal formula needs a pseudo-prime polytope")
    if alpha == _ZERO:
        raise InputError("anti-diagonal formula is for nontrivial buckets only")
    m = poly.dim
    lat = poly.face_lattice
    phis = {
        face: ehrhart.phi_tilde(poly.face_polytope(face), char).get(alpha, 0)
        for face in lat
    }
    out = {}
    for r in range(m):
        acc = 0
        for face, fdim in lat.items():
            if fdim != r + 1:
                continue
            for sub, sdim in lat.items():
                if sub <= face:
                    acc += (-1) ** sdim * phis[sub]
        out[r] = (-1) ** (m + r) * acc
    return out


def clear_hodge_cache():
    _TABLES.clear()
