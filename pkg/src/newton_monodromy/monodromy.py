"""Jordan form of the Milnor monodromy from the Newton polyhedron.

The motivic table of the Milnor fiber at the origin is assembled from
the compact faces gamma: each contributes the hypersurface table of
conv({0} union gamma) graded by its height character, twisted by
(1 - L)^{twist}, and (when dim gamma >= 1) the ungraded table of gamma
itself twisted once more.  Weight filtration bookkeeping then turns
anti-diagonal sums of the eigenvalue-1 and eigenvalue-not-1 parts into
counts of Jordan blocks of each size.

Eigenvalues are labelled by their argument: the Fraction a/b in [0, 1)
stands for exp(2*pi*i*a/b); 0 labels eigenvalue 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .ehrhart import Character, conj, relint_counts
from .errors import InputError, InternalConsistencyError
from .hodge import hodge_table, lefschetz_twist, pseudo_prime_row_sums
from .newton import NewtonPolyhedron

_ZERO = Fraction(0)


@dataclass(frozen=True)
class MotivicTable:
    """Hodge-degree/eigenvalue table of the Milnor fiber cohomology.

    first   the face-cone sum (the proper part carrying eigenvalues)
    second  the correction sum over positive-dimensional faces
    total   first + second
    All three are {(p, q, eigenvalue bucket): int} with zeros dropped.
    """

    n: int
    first: dict
    second: dict
    total: dict


@dataclass(frozen=True)
class JordanSpectrum:
    """Jordan block data of the monodromy on top reduced cohomology.

    blocks          {(eigenvalue bucket, size): count}, counts positive
    multiplicities  {eigenvalue bucket: total multiplicity}
    mu              Milnor number, the sum of all multiplicities
    """

    n: int
    mu: int
    blocks: dict
    multiplicities: dict

    def sorted_eigenvalues(self):
        return sorted(self.multiplicities, key=lambda a: (a.denominator, a.numerator))

    def block_sizes(self, eigenvalue: Fraction) -> dict[int, int]:
        return {
            size: cnt
            for (ev, size), cnt in sorted(self.blocks.items())
            if ev == eigenvalue
        }


def _merge(acc: dict, table: dict) -> None:
    for k, v in table.items():
        acc[k] = acc.get(k, 0) + v


def motivic_milnor_table(np_: NewtonPolyhedron) -> MotivicTable:
    first: dict = {}
    second: dict = {}
    trivial = Character.trivial(np_.n)
    for face in np_.faces:
        _merge(first, lefschetz_twist(hodge_table(face.delta, face.char), face.twist))
        if face.dim >= 1:
            _merge(
                second,
                lefschetz_twist(hodge_table(face.poly, trivial), face.twist + 1),
            )
    total = dict(first)
    _merge(total, second)
    return MotivicTable(
        n=np_.n,
        first={k: v for k, v in first.items() if v},
        second={k: v for k, v in second.items() if v},
        total={k: v for k, v in total.items() if v},
    )


def _degree_sum(table: dict, ev: Fraction, degrees) -> int:
    return sum(
        v for (p, q, a), v in table.items() if a == ev and p + q in degrees
    )


def _eigen_sum(table: dict, ev: Fraction) -> int:
    return sum(v for (p, q, a), v in table.items() if a == ev)


def jordan_blocks(np_: NewtonPolyhedron) -> JordanSpectrum:
    """Full Jordan normal form of the monodromy on H^{n-1} (reduced).

    Block counts for eigenvalue exp(2*pi*i*a/b) != 1 come from
    anti-diagonal sums of the face-cone part; for eigenvalue 1 two
    independent routes (the full table high above the middle, and the
    face-cone part low below it) are both computed and must agree.
    """
    mt = motivic_milnor_table(np_)
    n = np_.n
    sgn = (-1) ** (n - 1)
    evs = {a for (_, _, a) in mt.first} | {a for (_, _, a) in mt.total}
    evs.add(_ZERO)
    blocks: dict = {}
    mults: dict = {}
    for ev in sorted(evs, key=lambda a: (a.denominator, a.numerator)):
        at_least: dict[int, int] = {}
        if ev == _ZERO:
            top = n - 1
            for k in range(1, top + 2):
                via_total = sgn * _degree_sum(mt.total, ev, {n - 1 + k, n + k})
                via_first = sgn * _degree_sum(mt.first, ev, {n - 2 - k, n - 1 - k})
                if via_total != via_first:
                    raise InternalConsistencyError(
                        f"eigenvalue-1 block count disagrees at size >= {k}: "
                        f"{via_total} vs {via_first}"
                    )
                at_least[k] = via_total
            mult = sgn * (_eigen_sum(mt.total, ev) - 1)
        else:
            top = n
            for k in range(1, top + 2):
                at_least[k] = sgn * _degree_sum(mt.first, ev, {n - 2 + k, n - 1 + k})
            mult = sgn * _eigen_sum(mt.total, ev)
        if at_least[top + 1] != 0:
            raise InternalConsistencyError(
                f"block of impossible size {top + 1} for eigenvalue {ev}"
            )
        check = 0
        for k in range(1, top + 1):
            c = at_least[k] - at_least.get(k + 1, 0)
            if c < 0:
                raise InternalConsistencyError(
                    f"negative count of size-{k} blocks for eigenvalue {ev}"
                )
            if c:
                blocks[(ev, k)] = c
                check += k * c
        if mult < 0 or check != mult:
            raise InternalConsistencyError(
                f"block sizes sum to {check} but multiplicity of {ev} is {mult}"
            )
        if mult:
            mults[ev] = mult
    return JordanSpectrum(
        n=n,
        mu=sum(mults.values()),
        blocks=blocks,
        multiplicities=mults,
    )


def fastpath_top(np_: NewtonPolyhedron, ev: Fraction) -> tuple[int, int]:
    """Counts of the largest Jordan blocks for an eigenvalue != 1.

    Returns (number of size-n blocks, number of size-(n-1) blocks) for
    eigenvalue exp(2*pi*i*ev), reading only interior vertices and
    interior-touching edges of the Newton polyhedron.
    """
    ev = Fraction(ev)
    if not 0 < ev < 1:
        raise InputError("fastpath_top needs an eigenvalue bucket in (0, 1)")
    b = ev.denominator
    size_n = 0
    for face in np_.faces_of_dim(0):
        if face.interior_touching and face.distance % b == 0:
            size_n += 1
    size_n1 = 0
    for face in np_.faces_of_dim(1):
        if face.interior_touching and face.distance % b == 0:
            counts = relint_counts(face.delta, face.char, 1)
            size_n1 += counts.get(ev, 0) + counts.get(conj(ev), 0)
    return size_n, size_n1


def fastpath_unipotent(np_: NewtonPolyhedron) -> tuple[int, int]:
    """Counts of the largest unipotent Jordan blocks (eigenvalue 1).

    Returns (number of size-(n-1) blocks, number of size-(n-2) blocks),
    from strictly positive lattice points on faces of dimension <= 1
    and interior points of interior-touching 2-faces.
    """
    n = np_.n
    strictly_positive = set()
    for face in np_.faces:
        if face.dim == 0:
            (pt,) = face.points
            if all(x > 0 for x in pt):
                strictly_positive.add(pt)
        elif face.dim == 1:
            for start, step, length in face.poly.edge_steps:
                for j in range(length + 1):
                    pt = tuple(s + j * t for s, t in zip(start, step))
                    if all(x > 0 for x in pt):
                        strictly_positive.add(pt)
    count_top = len(strictly_positive)
    count_next = 0
    trivial = Character.trivial(n)
    for face in np_.faces_of_dim(2):
        if face.interior_touching:
            count_next += 2 * sum(relint_counts(face.poly, trivial, 1).values())
    return count_top, count_next


def prime_face_blocks(np_: NewtonPolyhedron, ev: Fraction, k: int) -> int:
    """Number of Jordan blocks of size >= k for eigenvalue != 1, by the
    closed combinatorial formula available when every compact face is
    prime in its intrinsic lattice.

    Raises InputError naming the first non-prime face otherwise.
    """
    ev = Fraction(ev)
    if not 0 < ev < 1:
        raise InputError("prime_face_blocks needs an eigenvalue bucket in (0, 1)")
    if k < 1:
        raise InputError("block size threshold must be >= 1")
    n = np_.n
    for face in np_.faces:
        if face.poly.primeness != "prime":
            raise InputError(
                f"compact face {face.points} is not prime; "
                "the closed formula does not apply"
            )
    total = 0
    for face in np_.faces:
        rows = pseudo_prime_row_sums(face.delta, face.char, ev)
        for kk in (k, k + 1):
            base = n - 2 + kk
            for r in range(face.dim + 1):
                if (base - r) % 2 != 0:
                    continue
                d = (base - r) // 2
                if d < 0:
                    continue
                total += (-1) ** d * comb(face.twist, d) * rows[r]
    return (-1) ** (n - 1) * total
