"""Trace-form lattices inside an ambient field.

A TraceLattice is a full-rank Z-module given by a square basis matrix whose
rows are element coordinates in the ambient power basis, together with its
cached Gram matrix gram[i][j] = Tr(b_i * conj(b_j)). The ambient is any
object implementing the small protocol used here:

    degree           -- rank of the field over Q
    mul_coords(a, b) -- product in power-basis coordinates
    conj_coords(a)   -- complex conjugation (identity when totally real)
    trace_coords(a)  -- trace of the multiplication operator
    galois_maps()    -- coordinate maps generating the automorphism group
    descriptor()     -- JSON-friendly identity, used for ambient equality

Root-type recognition is certificate-based and exact: an even lattice is
reported as type X iff its norm-2 vectors generate it (HNF index 1), their
orthogonality graph is connected, and (rank, det) match X. Those conditions
are equivalent to being the irreducible root lattice of that rank and
determinant, so the redundant root-count table is asserted, not assumed.
"""
from __future__ import annotations

from fractions import Fraction
from math import floor, ceil, isqrt
from typing import Optional, Sequence

from .errors import (
    AmbientMismatch,
    DependentBasis,
    NotIntegral,
    RankTooLarge,
)
from .exact_linalg import Matrix, det, hnf, inverse, rat, snf

#: doubled root counts of the simply-laced types, used as a cross-check only
_ROOT_COUNTS = {
    "A": lambda n: n * (n + 1),
    "D": lambda n: 2 * n * (n - 1),
    "E": {6: 72, 7: 126, 8: 240},
}


class TraceLattice:
    """Immutable full-rank lattice with cached trace-form Gram matrix."""

    __slots__ = ("ambient", "basis", "gram", "type_tag")

    def __init__(
        self,
        ambient,
        basis: Matrix,
        gram: Matrix | None = None,
        type_tag: str | None = None,
    ):
        if basis.rows != basis.cols or basis.rows != ambient.degree:
            raise DependentBasis(
                f"basis must be square of size {ambient.degree}, got "
                f"{basis.rows}x{basis.cols}"
            )
        if gram is None:
            gram = gram_of(basis, ambient)
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "basis", basis)
        object.__setattr__(self, "gram", gram)
        object.__setattr__(self, "type_tag", type_tag)

    def __setattr__(self, name: str, value) -> None:
        raise AttributeError("TraceLattice is immutable")

    @classmethod
    def from_rows(cls, ambient, rows: Sequence[Sequence]) -> "TraceLattice":
        return cls(ambient, Matrix.from_rows(rows))

    def with_type(self, tag: str) -> "TraceLattice":
        return TraceLattice(self.ambient, self.basis, self.gram, tag)

    def rank(self) -> int:
        return self.basis.rows

    def __repr__(self) -> str:
        tag = f", type={self.type_tag}" if self.type_tag else ""
        return f"TraceLattice(ambient={self.ambient.descriptor()}{tag})"


def gram_of(basis: Matrix | Sequence[Sequence], ambient) -> Matrix:
    """Exact Gram matrix Tr(b_i * conj(b_j)); raises DependentBasis if the
    rows are linearly dependent (the trace form is definite, so dependence
    is equivalent to a singular Gram)."""
    if not isinstance(basis, Matrix):
        basis = Matrix.from_rows(basis)
    rows = [basis.row(i) for i in range(basis.rows)]
    conj_rows = [ambient.conj_coords(r) for r in rows]
    g = [
        [ambient.trace_coords(ambient.mul_coords(a, cb)) for cb in conj_rows]
        for a in rows
    ]
    gram = Matrix(g)
    assert gram == gram.transpose(), "trace pairing must be symmetric"
    if det(gram) == 0:
        raise DependentBasis("Gram matrix is singular")
    _check_positive_definite(gram)
    return gram


def _check_positive_definite(gram: Matrix) -> None:
    # leading principal minors of a symmetric matrix are all > 0 iff PD
    for k in range(1, gram.rows + 1):
        lead = Matrix([[gram[i, j] for j in range(k)] for i in range(k)])
        if det(lead) <= 0:
            raise ValueError("form is not positive definite")


def is_integral(L: TraceLattice) -> bool:
    return L.gram.is_integer()


def is_even(L: TraceLattice) -> bool:
    if not is_integral(L):
        return False
    return all(L.gram[i, i] % 2 == 0 for i in range(L.gram.rows))


def dual(L: TraceLattice) -> TraceLattice:
    """The dual lattice: rows of inverse(gram)*basis are the dual basis.

    dual is an involution, and the dual Gram is the inverse Gram (checked)."""
    dual_basis = inverse(L.gram) * L.basis
    out = TraceLattice(L.ambient, dual_basis)
    assert out.gram == inverse(L.gram), "dual Gram must be the inverse Gram"
    return out


def disc_group(L: TraceLattice) -> tuple[int, ...]:
    """Invariant factors of the discriminant group L*/L (SNF of the Gram)."""
    if not is_integral(L):
        raise NotIntegral("discriminant group needs an integral lattice")
    return snf(L.gram)


# ---------------------------------------------------------------------------
# exact short-vector enumeration (Fincke-Pohst over a rational LDL split)
# ---------------------------------------------------------------------------

def _fp_decompose(gram: Matrix) -> list[list[Fraction]]:
    """Return q with Q(x) = sum_i q[i][i]*(x_i + sum_{j>i} q[i][j] x_j)^2."""
    n = gram.rows
    q = [[gram[i, j] for j in range(n)] for i in range(n)]
    for i in range(n):
        if q[i][i] <= 0:
            raise ValueError("form is not positive definite")
        for j in range(i + 1, n):
            q[j][i] = q[i][j]
            q[i][j] = q[i][j] / q[i][i]
        for k in range(i + 1, n):
            for l in range(k, n):
                q[k][l] = q[k][l] - q[k][i] * q[i][l]
    return q


def _int_interval(rad: Fraction, shift: Fraction) -> tuple[int, int]:
    """Integers x with (x + shift)^2 <= rad, via exact isqrt sandwiching.

    The interval [-shift - sqrt(rad), -shift + sqrt(rad)] can contain no
    integer at all (width < 1); the crossing guards detect that instead of
    walking past the vertex of the parabola."""
    if rad < 0:
        return (0, -1)
    s = isqrt(rad.numerator * rad.denominator)
    outer = Fraction(s + 1, rad.denominator)  # sqrt(rad) <= outer
    hi = floor(outer - shift)
    while (hi + shift) * (hi + shift) > rad:
        if hi + shift < 0:
            return (0, -1)
        hi -= 1
    lo = ceil(-outer - shift)
    while (lo + shift) * (lo + shift) > rad:
        if lo + shift > 0:
            return (0, -1)
        lo += 1
    return (lo, hi)


def short_vectors_gram(
    gram: Matrix, bound: int | str | Fraction
) -> list[tuple[tuple[int, ...], Fraction]]:
    """All nonzero x with x*gram*x^T <= bound, one representative per +-pair
    (first nonzero coefficient positive), sorted by (norm, coefficients)."""
    bound = rat(bound)
    n = gram.rows
    if bound < 0:
        return []
    q = _fp_decompose(gram)
    x = [0] * n
    found: dict[tuple[int, ...], Fraction] = {}

    def descend(i: int, acc: Fraction) -> None:
        shift = sum((q[i][j] * x[j] for j in range(i + 1, n)), Fraction(0))
        lo, hi = _int_interval((bound - acc) / q[i][i], shift)
        for xi in range(lo, hi + 1):
            x[i] = xi
            term = q[i][i] * (xi + shift) * (xi + shift)
            total = acc + term
            if total > bound:
                continue
            if i == 0:
                vec = tuple(x)
                if any(vec):
                    for c in vec:
                        if c != 0:
                            if c < 0:
                                vec = tuple(-y for y in vec)
                            break
                    found[vec] = total
            else:
                descend(i - 1, total)
        x[i] = 0

    descend(n - 1, Fraction(0))
    return sorted(found.items(), key=lambda kv: (kv[1], kv[0]))


def short_vectors(
    L: TraceLattice, bound: int | str | Fraction
) -> list[tuple[tuple[int, ...], Fraction]]:
    """Short vectors of the lattice, as basis-coefficient vectors with norms."""
    return short_vectors_gram(L.gram, bound)


# ---------------------------------------------------------------------------
# root-type recognition
# ---------------------------------------------------------------------------

def _iprod(g: list[list[int]], u: Sequence[int], v: Sequence[int]) -> int:
    return sum(
        u[i] * sum(g[i][j] * v[j] for j in range(len(v))) for i in range(len(u))
    )


def _roots_generate(vectors: list[tuple[int, ...]], n: int) -> bool:
    h, _ = hnf(Matrix.from_rows(vectors))
    pivots = []
    for i in range(h.rows):
        row = h.row(i)
        nz = [x for x in row if x != 0]
        if not nz:
            break
        pivots.append(nz[0])
    if len(pivots) < n:
        return False
    prod = Fraction(1)
    for p in pivots:
        prod *= p
    return prod == 1


def _connected(g: list[list[int]], vectors: list[tuple[int, ...]]) -> bool:
    m = len(vectors)
    parent = list(range(m))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for i in range(m):
        for j in range(i + 1, m):
            if _iprod(g, vectors[i], vectors[j]) != 0:
                ri, rj = find(i), find(j)
                if ri != rj:
                    parent[ri] = rj
    return len({find(i) for i in range(m)}) == 1


def _orthogonal_set(
    g: list[list[int]], pool: list[tuple[int, ...]], norms: list[int], chosen=()
) -> Optional[list[tuple[int, ...]]]:
    """Backtracking search for pairwise-orthogonal vectors with the given
    norms (in order); the pool holds (vector, norm) canonical sign-reps."""
    if not norms:
        return list(chosen)
    want = norms[0]
    for v, nv in pool:
        if nv != want:
            continue
        if any(_iprod(g, v, u) != 0 for u in chosen):
            continue
        res = _orthogonal_set(g, pool, norms[1:], chosen + (v,))
        if res is not None:
            return res
    return None


def classify_gram(gram: Matrix) -> str:
    """Certificate-based recognition over {A_n, D_n, E6, E7, E8, diag114,
    unimodular_odd, other}; see the module docstring for the exact criteria."""
    if not gram.is_integer():
        raise NotIntegral("classification needs an integral Gram matrix")
    n = gram.rows
    if n > 12:
        raise RankTooLarge(f"rank {n} exceeds the enumeration cap of 12")
    _check_positive_definite(gram)
    g = gram.to_int_rows()
    dt = int(det(gram))
    even = all(g[i][i] % 2 == 0 for i in range(n))
    if even:
        pairs = short_vectors_gram(gram, 2)
        roots = [v for v, nrm in pairs if nrm == 2]
        if not roots:
            return "other"
        if not _roots_generate(roots, n):
            return "other"
        if not _connected(g, roots):
            return "other"
        count = 2 * len(roots)
        kind = None
        if dt == n + 1:
            kind = f"A{n}"
            expected = _ROOT_COUNTS["A"](n)
        elif dt == 4 and n >= 4:
            kind = f"D{n}"
            expected = _ROOT_COUNTS["D"](n)
        elif n in (6, 7, 8) and dt == (3, 2, 1)[n - 6]:
            kind = f"E{n}"
            expected = _ROOT_COUNTS["E"][n]
        if kind is None:
            return "other"
        assert count == expected, (
            f"irreducible rank-{n} det-{dt} root lattice must have "
            f"{expected} roots, found {count}"
        )
        return kind
    # odd lattice templates
    pairs4 = short_vectors_gram(gram, 4)
    pool = [(v, int(nrm)) for v, nrm in pairs4 if nrm.denominator == 1]
    if dt == 1:
        ortho = _orthogonal_set(g, pool, [1] * n)
        if ortho is not None:
            return "unimodular_odd"
        return "other"
    if n == 3 and dt == 4:
        triple = _orthogonal_set(g, pool, [1, 1, 4])
        if triple is not None:
            b = Matrix.from_rows(triple)
            assert abs(det(b)) == 1
            return "diag114"
        return "other"
    return "other"


def classify_root_type(L: TraceLattice) -> str:
    if not is_integral(L):
        raise NotIntegral("classification needs an integral lattice")
    return classify_gram(L.gram)


def odd_trace_witness(L: TraceLattice) -> Optional[tuple[int, ...]]:
    """Exhaustive parity scan over L/2L (well-defined: <x+2y, x+2y> is
    congruent to <x,x> mod 4); returns the first class with odd norm in a
    fixed binary counting order (first coordinate least significant), or
    None exactly when the lattice is even."""
    if not is_integral(L):
        raise NotIntegral("parity needs an integral lattice")
    n = L.rank()
    if n > 20:
        raise RankTooLarge("parity scan capped at rank 20")
    g = L.gram.to_int_rows()
    for mask in range(1, 1 << n):
        x = tuple((mask >> i) & 1 for i in range(n))
        if _iprod(g, x, x) % 2 == 1:
            return x
    return None


# ---------------------------------------------------------------------------
# lattice identity
# ---------------------------------------------------------------------------

def canonical_key(L: TraceLattice) -> tuple:
    """(clearing denominator, HNF rows) -- equal iff the lattices are equal.

    The minimal k with k*L inside Z^n is basis-independent, and the row HNF
    of the cleared basis is the unique canonical basis of k*L."""
    scale = L.basis.denominator_lcm()
    cleared = L.basis * scale
    h, _ = hnf(cleared)
    return (scale, tuple(tuple(int(x) for x in h.row(i)) for i in range(h.rows)))


def lattice_equal(L1: TraceLattice, L2: TraceLattice) -> bool:
    if L1.ambient.descriptor() != L2.ambient.descriptor():
        raise AmbientMismatch(
            f"{L1.ambient.descriptor()} vs {L2.ambient.descriptor()}"
        )
    return canonical_key(L1) == canonical_key(L2)


def galois_stable(L: TraceLattice) -> bool:
    """True iff every generator of the ambient automorphism group maps each
    basis vector back into the lattice."""
    binv = inverse(L.basis)
    for gmap in L.ambient.galois_maps():
        for i in range(L.basis.rows):
            image = gmap(L.basis.row(i))
            coeffs = Matrix([list(image)]) * binv
            if not coeffs.is_integer():
                return False
    return True
