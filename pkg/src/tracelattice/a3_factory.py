"""Families of normal-basis lattices in the cyclic cubic fields.

An element beta = lam0*eps + lam1*eps^sigma + lam2*eps^sigma2 together with
its two conjugates spans a lattice whose Gram matrix is the circulant
[[d,e,e],[e,d,e],[e,e,d]], where d = Tr(beta^2) and e = Tr(beta*beta^sigma)
depend only on the symmetric functions of lam:

    d = (t^2 + 2t + 6) L^2 - 2 delta Q        L = lam0 + lam1 + lam2
    e = -(t + 3) L^2 + delta Q                Q = sum of pairwise products

Prescribing a target (d, e, f) with f^2 = d + 2e turns the two equations
into a conic: rational points (x, y) on x^2 + 3y^2 = (d - e) delta map to
solutions lam, with x carrying lam0 and y splitting lam1 from lam2.  Two
targets matter here: (2, 1, 2) makes the circulant the base-change image of
the standard A3 Gram, and (1, 0, 1) makes it the identity, so sweeping chords
through the fixed base point manufactures infinitely many distinct lattices
of either kind, every one carrying a normal basis by construction.
"""
from __future__ import annotations

import logging
from fractions import Fraction
from typing import NamedTuple, Optional

from .conic_points import (
    ConicPoint,
    base_point_delta,
    delta_conic,
    second_intersection,
    slopes_up_to,
)
from .errors import (
    DegenerateLambda,
    DependentBasis,
    PointNotOnConic,
    WrongGram,
    ZeroParameter,
)
from .exact_linalg import Matrix, rat
from .lattice_core import (
    TraceLattice,
    canonical_key,
    classify_root_type,
    dual,
    galois_stable,
    lattice_equal,
)
from .shanks_field import bracket, new_field, sigma

logger = logging.getLogger(__name__)

LambdaVector = tuple[Fraction, Fraction, Fraction]

#: Gram of the normal A3 basis and the standard A3 Gram it base-changes to
NORMAL_A3_GRAM = Matrix.from_rows([[2, 1, 1], [1, 2, 1], [1, 1, 2]])
STANDARD_A3_GRAM = Matrix.from_rows([[2, -1, 0], [-1, 2, -1], [0, -1, 2]])


class TraceTarget(NamedTuple):
    """Prescribed values d = Tr(beta^2), e = Tr(beta beta^sigma), and
    f = Tr(beta) up to sign; consistent iff f^2 = d + 2e."""

    d: Fraction
    e: Fraction
    f: Fraction

    def is_consistent(self) -> bool:
        return self.f * self.f == self.d + 2 * self.e


TARGET_A3 = TraceTarget(Fraction(2), Fraction(1), Fraction(2))
TARGET_SELF_DUAL = TraceTarget(Fraction(1), Fraction(0), Fraction(1))


def lq(lam) -> tuple[Fraction, Fraction]:
    """The two symmetric functions L = sum, Q = sum of pairwise products."""
    l0, l1, l2 = (rat(v) for v in lam)
    return (l0 + l1 + l2, l0 * l1 + l0 * l2 + l1 * l2)


def trace_targets_of(t, lam) -> tuple[Fraction, Fraction]:
    """(d, e) of the normal-basis element with weights lam, in closed form."""
    t = rat(t)
    if t == 0:
        raise ZeroParameter(
            "t = 0 divides the weight formulas; rebuild the field at the "
            "remapped parameter"
        )
    delta = t * t + 3 * t + 9
    big_l, big_q = lq(lam)
    d = (t * t + 2 * t + 6) * big_l * big_l - 2 * delta * big_q
    e = -(t + 3) * big_l * big_l + delta * big_q
    return (d, e)


def lambda_from_point(t, target: TraceTarget, point: ConicPoint) -> LambdaVector:
    """Weights lam realizing the target, from a rational point (x, y) on
    x^2 + 3y^2 = (d - e) delta_t.

    lam0 = (2tx/delta + f) / 3t, and lam1, lam2 split off y; lam1 always
    takes the + branch so output is deterministic (the - choice relabels
    the same normal basis)."""
    t = rat(t)
    if t == 0:
        raise ZeroParameter("the weight recovery divides by t")
    d, e, f = (rat(v) for v in target)
    assert f * f == d + 2 * e, "inconsistent target: f^2 != d + 2e"
    delta = t * t + 3 * t + 9
    x, y = point.as_pair()
    if x * x + 3 * y * y != (d - e) * delta:
        raise PointNotOnConic(
            f"({x}, {y}) is not on x^2 + 3y^2 = {(d - e) * delta}"
        )
    lam0 = (2 * t * x / delta + f) / (3 * t)
    # the discriminant of the residual quadratic in lam1, recomputed from
    # the closed form and matched against the y-coordinate
    residual_disc = (
        -Fraction(1, 3) * (3 * t * lam0 - f) ** 2
        + (4 * t * t * f * f - 12 * t * t * e) / (3 * delta)
    )
    assert residual_disc == (2 * t * y / delta) ** 2
    half_sum = f - t * lam0
    lam1 = (half_sum + 2 * t * y / delta) / (2 * t)
    lam2 = (half_sum - 2 * t * y / delta) / (2 * t)
    lam = (lam0, lam1, lam2)
    assert trace_targets_of(t, lam) == (d, e)
    return lam


def normal_basis_lattice(t, lam) -> TraceLattice:
    """Lattice spanned by the sigma-orbit of beta = <lam, eps-orbit>.

    Gram is the circulant of (d, e) by the Galois symmetry; raises
    DegenerateLambda when the three conjugates are linearly dependent."""
    field = new_field(t)
    beta = bracket(field, lam)
    beta_s = sigma(beta)
    rows = [beta.coords, beta_s.coords, sigma(beta_s).coords]
    try:
        lattice = TraceLattice.from_rows(field, rows)
    except DependentBasis as exc:
        raise DegenerateLambda(
            f"conjugates of the weighted element are dependent for lam = {lam}"
        ) from exc
    d, e = trace_targets_of(t, lam)
    expected = Matrix.from_rows([[d, e, e], [e, d, e], [e, e, d]])
    assert lattice.gram == expected, "orbit Gram must be circulant in (d, e)"
    return lattice


def to_a3_basis(lattice: TraceLattice) -> TraceLattice:
    """Base change from the normal-basis Gram to the standard A3 Gram.

    The new basis spans the same lattice (the transform is unimodular)."""
    if lattice.gram != NORMAL_A3_GRAM:
        raise WrongGram(
            "expected the normal A3 Gram [[2,1,1],[1,2,1],[1,1,2]], got "
            f"{lattice.gram!r}"
        )
    transform = Matrix.from_rows([[1, 0, 0], [-1, 1, 0], [0, -1, 1]])
    out = TraceLattice(lattice.ambient, transform * lattice.basis)
    assert out.gram == STANDARD_A3_GRAM
    assert lattice_equal(out, lattice)
    return out.with_type("A3")


def identity_to_a3_transform() -> Matrix:
    """The 0/1 circulant with zero diagonal carries the identity Gram to the
    normal A3 Gram: M I M^T = [[2,1,1],[1,2,1],[1,1,2]] exactly.  So every
    self-dual member doubles into an A3 member over the same field."""
    m = Matrix.from_rows([[0, 1, 1], [1, 0, 1], [1, 1, 0]])
    assert m * m.transpose() == NORMAL_A3_GRAM
    return m


class FamilyMember(NamedTuple):
    lattice: TraceLattice
    lam: LambdaVector
    point: ConicPoint
    slope: Optional[Fraction]
    lam0_denominator: int


class FamilyScan(NamedTuple):
    members: list[FamilyMember]
    skipped: int


def scan_family(t, height: int, target: TraceTarget = TARGET_A3) -> FamilyScan:
    """Sweep chords up to the slope height and collect the pairwise-distinct
    certified lattices for a preset target.

    Degenerate weights are skipped with a log note and counted, never raised:
    the family stays infinite after finitely many exclusions."""
    t = rat(t)
    if t == 0:
        raise ZeroParameter("the family needs t != 0")
    assert target.d - target.e == 1, "preset targets live on the delta conic"
    field = new_field(t)  # raises Reducible for the bad parameters
    conic = delta_conic(t)
    p0 = base_point_delta(t)
    seen_points: set[ConicPoint] = set()
    seen_keys: set = set()
    members: list[FamilyMember] = []
    skipped = 0
    for slope in slopes_up_to(height):
        point = second_intersection(conic, p0, slope)
        if point in seen_points:
            continue
        seen_points.add(point)
        lam = lambda_from_point(t, target, point)
        try:
            lattice = normal_basis_lattice(t, lam)
        except DegenerateLambda:
            logger.info(
                "skipping degenerate weights lam=%s at point %s (t=%s)",
                lam, point, t,
            )
            skipped += 1
            continue
        key = canonical_key(lattice)
        if key in seen_keys:
            continue
        seen_keys.add(key)
        if target == TARGET_A3:
            to_a3_basis(lattice)  # exact Gram + same-lattice certificates
            label = classify_root_type(lattice)
            assert label == "A3"
        else:
            assert lattice.gram == Matrix.identity(3)
            assert lattice_equal(dual(lattice), lattice)
            label = classify_root_type(lattice)
            assert label == "unimodular_odd"
        assert galois_stable(lattice)
        members.append(
            FamilyMember(
                lattice.with_type(label),
                lam,
                point,
                slope,
                lam[0].denominator,
            )
        )
    return FamilyScan(members, skipped)


def generate_family(t, height: int) -> list[tuple[TraceLattice, int]]:
    """The distinct A3 lattices up to the slope height, each annotated with
    the denominator of its lam0 (these grow without bound along the family)."""
    scan = scan_family(t, height, TARGET_A3)
    return [(m.lattice, m.lam0_denominator) for m in scan.members]


def self_dual_family(t, height: int) -> list[TraceLattice]:
    """The distinct self-dual (identity Gram) lattices up to the slope height."""
    identity_to_a3_transform()
    scan = scan_family(t, height, TARGET_SELF_DUAL)
    return [m.lattice for m in scan.members]
