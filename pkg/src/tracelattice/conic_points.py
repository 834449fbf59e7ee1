"""Rational points on the ellipse x^2 + D*y^2 = m by chord parametrization.

Given one rational base point, every other rational point is the second
intersection of a rational-slope line through it; enumerating slopes in
lowest terms therefore enumerates points. All arithmetic is exact and every
returned point satisfies its conic equation with zero residual.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterator, Optional

from .errors import PointNotOnConic, ZeroSlopePair
from .exact_linalg import rat

INFINITY_SLOPE: Optional[Fraction] = None  # `None` plays the role of s = infinity


class ConicPoint:
    """A rational point (x, y); the conic it lives on is supplied by context."""

    __slots__ = ("x", "y")

    def __init__(self, x: int | str | Fraction, y: int | str | Fraction):
        object.__setattr__(self, "x", rat(x))
        object.__setattr__(self, "y", rat(y))

    def __setattr__(self, name: str, value) -> None:
        raise AttributeError("ConicPoint is immutable")

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, ConicPoint) and self.x == other.x and self.y == other.y
        )

    def __hash__(self) -> int:
        return hash((self.x, self.y))

    def __repr__(self) -> str:
        return f"ConicPoint({self.x}, {self.y})"

    def as_pair(self) -> tuple[Fraction, Fraction]:
        return (self.x, self.y)


class Conic:
    """x^2 + D*y^2 = m with D, m > 0 (an ellipse: bounded, finitely many
    points of any bounded height)."""

    __slots__ = ("D", "m")

    def __init__(self, D: int | str | Fraction, m: int | str | Fraction):
        D, m = rat(D), rat(m)
        if D <= 0 or m <= 0:
            raise ValueError("need D > 0 and m > 0")
        object.__setattr__(self, "D", D)
        object.__setattr__(self, "m", m)

    def __setattr__(self, name: str, value) -> None:
        raise AttributeError("Conic is immutable")

    def __repr__(self) -> str:
        return f"Conic(x^2 + {self.D}*y^2 = {self.m})"

    def contains(self, p: ConicPoint) -> bool:
        return p.x * p.x + self.D * p.y * p.y == self.m

    def residual(self, p: ConicPoint) -> Fraction:
        return p.x * p.x + self.D * p.y * p.y - self.m


def delta_conic(t: int | str | Fraction) -> Conic:
    """The Lemma-4.4 conic for the A3 and self-dual presets: x^2+3y^2 = delta_t."""
    t = rat(t)
    return Conic(3, t * t + 3 * t + 9)


def base_point_delta(t: int | str | Fraction) -> ConicPoint:
    """(t+3/2, 3/2) lies on x^2+3y^2 = delta_t: (t+3/2)^2 + 27/4 = t^2+3t+9."""
    t = rat(t)
    p = ConicPoint(t + Fraction(3, 2), Fraction(3, 2))
    assert delta_conic(t).contains(p)
    return p


def second_intersection(
    c: Conic, p0: ConicPoint, slope: Optional[int | str | Fraction]
) -> ConicPoint:
    """The other intersection of the conic with the line through p0 of the
    given slope (None = vertical); the tangent line returns p0 itself."""
    if not c.contains(p0):
        raise PointNotOnConic(f"{p0} not on {c}")
    if slope is None:
        return ConicPoint(p0.x, -p0.y)
    s = rat(slope)
    # (x0+tau)^2 + D(y0+s*tau)^2 = m  =>  tau*((1+D s^2) tau + 2(x0 + D s y0)) = 0
    tau = -2 * (p0.x + c.D * s * p0.y) / (1 + c.D * s * s)
    return ConicPoint(p0.x + tau, p0.y + s * tau)


def slopes_up_to(height: int) -> Iterator[Optional[Fraction]]:
    """infinity, then all a/b in lowest terms with |a| <= height, 1 <= b <= height,
    in a fixed deterministic order."""
    yield INFINITY_SLOPE
    for b in range(1, height + 1):
        for a in range(-height, height + 1):
            if gcd(abs(a), b) == 1:
                yield Fraction(a, b)


def enumerate_points(c: Conic, p0: ConicPoint, height: int) -> list[ConicPoint]:
    """Deduplicated chord points for all slopes up to the given height.

    The output keeps first-seen order over the deterministic slope sweep, so
    identical inputs give identical lists.
    """
    if height < 1:
        raise ValueError("height >= 1 required")
    seen: set[tuple[Fraction, Fraction]] = set()
    out: list[ConicPoint] = []
    for s in slopes_up_to(height):
        p = second_intersection(c, p0, s)
        key = p.as_pair()
        if key not in seen:
            seen.add(key)
            out.append(p)
    return out


def unit_conic_point(s0: int, s1: int) -> ConicPoint:
    """First basis coordinate pair for the d = 3 quadratic A2 family:
    (x1, y1) = (-(s0^2-3s1^2), -2 s0 s1) / (s0^2+3s1^2), on x^2 + 3y^2 = 1.

    s0 = 0 (slope infinity) lands on the base point (1, 0).
    """
    if s0 == 0 and s1 == 0:
        raise ZeroSlopePair("(0, 0) is not a slope")
    den = s0 * s0 + 3 * s1 * s1
    p = ConicPoint(Fraction(-(s0 * s0 - 3 * s1 * s1), den), Fraction(-2 * s0 * s1, den))
    assert Conic(3, 1).contains(p)
    return p
