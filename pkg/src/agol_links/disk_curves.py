"""The n-punctured disk and its standard family of interval curves.

The disk has n punctures equally spaced on the unit circle, labeled
p_0 .. p_{n-1}.  A curve b{i}_{j} is determined by a height index i and a
width j: it bounds a sub-disk containing the j consecutive punctures
p_k for (i-(j-1))/2 <= k <= (i+(j-1))/2, taken modulo n.  The index i is
kept in 1..4n so that distinct copies of one isotopy class can be tracked
along a path; isotopy classes compare by (i mod 2n, j).

All curves are drawn in a standard position that bulges outward around the
convex hull of the punctures, so disjointness is decided purely by the
interval combinatorics: equal, disjoint, or nested intervals give
intersection number 0, and every overlap component contributes 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    AmbientMismatchError,
    CurveIndexError,
    CurveParityError,
    CurveWidthError,
    ValidationError,
)


@dataclass(frozen=True)
class PuncturedDisk:
    """Disk with n >= 4 punctures at angles 2*pi*k/n on the unit circle."""

    n: int

    def __post_init__(self):
        if self.n < 4:
            raise ValidationError(f"need at least 4 punctures, got n={self.n}")

    @property
    def boundary_count(self) -> int:
        # outer boundary plus one per puncture
        return self.n + 1

    def puncture_angle(self, k: int) -> float:
        return 2.0 * math.pi * (k % self.n) / self.n


@dataclass(frozen=True)
class Curve:
    """Interval curve b{i}_{j} on the n-punctured disk."""

    i: int
    j: int
    n: int

    def __post_init__(self):
        if self.n < 4:
            raise ValidationError(f"ambient disk needs n >= 4, got {self.n}")
        if not 1 <= self.i <= 4 * self.n:
            raise CurveIndexError(
                f"height index {self.i} outside 1..{4 * self.n} (n={self.n})"
            )
        if not 2 <= self.j <= self.n - 1:
            raise CurveWidthError(
                f"width {self.j} outside 2..{self.n - 1} (n={self.n})"
            )
        if (self.i + self.j) % 2 == 0:
            raise CurveParityError(
                f"width {self.j} must have parity opposite to index {self.i}"
            )

    @property
    def class_key(self) -> tuple[int, int]:
        """Isotopy class: the index is 2n-periodic, the width is not."""
        return (self.i % (2 * self.n), self.j)

    def isotopic(self, other: "Curve") -> bool:
        return self.n == other.n and self.class_key == other.class_key

    @property
    def token(self) -> str:
        return f"b{self.i}_{self.j}"

    def to_json(self) -> dict:
        return {"i": self.i, "j": self.j, "n": self.n}

    @classmethod
    def from_json(cls, data: dict) -> "Curve":
        return cls(int(data["i"]), int(data["j"]), int(data["n"]))


def beta_curve(i: int, j: int, n: int) -> Curve:
    """Construct b{i}_{j} on the n-punctured disk, validating all bounds."""
    return Curve(i, j, n)


def encircled_punctures(c: Curve) -> tuple[int, ...]:
    """The j consecutive puncture labels enclosed by c, in cyclic order."""
    lo = (c.i - (c.j - 1)) // 2  # i and j have opposite parity, so exact
    return tuple((lo + t) % c.n for t in range(c.j))


def _cyclic_components(members: set[int], n: int) -> int:
    """Number of maximal runs of consecutive labels mod n in ``members``."""
    if not members or len(members) == n:
        return 0 if not members else 1
    return sum(1 for k in members if (k - 1) % n not in members)


def geometric_intersection(c1: Curve, c2: Curve) -> int:
    """Minimal intersection number of two interval curves in standard position.

    Equal, disjoint, or nested puncture intervals can be realized disjointly;
    otherwise each connected component of the cyclic overlap forces two
    transverse crossings.  Cross-validated against the polyline oracle.
    """
    if c1.n != c2.n:
        raise AmbientMismatchError(
            f"curves live on different disks: n={c1.n} vs n={c2.n}"
        )
    a = set(encircled_punctures(c1))
    b = set(encircled_punctures(c2))
    shared = a & b
    if not shared or a <= b or b <= a:
        return 0
    return 2 * _cyclic_components(shared, c1.n)
