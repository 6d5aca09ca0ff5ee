"""Numerical oracle: interval curves as explicit planar polylines.

Each curve is realized as a stadium-shaped polyline around the arc of
punctures it encircles: an inner arc at radius 1-h, an outer arc at 1+h,
and two radial caps just past the interval's end punctures.  The offsets
h and the angular margin of the caps are keyed to the curve's isotopy
class, ordered primarily by width, so that

* nested or disjoint intervals give disjoint polylines, and
* properly overlapping intervals cross exactly twice per overlap end,

making the realized crossing count equal the minimal intersection number
for this family.  Vertices live on an integer grid (scale 1e8) and all
intersection predicates are exact integer arithmetic, so there is no
epsilon tuning anywhere in the oracle.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .disk_curves import Curve, encircled_punctures
from .errors import DegenerateGeometryError, ValidationError

SCALE = 10**8  # grid quantum 1e-8; all separations are >= ~1e-4
ANGLE_SAMPLES_PER_GAP = 4  # arc sampling step pi/(4n): sagitta << radial gaps
MAX_ORACLE_N = 12


@dataclass(frozen=True)
class PolylineCurve:
    """Closed polyline with integer-grid vertices."""

    vertices: tuple[tuple[int, int], ...]
    source: Curve

    def segment_array(self) -> np.ndarray:
        """(S, 2, 2) int64 array of segment endpoints, closing edge included."""
        pts = np.array(self.vertices, dtype=np.int64)
        nxt = np.roll(pts, -1, axis=0)
        return np.stack([pts, nxt], axis=1)


def class_rank(c: Curve) -> int:
    """Dense rank of the isotopy class, ordered by (width, index class).

    Width dominates, so strictly nested curves always get strictly larger
    offsets; same-width classes still get distinct offsets.
    """
    i2n = c.i % (2 * c.n)
    # residues of the right parity mod 2n, renumbered 0..n-1
    idx = i2n // 2 if c.j % 2 == 1 else (i2n - 1) // 2
    return (c.j - 2) * c.n + idx


def _offsets(c: Curve, nudge: int = 0) -> tuple[float, float]:
    """Radial half-width h and angular cap margin delta for the class."""
    n_classes = c.n * (c.n - 2)
    rank = class_rank(c)
    jitter = nudge / (17.0 * n_classes)
    h = 0.1 + 0.8 * rank / n_classes + jitter
    delta = (math.pi / c.n) * (0.2 + 0.6 * rank / n_classes + jitter)
    return h, delta


def _grid_point(angle: float, radius: float) -> tuple[int, int]:
    return (
        round(SCALE * radius * math.cos(angle)),
        round(SCALE * radius * math.sin(angle)),
    )


@lru_cache(maxsize=4096)
def _realize_class(i2n: int, j: int, n: int, nudge: int) -> PolylineCurve:
    c = Curve(i2n if i2n >= 1 else i2n + 2 * n, j, n)
    interval = encircled_punctures(c)
    h, delta = _offsets(c, nudge)
    theta0 = 2 * math.pi * ((c.i - (c.j - 1)) // 2) / n
    span = 2 * math.pi * (j - 1) / n + 2 * delta
    start = theta0 - delta
    steps = max(2, math.ceil(span / (math.pi / (ANGLE_SAMPLES_PER_GAP * n))))
    angles = [start + span * t / steps for t in range(steps + 1)]
    outer = [_grid_point(a, 1 + h) for a in angles]
    inner = [_grid_point(a, 1 - h) for a in reversed(angles)]
    poly = PolylineCurve(vertices=tuple(outer + inner), source=c)
    if not is_simple(poly):
        raise DegenerateGeometryError(
            f"realization of {c.token} self-intersects (offset scheme bug)"
        )
    expected = set(interval)
    for k in range(n):
        target = _grid_point(2 * math.pi * k / n, 1.0)
        wind = winding_number(poly, target)
        if wind != (1 if k in expected else 0):
            raise DegenerateGeometryError(
                f"realization of {c.token} winds {wind} times around p_{k}"
            )
    return poly


def realize(c: Curve, nudge: int = 0) -> PolylineCurve:
    """Realize a curve; equal isotopy classes give identical vertex lists."""
    if c.n > MAX_ORACLE_N:
        raise ValidationError(f"oracle supports n <= {MAX_ORACLE_N}, got n={c.n}")
    i2n, j = c.class_key
    return _realize_class(i2n, j, c.n, nudge)


def _pairwise_orientations(a: np.ndarray, b: np.ndarray) -> tuple[np.ndarray, ...]:
    """Orientation signs for all segment pairs of two (S, 2, 2) arrays."""
    p1 = a[:, None, 0]
    p2 = a[:, None, 1]
    q1 = b[None, :, 0]
    q2 = b[None, :, 1]

    def orient(p, q, r):
        d1 = q - p
        d2 = r - p
        return np.sign(d1[..., 0] * d2[..., 1] - d1[..., 1] * d2[..., 0])

    return (
        orient(p1, p2, q1),
        orient(p1, p2, q2),
        orient(q1, q2, p1),
        orient(q1, q2, p2),
    )


def _boxes_overlap(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    a_lo = a.min(axis=1)[:, None]
    a_hi = a.max(axis=1)[:, None]
    b_lo = b.min(axis=1)[None, :]
    b_hi = b.max(axis=1)[None, :]
    return np.all(a_lo <= b_hi, axis=-1) & np.all(b_lo <= a_hi, axis=-1)


def count_intersections(a: PolylineCurve, b: PolylineCurve) -> int:
    """Transverse crossings of two polylines in general position.

    Raises if any segment pair with overlapping bounding boxes is
    degenerate (endpoint contact or collinearity); callers may retry with
    a nudged realization.
    """
    sa = a.segment_array()
    sb = b.segment_array()
    o1, o2, o3, o4 = _pairwise_orientations(sa, sb)
    touching = (o1 == 0) | (o2 == 0) | (o3 == 0) | (o4 == 0)
    if np.any(touching & _boxes_overlap(sa, sb)):
        raise DegenerateGeometryError(
            f"{a.source.token} and {b.source.token} are not in general position"
        )
    proper = (o1 * o2 < 0) & (o3 * o4 < 0)
    return int(proper.sum())


def is_simple(p: PolylineCurve) -> bool:
    """No self-crossings: adjacent segments share only their endpoint."""
    s = p.segment_array()
    count = len(s)
    o1, o2, o3, o4 = _pairwise_orientations(s, s)
    proper = (o1 * o2 < 0) & (o3 * o4 < 0)
    idx = np.arange(count)
    adjacent = (np.abs(idx[:, None] - idx[None, :]) <= 1) | (
        np.abs(idx[:, None] - idx[None, :]) == count - 1
    )
    if np.any(proper & ~adjacent):
        return False
    touching = (o1 == 0) | (o2 == 0) | (o3 == 0) | (o4 == 0)
    stray = touching & ~adjacent & _boxes_overlap(s, s)
    return not np.any(stray)


def winding_number(p: PolylineCurve, point: tuple[int, int]) -> int:
    """Signed winding of the polyline around a grid point (float angles;
    every probe point is far from the curve by construction)."""
    px, py = point
    verts = np.array(p.vertices, dtype=np.float64)
    rel = verts - np.array([px, py], dtype=np.float64)
    angles = np.arctan2(rel[:, 1], rel[:, 0])
    deltas = np.diff(np.append(angles, angles[0]))
    deltas = (deltas + math.pi) % (2 * math.pi) - math.pi
    return round(deltas.sum() / (2 * math.pi))


def oracle_intersection(c1: Curve, c2: Curve) -> int:
    """Realized crossing count of two curves, with degeneracy retries."""
    if c1.n != c2.n:
        raise ValidationError(f"curves on different disks: {c1.n} vs {c2.n}")
    if c1.class_key == c2.class_key:
        return 0  # identical realizations: isotopic to disjointness
    last_error: DegenerateGeometryError | None = None
    for nudge in range(3):
        try:
            return count_intersections(realize(c1, nudge), realize(c2, nudge))
        except DegenerateGeometryError as exc:
            last_error = exc
    raise last_error
