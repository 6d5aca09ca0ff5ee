"""Pants decompositions of the punctured disk and certified paths between them.

The decomposition P_i consists of the interval curves
{b(2i-1)_j : j even} followed by {b(2i)_j : j odd}, each family in
ascending width.  The interpolant P_i^k swaps in the first k curves of
P_{i+1}; sweeping k from 0 to n-2 rotates P_i into P_{i+1} one curve at a
time, and every step is a legal A-move.  Composing the sweeps for
i = 1 .. 2n-l gives the full path from P_1 to P_{2n+1-l}, of length
(2n-l)(n-2).

Ordering matters: the two parity families must not be interleaved by width,
or the intermediate interpolants stop being pairwise disjoint.  The A-move
certifier is the source of truth here and the construction never skips it.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .disk_curves import Curve, beta_curve, encircled_punctures, geometric_intersection
from .errors import AmbientMismatchError, PantsError, PathError


@dataclass(frozen=True)
class PantsDecomposition:
    """Ordered, validated collection of n-2 pairwise disjoint curves."""

    curves: tuple[Curve, ...]
    n: int

    def __post_init__(self):
        object.__setattr__(self, "curves", tuple(self.curves))
        if len(self.curves) != self.n - 2:
            raise PantsError(
                f"expected {self.n - 2} curves on the {self.n}-punctured disk, "
                f"got {len(self.curves)}"
            )
        seen_intervals = set()
        for c in self.curves:
            if c.n != self.n:
                raise AmbientMismatchError(
                    f"curve {c.token} lives on n={c.n}, decomposition on n={self.n}"
                )
            interval = frozenset(encircled_punctures(c))
            if interval in seen_intervals:
                raise PantsError(f"duplicate puncture interval for {c.token}")
            seen_intervals.add(interval)
        for a_idx in range(len(self.curves)):
            for b_idx in range(a_idx + 1, len(self.curves)):
                a, b = self.curves[a_idx], self.curves[b_idx]
                if geometric_intersection(a, b) != 0:
                    raise PantsError(f"curves {a.token} and {b.token} intersect")

    @property
    def class_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(c.class_key for c in self.curves)

    def tokens(self) -> list[str]:
        return [c.token for c in self.curves]


def standard_decomposition(i: int, n: int) -> PantsDecomposition:
    """The decomposition P_i: odd-index curves of even width, then even-index
    curves of odd width, each in ascending width."""
    if n < 4:
        raise PantsError(f"need n >= 4, got {n}")
    if i < 1 or 2 * i > 4 * n:
        raise PantsError(f"decomposition index {i} outside 1..{2 * n}")
    evens = [beta_curve(2 * i - 1, j, n) for j in range(2, n) if j % 2 == 0]
    odds = [beta_curve(2 * i, j, n) for j in range(3, n) if j % 2 == 1]
    return PantsDecomposition(tuple(evens + odds), n)


def interpolant(i: int, k: int, n: int) -> PantsDecomposition:
    """P_i^k: the first k curves of P_{i+1} plus the last n-2-k of P_i."""
    if not 0 <= k <= n - 2:
        raise PathError(f"interpolation step {k} outside 0..{n - 2}")
    head = standard_decomposition(i + 1, n).curves[:k]
    tail = standard_decomposition(i, n).curves[k:]
    try:
        return PantsDecomposition(head + tail, n)
    except PantsError as exc:
        raise PathError(
            f"interpolant P_{i}^{k} is not a pants decomposition "
            f"(ordering convention bug): {exc}"
        ) from exc


@dataclass(frozen=True)
class MoveCertificate:
    """Truthy iff the move is a legal A-move; carries the replaced pair."""

    valid: bool
    removed: Curve | None = None
    added: Curve | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.valid


def is_A_move(p: PantsDecomposition, q: PantsDecomposition) -> MoveCertificate:
    """Decide whether q is obtained from p by replacing one curve with a curve
    meeting it twice, disjoint from everything else."""
    if p.n != q.n:
        raise AmbientMismatchError(f"decompositions on n={p.n} vs n={q.n}")
    q_classes = q.class_set
    p_classes = p.class_set
    removed = [c for c in p.curves if c.class_key not in q_classes]
    added = [c for c in q.curves if c.class_key not in p_classes]
    if not removed and not added:
        return MoveCertificate(False, reason="no curve replaced")
    if len(removed) != 1 or len(added) != 1:
        return MoveCertificate(False, reason="more than one curve replaced")
    out, new = removed[0], added[0]
    if geometric_intersection(out, new) != 2:
        return MoveCertificate(
            False,
            reason=f"{out.token} and {new.token} do not meet twice",
        )
    for c in q.curves:
        if c is not new and geometric_intersection(c, new) != 0:
            return MoveCertificate(
                False,
                reason=f"replacement {new.token} meets unchanged curve {c.token}",
            )
    return MoveCertificate(True, removed=out, added=new)


def is_S_move(p: PantsDecomposition, q: PantsDecomposition) -> bool:
    """S-moves need a one-holed-torus piece; genus zero has none."""
    if p.n != q.n:
        raise AmbientMismatchError(f"decompositions on n={p.n} vs n={q.n}")
    return False


def pants_regions(p: PantsDecomposition) -> list[dict]:
    """Cut the disk along the decomposition and describe each region.

    Curves of an interval decomposition are nested or disjoint as puncture
    sets, so they form a forest under inclusion.  Each curve's region is
    bounded by the curve itself, its immediate children, and the punctures
    not claimed by a child; the outer region adds the disk boundary.  Every
    region of a pants decomposition must have exactly three boundaries.
    """
    n = p.n
    sets = [frozenset(encircled_punctures(c)) for c in p.curves]
    order = sorted(range(len(sets)), key=lambda idx: len(sets[idx]))
    parent: dict[int, int | None] = {}
    for pos, idx in enumerate(order):
        parent[idx] = None
        for other in order[pos + 1:]:
            if sets[idx] < sets[other]:
                parent[idx] = other
                break
    regions = []
    for idx, s in enumerate(sets):
        children = [k for k in range(len(sets)) if parent[k] == idx]
        direct = s - frozenset().union(*(sets[k] for k in children)) if children else s
        regions.append(
            {
                "curve": p.curves[idx].token,
                "boundaries": 1 + len(children) + len(direct),
                "child_curves": [p.curves[k].token for k in children],
                "punctures": sorted(direct),
            }
        )
    roots = [k for k in range(len(sets)) if parent[k] is None]
    outside = set(range(n)) - set().union(*sets) if sets else set(range(n))
    regions.append(
        {
            "curve": None,  # outer region, bounded by the disk boundary q
            "boundaries": 1 + len(roots) + len(outside),
            "child_curves": [p.curves[k].token for k in roots],
            "punctures": sorted(outside),
        }
    )
    return regions


def pants_count(p: PantsDecomposition) -> int:
    """Number of complementary regions; must equal n-1 with all pants."""
    regions = pants_regions(p)
    bad = [r for r in regions if r["boundaries"] != 3]
    if bad:
        raise PantsError(
            f"region at {bad[0]['curve'] or 'outer boundary'} has "
            f"{bad[0]['boundaries']} boundaries, expected 3"
        )
    return len(regions)


@dataclass(frozen=True)
class Move:
    step: int
    removed: Curve
    added: Curve

    def to_json(self) -> dict:
        return {"step": self.step, "out": self.removed.token, "in": self.added.token}


@dataclass(frozen=True)
class PantsPath:
    """Certified path in the pants graph from P_1 to P_{2n+1-l}."""

    n: int
    l: int
    steps: tuple[PantsDecomposition, ...]
    moves: tuple[Move, ...] = field(default=())

    @property
    def length(self) -> int:
        return len(self.moves)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "l": self.l,
            "steps": [s.tokens() for s in self.steps],
            "moves": [m.to_json() for m in self.moves],
        }


def _check_parameters(n: int, l: int) -> None:
    if l < 1:
        raise PathError(f"need l >= 1, got {l}")
    if n < 4:
        raise PathError(f"need n >= 4, got {n}")
    if n % l != 0:
        raise PathError(f"l={l} does not divide n={n}")


def build_path(n: int, l: int) -> PantsPath:
    """Compose the sweeps P_i -> P_{i+1} for i = 1 .. 2n-l and certify
    every step.  Raises with the step index on any certification failure."""
    _check_parameters(n, l)
    steps: list[PantsDecomposition] = [standard_decomposition(1, n)]
    moves: list[Move] = []
    for i in range(1, 2 * n - l + 1):
        for k in range(1, n - 1):
            nxt = interpolant(i, k, n)
            cert = is_A_move(steps[-1], nxt)
            if not cert:
                raise PathError(
                    f"step {len(moves)} (P_{i}^{k}) is not an A-move: {cert.reason}"
                )
            moves.append(Move(step=len(moves), removed=cert.removed, added=cert.added))
            steps.append(nxt)
    expected = (2 * n - l) * (n - 2)
    if len(moves) != expected:
        raise PathError(f"path length {len(moves)} != (2n-l)(n-2) = {expected}")

    # endpoint: the last decomposition must be the rotated image of the first
    shift = 2 * l
    image = frozenset(((c.i - shift) % (2 * n), c.j) for c in steps[0].curves)
    if image != steps[-1].class_set:
        raise PathError("endpoint decomposition is not the rotation of the start")

    persistent = steps[0].class_set
    for s in steps[1:]:
        persistent = persistent & s.class_set
    if persistent:
        raise PathError(f"curve classes {sorted(persistent)} persist along the path")
    return PantsPath(n=n, l=l, steps=tuple(steps), moves=tuple(moves))
