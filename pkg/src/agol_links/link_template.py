"""Combinatorial model of the drilled augmented braid.

The mapping torus of the disk rotation by -l/n turns is the exterior of a
closed n-braid with l components, augmented by the outer circle.  Running
the pants path drills one loop per step: the loop inherits the replaced
curve's height index i, width j, and cyclic strand interval.  Loops with
equal i share a fiber, where they are pairwise disjoint.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .disk_curves import Curve, encircled_punctures, geometric_intersection
from .errors import SchemaError, TemplateError
from .pants_path import build_path

DEFAULT_EXTRA_FULL_TWISTS = 2  # one extra 4*pi counter-clockwise twist pair


@dataclass(frozen=True)
class Loop:
    """A drilled loop: fiber height i, width j, encircled strand interval."""

    i: int
    j: int
    strands: tuple[int, ...]
    step: int

    def to_json(self) -> dict:
        return {"i": self.i, "j": self.j, "strands": list(self.strands), "step": self.step}

    @classmethod
    def from_json(cls, data: dict) -> "Loop":
        return cls(
            i=int(data["i"]),
            j=int(data["j"]),
            strands=tuple(int(s) for s in data["strands"]),
            step=int(data["step"]),
        )


@dataclass(frozen=True)
class LinkTemplate:
    n: int
    l: int
    monodromy_shift: int
    loops: tuple[Loop, ...]
    extra_full_twists: int = DEFAULT_EXTRA_FULL_TWISTS
    has_augmentation: bool = True

    @property
    def loop_count(self) -> int:
        return len(self.loops)

    def width_census(self) -> dict[int, int]:
        census: dict[int, int] = {}
        for loop in self.loops:
            census[loop.j] = census.get(loop.j, 0) + 1
        return census

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "l": self.l,
            "monodromy_shift": self.monodromy_shift,
            "extra_full_twists": self.extra_full_twists,
            "has_augmentation": self.has_augmentation,
            "loops": [loop.to_json() for loop in self.loops],
        }

    @classmethod
    def from_json(cls, data: dict) -> "LinkTemplate":
        for key in ("n", "l", "monodromy_shift", "extra_full_twists",
                    "has_augmentation", "loops"):
            if key not in data:
                raise SchemaError(f"/{key}", "missing field")
        if not isinstance(data["loops"], list):
            raise SchemaError("/loops", "expected a list")
        loops = []
        for idx, raw in enumerate(data["loops"]):
            for key in ("i", "j", "strands", "step"):
                if key not in raw:
                    raise SchemaError(f"/loops/{idx}/{key}", "missing field")
            loops.append(Loop.from_json(raw))
        return cls(
            n=int(data["n"]),
            l=int(data["l"]),
            monodromy_shift=int(data["monodromy_shift"]),
            extra_full_twists=int(data["extra_full_twists"]),
            has_augmentation=bool(data["has_augmentation"]),
            loops=tuple(loops),
        )


def component_count(n: int, shift: int) -> int:
    """Cycles of the strand permutation k -> k - shift mod n."""
    if n < 1:
        raise TemplateError(f"need n >= 1, got {n}")
    return math.gcd(n, shift) if shift else n


def build_template(n: int, l: int,
                   extra_full_twists: int = DEFAULT_EXTRA_FULL_TWISTS) -> "LinkTemplate":
    """Enumerate the drilled loops from the certified pants path."""
    path = build_path(n, l)  # validates n, l
    loops = tuple(
        Loop(
            i=move.removed.i,
            j=move.removed.j,
            strands=encircled_punctures(move.removed),
            step=move.step,
        )
        for move in path.moves
    )
    template = LinkTemplate(n=n, l=l, monodromy_shift=l, loops=loops,
                            extra_full_twists=extra_full_twists)
    problems = template_problems(template, rebuild=False)
    if problems:
        pointer, message = problems[0]
        raise TemplateError(f"{pointer}: {message}")
    return template


def loop_heights(t: LinkTemplate) -> dict[int, list[Loop]]:
    """Group loops by fiber index i; loops sharing a fiber must be disjoint."""
    fibers: dict[int, list[Loop]] = {}
    for loop in t.loops:
        fibers.setdefault(loop.i, []).append(loop)
    for i, loops in fibers.items():
        for a_idx in range(len(loops)):
            for b_idx in range(a_idx + 1, len(loops)):
                a, b = loops[a_idx], loops[b_idx]
                ca = Curve(a.i, a.j, t.n)
                cb = Curve(b.i, b.j, t.n)
                if geometric_intersection(ca, cb) != 0:
                    raise TemplateError(
                        f"loops of widths {a.j} and {b.j} intersect in fiber {i}"
                    )
        # deterministic layering for the diagram: widest first
        loops.sort(key=lambda lp: (-lp.j, lp.step))
    return dict(sorted(fibers.items()))


def template_problems(t: LinkTemplate, rebuild: bool = True) -> list[tuple[str, str]]:
    """All invariant violations of a template, as (json pointer, message).

    Checks both local field consistency and agreement with a fresh rebuild,
    so any single-field tampering of a persisted template is reported.
    """
    problems: list[tuple[str, str]] = []
    if t.n < 4:
        problems.append(("/n", f"need n >= 4, got {t.n}"))
    if t.l < 1 or (t.n >= 1 and t.n % max(t.l, 1) != 0):
        problems.append(("/l", f"l={t.l} must be a positive divisor of n={t.n}"))
    if problems:
        return problems
    if t.monodromy_shift != t.l:
        problems.append(
            ("/monodromy_shift", f"expected {t.l}, got {t.monodromy_shift}")
        )
    if t.extra_full_twists < 0:
        problems.append(("/extra_full_twists", "must be non-negative"))
    if not t.has_augmentation:
        problems.append(("/has_augmentation", "the outer circle is required"))

    m = (2 * t.n - t.l) * (t.n - 2)
    if len(t.loops) != m:
        problems.append(("/loops", f"expected {m} loops, got {len(t.loops)}"))
    for idx, loop in enumerate(t.loops):
        ptr = f"/loops/{idx}"
        try:
            curve = Curve(loop.i, loop.j, t.n)
        except ValueError as exc:
            problems.append((ptr, str(exc)))
            continue
        if loop.strands != encircled_punctures(curve):
            problems.append(
                (f"{ptr}/strands",
                 f"expected {list(encircled_punctures(curve))}, got {list(loop.strands)}")
            )
        if not 0 <= loop.step < m:
            problems.append((f"{ptr}/step", f"step {loop.step} outside 0..{m - 1}"))
    steps = [loop.step for loop in t.loops]
    if len(set(steps)) != len(steps):
        problems.append(("/loops", "duplicate step indices"))

    census = t.width_census()
    for j in range(2, t.n):
        if census.get(j, 0) != 2 * t.n - t.l:
            problems.append(
                ("/loops", f"width {j} has {census.get(j, 0)} loops, "
                           f"expected {2 * t.n - t.l}")
            )
    if component_count(t.n, t.monodromy_shift) != t.l:
        problems.append(
            ("/monodromy_shift",
             f"braid closure has {component_count(t.n, t.monodromy_shift)} "
             f"components, expected {t.l}")
        )
    if problems or not rebuild:
        return problems

    reference = build_template(t.n, t.l, t.extra_full_twists)
    if reference.loops != t.loops:
        for idx, (got, want) in enumerate(zip(t.loops, reference.loops)):
            if got != want:
                problems.append(
                    (f"/loops/{idx}", f"loop {got} differs from rebuilt {want}")
                )
                break
        else:
            problems.append(("/loops", "loop list differs from rebuilt template"))
    return problems
