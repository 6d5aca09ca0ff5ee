"""Dehn filling as twist insertion: explicit closed-braid diagrams.

A 1/s filling on a loop of width j inserts s full twists on the j strands
it encircles; the monodromy and the outer circle contribute powers of the
one-step rotation braid.  Words use the ordinary generators only: letter k
in 1..n-1 crosses strand slots k-1 and k, and the closure identifies the
bottom of the word with the top, so every diagram is planar.

Loops may encircle a *cyclic* window of strands that wraps past slot n-1.
A full twist on a wrapped window is realized by conjugation: rotate the
wrapped window into contiguous position, twist there, rotate back.  The
conjugating rotations cost exactly 2*(n - start)*(n-1) extra crossings per
wrapped loop and cancel in the closure permutation, so component counts
are unaffected and the crossing census stays in closed form.

With the default convention of two extra counter-clockwise full twists,
the monodromy block is the (2n-l)-th power of the rotation braid and
contributes exactly (n-1)(2n-l) crossings.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping

from .errors import SlopeError, TemplateError
from .link_template import LinkTemplate, Loop, loop_heights

BOUND_COEFFICIENT = 4 * math.pi  # crossing bound is 4*pi*n^5


@dataclass(frozen=True)
class FillingSystem:
    """Integer twist counts: slope 1/s on each loop and on the outer circle."""

    s_q: int
    s_loops: Mapping[Loop, int]
    perturbations: Mapping[Loop, int] = field(default_factory=dict)
    range_lo: int | None = None  # audit: endpoints of the generic slope range
    range_hi: int | None = None

    def __post_init__(self):
        object.__setattr__(self, "s_loops", MappingProxyType(dict(self.s_loops)))
        object.__setattr__(self, "perturbations",
                           MappingProxyType(dict(self.perturbations)))
        if self.s_q == 0:
            raise SlopeError("slope 1/0 on the outer circle is the unfilled slope")

    def slope(self, loop: Loop) -> int:
        if loop not in self.s_loops:
            raise SlopeError(f"no slope assigned to loop at step {loop.step}")
        s = self.s_loops[loop] + self.perturbations.get(loop, 0)
        if s == 0:
            raise SlopeError(f"zero effective slope on loop at step {loop.step}")
        return s


def slope_range(n: int, l: int) -> tuple[int, int]:
    """Integer endpoints of the generic range 2*pi*(2n-l) .. 2*pi*(2n-l)+2."""
    lo = 2 * math.pi * (2 * n - l)
    return (math.ceil(lo), math.floor(lo + 2))


def default_slopes(t: LinkTemplate, at_upper: bool = False) -> FillingSystem:
    """Assign every boundary the same generic slope, perturbations zero."""
    lo, hi = slope_range(t.n, t.l)
    s = hi if at_upper else lo
    return FillingSystem(
        s_q=s,
        s_loops={loop: s for loop in t.loops},
        range_lo=lo,
        range_hi=hi,
    )


@dataclass(frozen=True)
class Block:
    """A contiguous run of braid letters from one construction stage."""

    kind: str  # "monodromy", "loop", or "augmentation"
    window: tuple[int, ...]  # strand slots, cyclic order
    start: int  # slice of the word
    end: int
    twists: int
    label: str


@dataclass(frozen=True)
class LinkDiagram:
    """Closed annular braid word with its block structure."""

    strand_count: int
    word: tuple[int, ...]
    blocks: tuple[Block, ...] = ()
    closed: bool = True

    def __post_init__(self):
        n = self.strand_count
        for letter in self.word:
            if letter == 0 or abs(letter) > n:
                raise ValueError(f"letter {letter} outside +-1..{n}")

    @property
    def crossing_total(self) -> int:
        return len(self.word)

    def permutation(self) -> tuple[int, ...]:
        """Slot each strand ends in, indexed by starting slot."""
        n = self.strand_count
        occupant = list(range(n))  # occupant[slot] = starting slot of that strand
        for letter in self.word:
            k = abs(letter)
            a, b = k - 1, k % n
            occupant[a], occupant[b] = occupant[b], occupant[a]
        perm = [0] * n
        for slot, start in enumerate(occupant):
            perm[start] = slot
        return tuple(perm)

    def component_labels(self) -> tuple[int, ...]:
        """Cycle label of each starting slot under the closure permutation."""
        perm = self.permutation()
        labels = [-1] * self.strand_count
        label = 0
        for start in range(self.strand_count):
            if labels[start] != -1:
                continue
            pos = start
            while labels[pos] == -1:
                labels[pos] = label
                pos = perm[pos]
            label += 1
        return tuple(labels)

    def component_count(self) -> int:
        return len(set(self.component_labels()))

    def to_braid_text(self, l: int | None = None) -> str:
        components = self.component_count() if l is None else l
        header = f"n={self.strand_count} l={components} components={components}"
        return header + "\n" + " ".join(str(v) for v in self.word) + "\n"


def _rotation_word(n: int, power: int) -> list[int]:
    """The rotation braid to the given power.

    One positive power is the counter-clockwise one-step rotation
    sigma_{n-1} ... sigma_1 (slot k moves to k+1); its n-th power is a full
    twist on all strands.  Negative powers invert letterwise.
    """
    if power >= 0:
        unit = list(range(n - 1, 0, -1))
    else:
        unit = [-k for k in range(1, n)]
    return unit * abs(power)


def _is_wrapped(window: tuple[int, ...]) -> bool:
    return window[-1] < window[0]


def _window_twist_word(n: int, window: tuple[int, ...], twists: int) -> list[int]:
    """Full twists on a cyclic window of j consecutive slots.

    A contiguous window starting at slot a twists in place: the j-th power
    of the window rotation, j(j-1) letters per twist.  A wrapped window is
    first rotated into contiguous position at slot 0 and rotated back
    afterwards, adding 2*(n-a)*(n-1) conjugation letters.
    """
    j = len(window)
    a = window[0]
    start = 0 if _is_wrapped(window) else a
    chain = [start + offset + 1 for offset in range(j - 1)]
    if twists < 0:
        chain = [-k for k in reversed(chain)]
    twist_word = chain * (j * abs(twists))
    if not _is_wrapped(window):
        return twist_word
    shift = n - a  # rotations taking slot a to slot 0
    return _rotation_word(n, shift) + twist_word + _rotation_word(n, -shift)


def conjugation_crossings(n: int, window: tuple[int, ...]) -> int:
    """Extra letters spent rotating a wrapped window into contiguous
    position and back; zero for contiguous windows."""
    return 2 * (n - window[0]) * (n - 1) if _is_wrapped(window) else 0


def fill(t: LinkTemplate, f: FillingSystem) -> LinkDiagram:
    """Produce the filled diagram: monodromy block, loop twist blocks in
    fiber order, then the outer-circle twists."""
    n = t.n
    word: list[int] = []
    blocks: list[Block] = []

    power = t.extra_full_twists * n - t.monodromy_shift
    start = len(word)
    word.extend(_rotation_word(n, power))
    blocks.append(Block(
        kind="monodromy",
        window=tuple(range(n)),
        start=start,
        end=len(word),
        twists=t.extra_full_twists,
        label=f"rotation^{power} (shift -{t.monodromy_shift}, "
              f"{t.extra_full_twists} full twists)",
    ))

    fibers = loop_heights(t)
    for i in sorted(fibers):
        for loop in fibers[i]:
            s = f.slope(loop)
            start = len(word)
            word.extend(_window_twist_word(n, loop.strands, s))
            blocks.append(Block(
                kind="loop",
                window=loop.strands,
                start=start,
                end=len(word),
                twists=s,
                label=f"{s} full twists on {loop.j} strands (fiber {loop.i})",
            ))

    start = len(word)
    word.extend(_rotation_word(n, n * f.s_q))
    blocks.append(Block(
        kind="augmentation",
        window=tuple(range(n)),
        start=start,
        end=len(word),
        twists=f.s_q,
        label=f"{f.s_q} full twists on all {n} strands",
    ))

    diagram = LinkDiagram(strand_count=n, word=tuple(word), blocks=tuple(blocks))
    if diagram.component_count() != t.l:
        raise TemplateError(
            f"filled diagram has {diagram.component_count()} components, "
            f"expected {t.l}"
        )
    return diagram


def crossing_census(t: LinkTemplate, f: FillingSystem) -> int:
    """Closed-form crossing count; must equal the fill word length exactly."""
    n = t.n
    monodromy = (n - 1) * abs(t.extra_full_twists * n - t.monodromy_shift)
    augmentation = abs(f.s_q) * n * (n - 1)
    loops = sum(
        abs(f.slope(loop)) * loop.j * (loop.j - 1)
        + conjugation_crossings(n, loop.strands)
        for loop in t.loops
    )
    return monodromy + augmentation + loops


def closed_form_estimate(n: int, l: int, multiplier_uses_l: bool) -> float:
    """Closed-form crossing estimate with every slope at the top of the
    generic range.  The slope multiplier can be read as 2*pi*(2n-1)+2 or as
    2*pi*(2n-l)+2 (matching the slope range); both variants are reported and
    both stay below 4*pi*n^5."""
    mult = 2 * math.pi * (2 * n - (l if multiplier_uses_l else 1)) + 2
    interval_sum = n * (n - 1) * (n - 2) // 3  # sum of j(j-1), j = 2..n-1
    return (n - 1) * (2 * n - l) + mult * n * (n - 1) + mult * interval_sum * (2 * n - l)


@dataclass(frozen=True)
class BoundReport:
    n: int
    l: int
    census: int
    bound: float
    margin: float
    passed: bool
    slope_range: tuple[int, int]
    estimate_multiplier_2n_minus_1: float
    estimate_multiplier_2n_minus_l: float

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "l": self.l,
            "census": self.census,
            "bound": self.bound,
            "margin": self.margin,
            "passed": self.passed,
            "slope_range": list(self.slope_range),
            "estimate_multiplier_2n_minus_1": self.estimate_multiplier_2n_minus_1,
            "estimate_multiplier_2n_minus_l": self.estimate_multiplier_2n_minus_l,
        }


def verify_bound(t: LinkTemplate, f: FillingSystem) -> BoundReport:
    """Check the crossing census against 4*pi*n^5 and report the margin."""
    census = crossing_census(t, f)
    bound = BOUND_COEFFICIENT * t.n**5
    return BoundReport(
        n=t.n,
        l=t.l,
        census=census,
        bound=bound,
        margin=bound - census,
        passed=census < bound,
        slope_range=slope_range(t.n, t.l),
        estimate_multiplier_2n_minus_1=closed_form_estimate(t.n, t.l, False),
        estimate_multiplier_2n_minus_l=closed_form_estimate(t.n, t.l, True),
    )


def bridge_upper_bound(d: LinkDiagram) -> int:
    """A closed braid on n strands is presentable with n bridges."""
    return d.strand_count
