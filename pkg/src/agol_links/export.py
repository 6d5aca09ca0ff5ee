"""Standard knot codes (PD, Gauss, DT) and schematic SVG for closed braids.

Conventions, fixed once and documented in the README:

* Strands are directed downward through the word; the closure identifies
  the bottom of the word with the top, slot by slot.
* A positive letter k means the strand entering at slot k-1 (the "left"
  slot; for the cyclic letter n, slot n-1) passes over the strand entering
  at slot k mod n.  Both strands exchange slots.
* PD tuples list the four incident arcs counterclockwise starting from the
  incoming under-strand, with the plane oriented so slots increase to the
  right and time increases downward.
* Arc labels are assigned 1..2c along each component in traversal order.
* DT: passages are numbered along the knot; each crossing pairs one odd
  and one even label; the sequence lists, for odd labels in order, the
  paired even label, negated when the even passage goes over.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass

from .diagram import LinkDiagram
from .errors import ExportError
from .link_template import LinkTemplate

EXPAND_CROSSING_LIMIT = 500


@dataclass(frozen=True)
class Passage:
    """One strand passing through one crossing."""

    crossing: int  # position of the letter in the word
    entry_slot: int
    is_over: bool
    in_arc: int
    out_arc: int


@dataclass(frozen=True)
class PDCode:
    crossings: tuple[tuple[int, int, int, int], ...]

    @property
    def arc_count(self) -> int:
        return 2 * len(self.crossings)

    def validate(self) -> None:
        counts: dict[int, int] = {}
        for tup in self.crossings:
            for arc in tup:
                counts[arc] = counts.get(arc, 0) + 1
        expected = set(range(1, self.arc_count + 1))
        if set(counts) != expected or any(v != 2 for v in counts.values()):
            raise ExportError("PD arc labels must be 1..2c, each appearing twice")

    def to_text(self) -> str:
        return "".join(f"X({a},{b},{c},{d})\n" for a, b, c, d in self.crossings)


@dataclass(frozen=True)
class GaussCode:
    """Per-component sequences of (crossing id, is_over, sign) visits."""

    components: tuple[tuple[tuple[int, bool, int], ...], ...]

    def to_text(self) -> str:
        lines = []
        for comp in self.components:
            lines.append(" ".join(
                f"{'O' if over else 'U'}{cid}{'+' if sign > 0 else '-'}"
                for cid, over, sign in comp
            ))
        return "\n".join(lines) + "\n"


def _crossing_slots(letter: int, n: int) -> tuple[int, int]:
    k = abs(letter)
    return k - 1, k % n


def _trace(d: LinkDiagram) -> tuple[list[list[Passage]], int]:
    """Walk every component, assigning arc labels along the way.

    Returns the per-component passage lists and the number of crossing-free
    closed components (slots never involved in any crossing).
    """
    n = d.strand_count
    events_by_slot: dict[int, list[int]] = {p: [] for p in range(n)}
    for t, letter in enumerate(d.word):
        a, b = _crossing_slots(letter, n)
        events_by_slot[a].append(t)
        events_by_slot[b].append(t)

    def next_event(slot: int, after: int) -> int:
        events = events_by_slot[slot]  # appended in word order, hence sorted
        idx = bisect.bisect_right(events, after)
        return events[idx] if idx < len(events) else events[0]  # closure wraps

    visited: set[tuple[int, int]] = set()
    components: list[list[Passage]] = []
    arc_counter = 0
    for t0, letter in enumerate(d.word):
        for slot0 in _crossing_slots(letter, n):
            if (t0, slot0) in visited:
                continue
            first_arc = arc_counter + 1
            passages: list[Passage] = []
            t, slot = t0, slot0
            while True:
                visited.add((t, slot))
                a, b = _crossing_slots(d.word[t], n)
                is_over = (slot == a) == (d.word[t] > 0)
                arc_counter += 1
                passages.append(Passage(
                    crossing=t,
                    entry_slot=slot,
                    is_over=is_over,
                    in_arc=arc_counter,
                    out_arc=arc_counter + 1,
                ))
                slot = b if slot == a else a
                t = next_event(slot, t)
                if (t, slot) == (t0, slot0):
                    break
            # close the component: the final arc is the starting arc
            last = passages[-1]
            passages[-1] = Passage(last.crossing, last.entry_slot, last.is_over,
                                   last.in_arc, first_arc)
            components.append(passages)
    free_components = sum(1 for p in range(n) if not events_by_slot[p])
    return components, free_components


def to_pd(d: LinkDiagram) -> PDCode:
    """PD code of the closed-braid diagram.  Crossing-free unknot components
    carry no arcs and are omitted (an empty word gives an empty code)."""
    components, _ = _trace(d)
    by_crossing: dict[int, dict[int, Passage]] = {}
    for comp in components:
        for passage in comp:
            by_crossing.setdefault(passage.crossing, {})[passage.entry_slot] = passage
    tuples = []
    n = d.strand_count
    for t in sorted(by_crossing):
        a, b = _crossing_slots(d.word[t], n)
        pa, pb = by_crossing[t][a], by_crossing[t][b]
        if d.word[t] > 0:
            tup = (pb.in_arc, pa.in_arc, pb.out_arc, pa.out_arc)
        else:
            tup = (pa.in_arc, pb.out_arc, pa.out_arc, pb.in_arc)
        tuples.append(tup)
    code = PDCode(tuple(tuples))
    code.validate()
    return code


def to_gauss(d: LinkDiagram) -> GaussCode:
    """Gauss code; crossing ids are renumbered 1.. in first-visit order and
    crossing-free components appear as empty sequences."""
    components, free = _trace(d)
    ids: dict[int, int] = {}
    out = []
    for comp in components:
        visits = []
        for passage in comp:
            if passage.crossing not in ids:
                ids[passage.crossing] = len(ids) + 1
            sign = 1 if d.word[passage.crossing] > 0 else -1
            visits.append((ids[passage.crossing], passage.is_over, sign))
        out.append(tuple(visits))
    out.extend(() for _ in range(free))
    return GaussCode(tuple(out))


def to_dt(d: LinkDiagram) -> tuple[int, ...]:
    """DT sequence; defined for knots only."""
    components, free = _trace(d)
    total = len(components) + free
    if total != 1:
        raise ExportError(f"DT codes are knot-only; diagram has {total} components")
    passages = components[0]
    labels: dict[int, list[tuple[int, bool]]] = {}
    for count, passage in enumerate(passages, start=1):
        labels.setdefault(passage.crossing, []).append((count, passage.is_over))
    sequence = []
    pairs = []
    for crossing, visits in labels.items():
        if len(visits) != 2:
            raise ExportError(f"crossing {crossing} visited {len(visits)} times")
        (l1, over1), (l2, over2) = visits
        odd, even = (l1, l2) if l1 % 2 == 1 else (l2, l1)
        even_label, even_over = (l2, over2) if l1 % 2 == 1 else (l1, over1)
        if odd % 2 == 0 or even % 2 == 1:
            raise ExportError(f"crossing {crossing} has labels of equal parity")
        pairs.append((odd, -even_label if even_over else even_label))
    pairs.sort()
    sequence = tuple(value for _, value in pairs)
    return sequence


def dt_to_text(sequence: tuple[int, ...]) -> str:
    return ",".join(str(v) for v in sequence) + "\n"


# --- SVG rendering ---------------------------------------------------------

_SLOT_SPACING = 40
_ROW_HEIGHT = 34
_MARGIN = 30


def _fmt(value: float) -> str:
    return f"{value:.2f}"


def render_svg(d: LinkDiagram, t: LinkTemplate | None = None,
               expand_twists: bool = False) -> str:
    """Deterministic schematic: vertical strands, one labeled box per block.

    With ``expand_twists`` and at most EXPAND_CROSSING_LIMIT crossings, every
    letter is drawn as an explicit crossing glyph instead.
    """
    n = d.strand_count
    if expand_twists and d.crossing_total <= EXPAND_CROSSING_LIMIT:
        return _render_expanded(d)
    rows = max(len(d.blocks), 1)
    width = 2 * _MARGIN + (n - 1) * _SLOT_SPACING
    height = 2 * _MARGIN + rows * _ROW_HEIGHT
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
    ]
    title = f"n={n}"
    if t is not None:
        title += f" l={t.l} loops={t.loop_count}"
    parts.append(f"<title>{title}</title>")
    for p in range(n):
        x = _MARGIN + p * _SLOT_SPACING
        parts.append(
            f'<line x1="{x}" y1="{_MARGIN / 2:.1f}" x2="{x}" '
            f'y2="{height - _MARGIN / 2:.1f}" stroke="black" stroke-width="1.5"/>'
        )
    fill_by_kind = {"monodromy": "#dddddd", "loop": "#cfe2ff", "augmentation": "#ffe0b2"}
    for row, block in enumerate(d.blocks):
        y = _MARGIN + row * _ROW_HEIGHT
        window = block.window
        wrapped = len(window) < n and window[-1] < window[0]
        if wrapped:
            x0, x1 = _MARGIN - 10, _MARGIN + (n - 1) * _SLOT_SPACING + 10
            dash = ' stroke-dasharray="6,3"'
        else:
            x0 = _MARGIN + window[0] * _SLOT_SPACING - 10
            x1 = _MARGIN + window[-1] * _SLOT_SPACING + 10
            dash = ""
        parts.append(
            f'<rect x="{x0}" y="{y}" width="{x1 - x0}" height="{_ROW_HEIGHT - 8}" '
            f'fill="{fill_by_kind.get(block.kind, "#eeeeee")}" '
            f'stroke="black"{dash}/>'
        )
        label = block.label
        if wrapped:
            label += f" [cyclic window {','.join(map(str, window))}]"
        parts.append(
            f'<text x="{x0 + 4}" y="{y + 17}" font-family="monospace" '
            f'font-size="10">{label}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _render_expanded(d: LinkDiagram) -> str:
    """Draw each braid letter as an explicit crossing glyph."""
    n = d.strand_count
    rows = len(d.word)
    width = 2 * _MARGIN + (n - 1) * _SLOT_SPACING
    height = 2 * _MARGIN + max(rows, 1) * _ROW_HEIGHT
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
        f"<title>n={n} crossings={rows}</title>",
    ]

    def x_of(slot: int) -> float:
        return _MARGIN + slot * _SLOT_SPACING

    for t, letter in enumerate(d.word):
        y0 = _MARGIN + t * _ROW_HEIGHT
        y1 = y0 + _ROW_HEIGHT
        a, b = _crossing_slots(letter, n)
        for p in range(n):
            if p not in (a, b):
                parts.append(
                    f'<line x1="{_fmt(x_of(p))}" y1="{y0}" x2="{_fmt(x_of(p))}" '
                    f'y2="{y1}" stroke="black" stroke-width="1.5"/>'
                )
        xa, xb = x_of(a), x_of(b)
        if b < a:  # cyclic letter: mark with dashes instead of a true wrap
            xa, xb = x_of(b), x_of(a)
        over_first = letter > 0
        # over strand drawn whole, under strand broken at the middle
        mx, my = (xa + xb) / 2, (y0 + y1) / 2
        over = (xa, y0, xb, y1) if over_first else (xb, y0, xa, y1)
        under = (xb, y0, xa, y1) if over_first else (xa, y0, xb, y1)
        dash = ' stroke-dasharray="4,2"' if b < a else ""
        parts.append(
            f'<line x1="{_fmt(under[0])}" y1="{under[1]}" x2="{_fmt(mx - 6)}" '
            f'y2="{_fmt(my - 3)}" stroke="black" stroke-width="1.5"{dash}/>'
        )
        parts.append(
            f'<line x1="{_fmt(mx + 6)}" y1="{_fmt(my + 3)}" x2="{_fmt(under[2])}" '
            f'y2="{under[3]}" stroke="black" stroke-width="1.5"{dash}/>'
        )
        parts.append(
            f'<line x1="{_fmt(over[0])}" y1="{over[1]}" x2="{_fmt(over[2])}" '
            f'y2="{over[3]}" stroke="black" stroke-width="1.5"{dash}/>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
