"""Filling systems, twist-insertion diagrams, and the crossing census."""

import math

import pytest

from agol_links.diagram import (
    FillingSystem,
    LinkDiagram,
    bridge_upper_bound,
    crossing_census,
    default_slopes,
    fill,
    slope_range,
    verify_bound,
)
from agol_links.errors import SlopeError
from agol_links.link_template import build_template


@pytest.mark.parametrize(
    "n,l,expected",
    [(6, 1, (70, 71)), (4, 4, (26, 27)), (4, 1, (44, 45)), (8, 2, (88, 89))],
)
def test_slope_range(n, l, expected):
    assert slope_range(n, l) == expected
    lo, hi = expected
    assert lo >= 2 * math.pi * (2 * n - l)
    assert hi <= 2 * math.pi * (2 * n - l) + 2


def test_default_slopes_are_uniform():
    t = build_template(6, 1)
    f = default_slopes(t)
    assert f.s_q == 70
    assert set(f.s_loops.values()) == {70}
    assert len(f.s_loops) == t.loop_count
    upper = default_slopes(t, at_upper=True)
    assert upper.s_q == 71
    assert set(upper.s_loops.values()) == {71}


def test_filling_system_rejects_zero_slopes():
    t = build_template(4, 1)
    with pytest.raises(SlopeError):
        FillingSystem(s_q=0, s_loops={loop: 1 for loop in t.loops})
    f = FillingSystem(
        s_q=1,
        s_loops={loop: 1 for loop in t.loops},
        perturbations={t.loops[0]: -1},  # effective slope 0
    )
    with pytest.raises(SlopeError):
        f.slope(t.loops[0])
    assert f.slope(t.loops[1]) == 1


def test_filling_system_rejects_missing_loop():
    t = build_template(4, 1)
    f = FillingSystem(s_q=1, s_loops={loop: 1 for loop in t.loops[:-1]})
    with pytest.raises(SlopeError):
        f.slope(t.loops[-1])


def test_rotation_unit_permutation():
    # one positive rotation moves the strand in slot k to slot k+1 mod n
    n = 5
    unit = LinkDiagram(strand_count=n, word=tuple(range(n - 1, 0, -1)))
    assert unit.permutation() == tuple((k + 1) % n for k in range(n))


def test_monodromy_block_crossings():
    for n, l in [(4, 1), (6, 1), (6, 3), (8, 2)]:
        t = build_template(n, l)
        d = fill(t, default_slopes(t))
        monodromy = next(b for b in d.blocks if b.kind == "monodromy")
        assert monodromy.end - monodromy.start == (n - 1) * (2 * n - l)


def test_fill_word_matches_census_and_blocks():
    t = build_template(6, 1)
    f = default_slopes(t)
    d = fill(t, f)
    assert d.crossing_total == crossing_census(t, f)
    # blocks tile the word with no gaps
    cursor = 0
    for block in d.blocks:
        assert block.start == cursor
        cursor = block.end
    assert cursor == len(d.word)
    kinds = [b.kind for b in d.blocks]
    assert kinds[0] == "monodromy" and kinds[-1] == "augmentation"
    assert kinds.count("loop") == t.loop_count


def test_fill_component_count():
    for n, l in [(4, 1), (4, 2), (4, 4), (6, 2), (6, 3)]:
        t = build_template(n, l)
        d = fill(t, default_slopes(t))
        assert d.component_count() == l
        assert bridge_upper_bound(d) == n


def test_census_tracks_slope_changes():
    t = build_template(4, 2)
    base = default_slopes(t)
    d = fill(t, base)
    assert d.crossing_total == crossing_census(t, base)
    perturbed = FillingSystem(
        s_q=base.s_q,
        s_loops=dict(base.s_loops),
        perturbations={t.loops[0]: 1, t.loops[1]: -1},
    )
    dp = fill(t, perturbed)
    assert dp.crossing_total == crossing_census(t, perturbed)
    j0, j1 = t.loops[0].j, t.loops[1].j
    assert dp.crossing_total - d.crossing_total == j0 * (j0 - 1) - j1 * (j1 - 1)


def test_negative_slopes_count_by_magnitude():
    t = build_template(4, 1)
    f = FillingSystem(s_q=-2, s_loops={loop: -1 for loop in t.loops})
    d = fill(t, f)
    assert d.crossing_total == crossing_census(t, f)
    assert all(letter != 0 for letter in d.word)
    assert any(letter < 0 for letter in d.word)


def test_verify_bound_sample_values():
    t = build_template(6, 1)
    report = verify_bound(t, default_slopes(t))
    assert report.passed
    assert report.bound == pytest.approx(4 * math.pi * 6**5)
    assert report.bound == pytest.approx(97716.1, abs=0.05)
    assert report.margin == report.bound - report.census
    assert report.slope_range == (70, 71)
    data = report.to_json()
    assert data["census"] == report.census and data["passed"] is True


def test_braid_text_format():
    d = LinkDiagram(strand_count=2, word=(1, 1, 1))
    text = d.to_braid_text()
    lines = text.splitlines()
    assert lines[0] == "n=2 l=1 components=1"
    assert lines[1] == "1 1 1"
