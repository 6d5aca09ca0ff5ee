"""Pants decompositions, A-move certification, and the certified path."""

import pytest

from agol_links.disk_curves import beta_curve
from agol_links.errors import AmbientMismatchError, PantsError, PathError
from agol_links.pants_path import (
    PantsDecomposition,
    build_path,
    interpolant,
    is_A_move,
    is_S_move,
    pants_count,
    pants_regions,
    standard_decomposition,
)


def test_standard_decomposition_tokens():
    assert standard_decomposition(1, 6).tokens() == ["b1_2", "b1_4", "b2_3", "b2_5"]
    assert standard_decomposition(1, 4).tokens() == ["b1_2", "b2_3"]


@pytest.mark.parametrize("n", [4, 5, 6, 8, 9])
def test_standard_decomposition_size(n):
    for i in range(1, 2 * n + 1):
        assert len(standard_decomposition(i, n).curves) == n - 2


def test_decomposition_rejects_wrong_count():
    with pytest.raises(PantsError):
        PantsDecomposition((beta_curve(1, 2, 6),), 6)


def test_decomposition_rejects_duplicates_and_crossings():
    n = 6
    good = standard_decomposition(1, n)
    with pytest.raises(PantsError):
        # same interval twice (different copies of one class)
        PantsDecomposition((beta_curve(13, 2, n),) + good.curves[:3], n)
    with pytest.raises(PantsError):
        # b5_2 = {2,3} crosses b1_4 = {5,0,1,2}
        PantsDecomposition((beta_curve(5, 2, n),) + good.curves[1:], n)


def test_decomposition_rejects_ambient_mismatch():
    with pytest.raises(AmbientMismatchError):
        PantsDecomposition((beta_curve(1, 2, 8), beta_curve(2, 3, 8)), 4)


def test_interpolant_endpoints():
    n = 6
    for i in (1, 3, 7):
        assert interpolant(i, 0, n).class_set == standard_decomposition(i, n).class_set
        assert (
            interpolant(i, n - 2, n).class_set
            == standard_decomposition(i + 1, n).class_set
        )
    with pytest.raises(PathError):
        interpolant(1, n - 1, n)


def test_interpolants_are_A_moves():
    n = 6
    prev = standard_decomposition(1, n)
    for k in range(1, n - 1):
        nxt = interpolant(1, k, n)
        cert = is_A_move(prev, nxt)
        assert cert
        assert cert.removed is not None and cert.added is not None
        assert cert.removed.class_key != cert.added.class_key
        prev = nxt


def test_is_A_move_rejects_identity_and_double_swap():
    n = 6
    p = standard_decomposition(1, n)
    assert not is_A_move(p, p)
    assert "no curve" in is_A_move(p, p).reason
    q = standard_decomposition(2, n)  # replaces all four curves
    assert not is_A_move(p, q)


def test_is_S_move_always_false():
    p = standard_decomposition(1, 6)
    q = interpolant(1, 1, 6)
    assert is_S_move(p, q) is False
    assert is_S_move(p, p) is False


@pytest.mark.parametrize("n", [4, 5, 6, 7, 8, 9])
def test_pants_regions_all_three_holed(n):
    for i in (1, 2, n, 2 * n):
        p = standard_decomposition(i, n)
        regions = pants_regions(p)
        assert all(r["boundaries"] == 3 for r in regions)
        assert pants_count(p) == n - 1


def test_pants_regions_account_for_every_puncture():
    p = standard_decomposition(1, 6)
    regions = pants_regions(p)
    claimed = [k for r in regions for k in r["punctures"]]
    assert sorted(claimed) == list(range(6))


@pytest.mark.parametrize(
    "n,l,expected",
    [(6, 1, 44), (4, 4, 8), (8, 2, 84), (4, 1, 14), (4, 2, 12)],
)
def test_path_lengths(n, l, expected):
    path = build_path(n, l)
    assert path.length == expected == (2 * n - l) * (n - 2)
    assert len(path.steps) == expected + 1


def test_path_endpoint_is_rotated_start():
    path = build_path(6, 1)
    shift = 2 * 1
    image = {((c.i - shift) % 12, c.j) for c in path.steps[0].curves}
    assert image == set(path.steps[-1].class_set)


def test_path_has_no_persistent_class():
    path = build_path(4, 2)
    persistent = set(path.steps[0].class_set)
    for step in path.steps[1:]:
        persistent &= set(step.class_set)
    assert not persistent


def test_path_moves_record_the_replacement():
    path = build_path(4, 1)
    for move, before, after in zip(path.moves, path.steps, path.steps[1:]):
        assert move.removed.class_key in before.class_set
        assert move.removed.class_key not in after.class_set
        assert move.added.class_key in after.class_set


@pytest.mark.parametrize("n,l", [(6, 4), (3, 1), (4, 0), (5, 2)])
def test_path_rejects_bad_parameters(n, l):
    with pytest.raises(PathError):
        build_path(n, l)


def test_path_json_shape():
    data = build_path(4, 1).to_json()
    assert data["n"] == 4 and data["l"] == 1
    assert len(data["moves"]) == 14
    assert data["steps"][0] == ["b1_2", "b2_3"]
    assert {"step", "out", "in"} <= set(data["moves"][0])
