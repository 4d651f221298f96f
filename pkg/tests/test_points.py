import random
from fractions import Fraction

import pytest

from nrgit.points import (
    ProjPoint,
    in_capped_basin,
    in_min_basin,
    in_min_weight_space,
    limit_point,
    point,
    truncate_jet,
)

from helpers import rep_61, rep_62

Z_MIN_61 = point((0, 0, 1), (0, 0, 1), (1, 0, 0))


def random_point_61(rng):
    def coords(n):
        while True:
            v = [Fraction(rng.randint(-20, 20), rng.randint(1, 20)) for _ in range(n)]
            if any(x != 0 for x in v):
                return v
    return point(coords(3), coords(3), coords(3))


def test_limit_of_borel_sample_is_min_vertex():
    rep = rep_61()
    x = point((1, 0, 1), (0, 1, 1), (1, 1, 0))
    lim = limit_point(rep, x)
    assert lim.projectively_equal(Z_MIN_61, rep)


def test_limit_fixes_min_locus_points():
    rep = rep_61()
    assert limit_point(rep, Z_MIN_61).projectively_equal(Z_MIN_61, rep)


def test_limit_62_example():
    rep = rep_62()
    x = point((1, 1, 0), (0, 1, 0), (0, 0, 1), (1, 0))
    expected = point((0, 1, 0), (0, 1, 0), (0, 0, 1), (1, 0))
    assert limit_point(rep, x).projectively_equal(expected, rep)


def test_limit_idempotent_on_samples():
    rep = rep_61()
    rng = random.Random(42)
    for _ in range(100):
        x = random_point_61(rng)
        p1 = limit_point(rep, x)
        p2 = limit_point(rep, p1)
        assert p2.projectively_equal(p1, rep)


def test_limit_invariant_under_positive_torus_scaling():
    # t in the grading direction rescales weight components; the minimal
    # present weight (hence the limit) is unchanged.
    rep = rep_61()
    rng = random.Random(31)
    for _ in range(50):
        x = random_point_61(rng)
        t = Fraction(rng.randint(1, 9), rng.randint(1, 9))
        scaled_factors = []
        for f_idx, fvec in enumerate(x.factors):
            wts = rep.factor_gm_weights(f_idx)
            scaled_factors.append([t ** int(w) * c for w, c in zip(wts, fvec)])
        tx = ProjPoint(factors=scaled_factors)
        assert limit_point(rep, tx).projectively_equal(limit_point(rep, x), rep)


def test_truncate_tower_law():
    rep = rep_62()
    rng = random.Random(5)
    ladder = [-2, 1, 4, 7]
    for _ in range(60):
        x = point(
            [Fraction(rng.randint(-9, 9)) for _ in range(3)] if rng.random() > 0.2 else (1, 1, 0),
            [Fraction(rng.randint(-9, 9)) or 1 for _ in range(3)],
            [Fraction(rng.randint(-9, 9)) or 1 for _ in range(3)],
            (1, rng.randint(-9, 9)),
        )
        for r in ladder:
            for rp in ladder:
                t1 = truncate_jet(rep, x, r)
                if t1 is None:
                    continue
                t2 = truncate_jet(rep, t1, rp)
                tmin = truncate_jet(rep, x, min(r, rp))
                if t2 is None:
                    assert tmin is None
                else:
                    assert tmin is not None
                    assert t2.projectively_equal(tmin, rep)


def test_truncate_extremes():
    rep = rep_62()
    x = point((1, 1, 0), (0, 1, 0), (0, 0, 1), (1, 0))
    assert truncate_jet(rep, x, 7) is x
    prof = x.support(rep)
    assert prof.min_weight == -2 and prof.max_weight == 1
    tmin = truncate_jet(rep, x, -2)
    assert tmin.projectively_equal(limit_point(rep, x), rep)
    assert truncate_jet(rep, x, -3) is None


def test_truncate_keeps_low_weight_components():
    rep = rep_62()
    # all three points distinct, spread over weights {-2, 1, 4}
    x = point((1, 1, 0), (1, 0, 1), (0, 1, 1), (1, 0))
    prof = x.support(rep)
    assert prof.present_weights == frozenset({-2, 1, 4})
    t = truncate_jet(rep, x, 1)
    assert not t.is_decomposable
    tp = t.support(rep)
    assert tp.present_weights == frozenset({-2, 1})


def test_min_weight_space_61():
    rep = rep_61()
    assert in_min_weight_space(rep, Z_MIN_61)
    assert not in_min_weight_space(rep, point((1, 0, 1), (0, 0, 1), (1, 0, 0)))


def test_min_weight_space_62():
    rep = rep_62()
    assert in_min_weight_space(rep, point((0, 1, 0), (0, 0, 1), (0, 1, 1), (1, 0)))
    assert not in_min_weight_space(rep, point((1, 1, 0), (0, 0, 1), (0, 1, 1), (1, 0)))


def test_min_basin_61_coordinate_description():
    # Exact agreement with: z1 != 0 != z2, a != 0, on 1000 seeded points.
    rep = rep_61()
    rng = random.Random(20240814)
    for _ in range(1000):
        x = random_point_61(rng)
        expected = x.factors[0][2] != 0 and x.factors[1][2] != 0 and x.factors[2][0] != 0
        assert in_min_basin(rep, x) == expected


def test_min_basin_contains_min_locus_and_respects_limits():
    rep = rep_61()
    assert in_min_basin(rep, Z_MIN_61)
    assert not in_min_basin(rep, point((1, 0, 0), (0, 0, 1), (1, 1, 0)))
    rng = random.Random(3)
    for _ in range(100):
        x = random_point_61(rng)
        if in_min_basin(rep, x):
            assert in_min_weight_space(rep, limit_point(rep, x))


def test_capped_basin():
    rep = rep_62()
    x = point((0, 1, 0), (0, 1, 0), (0, 1, 1), (1, 0))
    assert in_capped_basin(rep, x, 1)          # all support at -2
    assert in_capped_basin(rep, x, -2)
    y = point((1, 0, 0), (0, 1, 0), (0, 1, 1), (1, 0))
    assert not in_capped_basin(rep, y, 1)      # first point kills the basin
    # r = ladder max reduces to basin membership; r = ladder min to the fixed locus
    z = point((1, 1, 0), (0, 1, 0), (0, 0, 1), (1, 0))
    assert in_capped_basin(rep, z, 7) == in_min_basin(rep, z)
    assert in_capped_basin(rep, z, -2) == in_min_weight_space(rep, z)


def test_embedded_only_point_rejects_zero():
    with pytest.raises(ValueError):
        ProjPoint(embedded=[0, 0, 0])
