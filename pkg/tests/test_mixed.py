from fractions import Fraction
import random

import pytest

from qbound.mixed import (
    MixedCodeParams,
    MixedGroupCode,
    StabilizerType,
    enumerate_sphere,
    mixed_hamming_max_d,
    mixed_plotkin,
    mixed_sphere_volume,
    packing_radius,
    random_mixed_code,
    shorten_params,
    stabilizer_hamming,
    stabilizer_plotkin,
)


@pytest.mark.parametrize("n_total", range(0, 7))
def test_sphere_volume_vs_enumeration(n_total):
    for l in range(0, min(4, n_total) + 1):
        for e in range(0, n_total + 1):
            assert mixed_sphere_volume(l, n_total, e) == enumerate_sphere(l, n_total, e)


def test_sphere_volume_example():
    assert mixed_sphere_volume(2, 3, 1) == 6
    assert mixed_sphere_volume(0, 5, 5) == 4**5


def test_types():
    st = StabilizerType(5, 2, 0)
    assert st.k == 1
    assert StabilizerType.from_nk(6, 2, 2) == StabilizerType(6, 1, 2)
    with pytest.raises(ValueError):
        StabilizerType.from_nk(6, 1, 2)
    with pytest.raises(ValueError):
        StabilizerType(3, 2, 0)
    with pytest.raises(ValueError):
        MixedCodeParams(1, 2, 4)


def test_shorten_examples():
    s = shorten_params(5, 2, 0)
    assert s.stype.k == 1 and s.general.n_total == 3 and s.case_i.n_total == 3
    s = shorten_params(6, 2, 1)
    assert (s.general.l, s.general.n_total, s.general.k_bin) == (1, 4, 2)
    assert shorten_params(4, 0, 0).degenerate


def test_plotkin_examples():
    assert mixed_plotkin(3, 3, 1) == 3
    assert mixed_plotkin(0, 4, 2) == 4
    assert mixed_plotkin(2, 4, 2) == Fraction(10, 3)
    with pytest.raises(ValueError):
        mixed_plotkin(0, 3, 0)


def test_hamming_examples():
    assert mixed_hamming_max_d(0, 5, 8) == 2
    assert mixed_hamming_max_d(2, 4, 3) == 2
    assert mixed_hamming_max_d(2, 4, 0) == 5


def test_stabilizer_examples():
    # [[5,1,3]] meets both bounds with equality
    assert stabilizer_plotkin(5, 1, 0) == 3
    h = stabilizer_hamming(5, 1, 0)
    assert h.composed == 3 and h.agree
    assert stabilizer_plotkin(6, 2, 2) == Fraction(52, 15)
    h = stabilizer_hamming(6, 2, 2)
    assert (h.composed, h.loose) == (4, 5) and not h.agree


def test_stabilizer_composition_identity():
    for n in range(2, 10):
        for k1 in range(0, n):
            for k in range(1, n - k1 + 1):
                if (n - k - k1) % 2:
                    continue
                st = StabilizerType.from_nk(n, k, k1)
                g = shorten_params(n, st.k0, k1).general
                assert stabilizer_plotkin(n, k, k1) == mixed_plotkin(g.l, g.n_total, g.k_bin)
                assert stabilizer_hamming(n, k, k1).composed == mixed_hamming_max_d(g.l, g.n_total, g.k_bin)


def test_plotkin_decreases_in_k():
    for n_total in range(2, 7):
        for l in range(n_total + 1):
            vals = [mixed_plotkin(l, n_total, k) for k in range(1, 2 * n_total - l + 1)]
            assert vals == sorted(vals, reverse=True)


def test_parity_check_code_needs_floor_radius():
    # quaternary [n, n-1, 2]: 4^(n-1) words, distance 2
    n = 4
    code = MixedGroupCode(0, n, ((1, 1, 0, 0), (2, 2, 0, 0), (0, 1, 1, 0), (0, 2, 2, 0), (0, 0, 1, 1), (0, 0, 2, 2)))
    assert code.k_bin == 2 * (n - 1) and code.min_distance() == 2
    assert mixed_hamming_max_d(0, n, code.k_bin) >= 2
    # radius ceil((2-1)/2) = 1 would demand V_1 = 13 <= 4
    assert mixed_sphere_volume(0, n, 1) > 2 ** (2 * n - code.k_bin)
    assert packing_radius(2) == 0


def test_random_codes_respect_bounds():
    rng = random.Random(1997)
    checked = 0
    for _ in range(200):
        n_total = rng.randint(1, 8)
        l = rng.randint(0, min(4, n_total))
        code = random_mixed_code(rng, l, n_total, rng.randint(1, 4))
        k, d = code.k_bin, code.min_distance()
        if k == 0:
            continue
        assert d <= mixed_plotkin(l, n_total, k)
        assert d <= mixed_hamming_max_d(l, n_total, k)
        checked += 1
    assert checked >= 190
