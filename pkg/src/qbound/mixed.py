"""
Plotkin and Hamming type bounds for stabilizer codes of type 4^k0 2^k1.

A stabilizer [[n, k]] code whose GF(4) group code has type 4^k0 2^k1 has
k = n - 2k0 - k1.  Its minimum distance is at most that of a mixed group code
with k1 coordinates restricted to {0, alpha} and n - k0 - k1 unrestricted
GF(4) coordinates, of cardinality 2^(2k).  The mixed-code bounds below are
applied to that shortened code.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Optional

from .kraw import binomial


@dataclass(frozen=True)
class StabilizerType:
    n: int
    k0: int
    k1: int

    def __post_init__(self):
        if self.k0 < 0 or self.k1 < 0:
            raise ValueError(f"type exponents must be non-negative, got k0={self.k0}, k1={self.k1}")
        if 2 * self.k0 + self.k1 > self.n:
            raise ValueError(f"2k0 + k1 = {2 * self.k0 + self.k1} exceeds n = {self.n}")

    @property
    def k(self) -> int:
        return self.n - 2 * self.k0 - self.k1

    @classmethod
    def from_nk(cls, n: int, k: int, k1: int) -> "StabilizerType":
        """Recover k0 = (n - k - k1)/2; the parity must work out."""
        twice_k0 = n - k - k1
        if twice_k0 < 0 or twice_k0 % 2:
            raise ValueError(f"no type 4^k0 2^k1 with n={n}, k={k}, k1={k1}")
        return cls(n, twice_k0 // 2, k1)


@dataclass(frozen=True)
class MixedCodeParams:
    """Group code in GF(2)^l x GF(4)^(n_total - l) with 2^k_bin words."""

    l: int
    n_total: int
    k_bin: int
    e: Optional[int] = None

    def __post_init__(self):
        if not 0 <= self.l <= self.n_total:
            raise ValueError(f"need 0 <= l <= n_total, got l={self.l}, n_total={self.n_total}")
        if self.k_bin < 0:
            raise ValueError(f"k_bin must be non-negative, got {self.k_bin}")
        if self.k_bin > 2 * self.n_total - self.l:
            raise ValueError("cardinality exceeds the ambient space")


@dataclass(frozen=True)
class ShortenedCode:
    stype: StabilizerType
    general: MixedCodeParams
    # the two special reductions, when their conditions hold
    case_i: Optional[MixedCodeParams]
    case_ii: Optional[MixedCodeParams]
    degenerate: bool


def packing_radius(d: int) -> int:
    """floor((d-1)/2), the radius of disjoint spheres around codewords."""
    return (d - 1) // 2


def shorten_params(n: int, k0: int, k1: int) -> ShortenedCode:
    st = StabilizerType(n, k0, k1)
    k = st.k
    general = MixedCodeParams(k1, n - k0, 2 * k)
    case_i = MixedCodeParams(0, (n + k) // 2, 2 * k) if k1 == 0 else None
    case_ii = None
    if k1 < 2 * k:
        case_ii = MixedCodeParams(0, (n + k - k1) // 2, 2 * k - k1)
    # k = n: the complementary code is the whole space
    return ShortenedCode(st, general, case_i, case_ii, degenerate=(k == n))


def mixed_plotkin(l: int, n_total: int, k_bin: int) -> Fraction:
    """d <= (l 2^(k-1) + 3 (n-l) 2^(k-2)) / (2^k - 1), exact."""
    if k_bin < 1:
        raise ValueError("Plotkin bound needs at least two codewords (k_bin >= 1)")
    MixedCodeParams(l, n_total, k_bin)
    num = Fraction(l * 2 ** (k_bin - 1)) + Fraction(3 * (n_total - l) * 2**k_bin, 4)
    return num / (2**k_bin - 1)


def mixed_sphere_volume(l: int, n_total: int, e: int) -> int:
    """Words of GF(2)^l x GF(4)^(n_total-l) within Hamming distance e of a point."""
    return sum(
        binomial(l, j) * 3 ** (i - j) * binomial(n_total - l, i - j)
        for i in range(e + 1)
        for j in range(i + 1)
    )


def mixed_hamming_max_d(l: int, n_total: int, k_bin: int) -> int:
    """Largest d with V_{floor((d-1)/2)} <= 2^(2 n_total - l - k_bin).

    Capped at n_total for two or more codewords and at n_total + 1 for a
    single codeword.
    """
    MixedCodeParams(l, n_total, k_bin)
    budget = 2 ** (2 * n_total - l - k_bin)
    cap = n_total if k_bin >= 1 else n_total + 1
    d = 1
    while d < cap and mixed_sphere_volume(l, n_total, packing_radius(d + 1)) <= budget:
        d += 1
    return d


def stabilizer_plotkin(n: int, k: int, k1: int) -> Fraction:
    """((n+k)/2) 3 4^(k-1)/(4^k-1) + (k1/2) 4^(k-1)/(4^k-1)."""
    if k < 1:
        raise ValueError("Plotkin bound needs k >= 1")
    StabilizerType.from_nk(n, k, k1)
    scale = Fraction(4 ** (k - 1), 4**k - 1)
    return Fraction(n + k, 2) * 3 * scale + Fraction(k1, 2) * scale


@dataclass(frozen=True)
class StabilizerHamming:
    composed: int
    loose: int

    @property
    def agree(self) -> bool:
        return self.composed == self.loose


def stabilizer_hamming(n: int, k: int, k1: int) -> StabilizerHamming:
    """Hamming-type distance bound for a stabilizer code of type 4^k0 2^k1.

    ``composed`` applies the mixed Hamming bound to the shortened code, which
    amounts to V_e <= 2^(n-k).  ``loose`` uses the right-hand side
    2^(2k0+3k1), larger by 2^(2 k1); both agree when k1 = 0.
    """
    st = StabilizerType.from_nk(n, k, k1)
    general = shorten_params(n, st.k0, k1).general
    composed = mixed_hamming_max_d(general.l, general.n_total, general.k_bin)
    budget = 2 ** (2 * st.k0 + 3 * k1)
    cap = general.n_total if general.k_bin >= 1 else general.n_total + 1
    d = 1
    while d < cap and mixed_sphere_volume(general.l, general.n_total, packing_radius(d + 1)) <= budget:
        d += 1
    return StabilizerHamming(composed, d)


# -- explicit mixed group codes ---------------------------------------------------
# GF(4) = {0, 1, w, w^2} as 2-bit integers; addition is XOR.


@dataclass(frozen=True)
class MixedGroupCode:
    """Additive code spanned over GF(2) by ``generators``; the first ``l``
    coordinates only take values in {0, alphas[i]}."""

    l: int
    n_total: int
    generators: tuple[tuple[int, ...], ...]

    def codewords(self) -> set[tuple[int, ...]]:
        words = {tuple([0] * self.n_total)}
        for g in self.generators:
            words |= {tuple(a ^ b for a, b in zip(w, g)) for w in words}
        return words

    @property
    def k_bin(self) -> int:
        return len(self.codewords()).bit_length() - 1

    def min_distance(self) -> int:
        weights = [sum(1 for c in w if c) for w in self.codewords() if any(w)]
        return min(weights) if weights else self.n_total + 1


def random_mixed_code(rng: random.Random, l: int, n_total: int, num_gens: int) -> MixedGroupCode:
    alphas = [rng.randrange(1, 4) for _ in range(l)]
    gens = []
    for _ in range(num_gens):
        head = [alphas[i] * rng.randrange(2) for i in range(l)]
        tail = [rng.randrange(4) for _ in range(n_total - l)]
        gens.append(tuple(head + tail))
    return MixedGroupCode(l, n_total, tuple(gens))


def enumerate_sphere(l: int, n_total: int, e: int) -> int:
    """Brute-force count of the mixed-space words of weight <= e."""
    spaces = [range(2)] * l + [range(4)] * (n_total - l)
    return sum(1 for w in product(*spaces) if sum(1 for c in w if c) <= e)
