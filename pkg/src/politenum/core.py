"""Decompositions of integers into runs of consecutive positive integers.

A decomposition of n is a run a, a+1, ..., b of positive integers summing
to n. Every odd divisor k of n yields exactly one such run, and every run
arises this way, so the decompositions of n are in bijection with its odd
divisors. The pivot is the comparison k*k vs 2n:

* k*k < 2n: the run centered on n/k survives as written; it has odd
  length k and starts at n/k - (k-1)/2.
* k*k > 2n: the centered run dips to zero or below; dropping the zero and
  cancelling each negative term against its positive mirror leaves an even
  run of length 2n/k starting at (k-1)/2 - n/k + 1.

k*k == 2n never happens (k odd, 2n even), so the split is exact integer
arithmetic throughout. Powers of two have 1 as their only odd divisor and
hence only the trivial one-term decomposition.

Everything here is pure and deterministic; values are immutable after
construction and safe to share across threads.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from enum import Enum
from math import isqrt

from politenum import kernels

# Domain cap keeping k*k and 2n comfortably inside 64-bit arithmetic for
# the compiled kernels; Python-side math is exact regardless.
MAX_N = 1 << 62

# Documented default for the bounded searches below.
DEFAULT_SEARCH_LIMIT = 10**6


class DomainError(ValueError):
    """Input outside the supported domain (n < 1, n > MAX_N, overflow)."""


class InvalidDivisorError(ValueError):
    """The given k is not an odd divisor of n."""


def _check_n(n: int) -> None:
    if n < 1:
        raise DomainError(f"n must be a positive integer, got {n}")
    if n > MAX_N:
        raise DomainError(f"n must be <= 2**62, got {n}")


# ---------------------------------------------------------------------------
# domain types
# ---------------------------------------------------------------------------


@dataclass(frozen=True, slots=True)
class Decomposition:
    """A run of `length` consecutive integers starting at `start`, summing to `target`."""

    target: int
    start: int
    length: int

    def __post_init__(self) -> None:
        if self.start < 1 or self.length < 1 or self.target < 1:
            raise DomainError(
                f"invalid decomposition ({self.start=}, {self.length=}, {self.target=})"
            )
        # sum of the run; the product below is always even
        if self.length * (2 * self.start + self.length - 1) // 2 != self.target:
            raise DomainError(
                f"run of {self.length} from {self.start} does not sum to {self.target}"
            )

    @property
    def terms(self) -> range:
        return range(self.start, self.start + self.length)

    @property
    def is_trivial(self) -> bool:
        return self.length == 1

    @property
    def parity(self) -> str:
        """Run-length parity, "odd" or "even"."""
        return "odd" if self.length % 2 else "even"


@dataclass(frozen=True, slots=True)
class OddFactorization:
    """n split as 2**d times its odd part, with the odd divisors spelled out.

    odd_divisors is ascending and always starts at 1; its last entry is the
    odd part n / 2**d. split_index counts the divisors k with k*k < 2n
    (at least 1, since k=1 always qualifies); those first split_index
    divisors are the ones producing odd-length decompositions.
    """

    n: int
    d: int
    odd_divisors: tuple[int, ...]
    odd_prime_exponents: dict[int, int]
    split_index: int

    @property
    def odd_part(self) -> int:
        return self.odd_divisors[-1]

    @property
    def divisor_count(self) -> int:
        return len(self.odd_divisors)


@dataclass(frozen=True, slots=True)
class LengthSpectrum:
    """The set of decomposition lengths of n, split by parity."""

    n: int
    odd_lengths: tuple[int, ...]
    even_lengths: tuple[int, ...]

    @property
    def members(self) -> tuple[int, ...]:
        return tuple(sorted(self.odd_lengths + self.even_lengths))

    @property
    def size(self) -> int:
        return len(self.odd_lengths) + len(self.even_lengths)


class Kind(Enum):
    POWER_OF_TWO = "POWER_OF_TWO"
    UNIQUE_NONTRIVIAL = "UNIQUE_NONTRIVIAL"
    GENERAL = "GENERAL"


@dataclass(frozen=True, slots=True)
class Classification:
    """How n decomposes: not at all beyond itself, exactly one extra way, or more.

    detail is the pair (d, k) with n = 2**d * k for UNIQUE_NONTRIVIAL,
    None otherwise.
    """

    n: int
    kind: Kind
    detail: tuple[int, int] | None = None


@dataclass(frozen=True, slots=True)
class SpectrumCheck:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True, slots=True)
class SpectrumValidation:
    """Outcome of the necessary-condition screen over a candidate spectrum.

    Passing every check does not certify that some n realizes the candidate;
    it only means no structural rule rejected it. witness_floor is the
    smallest n any witness could possibly be.
    """

    candidate: tuple[int, ...]
    checks: tuple[SpectrumCheck, ...]
    witness_floor: int

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> tuple[SpectrumCheck, ...]:
        return tuple(c for c in self.checks if not c.passed)


@dataclass(frozen=True, slots=True)
class SpectrumSizeRow:
    """Smallest n with a given spectrum size, next to the 3**(size-1) baseline."""

    size: int
    smallest: int | None
    power_of_three: int

    @property
    def matches_power_of_three(self) -> bool:
        return self.smallest == self.power_of_three


# ---------------------------------------------------------------------------
# factorization and the bijection
# ---------------------------------------------------------------------------


def factor_odd(n: int) -> OddFactorization:
    """Strip the power of two from n and enumerate the odd divisors.

    Plain trial division over odd candidates up to isqrt of the odd part;
    exact and adequate for the 64-bit domain. Divisors come back ascending.
    """
    _check_n(n)
    d = 0
    odd = n
    while odd % 2 == 0:
        odd //= 2
        d += 1

    exponents: dict[int, int] = {}
    rest = odd
    p = 3
    while p * p <= rest:
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            exponents[p] = e
        p += 2
    if rest > 1:
        exponents[rest] = exponents.get(rest, 0) + 1

    divisors = [1]
    for prime, e in exponents.items():
        divisors = [q * prime**i for q in divisors for i in range(e + 1)]
    divisors.sort()

    # k*k < 2n iff k <= isqrt(2n), since k*k == 2n is impossible
    split = bisect_right(divisors, isqrt(2 * n))
    return OddFactorization(
        n=n,
        d=d,
        odd_divisors=tuple(divisors),
        odd_prime_exponents=exponents,
        split_index=split,
    )


def decomposition_from_odd_divisor(n: int, k: int) -> Decomposition:
    """The unique decomposition of n attached to its odd divisor k."""
    _check_n(n)
    if k <= 0 or k % 2 == 0:
        raise InvalidDivisorError(f"k must be a positive odd integer, got {k}")
    if n % k != 0:
        raise InvalidDivisorError(f"{k} does not divide {n}")
    half = (k - 1) // 2
    q = n // k
    if k * k < 2 * n:
        return Decomposition(target=n, start=q - half, length=k)
    return Decomposition(target=n, start=half - q + 1, length=2 * q)


def odd_divisor_from_decomposition(dec: Decomposition) -> int:
    """Inverse of decomposition_from_odd_divisor.

    With m terms starting at a+1, the sum is m(2a+m+1)/2, so exactly one of
    m and 2a+m+1 is odd and divides the target; that one is returned.
    """
    m = dec.length
    if m % 2 == 1:
        return m
    return 2 * (dec.start - 1) + m + 1


def enumerate_decompositions(n: int) -> list[Decomposition]:
    """All decompositions of n, ordered by ascending odd divisor."""
    fac = factor_odd(n)
    return [decomposition_from_odd_divisor(n, k) for k in fac.odd_divisors]


def count_decompositions(n: int) -> int:
    """Number of decompositions of n: the product of (e+1) over odd prime exponents."""
    fac = factor_odd(n)
    count = 1
    for e in fac.odd_prime_exponents.values():
        count *= e + 1
    return count


# ---------------------------------------------------------------------------
# length spectra
# ---------------------------------------------------------------------------


def length_spectrum(n: int) -> LengthSpectrum:
    """The set of run lengths over all decompositions of n, split by parity.

    Odd lengths are the divisors k with k*k < 2n themselves; even lengths
    are 2n/k for the divisors beyond the split.
    """
    fac = factor_odd(n)
    r = fac.split_index
    odd_lengths = fac.odd_divisors[:r]
    even_lengths = tuple(sorted(2 * n // k for k in fac.odd_divisors[r:]))
    return LengthSpectrum(n=n, odd_lengths=odd_lengths, even_lengths=even_lengths)


def longest_length(n: int) -> int:
    """Length of the longest decomposition of n.

    The longest odd candidate is the last divisor below the split; the
    longest even candidate comes from the first divisor above it.
    """
    fac = factor_odd(n)
    r = fac.split_index
    best = fac.odd_divisors[r - 1]
    if r < fac.divisor_count:
        best = max(best, 2 * n // fac.odd_divisors[r])
    return best


def shortest_nontrivial_length(n: int) -> int | None:
    """Length of the shortest beyond-one-term decomposition, or None for powers of two.

    Equals min(k2, 2**(d+1)) where k2 is the smallest odd prime divisor:
    whichever of the two is actually realized is always the smaller one.
    """
    fac = factor_odd(n)
    if fac.divisor_count == 1:
        return None
    return min(fac.odd_divisors[1], 2 ** (fac.d + 1))


def has_only_odd_decompositions(n: int) -> bool:
    """True when every decomposition of n has odd length (odd part < 2**(d+1))."""
    fac = factor_odd(n)
    return fac.odd_part < 2 ** (fac.d + 1)


def classify(n: int) -> Classification:
    """Sort n into power of two, exactly-one-nontrivial, or general.

    The one-nontrivial case (where that single extra decomposition is
    even) happens exactly for n = 2**d * k with k an odd prime > 2**(d+1).
    """
    fac = factor_odd(n)
    k = fac.odd_part
    if k == 1:
        return Classification(n=n, kind=Kind.POWER_OF_TWO)
    if fac.odd_prime_exponents == {k: 1} and k > 2 ** (fac.d + 1):
        return Classification(n=n, kind=Kind.UNIQUE_NONTRIVIAL, detail=(fac.d, k))
    return Classification(n=n, kind=Kind.GENERAL)


def max_possible_length(n: int) -> int:
    """Upper bound on any run length for n: the largest m with m(m+1)/2 <= n."""
    _check_n(n)
    return (isqrt(8 * n + 1) - 1) // 2


def smallest_n_containing_length(m: int) -> int:
    """Smallest n with an m-term decomposition: the triangular number m(m+1)/2."""
    if m < 1:
        raise DomainError(f"m must be a positive integer, got {m}")
    t = m * (m + 1) // 2
    if t > MAX_N:
        raise DomainError(f"m(m+1)/2 exceeds 2**62 for m={m}")
    return t


def smallest_n_with_spectrum_size(
    s: int, search_limit: int = DEFAULT_SEARCH_LIMIT
) -> int | None:
    """Smallest n <= search_limit with exactly s decompositions, or None.

    Linear scan with count_decompositions; bounded by design so callers get
    an explicit "not found below the limit" instead of an open-ended loop.
    """
    if s < 1:
        raise DomainError(f"s must be a positive integer, got {s}")
    for n in range(1, search_limit + 1):
        if count_decompositions(n) == s:
            return n
    return None


def spectrum_size_survey(
    max_size: int, search_limit: int = DEFAULT_SEARCH_LIMIT
) -> list[SpectrumSizeRow]:
    """smallest_n_with_spectrum_size for sizes 1..max_size, with the 3**(s-1) baseline.

    3**(s-1) is the smallest n whose odd part is a prime power with s
    divisors, but mixed odd parts can be smaller: 15 = 3*5 already has four
    odd divisors, undercutting 27. The survey reports what the scan finds
    and flags where it coincides with the baseline.
    """
    return [
        SpectrumSizeRow(
            size=s,
            smallest=smallest_n_with_spectrum_size(s, search_limit),
            power_of_three=3 ** (s - 1),
        )
        for s in range(1, max_size + 1)
    ]


# ---------------------------------------------------------------------------
# candidate spectra: screening and witness search
# ---------------------------------------------------------------------------


def _two_adic_valuation(x: int) -> int:
    return (x & -x).bit_length() - 1


def validate_spectrum(candidate: set[int] | frozenset[int]) -> SpectrumValidation:
    """Screen a candidate length set against the structural rules every real spectrum obeys.

    Checks, in order: 1 must be a member; all even members must share one
    2-adic valuation (they are all 2**(d+1) times an odd number for the
    same d); the odd members must be closed under odd divisors (if k is an
    odd length then so is every divisor of k); and each even member's odd
    part must itself be an odd member. The triangular floor entry never
    fails, it just records the least n any witness could be.
    """
    if not candidate:
        raise DomainError("candidate spectrum must be a nonempty set")
    members = tuple(sorted(candidate))
    if members[0] < 1:
        raise DomainError("spectrum members must be positive integers")

    checks: list[SpectrumCheck] = []

    has_unit = 1 in candidate
    checks.append(
        SpectrumCheck(
            name="contains-unit-length",
            passed=has_unit,
            detail="1 is a member" if has_unit else "1 missing: every n has the one-term run",
        )
    )

    evens = [m for m in members if m % 2 == 0]
    odds = [m for m in members if m % 2 == 1]
    if evens:
        vals = {m: _two_adic_valuation(m) for m in evens}
        distinct = sorted(set(vals.values()))
        if len(distinct) == 1:
            checks.append(
                SpectrumCheck(
                    name="even-valuation",
                    passed=True,
                    detail=f"all even members have 2-adic valuation {distinct[0]} (d = {distinct[0] - 1})",
                )
            )
        else:
            listing = ", ".join(f"{m} -> {v}" for m, v in sorted(vals.items()))
            checks.append(
                SpectrumCheck(
                    name="even-valuation",
                    passed=False,
                    detail=f"even members must share one 2-adic valuation; got {listing}",
                )
            )
    else:
        checks.append(
            SpectrumCheck(name="even-valuation", passed=True, detail="no even members")
        )

    odd_set = set(odds)
    closure_misses = sorted(
        {
            q
            for m in odds
            for q in _odd_divisors_of(m)
            if q not in odd_set
        }
    )
    checks.append(
        SpectrumCheck(
            name="odd-divisor-closure",
            passed=not closure_misses,
            detail=(
                "odd members are closed under odd divisors"
                if not closure_misses
                else f"missing odd divisors of odd members: {closure_misses}"
            ),
        )
    )

    part_misses = sorted({m for m in evens if (m >> _two_adic_valuation(m)) not in odd_set})
    checks.append(
        SpectrumCheck(
            name="even-odd-part",
            passed=not part_misses,
            detail=(
                "each even member's odd part is an odd member"
                if not part_misses
                else f"even members whose odd part is not a member: {part_misses}"
            ),
        )
    )

    top = members[-1]
    floor = top * (top + 1) // 2
    checks.append(
        SpectrumCheck(
            name="triangular-floor",
            passed=True,
            detail=f"any witness must be >= {top}*{top + 1}/2 = {floor}",
        )
    )

    return SpectrumValidation(candidate=members, checks=tuple(checks), witness_floor=floor)


def _odd_divisors_of(m: int) -> list[int]:
    # small helper for the closure check; m is odd and modest in practice
    divs = []
    for q in range(1, isqrt(m) + 1):
        if m % q == 0:
            divs.append(q)
            partner = m // q
            if partner != q:
                divs.append(partner)
    return divs


def find_spectrum_witness(
    candidate: set[int] | frozenset[int],
    search_limit: int = DEFAULT_SEARCH_LIMIT,
    chunk_size: int = 1 << 20,
) -> int | None:
    """Smallest n <= search_limit whose length spectrum equals candidate exactly.

    Sieve-driven scan: each odd divisor credits its run length to every
    multiple, so a chunk pass can reject any n that receives a length
    outside the candidate and accept the first n whose credited lengths
    cover it. None means no witness below the limit, which is not a proof
    that none exists.
    """
    if not candidate:
        raise DomainError("candidate spectrum must be a nonempty set")
    members = sorted(candidate)
    if members[0] < 1:
        raise DomainError("spectrum members must be positive integers")
    if search_limit < 1:
        raise DomainError(f"search_limit must be >= 1, got {search_limit}")
    if search_limit > MAX_N:
        raise DomainError(f"search_limit must be <= 2**62, got {search_limit}")

    # Lengths realizable below the limit never exceed isqrt(2*limit) + 1.
    max_len = isqrt(2 * search_limit) + 2
    allowed = bytearray(max_len + 1)
    for m in members:
        if m <= max_len:
            allowed[m] = 1

    want = len(members)
    for lo in range(1, search_limit + 1, chunk_size):
        hi = min(lo + chunk_size - 1, search_limit)
        hit = kernels.witness_chunk(lo, hi, bytes(allowed), want)
        if hit:
            return hit
    return None
