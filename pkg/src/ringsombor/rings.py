"""Finite commutative rings with unity and the number theory behind them.

Every element of a finite commutative ring with unity is either a unit or a
zero-divisor, with 0 counted among the zero-divisors.  That partition is all
the downstream graph constructions need, so rings here expose exactly:
element addition, the unit test, and a couple of counts.  Elements are
addressed by an integer index in 0..order-1 with index 0 the ring zero.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache


class NonLocalRingError(ValueError):
    """A local-ring-only operation was applied to a ring with more than one
    maximal ideal."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def primes_up_to(limit: int) -> list[int]:
    """All primes <= limit (sieve of Eratosthenes)."""
    if limit < 2:
        return []
    sieve = bytearray(b"\x01") * (limit + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = b"\x00" * len(range(p * p, limit + 1, p))
    return [i for i, flag in enumerate(sieve) if flag]


@dataclass(frozen=True)
class Modulus:
    """A positive integer n >= 2 with its prime factorization attached.

    factors is a tuple of (prime, exponent) pairs with primes strictly
    ascending and every exponent >= 1; the product reconstructs n.
    """

    n: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 2:
            raise ValueError(f"modulus must be >= 2, got {self.n}")
        prod = 1
        last = 1
        for p, e in self.factors:
            if p <= last or e < 1:
                raise ValueError(f"bad factorization for {self.n}: {self.factors}")
            last = p
            prod *= p**e
        if prod != self.n:
            raise ValueError(f"factorization of {self.n} multiplies to {prod}")

    @property
    def is_prime_power(self) -> bool:
        return len(self.factors) == 1


@lru_cache(maxsize=None)
def factorize(n: int) -> Modulus:
    """Full prime factorization by trial division, primes ascending."""
    if n < 2:
        raise ValueError(f"factorize requires n >= 2, got {n}")
    m = n
    factors = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            factors.append((d, e))
        d += 1 if d == 2 else 2
    if m > 1:
        factors.append((m, 1))
    return Modulus(n, tuple(factors))


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    """Euler totient via the multiplicative formula over the factorization."""
    if n < 1:
        raise ValueError(f"euler_phi requires n >= 1, got {n}")
    if n == 1:
        return 1
    out = n
    for p, _ in factorize(n).factors:
        out //= p
        out *= p - 1
    return out


# Modulus family tags.  Classification precedence: even first, then the exact
# odd shapes, else the catch-all.
EVEN = "even"
ODD_PRIME_POWER = "ppow"
ODD_PQ = "pq"
ODD_P2Q = "p2q"
OTHER_ODD = "other"


@dataclass(frozen=True)
class ModulusFamily:
    """Which closed-form family a modulus n falls into.

    For ODD_PRIME_POWER, p and alpha are set (n = p**alpha).  For ODD_PQ,
    p < q are the two primes.  For ODD_P2Q, p is the squared prime and q the
    other one; p > q is admitted but lies outside the usual hypothesis and
    in_hypothesis turns False.
    """

    kind: str
    p: int = 0
    q: int = 0
    alpha: int = 0

    @property
    def in_hypothesis(self) -> bool:
        if self.kind == ODD_P2Q:
            return self.p < self.q
        return True


def classify(n: int | Modulus) -> ModulusFamily:
    """The unique family tag for n (total and deterministic for n >= 2)."""
    mod = n if isinstance(n, Modulus) else factorize(n)
    if mod.n % 2 == 0:
        return ModulusFamily(EVEN)
    factors = mod.factors
    if len(factors) == 1:
        p, a = factors[0]
        return ModulusFamily(ODD_PRIME_POWER, p=p, alpha=a)
    if len(factors) == 2:
        (p1, e1), (p2, e2) = factors
        if e1 == 1 and e2 == 1:
            return ModulusFamily(ODD_PQ, p=p1, q=p2)
        if sorted((e1, e2)) == [1, 2]:
            squared, other = (p1, p2) if e1 == 2 else (p2, p1)
            return ModulusFamily(ODD_P2Q, p=squared, q=other)
    return ModulusFamily(OTHER_ODD)


@dataclass(frozen=True)
class LocalRingSpec:
    """The three parameters of a finite local ring that the local closed
    forms consume: order, number of units, and whether 1+1 is a unit."""

    order: int
    unit_count: int
    two_is_unit: bool

    def __post_init__(self):
        if not 1 <= self.unit_count < self.order:
            raise ValueError(
                f"unit count {self.unit_count} out of range for order {self.order}"
            )
        ideal = self.order - self.unit_count
        if self.order % ideal != 0:
            raise ValueError(
                f"non-unit count {ideal} does not divide order {self.order}"
            )


_ZD_TO_BITS = bytes.maketrans(b"\x00\x01", b"10")


class FiniteRing:
    """Base class for enumerable commutative rings with unity.

    Subclasses fix an element indexing 0..order-1 (index 0 is the ring zero)
    and provide addition and the unit test on indices.
    """

    order: int
    one_index: int

    def add(self, x: int, y: int) -> int:
        raise NotImplementedError

    def neg(self, x: int) -> int:
        raise NotImplementedError

    def is_unit(self, x: int) -> bool:
        raise NotImplementedError

    @property
    def unit_count(self) -> int:
        return sum(1 for x in range(self.order) if self.is_unit(x))

    @property
    def two_is_unit(self) -> bool:
        return self.is_unit(self.add(self.one_index, self.one_index))

    @property
    def is_local(self) -> bool:
        raise NotImplementedError

    @property
    def name(self) -> str:
        raise NotImplementedError

    def unit_mask(self) -> int:
        """Bitmask with bit x set iff element x is a unit."""
        mask = 0
        for x in range(self.order):
            if self.is_unit(x):
                mask |= 1 << x
        return mask

    def __repr__(self):
        return f"<{type(self).__name__} {self.name}>"


class ZnRing(FiniteRing):
    """Integers modulo n; the element index is the residue."""

    def __init__(self, n: int):
        self.modulus = factorize(n)
        self.n = n
        self.order = n
        self.one_index = 1 % n

    def add(self, x: int, y: int) -> int:
        return (x + y) % self.n

    def neg(self, x: int) -> int:
        return (-x) % self.n

    def is_unit(self, x: int) -> bool:
        return math.gcd(x, self.n) == 1

    @property
    def unit_count(self) -> int:
        return euler_phi(self.n)

    @property
    def two_is_unit(self) -> bool:
        return self.n % 2 == 1

    @property
    def is_local(self) -> bool:
        return self.modulus.is_prime_power

    @property
    def name(self) -> str:
        return f"Z_{self.n}"

    def unit_mask(self) -> int:
        # Mark multiples of each prime factor (the zero-divisors), then read
        # the complement off as a bitmask.
        marks = bytearray(self.n)
        for p, _ in self.modulus.factors:
            marks[0::p] = b"\x01" * len(range(0, self.n, p))
        return int(marks.translate(_ZD_TO_BITS)[::-1], 2)


class TruncatedPolyRing(FiniteRing):
    """F_p[x]/(x^k): polynomials over the prime field with x^k = 0.

    The element index encodes the coefficient tuple in base p with the
    constant coefficient as the most significant digit, so lexicographic
    coefficient order coincides with numeric index order.  An element is a
    unit exactly when its constant coefficient is nonzero.
    """

    def __init__(self, p: int, k: int):
        if not is_prime(p):
            raise ValueError(f"coefficient modulus must be prime, got {p}")
        if k < 1:
            raise ValueError(f"truncation degree must be >= 1, got {k}")
        self.p = p
        self.k = k
        self.order = p**k
        self.lead = p ** (k - 1)  # index weight of the constant coefficient
        self.one_index = self.lead

    def coeffs(self, x: int) -> tuple[int, ...]:
        """Coefficient tuple (constant term first) of element x."""
        digits = []
        for _ in range(self.k):
            x, d = divmod(x, self.p)
            digits.append(d)
        return tuple(reversed(digits))

    def from_coeffs(self, cs) -> int:
        if len(cs) != self.k:
            raise ValueError(f"expected {self.k} coefficients, got {len(cs)}")
        x = 0
        for c in cs:
            if not 0 <= c < self.p:
                raise ValueError(f"coefficient {c} out of range mod {self.p}")
            x = x * self.p + c
        return x

    def add(self, x: int, y: int) -> int:
        p = self.p
        out, w = 0, 1
        for _ in range(self.k):
            out += ((x + y) % p) * w
            x //= p
            y //= p
            w *= p
        return out

    def neg(self, x: int) -> int:
        p = self.p
        out, w = 0, 1
        for _ in range(self.k):
            out += (-x % p) * w
            x //= p
            w *= p
        return out

    def is_unit(self, x: int) -> bool:
        return x >= self.lead

    @property
    def unit_count(self) -> int:
        return self.order - self.lead

    @property
    def two_is_unit(self) -> bool:
        return self.p != 2

    @property
    def is_local(self) -> bool:
        return True

    @property
    def name(self) -> str:
        return f"F_{self.p}[x]/(x^{self.k})"

    def unit_mask(self) -> int:
        return ((1 << self.order) - 1) ^ ((1 << self.lead) - 1)


def z_prime_power(p: int, alpha: int) -> ZnRing:
    """The local ring Z_{p^alpha}."""
    if not is_prime(p):
        raise ValueError(f"expected a prime, got {p}")
    if alpha < 1:
        raise ValueError(f"exponent must be >= 1, got {alpha}")
    return ZnRing(p**alpha)


def to_local_spec(ring: FiniteRing) -> LocalRingSpec:
    """Abstract a concrete local ring to the parameters the local closed
    forms need.  Rejects rings with more than one maximal ideal."""
    if not ring.is_local:
        raise NonLocalRingError(f"{ring.name} is not local")
    return LocalRingSpec(ring.order, ring.unit_count, ring.two_is_unit)
