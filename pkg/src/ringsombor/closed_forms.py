"""Constant-time Sombor values for each covered ring-graph family.

Each function evaluates a published closed form exactly, as a RadicalSum.
Three of the printed statements disagree with brute force on at least one
instance; those carry a printed/corrected variant pair, and the corrected
side is always rebuilt from the degree rules plus an edge partition, never
free-invented.  Inputs outside a family are rejected rather than computed.
"""

from __future__ import annotations

from fractions import Fraction

from .graphs import TOTAL, UNIT, EdgePartition, degree_pair
from .radicals import RadicalSum, rational_sqrt
from .rings import LocalRingSpec, euler_phi, is_prime

PRINTED = "printed"
CORRECTED = "corrected"
UNIQUE = "unique"
VARIANTS = (PRINTED, CORRECTED)


class NotInFamilyError(ValueError):
    """Input outside the family a closed form is stated for."""


def _check_variant(variant: str):
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}, got {variant!r}")


def _odd_prime(p: int, label: str):
    if not is_prime(p) or p == 2:
        raise NotInFamilyError(f"{label} must be an odd prime, got {p}")


def _distinct_odd_primes(p: int, q: int, ordered: bool):
    _odd_prime(p, "p")
    _odd_prime(q, "q")
    if p == q:
        raise NotInFamilyError(f"primes must be distinct, got p = q = {p}")
    if ordered and p > q:
        raise NotInFamilyError(f"need p < q, got p={p}, q={q}")


def _over_sqrt2(x) -> RadicalSum:
    """x / sqrt(2) in canonical form, (x/2)*sqrt(2)."""
    return RadicalSum({2: Fraction(x, 2)})


def sombor_edge_term(count: int, d1: int, d2: int) -> RadicalSum:
    """Contribution of `count` edges whose endpoints have degrees d1, d2."""
    return RadicalSum.sqrt(d1 * d1 + d2 * d2) * count


def assemble_partition_sum(part: EdgePartition, d_zero: int, d_unit: int) -> RadicalSum:
    """The shared three-term pattern: alpha edges at (d_zero, d_zero), beta
    at (d_zero, d_unit), gamma at (d_unit, d_unit).  Every partition-based
    closed form goes through here so the pattern is expanded once."""
    return (
        sombor_edge_term(part.alpha, d_zero, d_zero)
        + sombor_edge_term(part.beta, d_zero, d_unit)
        + sombor_edge_term(part.gamma, d_unit, d_unit)
    )


# ----------------------------------------------------------------------
# Total graph of Z_n


def so_total_even(n: int) -> RadicalSum:
    """n even: the total graph is (n - phi(n) - 1)-regular on n vertices."""
    if n < 2 or n % 2:
        raise NotInFamilyError(f"n must be even and >= 2, got {n}")
    d = n - euler_phi(n) - 1
    return _over_sqrt2(n * d * d)

def so_total_prime_power(p: int, alpha: int) -> RadicalSum:
    """n = p^alpha, p odd: zero-divisors form a clique, units attach to it."""
    _odd_prime(p, "p")
    if alpha < 1:
        raise NotInFamilyError(f"alpha must be >= 1, got {alpha}")
    n = p**alpha
    phi = n - n // p
    nz = n - phi
    return _over_sqrt2(phi * nz * nz) + _over_sqrt2((nz - 1) ** 2 * nz)


def total_pq_partition(p: int, q: int) -> EdgePartition:
    """Edge partition of the total graph of Z_pq, p < q odd primes."""
    _distinct_odd_primes(p, q, ordered=True)
    alpha = (p * (p - 1) + q * (q - 1)) // 2
    beta = 2 * (p - 1) * (q - 1)
    edges = (p * q - 1) * (p + q - 1) // 2
    return EdgePartition(alpha, beta, edges - alpha - beta)


def so_total_pq(p: int, q: int) -> RadicalSum:
    part = total_pq_partition(p, q)
    n = p * q
    d_zero, d_unit = degree_pair(TOTAL, n, euler_phi(n), True)
    return assemble_partition_sum(part, d_zero, d_unit)


def total_p2q_partition(p: int, q: int) -> EdgePartition:
    """Edge partition of the total graph of Z_{p^2 q}; p is the squared
    prime.  p > q is admitted (the formulas evaluate the same way), callers
    flag it as outside the usual p < q hypothesis."""
    _distinct_odd_primes(p, q, ordered=False)
    alpha = (
        p * (q - 1) * (p * (q - 1) - 1) // 2
        + p * (p - 1) * (p * (p - 1) - 1) // 2
        + p * (p - 1) // 2
        + p * p * (q - 1)
        + p * p * (p - 1)
    )
    beta = 2 * p * p * (p - 1) * (q - 1)
    edges = p * (p + q - 1) * (p * p * q - 1) // 2
    return EdgePartition(alpha, beta, edges - alpha - beta)


def so_total_p2q(p: int, q: int) -> RadicalSum:
    part = total_p2q_partition(p, q)
    n = p * p * q
    d_zero, d_unit = degree_pair(TOTAL, n, euler_phi(n), True)
    return assemble_partition_sum(part, d_zero, d_unit)


# ----------------------------------------------------------------------
# Unit graph of Z_n


def so_unit_even(n: int) -> RadicalSum:
    """n even: the unit graph is phi(n)-regular on n vertices."""
    if n < 2 or n % 2:
        raise NotInFamilyError(f"n must be even and >= 2, got {n}")
    phi = euler_phi(n)
    return _over_sqrt2(n * phi * phi)


def so_unit_prime_power(p: int, alpha: int, variant: str = CORRECTED) -> RadicalSum:
    """n = p^alpha, p odd.

    The printed statement's unit-unit bracket is phi*(phi-1) - (n-phi); the
    corrected bracket phi*(phi-1) - (n-phi)*phi is twice the unit-unit edge
    count implied by the degree rules, which is what brute force confirms.
    """
    _check_variant(variant)
    _odd_prime(p, "p")
    if alpha < 1:
        raise NotInFamilyError(f"alpha must be >= 1, got {alpha}")
    n = p**alpha
    phi = n - n // p
    nz = n - phi
    head = RadicalSum.sqrt(phi * phi + (phi - 1) ** 2) * (phi * nz)
    if variant == PRINTED:
        bracket = phi * (phi - 1) - nz
    else:
        bracket = phi * (phi - 1) - nz * phi
    return head + _over_sqrt2(bracket * (phi - 1))


def unit_pq_partition(p: int, q: int) -> EdgePartition:
    """Edge partition of the unit graph of Z_pq, p < q odd primes."""
    _distinct_odd_primes(p, q, ordered=True)
    alpha = (p - 1) * (q - 1)
    beta = (p - 1) * (q - 1) * (p + q - 3)
    edges = (p * q - 1) * euler_phi(p * q) // 2
    return EdgePartition(alpha, beta, edges - alpha - beta)


def so_unit_pq(p: int, q: int) -> RadicalSum:
    part = unit_pq_partition(p, q)
    n = p * q
    d_zero, d_unit = degree_pair(UNIT, n, euler_phi(n), True)
    return assemble_partition_sum(part, d_zero, d_unit)


def unit_p2q_partition(p: int, q: int, variant: str = CORRECTED) -> EdgePartition:
    """Edge partition of the unit graph of Z_{p^2 q}; p is the squared prime.

    alpha and beta agree across variants.  The printed edge count keeps a
    spurious extra factor p; the corrected count phi(p^2 q)*(p^2 q - 1)/2 is
    forced by the handshake identity with degrees phi and phi-1.
    """
    _check_variant(variant)
    _distinct_odd_primes(p, q, ordered=False)
    alpha = p * p * (p - 1) * (q - 1)
    beta = alpha * (p + q - 3)
    if variant == PRINTED:
        edges = p * p * (p - 1) * (q - 1) * (p * p * q - 1) // 2
    else:
        edges = p * (p - 1) * (q - 1) * (p * p * q - 1) // 2
    return EdgePartition(alpha, beta, edges - alpha - beta)


def so_unit_p2q(p: int, q: int, variant: str = CORRECTED) -> RadicalSum:
    part = unit_p2q_partition(p, q, variant)
    n = p * p * q
    d_zero, d_unit = degree_pair(UNIT, n, euler_phi(n), True)
    return assemble_partition_sum(part, d_zero, d_unit)


# ----------------------------------------------------------------------
# Any finite local ring


def so_total_local(spec: LocalRingSpec) -> RadicalSum:
    """Total graph of a finite local ring with n elements and u units."""
    n, u = spec.order, spec.unit_count
    nz = n - u
    if not spec.two_is_unit:
        return _over_sqrt2(n * (nz - 1) ** 2)
    return _over_sqrt2(nz * (nz - 1) ** 2) + _over_sqrt2(u * nz * nz)


def so_unit_local(spec: LocalRingSpec, variant: str = CORRECTED) -> RadicalSum:
    """Unit graph of a finite local ring.

    The 2-not-a-unit case has a single agreed statement.  In the 2-is-a-unit
    case the printed expression pairs degree u with n-u under the root; the
    corrected form uses degrees u and u-1 plus the unit-unit clique count,
    mirroring the prime-power correction.
    """
    _check_variant(variant)
    n, u = spec.order, spec.unit_count
    nz = n - u
    if not spec.two_is_unit:
        return _over_sqrt2(n * u * u)
    if variant == PRINTED:
        return RadicalSum.sqrt(u * u + nz * nz) * (u * nz)
    head = RadicalSum.sqrt(u * u + (u - 1) ** 2) * (u * nz)
    bracket = u * (u - 1) - nz * u
    return head + _over_sqrt2(bracket * (u - 1))


# ----------------------------------------------------------------------
# Regular graphs and the complement identity


def so_regular(n: int, k: int) -> RadicalSum:
    """Any k-regular graph on n vertices: n*k^2 / sqrt(2)."""
    if n < 1:
        raise ValueError(f"need at least one vertex, got {n}")
    if not 0 <= k <= n - 1:
        raise ValueError(f"degree {k} out of range for {n} vertices")
    return _over_sqrt2(n * k * k)


def so_complete(n: int) -> RadicalSum:
    """The complete graph: the (n-1)-regular case."""
    if n < 1:
        raise ValueError(f"need at least one vertex, got {n}")
    return so_regular(n, n - 1)


def complement_identity_residual(n: int, k: int) -> RadicalSum:
    """so_complete(n) minus the squared-sum expansion for a k-regular graph
    and its (n-k-1)-regular complement; exactly zero when the identity
    (sqrt(SO(G)) + sqrt(SO(complement)))^2 = SO(K_n) holds.

    Requires that a k-regular graph on n vertices exists (n*k even).
    """
    if n < 1:
        raise ValueError(f"need at least one vertex, got {n}")
    if not 0 <= k <= n - 1:
        raise ValueError(f"degree {k} out of range for {n} vertices")
    if (n * k) % 2:
        raise ValueError(f"no {k}-regular graph on {n} vertices (odd degree sum)")
    so_g = so_regular(n, k)
    so_gc = so_regular(n, n - k - 1)
    cross = rational_sqrt((so_g * so_gc).as_rational()) * 2
    return so_complete(n) - so_g - so_gc - cross
