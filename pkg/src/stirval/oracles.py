"""Closed-form valuation oracles for Stirling cycle numbers s(a*p^n, t).

Each oracle answers with O(1) integer arithmetic (never touching the
astronomically large Stirling numbers themselves).  The 3-adic forms are
proven; the general-p form is the conjectural evaluator, which the verify
module cross-checks differentially against exact rows.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .bigmath import bernoulli
from .errors import DomainError, UsageError
from .padic import Prime, Valuation, as_prime, vp_factorial, vp_int, vp_rational

__all__ = [
    "Query3",
    "QueryP",
    "BoundKind",
    "OracleResult",
    "thm1_valuation",
    "cor1_valuation",
    "decompose",
    "decompose_p",
    "full_valuation_3",
    "lengyel_special",
    "komatsu_young_valuation",
    "conjecture13_valuation",
    "thm2_shift_valuation",
    "max_valuation_bound",
    "h_valuation",
]

_P3 = Prime(3)


def _v3(x: int) -> int:
    """Finite 3-adic valuation of a nonzero integer."""
    return vp_int(_P3, x).value


@dataclass(frozen=True)
class Query3:
    """Parameters (a, n, m, k) addressing v_3(s(a*3^n, a*3^m - k)).

    The admissible set: a in {1, 2}, 1 <= m <= n, and
    2 <= k <= 2a*3^(m-1)+1 with a*3^m - k >= 1 (the target index must
    stay positive; this trims k = 3 out of the a = 1, m = 1 cell).
    """

    a: int
    n: int
    m: int
    k: int

    def __post_init__(self):
        if self.a not in (1, 2):
            raise DomainError(f"a must be 1 or 2, got {self.a}")
        if self.n < 1:
            raise DomainError(f"n must be >= 1, got {self.n}")
        if not 1 <= self.m <= self.n:
            raise DomainError(f"m must satisfy 1 <= m <= n, got m={self.m}, n={self.n}")
        cap = 2 * self.a * 3 ** (self.m - 1) + 1
        if not 2 <= self.k <= cap:
            raise DomainError(
                f"k must satisfy 2 <= k <= 2a*3^(m-1)+1 = {cap}, got k={self.k}"
            )
        if self.a * 3**self.m - self.k < 1:
            raise DomainError(
                f"a*3^m - k must be >= 1, got {self.a * 3 ** self.m - self.k}"
            )

    @property
    def t(self) -> int:
        """The addressed index t = a*3^m - k."""
        return self.a * 3**self.m - self.k

    @property
    def epsilon_k(self) -> int:
        """Parity indicator: 0 for even k, 1 for odd k."""
        return self.k & 1


@dataclass(frozen=True)
class QueryP:
    """Parameters (p, a, n, m, k) addressing v_p(s(a*p^n, a*p^m - k)).

    Domain: 1 <= a <= p-1, 1 <= m <= n, 2 <= k <= a(p-1)p^(m-1)+1,
    and a*p^m - k >= 1.
    """

    p: Prime
    a: int
    n: int
    m: int
    k: int

    def __post_init__(self):
        object.__setattr__(self, "p", as_prime(self.p))
        p = self.p.p
        if not 1 <= self.a <= p - 1:
            raise DomainError(f"a must satisfy 1 <= a <= p-1 = {p - 1}, got {self.a}")
        if self.n < 1:
            raise DomainError(f"n must be >= 1, got {self.n}")
        if not 1 <= self.m <= self.n:
            raise DomainError(f"m must satisfy 1 <= m <= n, got m={self.m}, n={self.n}")
        cap = self.a * (p - 1) * p ** (self.m - 1) + 1
        if not 2 <= self.k <= cap:
            raise DomainError(
                f"k must satisfy 2 <= k <= a(p-1)p^(m-1)+1 = {cap}, got k={self.k}"
            )
        if self.a * p**self.m - self.k < 1:
            raise DomainError(
                f"a*p^m - k must be >= 1, got {self.a * p ** self.m - self.k}"
            )

    @property
    def t(self) -> int:
        return self.a * self.p.p**self.m - self.k

    @property
    def epsilon_k(self) -> int:
        return self.k & 1

    @property
    def k_residue(self) -> int:
        """k reduced mod p-1, normalized into [0, p-2]."""
        return self.k % (self.p.p - 1) if self.p.p > 2 else 0


class BoundKind(Enum):
    EXACT = "exact"
    LOWER_BOUND = "lower_bound"
    UPPER_BOUND = "upper_bound"


@dataclass(frozen=True)
class OracleResult:
    """A valuation answer that is exact or a one-sided bound."""

    kind: BoundKind
    value: Valuation

    def __str__(self) -> str:
        prefix = {"exact": "", "lower_bound": ">=", "upper_bound": "<="}[self.kind.value]
        return f"{prefix}{self.value}"


def thm1_valuation(q: Query3) -> Valuation:
    """Closed form for v_3(s(a*3^n, a*3^m - k)) on the tiled (m, k) domain."""
    a, n, m, k = q.a, q.n, q.m, q.k
    spread = a * (3**n - 3**m)
    assert spread % 2 == 0
    val = (
        spread // 2
        - (n - m) * (a * 3**m - k)
        + m
        - 1
        - _v3(k // 2)
        + (m + _v3(k)) * q.epsilon_k
    )
    return Valuation(val)


def cor1_valuation(a: int, n: int, k: int) -> Valuation:
    """The m = n specialization: v_3(s(a*3^n, a*3^n - k)) by parity of k."""
    q = Query3(a, n, n, k)  # validates the domain
    if k % 2 == 0:
        return Valuation(n - 1 - _v3(k))
    return Valuation(2 * n - 1 + _v3(k) - _v3(k - 1))


def decompose(a: int, n: int, t: int) -> Query3:
    """Write t = a*3^m - k with (m, k) in the admissible set.

    m is the unique integer with a*3^(m-1) - 1 <= t <= a*3^m - 2; the
    resulting cells tile [1, a*3^n - 2] exactly once each.
    """
    if a not in (1, 2):
        raise DomainError(f"a must be 1 or 2, got {a}")
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if not 1 <= t <= a * 3**n - 2:
        raise DomainError(f"t must satisfy 1 <= t <= a*3^n - 2 = {a * 3 ** n - 2}, got {t}")
    m = 1
    while a * 3**m - 2 < t:
        m += 1
    return Query3(a, n, m, a * 3**m - t)


def decompose_p(p: int | Prime, a: int, n: int, t: int) -> QueryP:
    """General-p analogue of :func:`decompose` targeting the conjectural form.

    Raises DomainError when no cell covers t (possible only for a >= 4,
    t in [2, a-2], and for the empty p = 2 bottom cell).
    """
    prime = as_prime(p)
    q = prime.p
    if not 1 <= a <= q - 1:
        raise DomainError(f"a must satisfy 1 <= a <= p-1 = {q - 1}, got {a}")
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if not 1 <= t <= a * q**n - 2:
        raise DomainError(f"t must satisfy 1 <= t <= a*p^n - 2 = {a * q ** n - 2}, got {t}")
    m = 1
    while a * q**m - 2 < t:
        m += 1
    k = a * q**m - t
    if k > a * (q - 1) * q ** (m - 1) + 1:
        raise DomainError(
            f"t={t} is below the bottom cell of the closed-form domain for p={q}, a={a}"
        )
    return QueryP(prime, a, n, m, k)


def full_valuation_3(a: int, n: int, t: int) -> Valuation:
    """Exact v_3(s(a*3^n, t)) for every t in [1, a*3^n], via the closed forms.

    The top two indices are boundary values (s(N, N) = 1 and
    s(N, N-1) = C(N, 2)); everything below decomposes into the tiled domain.
    """
    if a not in (1, 2):
        raise DomainError(f"a must be 1 or 2, got {a}")
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    top = a * 3**n
    if not 1 <= t <= top:
        raise DomainError(f"t must satisfy 1 <= t <= a*3^n = {top}, got {t}")
    if t == top:
        return Valuation(0)
    if t == top - 1:
        return Valuation(n)
    return thm1_valuation(decompose(a, n, t))


def lengyel_special(variant: str, n: int) -> Valuation:
    """Closed forms for the lowest-index columns.

    variant: "s3n_2" -> v_3(s(3^n, 2)), "s3n_3" -> v_3(s(3^n, 3)),
    "s2x3n_2" -> v_3(s(2*3^n, 2)).
    """
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if variant == "s3n_2":
        return Valuation((3**n + 3) // 2 - 2 * n)
    if variant == "s3n_3":
        return Valuation((3**n + 3) // 2 - 3 * n)
    if variant == "s2x3n_2":
        return Valuation(3**n - 2 * n - 1)
    raise UsageError(f"unknown variant {variant!r}; expected s3n_2, s3n_3 or s2x3n_2")


def komatsu_young_valuation(p: int | Prime, k: int, r: int, m: int) -> Valuation:
    """v_p(s(n+1, k+1)) for n = k*p^r + m with 0 <= m < p^r.

    Equals v_p(n!) - v_p(k!) - k*r.
    """
    prime = as_prime(p)
    if k < 0 or r < 0 or m < 0:
        raise DomainError(f"k, r, m must be >= 0, got k={k}, r={r}, m={m}")
    if m >= prime.p**r:
        raise DomainError(f"m must satisfy 0 <= m < p^r = {prime.p ** r}, got {m}")
    n = k * prime.p**r + m
    val = vp_factorial(prime, n).value - vp_factorial(prime, k).value - k * r
    return Valuation(val)


def conjecture13_valuation(q: QueryP) -> Valuation:
    """Conjectural closed form for v_p(s(a*p^n, a*p^m - k)).

    For p = 3 this agrees with :func:`thm1_valuation` on the whole common
    domain.  For p = 2 the correction term degenerates; the proven 2-adic
    form is used instead of a literal reading of the odd-p expression
    (see the ledger note on the p = 2 branch).
    """
    p, a, n, m, k = q.p.p, q.a, q.n, q.m, q.k
    eps = q.epsilon_k
    if p == 2:
        # a is forced to 1; proven form with the parity weight (m-1) and a
        # flat -2 - v2(floor(k/2)) correction.
        val = (2**n - 2**m) - (n - m) * (2**m - k) + m - 2 - vp_int(2, k // 2).value
        if eps:
            val += m - 1
        return Valuation(val)
    spread = a * (p**n - p**m)
    assert spread % (p - 1) == 0
    val = spread // (p - 1) - (n - m) * (a * p**m - k) + m + (m + vp_int(p, k).value) * eps
    if (k - eps) % (p - 1) == 0:
        val += -1 - vp_int(p, k // 2).value
    else:
        b = bernoulli(2 * (q.k_residue // 2))
        val += vp_rational(p, b).value
    return Valuation(val)


def thm2_shift_valuation(a: int, n: int, k: int) -> OracleResult:
    """v_3(s(a*3^n + 1, k + 1)): exact when k = a (mod 2), else a lower bound."""
    if a not in (1, 2):
        raise DomainError(f"a must be 1 or 2, got {a}")
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if not 1 <= k <= a * 3**n:
        raise DomainError(f"k must satisfy 1 <= k <= a*3^n = {a * 3 ** n}, got {k}")
    if (k - a) % 2 == 0:
        return OracleResult(BoundKind.EXACT, full_valuation_3(a, n, k))
    return OracleResult(BoundKind.LOWER_BOUND, full_valuation_3(a, n, k + 1) + n)


def max_valuation_bound(a: int, n: int) -> OracleResult:
    """Sharp upper bound for v_3(s(a*3^n, t)) over all t in [1, a*3^n]."""
    if a not in (1, 2):
        raise DomainError(f"a must be 1 or 2, got {a}")
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if a == 1:
        if n == 1:
            bound = 1
        elif n == 2:
            bound = 4
        else:
            bound = (3**n - 2 * n - 1) // 2
    else:
        bound = 2 if n == 1 else 3**n - n - 1
    return OracleResult(BoundKind.UPPER_BOUND, Valuation(bound))


def _as_a3n(n: int) -> tuple[int, int] | None:
    """Recognize n = a*3^N with a in {1, 2}, N >= 1; return (a, N) or None."""
    if n < 3:
        return None
    big_n = vp_int(_P3, n).value
    a = n // 3**big_n
    if big_n >= 1 and a in (1, 2):
        return a, big_n
    return None


def h_valuation(p: int | Prime, n: int, k: int) -> Valuation:
    """v_p of the k-th elementary symmetric function of 1, 1/2, ..., 1/n.

    Always computed exactly from the rational value.  When p = 3,
    n = a*3^N and k = a (mod 2) with k >= 1, the closed-form chain
    v_3(s(n+1, k+1)) - v_3(n!) must give the same answer; the agreement is
    asserted rather than trusted.
    """
    from .bigmath import harmonic_sym

    prime = as_prime(p)
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    if not 0 <= k <= n:
        raise DomainError(f"k must satisfy 0 <= k <= n, got k={k}, n={n}")
    exact = vp_rational(prime, harmonic_sym(n, k))
    if prime.p == 3 and k >= 1:
        form = _as_a3n(n)
        if form is not None:
            a, big_n = form
            if (k - a) % 2 == 0:
                chain = full_valuation_3(a, big_n, k) - vp_factorial(prime, n)
                assert chain == exact, (n, k, str(chain), str(exact))
    return exact
