"""Differential verification of every closed form against exact computation.

Each check produces a :class:`CheckRecord` whose ``expected`` field holds the
claim made by the formula or identity under test and whose ``actual`` field
holds the independently measured exact value.  A record passes when the two
agree exactly (or, for one-sided claims written ``>=b``, when the measured
value meets the bound).  Sweeps enumerate exhaustive parameter grids and
return deterministic, sorted reports.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field

from .bigmath import (
    binomial,
    harmonic_sym,
    stirling1,
    stirling1_row,
    stirling1_shifted,
    stirling1_shifted_row,
)
from .errors import DomainError, UsageError
from .oracles import (
    BoundKind,
    QueryP,
    conjecture13_valuation,
    cor1_valuation,
    decompose,
    full_valuation_3,
    max_valuation_bound,
    thm1_valuation,
    thm2_shift_valuation,
)
from .padic import Prime, as_prime, vp_int

__all__ = [
    "CheckRecord",
    "VerificationReport",
    "check_lemma21",
    "check_lemma22",
    "check_lemma24",
    "check_lemma25",
    "check_lemma26",
    "check_identity11",
    "check_congruence",
    "sweep",
    "explore_conjecture13",
    "SUITES",
]

#: Guard on exact-row size used by the conjecture explorer.
EXPLORE_ROW_GUARD = 5000


@dataclass(frozen=True)
class CheckRecord:
    """One grid point: the claim, the measured value, and the verdict."""

    check_id: str
    params: dict[str, int]
    expected: str
    actual: str
    passed: bool

    def as_json_obj(self) -> dict:
        return {
            "check_id": self.check_id,
            "params": dict(self.params),
            "expected": self.expected,
            "actual": self.actual,
            "pass": self.passed,
        }


def _sort_key(rec: CheckRecord):
    return tuple(rec.params[k] for k in sorted(rec.params)) + (rec.check_id,)


@dataclass
class VerificationReport:
    """A sorted, deterministic summary of one suite run.

    Counts are always recomputed from the records, so total = passed +
    failed holds by construction.  ``deviations`` counts failed records of
    the conjectural suite, which are reported but are not treated as bugs.
    """

    suite: str
    records: list[CheckRecord] = field(default_factory=list)

    def __post_init__(self):
        self.records = sorted(self.records, key=_sort_key)

    @property
    def total(self) -> int:
        return len(self.records)

    @property
    def passed(self) -> int:
        return sum(1 for r in self.records if r.passed)

    @property
    def failed(self) -> int:
        return self.total - self.passed

    @property
    def deviations(self) -> int:
        return self.failed if self.suite == "conjecture13" else 0

    def as_json_obj(self) -> dict:
        return {
            "suite": self.suite,
            "total": self.total,
            "passed": self.passed,
            "failed": self.failed,
            "deviations": self.deviations,
            "records": [r.as_json_obj() for r in self.records],
        }

    def to_json(self, *, indent: int | None = 2) -> str:
        return json.dumps(self.as_json_obj(), indent=indent)

    def csv_rows(self) -> list[list[str]]:
        """Header plus one row per record, param columns in sorted order."""
        keys = sorted(self.records[0].params) if self.records else []
        rows = [["check_id", *keys, "expected", "actual", "pass"]]
        for r in self.records:
            rows.append(
                [r.check_id]
                + [str(r.params[k]) for k in keys]
                + [r.expected, r.actual, "true" if r.passed else "false"]
            )
        return rows


def _record(check_id: str, params: dict[str, int], expected, actual) -> CheckRecord:
    e, a = str(expected), str(actual)
    if e.startswith(">="):
        bound = int(e[2:])
        ok = not a.startswith(">=") and (a == "inf" or int(a) >= bound)
    else:
        ok = e == a
    return CheckRecord(check_id, params, e, a, ok)


# ---------------------------------------------------------------------------
# individual identity checks
# ---------------------------------------------------------------------------


def check_lemma21(n: int, k: int) -> CheckRecord:
    """Alternating-sum identity for s(n, k) when n + k is odd.

    Verified as 2*s(n,k) == sum((-1)^(n-i) s(n,i) C(i-1, i-k) n^(i-k)
    for i in k+1..n), in integers, avoiding the rational halving.
    """
    if not 1 <= k < n:
        raise DomainError(f"need 1 <= k < n, got k={k}, n={n}")
    if (n + k) % 2 == 0:
        raise DomainError(f"n + k must be odd, got n={n}, k={k}")
    row = stirling1_row(n)
    rhs = sum(
        (-1) ** (n - i) * row[i] * binomial(i - 1, i - k) * n ** (i - k)
        for i in range(k + 1, n + 1)
    )
    return _record("lemma21", {"n": n, "k": k}, rhs, 2 * row[k])


def check_lemma24(m: int, n: int, k: int) -> CheckRecord:
    """Convolution splitting s(m+n, k) through the shifted numbers.

    s(m+n, k) == sum(s(m, i) * s_m(n, k-i)); s(m, i) extends by zero for
    i > m, while the shifted factor constrains i >= k - n.
    """
    if m < 0 or n < 1 or k < 0:
        raise DomainError(f"need m >= 0, n >= 1, k >= 0, got m={m}, n={n}, k={k}")
    conv = sum(
        stirling1(m, i) * stirling1_shifted(m, n, k - i)
        for i in range(max(0, k - n), min(k, m) + 1)
    )
    return _record("lemma24", {"m": m, "n": n, "k": k}, conv, stirling1(m + n, k))


def check_lemma25(m: int, n: int, k: int) -> CheckRecord:
    """Expansion of the shifted numbers over the plain row:

    s_m(n, k) == sum(s(n, i) * C(i, i-k) * m^(i-k) for i in k..n).
    """
    if m < 0:
        raise DomainError(f"need m >= 0, got {m}")
    if n < 1 or not 0 <= k <= n:
        raise DomainError(f"need n >= 1 and 0 <= k <= n, got n={n}, k={k}")
    row = stirling1_row(n)
    expansion = sum(
        row[i] * binomial(i, i - k) * m ** (i - k) for i in range(k, n + 1)
    )
    return _record("lemma25", {"m": m, "n": n, "k": k}, expansion, stirling1_shifted(m, n, k))


def check_identity11(n: int, k: int) -> CheckRecord:
    """n! times the elementary symmetric function equals s(n+1, k+1)."""
    if n < 1 or not 0 <= k <= n:
        raise DomainError(f"need n >= 1 and 0 <= k <= n, got n={n}, k={k}")
    claim = math.factorial(n) * harmonic_sym(n, k)
    claim_str = str(claim.numerator) if claim.denominator == 1 else str(claim)
    return _record("identity11", {"n": n, "k": k}, claim_str, stirling1(n + 1, k + 1))


def check_congruence(m: int, n: int, k: int) -> CheckRecord:
    """The shifted numbers reduce to the plain ones mod the shift."""
    if m < 1 or n < 1 or not 0 <= k <= n:
        raise DomainError(f"need m >= 1, n >= 1, 0 <= k <= n, got m={m}, n={n}, k={k}")
    return _record(
        "congruence",
        {"m": m, "n": n, "k": k},
        stirling1(n, k) % m,
        stirling1_shifted(m, n, k) % m,
    )


def check_lemma22(a: int, n: int, t: int) -> CheckRecord:
    """Odd-step increment in a row of valuations:

    v_3(s(N, N-2t-1)) == v_3(s(N, N-2t)) + v_3(2t+1) + n for N = a*3^n.
    """
    if a not in (1, 2) or n < 1:
        raise DomainError(f"need a in {{1,2}} and n >= 1, got a={a}, n={n}")
    top = a * 3**n
    if not 0 <= t <= (top - 2) // 2:
        raise DomainError(f"need 0 <= t <= (a*3^n - 2)/2 = {(top - 2) // 2}, got {t}")
    row = stirling1_row(top)
    rhs = vp_int(3, row[top - 2 * t]) + vp_int(3, 2 * t + 1) + n
    lhs = vp_int(3, row[top - 2 * t - 1])
    return _record("lemma22", {"a": a, "n": n, "t": t}, rhs, lhs)


def check_lemma26(a: int, n: int, t: int) -> CheckRecord:
    """Valuation transfer between the shifted row s_{3^n}(a*3^n, .) and s.

    When t = a (mod 2) the valuations agree and their difference carries at
    least two extra powers of 3; otherwise the shifted valuation is bounded
    below by v_3(s(a*3^n, t+1)) + n.
    """
    if a not in (1, 2) or not 1 <= n <= 4:
        raise DomainError(f"need a in {{1,2}} and 1 <= n <= 4, got a={a}, n={n}")
    top = a * 3**n
    if not 1 <= t <= top:
        raise DomainError(f"need 1 <= t <= a*3^n = {top}, got {t}")
    row = stirling1_row(top)
    shifted = stirling1_shifted_row(3**n, top)
    v_shift = vp_int(3, shifted[t])
    if (t - a) % 2 == 0:
        v_plain = vp_int(3, row[t])
        v_diff = vp_int(3, shifted[t] - row[t])
        expected = f"{v_plain};diff>={v_plain + 2}"
        actual = f"{v_shift};diff={v_diff}"
        ok = v_shift == v_plain and v_diff >= v_plain + 2
        return CheckRecord("lemma26", {"a": a, "n": n, "t": t}, expected, actual, ok)
    bound = vp_int(3, row[t + 1]) + n
    return _record("lemma26", {"a": a, "n": n, "t": t}, f">={bound}", v_shift)


# ---------------------------------------------------------------------------
# sweeps
# ---------------------------------------------------------------------------


def _limit_keys(limits: dict, allowed: set[str], suite: str) -> None:
    unknown = set(limits) - allowed
    if unknown:
        raise UsageError(
            f"unknown limit(s) {sorted(unknown)} for suite {suite!r}; "
            f"allowed: {sorted(allowed)}"
        )


def _an_grid(limits: dict, default_n_max: int) -> list[tuple[int, int]]:
    a_values = [limits["a"]] if "a" in limits else [1, 2]
    if "n" in limits:
        n_values = [limits["n"]]
    else:
        n_values = list(range(1, limits.get("n_max", default_n_max) + 1))
    return [(a, n) for a in a_values for n in n_values]


def _sweep_thm1(limits: dict) -> list[CheckRecord]:
    records = []
    for a, n in _an_grid(limits, 6):
        row = stirling1_row(a * 3**n)
        for t in range(1, a * 3**n - 1):
            q = decompose(a, n, t)
            records.append(
                _record(
                    "thm1",
                    {"a": a, "n": n, "t": t},
                    thm1_valuation(q),
                    vp_int(3, row[t]),
                )
            )
    return records


def _sweep_cor1(limits: dict) -> list[CheckRecord]:
    records = []
    for a, n in _an_grid(limits, 6):
        row = stirling1_row(a * 3**n)
        k_top = min(2 * a * 3 ** (n - 1) + 1, a * 3**n - 1)
        for k in range(2, k_top + 1):
            records.append(
                _record(
                    "cor1",
                    {"a": a, "n": n, "k": k},
                    cor1_valuation(a, n, k),
                    vp_int(3, row[a * 3**n - k]),
                )
            )
    return records


def _sweep_thm2(limits: dict) -> list[CheckRecord]:
    records = []
    for a, n in _an_grid(limits, 5):
        row_up = stirling1_row(a * 3**n + 1)
        for k in range(1, a * 3**n + 1):
            res = thm2_shift_valuation(a, n, k)
            claim = str(res.value) if res.kind is BoundKind.EXACT else f">={res.value}"
            records.append(
                _record("thm2", {"a": a, "n": n, "k": k}, claim, vp_int(3, row_up[k + 1]))
            )
    return records


def _sweep_thm34(limits: dict) -> list[CheckRecord]:
    records = []
    for a, n in _an_grid(limits, 6):
        row = stirling1_row(a * 3**n)
        peak = max(vp_int(3, row[t]).value for t in range(1, a * 3**n + 1))
        bound = max_valuation_bound(a, n)
        records.append(_record("thm34", {"a": a, "n": n}, bound.value, peak))
    return records


def _sweep_lemma21(limits: dict) -> list[CheckRecord]:
    n_max = limits.get("n_max", 40)
    return [
        check_lemma21(n, k)
        for n in range(2, n_max + 1)
        for k in range(1, n)
        if (n + k) % 2 == 1
    ]


def _sweep_lemma22(limits: dict) -> list[CheckRecord]:
    records = []
    for a, n in _an_grid(limits, 5):
        for t in range(0, (a * 3**n - 2) // 2 + 1):
            records.append(check_lemma22(a, n, t))
    return records


def _sweep_lemma24(limits: dict) -> list[CheckRecord]:
    m_max = limits.get("m_max", 15)
    n_max = limits.get("n_max", 15)
    return [
        check_lemma24(m, n, k)
        for m in range(0, m_max + 1)
        for n in range(1, n_max + 1)
        for k in range(0, m + n + 1)
    ]


def _sweep_lemma25(limits: dict) -> list[CheckRecord]:
    m_max = limits.get("m_max", 12)
    n_max = limits.get("n_max", 12)
    return [
        check_lemma25(m, n, k)
        for m in range(0, m_max + 1)
        for n in range(1, n_max + 1)
        for k in range(0, n + 1)
    ]


def _sweep_lemma26(limits: dict) -> list[CheckRecord]:
    records = []
    for a, n in _an_grid(limits, 3):
        for t in range(1, a * 3**n + 1):
            records.append(check_lemma26(a, n, t))
    return records


def _sweep_identity11(limits: dict) -> list[CheckRecord]:
    n_max = limits.get("n_max", 60)
    return [check_identity11(n, k) for n in range(1, n_max + 1) for k in range(0, n + 1)]


def _sweep_congruence(limits: dict) -> list[CheckRecord]:
    m_max = limits.get("m_max", 20)
    n_max = limits.get("n_max", 20)
    return [
        check_congruence(m, n, k)
        for m in range(1, m_max + 1)
        for n in range(1, n_max + 1)
        for k in range(0, n + 1)
    ]


def _conjecture_records(p: Prime, a: int, n_values: list[int]) -> list[CheckRecord]:
    q = p.p
    records = []
    for n in n_values:
        row = stirling1_row(a * q**n)
        for m in range(1, n + 1):
            k_top = min(a * (q - 1) * q ** (m - 1) + 1, a * q**m - 1)
            for k in range(2, k_top + 1):
                query = QueryP(p, a, n, m, k)
                records.append(
                    _record(
                        "conjecture13",
                        {"p": q, "a": a, "n": n, "m": m, "k": k},
                        conjecture13_valuation(query),
                        vp_int(p, row[query.t]),
                    )
                )
    return records


def _sweep_conjecture13(limits: dict) -> list[CheckRecord]:
    p = as_prime(limits.get("p", 3))
    a = limits.get("a", 1)
    if "n" in limits:
        n_values = [limits["n"]]
    elif "n_max" in limits:
        n_values = list(range(1, limits["n_max"] + 1))
    else:
        # default exploration budget: largest n with a*p^n <= 650
        n_top = 0
        while a * p.p ** (n_top + 1) <= 650:
            n_top += 1
        n_values = list(range(1, n_top + 1))
    if not 1 <= a <= p.p - 1:
        raise DomainError(f"a must satisfy 1 <= a <= p-1 = {p.p - 1}, got {a}")
    guard = max(n_values, default=0)
    if n_values and a * p.p**guard > EXPLORE_ROW_GUARD:
        raise DomainError(
            f"a*p^n = {a * p.p ** guard} exceeds the exact-row guard {EXPLORE_ROW_GUARD}"
        )
    return _conjecture_records(p, a, n_values)


_SWEEPS = {
    "thm1": (_sweep_thm1, {"a", "n", "n_max"}),
    "cor1": (_sweep_cor1, {"a", "n", "n_max"}),
    "thm2": (_sweep_thm2, {"a", "n", "n_max"}),
    "thm34": (_sweep_thm34, {"a", "n", "n_max"}),
    "lemma21": (_sweep_lemma21, {"n_max"}),
    "lemma22": (_sweep_lemma22, {"a", "n", "n_max"}),
    "lemma24": (_sweep_lemma24, {"m_max", "n_max"}),
    "lemma25": (_sweep_lemma25, {"m_max", "n_max"}),
    "lemma26": (_sweep_lemma26, {"a", "n", "n_max"}),
    "identity11": (_sweep_identity11, {"n_max"}),
    "congruence": (_sweep_congruence, {"m_max", "n_max"}),
    "conjecture13": (_sweep_conjecture13, {"p", "a", "n", "n_max"}),
}

#: Valid suite names, in a stable order.
SUITES = tuple(_SWEEPS)


def sweep(suite: str, limits: dict | None = None) -> VerificationReport:
    """Run one suite exhaustively over its (possibly limited) grid."""
    if suite not in _SWEEPS:
        raise UsageError(f"unknown suite {suite!r}; valid suites: {', '.join(SUITES)}")
    fn, allowed = _SWEEPS[suite]
    limits = dict(limits or {})
    _limit_keys(limits, allowed, suite)
    return VerificationReport(suite, fn(limits))


def explore_conjecture13(p: int | Prime, a: int, n_max: int) -> VerificationReport:
    """Compare the conjectural evaluator against exact rows for n <= n_max.

    Mismatches are deviations (reported, counted separately), not bugs.
    """
    prime = as_prime(p)
    if not 1 <= a <= prime.p - 1:
        raise DomainError(f"a must satisfy 1 <= a <= p-1 = {prime.p - 1}, got {a}")
    if n_max < 1:
        raise DomainError(f"n_max must be >= 1, got {n_max}")
    if a * prime.p**n_max > EXPLORE_ROW_GUARD:
        raise DomainError(
            f"a*p^n_max = {a * prime.p ** n_max} exceeds the exact-row guard "
            f"{EXPLORE_ROW_GUARD}"
        )
    return VerificationReport(
        "conjecture13", _conjecture_records(prime, a, list(range(1, n_max + 1)))
    )
