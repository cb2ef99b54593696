"""All theorem-, corollary-, identity-, and conjecture-level checks.

Each check is a pure function over immutable inputs returning a
CheckReport.  Proved statements get PASS/FAIL (a FAIL means a bug here,
not new mathematics); conjecture scans get EMPIRICAL_PASS or
EMPIRICAL_COUNTEREXAMPLE with every violation recorded.
"""

from __future__ import annotations

from .partitions import (
    REGIME_III,
    PartResidueRule,
    PartitionTable,
    count_restricted,
    p_table,
    r_gf,
    r_s_decomposed,
    r_star_decomposed,
    regime3_rule,
    regime4_rule,
)
from .report import Stopwatch, Violation, empirical_report, proved_report
from .series import ParitySeries, TruncatedSeries
from .squares import SquareProgression, index_set, indicator_bits, is_square
from .theta import (
    bilateral_sum,
    eq41_families,
    eq42_family,
    even_binomial_ratio,
    gauss_error_tail,
    partial_theta,
    regime3_sum,
    regime3_sum_parity,
    regime4_sum,
    regime4_sum_parity,
)

# the seven (a, b) pairs for which the square-progression parity statement
# is asserted to hold
S_PAIRS = ((6, 8), (8, 12), (12, 24), (15, 40), (16, 48), (20, 120), (21, 168))

# default truncation orders: proved statements on the big-integer path,
# parity-only runs, conjecture scans
DEFAULT_ORDER_PROVED = 2000
DEFAULT_ORDER_PARITY = 100_000
DEFAULT_ORDER_CONJECTURE = 500
DEFAULT_ORDER_IDENTITY = 300


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise ValueError(message)


def theorem1_progression(part: int, s: int) -> SquareProgression:
    if part == 1:
        return SquareProgression(120, (3 * s - 5) ** 2)
    return SquareProgression(40, s * s)


def corollary2_progression(part: int, s: int) -> SquareProgression:
    if part == 1:
        return SquareProgression(20, (s - 1) ** 2)
    return SquareProgression(15, (s + 1) ** 2 // 4)


def _validate_part_s(part: int, s: int) -> None:
    _require(part in (1, 2), "part must be 1 or 2")
    if part == 1:
        _require(s in (2, 4), "part 1 requires s in {2, 4}")
    else:
        _require(s in (1, 3), "part 2 requires s in {1, 3}")


def rho_series(part: int, s: int, order: int) -> TruncatedSeries:
    """Coefficients of the bilateral theta series subtracted in the
    identities; operational definition of the conjectures' correction term.
    """
    _validate_part_s(part, s)
    if part == 1:
        return bilateral_sum(eq41_families(s), order)
    return bilateral_sum([eq42_family(s)], order)


def check_theorem1(part: int, s: int, order: int | None = None,
                   use_parity_fastpath: bool = False,
                   collect_all: bool = True):
    """Regime sum reduced mod 2 versus the square-progression indicator."""
    _validate_part_s(part, s)
    if order is None:
        order = DEFAULT_ORDER_PARITY if use_parity_fastpath else DEFAULT_ORDER_PROVED
    watch = Stopwatch()
    if use_parity_fastpath:
        lhs = (regime3_sum_parity if part == 1 else regime4_sum_parity)(s, order)
    else:
        lhs = (regime3_sum if part == 1 else regime4_sum)(s, order).reduce_mod2()
    rhs_bits = indicator_bits(theorem1_progression(part, s), order)

    violations = []
    diff = lhs.bits ^ rhs_bits
    while diff:
        low = diff & -diff
        n = low.bit_length() - 1
        violations.append(Violation(n, lhs.bit(n), (rhs_bits >> n) & 1))
        diff ^= low
        if not collect_all:
            break
    return proved_report(
        f"theorem1.part{part}.s{s}",
        {"part": part, "s": s, "order": order,
         "path": "parity" if use_parity_fastpath else "bigint"},
        violations,
        watch.elapsed_ms(),
    )


def check_corollary2(part: int, s: int, order: int | None = None,
                     collect_all: bool = True,
                     p: PartitionTable | None = None):
    """Pointwise iff: the partition-sum parity is odd exactly when the
    associated progression value is a perfect square."""
    _validate_part_s(part, s)
    if order is None:
        order = DEFAULT_ORDER_PROVED
    watch = Stopwatch()
    if p is None:
        p = p_table(order)
    if p.n_max < order:
        raise ValueError("partition table shorter than requested order")
    parity = [v & 1 for v in p.values]
    ks = index_set(corollary2_progression(part, s), order)
    target = theorem1_progression(part, s)

    violations = []
    for n in range(order + 1):
        acc = 0
        for k in ks:
            if k > n:
                break
            acc ^= parity[n - k]
        want = 1 if target.holds(n) else 0
        if acc != want:
            violations.append(Violation(n, acc, want))
            if not collect_all:
                break
    return proved_report(
        f"corollary2.part{part}.s{s}",
        {"part": part, "s": s, "order": order},
        violations,
        watch.elapsed_ms(),
    )


def check_s_pair(a: int, b: int, order: int | None = None,
                 collect_all: bool = True,
                 p: PartitionTable | None = None):
    """Empirical scan of: sum of p(n-k) over {a*k+1 square} is odd iff
    b*n+1 is a square.  Proved for some pairs, conjecturally sharp for the
    S set; controls outside S are expected to fail and the first violating
    n is recorded."""
    _require(a >= 1 and b >= 1, "a and b must be positive")
    if order is None:
        order = DEFAULT_ORDER_CONJECTURE
    watch = Stopwatch()
    if p is None:
        p = p_table(order)
    parity = [v & 1 for v in p.values[: order + 1]]
    ks = index_set(SquareProgression(a, 1), order)

    violations = []
    for n in range(order + 1):
        acc = 0
        for k in ks:
            if k > n:
                break
            acc ^= parity[n - k]
        want = 1 if is_square(b * n + 1) else 0
        if acc != want:
            violations.append(Violation(n, acc, want))
            if not collect_all:
                break
    return empirical_report(
        f"spair.a{a}.b{b}",
        {"a": a, "b": b, "order": order, "in_s_set": (a, b) in S_PAIRS},
        violations,
        watch.elapsed_ms(),
    )


def _compare_series(check_id: str, params: dict, lhs: TruncatedSeries,
                    rhs: TruncatedSeries, watch: Stopwatch,
                    collect_all: bool = True, details: dict | None = None):
    violations = []
    n = min(lhs.order, rhs.order)
    for i in range(n + 1):
        if lhs.coeffs[i] != rhs.coeffs[i]:
            violations.append(Violation(i, lhs.coeffs[i], rhs.coeffs[i]))
            if not collect_all:
                break
    return proved_report(check_id, params, violations, watch.elapsed_ms(), details)


def check_identity_id1(s: int, k: int, order: int | None = None,
                       collect_all: bool = True):
    """Truncated-theta times regime-III sum minus the bilateral series,
    against the explicit tail product (s in {2, 4}, k >= 1)."""
    _require(s in (2, 4), "s must be 2 or 4")
    _require(k >= 1, "k must be >= 1")
    if order is None:
        order = DEFAULT_ORDER_IDENTITY
    watch = Stopwatch()
    bilateral = bilateral_sum(eq41_families(s), order)
    lhs = partial_theta(k, order) * regime3_sum(s, order) - bilateral
    tail = even_binomial_ratio(k, order).scale(2) * gauss_error_tail(k, order)
    rhs = tail * bilateral
    if k % 2 == 1:
        rhs = -rhs
    return _compare_series(
        f"id1.s{s}.k{k}", {"s": s, "k": k, "order": order},
        lhs, rhs, watch, collect_all,
    )


def check_identity_id2(s: int, k: int, order: int | None = None,
                       collect_all: bool = True):
    """Same assembly as id1 for the regime-IV sum (s in {1, 3})."""
    _require(s in (1, 3), "s must be 1 or 3")
    _require(k >= 1, "k must be >= 1")
    if order is None:
        order = DEFAULT_ORDER_IDENTITY
    watch = Stopwatch()
    bilateral = bilateral_sum([eq42_family(s)], order)
    lhs = partial_theta(k, order) * regime4_sum(s, order) - bilateral
    tail = even_binomial_ratio(k, order).scale(2) * gauss_error_tail(k, order)
    rhs = tail * bilateral
    if k % 2 == 1:
        rhs = -rhs
    return _compare_series(
        f"id2.s{s}.k{k}", {"s": s, "k": k, "order": order},
        lhs, rhs, watch, collect_all,
    )


def conjecture1_difference(part: int, s: int, k: int, order: int) -> TruncatedSeries:
    """partial_theta(k) * regime sum - bilateral series: the object whose
    coefficient signs the first conjecture predicts."""
    _validate_part_s(part, s)
    regime = (regime3_sum if part == 1 else regime4_sum)(s, order)
    return partial_theta(k, order) * regime - rho_series(part, s, order)


def check_conjecture1(part: int, s: int, k: int, order: int | None = None,
                      collect_all: bool = True):
    """Difference series has coefficients >= 0 for even k, <= 0 for odd k."""
    _validate_part_s(part, s)
    _require(k >= 1, "k must be >= 1")
    if order is None:
        order = DEFAULT_ORDER_CONJECTURE
    watch = Stopwatch()
    diff = conjecture1_difference(part, s, k, order)
    want_sign = 1 if k % 2 == 0 else -1

    violations = []
    for n, c in enumerate(diff.coeffs):
        if c * want_sign < 0:
            violations.append(Violation(n, c, 0))
            if not collect_all:
                break
    return empirical_report(
        f"conjecture1.part{part}.s{s}.k{k}",
        {"part": part, "s": s, "k": k, "order": order,
         "expected_sign": "nonnegative" if want_sign == 1 else "nonpositive"},
        violations,
        watch.elapsed_ms(),
    )


INNER_SIGN_ALTERNATING = "alternating_j"
INNER_SIGN_LITERAL = "literal"


def _conjecture2_inner_coeffs(part: int, k: int, reading: str) -> list[int]:
    """Coefficient of the j-th shifted term, j = 1..k.

    The displayed inequalities carry (-1)^k inside the sum for part 1 and
    no sign for part 2; the alternating reading (-1)^j is the one obtained
    by extracting coefficients from the first conjecture.  Both are
    evaluated and reported.
    """
    if reading == INNER_SIGN_ALTERNATING:
        return [(-1) ** j for j in range(1, k + 1)]
    if part == 1:
        return [(-1) ** k] * k
    return [1] * k


def check_conjecture2(part: int, s: int, k: int, order: int | None = None,
                      collect_all: bool = True,
                      tables: PartitionTable | None = None):
    """Both readings of the shifted-count inequality; returns two reports.

    For counts T (regime III or IV) and the bilateral coefficients rho:
    (-1)^k (T(n) + 2*sum_j coeff_j*T(n-2j^2) - rho(n)) >= 0 for n <= order.
    """
    _validate_part_s(part, s)
    _require(k >= 1, "k must be >= 1")
    if order is None:
        order = DEFAULT_ORDER_CONJECTURE
    if tables is None:
        rule = regime3_rule(s) if part == 1 else regime4_rule(s)
        tables = count_restricted(rule, order)
    if tables.n_max < order:
        raise ValueError("count table shorter than requested order")
    rho = rho_series(part, s, order)
    outer = 1 if k % 2 == 0 else -1

    reports = []
    for reading in (INNER_SIGN_ALTERNATING, INNER_SIGN_LITERAL):
        watch = Stopwatch()
        inner = _conjecture2_inner_coeffs(part, k, reading)
        violations = []
        for n in range(order + 1):
            acc = tables.values[n]
            for j in range(1, k + 1):
                shift = 2 * j * j
                if shift > n:
                    break
                acc += 2 * inner[j - 1] * tables.values[n - shift]
            value = outer * (acc - rho.coeffs[n])
            if value < 0:
                violations.append(Violation(n, value, 0))
                if not collect_all:
                    break
        reports.append(
            empirical_report(
                f"conjecture2.part{part}.s{s}.k{k}.{reading}",
                {"part": part, "s": s, "k": k, "order": order,
                 "inner_sign": reading},
                violations,
                watch.elapsed_ms(),
            )
        )
    return reports


def cross_validate(rule: PartResidueRule, order: int | None = None,
                   collect_all: bool = True):
    """Three-route agreement: DP counts, generating-function coefficients,
    and the bilateral decomposition into p(n) values."""
    if order is None:
        order = DEFAULT_ORDER_CONJECTURE
    watch = Stopwatch()
    dp = count_restricted(rule, order)
    gf = r_gf(rule, order)
    p = p_table(order)
    decompose = r_s_decomposed if rule.kind == REGIME_III else r_star_decomposed

    violations = []
    routes_bad = []
    for n in range(order + 1):
        a = dp.values[n]
        b = gf.coeffs[n]
        c = decompose(rule.s, n, p)
        if not (a == b == c):
            violations.append(Violation(n, a, b if a != b else c))
            routes_bad.append({"n": n, "dp": str(a), "gf": str(b),
                               "decomposition": str(c)})
            if not collect_all:
                break
    return proved_report(
        f"cross_validate.{rule.kind}.s{rule.s}",
        {"kind": rule.kind, "s": rule.s, "order": order},
        violations,
        watch.elapsed_ms(),
        {"routes": routes_bad} if routes_bad else None,
    )
