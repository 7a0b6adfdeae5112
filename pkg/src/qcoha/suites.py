"""Verification suites: the grids behind the CLI's verify command.

Each suite walks an exhaustive grid of small inputs (plus, for associativity,
a seeded batch of random triples) and returns one CheckReport.  Every product
a suite computes is also run through the grading checks, so a grading bug
cannot hide behind a passing identity.

The random triples are drawn at lengths the exhaustive grid does not reach.
Structure-constant tables grow steeply with the block sizes, so each sampled
triple is admitted only when a lattice-point count predicts that all four
tables it needs stay within a fixed cost limit; rejected draws are skipped
deterministically and the sampling continues from the same seeded stream.
"""
from __future__ import annotations

import random
from typing import Dict, Iterable, List, Sequence, Tuple

from .bipartite import product_via_graphs
from .errors import ResourceLimitError
from .kernel import verify_coefficient_identity
from .partition_algebra import (
    PartitionElement,
    check_associativity,
    grading_failures,
    product,
    quasi_commutativity_report,
    shift_sort_product,
    specialize,
)
from .partitions import Partition, partitions_up_to
from .reports import CheckReport, QuasiCommReport
from .shuffle_algebra import (
    partition_image,
    shuffle_product,
    to_symmetric_element,
    verify_augmented_rule,
    verify_monomial_rule,
    verify_subset_sum_identity,
)

DEFAULT_SEED = 1729
DEFAULT_COST_LIMIT = 30_000


def _table_points(m: int, n: int, d: int) -> int:
    """Lattice points in the exponent box of a kernel with the right degree.

    Upper bound on (and in practice close to) the number of structure
    constants the (m, n, d) table stores; the admission gate for random
    triples sums these over the four tables an associativity check needs.
    """
    if m == 0 or n == 0 or d == 1:
        return 1
    bounds = [n * (d - 1)] * m + [m * (d - 1)] * n
    total = m * n * (d - 1)
    counts = [1] + [0] * total
    for b in bounds:
        acc = [0] * (total + 1)
        for s, c in enumerate(counts):
            if c:
                top = min(b, total - s)
                for v in range(top + 1):
                    acc[s + v] += c
        counts = acc
    return counts[total]


def triple_cost(p: int, r: int, s: int, d: int) -> int:
    """Predicted total table size for both parenthesizations of a triple."""
    return (
        _table_points(p, r, d)
        + _table_points(r, s, d)
        + _table_points(p + r, s, d)
        + _table_points(p, r + s, d)
    )


def _graded_product(
    mu: Partition, nu: Partition, d: int, grading_fails: List[str]
) -> PartitionElement:
    out = product(mu, nu, d)
    grading_fails.extend(grading_failures(mu, nu, d, out))
    return out


def _random_partition(rng: random.Random, max_len: int, max_part: int) -> Partition:
    length = rng.randint(0, max_len)
    return tuple(sorted(rng.randint(0, max_part) for _ in range(length)))


def suite_assoc(
    d_values: Sequence[int] = (1, 2, 3),
    max_len: int = 2,
    max_part: int = 2,
    random_triples: int = 50,
    random_max_len: int = 3,
    random_max_part: int = 3,
    seed: int = DEFAULT_SEED,
    cost_limit: int = DEFAULT_COST_LIMIT,
) -> CheckReport:
    """Associativity, exhaustively on a small grid plus seeded random triples.

    Also confirms, on the same grid, that setting q = 0 in each pairwise
    product collapses it to the single shift-and-sort term.
    """
    parts = partitions_up_to(max_len, max_part)
    failures: List[str] = []
    grading: List[str] = []
    checked = 0
    for d in d_values:
        for mu in parts:
            for nu in parts:
                pe = _graded_product(mu, nu, d, grading)
                at_zero = specialize(pe, 0)
                want = {shift_sort_product(mu, nu, d): 1}
                if at_zero != want:
                    failures.append(
                        "q=0 of %r * %r (d=%d) is %r, want %r"
                        % (mu, nu, d, at_zero, want)
                    )
                checked += 1
                for w in parts:
                    rep = check_associativity(mu, nu, w, d)
                    checked += 1
                    if not rep.passed:
                        failures.extend(rep.failures)
    rng = random.Random(seed)
    accepted = 0
    attempts = 0
    sampled: List[str] = []
    while accepted < random_triples:
        attempts += 1
        if attempts > 1000 * max(1, random_triples):
            raise ResourceLimitError(
                "could not find %d random triples under cost limit %d"
                % (random_triples, cost_limit)
            )
        d = rng.choice(tuple(d_values))
        mu = _random_partition(rng, random_max_len, random_max_part)
        nu = _random_partition(rng, random_max_len, random_max_part)
        w = _random_partition(rng, random_max_len, random_max_part)
        if triple_cost(len(mu), len(nu), len(w), d) > cost_limit:
            continue
        accepted += 1
        sampled.append("random d=%d %r %r %r" % (d, mu, nu, w))
        grading.extend(grading_failures(mu, nu, d, product(mu, nu, d)))
        rep = check_associativity(mu, nu, w, d)
        checked += 1
        if not rep.passed:
            failures.extend(rep.failures)
    failures.extend(grading)
    return CheckReport(
        name="assoc",
        passed=not failures,
        checked=checked,
        failures=failures,
        instances=sampled,
    )


def suite_iso(
    d_values: Sequence[int] = (1, 2, 3), max_len: int = 2, max_part: int = 2
) -> CheckReport:
    """Image of every table product equals the brute-force shuffle product."""
    parts = partitions_up_to(max_len, max_part)
    failures: List[str] = []
    grading: List[str] = []
    checked = 0
    for d in d_values:
        for mu in parts:
            for nu in parts:
                pe = _graded_product(mu, nu, d, grading)
                image = to_symmetric_element(pe)
                direct = shuffle_product(partition_image(mu), partition_image(nu), d)
                n = len(mu) + len(nu)
                checked += 1
                if set(image) != {n} or image[n] != direct:
                    failures.append(
                        "images differ for %r * %r at d=%d" % (mu, nu, d)
                    )
    failures.extend(grading)
    return CheckReport(name="iso", passed=not failures, checked=checked, failures=failures)


def suite_quasi(
    d_values: Sequence[int] = (1, 2, 3), max_len: int = 2, max_part: int = 2
) -> CheckReport:
    """Signed commutation on the grid, flagging where the unsigned form differs.

    The signed relation must hold everywhere; the unsigned one must fail on
    exactly the pairs whose exponent (d-1)|mu||nu| is odd, and every such
    pair is listed in the report's instances.
    """
    parts = partitions_up_to(max_len, max_part)
    failures: List[str] = []
    grading: List[str] = []
    flagged: List[str] = []
    checked = 0
    for d in d_values:
        for mu in parts:
            for nu in parts:
                rep: QuasiCommReport = quasi_commutativity_report(mu, nu, d)
                grading.extend(
                    grading_failures(mu, nu, d, product(mu, nu, d))
                )
                checked += 1
                if not rep.signed_matches:
                    failures.append(
                        "signed relation fails for %r %r d=%d" % (mu, nu, d)
                    )
                # products are never zero, so at odd exponent the unsigned
                # and signed candidates cannot both match
                should_differ = rep.exponent % 2 == 1
                if rep.unsigned_matches and should_differ:
                    failures.append(
                        "unsigned form unexpectedly holds for %r %r d=%d" % (mu, nu, d)
                    )
                if not rep.unsigned_matches:
                    if rep.exponent % 2 == 0:
                        failures.append(
                            "unsigned form fails at even exponent for %r %r d=%d"
                            % (mu, nu, d)
                        )
                    flagged.append(
                        "unsigned differs: mu=%r nu=%r d=%d exponent=%d"
                        % (mu, nu, d, rep.exponent)
                    )
    failures.extend(grading)
    return CheckReport(
        name="quasi",
        passed=not failures,
        checked=checked,
        failures=failures,
        instances=flagged,
    )


BOUNDARY_GRAPH_PAIRS: Tuple[Tuple[Partition, Partition], ...] = (
    ((0, 1, 2, 3), (1, 2, 3)),
    ((1, 2, 3), (0, 1, 2, 3)),
    ((0,) * 12, (3,)),
    ((3,), (0,) * 12),
)


def suite_graphs(
    max_len: int = 3, max_part: int = 3, boundary_pairs: bool = True
) -> CheckReport:
    """Orientation-sum product vs table product at d = 2, pair by pair.

    The grid covers all pairs up to the given length and part bounds; the
    boundary pairs push the edge count to the 12-bit limit of the default
    orientation budget.
    """
    parts = partitions_up_to(max_len, max_part)
    failures: List[str] = []
    grading: List[str] = []
    checked = 0
    pairs: List[Tuple[Partition, Partition]] = [
        (mu, nu) for mu in parts for nu in parts
    ]
    if boundary_pairs:
        pairs.extend(BOUNDARY_GRAPH_PAIRS)
    for mu, nu in pairs:
        graphs = product_via_graphs(mu, nu)
        table = _graded_product(mu, nu, 2, grading)
        checked += 1
        if graphs != table:
            failures.append("graph model disagrees for %r %r" % (mu, nu))
    failures.extend(grading)
    return CheckReport(
        name="graphs", passed=not failures, checked=checked, failures=failures
    )


def suite_kernel_identity(
    block_range: Sequence[int] = (1, 2), d_values: Sequence[int] = (2, 3)
) -> CheckReport:
    """Structure-constant convolution identity over all small block triples."""
    failures: List[str] = []
    checked = 0
    for d in d_values:
        for l in block_range:
            for m in block_range:
                for n in block_range:
                    rep = verify_coefficient_identity(l, m, n, d)
                    checked += 1
                    if not rep.passed:
                        failures.append(
                            "identity fails at l=%d m=%d n=%d d=%d" % (l, m, n, d)
                        )
                        failures.extend(rep.failures)
    return CheckReport(
        name="lemma31", passed=not failures, checked=checked, failures=failures
    )


def suite_augmented_rule(max_len: int = 4, max_part: int = 3) -> CheckReport:
    """Both classical product rules against direct polynomial expansion.

    Covers the augmented-times-monomial rule and the rational monomial rule
    on every equal-length pair up to the bounds.
    """
    failures: List[str] = []
    checked = 0
    by_len: Dict[int, List[Partition]] = {}
    for p in partitions_up_to(max_len, max_part):
        by_len.setdefault(len(p), []).append(p)
    for _, group in sorted(by_len.items()):
        for lam in group:
            for mu in group:
                rep = verify_augmented_rule(lam, mu)
                checked += 1
                if not rep.passed:
                    failures.extend(rep.failures)
                rep = verify_monomial_rule(lam, mu)
                checked += 1
                if not rep.passed:
                    failures.extend(rep.failures)
    return CheckReport(
        name="prop41", passed=not failures, checked=checked, failures=failures
    )


def suite_subset_sum(max_len: int = 3, max_part: int = 3) -> CheckReport:
    """The variable-splitting identity on every pair up to the bounds."""
    failures: List[str] = []
    checked = 0
    parts = partitions_up_to(max_len, max_part)
    for lam in parts:
        for mu in parts:
            rep = verify_subset_sum_identity(lam, mu)
            checked += 1
            if not rep.passed:
                failures.extend(rep.failures)
    return CheckReport(
        name="prop43", passed=not failures, checked=checked, failures=failures
    )


def suite_grading(
    d_values: Sequence[int] = (1, 2, 3), max_len: int = 2, max_part: int = 2
) -> CheckReport:
    """Length and weight grading of every term of every grid product."""
    parts = partitions_up_to(max_len, max_part)
    failures: List[str] = []
    checked = 0
    for d in d_values:
        for mu in parts:
            for nu in parts:
                fails = grading_failures(mu, nu, d, product(mu, nu, d))
                checked += 1
                failures.extend(fails)
    return CheckReport(
        name="grading", passed=not failures, checked=checked, failures=failures
    )


SUITES = {
    "assoc": suite_assoc,
    "iso": suite_iso,
    "quasi": suite_quasi,
    "graphs": suite_graphs,
    "lemma31": suite_kernel_identity,
    "prop41": suite_augmented_rule,
    "prop43": suite_subset_sum,
    "grading": suite_grading,
}
