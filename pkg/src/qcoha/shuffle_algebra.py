"""Symmetric polynomials in the monomial basis and the shuffle product.

A SymmetricElement is a finite combination of monomial symmetric polynomials
m_lam in a fixed number of variables, keyed by weakly increasing exponent
tuples of that length.  The augmented variant sums x across all of the
symmetric group instead of the distinct rearrangements only, so it equals
multiplicity(lam) * m_lam; partitions embed into this picture by sending a
basis partition to its augmented monomial.

The shuffle product expands both factors, sums over every split of the
ambient variables into a subset for each factor, multiplies in the pairwise
kernel for the split, and reads the result back in the monomial basis.  This
is deliberately brute force: it is the independent oracle that the structure
constant route is verified against.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from math import comb
from typing import Dict, List, Optional, Tuple

from .errors import NotSymmetricError, ResourceLimitError
from .kernel import DEFAULT_TERM_CAP, pairwise_kernel
from .mpoly import MPoly, embed
from .partition_algebra import PartitionElement, product
from .partitions import (
    Partition,
    distinct_permutations,
    is_partition,
    multiplicity,
    sort_ascending,
    vec_add,
)
from .qlaurent import ONE, QLaurent, Rational, as_rational
from .reports import CheckReport

DEFAULT_MAX_SUBSETS = 10_000


class SymmetricElement:
    """A combination of monomial symmetric polynomials at fixed arity."""

    __slots__ = ("arity", "terms")

    def __init__(self, arity: int, terms: Optional[Dict[Partition, QLaurent]] = None):
        if arity < 0:
            raise ValueError("arity must be non-negative")
        clean: Dict[Partition, QLaurent] = {}
        if terms:
            for key, coeff in terms.items():
                k = tuple(key)
                if len(k) != arity or not is_partition(k):
                    raise ValueError(
                        "key %r is not a weakly increasing tuple of length %d"
                        % (k, arity)
                    )
                if not isinstance(coeff, QLaurent):
                    coeff = QLaurent.const(coeff)
                if coeff:
                    clean[k] = coeff
        self.arity = arity
        self.terms = clean

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if not isinstance(other, SymmetricElement):
            return NotImplemented
        return self.arity == other.arity and self.terms == other.terms

    def __repr__(self):
        return "SymmetricElement(%d, %d terms)" % (self.arity, len(self.terms))

    def coefficient(self, key) -> QLaurent:
        from .qlaurent import ZERO

        return self.terms.get(tuple(key), ZERO)


GradedElement = Dict[int, SymmetricElement]


def monomial_symmetric(lam: Partition) -> MPoly:
    """m_lam: one monomial per distinct rearrangement of the exponents."""
    lam = tuple(lam)
    return MPoly._raw(len(lam), {w: ONE for w in distinct_permutations(lam)})


def augmented_monomial(lam: Partition) -> MPoly:
    """Sum of x**(lam permuted) over the whole symmetric group."""
    lam = tuple(lam)
    c = QLaurent.const(multiplicity(lam))
    return monomial_symmetric(lam).scale(c)


def expand(element: SymmetricElement) -> MPoly:
    out: Dict[Tuple[int, ...], QLaurent] = {}
    for lam, coeff in element.terms.items():
        for w in distinct_permutations(lam):
            out[w] = coeff
    return MPoly._raw(element.arity, out)


def to_monomial_basis(p: MPoly) -> SymmetricElement:
    """Read a symmetric polynomial in the monomial basis.

    Symmetry is certified by checking invariance under the adjacent
    transpositions, which generate the whole symmetric group.
    """
    n = p.arity
    for i in range(n - 1):
        for e, c in p.terms.items():
            if e[i] == e[i + 1]:
                continue
            swapped = e[:i] + (e[i + 1], e[i]) + e[i + 2 :]
            if p.terms.get(swapped) != c:
                raise NotSymmetricError(
                    "not symmetric: terms at %r and %r differ" % (e, swapped)
                )
    terms = {e: c for e, c in p.terms.items() if is_partition(e)}
    return SymmetricElement(n, terms)


def shuffle_product(
    f1: SymmetricElement,
    f2: SymmetricElement,
    d: int,
    q_value: Optional[Rational] = None,
    max_subsets: int = DEFAULT_MAX_SUBSETS,
    term_cap: int = DEFAULT_TERM_CAP,
) -> SymmetricElement:
    """Kernel-weighted sum over all splits of the ambient variables."""
    n1 = f1.arity
    n2 = f2.arity
    total_arity = n1 + n2
    count = comb(total_arity, n1)
    if count > max_subsets:
        raise ResourceLimitError(
            "%d subsets exceed the configured maximum %d" % (count, max_subsets)
        )
    p1 = expand(f1)
    p2 = expand(f2)
    universe = range(total_arity)
    total = MPoly.zero(total_arity)
    for subset in itertools.combinations(universe, n1):
        chosen = set(subset)
        rest = tuple(i for i in universe if i not in chosen)
        pairs = [(j, i) for j in rest for i in subset]
        kern = pairwise_kernel(total_arity, pairs, d, q_value, term_cap)
        term = embed(p1, total_arity, subset) * embed(p2, total_arity, rest)
        total = total + term * kern
    return to_monomial_basis(total)


# -- product rules in the monomial basis ---------------------------------------


def augmented_times_monomial(lam: Partition, mu: Partition) -> Dict[Partition, int]:
    """Augmented monomial times plain monomial, as augmented monomials.

    Both factors must have the same number of variables; the result maps each
    sorted sum lam + w to its multiplicity over the rearrangements w of mu.
    """
    lam = tuple(lam)
    mu = tuple(mu)
    if len(lam) != len(mu):
        raise ValueError("lengths must agree: %r vs %r" % (lam, mu))
    out: Dict[Partition, int] = {}
    for w in distinct_permutations(mu):
        key = sort_ascending(vec_add(lam, w))
        out[key] = out.get(key, 0) + 1
    return out


def monomial_times_monomial(lam: Partition, mu: Partition) -> Dict[Partition, Rational]:
    """Monomial times monomial, in the monomial basis; coefficients can be
    genuinely fractional before merging, hence exact rationals."""
    lam = tuple(lam)
    mu = tuple(mu)
    if len(lam) != len(mu):
        raise ValueError("lengths must agree: %r vs %r" % (lam, mu))
    denom = multiplicity(lam)
    out: Dict[Partition, Rational] = {}
    for w in distinct_permutations(mu):
        key = sort_ascending(vec_add(lam, w))
        out[key] = out.get(key, 0) + Fraction(multiplicity(key), denom)
    return {k: as_rational(v) for k, v in out.items()}


def verify_augmented_rule(lam: Partition, mu: Partition) -> CheckReport:
    """The combinatorial rule against direct polynomial multiplication."""
    lam = tuple(lam)
    mu = tuple(mu)
    direct = to_monomial_basis(augmented_monomial(lam) * monomial_symmetric(mu))
    rule = augmented_times_monomial(lam, mu)
    want = {k: QLaurent.const(c * multiplicity(k)) for k, c in rule.items()}
    passed = direct.terms == want
    failures = []
    if not passed:
        failures.append(
            "augmented rule fails for lam=%r mu=%r: %r vs %r"
            % (lam, mu, direct.terms, want)
        )
    return CheckReport(
        name="augmented-times-monomial %r %r" % (lam, mu),
        passed=passed,
        checked=1,
        failures=failures,
    )


def verify_monomial_rule(lam: Partition, mu: Partition) -> CheckReport:
    lam = tuple(lam)
    mu = tuple(mu)
    direct = to_monomial_basis(monomial_symmetric(lam) * monomial_symmetric(mu))
    rule = monomial_times_monomial(lam, mu)
    want = {k: QLaurent.const(v) for k, v in rule.items()}
    passed = direct.terms == want
    failures = []
    if not passed:
        failures.append(
            "monomial rule fails for lam=%r mu=%r: %r vs %r"
            % (lam, mu, direct.terms, want)
        )
    return CheckReport(
        name="monomial-times-monomial %r %r" % (lam, mu),
        passed=passed,
        checked=1,
        failures=failures,
    )


def verify_subset_sum_identity(lam: Partition, mu: Partition) -> CheckReport:
    """Splitting the variables between two augmented monomials concatenates them."""
    lam = tuple(lam)
    mu = tuple(mu)
    n = len(lam)
    total_arity = n + len(mu)
    a_lam = augmented_monomial(lam)
    a_mu = augmented_monomial(mu)
    universe = range(total_arity)
    lhs = MPoly.zero(total_arity)
    for subset in itertools.combinations(universe, n):
        chosen = set(subset)
        rest = tuple(i for i in universe if i not in chosen)
        lhs = lhs + embed(a_lam, total_arity, subset) * embed(a_mu, total_arity, rest)
    rhs = augmented_monomial(sort_ascending(lam + mu))
    passed = lhs == rhs
    failures = []
    if not passed:
        failures.append("subset-sum identity fails for lam=%r mu=%r" % (lam, mu))
    return CheckReport(
        name="subset-sum %r %r" % (lam, mu),
        passed=passed,
        checked=1,
        failures=failures,
    )


# -- the isomorphism with the partition algebra --------------------------------


def partition_image(lam: Partition) -> SymmetricElement:
    """Image of a basis partition: its augmented monomial, in the m basis."""
    lam = tuple(lam)
    return SymmetricElement(len(lam), {lam: QLaurent.const(multiplicity(lam))})


def to_symmetric_element(e: PartitionElement) -> GradedElement:
    """Image of a partition-algebra element, one component per length."""
    comps: Dict[int, Dict[Partition, QLaurent]] = {}
    for lam, coeff in e.items():
        comps.setdefault(len(lam), {})[tuple(lam)] = coeff * multiplicity(lam)
    return {n: SymmetricElement(n, terms) for n, terms in sorted(comps.items())}


def verify_homomorphism(mu: Partition, nu: Partition, d: int) -> CheckReport:
    """Image of the table-driven product vs the brute-force shuffle product."""
    mu = tuple(mu)
    nu = tuple(nu)
    image = to_symmetric_element(product(mu, nu, d))
    direct = shuffle_product(partition_image(mu), partition_image(nu), d)
    n = len(mu) + len(nu)
    passed = set(image) == {n} and image[n] == direct
    failures = []
    if not passed:
        got = image.get(n)
        failures.append(
            "homomorphism fails for mu=%r nu=%r d=%d: %r vs %r"
            % (mu, nu, d, got.terms if got else None, direct.terms)
        )
    return CheckReport(
        name="homomorphism %r %r d=%d" % (mu, nu, d),
        passed=passed,
        checked=1,
        failures=failures,
    )
