"""The kernel polynomial of the product and its monomial coefficient table.

For block sizes (m, n) and loop count d the kernel is the product of
``(x_s - q * x_t) ** (d - 1)`` over every pair with t in the first block of m
variables and s in the second block of n variables.  An optional shift places
the two blocks after ``shift`` unused leading variables, which is how the
factorization identity for three blocks is expressed.

Expansion folds one binomial factor at a time into a term dict, collecting
like monomials eagerly; a configurable cap on the stored term count guards
against runaway sizes and raises ResourceLimitError.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from .errors import ResourceLimitError
from .mpoly import Exponent, MPoly, embed
from .partitions import distinct_permutations, sort_ascending, vec_add
from .qlaurent import ONE, QLaurent, Rational, as_rational
from .reports import CheckReport

DEFAULT_TERM_CAP = 5_000_000


@dataclass(frozen=True)
class KernelSpec:
    """Block sizes, loop count, and optional leading shift."""

    m: int
    n: int
    d: int
    shift: int = 0

    def __post_init__(self):
        if self.m < 1 or self.n < 1:
            raise ValueError("block sizes must be at least 1")
        if self.d < 1:
            raise ValueError("the loop count d must be at least 1")
        if self.shift < 0:
            raise ValueError("shift must be non-negative")

    @property
    def arity(self) -> int:
        return self.shift + self.m + self.n


def pairwise_kernel(
    arity: int,
    pairs: Sequence[Tuple[int, int]],
    d: int,
    q_value: Optional[Rational] = None,
    term_cap: int = DEFAULT_TERM_CAP,
) -> MPoly:
    """Expand the product of (x_s - q * x_t)**(d-1) over (s, t) pairs.

    ``q_value`` substitutes a rational constant for q in every factor, which
    is how the q = 1 and q = 0 degenerations are built independently of the
    generic expansion.
    """
    exp = d - 1
    acc: Dict[Exponent, QLaurent] = {(0,) * arity: ONE}
    if exp == 0 or not pairs:
        return MPoly._raw(arity, acc)
    # one factor: sum_i binom(exp, i) * (-q)**i * x_t**i * x_s**(exp - i)
    if q_value is None:
        factor_coeffs = [
            QLaurent.term(-comb(exp, i) if i & 1 else comb(exp, i), i)
            for i in range(exp + 1)
        ]
    else:
        qv = as_rational(q_value)
        factor_coeffs = [
            QLaurent.const(comb(exp, i) * (-qv) ** i) for i in range(exp + 1)
        ]
    for s, t in pairs:
        if not (0 <= s < arity and 0 <= t < arity) or s == t:
            raise ValueError("bad variable pair (%d, %d)" % (s, t))
        if len(acc) * (exp + 1) > term_cap:
            raise ResourceLimitError(
                "projected term count %d exceeds cap %d"
                % (len(acc) * (exp + 1), term_cap)
            )
        nxt: Dict[Exponent, QLaurent] = {}
        for e, c in acc.items():
            base = list(e)
            et = base[t]
            es = base[s]
            for i in range(exp + 1):
                fc = factor_coeffs[i]
                if not fc:
                    continue
                base[t] = et + i
                base[s] = es + exp - i
                key = tuple(base)
                prod = c * fc
                cur = nxt.get(key)
                if cur is None:
                    nxt[key] = prod
                else:
                    tot = cur + prod
                    if tot:
                        nxt[key] = tot
                    else:
                        del nxt[key]
            base[t] = et
            base[s] = es
        if len(nxt) > term_cap:
            raise ResourceLimitError(
                "term count %d exceeds cap %d" % (len(nxt), term_cap)
            )
        acc = nxt
    return MPoly._raw(arity, acc)


def block_pairs(spec: KernelSpec) -> List[Tuple[int, int]]:
    """(second-block, first-block) variable index pairs for a kernel spec."""
    lo = range(spec.shift, spec.shift + spec.m)
    hi = range(spec.shift + spec.m, spec.arity)
    return [(s, t) for s in hi for t in lo]


def kernel_polynomial(
    spec: KernelSpec,
    term_cap: int = DEFAULT_TERM_CAP,
    q_value: Optional[Rational] = None,
) -> MPoly:
    """The expanded kernel for a spec, homogeneous of degree (d-1)*m*n."""
    return pairwise_kernel(spec.arity, block_pairs(spec), spec.d, q_value, term_cap)


@dataclass(frozen=True, eq=False)
class StructureConstantTable:
    """Kernel coefficients keyed by the (first block, second block) exponent split."""

    spec: KernelSpec
    entries: Dict[Tuple[Exponent, Exponent], QLaurent]

    def coefficient(self, a: Sequence[int], b: Sequence[int]) -> QLaurent:
        from .qlaurent import ZERO

        return self.entries.get((tuple(a), tuple(b)), ZERO)

    def __len__(self):
        return len(self.entries)


def structure_constants(
    spec: KernelSpec, term_cap: int = DEFAULT_TERM_CAP
) -> StructureConstantTable:
    """Split every kernel monomial into its two exponent blocks."""
    if spec.shift != 0:
        raise ValueError("structure constants require an unshifted kernel")
    poly = kernel_polynomial(spec, term_cap)
    m = spec.m
    entries = {(e[:m], e[m:]): c for e, c in poly.terms.items()}
    return StructureConstantTable(spec=spec, entries=entries)


_TABLE_CACHE: Dict[Tuple[int, int, int], StructureConstantTable] = {}


def structure_table(
    m: int, n: int, d: int, term_cap: int = DEFAULT_TERM_CAP
) -> StructureConstantTable:
    """Memoized table per (m, n, d).

    The cache is idempotent: a race at worst recomputes the same value, and
    entries are never mutated after construction.  The cap only applies when
    the table is first built; later lookups reuse the stored table for free.
    """
    key = (m, n, d)
    hit = _TABLE_CACHE.get(key)
    if hit is None:
        hit = structure_constants(KernelSpec(m=m, n=n, d=d), term_cap)
        _TABLE_CACHE[key] = hit
    return hit


def verify_symmetry(table: StructureConstantTable) -> CheckReport:
    """Check invariance under permuting within each block.

    Every monomial whose block parts are a rearrangement of another's must
    carry the same coefficient, and all rearrangements must be present.
    """
    groups: Dict[Tuple[Exponent, Exponent], List] = {}
    for (a, b), c in table.entries.items():
        key = (sort_ascending(a), sort_ascending(b))
        groups.setdefault(key, []).append(((a, b), c))
    failures: List[str] = []
    checked = 0
    for (ka, kb), members in sorted(groups.items()):
        expected = len(distinct_permutations(ka)) * len(distinct_permutations(kb))
        checked += len(members)
        if len(members) != expected:
            failures.append(
                "orbit of a=%r b=%r has %d of %d rearrangements"
                % (ka, kb, len(members), expected)
            )
            continue
        ref = members[0][1]
        for (a, b), c in members[1:]:
            if c != ref:
                failures.append(
                    "coefficient at a=%r b=%r differs from a=%r b=%r"
                    % (a, b, members[0][0][0], members[0][0][1])
                )
                break
    return CheckReport(
        name="kernel-symmetry m=%d n=%d d=%d"
        % (table.spec.m, table.spec.n, table.spec.d),
        passed=not failures,
        checked=checked,
        failures=failures,
    )


def verify_coefficient_identity(
    l: int, m: int, n: int, d: int, term_cap: int = DEFAULT_TERM_CAP
) -> CheckReport:
    """Two independent consistency checks for three blocks of sizes (l, m, n).

    First, the convolution identity between the four coefficient tables: for
    every split exponent (a, b, c),
      sum over a1+a2=a, b1+b2=b of C[l,m](a1,b1) * C[l+m,n]((a2,b2),c)
      == sum over b1+b2=b, c1+c2=c of C[l,m+n](a,(b2,c2)) * C[m,n](b1,c1).
    Second, the underlying polynomial identity: the (l,m) kernel times the
    (l+m,n) kernel equals the (l,m+n) kernel times the (m,n) kernel shifted
    past the first l variables.
    """
    t_lm = structure_table(l, m, d, term_cap)
    t_lmn = structure_table(l + m, n, d, term_cap)
    t_l_mn = structure_table(l, m + n, d, term_cap)
    t_mn = structure_table(m, n, d, term_cap)

    lhs: Dict[Tuple[Exponent, Exponent, Exponent], QLaurent] = {}
    for (a1, b1), c1 in t_lm.entries.items():
        for (ab2, cc), c2 in t_lmn.entries.items():
            key = (vec_add(a1, ab2[:l]), vec_add(b1, ab2[l:]), cc)
            prod = c1 * c2
            cur = lhs.get(key)
            if cur is None:
                lhs[key] = prod
            else:
                tot = cur + prod
                if tot:
                    lhs[key] = tot
                else:
                    del lhs[key]
    rhs: Dict[Tuple[Exponent, Exponent, Exponent], QLaurent] = {}
    for (a, bc), ca in t_l_mn.entries.items():
        for (b1, cc1), cb in t_mn.entries.items():
            key = (a, vec_add(b1, bc[:m]), vec_add(cc1, bc[m:]))
            prod = ca * cb
            cur = rhs.get(key)
            if cur is None:
                rhs[key] = prod
            else:
                tot = cur + prod
                if tot:
                    rhs[key] = tot
                else:
                    del rhs[key]

    failures: List[str] = []
    checked = len(set(lhs) | set(rhs))
    if lhs != rhs:
        for key in sorted(set(lhs) | set(rhs)):
            if lhs.get(key) != rhs.get(key):
                failures.append(
                    "convolution mismatch at (a,b,c)=%r: %r vs %r"
                    % (key, lhs.get(key), rhs.get(key))
                )
                break

    left_poly = embed(
        kernel_polynomial(KernelSpec(l, m, d), term_cap), l + m + n, range(l + m)
    ) * kernel_polynomial(KernelSpec(l + m, n, d), term_cap)
    right_poly = kernel_polynomial(KernelSpec(l, m + n, d), term_cap) * kernel_polynomial(
        KernelSpec(m, n, d, shift=l), term_cap
    )
    checked += 1
    if left_poly != right_poly:
        failures.append("kernel factorization identity fails as polynomials")

    return CheckReport(
        name="coefficient-identity l=%d m=%d n=%d d=%d" % (l, m, n, d),
        passed=not failures,
        checked=checked,
        failures=failures,
    )
