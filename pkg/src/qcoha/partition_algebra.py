"""Products of partitions driven by the kernel coefficient tables.

Elements are plain dicts mapping basis keys (int tuples) to nonzero QLaurent
coefficients; the empty dict is zero.  Vector-level keys are arbitrary
non-negative int tuples, partition-level keys are weakly increasing.  All
functions treat elements as immutable values and return fresh dicts.

The basis product of two partitions re-keys the (m, n, d) coefficient table by
(mu + a, nu + b) and, at partition level, sorts each key.  Sorting is
well-defined: rearranging the entries of mu or nu permutes the summands
without changing the sorted merge.

The bilinear product of general elements has two interchangeable engines: a
plain exact object path, and a batched path that packs coefficient vectors
into int64 matrices and groups keys with one argsort.  The batch path runs
only when every value involved is an integer polynomial in q and a computed
worst-case bound certifies that no intermediate can reach int64 range, so the
arithmetic stays exact; anything else falls back to the object path.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Dict, List, Optional

import numpy as np

from .errors import ResourceLimitError
from .kernel import DEFAULT_TERM_CAP, structure_table
from .partitions import IntVector, Partition, sort_ascending
from .qlaurent import ONE, QLaurent, as_rational, q_power, signed_q_power
from .reports import CheckReport, QuasiCommReport

VectorElement = Dict[IntVector, QLaurent]
PartitionElement = Dict[Partition, QLaurent]

# limits for the packed fast path: 6-bit parts, keys up to 10 parts,
# coefficient bound far below int64 range
_PACK_BITS = 6
_PACK_MAX_PART = 63
_PACK_MAX_LEN = 10
_INT_GUARD = 1 << 61


def shift_sort_product(mu: Partition, nu: Partition, d: int) -> Partition:
    """Concatenate with the second factor shifted by len(mu)*(d-1), sorted.

    This is the q = 0 limit of the product on basis partitions.
    """
    shift = len(mu) * (d - 1)
    return sort_ascending(mu + tuple(v + shift for v in nu))


def product_vectors(
    mu: IntVector, nu: IntVector, d: int, term_cap: int = DEFAULT_TERM_CAP
) -> VectorElement:
    """Vector-level product: keys (mu + a, nu + b) weighted by the table."""
    mu = tuple(mu)
    nu = tuple(nu)
    if not mu:
        return {nu: ONE}
    if not nu:
        return {mu: ONE}
    table = structure_table(len(mu), len(nu), d, term_cap)
    out: VectorElement = {}
    for (a, b), coeff in table.entries.items():
        key = tuple(x + y for x, y in zip(mu, a)) + tuple(
            x + y for x, y in zip(nu, b)
        )
        cur = out.get(key)
        out[key] = coeff if cur is None else cur + coeff
    return out


def sort_merge(e: VectorElement) -> PartitionElement:
    """Project a vector-level element to partition level by sorting keys."""
    out: PartitionElement = {}
    for key, coeff in e.items():
        k = sort_ascending(key)
        cur = out.get(k)
        if cur is None:
            out[k] = coeff
        else:
            tot = cur + coeff
            if tot:
                out[k] = tot
            else:
                del out[k]
    return out


@lru_cache(maxsize=None)
def _basis_product(mu: Partition, nu: Partition, d: int) -> PartitionElement:
    """Memoized basis product; callers must not mutate the returned dict."""
    if not mu:
        return {nu: ONE}
    if not nu:
        return {mu: ONE}
    table = structure_table(len(mu), len(nu), d)
    out: PartitionElement = {}
    for (a, b), coeff in table.entries.items():
        key = tuple(
            sorted(
                [x + y for x, y in zip(mu, a)] + [x + y for x, y in zip(nu, b)]
            )
        )
        cur = out.get(key)
        out[key] = coeff if cur is None else cur + coeff
    # merged coefficients could in principle cancel; keep the dict canonical
    return {k: c for k, c in out.items() if c}


def product(
    mu: Partition, nu: Partition, d: int, term_cap: int = DEFAULT_TERM_CAP
) -> PartitionElement:
    """Partition-level product of two basis partitions."""
    mu = tuple(mu)
    nu = tuple(nu)
    if mu and nu:
        # surface resource errors for oversized kernels before caching
        structure_table(len(mu), len(nu), d, term_cap)
    return dict(_basis_product(mu, nu, d))


def element_add(e1, e2):
    out = dict(e1)
    for k, c in e2.items():
        cur = out.get(k)
        if cur is None:
            out[k] = c
        else:
            tot = cur + c
            if tot:
                out[k] = tot
            else:
                del out[k]
    return out


def scale_element(e, coeff: QLaurent):
    if not coeff:
        return {}
    return {k: c * coeff for k, c in e.items()}


def bar_element(e):
    """Apply the bar involution q -> q**-1 to every coefficient."""
    return {k: c.bar() for k, c in e.items()}


def specialize(e, value) -> Dict[Partition, object]:
    """Evaluate every coefficient at a rational point, dropping zeros."""
    v = as_rational(value)
    out = {}
    for k, c in e.items():
        r = c.eval_at(v)
        if r:
            out[k] = r
    return out


# -- bilinear product ---------------------------------------------------------


def product_elements(
    e1: PartitionElement,
    e2: PartitionElement,
    d: int,
    term_cap: int = DEFAULT_TERM_CAP,
) -> PartitionElement:
    """Bilinear extension of the basis product to finite sums."""
    if not e1 or not e2:
        return {}
    fast = _bilinear_packed(e1, e2, d, term_cap)
    if fast is not None:
        return fast
    return _bilinear_object(e1, e2, d)


def _bilinear_object(e1, e2, d) -> PartitionElement:
    out: PartitionElement = {}
    for k1, c1 in e1.items():
        for k2, c2 in e2.items():
            c = c1 * c2
            if not c:
                continue
            for key, t in _basis_product(tuple(k1), tuple(k2), d).items():
                prod = t * c
                cur = out.get(key)
                if cur is None:
                    out[key] = prod
                else:
                    tot = cur + prod
                    if tot:
                        out[key] = tot
                    else:
                        del out[key]
    return out


def _int_poly_row(c: QLaurent) -> Optional[List[int]]:
    # dense int list aligned at q**0, or None if not an integer polynomial
    if c.offset < 0:
        return None
    for x in c.coeffs:
        if type(x) is not int:
            return None
    return [0] * c.offset + list(c.coeffs)


@lru_cache(maxsize=None)
def _basis_batch(mu: Partition, nu: Partition, d: int):
    """Packed form of a basis product: (packed keys, int64 matrix, width, max abs).

    None when the product does not fit the packed representation.
    """
    bp = _basis_product(mu, nu, d)
    keylen = len(mu) + len(nu)
    if keylen > _PACK_MAX_LEN:
        return None
    rows = []
    packed = []
    width = 0
    maxabs = 0
    for key, c in bp.items():
        if key and key[-1] > _PACK_MAX_PART:
            return None
        row = _int_poly_row(c)
        if row is None:
            return None
        acc = 0
        for i, p in enumerate(key):
            acc |= p << (_PACK_BITS * i)
        packed.append(acc)
        rows.append(row)
        width = max(width, len(row))
        m = max(abs(x) for x in row)
        maxabs = max(maxabs, m)
    if maxabs >= _INT_GUARD:
        return None
    mat = np.zeros((len(rows), width), dtype=np.int64)
    for r, row in enumerate(rows):
        mat[r, : len(row)] = row
    return np.asarray(packed, dtype=np.int64), mat, width, maxabs


def _bilinear_packed(e1, e2, d, term_cap) -> Optional[PartitionElement]:
    # stage the pair list; bail out (returning None) whenever exactness in
    # int64 cannot be certified
    pairs = []
    total_rows = 0
    bound = 0
    for k1, c1 in e1.items():
        r1 = _int_poly_row(c1)
        if r1 is None:
            return None
        for k2, c2 in e2.items():
            r2 = _int_poly_row(c2)
            if r2 is None:
                return None
            batch = _basis_batch(tuple(k1), tuple(k2), d)
            if batch is None:
                return None
            conv = _conv_int(r1, r2)
            if not any(conv):
                continue
            packedk, mat, width, maxabs = batch
            pairs.append((len(k1) + len(k2), conv, packedk, mat, width))
            total_rows += len(packedk)
            maxc = max(abs(x) for x in conv)
            bound = max(bound, maxc * maxabs * len(conv))
    if total_rows > term_cap:
        raise ResourceLimitError(
            "bilinear product stages %d rows, cap %d" % (total_rows, term_cap)
        )
    # scatter sums at most total_rows scaled rows into one key
    if bound * max(total_rows, 1) >= _INT_GUARD:
        return None

    by_len: Dict[int, List] = {}
    for keylen, conv, packedk, mat, width in pairs:
        length = len(conv) + width - 1
        scaled = np.zeros((mat.shape[0], length), dtype=np.int64)
        for i, ci in enumerate(conv):
            if ci:
                scaled[:, i : i + width] += mat * ci
        by_len.setdefault(keylen, []).append((packedk, scaled))

    out: PartitionElement = {}
    for keylen, chunks in by_len.items():
        length = max(s.shape[1] for _, s in chunks)
        packs = np.concatenate([p for p, _ in chunks])
        rows = np.zeros((len(packs), length), dtype=np.int64)
        at = 0
        for _, s in chunks:
            rows[at : at + s.shape[0], : s.shape[1]] = s
            at += s.shape[0]
        order = np.argsort(packs, kind="stable")
        sp = packs[order]
        sr = rows[order]
        starts = np.flatnonzero(np.r_[True, sp[1:] != sp[:-1]])
        sums = np.add.reduceat(sr, starts, axis=0)
        uniq = sp[starts]
        mask = _PACK_MAX_PART
        for val, row in zip(uniq.tolist(), sums):
            cs = row.tolist()
            coeff = QLaurent._trimmed(0, cs)
            if not coeff:
                continue
            key = tuple((val >> (_PACK_BITS * i)) & mask for i in range(keylen))
            out[key] = coeff
    return out


def _conv_int(a: List[int], b: List[int]) -> List[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


# -- verification -------------------------------------------------------------


def grading_failures(
    mu: Partition, nu: Partition, d: int, element: PartitionElement
) -> List[str]:
    """Check length additivity and the weight rule on every term of a product."""
    fails = []
    want_len = len(mu) + len(nu)
    want_sum = sum(mu) + sum(nu) + (d - 1) * len(mu) * len(nu)
    for key in element:
        if len(key) != want_len:
            fails.append(
                "term %r of %r * %r (d=%d) has length %d, want %d"
                % (key, mu, nu, d, len(key), want_len)
            )
        elif sum(key) != want_sum:
            fails.append(
                "term %r of %r * %r (d=%d) has weight %d, want %d"
                % (key, mu, nu, d, sum(key), want_sum)
            )
    return fails


def quasi_commutativity_report(mu: Partition, nu: Partition, d: int) -> QuasiCommReport:
    """Compare mu * nu with both q**e and (-q)**e times bar(nu * mu)."""
    mu = tuple(mu)
    nu = tuple(nu)
    e = (d - 1) * len(mu) * len(nu)
    left = product(mu, nu, d)
    flipped = bar_element(product(nu, mu, d))
    unsigned = scale_element(flipped, q_power(e))
    signed = scale_element(flipped, signed_q_power(e))
    return QuasiCommReport(
        mu=mu,
        nu=nu,
        d=d,
        exponent=e,
        unsigned_matches=left == unsigned,
        signed_matches=left == signed,
    )


def check_associativity(
    mu: Partition, nu: Partition, w: Partition, d: int
) -> CheckReport:
    """Compare the two parenthesizations of a triple product exactly."""
    mu = tuple(mu)
    nu = tuple(nu)
    w = tuple(w)
    left = product_elements(product(mu, nu, d), {w: ONE}, d)
    right = product_elements({mu: ONE}, product(nu, w, d), d)
    passed = left == right
    failures = []
    if not passed:
        keys = sorted(set(left) | set(right), key=lambda k: (len(k), k))
        for key in keys:
            if left.get(key) != right.get(key):
                failures.append(
                    "triple %r %r %r (d=%d): key %r has %r vs %r"
                    % (mu, nu, w, d, key, left.get(key), right.get(key))
                )
                break
    return CheckReport(
        name="associativity %r*%r*%r d=%d" % (mu, nu, w, d),
        passed=passed,
        checked=1,
        failures=failures,
    )
