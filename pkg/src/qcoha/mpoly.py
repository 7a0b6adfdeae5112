"""Sparse multivariate polynomials over q-Laurent coefficients.

A polynomial carries a fixed ``arity`` (its ambient variable count) and a
``terms`` dict mapping exponent tuples of that length to nonzero QLaurent
coefficients.  The zero polynomial has an empty dict.  Values are treated as
immutable: every operation returns a fresh polynomial and nothing mutates
``terms`` after construction.
"""
from __future__ import annotations

from typing import Dict, Iterable, Mapping, Sequence, Tuple

from .qlaurent import ONE, QLaurent

Exponent = Tuple[int, ...]


class MPoly:
    __slots__ = ("arity", "terms")

    def __init__(self, arity: int, terms: Mapping[Exponent, QLaurent] | None = None):
        if arity < 0:
            raise ValueError("arity must be non-negative")
        clean: Dict[Exponent, QLaurent] = {}
        if terms:
            for exp, coeff in terms.items():
                e = tuple(exp)
                if len(e) != arity:
                    raise ValueError(
                        "exponent %r does not match arity %d" % (e, arity)
                    )
                if any(k < 0 for k in e):
                    raise ValueError("negative exponent in %r" % (e,))
                if not isinstance(coeff, QLaurent):
                    coeff = QLaurent.const(coeff)
                if coeff:
                    clean[e] = coeff
        self.arity = arity
        self.terms = clean

    @classmethod
    def _raw(cls, arity: int, terms: Dict[Exponent, QLaurent]) -> "MPoly":
        # trusted constructor: terms already canonical (tuple keys, no zeros)
        self = object.__new__(cls)
        self.arity = arity
        self.terms = terms
        return self

    @classmethod
    def zero(cls, arity: int) -> "MPoly":
        return cls._raw(arity, {})

    @classmethod
    def constant(cls, arity: int, coeff) -> "MPoly":
        if not isinstance(coeff, QLaurent):
            coeff = QLaurent.const(coeff)
        if not coeff:
            return cls.zero(arity)
        return cls._raw(arity, {(0,) * arity: coeff})

    @classmethod
    def variable(cls, arity: int, index: int) -> "MPoly":
        if not 0 <= index < arity:
            raise ValueError("variable index out of range")
        exp = tuple(1 if i == index else 0 for i in range(arity))
        return cls._raw(arity, {exp: ONE})

    # -- accessors -----------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def coefficient(self, exp: Sequence[int]) -> QLaurent:
        from .qlaurent import ZERO

        return self.terms.get(tuple(exp), ZERO)

    def sorted_terms(self):
        """Terms in lexicographic exponent order (the canonical order)."""
        return sorted(self.terms.items(), key=lambda kv: kv[0])

    def total_degree(self) -> int:
        if not self.terms:
            raise ValueError("the zero polynomial has no degree")
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        degrees = {sum(e) for e in self.terms}
        return len(degrees) <= 1

    # -- arithmetic ----------------------------------------------------------

    def _check_arity(self, other: "MPoly"):
        if self.arity != other.arity:
            raise ValueError(
                "arity mismatch: %d vs %d" % (self.arity, other.arity)
            )

    def __add__(self, other):
        if not isinstance(other, MPoly):
            return NotImplemented
        self._check_arity(other)
        out = dict(self.terms)
        for exp, coeff in other.terms.items():
            cur = out.get(exp)
            if cur is None:
                out[exp] = coeff
            else:
                s = cur + coeff
                if s:
                    out[exp] = s
                else:
                    del out[exp]
        return MPoly._raw(self.arity, out)

    def __neg__(self):
        return MPoly._raw(self.arity, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, MPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, QLaurent):
            return self.scale(other)
        if not isinstance(other, MPoly):
            return NotImplemented
        self._check_arity(other)
        out: Dict[Exponent, QLaurent] = {}
        bitems = list(other.terms.items())
        for e1, c1 in self.terms.items():
            for e2, c2 in bitems:
                key = tuple(map(int.__add__, e1, e2))
                c = c1 * c2
                cur = out.get(key)
                if cur is None:
                    out[key] = c
                else:
                    s = cur + c
                    if s:
                        out[key] = s
                    else:
                        del out[key]
        return MPoly._raw(self.arity, out)

    def scale(self, coeff: QLaurent) -> "MPoly":
        if not coeff:
            return MPoly.zero(self.arity)
        if coeff == ONE:
            return self
        return MPoly._raw(
            self.arity, {e: c * coeff for e, c in self.terms.items()}
        )

    def eval_q(self, value) -> Dict[Exponent, object]:
        """Specialize q: exponent -> rational, dropping vanished terms."""
        out = {}
        for e, c in self.terms.items():
            v = c.eval_at(value)
            if v:
                out[e] = v
        return out

    def __eq__(self, other):
        if not isinstance(other, MPoly):
            return NotImplemented
        return self.arity == other.arity and self.terms == other.terms

    def __hash__(self):
        return hash((self.arity, frozenset(self.terms.items())))

    def __repr__(self):
        return "MPoly(%d, %d terms)" % (self.arity, len(self.terms))


def embed(p: MPoly, arity: int, positions: Sequence[int]) -> MPoly:
    """Relabel p's variables into a larger ambient arity.

    ``positions[k]`` is the new index of p's variable k; the map must be
    injective.  Used to place the factors of a shuffle term on a chosen
    subset of the variables.
    """
    pos = tuple(positions)
    if len(pos) != p.arity:
        raise ValueError("positions must name every variable of p")
    if len(set(pos)) != len(pos):
        raise ValueError("positions must be distinct")
    if pos and (min(pos) < 0 or max(pos) >= arity):
        raise ValueError("position out of range for arity %d" % arity)
    out: Dict[Exponent, QLaurent] = {}
    for e, c in p.terms.items():
        new = [0] * arity
        for k, v in enumerate(e):
            new[pos[k]] = v
        out[tuple(new)] = c
    return MPoly._raw(arity, out)
