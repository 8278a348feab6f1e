"""Relative ideals, pseudo-Frobenius numbers and the symmetry predicates.

A relative ideal of a numerical semigroup S is a subset E of the integers
with E + S contained in E and some translate of E inside S.  Such a set is
bounded below and eventually everything belongs to it, so it is stored as a
finite list of "small" elements plus a threshold past which all integers are
members.  The threshold is always minimal, which makes equality structural
and lets canonical-ideal testing be a single comparison after aligning
minima.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

import numpy as np

from .core import NumericalSemigroup


class RelativeIdeal:
    """Immutable relative ideal over a fixed ambient numerical semigroup."""

    __slots__ = ("ambient", "small", "threshold", "_small_set")

    def __init__(self, ambient: NumericalSemigroup, elements: Iterable[int],
                 threshold: int, _validate: bool = True):
        small = sorted(set(int(x) for x in elements if x < threshold))
        threshold = int(threshold)
        while small and small[-1] == threshold - 1:
            small.pop()
            threshold -= 1
        object.__setattr__(self, "ambient", ambient)
        object.__setattr__(self, "small", tuple(small))
        object.__setattr__(self, "threshold", threshold)
        object.__setattr__(self, "_small_set", frozenset(small))
        if _validate:
            self._check_closure()

    def __setattr__(self, name, value):  # pragma: no cover - guard only
        raise AttributeError("RelativeIdeal is immutable")

    def _check_closure(self):
        for x in self.small:
            for g in self.ambient.min_gens:
                if not self.contains(x + g):
                    raise ValueError(f"not an ideal: {x} + {g} escapes the set")

    # -- queries -------------------------------------------------------------

    def contains(self, x: int) -> bool:
        return x >= self.threshold or x in self._small_set

    __contains__ = contains

    @property
    def min_element(self) -> int:
        return self.small[0] if self.small else self.threshold

    def elements_below(self, bound: int) -> list[int]:
        out = [x for x in self.small if x < bound]
        out.extend(range(self.threshold, max(bound, self.threshold)))
        return out

    def bits_over(self, lo: int, hi: int) -> np.ndarray:
        """Membership table for the integer window [lo, hi)."""
        out = np.zeros(max(hi - lo, 0), dtype=bool)
        for x in self.small:
            if lo <= x < hi:
                out[x - lo] = True
        if hi > self.threshold:
            out[max(self.threshold - lo, 0):] = True
        return out

    def is_proper(self) -> bool:
        """Whether the ideal is contained in its ambient semigroup."""
        if self.min_element < 0:
            return False
        return all(self.ambient.contains(x) for x in self.small) and (
            self.threshold >= self.ambient.conductor
            or all(self.ambient.contains(x) for x in range(self.threshold, self.ambient.conductor))
        )

    # -- arithmetic ----------------------------------------------------------

    def shift(self, z: int) -> "RelativeIdeal":
        return RelativeIdeal(
            self.ambient,
            (x + z for x in self.small),
            self.threshold + z,
            _validate=False,
        )

    def __add__(self, other: "RelativeIdeal") -> "RelativeIdeal":
        return ideal_sum(self, other)

    def minimal_generators(self) -> tuple[int, ...]:
        """E \\ (E + M): the unique minimal generating system of E over S."""
        gens = self.ambient.min_gens
        top = self.threshold + gens[-1]
        lo = self.min_element - gens[-1]
        table = self.bits_over(lo, top)
        out = []
        for x in self.elements_below(top):
            if all(not table[x - g - lo] for g in gens):
                out.append(x)
        return tuple(out)

    # -- value semantics -------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, RelativeIdeal):
            return NotImplemented
        return (
            self.ambient == other.ambient
            and self.small == other.small
            and self.threshold == other.threshold
        )

    def __hash__(self) -> int:
        return hash((self.ambient, self.small, self.threshold))

    def __repr__(self) -> str:
        return f"RelativeIdeal(small={self.small}, threshold={self.threshold})"

    def to_json(self) -> dict:
        return {"small": list(self.small), "threshold": self.threshold}


def ideal_generated_by(S: NumericalSemigroup, gens: Iterable[int]) -> RelativeIdeal:
    """The relative ideal union of g + S over the given integers g."""
    glist = sorted(set(int(g) for g in gens))
    if not glist:
        raise ValueError("an ideal needs at least one generator")
    top = glist[0] + S.conductor
    elems = []
    for g in glist:
        width = top - g
        if width > 0:
            elems.extend(int(x) + g for x in np.flatnonzero(S.members_up_to(width)))
    return RelativeIdeal(S, elems, top)


def semigroup_as_ideal(S: NumericalSemigroup) -> RelativeIdeal:
    return RelativeIdeal(S, S.elements_up_to(S.conductor), S.conductor, _validate=False)


def maximal_ideal(S: NumericalSemigroup) -> RelativeIdeal:
    """M(S) = S \\ {0}."""
    if S.conductor == 0:
        return RelativeIdeal(S, (), 1, _validate=False)
    elems = [x for x in S.elements_up_to(S.conductor) if x > 0]
    return RelativeIdeal(S, elems, S.conductor, _validate=False)


def ideal_sum(E: RelativeIdeal, F: RelativeIdeal) -> RelativeIdeal:
    """{x + y : x in E, y in F}, normalized."""
    if E.ambient != F.ambient:
        raise ValueError("ideal sum requires a common ambient semigroup")
    top = min(E.min_element + F.threshold, E.threshold + F.min_element)
    base = E.min_element + F.min_element
    bits = np.zeros(max(top - base, 0), dtype=bool)
    f_bits = F.bits_over(F.min_element, top - E.min_element)
    for x in E.elements_below(top - F.min_element):
        lo = x + F.min_element - base
        seg = f_bits[: len(bits) - lo]
        bits[lo : lo + len(seg)] |= seg
    elems = [int(i) + base for i in np.flatnonzero(bits)]
    return RelativeIdeal(E.ambient, elems, top)


# ---------------------------------------------------------------------------
# pseudo-Frobenius numbers, canonical ideals, symmetry
# ---------------------------------------------------------------------------

@lru_cache(maxsize=512)
def pseudo_frobenius(S: NumericalSemigroup) -> tuple[int, ...]:
    """PF(S): integers x outside S with x + M inside S; |PF| is the type.

    Testing x + g for the minimal generators g suffices since every element
    of M is a generator plus a member.  The naturals themselves get the
    conventional PF = {-1}.
    """
    if S.conductor == 0:
        return (-1,)
    gaps = np.asarray(S.gaps, dtype=np.int64)
    table = S.members_up_to(S.conductor + S.min_gens[-1] + 1)
    keep = np.ones(len(gaps), dtype=bool)
    for g in S.min_gens:
        keep &= table[gaps + g]
    return tuple(int(x) for x in gaps[keep])


def semigroup_type(S: NumericalSemigroup) -> int:
    return len(pseudo_frobenius(S))


@lru_cache(maxsize=512)
def standard_canonical_ideal(S: NumericalSemigroup) -> RelativeIdeal:
    """K(S) = {x >= 0 : f(S) - x not in S}; sits between S and the naturals."""
    f = S.frobenius
    if f < 0:
        return RelativeIdeal(S, (), 0, _validate=False)
    elems = [f - g for g in S.gaps]
    return RelativeIdeal(S, elems, f + 1, _validate=False)


def is_canonical_ideal(E: RelativeIdeal) -> bool:
    """Whether E is some integer shift of K(S)."""
    K = standard_canonical_ideal(E.ambient)
    return K.shift(E.min_element - K.min_element) == E


def is_symmetric(S: NumericalSemigroup) -> bool:
    """K(S) = S; checked against the equivalent condition type = 1."""
    sym = standard_canonical_ideal(S) == semigroup_as_ideal(S)
    assert sym == (semigroup_type(S) == 1)
    return sym


@dataclass(frozen=True)
class NariPartition:
    """Split of the Apery set used by the pairwise-sum almost-symmetry test.

    b collects x + e for the pseudo-Frobenius numbers x other than the
    Frobenius number; a is the rest of the Apery set (0 included).  The
    largest element of a is always f(S) + e.
    """

    a: tuple[int, ...]
    b: tuple[int, ...]

    def to_json(self) -> dict:
        return {"A": list(self.a), "B": list(self.b)}


def nari_partition(S: NumericalSemigroup) -> NariPartition:
    from .hilbert import apery_table

    e = S.multiplicity
    f = S.frobenius
    pf = pseudo_frobenius(S)
    b = sorted(x + e for x in pf if x != f)
    a = sorted(set(apery_table(S).elements) - set(b))
    part = NariPartition(a=tuple(a), b=tuple(b))
    assert len(part.b) == semigroup_type(S) - 1
    assert part.a[-1] == f + e
    return part


def is_almost_symmetric(S: NumericalSemigroup, method: str = "definition") -> bool:
    """Almost symmetry, by definition (M + K(S) = M) or by Nari's criterion.

    The Nari route demands alpha_i + alpha_{m-i} = alpha_m on the a-part and
    beta_j + beta_{t-j} = alpha_m + e on the b-part of the Apery partition.
    """
    if method == "definition":
        M = maximal_ideal(S)
        return ideal_sum(M, standard_canonical_ideal(S)) == M
    if method == "nari":
        part = nari_partition(S)
        alpha, beta = part.a, part.b
        m = len(alpha) - 1
        top = alpha[-1]
        if any(alpha[i] + alpha[m - i] != top for i in range(1, m)):
            return False
        t = len(beta) + 1
        e = S.multiplicity
        return all(beta[j - 1] + beta[t - j - 1] == top + e for j in range(1, t))
    raise ValueError(f"unknown method {method!r}; use 'definition' or 'nari'")
