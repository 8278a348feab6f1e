"""Apery sets, element orders and Hilbert functions of a numerical semigroup.

The Hilbert function counts H(h) = |hM \\ (h+1)M| where M is the maximal
ideal S \\ {0}.  Every value here is computed exactly inside a finite window:
an element of order exactly h satisfies h*e <= s < c + h*e (c the conductor,
e the multiplicity), so the window [0, c + (h_max+2)*e) captures everything
needed for H(0..h_max).

Each call computes H twice, by two independent routes, and insists they
agree: a dynamic program on element orders, and direct set construction of
the ideal powers hM as bit tables.

Stabilization is certified, not guessed: once (h)M = (h-1)M + e the same
identity propagates to every higher power, hence H(h') = e for all
h' >= h - 1.  The smallest such h is found inside the window, enlarging the
window when necessary, and `stable_from` is only reported when the constant
tail is proven.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import NotMember, NumericalSemigroup, SemigroupError


class NotStabilized(SemigroupError):
    """The Hilbert values were not computed through stabilization."""


# ---------------------------------------------------------------------------
# order table (production route)
# ---------------------------------------------------------------------------

def order_table(S: NumericalSemigroup, bound: int) -> np.ndarray:
    """ord(s) for every s in [0, bound); -1 marks non-members.

    Maximal expressions only ever use minimal generators (a non-generator
    summand could be split, lengthening the expression), so
    ord(s) = 1 + max{ord(s - g) : g minimal generator, s - g in S}.
    """
    bits = S.members_up_to(bound)
    orders = np.full(bound, -1, dtype=np.int64)
    if bound == 0:
        return orders
    orders[0] = 0
    gens = np.asarray(S.min_gens, dtype=np.int64)
    members = np.flatnonzero(bits)
    for s in members[1:]:
        k = int(np.searchsorted(gens, s, side="right"))
        orders[s] = orders[s - gens[:k]].max() + 1
    return orders


def element_order(S: NumericalSemigroup, s: int) -> int:
    """Largest number of nonzero summands expressing s; ord(0) = 0."""
    if not S.contains(s):
        raise NotMember(f"{s} is not an element of {S!r}")
    if s == 0:
        return 0
    return int(order_table(S, s + 1)[s])


# ---------------------------------------------------------------------------
# ideal powers as bit tables (oracle route)
# ---------------------------------------------------------------------------

def power_bitsets(S: NumericalSemigroup, bound: int, max_level: int) -> list[np.ndarray]:
    """Tables of kM over [0, bound) for k = 0..max_level, with 0M = S.

    Uses (k+1)M = kM + G for the minimal generating set G, which holds
    because M = G + S and kM is an ideal.
    """
    current = S.members_up_to(bound)
    levels = [current]
    for _ in range(max_level):
        nxt = np.zeros(bound, dtype=bool)
        for g in S.min_gens:
            if g < bound:
                np.logical_or(nxt[g:], current[:-g], out=nxt[g:])
        levels.append(nxt)
        current = nxt
        if not nxt.any():
            break
    while len(levels) <= max_level:
        levels.append(np.zeros(bound, dtype=bool))
    return levels


def hilbert_by_set_construction(S: NumericalSemigroup, h_max: int) -> list[int]:
    """H(0..h_max) via |hM \\ (h+1)M| on explicitly built ideal powers."""
    bound = S.conductor + (h_max + 2) * S.multiplicity
    bound = max(bound, 2 * S.multiplicity + 2)
    levels = power_bitsets(S, bound, h_max + 1)
    return [int(np.count_nonzero(levels[h] & ~levels[h + 1])) for h in range(h_max + 1)]


# ---------------------------------------------------------------------------
# Hilbert function
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HilbertFunction:
    """Values H(0), ..., H(h_max) plus a certified stabilization marker.

    ``stable_from`` is the smallest index from which the function is the
    constant e (the multiplicity); None when stabilization was not reached
    within the computed range.
    """

    values: tuple[int, ...]
    stable_from: int | None

    @property
    def h_max(self) -> int:
        return len(self.values) - 1

    @property
    def stable_value(self) -> int | None:
        if self.stable_from is None:
            return None
        return self.values[self.stable_from]

    def value_at(self, h: int) -> int:
        if h < 0:
            raise ValueError("Hilbert function is defined for h >= 0")
        if h <= self.h_max:
            return self.values[h]
        if self.stable_from is not None:
            return self.values[self.stable_from]
        raise NotStabilized(f"H({h}) not computed and no stable tail is certified")

    def to_json(self) -> dict:
        return {"values": list(self.values), "stable_from": self.stable_from}


def _reduction_index(orders: np.ndarray, e: int, h_hi: int) -> int | None:
    """Smallest h in [1, h_hi] with hM = (h-1)M + e inside the table, else None.

    The identity is checked as: ord(s) >= h  iff  s >= e and ord(s-e) >= h-1,
    for every s in the window.  Outside the window both sides hold once
    s >= c + h*e, so the window check is conclusive.
    """
    shifted = np.full(len(orders), -1, dtype=np.int64)
    shifted[e:] = orders[:-e]
    for h in range(1, h_hi + 1):
        if np.array_equal(orders >= h, shifted >= h - 1):
            return h
    return None


def _hilbert_counts(S: NumericalSemigroup, h_cap: int) -> tuple[np.ndarray, int]:
    """Exact order counts through at least ``h_cap`` plus the certified
    stabilization index (smallest h with constant H = e from there on).

    The window is enlarged automatically until the power-ideal reduction
    h M = (h-1)M + e is found, which proves the constant-e tail.
    """
    e = S.multiplicity
    attempts = 0
    while True:
        bound = max(S.conductor + (h_cap + 2) * e, 2 * e + 2)
        orders = order_table(S, bound)
        counts = np.bincount(orders[orders >= 0], minlength=h_cap + 2)
        reduction = _reduction_index(orders, e, h_cap + 1)
        if reduction is not None:
            break
        attempts += 1
        if attempts > 32:  # unreachable: the reduction index is always finite
            raise RuntimeError("Hilbert stabilization not found; window runaway")
        h_cap = max(2 * h_cap, h_cap + 8)

    # counts[h] is exact for h <= h_cap + 1; H(h) = e for all h >= reduction - 1.
    start = reduction - 1
    while start > 0 and counts[start - 1] == e:
        start -= 1
    return counts, start


def _cross_check(S: NumericalSemigroup, values: tuple[int, ...]) -> None:
    oracle = hilbert_by_set_construction(S, len(values) - 1)
    assert list(values) == oracle, (
        "order-count and set-construction Hilbert values disagree"
    )


def hilbert_function(S: NumericalSemigroup, h_max: int) -> HilbertFunction:
    """Exact H(0..h_max) with a certified ``stable_from`` marker."""
    if h_max < 1:
        raise ValueError("h_max must be at least 1")
    counts, start = _hilbert_counts(S, h_max)
    values = tuple(int(counts[h]) for h in range(h_max + 1))
    _cross_check(S, values)
    return HilbertFunction(values=values, stable_from=start if start <= h_max else None)


def hilbert_through_stabilization(S: NumericalSemigroup, h_min: int = 1) -> HilbertFunction:
    """Hilbert values extended far enough that ``stable_from`` is present."""
    counts, start = _hilbert_counts(S, max(h_min, 1))
    h_max = max(h_min, start, 1)
    values = tuple(int(counts[h]) for h in range(h_max + 1))
    _cross_check(S, values)
    return HilbertFunction(values=values, stable_from=start)


def decrease_levels(H: HilbertFunction) -> tuple[int, ...]:
    """All levels h with H(h-1) > H(h), ascending.

    Requires a certified stable tail: past ``stable_from`` the function is
    constant, so the returned list is complete.
    """
    if H.stable_from is None:
        raise NotStabilized("Hilbert function not computed through stabilization")
    return tuple(h for h in range(1, len(H.values)) if H.values[h - 1] > H.values[h])


# ---------------------------------------------------------------------------
# Apery set and layer sets
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class AperyTable:
    """The e smallest members per residue class mod e, with their orders."""

    elements: tuple[int, ...]
    orders: dict[int, int]
    strata: dict[int, tuple[int, ...]]

    @property
    def max_order(self) -> int:
        return max(self.orders.values())

    def stratum(self, k: int) -> tuple[int, ...]:
        return self.strata.get(k, ())

    def to_json(self) -> dict:
        return {
            "elements": list(self.elements),
            "orders": {str(a): o for a, o in sorted(self.orders.items())},
            "strata": {str(k): list(v) for k, v in sorted(self.strata.items())},
        }


def apery_table(S: NumericalSemigroup) -> AperyTable:
    """Apery set of S with respect to the multiplicity, stratified by order."""
    e = S.multiplicity
    bound = S.conductor + e + 1
    bits = S.members_up_to(bound)
    members = np.flatnonzero(bits)
    _, first = np.unique(members % e, return_index=True)
    elements = tuple(sorted(int(members[i]) for i in first))
    orders_arr = order_table(S, bound)
    orders = {a: int(orders_arr[a]) for a in elements}

    grouped: dict[int, list[int]] = {}
    for a in elements:
        if a != 0:
            grouped.setdefault(orders[a], []).append(a)
    strata = {k: tuple(sorted(v)) for k, v in sorted(grouped.items())}

    assert len(elements) == e and elements[0] == 0
    assert strata.get(1, ()) == tuple(g for g in S.min_gens if g != e)
    return AperyTable(elements=elements, orders=orders, strata=strata)


@dataclass(frozen=True)
class LayerSets:
    """The C_k / D_k layer sets that control consecutive Hilbert differences.

    D_h collects members whose order jumps past h when e is added
    (ord(s) = h-1 but ord(s+e) > h); D_h^t refines by the landing order t.
    C_k collects order-k members s with s - e outside (k-1)M.  For every k,
    H(k-1) - H(k) = |D_k| - |C_k|.
    """

    c_sets: dict[int, tuple[int, ...]]
    d_sets: dict[int, tuple[int, ...]]
    d_refined: dict[int, dict[int, tuple[int, ...]]]

    def to_json(self) -> dict:
        return {
            "C": {str(k): list(v) for k, v in sorted(self.c_sets.items())},
            "D": {str(k): list(v) for k, v in sorted(self.d_sets.items())},
            "D_t": {
                str(k): {str(t): list(v) for t, v in sorted(sub.items())}
                for k, sub in sorted(self.d_refined.items())
            },
        }


def layer_sets(S: NumericalSemigroup, k_max: int) -> LayerSets:
    """Explicit C_k, D_k and D_k^t for 2 <= k <= k_max."""
    if k_max < 2:
        raise ValueError("k_max must be at least 2")
    e = S.multiplicity
    bound = S.conductor + (k_max + 2) * e
    orders = order_table(S, bound)

    c_sets: dict[int, tuple[int, ...]] = {}
    d_sets: dict[int, tuple[int, ...]] = {}
    d_refined: dict[int, dict[int, tuple[int, ...]]] = {}
    for k in range(2, k_max + 1):
        c_elems = [
            int(s)
            for s in np.flatnonzero(orders == k)
            if s < e or orders[s - e] < k - 1
        ]
        d_elems = [
            int(s)
            for s in np.flatnonzero(orders == k - 1)
            if s + e < bound and orders[s + e] > k
        ]
        c_sets[k] = tuple(c_elems)
        d_sets[k] = tuple(d_elems)
        refined: dict[int, list[int]] = {}
        for s in d_elems:
            refined.setdefault(int(orders[s + e]), []).append(s)
        d_refined[k] = {t: tuple(v) for t, v in sorted(refined.items())}

    _assert_layer_identities(S, orders, c_sets, d_refined, k_max)
    return LayerSets(c_sets=c_sets, d_sets=d_sets, d_refined=d_refined)


def _assert_layer_identities(S, orders, c_sets, d_refined, k_max):
    """C_k must equal Ap_k plus the shifted D_h^k layers, disjointly."""
    e = S.multiplicity
    apery = apery_table(S)
    for k in range(2, k_max + 1):
        pieces = [set(apery.stratum(k))]
        for h in range(2, k):
            pieces.append({s + e for s in d_refined.get(h, {}).get(k, ())})
        union: set[int] = set()
        total = 0
        for piece in pieces:
            union |= piece
            total += len(piece)
        assert total == len(union), f"C_{k} pieces overlap"
        assert union == set(c_sets[k]), f"C_{k} does not match its decomposition"
