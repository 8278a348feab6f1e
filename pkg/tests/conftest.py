"""Shared helpers: independent brute-force oracles and random semigroups.

The oracles here deliberately avoid the package's numpy tables.  Membership
is a breadth-first closure over plain sets, Hilbert values come from literal
sumsets of Python sets, and orders from a dictionary DP, so that agreement
with the library is a genuine two-route check.
"""

from __future__ import annotations

import math
import random

import pytest

from numsgps import NumericalSemigroup


def brute_members(gens, bound: int) -> set[int]:
    """All nonnegative combinations of gens below bound, by BFS closure."""
    seen = {0}
    frontier = [0]
    while frontier:
        x = frontier.pop()
        for g in gens:
            y = x + g
            if y < bound and y not in seen:
                seen.add(y)
                frontier.append(y)
    return seen


def brute_conductor(members: set[int], e: int, bound: int) -> int:
    run = 0
    for x in range(bound):
        run = run + 1 if x in members else 0
        if run == e:
            return x - e + 1
    raise AssertionError("bound too small for the brute conductor")


def brute_hilbert(gens, h_max: int) -> list[int]:
    """H(0..h_max) by literally building the sumsets hM as Python sets."""
    gens = sorted(set(gens))
    e = gens[0]
    probe = brute_members(gens, 4 * max(gens) * (1 + max(gens) // e) + 4 * e)
    c = brute_conductor(probe, e, 4 * max(gens) * (1 + max(gens) // e) + 4 * e)
    bound = c + (h_max + 2) * e
    members = {x for x in brute_members(gens, bound)}
    maximal = sorted(members - {0})
    levels = [set(members)]
    for _ in range(h_max + 1):
        prev = levels[-1]
        levels.append({a + m for a in prev for m in maximal if a + m < bound})
    values = []
    for h in range(h_max + 1):
        safe = c + (h + 1) * e  # every order-h element lies below this
        values.append(len({x for x in levels[h] - levels[h + 1] if x < safe}))
    return values


def brute_orders(gens, bound: int) -> dict[int, int]:
    """ord(s) for members below bound, via a dictionary DP."""
    members = sorted(brute_members(gens, bound))
    orders = {0: 0}
    for s in members[1:]:
        orders[s] = 1 + max(orders[s - g] for g in gens if s - g in orders)
    return orders


def random_semigroup(rng: random.Random, max_mult: int = 9, genus_cap: int | None = None,
                     tries: int = 200) -> NumericalSemigroup:
    for _ in range(tries):
        e = rng.randint(2, max_mult)
        extras = rng.sample(range(e + 1, 4 * e), k=rng.randint(1, min(4, 3 * e - 2)))
        gens = [e] + extras
        if math.gcd(*gens) != 1:
            continue
        S = NumericalSemigroup.from_generators(gens)
        if genus_cap is not None and S.genus > genus_cap:
            continue
        return S
    raise AssertionError("could not sample a random semigroup")


@pytest.fixture
def rng():
    return random.Random(20240817)
