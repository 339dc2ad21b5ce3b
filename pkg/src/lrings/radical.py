"""Prime, semiprime and primary ideals of an L-subring, and the three
radicals: the pointwise radical, the semiprime radical (meet of the
semiprime ideals above), and the prime radical (meet of the prime ideals
above, defaulting to the whole subring when there are none).

Quantifiers over positive integer powers are decided exactly: the power
sequence of a ring element cycles within |R| steps, so "for some n" and
"for all n" range over a finite, fully enumerated set of values.

Family enumeration sweeps candidate subsets between the ideal and its
subring in a fixed order (mixed-radix counting over per-element lattice
intervals sorted by a fixed linear extension), guarded by a candidate cap.
A per-subring survey of all its ideals is cached and reused, so repeated
radical computations over one subring cost one sweep.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import prod

from .errors import CapExceeded, ConsistencyError
from .core import (LIdeal, LSubring, LSubset, ValidationError,
                   intersect_many, level_cut, level_subring,
                   satisfies_ideal_inequalities)
from .rings import Subring

DEFAULT_CANDIDATE_CAP = 2_000_000


# ---------------------------------------------------------------------------
# predicates

def is_prime(eta: LIdeal) -> bool:
    """For every pair, eta(xy) ^ mu(x) ^ mu(y) equals eta(x) ^ mu(y) or
    eta(y) ^ mu(x). The whole subring is never prime."""
    mu = eta.parent
    if eta.ivalues == mu.ivalues:
        return False
    r, lat = eta.ring, eta.lattice
    meet = lat.meet_i
    e, m = eta.ivalues, mu.ivalues
    n = len(r)
    for i in range(n):
        for j in range(n):
            lhs = meet(e[r.mul_i(i, j)], meet(m[i], m[j]))
            if lhs != meet(e[i], m[j]) and lhs != meet(e[j], m[i]):
                return False
    return True


def is_semiprime(eta: LIdeal) -> bool:
    """eta(x^n) ^ mu(x) = eta(x) for every x and every positive n."""
    mu = eta.parent
    if eta.ivalues == mu.ivalues:
        return False
    r, lat = eta.ring, eta.lattice
    meet = lat.meet_i
    e, m = eta.ivalues, mu.ivalues
    for i in range(len(r)):
        for p in r.power_values_i(i, 1):
            if meet(e[p], m[i]) != e[i]:
                return False
    return True


def primary_by_inequalities(eta: LIdeal) -> bool:
    """Direct pointwise test: every pair satisfies one of the three primary
    conditions, with the power condition tried over all exponent pairs
    m, n > 1 (up to power-cycle length)."""
    mu = eta.parent
    if eta.ivalues == mu.ivalues:
        return False
    r, lat = eta.ring, eta.lattice
    meet, leq = lat.meet_i, lat.leq_i
    e, m = eta.ivalues, mu.ivalues
    n = len(r)
    # value sets eta(x^k) ^ mu(x) over k > 1, one per element
    high_powers = [tuple({meet(e[p], m[i]) for p in r.power_values_i(i, 2)})
                   for i in range(n)]
    for i in range(n):
        for j in range(n):
            rhs = meet(e[r.mul_i(i, j)], meet(m[i], m[j]))
            if leq(rhs, meet(e[i], m[j])) or leq(rhs, meet(e[j], m[i])):
                continue
            if not any(leq(rhs, meet(a, b))
                       for a in high_powers[i] for b in high_powers[j]):
                return False
    return True


def primary_by_level_cuts(eta: LIdeal) -> bool:
    """Level criterion: every non-empty level cut either equals the level
    cut of the subring or is a primary crisp ideal of it."""
    mu = eta.parent
    if eta.ivalues == mu.ivalues:
        return False
    lat = eta.lattice
    for a in lat.elements:
        cut = level_cut(eta, a)
        if not cut:
            continue
        mcut = level_cut(mu, a)
        if cut == mcut:
            continue
        if not level_subring(mu, a).is_primary_ideal(cut):
            return False
    return True


def is_primary(eta: LIdeal) -> bool:
    """Both characterizations, which must agree."""
    by_def = primary_by_inequalities(eta)
    by_levels = primary_by_level_cuts(eta)
    if by_def != by_levels:
        raise ConsistencyError(
            f"primary characterizations disagree on {eta!r}: "
            f"inequalities={by_def} levels={by_levels}")
    return by_def


# ---------------------------------------------------------------------------
# pointwise radical

def radical(eta: LIdeal):
    """Pointwise join of eta over all powers, capped by the subring:
    (rad eta)(x) = v_n [eta(x^n) ^ mu(x)].

    Returns an LIdeal whenever the result is an ideal of the subring; that
    is guaranteed on complete Heyting lattices (a failure there is an
    internal error) and on other lattices a plain LSubset is returned
    instead, so callers can isinstance-check ideal validity."""
    mu = eta.parent
    r, lat = eta.ring, eta.lattice
    meet, join = lat.meet_i, lat.join_i
    bot = lat.index(lat.bottom)
    e, m = eta.ivalues, mu.ivalues
    out = []
    for i in range(len(r)):
        acc = bot
        for p in r.power_values_i(i, 1):
            acc = join(acc, meet(e[p], m[i]))
        out.append(acc)
    raw = LSubset._make(r, lat, tuple(out))
    if not (mu.contains(raw) and raw.contains(eta)):
        raise ConsistencyError("radical escaped eta <= rad(eta) <= mu")
    try:
        return LIdeal(mu, raw.values)
    except ValidationError:
        if lat.is_complete_heyting:
            raise ConsistencyError(
                "radical failed to be an ideal on a complete Heyting lattice")
        return raw


# ---------------------------------------------------------------------------
# ideal survey and family enumeration

@dataclass(frozen=True)
class IdealSurvey:
    """Every ideal of one L-subring, classified once, in canonical order."""
    ideals: tuple[LIdeal, ...]
    prime: tuple[bool, ...]
    semiprime: tuple[bool, ...]
    primary: tuple[bool, ...]


def _box_size(lat, lows, highs) -> int:
    return prod(len(lat.interval_i(lo, hi)) for lo, hi in zip(lows, highs))


def _sweep_ideals(mu: LSubring, lows) -> list[LIdeal]:
    """All ideals of mu whose values sit inside the per-element intervals
    [lows[x], mu(x)], in mixed-radix order over the linear extension."""
    lat = mu.lattice
    digits = [lat.interval_i(lo, hi) for lo, hi in zip(lows, mu.ivalues)]
    found = []
    for combo in itertools.product(*digits):
        cand = LSubset._make(mu.ring, mu.lattice, combo)
        if satisfies_ideal_inequalities(cand, mu):
            found.append(LIdeal(mu, cand.values))
    return found


def _chain_all_ideals(mu: LSubring, cap: int) -> list[LIdeal]:
    """All ideals of mu over a chain lattice, via nested level cuts: an
    ideal is exactly a descending assignment of a crisp ideal (or nothing)
    to each non-bottom level, nested upward. Equivalent to the box sweep
    but polynomial in the crisp ideal counts; results are sorted into the
    canonical mixed-radix order."""
    lat, ring = mu.lattice, mu.ring
    desc = [lat.elements[i] for i in reversed(lat.linext)]
    levels = desc[:-1]  # the bottom cut is always the whole ring
    per_level = []
    for t in levels:
        cut = level_cut(mu, t)
        options = [frozenset()]
        if cut:
            options += Subring(ring, cut).ideals()
        per_level.append(options)
    size = prod(len(o) for o in per_level)
    if size > cap:
        raise CapExceeded(f"chain sweep has {size} cut assignments, "
                          f"cap is {cap}", size=size)
    bot_i = lat.index(lat.bottom)
    found = []
    for combo in itertools.product(*per_level):
        if any(not combo[i] <= combo[i + 1] for i in range(len(combo) - 1)):
            continue
        ivals = [bot_i] * len(ring)
        for t, members in zip(levels, combo):  # descending: highest wins
            ti = lat.index(t)
            for x in members:
                xi = ring.index(x)
                if ivals[xi] == bot_i:
                    ivals[xi] = ti
        found.append(LIdeal(mu, LSubset._make(ring, lat, tuple(ivals)).values))
    rank = lat._rank
    found.sort(key=lambda v: tuple(rank[i] for i in v.ivalues))
    return found


def ideal_survey(mu: LSubring, cap: int = DEFAULT_CANDIDATE_CAP) -> IdealSurvey:
    """Enumerate and classify every ideal of mu once. Cached on the
    subring object; concurrent callers may race to fill the cache, but the
    value computed is identical either way."""
    if mu._survey is not None:
        return mu._survey
    lat = mu.lattice
    if lat.is_chain and len(lat) > 1:
        ideals = tuple(_chain_all_ideals(mu, cap))
    else:
        bot = lat.index(lat.bottom)
        size = _box_size(lat, (bot,) * len(mu.ring), mu.ivalues)
        if size > cap:
            raise CapExceeded(f"survey space has {size} candidates, "
                              f"cap is {cap}", size=size)
        ideals = tuple(_sweep_ideals(mu, (bot,) * len(mu.ring)))
    survey = IdealSurvey(
        ideals=ideals,
        prime=tuple(is_prime(v) for v in ideals),
        semiprime=tuple(is_semiprime(v) for v in ideals),
        primary=tuple(is_primary(v) for v in ideals),
    )
    mu._survey = survey
    return survey


@dataclass(frozen=True)
class IdealFamily:
    """The prime (or semiprime) ideals of a subring that contain a given
    lower ideal."""
    members: tuple[LIdeal, ...]
    kind: str
    lower: LIdeal


def enumerate_family(eta: LIdeal, kind: str,
                     cap: int = DEFAULT_CANDIDATE_CAP) -> IdealFamily:
    """All prime/semiprime ideals of the parent subring containing eta, in
    canonical sweep order. The candidate space between eta and its subring
    must fit under the cap; the exact space size is reported otherwise."""
    if kind not in ("prime", "semiprime"):
        raise ValueError(f"kind must be 'prime' or 'semiprime', not {kind!r}")
    mu = eta.parent
    lat = mu.lattice
    size = _box_size(lat, eta.ivalues, mu.ivalues)
    if size > cap:
        raise CapExceeded(
            f"family space has {size} candidates, cap is {cap}", size=size)

    bot = lat.index(lat.bottom)
    full = _box_size(lat, (bot,) * len(mu.ring), mu.ivalues)
    if (mu._survey is not None or full <= cap
            or (lat.is_chain and len(lat) > 1)):
        survey = ideal_survey(mu, cap=max(cap, full))
        flags = survey.prime if kind == "prime" else survey.semiprime
        members = tuple(v for v, ok in zip(survey.ideals, flags)
                        if ok and v.contains(eta))
    else:
        pred = is_prime if kind == "prime" else is_semiprime
        members = tuple(v for v in _sweep_ideals(mu, eta.ivalues) if pred(v))
    return IdealFamily(members=members, kind=kind, lower=eta)


def _family_meet(eta: LIdeal, kind: str, cap: int) -> LIdeal:
    family = enumerate_family(eta, kind, cap=cap)
    mu = eta.parent
    if not family.members:
        return LIdeal(mu, mu.values)
    return intersect_many(family.members)


def prime_radical(eta: LIdeal, cap: int = DEFAULT_CANDIDATE_CAP) -> LIdeal:
    """Meet of all prime ideals of the subring containing eta; the whole
    subring when there are none. Always an ideal, and always agrees with
    eta at zero."""
    out = _family_meet(eta, "prime", cap)
    if out.zero_value() != eta.zero_value():
        raise ConsistencyError("prime radical changed the value at zero")
    return out


def semiprime_radical(eta: LIdeal, cap: int = DEFAULT_CANDIDATE_CAP) -> LIdeal:
    """Meet of all semiprime ideals of the subring containing eta; the
    whole subring when there are none."""
    return _family_meet(eta, "semiprime", cap)


# ---------------------------------------------------------------------------
# the canonical prime ideal above an ideal with small zero value

def prime_cap(eta: LIdeal) -> LIdeal:
    """The prime ideal x -> mu(x) ^ eta(0), defined whenever eta's value at
    zero sits strictly below the subring's. It contains eta, so it witnesses
    that the prime family above eta is non-empty."""
    mu = eta.parent
    lat = eta.lattice
    z = eta.zero_value()
    mz = mu.lattice.elements[mu.ivalues[mu.ring.zero_i]]
    if not lat.lt(z, mz):
        raise ValidationError(
            f"requires eta(0) strictly below mu(0); got {z} vs {mz}")
    zi = lat.index(z)
    meet = lat.meet_i
    xi = LIdeal(mu, LSubset._make(eta.ring, lat,
                                  tuple(meet(v, zi) for v in mu.ivalues)).values)
    if not xi.contains(eta):
        raise ConsistencyError("capped subring does not contain eta")
    if not is_prime(xi):
        raise ConsistencyError("capped subring failed the prime test")
    return xi
