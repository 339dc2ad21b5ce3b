"""Lattice-valued subsets and the L-subring / L-ideal object model.

An LSubset is a total function from a finite ring's elements into a finite
lattice. LSubring wraps a subset that is closed, value-wise, under
subtraction and multiplication; LIdeal wraps an ideal of such a subring.

Ideal validation is eager and runs two independent characterizations (the
pointwise inequalities and the everywhere-level-cut criterion); any
disagreement raises ConsistencyError because it would mean either the code
or a theorem is wrong.

All values are immutable; every operation is pure.
"""

from __future__ import annotations

import itertools
from typing import Mapping, Sequence

from .errors import ConsistencyError
from .lattice import FiniteLattice
from .rings import FiniteRing, Subring


class ValidationError(ValueError):
    """A subset failed the closure/ideal inequalities, carriers mismatch,
    or a value assignment is not total."""


class LSubset:
    """Total map ring elements -> lattice elements, stored by index."""

    __slots__ = ("ring", "lattice", "ivalues", "_survey")

    def __init__(self, ring: FiniteRing, lattice: FiniteLattice, values):
        self.ring = ring
        self.lattice = lattice
        if isinstance(values, Mapping):
            missing = [x for x in ring.elements if x not in values]
            if missing:
                raise ValidationError(f"no value for ring element {missing[0]!r}")
            extra = [x for x in values if x not in ring.elements]
            if extra:
                raise ValidationError(f"unknown ring element {extra[0]!r}")
            seq = [values[x] for x in ring.elements]
        else:
            seq = list(values)
            if len(seq) != len(ring.elements):
                raise ValidationError(
                    f"expected {len(ring.elements)} values, got {len(seq)}")
        self.ivalues = tuple(lattice.index(v) for v in seq)
        self._survey = None

    @classmethod
    def _make(cls, ring, lattice, ivalues: tuple[int, ...]) -> "LSubset":
        obj = object.__new__(cls)
        obj.ring = ring
        obj.lattice = lattice
        obj.ivalues = tuple(ivalues)
        obj._survey = None
        return obj

    @classmethod
    def constant(cls, ring, lattice, label: str) -> "LSubset":
        return cls._make(ring, lattice, (lattice.index(label),) * len(ring))

    def value(self, x: str) -> str:
        return self.lattice.elements[self.ivalues[self.ring.index(x)]]

    @property
    def values(self) -> tuple[str, ...]:
        els = self.lattice.elements
        return tuple(els[i] for i in self.ivalues)

    def as_mapping(self) -> dict[str, str]:
        return dict(zip(self.ring.elements, self.values))

    def image(self) -> frozenset[str]:
        els = self.lattice.elements
        return frozenset(els[i] for i in set(self.ivalues))

    def same_carrier(self, other: "LSubset") -> bool:
        return self.ring is other.ring and self.lattice is other.lattice

    def contains(self, other: "LSubset") -> bool:
        """Pointwise other <= self."""
        if not self.same_carrier(other):
            raise ValidationError("carriers differ")
        leq = self.lattice.leq_i
        return all(leq(a, b) for a, b in zip(other.ivalues, self.ivalues))

    def meet(self, other: "LSubset") -> "LSubset":
        if not self.same_carrier(other):
            raise ValidationError("carriers differ")
        m = self.lattice.meet_i
        return LSubset._make(self.ring, self.lattice,
                             tuple(m(a, b) for a, b in zip(self.ivalues, other.ivalues)))

    def __eq__(self, other):
        return (isinstance(other, LSubset) and self.same_carrier(other)
                and self.ivalues == other.ivalues)

    def __hash__(self):
        return hash((id(self.ring), id(self.lattice), self.ivalues))

    def __repr__(self):
        body = " ".join(f"{x}↦{v}" for x, v in zip(self.ring.elements, self.values))
        return f"<{type(self).__name__} {body}>"


# ---------------------------------------------------------------------------
# characterizations

def satisfies_subring_inequalities(f: LSubset) -> tuple[bool, tuple | None]:
    """Closure under subtraction and multiplication, value-wise:
    f(x-y) and f(xy) both dominate f(x) ^ f(y). Returns (ok, witness)."""
    r, lat, v = f.ring, f.lattice, f.ivalues
    leq, meet = lat.leq_i, lat.meet_i
    n = len(r)
    for i in range(n):
        for j in range(n):
            need = meet(v[i], v[j])
            if not leq(need, v[r._sub_i(i, j)]) or not leq(need, v[r.mul_i(i, j)]):
                return False, (r.elements[i], r.elements[j])
    return True, None


def is_l_subring(f: LSubset) -> bool:
    return satisfies_subring_inequalities(f)[0]


def satisfies_ideal_inequalities(nu: LSubset, mu: "LSubring") -> bool:
    """Pointwise characterization: nu <= mu, nu(x-y) >= nu(x) ^ nu(y), and
    nu(xy) >= (mu(x) ^ nu(y)) v (nu(x) ^ mu(y))."""
    if not nu.same_carrier(mu):
        raise ValidationError("carriers differ")
    r, lat = nu.ring, nu.lattice
    leq, meet, join = lat.leq_i, lat.meet_i, lat.join_i
    e, m = nu.ivalues, mu.ivalues
    n = len(r)
    if not all(leq(e[i], m[i]) for i in range(n)):
        return False
    for i in range(n):
        for j in range(n):
            if not leq(meet(e[i], e[j]), e[r._sub_i(i, j)]):
                return False
            lo = join(meet(m[i], e[j]), meet(e[i], m[j]))
            if not leq(lo, e[r.mul_i(i, j)]):
                return False
    return True


def level_cuts_all_ideals(nu: LSubset, mu: "LSubring") -> bool:
    """Level characterization: nu <= mu and every non-empty level cut of nu
    is a crisp ideal of the matching level subring of mu."""
    if not nu.same_carrier(mu):
        raise ValidationError("carriers differ")
    lat = nu.lattice
    leq = lat.leq_i
    if not all(leq(a, b) for a, b in zip(nu.ivalues, mu.ivalues)):
        return False
    for a in range(len(lat)):
        cut = frozenset(i for i, v in enumerate(nu.ivalues) if leq(a, v))
        if not cut:
            continue
        mcut = [x for x, v in zip(nu.ring.elements, mu.ivalues) if leq(a, v)]
        sub = Subring(nu.ring, mcut)  # level cuts of an L-subring are subrings
        if not sub._is_ideal_i(cut):
            return False
    return True


def is_ideal_of(nu: LSubset, mu: "LSubring") -> bool:
    """Both characterizations, which must agree."""
    by_def = satisfies_ideal_inequalities(nu, mu)
    by_levels = level_cuts_all_ideals(nu, mu)
    if by_def != by_levels:
        raise ConsistencyError(
            f"ideal characterizations disagree on {nu!r}: "
            f"inequalities={by_def} levels={by_levels}")
    return by_def


# ---------------------------------------------------------------------------
# validated wrappers

class LSubring(LSubset):
    """An LSubset validated as an L-subring."""

    __slots__ = ()

    def __init__(self, ring, lattice, values):
        super().__init__(ring, lattice, values)
        ok, pair = satisfies_subring_inequalities(self)
        if not ok:
            raise ValidationError(
                f"not an L-subring: closure fails at pair {pair}")
        z = self.ivalues[ring.zero_i]
        if not all(lattice.leq_i(v, z) for v in self.ivalues):
            raise ConsistencyError("an L-subring must peak at zero")

    @classmethod
    def constant_top(cls, ring, lattice) -> "LSubring":
        return cls(ring, lattice, {x: lattice.top for x in ring.elements})


class LIdeal(LSubset):
    """An LSubset validated as an ideal of a given L-subring."""

    __slots__ = ("parent",)

    def __init__(self, parent: LSubring, values):
        super().__init__(parent.ring, parent.lattice, values)
        self.parent = parent
        if not is_ideal_of(self, parent):
            bad = next((x for x, a, b in zip(parent.ring.elements, self.ivalues,
                                             parent.ivalues)
                        if not parent.lattice.leq_i(a, b)), None)
            if bad is not None:
                raise ValidationError(
                    f"not contained in the subring: exceeds it at {bad!r}")
            raise ValidationError("not an ideal of the given L-subring")

    @classmethod
    def from_subset(cls, parent: LSubring, f: LSubset) -> "LIdeal":
        return cls(parent, f.values)

    def zero_value(self) -> str:
        return self.lattice.elements[self.ivalues[self.ring.zero_i]]


# ---------------------------------------------------------------------------
# cuts

def level_cut(f: LSubset, a: str) -> frozenset[str]:
    """Elements whose value dominates a."""
    ai = f.lattice.index(a)
    leq = f.lattice.leq_i
    return frozenset(x for x, v in zip(f.ring.elements, f.ivalues) if leq(ai, v))


def strong_cut(f: LSubset, a: str) -> frozenset[str]:
    """Elements whose value strictly dominates a."""
    ai = f.lattice.index(a)
    leq = f.lattice.leq_i
    return frozenset(x for x, v in zip(f.ring.elements, f.ivalues)
                     if leq(ai, v) and v != ai)


def level_subring(mu: LSubring, a: str) -> Subring:
    """The level cut of an L-subring as a crisp Subring (valid on any
    lattice). Raises on an empty cut."""
    cut = level_cut(mu, a)
    if not cut:
        raise ValidationError(f"level cut at {a!r} is empty")
    return Subring(mu.ring, cut)


def strong_subring(mu: LSubring, a: str) -> Subring:
    """The strong cut of an L-subring as a crisp Subring. Guaranteed to be
    closed when the lattice is a chain; on other lattices closure may fail
    and the underlying RingError propagates."""
    cut = strong_cut(mu, a)
    if not cut:
        raise ValidationError(f"strong cut at {a!r} is empty")
    return Subring(mu.ring, cut)


# ---------------------------------------------------------------------------
# sums and intersections

def sum_subsets(f: LSubset, g: LSubset) -> LSubset:
    """Pointwise join over all additive splittings:
    (f+g)(x) = v { f(y) ^ g(z) : y + z = x }."""
    if not f.same_carrier(g):
        raise ValidationError("carriers differ")
    r, lat = f.ring, f.lattice
    meet, join = lat.meet_i, lat.join_i
    bot = lat.index(lat.bottom)
    n = len(r)
    out = []
    for x in range(n):
        acc = bot
        for y in range(n):
            z = r._sub_i(x, y)
            acc = join(acc, meet(f.ivalues[y], g.ivalues[z]))
        out.append(acc)
    return LSubset._make(r, lat, tuple(out))


def sum_ideals(a: LIdeal, b: LIdeal) -> LIdeal:
    """Sum of two ideals of the same L-subring; requires equal values at
    zero (otherwise the sum need not be an ideal and the input is rejected
    rather than guessed at).

    On distributive lattices the convolution is always an ideal again. On
    non-distributive lattices it can fail to be one (joins of incomparable
    values can break the level structure); that raises a ValidationError
    naming the situation."""
    if a.parent is not b.parent and a.parent != b.parent:
        raise ValidationError("ideals of different L-subrings")
    if a.zero_value() != b.zero_value():
        raise ValidationError(
            f"values at zero differ ({a.zero_value()} vs {b.zero_value()}); "
            "the sum is only an ideal when they agree")
    raw = sum_subsets(a, b)
    try:
        out = LIdeal(a.parent, raw.values)
    except ValidationError as e:
        if a.lattice.is_complete_heyting:
            raise ConsistencyError(
                f"sum of ideals failed to validate on a distributive "
                f"lattice: {e}") from e
        raise ValidationError(
            "the sum of these ideals is not an ideal on this "
            "non-distributive lattice") from e
    if not (out.contains(a) and out.contains(b)):
        raise ConsistencyError("sum does not contain its summands")
    return out


def intersect_many(fs: Sequence[LSubset]):
    """Pointwise big-meet of a non-empty family. Returns an LIdeal when
    every input is an LIdeal of the same parent (their intersection always
    is one), otherwise a plain LSubset."""
    if not fs:
        raise ValidationError("empty family")
    first = fs[0]
    for f in fs[1:]:
        if not first.same_carrier(f):
            raise ValidationError("carriers differ")
    meet = first.lattice.meet_i
    vals = list(first.ivalues)
    for f in fs[1:]:
        vals = [meet(a, b) for a, b in zip(vals, f.ivalues)]
    raw = LSubset._make(first.ring, first.lattice, tuple(vals))
    if all(isinstance(f, LIdeal) for f in fs):
        parents = {id(f.parent) for f in fs}
        if len(parents) == 1:
            try:
                return LIdeal(fs[0].parent, raw.values)
            except ValidationError as e:
                raise ConsistencyError(
                    f"intersection of ideals failed to validate: {e}") from e
    return raw


# ---------------------------------------------------------------------------
# misc

def has_sup_property(f: LSubset) -> bool:
    """Every non-empty subset of the image contains its join. Trivially
    true for the finite images representable here, but computed honestly so
    theorem preconditions stay auditable."""
    img = sorted(f.image())
    for k in range(1, len(img) + 1):
        for combo in itertools.combinations(img, k):
            if f.lattice.big_join(combo) not in combo:
                return False
    return True


def equal_by_levels(f: LSubset, g: LSubset) -> bool:
    """Pointwise equality. (For f <= g with matching level cuts at every
    value of g this is forced; the test suite checks that implication.)"""
    if not f.same_carrier(g):
        raise ValidationError("carriers differ")
    return f.ivalues == g.ivalues
