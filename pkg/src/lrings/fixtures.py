"""Canonical desk-scale setups reused across tests and demos."""

from __future__ import annotations

from dataclasses import dataclass, field

from .core import LIdeal, LSubring
from .lattice import FiniteLattice
from .rings import FiniteRing


@dataclass(frozen=True)
class Setup:
    lattice: FiniteLattice
    ring: FiniteRing
    mu: LSubring
    ideals: dict[str, LIdeal] = field(default_factory=dict)

    def ideal(self, name: str) -> LIdeal:
        return self.ideals[name]


def z4_chain3() -> Setup:
    """Z4 under the chain b < m < t with constant-top mu.

    eta_zero peaks at 0 only ([t,m,m,m]; primary, not prime);
    eta_even peaks on the even ideal ([t,m,t,m]; prime).
    """
    lat = FiniteLattice.chain(["b", "m", "t"], name="chain3")
    ring = FiniteRing.zn(4)
    mu = LSubring.constant_top(ring, lat)
    return Setup(lat, ring, mu, {
        "eta_zero": LIdeal(mu, ["t", "m", "m", "m"]),
        "eta_even": LIdeal(mu, ["t", "m", "t", "m"]),
    })


def z6_chain2() -> Setup:
    """Z6 under the chain b < t with constant-top mu.

    eta_zero is the zero indicator; eta_even and eta_triple indicate the
    crisp ideals (2) and (3).
    """
    lat = FiniteLattice.chain(["b", "t"], name="chain2")
    ring = FiniteRing.zn(6)
    mu = LSubring.constant_top(ring, lat)

    def indicator(members):
        return LIdeal(mu, {x: ("t" if x in members else "b")
                           for x in ring.elements})

    return Setup(lat, ring, mu, {
        "eta_zero": indicator({"0"}),
        "eta_even": indicator({"0", "2", "4"}),
        "eta_triple": indicator({"0", "3"}),
    })


def z12_chain3() -> Setup:
    """Z12 under b < m < t with constant-top mu and a three-level ideal:
    t at 0, m at 6, b elsewhere."""
    lat = FiniteLattice.chain(["b", "m", "t"], name="chain3")
    ring = FiniteRing.zn(12)
    mu = LSubring.constant_top(ring, lat)
    eta = LIdeal(mu, {x: ("t" if x == "0" else "m" if x == "6" else "b")
                      for x in ring.elements})
    return Setup(lat, ring, mu, {"eta_three_level": eta})
