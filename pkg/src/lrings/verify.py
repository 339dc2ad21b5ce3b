"""Brute-force theorem survey over generated desk-scale instances.

Every supported statement has an id, a short clause, an instance shape
(one ideal, a pair with matching zero values, or the bare subring), a
hypothesis gate and a checker. Gated checks are skipped (never failed)
when the hypotheses do not hold; an exploratory mode can disable gating.

Instance generation is exhaustive by default (every ideal of every chosen
subring over the chosen carriers) and reproducibly sampled otherwise.
Reports carry one record per (theorem, instance) and are byte-stable for
fixed parameters and seed.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field
from math import prod

from .errors import CapExceeded, ConsistencyError
from .lattice import make_lattice
from .rings import DECOMPOSITION_IDEAL_CAP, RingError, Subring, make_ring
from .core import (LIdeal, LSubring, LSubset, ValidationError,
                   intersect_many, is_l_subring, level_cut, level_subring,
                   level_cuts_all_ideals, satisfies_ideal_inequalities,
                   strong_cut, strong_subring, sum_ideals, sum_subsets)
from .radical import (DEFAULT_CANDIDATE_CAP, enumerate_family, ideal_survey,
                      is_primary, is_prime, is_semiprime,
                      primary_by_inequalities, primary_by_level_cuts,
                      prime_radical, radical, semiprime_radical)
from .decomp import (DecompositionError, NoCrispDecomposition, decompose,
                     lift_reducedness, project_level)


class SkipCheck(Exception):
    """Raised inside a checker when the instance turns out not to satisfy
    a hypothesis that only the computation itself can detect."""


@dataclass(frozen=True)
class Instance:
    label: str
    mu: LSubring
    ideals: tuple[LIdeal, ...]

    @property
    def lattice(self):
        return self.mu.lattice

    @property
    def ring(self):
        return self.mu.ring


@dataclass
class SuiteParams:
    rings: tuple = ("Z4",)
    lattices: tuple = ("chain2",)
    mu_mode: str = "top"          # "top" or "all"
    sample: int | None = None     # None = exhaustive
    seed: int = 0
    cap: int = DEFAULT_CANDIDATE_CAP
    crisp_cap: int = DECOMPOSITION_IDEAL_CAP
    gate: bool = True

    def as_dict(self) -> dict:
        return {"rings": list(self.rings), "lattices": list(self.lattices),
                "mu_mode": self.mu_mode, "sample": self.sample,
                "seed": self.seed, "cap": self.cap,
                "crisp_cap": self.crisp_cap, "gate": self.gate}


@dataclass(frozen=True)
class CheckRecord:
    theorem: str
    instance: str
    status: str          # PASS | FAIL | SKIP
    detail: str = ""


@dataclass
class TheoremReport:
    theorem: str
    clause: str
    checked: int = 0
    passed: int = 0
    failed: int = 0
    skipped: int = 0
    failures: list = field(default_factory=list)
    skip_reasons: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.failed == 0


@dataclass
class SuiteResult:
    params: SuiteParams
    reports: list
    records: list

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.reports)


# ---------------------------------------------------------------------------
# instance generation

def _mu_label(mu: LSubring) -> str:
    if len(set(mu.ivalues)) == 1 and mu.values[0] == mu.lattice.top:
        return "mu=top"
    return "mu[" + ",".join(mu.values) + "]"


def _eta_label(eta: LIdeal) -> str:
    return "eta[" + ",".join(eta.values) + "]"


def _enumerate_mus(ring, lat, mu_mode: str, cap: int) -> list[LSubring]:
    if mu_mode == "top":
        return [LSubring.constant_top(ring, lat)]
    if mu_mode != "all":
        raise ValueError(f"mu_mode must be 'top' or 'all', not {mu_mode!r}")
    space = len(lat) ** len(ring)
    if space > cap:
        raise CapExceeded(f"subring sweep has {space} candidates, cap {cap}",
                          size=space)
    out = []
    digits = [list(lat.linext)] * len(ring)
    for combo in itertools.product(*digits):
        cand = LSubset._make(ring, lat, combo)
        if is_l_subring(cand):
            out.append(LSubring(ring, lat, cand.values))
    return out


def generate_instances(params: SuiteParams):
    """Returns (singles, pairs). Singles cover every ideal of every chosen
    subring; pairs combine ideals of one subring with equal zero values
    (unordered, with repetition). Sampling keeps a reproducible subset."""
    singles, pairs = [], []
    for rname in params.rings:
        ring = make_ring(rname)
        for lname in params.lattices:
            lat = make_lattice(lname)
            base = f"{ring.name}/{lat.name or 'lattice'}"
            for mu in _enumerate_mus(ring, lat, params.mu_mode, params.cap):
                survey = ideal_survey(mu, cap=params.cap)
                mlab = f"{base}/{_mu_label(mu)}"
                ideals = survey.ideals
                for eta in ideals:
                    singles.append(Instance(f"{mlab}/{_eta_label(eta)}",
                                            mu, (eta,)))
                for i in range(len(ideals)):
                    for j in range(i, len(ideals)):
                        a, b = ideals[i], ideals[j]
                        if a.zero_value() != b.zero_value():
                            continue
                        pairs.append(Instance(
                            f"{mlab}/{_eta_label(a)}+{_eta_label(b)}",
                            mu, (a, b)))
    if params.sample is not None:
        rng = random.Random(params.seed)
        if len(singles) > params.sample:
            singles = [singles[i] for i in
                       sorted(rng.sample(range(len(singles)), params.sample))]
        if len(pairs) > params.sample:
            pairs = [pairs[i] for i in
                     sorted(rng.sample(range(len(pairs)), params.sample))]
    return singles, pairs


# ---------------------------------------------------------------------------
# gates

def _gate_chain(inst):
    if not inst.lattice.is_chain:
        return "chain hypothesis"
    return None

def _gate_heyting(inst):
    if not inst.lattice.is_complete_heyting:
        return "complete Heyting hypothesis"
    return None

def _gate_proper(inst):
    if inst.ideals[0].ivalues == inst.mu.ivalues:
        return "eta equals mu"
    return None

def _gate_prime(inst):
    if not is_prime(inst.ideals[0]):
        return "eta is not prime"
    return None

def _gate_primary(inst):
    if not is_primary(inst.ideals[0]):
        return "eta is not primary"
    return None

def _gate_zero_match(inst):
    a, b = inst.ideals
    if a.zero_value() != b.zero_value():
        return "eta(0) differs from theta(0)"
    return None

def _gate_radical_proper(inst):
    # rad(eta) = mu happens for primary eta when mu dips to values the
    # powers of every element already reach (the shadow of the non-unital
    # crisp case); primality of the radical is then out of scope because
    # the whole subring is excluded from every primality notion.
    if radical(inst.ideals[0]).ivalues == inst.mu.ivalues:
        return "radical is the whole subring (degenerate for primality)"
    return None

def _all_gates(*gates):
    def gate(inst):
        for g in gates:
            reason = g(inst)
            if reason:
                return reason
        return None
    return gate


# ---------------------------------------------------------------------------
# checkers; return None on pass, a detail string on failure

class _Ctx:
    def __init__(self, params: SuiteParams):
        self.cap = params.cap
        self.crisp_cap = params.crisp_cap
        self._dec_memo = {}

    def P(self, eta):
        return prime_radical(eta, cap=self.cap)

    def S(self, eta):
        return semiprime_radical(eta, cap=self.cap)

    def decompose(self, eta):
        key = (id(eta.parent), eta.ivalues)
        if key not in self._dec_memo:
            try:
                self._dec_memo[key] = decompose(
                    eta, crisp_cap=self.crisp_cap, cap=self.cap)
            except DecompositionError as e:
                self._dec_memo[key] = e
        out = self._dec_memo[key]
        if isinstance(out, NoCrispDecomposition):
            raise SkipCheck(f"no crisp decomposition (level {out.level!r})")
        if isinstance(out, DecompositionError):
            raise SkipCheck(str(out))
        return out


def _check_t1_7(inst, ctx):
    mu = inst.mu
    lat = mu.lattice
    bot = lat.index(lat.bottom)
    size = prod(len(lat.interval_i(bot, v)) for v in mu.ivalues)
    if size > ctx.cap:
        raise CapExceeded(f"{size} candidates", size=size)
    digits = [lat.interval_i(bot, v) for v in mu.ivalues]
    for combo in itertools.product(*digits):
        cand = LSubset._make(mu.ring, lat, combo)
        by_def = satisfies_ideal_inequalities(cand, mu)
        by_levels = level_cuts_all_ideals(cand, mu)
        if by_def != by_levels:
            return (f"characterizations disagree on {cand.values}: "
                    f"inequalities={by_def} levels={by_levels}")
    return None


def _check_l1_4(inst, ctx):
    mu = inst.mu
    lat = mu.lattice
    for r in lat.elements:
        sc = strong_cut(mu, r)
        if not sc:
            continue
        try:
            sub = Subring(mu.ring, sc)
        except RingError as e:
            return f"strong cut at {r!r} is not a subring: {e}"
        for t in lat.elements:
            if not lat.lt(r, t):
                continue
            lc = level_cut(mu, t)
            if lc and not lc <= sub.member_set:
                return f"level cut at {t!r} escapes the strong cut at {r!r}"
    return None


def _check_l1_10(inst, ctx):
    eta = inst.ideals[0]
    if sum_subsets(eta, eta).ivalues != eta.ivalues:
        return "eta + eta != eta"
    mu = inst.mu
    if sum_subsets(mu, mu).ivalues != mu.ivalues:
        return "mu + mu != mu"
    return None


def _check_l1_11(inst, ctx):
    a, b = inst.ideals
    try:
        s = sum_ideals(a, b)
    except (ConsistencyError, ValidationError) as e:
        return f"sum failed: {e}"
    if not (s.contains(a) and s.contains(b)):
        return "sum does not contain both summands"
    return None


def _check_t2_4(inst, ctx):
    eta = inst.ideals[0]
    try:
        p = ctx.P(eta)
    except ConsistencyError as e:
        return str(e)
    if p.zero_value() != eta.zero_value():
        return f"P(eta)(0)={p.zero_value()} but eta(0)={eta.zero_value()}"
    return None


def _check_t2_6(inst, ctx):
    if not is_semiprime(inst.ideals[0]):
        return "prime ideal is not semiprime"
    return None


def _check_t2_9(inst, ctx):
    eta = inst.ideals[0]
    r = radical(eta)
    s = ctx.S(eta)
    if not s.contains(r):
        return "radical not contained in semiprime radical"
    if not inst.mu.contains(s):
        return "semiprime radical escapes mu"
    return None


def _check_t2_10(inst, ctx):
    a, b = inst.ideals
    for eta in (a, b):
        r, s, p = radical(eta), ctx.S(eta), ctx.P(eta)
        if not (s.contains(r) and p.contains(s) and inst.mu.contains(p)):
            return f"chain rad<=S<=P<=mu broken for {_eta_label(eta)}"
    for lo, hi in ((a, b), (b, a)):
        if hi.contains(lo) and not ctx.P(hi).contains(ctx.P(lo)):
            return "P is not monotone"
    both = intersect_many([a, b])
    meet_p = intersect_many([ctx.P(a), ctx.P(b)])
    if not meet_p.contains(ctx.P(both)):
        return "P(eta ^ theta) escapes P(eta) ^ P(theta)"
    return None


def _check_t2_11(inst, ctx):
    eta = inst.ideals[0]
    fixed = radical(eta).ivalues == eta.ivalues
    if is_semiprime(eta) != fixed:
        return f"semiprime={is_semiprime(eta)} but radical-fixed={fixed}"
    return None


def _check_t2_12(inst, ctx):
    eta = inst.ideals[0]
    fam = enumerate_family(eta, "semiprime", cap=ctx.cap)
    members = fam.members
    if not members:
        return None
    groups = [members] + [(members[i], members[j])
                          for i in range(len(members))
                          for j in range(i + 1, len(members))]
    for g in groups:
        inter = intersect_many(list(g))
        if not is_semiprime(inter):
            return "an intersection of semiprime ideals is not semiprime"
    return None


def _check_t2_13(inst, ctx):
    eta = inst.ideals[0]
    p = ctx.P(eta)
    if ctx.P(p).ivalues != p.ivalues:
        return "P(P(eta)) != P(eta)"
    if radical(p).ivalues != p.ivalues:
        return "rad(P(eta)) != P(eta)"
    return None


def _check_t2_14(inst, ctx):
    if not isinstance(radical(inst.ideals[0]), LIdeal):
        return "radical is not an ideal on a complete Heyting lattice"
    return None


def _check_t2_15(inst, ctx):
    a, b = inst.ideals
    for lo, hi in ((a, b), (b, a)):
        if hi.contains(lo) and not radical(hi).contains(radical(lo)):
            return "radical is not monotone"
    return None


def _check_t2_16(inst, ctx):
    eta = inst.ideals[0]
    r = radical(eta)
    if not isinstance(r, LIdeal):
        return "radical is not an ideal"
    p = ctx.P(eta)
    if ctx.P(r).ivalues != p.ivalues:
        return "P(rad(eta)) != P(eta)"
    if radical(p).ivalues != p.ivalues:
        return "rad(P(eta)) != P(eta)"
    return None


def _check_t2_17(inst, ctx):
    a, b = inst.ideals
    ra, rb = radical(a), radical(b)
    if not (isinstance(ra, LIdeal) and isinstance(rb, LIdeal)):
        return "a radical failed to be an ideal"
    rsum = sum_ideals(ra, rb)
    s = sum_ideals(a, b)
    rs = radical(s)
    if not isinstance(rs, LIdeal):
        return "rad(eta + theta) failed to be an ideal"
    p_rsum = ctx.P(rsum)
    if not p_rsum.contains(rsum):
        return "rad-sum escapes its prime radical"
    if p_rsum.ivalues != ctx.P(rs).ivalues:
        return "P(rad eta + rad theta) != P(rad(eta + theta))"
    if p_rsum.ivalues != ctx.P(s).ivalues:
        return "P(rad eta + rad theta) != P(eta + theta)"
    return None


def _check_t2_19(inst, ctx):
    eta = inst.ideals[0]
    by_def = primary_by_inequalities(eta)
    by_levels = primary_by_level_cuts(eta)
    if by_def != by_levels:
        return f"primary characterizations disagree: {by_def} vs {by_levels}"
    return None


def _check_t2_20(inst, ctx):
    r = radical(inst.ideals[0])
    if not isinstance(r, LIdeal):
        return "radical of a primary ideal is not an ideal"
    if not is_prime(r):
        return "radical of a primary ideal is not prime"
    return None


def _check_t2_21(inst, ctx):
    eta = inst.ideals[0]
    r = radical(eta)
    p, s = ctx.P(eta), ctx.S(eta)
    if not (p.ivalues == r.ivalues == s.ivalues):
        return "P, rad and S differ on a primary ideal"
    return None


def _check_c2_22(inst, ctx):
    if not is_prime(ctx.P(inst.ideals[0])):
        return "prime radical of a primary ideal is not prime"
    return None


def _check_t2_23(inst, ctx):
    eta = inst.ideals[0]
    p, r, s = ctx.P(eta), radical(eta), ctx.S(eta)
    if not (p.ivalues == eta.ivalues == r.ivalues == s.ivalues):
        return "P = eta = rad = S fails on a prime ideal"
    return None


def _check_t2_24(inst, ctx):
    eta = inst.ideals[0]
    p = ctx.P(eta)
    if ctx.P(ctx.S(eta)).ivalues != p.ivalues:
        return "P(S(eta)) != P(eta)"
    if ctx.S(p).ivalues != p.ivalues:
        return "S(P(eta)) != P(eta)"
    return None


def _check_t2_25(inst, ctx):
    a, b = inst.ideals
    pa, pb = ctx.P(a), ctx.P(b)
    try:
        psum = sum_ideals(pa, pb)
        total = ctx.P(sum_ideals(a, b))
    except ValidationError as e:
        raise SkipCheck(f"a required sum is not an ideal here: {e}")
    if not ctx.P(psum).contains(psum):
        return "P-sum escapes its prime radical"
    if ctx.P(psum).ivalues != total.ivalues:
        return "P(P(eta) + P(theta)) != P(eta + theta)"
    return None


def _check_c2_26(inst, ctx):
    a, b = inst.ideals
    s = sum_ideals(a, b)
    psum = sum_ideals(ctx.P(a), ctx.P(b))
    r1, r2 = radical(s), radical(psum)
    if not r2.contains(r1):
        return "rad(eta + theta) escapes rad(P(eta) + P(theta))"
    if not ctx.P(s).contains(r2):
        return "rad(P(eta) + P(theta)) escapes P(eta + theta)"
    return None


def _check_l3_4(inst, ctx):
    eta = inst.ideals[0]
    mu = inst.mu
    for t in mu.lattice.elements:
        sc = strong_cut(eta, t)
        if not sc:
            continue
        sub = strong_subring(mu, t)
        if not sub.is_ideal(sc):
            return f"strong cut at {t!r} is not an ideal of the subring"
    return None


def _check_l3_7(inst, ctx):
    eta = inst.ideals[0]
    mu = inst.mu
    for t in mu.lattice.elements:
        sc = strong_cut(eta, t)
        if not sc:
            continue
        msc = strong_cut(mu, t)
        if sc == msc:
            continue
        if not Subring(mu.ring, msc).is_primary_ideal(sc):
            return f"strong cut at {t!r} is neither everything nor primary"
    return None


def _check_l3_8(inst, ctx):
    a, b = inst.ideals
    both = intersect_many([a, b])
    for t in a.lattice.elements:
        if strong_cut(both, t) != (strong_cut(a, t) & strong_cut(b, t)):
            return f"strong cuts do not commute with meets at {t!r}"
    return None


def _check_l3_11(inst, ctx):
    a, b = inst.ideals
    both = intersect_many([a, b])
    for t in a.lattice.elements:
        if level_cut(both, t) != (level_cut(a, t) & level_cut(b, t)):
            return f"level cuts do not commute with meets at {t!r}"
    return None


def _check_l3_15(inst, ctx):
    eta = inst.ideals[0]
    mu = inst.mu
    r = radical(eta)
    for t in mu.lattice.elements:
        cut = level_cut(eta, t)
        rcut = level_cut(r, t)
        if not cut:
            if rcut:
                return f"radical cut at {t!r} non-empty while eta's is empty"
            continue
        crisp = level_subring(mu, t).radical_of(cut)
        if rcut != crisp:
            return (f"cut of the radical at {t!r} is {sorted(rcut)}, crisp "
                    f"radical of the cut is {sorted(crisp)}")
    return None


def _check_t3_5(inst, ctx):
    ctx.decompose(inst.ideals[0])  # validates intersection and primality
    return None


def _check_t3_9(inst, ctx):
    eta = inst.ideals[0]
    dec = ctx.decompose(eta)
    mu = inst.mu
    for t in mu.lattice.elements:
        sc = strong_cut(eta, t)
        if not sc or sc == strong_cut(mu, t):
            continue
        try:
            project_level(dec, t, strong=True)
        except (ConsistencyError, DecompositionError) as e:
            return f"projection at {t!r} failed: {e}"
    return None


def _check_t3_16(inst, ctx):
    eta = inst.ideals[0]
    dec = ctx.decompose(eta)
    mu = inst.mu
    for t in mu.lattice.elements:
        cut = level_cut(eta, t)
        mcut = level_cut(mu, t)
        if not cut or cut == mcut:
            continue
        try:
            project_level(dec, t, strong=False)
        except (ConsistencyError, DecompositionError) as e:
            return f"projection at {t!r} failed: {e}"
        if any(level_cut(f, t) == mcut for f in dec.factors):
            continue  # reducedness transfer needs every factor to survive
        try:
            crisp_reduced = lift_reducedness(dec, t)
        except ConsistencyError as e:
            return str(e)
        if crisp_reduced and not dec.reduced:
            return f"reduced at level {t!r} but not reduced upstairs"
    return None


# ---------------------------------------------------------------------------
# the table

@dataclass(frozen=True)
class TheoremSpec:
    ident: str
    clause: str
    scope: str           # "one" | "pair" | "mu"
    gate: object
    check: object


_NO_GATE = lambda inst: None

THEOREMS = [
    TheoremSpec("T1.7", "ideal inequalities agree with the level criterion",
                "mu", _NO_GATE, _check_t1_7),
    TheoremSpec("L1.4", "strong cuts are subrings; higher level cuts nest",
                "mu", _gate_chain, _check_l1_4),
    TheoremSpec("L1.10", "eta + eta = eta and mu + mu = mu",
                "one", _NO_GATE, _check_l1_10),
    TheoremSpec("L1.11", "sums of ideals with equal zero value are ideals "
                         "containing both",
                "pair", _all_gates(_gate_heyting, _gate_zero_match),
                _check_l1_11),
    TheoremSpec("T2.4", "P(eta)(0) = eta(0)", "one", _NO_GATE, _check_t2_4),
    TheoremSpec("T2.6", "prime ideals are semiprime",
                "one", _gate_prime, _check_t2_6),
    TheoremSpec("T2.9", "rad(eta) <= S(eta) <= mu", "one", _NO_GATE, _check_t2_9),
    TheoremSpec("T2.10", "rad <= S <= P <= mu; P monotone; P(meet) <= meet of P",
                "pair", _NO_GATE, _check_t2_10),
    TheoremSpec("T2.11", "semiprime iff fixed by the radical",
                "one", _gate_proper, _check_t2_11),
    TheoremSpec("T2.12", "intersections of semiprime ideals are semiprime",
                "one", _NO_GATE, _check_t2_12),
    TheoremSpec("T2.13", "P(P(eta)) = P(eta) = rad(P(eta))",
                "one", _NO_GATE, _check_t2_13),
    TheoremSpec("T2.14", "the radical is an ideal",
                "one", _gate_heyting, _check_t2_14),
    TheoremSpec("T2.15", "the radical is monotone",
                "pair", _NO_GATE, _check_t2_15),
    TheoremSpec("T2.16", "P(rad(eta)) = P(eta) = rad(P(eta))",
                "one", _gate_heyting, _check_t2_16),
    TheoremSpec("T2.17", "rad-sum <= P(rad-sum) = P(rad(sum)) = P(sum)",
                "pair", _all_gates(_gate_heyting, _gate_zero_match),
                _check_t2_17),
    TheoremSpec("T2.19", "primary inequalities agree with the level criterion",
                "one", _NO_GATE, _check_t2_19),
    TheoremSpec("T2.20", "the radical of a primary ideal is prime",
                "one", _all_gates(_gate_primary, _gate_radical_proper),
                _check_t2_20),
    TheoremSpec("T2.21", "P(eta) = rad(eta) = S(eta) for primary eta",
                "one", _gate_primary, _check_t2_21),
    TheoremSpec("C2.22", "P of a primary ideal is prime",
                "one", _all_gates(_gate_primary, _gate_radical_proper),
                _check_c2_22),
    TheoremSpec("T2.23", "P(eta) = eta = rad(eta) = S(eta) for prime eta",
                "one", _gate_prime, _check_t2_23),
    TheoremSpec("T2.24", "P(S(eta)) = P(eta) = S(P(eta))",
                "one", _NO_GATE, _check_t2_24),
    TheoremSpec("T2.25", "P-sum <= P(P-sum) = P(sum)",
                "pair", _gate_zero_match, _check_t2_25),
    TheoremSpec("C2.26", "rad(sum) <= rad(P-sum) <= P(sum)",
                "pair", _all_gates(_gate_heyting, _gate_zero_match),
                _check_c2_26),
    TheoremSpec("L3.4", "strong cuts of an ideal are crisp ideals of the "
                        "strong cuts of mu",
                "one", _gate_chain, _check_l3_4),
    TheoremSpec("L3.7", "strong cuts of a primary ideal are full or primary",
                "one", _all_gates(_gate_chain, _gate_primary), _check_l3_7),
    TheoremSpec("L3.8", "strong cuts commute with meets",
                "pair", _gate_chain, _check_l3_8),
    TheoremSpec("L3.11", "level cuts commute with meets",
                "pair", _NO_GATE, _check_l3_11),
    TheoremSpec("L3.15", "cuts of the radical are crisp radicals of the cuts",
                "one", _NO_GATE, _check_l3_15),
    TheoremSpec("T3.5", "a chain-valued ideal with decomposable strong cuts "
                        "has a primary decomposition",
                "one", _all_gates(_gate_chain, _gate_proper), _check_t3_5),
    TheoremSpec("T3.9", "decompositions project to proper strong cuts",
                "one", _all_gates(_gate_chain, _gate_proper), _check_t3_9),
    TheoremSpec("T3.16", "decompositions project to level cuts and "
                         "reducedness lifts back",
                "one", _all_gates(_gate_chain, _gate_proper), _check_t3_16),
]

THEOREM_IDS = [t.ident for t in THEOREMS]
_BY_ID = {t.ident: t for t in THEOREMS}


def check_theorem(ident: str, inst: Instance,
                  params: SuiteParams | None = None) -> CheckRecord:
    """Run one theorem check against one instance."""
    if ident not in _BY_ID:
        raise ValueError(f"unknown theorem id {ident!r}; valid ids: "
                         + ", ".join(THEOREM_IDS))
    params = params or SuiteParams()
    spec = _BY_ID[ident]
    needed = 2 if spec.scope == "pair" else 1
    if len(inst.ideals) < needed:
        raise ValueError(f"{ident} needs {needed} ideal(s) in the instance")
    return _run_check(spec, inst, _Ctx(params), gate=params.gate)


def _run_check(spec: TheoremSpec, inst: Instance, ctx: _Ctx,
               gate: bool) -> CheckRecord:
    if gate:
        reason = spec.gate(inst)
        if reason:
            return CheckRecord(spec.ident, inst.label, "SKIP", reason)
    try:
        detail = spec.check(inst, ctx)
    except SkipCheck as e:
        return CheckRecord(spec.ident, inst.label, "SKIP", str(e))
    except CapExceeded as e:
        return CheckRecord(spec.ident, inst.label, "SKIP", f"cap exceeded: {e}")
    except (ConsistencyError, ValidationError, DecompositionError,
            RingError) as e:
        return CheckRecord(spec.ident, inst.label, "FAIL",
                           f"{type(e).__name__}: {e}")
    if detail is None:
        return CheckRecord(spec.ident, inst.label, "PASS")
    return CheckRecord(spec.ident, inst.label, "FAIL", detail)


def run_suite(params: SuiteParams, ids=None) -> SuiteResult:
    """Check every requested theorem over every generated instance."""
    if ids is None:
        specs = THEOREMS
    else:
        unknown = [i for i in ids if i not in _BY_ID]
        if unknown:
            raise ValueError(f"unknown theorem id(s) {unknown}; valid ids: "
                             + ", ".join(THEOREM_IDS))
        wanted = set(ids)
        specs = [t for t in THEOREMS if t.ident in wanted]
    singles, pairs = generate_instances(params)
    # one representative per distinct subring for whole-subring checks
    seen = set()
    mu_insts = []
    for inst in singles:
        key = (id(inst.mu),)
        if key not in seen:
            seen.add(key)
            mu_insts.append(Instance(inst.label.rsplit("/", 1)[0],
                                     inst.mu, ()))
    ctx = _Ctx(params)
    reports, records = [], []
    for spec in specs:
        pool = {"one": singles, "pair": pairs, "mu": mu_insts}[spec.scope]
        rep = TheoremReport(spec.ident, spec.clause)
        for inst in pool:
            rec = _run_check(spec, inst, ctx, gate=params.gate)
            records.append(rec)
            rep.checked += 1
            if rec.status == "PASS":
                rep.passed += 1
            elif rec.status == "SKIP":
                rep.skipped += 1
                rep.skip_reasons[rec.detail] = \
                    rep.skip_reasons.get(rec.detail, 0) + 1
            else:
                rep.failed += 1
                rep.failures.append((inst.label, rec.detail))
        reports.append(rep)
    return SuiteResult(params, reports, records)


# ---------------------------------------------------------------------------
# rendering

def render_text(result: SuiteResult) -> str:
    lines = []
    for rep in result.reports:
        status = "PASS" if rep.ok else "FAIL"
        lines.append(f"{rep.theorem:<6} checked={rep.checked:<4} "
                     f"passed={rep.passed:<4} skipped={rep.skipped:<4} "
                     f"failed={rep.failed:<3} [{status}]  {rep.clause}")
        for reason in sorted(rep.skip_reasons):
            lines.append(f"        skip ({rep.skip_reasons[reason]}x): {reason}")
        for label, detail in rep.failures:
            lines.append(f"        FAIL {label}: {detail}")
    verdict = "all checks passed" if result.ok else "FAILURES FOUND"
    lines.append(f"result: {verdict}")
    return "\n".join(lines) + "\n"


def render_json(result: SuiteResult) -> str:
    doc = {
        "params": result.params.as_dict(),
        "summary": [{"theorem": r.theorem, "clause": r.clause,
                     "checked": r.checked, "passed": r.passed,
                     "skipped": r.skipped, "failed": r.failed,
                     "skip_reasons": dict(sorted(r.skip_reasons.items())),
                     "failures": [{"instance": l, "detail": d}
                                  for l, d in r.failures]}
                    for r in result.reports],
        "records": [{"theorem": r.theorem, "instance": r.instance,
                     "status": r.status, "detail": r.detail}
                    for r in result.records],
    }
    return json.dumps(doc, indent=1, sort_keys=True) + "\n"
