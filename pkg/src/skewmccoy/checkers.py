"""McCoy search and empirical verification of the structural lemmas.

Verdicts only ever speak about series whose support lies in the searched
window; every report carries :data:`CAVEAT`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

import numpy as np

from .errors import CapacityError, HypothesisError, InvalidSpecError
from .omonoid import NATURALS, OrderedMonoid
from .rings import FiniteRing, s_matrix
from .search import BUDGET, WindowSpace, default_window
from .series import (MonoidAction, build_action, format_series,
                     is_compatible, scale_left_const, scale_right_const,
                     series_mul, trivial_action)
from .structure import (IDEAL_CAP, LEFT, RIGHT, TWO_SIDED, Check,
                        Endomorphism, PropertyProfile, annihilator,
                        closure, enumerate_endomorphisms, is_prime_ideal,
                        quotient_ring, ring_profile)

CAVEAT = ("no counterexample with support in D; "
          "this is not a proof that R is (S,omega)-McCoy")

VERIFIED, COUNTEREXAMPLE, VACUOUS = "verified_up_to_bound", "counterexample", "vacuous"
HOLDS, FAILS, SKIPPED = "holds", "fails", "skipped"


# -- profiles -----------------------------------------------------------------

_PROFILES: dict = {}


def cached_profile(R: FiniteRing) -> PropertyProfile:
    hit = _PROFILES.get(id(R))
    if hit is None or hit[0] is not R:
        hit = (R, ring_profile(R))
        _PROFILES[id(R)] = hit
    return hit[1]


@dataclass(frozen=True)
class HypothesisProfile:
    profile: PropertyProfile
    compatible: Check
    theorem_hypotheses_hold: bool

    @property
    def base_hypotheses(self):
        """Abelian, semi-regular, radical nilpotent (no action involved)."""
        p = self.profile
        return bool(p.abelian and p.semiregular and p.radical_nilpotent)


def _base(p: PropertyProfile) -> bool:
    return bool(p.abelian and p.semiregular and p.radical_nilpotent)


def hypothesis_profile(R: FiniteRing, action: MonoidAction | None = None) -> HypothesisProfile:
    p = cached_profile(R)
    compat = is_compatible(action) if action is not None else Check(True)
    return HypothesisProfile(p, compat, _base(p) and bool(compat))


# -- McCoy search ---------------------------------------------------------------

@dataclass
class McCoyVerdict:
    side: str
    ring: str
    monoid: str
    action: str
    window: tuple
    mode: str
    outcome: str
    pairs_examined: int
    zero_divisor_pairs: int
    counterexample: tuple | None = None        # (f, g) SkewSeries
    failures: dict = field(default_factory=dict)   # c -> exponent where the witness equation fails
    sample: tuple | None = None                # (f, g, c) first witnessed zero-divisor pair
    caveat: str = CAVEAT

    def to_dict(self):
        R = None
        out = {
            "side": self.side, "ring": self.ring, "monoid": self.monoid,
            "action": self.action, "window": [str(s) for s in self.window],
            "mode": self.mode, "outcome": self.outcome,
            "pairs_examined": self.pairs_examined,
            "zero_divisor_pairs": self.zero_divisor_pairs,
            "caveat": self.caveat,
        }
        if self.counterexample is not None:
            f, g = self.counterexample
            R = f.action.ring
            out["counterexample"] = {
                "f": format_series(f), "g": format_series(g),
                "fg": format_series(series_mul(f, g)),
                "witness_failures": {R.names[c]: str(s) for c, s in self.failures.items()},
            }
        if self.sample is not None:
            f, g, c = self.sample
            out["sample_witness"] = {"f": format_series(f), "g": format_series(g),
                                     "c": f.action.ring.names[c]}
        return out


def _describe_action(action: MonoidAction) -> str:
    return "trivial" if action.is_trivial else action.describe()


def _rank(n, order_seed):
    if order_seed is None:
        return np.arange(n)
    perm = np.random.default_rng(order_seed).permutation(n)
    rank = np.empty(n, dtype=np.intp)
    rank[perm] = np.arange(n)
    return rank


def _failure_map(space: WindowSpace, vec, side):
    """For each nonzero c, an exponent where the witness equation fails."""
    R, act = space.ring, space.action
    out = {}
    for c in R.nonzero:
        for s, a in zip(space.window, vec):
            if a == R.zero:
                continue
            val = R.m(int(a), act.apply(s, c)) if side == RIGHT else R.m(c, int(a))
            if val != R.zero:
                out[c] = s
                break
    return out


def _verdict_from_matrix(space: WindowSpace, Z, side, order_seed=None):
    R = space.ring
    nz = space.nonzero
    Zn = Z & nz[:, None] & nz[None, :]
    count = int(Zn.sum())
    pairs = int(nz.sum()) ** 2
    base = dict(side=side, ring=R.name, monoid=space.action.monoid.name,
                action=_describe_action(space.action), window=space.window,
                mode="exhaustive", pairs_examined=pairs, zero_divisor_pairs=count)
    if count == 0:
        return McCoyVerdict(outcome=VACUOUS, **base)
    rank = _rank(space.size, order_seed)
    if side == RIGHT:
        wit = space.first_witness(space.right_witness_table(space.coeffs))
        bad = Zn & (wit < 0)[:, None]
    else:
        wit = space.first_witness(space.left_witness_table(space.coeffs))
        bad = Zn & (wit < 0)[None, :]

    def first_pair(mask):
        fs, gs = np.nonzero(mask)
        k = np.lexsort((rank[gs], rank[fs]))[0]
        return int(fs[k]), int(gs[k])

    f0, g0 = first_pair(Zn)
    c0 = int(wit[f0] if side == RIGHT else wit[g0])
    sample = None
    if c0 >= 0:
        sample = (space.series(f0), space.series(g0), c0)
    if bad.any():
        f, g = first_pair(bad)
        vec = space.coeffs[f] if side == RIGHT else space.coeffs[g]
        return McCoyVerdict(outcome=COUNTEREXAMPLE,
                            counterexample=(space.series(f), space.series(g)),
                            failures=_failure_map(space, vec, side), sample=sample, **base)
    return McCoyVerdict(outcome=VERIFIED, sample=sample, **base)


def _random_search(space: WindowSpace, side, seed, trials):
    if seed is None:
        raise InvalidSpecError("random mode requires an explicit seed")
    R = space.ring
    rng = np.random.default_rng(seed)
    m = len(space.window)
    F = rng.integers(0, R.order, size=(trials, m))
    G = rng.integers(0, R.order, size=(trials, m))
    keep = (F != R.zero).any(axis=1) & (G != R.zero).any(axis=1)
    F, G = F[keep], G[keep]
    zero = (space.paired_products(F, G) == R.zero).all(axis=1)
    if side == RIGHT:
        wit = space.first_witness(space.right_witness_table(F))
    else:
        wit = space.first_witness(space.left_witness_table(G))
    hits = np.flatnonzero(zero)
    base = dict(side=side, ring=R.name, monoid=space.action.monoid.name,
                action=_describe_action(space.action), window=space.window,
                mode=f"random(seed={seed}, trials={trials})",
                pairs_examined=int(len(F)), zero_divisor_pairs=int(len(hits)))
    if not len(hits):
        return McCoyVerdict(outcome=VACUOUS, **base)
    k0 = hits[0]
    sample = None
    if wit[k0] >= 0:
        sample = (space.from_vector(F[k0]), space.from_vector(G[k0]), int(wit[k0]))
    bad = hits[wit[hits] < 0]
    if len(bad):
        k = bad[0]
        vec = F[k] if side == RIGHT else G[k]
        return McCoyVerdict(outcome=COUNTEREXAMPLE,
                            counterexample=(space.from_vector(F[k]), space.from_vector(G[k])),
                            failures=_failure_map(space, vec, side), sample=sample, **base)
    return McCoyVerdict(outcome=VERIFIED, sample=sample, **base)


def mccoy_search(action: MonoidAction, window, side: str = RIGHT, mode: str = "exhaustive",
                 seed: int | None = None, trials: int = 10000, budget: int = BUDGET,
                 workers: int = 1, order_seed: int | None = None,
                 space: WindowSpace | None = None) -> McCoyVerdict:
    """Search window series for a pair f, g != 0 with fg = 0 and no constant witness.

    Right side: the witness is c != 0 with f * c = 0, i.e. f(s) * omega_s(c) = 0
    for all s.  Left side: c != 0 with c * g = 0 computed in the series ring,
    where the constant sits at the identity so no twist applies.
    """
    if side not in (LEFT, RIGHT):
        raise InvalidSpecError(f"side must be left or right, got {side!r}")
    if mode == "random":
        space = space or WindowSpace(action, window, budget=None, enumerate_all=False)
        return _random_search(space, side, seed, trials)
    if mode != "exhaustive":
        raise InvalidSpecError(f"unknown mode {mode!r}")
    space = space or WindowSpace(action, window, budget=budget)
    return _verdict_from_matrix(space, space.zero_matrix(workers), side, order_seed)


def replay(verdict: McCoyVerdict) -> bool:
    """Re-verify every series claim in a verdict with plain series arithmetic."""
    ok = True
    if verdict.sample is not None:
        f, g, c = verdict.sample
        ok &= not series_mul(f, g) and bool(f) and bool(g)
        if verdict.side == RIGHT:
            ok &= not scale_right_const(f, c)
        else:
            ok &= not scale_left_const(c, g)
    if verdict.counterexample is not None:
        f, g = verdict.counterexample
        R = f.action.ring
        ok &= bool(f) and bool(g) and not series_mul(f, g)
        for c in R.nonzero:
            w = scale_right_const(f, c) if verdict.side == RIGHT else scale_left_const(c, g)
            ok &= bool(w)
    return bool(ok)


# -- lemma reports --------------------------------------------------------------

@dataclass
class InstanceOutcome:
    label: str
    hypotheses_hold: bool
    conclusion_holds: bool | None
    witness: object = None


@dataclass
class LemmaReport:
    lemma: str
    ring: str
    context: str = ""
    hypotheses_hold: bool = True
    instances_checked: int = 0
    premise_held: int = 0
    outcomes: list = field(default_factory=list)
    failures: list = field(default_factory=list)
    notes: str = ""

    @property
    def status(self) -> str:
        if not self.hypotheses_hold:
            return SKIPPED
        if self.failures:
            return FAILS
        if self.premise_held == 0:
            return VACUOUS
        return HOLDS

    def add(self, label, conclusion, witness=None):
        self.instances_checked += 1
        if conclusion is None:
            return
        self.premise_held += 1
        out = InstanceOutcome(label, True, bool(conclusion), witness)
        if not conclusion:
            self.failures.append(out)
        self.outcomes.append(out)

    def to_dict(self, max_outcomes=50):
        return {
            "lemma": self.lemma, "ring": self.ring, "context": self.context,
            "status": self.status, "hypotheses_hold": self.hypotheses_hold,
            "instances_checked": self.instances_checked,
            "conclusion_evaluated": self.premise_held,
            "failures": [_outcome_dict(o) for o in self.failures],
            "outcomes": [_outcome_dict(o) for o in self.outcomes[:max_outcomes]],
            "notes": self.notes,
        }


def _outcome_dict(o: InstanceOutcome):
    return {"instance": o.label, "conclusion_holds": o.conclusion_holds,
            "witness": None if o.witness is None else str(o.witness)}


def _skip(report: LemmaReport, why: str) -> LemmaReport:
    report.hypotheses_hold = False
    report.notes = why
    return report


def _hyp_note(p: PropertyProfile) -> str:
    failed = [n for n, ok in (("abelian", p.abelian), ("semi-regular", p.semiregular),
                              ("radical nilpotent", p.radical_nilpotent)) if not ok]
    return "hypotheses fail: " + ", ".join(failed)


def verify_lemma_generation(R: FiniteRing, bound: int = 2) -> LemmaReport:
    """sum R a_i R = R implies sum R a_i = R, over all multisets of size <= bound+1."""
    rep = LemmaReport("generation", R.name, f"tuples of length <= {bound + 1}")
    p = cached_profile(R)
    if not _base(p):
        return _skip(rep, _hyp_note(p))
    two = {a: closure(R, {a}, TWO_SIDED) for a in range(R.order)}
    left = {a: closure(R, {a}, LEFT) for a in range(R.order)}
    whole = frozenset(range(R.order))
    memo: dict = {}

    def total(parts):
        key = frozenset(parts)
        if key not in memo:
            memo[key] = closure(R, set().union(*parts), "additive")
        return memo[key]

    for k in range(1, bound + 2):
        for tup in itertools.combinations_with_replacement(range(R.order), k):
            if total([two[a] for a in tup]) != whole:
                rep.add(str(tup), None)
                continue
            ok = total([left[a] for a in tup]) == whole
            rep.add("(" + ", ".join(R.names[a] for a in tup) + ")", ok,
                    None if ok else tuple(R.names[a] for a in tup))
    return rep


def verify_quasi_duo(R: FiniteRing) -> LemmaReport:
    """Abelian semi-regular rings are quasi-duo."""
    rep = LemmaReport("quasi_duo", R.name)
    p = cached_profile(R)
    if not (p.abelian and p.semiregular):
        failed = "abelian" if not p.abelian else "semi-regular"
        return _skip(rep, f"hypotheses fail: {failed}")
    rep.add(R.name, p.quasi_duo.holds, p.quasi_duo.witness)
    return rep


def verify_maximal_prime(R: FiniteRing) -> LemmaReport:
    """Maximal one-sided ideals of abelian semi-regular rings are two-sided primes."""
    rep = LemmaReport("maximal_prime", R.name)
    p = cached_profile(R)
    if not (p.abelian and p.semiregular):
        return _skip(rep, "hypotheses fail: " + ("abelian" if not p.abelian else "semi-regular"))
    for side, ideals in ((LEFT, p.maximal_left_ideals), (RIGHT, p.maximal_right_ideals)):
        for M in ideals:
            label = f"{side} {M.names()}"
            if closure(R, M.elements, TWO_SIDED) != M.elements:
                rep.add(label, False, "not two-sided")
                continue
            prime = is_prime_ideal(R, M)
            rep.add(label, prime.holds, prime.witness)
    return rep


def verify_annihilator_nonzero(R: FiniteRing) -> LemmaReport:
    """Every maximal one-sided ideal has a nonzero right and left annihilator."""
    rep = LemmaReport("annihilator_nonzero", R.name)
    p = cached_profile(R)
    if not _base(p):
        return _skip(rep, _hyp_note(p))
    zero = frozenset({R.zero})
    for side, ideals in ((LEFT, p.maximal_left_ideals), (RIGHT, p.maximal_right_ideals)):
        for M in ideals:
            for ann_side in (RIGHT, LEFT):
                ann = annihilator(R, M.elements, ann_side)
                rep.add(f"{ann_side} annihilator of maximal {side} {M.names()}",
                        ann != zero, None if ann != zero else M.names())
    return rep


def verify_compatible_membership(R: FiniteRing, action: MonoidAction) -> LemmaReport:
    """ab in M iff a*sigma(b) in M, for maximal one-sided M and generator images sigma."""
    rep = LemmaReport("compatible_membership", R.name, _describe_action(action))
    hp = hypothesis_profile(R, action)
    if not hp.theorem_hypotheses_hold:
        note = _hyp_note(hp.profile) if not hp.base_hypotheses else "hypotheses fail: not compatible"
        return _skip(rep, note)
    p = hp.profile
    for side, ideals in ((LEFT, p.maximal_left_ideals), (RIGHT, p.maximal_right_ideals)):
        for M in ideals:
            inM = np.zeros(R.order, dtype=bool)
            inM[list(M.elements)] = True
            for k, sigma in enumerate(action.images()):
                plain = inM[R.mul]
                twisted = inM[R.mul[:, sigma]]
                bad = np.argwhere(plain != twisted)
                w = None if not len(bad) else (R.names[bad[0][0]], R.names[bad[0][1]])
                rep.add(f"{side} {M.names()} image {k}", not len(bad), w)
    return rep


def _maximal_masks(R, ideals):
    masks = []
    for M in ideals:
        m = np.zeros(R.order, dtype=bool)
        m[list(M.elements)] = True
        masks.append(m)
    return masks


def verify_coefficients_in_radical(action: MonoidAction, window, budget: int = BUDGET,
                                   space: WindowSpace | None = None) -> LemmaReport:
    """fg = 0, g != 0 and C_f outside every maximal right ideal force C_g inside J."""
    R = action.ring
    rep = LemmaReport("coefficients_in_radical", R.name,
                      f"{action.monoid.name}, {_describe_action(action)}, D={list(window)}")
    hp = hypothesis_profile(R, action)
    if not hp.theorem_hypotheses_hold:
        note = _hyp_note(hp.profile) if not hp.base_hypotheses else "hypotheses fail: not compatible"
        return _skip(rep, note)
    space = space or WindowSpace(action, window, budget=budget)
    Z = space.zero_matrix()
    F = space.coeffs
    qualifies = space.nonzero.copy()
    for inM in _maximal_masks(R, hp.profile.maximal_right_ideals):
        qualifies &= (~inM[F]).any(axis=1)
    inJ = np.zeros(R.order, dtype=bool)
    inJ[list(hp.profile.radical.elements)] = True
    g_in_J = inJ[F].all(axis=1)
    pairs = Z & qualifies[:, None] & space.nonzero[None, :]
    rep.instances_checked = int(space.nonzero.sum()) ** 2
    rep.premise_held = int(pairs.sum())
    for f, g in np.argwhere(pairs & ~g_in_J[None, :])[:20]:
        rep.failures.append(InstanceOutcome(
            f"f={format_series(space.series(f))}, g={format_series(space.series(g))}",
            True, False, format_series(space.series(g))))
    if rep.premise_held == 0:
        rep.notes = "vacuous: no zero-divisor pair in the window meets the premise"
    return rep


@dataclass
class TheoremResult:
    hypotheses: HypothesisProfile
    right: McCoyVerdict
    left: McCoyVerdict
    report: LemmaReport
    exploration: bool = False

    @property
    def passed(self) -> bool:
        return COUNTEREXAMPLE not in (self.right.outcome, self.left.outcome)


def verify_main_theorem(action: MonoidAction, window, budget: int = BUDGET,
                        explore: bool = False, workers: int = 1) -> TheoremResult:
    """Both-sided exhaustive McCoy search under the theorem's hypotheses.

    With ``explore=True`` the search also runs when the hypotheses fail; the
    result is then an observation, not a test of the theorem.
    """
    R = action.ring
    hp = hypothesis_profile(R, action)
    if not hp.theorem_hypotheses_hold and not explore:
        raise HypothesisError(f"{R.name} with action {_describe_action(action)}: "
                              "theorem hypotheses fail; pass explore=True (--explore) to search anyway")
    space = WindowSpace(action, window, budget=budget)
    Z = space.zero_matrix(workers)
    right = _verdict_from_matrix(space, Z, RIGHT)
    left = _verdict_from_matrix(space, Z, LEFT)
    rep = LemmaReport("main_theorem", R.name,
                      f"{action.monoid.name}, {_describe_action(action)}, D={list(space.window)}",
                      hypotheses_hold=hp.theorem_hypotheses_hold)
    for v in (right, left):
        if v.outcome == VACUOUS:
            rep.add(f"{v.side}: vacuous", None)
        else:
            rep.add(f"{v.side}: {v.zero_divisor_pairs} zero-divisor pairs",
                    v.outcome != COUNTEREXAMPLE,
                    None if v.counterexample is None else
                    tuple(format_series(s) for s in v.counterexample))
    if not hp.theorem_hypotheses_hold:
        rep.notes = "exploration: theorem hypotheses fail"
    return TheoremResult(hp, right, left, rep, exploration=not hp.theorem_hypotheses_hold)


def fields_witness_check(R: FiniteRing, window=None, degree: int = 3,
                         budget: int = BUDGET) -> LemmaReport:
    """Polynomial shadow of Fields' criterion for commutative R, trivial action on N.

    For each f != 0 in the window: (some g != 0 in the window has fg = 0)
    iff (some r != 0 has r f = 0).
    """
    if not R.is_commutative():
        raise HypothesisError(f"{R.name} is not commutative")
    action = trivial_action(R, NATURALS)
    window = tuple(window) if window is not None else default_window(NATURALS, degree)
    rep = LemmaReport("fields_shadow", R.name, f"N, trivial, D={list(window)}",
                      notes="classical McCoy shadow of Fields' power-series criterion, "
                            "restricted to finitely supported series")
    space = WindowSpace(action, window, budget=budget)
    Z = space.zero_matrix()
    nz = space.nonzero
    zd = (Z & nz[None, :]).any(axis=1)
    wit = space.first_witness(space.left_witness_table(space.coeffs)) >= 0
    for f in np.flatnonzero(nz):
        ok = bool(zd[f]) == bool(wit[f])
        rep.instances_checked += 1
        rep.premise_held += 1
        if not ok:
            rep.failures.append(InstanceOutcome(format_series(space.series(f)), True, False,
                                                {"zero_divisor": bool(zd[f]),
                                                 "witness": bool(wit[f])}))
    rep.outcomes = [InstanceOutcome("zero divisors in window", True, True, int(zd[nz].sum()))]
    return rep


def verify_sn_transfer(R: FiniteRing, n: int, cap: int | None = None) -> LemmaReport:
    """(abelian, semi-regular, J nilpotent) holds for S_n(R) iff it holds for R."""
    rep = LemmaReport("sn_transfer", R.name, f"n={n}")
    limit = IDEAL_CAP if cap is None else cap
    if R.order ** (1 + n * (n - 1) // 2) > limit:
        rep.hypotheses_hold = False
        rep.notes = f"capacity: S_{n}({R.name}) exceeds ideal cap {limit}"
        return rep
    S = s_matrix(n, R)
    pR, pS = cached_profile(R), cached_profile(S)
    qR = quotient_ring(R, pR.radical)[0].order
    qS = quotient_ring(S, pS.radical)[0].order
    rep.add("biconditional", _base(pR) == _base(pS), (_base(pR), _base(pS)))
    rep.add("quotient orders", qR == qS, (qR, qS))
    rep.notes = f"base={_base(pR)}, matrix={_base(pS)}, |R/J|={qR}, |S_n/J|={qS}"
    return rep


# -- actions ------------------------------------------------------------------

def action_names(R: FiniteRing) -> dict:
    """Names for every enumerable endomorphism: trivial, frobenius, swap, e<k>."""
    endos = enumerate_endomorphisms(R)
    names = {}
    for k, e in enumerate(endos):
        names[f"e{k}"] = e
    names["trivial"] = endos[0]
    if R.name.startswith("gf"):
        p = next(q for q in range(2, R.order + 1) if R.order % q == 0)
        frob = tuple(R.power(x, p) for x in range(R.order))
        for e in endos:
            if e.map == frob:
                names["frobenius"] = e
    if R.name.startswith("product"):
        for e in endos:
            if not e.is_identity and e.is_bijective and e.compose(e).is_identity:
                names.setdefault("swap", e)
    return names


def endomorphism_label(R: FiniteRing, e: Endomorphism) -> str:
    named = action_names(R)
    for key in ("trivial", "frobenius", "swap"):
        if key in named and named[key] == e:
            return key
    return next(k for k, v in named.items() if v == e)


def enumerate_actions(R: FiniteRing, S: OrderedMonoid, compatible_only: bool = True):
    """(label, action) pairs for every admissible choice of generator images."""
    endos = enumerate_endomorphisms(R)
    if S.is_group:
        endos = [e for e in endos if e.is_bijective]
    out = []
    for combo in itertools.product(endos, repeat=len(S.generators)):
        try:
            act = build_action(R, S, combo)
        except Exception:
            continue
        if compatible_only and not is_compatible(act):
            continue
        out.append((",".join(endomorphism_label(R, e) for e in combo), act))
    return out


# -- open problem exploration -------------------------------------------------

@dataclass
class ExplorationEntry:
    ring: str
    monoid: str
    action: str
    window: tuple
    right: McCoyVerdict | None = None
    left: McCoyVerdict | None = None
    status: str = ""


@dataclass
class ExplorationReport:
    label: str
    entries: list
    excluded: list

    @property
    def empty(self):
        return not self.entries

    def to_dict(self):
        return {
            "label": self.label,
            "empty_stratum": self.empty,
            "entries": [{"ring": e.ring, "monoid": e.monoid, "action": e.action,
                         "window": [str(s) for s in e.window], "status": e.status,
                         "right": e.right.to_dict() if e.right else None,
                         "left": e.left.to_dict() if e.left else None} for e in self.entries],
            "excluded": self.excluded,
        }


EXPLORATION_LABEL = ("exploration of the open 2-primal question "
                     "(abelian replaced by 2-primal); no claim either way")


def two_primal_exploration(rings, monoid: OrderedMonoid = NATURALS, degree: int = 1,
                           budget: int = BUDGET, window=None) -> ExplorationReport:
    """McCoy search on 2-primal, semi-regular, J-nilpotent, compatible, non-abelian rings."""
    entries, excluded = [], []
    for R in rings:
        p = cached_profile(R)
        reasons = []
        if p.abelian:
            reasons.append("abelian")
        if not p.two_primal:
            reasons.append("not 2-primal")
        if not p.semiregular:
            reasons.append("not semi-regular")
        if not p.radical_nilpotent:
            reasons.append("radical not nilpotent")
        if reasons:
            excluded.append({"ring": R.name, "reason": ", ".join(reasons)})
            continue
        try:
            actions = enumerate_actions(R, monoid)
        except CapacityError as exc:
            excluded.append({"ring": R.name, "reason": f"capacity: {exc}"})
            continue
        for label, act in actions:
            D = tuple(window) if window is not None else default_window(monoid, degree)
            entry = ExplorationEntry(R.name, monoid.name, label, D)
            try:
                space = WindowSpace(act, D, budget=budget)
                Z = space.zero_matrix()
                entry.right = _verdict_from_matrix(space, Z, RIGHT)
                entry.left = _verdict_from_matrix(space, Z, LEFT)
                entry.status = f"right={entry.right.outcome}, left={entry.left.outcome}"
            except CapacityError as exc:
                entry.status = f"capacity: {exc}"
            entries.append(entry)
    return ExplorationReport(EXPLORATION_LABEL, entries, excluded)
