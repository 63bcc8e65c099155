"""Ideal structure and ring-theoretic predicates of finite rings.

Every predicate returns a :class:`Check`, which is truthy exactly when the
property holds and otherwise carries a concrete witness.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass, field

import numpy as np

from .errors import (CapacityError, InconsistencyError, InvalidIdealError,
                     SidednessError)
from .rings import FiniteRing, validate_ring_axioms

IDEAL_CAP = int(os.environ.get("SKEWMCCOY_IDEAL_CAP", 64))
ENDO_CAP = int(os.environ.get("SKEWMCCOY_ENDO_CAP", 16))

LEFT, RIGHT, TWO_SIDED = "left", "right", "two-sided"


@dataclass(frozen=True)
class Check:
    holds: bool
    witness: object = None
    detail: str = ""

    def __bool__(self):
        return self.holds


@dataclass(frozen=True)
class Ideal:
    ring: FiniteRing = field(compare=False, repr=False)
    elements: frozenset
    side: str = TWO_SIDED

    def __contains__(self, x):
        return x in self.elements

    def __len__(self):
        return len(self.elements)

    @property
    def sorted(self):
        return tuple(sorted(self.elements))

    @property
    def is_proper(self):
        return len(self.elements) < self.ring.order

    def names(self):
        return [self.ring.names[x] for x in self.sorted]

    def __repr__(self):
        return f"Ideal({self.side}, {set(self.sorted)})"


def _mask(R, xs):
    m = np.zeros(R.order, dtype=bool)
    m[list(xs)] = True
    return m


def closure(R: FiniteRing, gens, side: str) -> frozenset:
    """Smallest additive subgroup containing ``gens`` and absorbing on ``side``.

    ``side`` may also be ``"additive"`` for the plain subgroup.
    """
    mask = _mask(R, gens)
    mask[R.zero] = True
    while True:
        idx = np.flatnonzero(mask)
        new = mask.copy()
        new[R.add[np.ix_(idx, idx)].ravel()] = True
        if side in (LEFT, TWO_SIDED):
            new[R.mul[:, idx].ravel()] = True
        if side in (RIGHT, TWO_SIDED):
            new[R.mul[idx, :].ravel()] = True
        if np.array_equal(new, mask):
            return frozenset(int(i) for i in idx)
        mask = new


def generated_ideal(R, gens, side=TWO_SIDED) -> Ideal:
    return Ideal(R, closure(R, gens, side), side)


def is_ideal(R, xs, side) -> bool:
    xs = frozenset(xs)
    return closure(R, xs, side) == xs


def _check_cap(R, cap, what):
    if R.order > cap:
        raise CapacityError(f"{what}: ring {R.name} has order {R.order} > cap {cap}")


_IDEAL_CACHE: dict = {}


def all_ideals(R: FiniteRing, side: str, cap: int | None = None) -> list[Ideal]:
    """Every ideal of the given sidedness, by closure of generator sets.

    Starting from the zero ideal, each known ideal is extended by one element
    at a time; every ideal of a finite ring is reached this way.
    """
    _check_cap(R, IDEAL_CAP if cap is None else cap, "ideal enumeration")
    key = (id(R), side)
    hit = _IDEAL_CACHE.get(key)
    if hit is not None and hit[0] is R:
        return hit[1]
    start = closure(R, (), side)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for I in frontier:
            for a in range(R.order):
                if a in I:
                    continue
                J = closure(R, I | {a}, side)
                if J not in seen:
                    seen.add(J)
                    nxt.append(J)
        frontier = nxt
    out = [Ideal(R, s, side) for s in sorted(seen, key=lambda s: (len(s), sorted(s)))]
    _IDEAL_CACHE[key] = (R, out)
    return out


def one_sided_maximal_ideals(R: FiniteRing, side: str, cap: int | None = None) -> list[Ideal]:
    """Maximal proper ideals of the given side, ordered by sorted element tuple."""
    proper = [I for I in all_ideals(R, side, cap) if I.is_proper]
    maximal = [I for I in proper
               if not any(I.elements < J.elements for J in proper)]
    return sorted(maximal, key=lambda I: I.sorted)


def maximal_ideals(R, cap=None):
    return one_sided_maximal_ideals(R, TWO_SIDED, cap)


def _intersection(R, ideals):
    out = frozenset(range(R.order))
    for I in ideals:
        out &= I.elements
    return out


# -- idempotents and units ----------------------------------------------------

def idempotents(R: FiniteRing) -> dict[int, bool]:
    """Map each idempotent to whether it is central."""
    out = {}
    for e in range(R.order):
        if R.mul[e, e] == e:
            out[e] = bool(np.array_equal(R.mul[e, :], R.mul[:, e]))
    return out


def is_abelian(R: FiniteRing) -> Check:
    for e, central in idempotents(R).items():
        if not central:
            r = int(np.flatnonzero(R.mul[e, :] != R.mul[:, e])[0])
            return Check(False, (e, r), f"{R.names[e]}*{R.names[r]} != {R.names[r]}*{R.names[e]}")
    return Check(True)


def units(R: FiniteRing) -> frozenset:
    left = (R.mul == R.one).any(axis=0)    # y*x = 1 for some y
    right = (R.mul == R.one).any(axis=1)
    return frozenset(int(x) for x in np.flatnonzero(left & right))


# -- radicals -----------------------------------------------------------------

def quasi_regular_radical(R: FiniteRing) -> frozenset:
    """{a : 1 - r*a has a left inverse for every r}."""
    left_inv = (R.mul == R.one).any(axis=0)
    ra = R.mul.astype(np.intp)                       # ra[r, a] = r*a
    one_minus = R.add[R.one, R.neg[ra]]              # 1 - r*a
    ok = left_inv[one_minus].all(axis=0)
    return frozenset(int(a) for a in np.flatnonzero(ok))


def jacobson_radical(R: FiniteRing, cap: int | None = None) -> Ideal:
    """J(R), cross-checked against the maximal left and right ideals."""
    J = quasi_regular_radical(R)
    via_left = _intersection(R, one_sided_maximal_ideals(R, LEFT, cap))
    via_right = _intersection(R, one_sided_maximal_ideals(R, RIGHT, cap))
    if J != via_left or J != via_right:
        raise InconsistencyError(
            f"{R.name}: radical mismatch quasi-regular={sorted(J)} "
            f"left={sorted(via_left)} right={sorted(via_right)}")
    if not is_ideal(R, J, TWO_SIDED):
        raise InconsistencyError(f"{R.name}: radical {sorted(J)} is not a two-sided ideal")
    return Ideal(R, J, TWO_SIDED)


def ideal_product(R, X, Y) -> frozenset:
    """Additive closure of {x*y}."""
    X, Y = sorted(X), sorted(Y)
    prods = R.mul[np.ix_(X, Y)].ravel()
    return closure(R, set(int(p) for p in prods), "additive")


def nilpotency_index(I: Ideal) -> int | None:
    """Least k with I^k = 0, or None when I is not nilpotent."""
    R = I.ring
    zero = frozenset({R.zero})
    power = I.elements
    for k in range(1, R.order + 1):
        if power == zero:
            return k
        power = ideal_product(R, power, I.elements)
    return None


def nilpotent_elements(R: FiniteRing) -> frozenset:
    out = set()
    for a in range(R.order):
        x = a
        for _ in range(R.order):
            if x == R.zero:
                out.add(a)
                break
            x = int(R.mul[x, a])
    return frozenset(out)


# -- quotients and regularity -------------------------------------------------

def quotient_ring(R: FiniteRing, I: Ideal):
    """R/I with cosets ordered by their smallest member; returns (ring, projection)."""
    if I.side != TWO_SIDED and not is_ideal(R, I.elements, TWO_SIDED):
        raise SidednessError(f"quotient needs a two-sided ideal, got {I.side}")
    if not is_ideal(R, I.elements, TWO_SIDED):
        raise SidednessError(f"{sorted(I.elements)} is not a two-sided ideal of {R.name}")
    members = sorted(I.elements)
    rep_of = {}
    reps = []
    for a in range(R.order):
        if a in rep_of:
            continue
        reps.append(a)
        for j in members:
            rep_of[int(R.add[a, j])] = a
    cid = {r: i for i, r in enumerate(reps)}
    proj = tuple(cid[rep_of[a]] for a in range(R.order))
    add = [[proj[R.add[x, y]] for y in reps] for x in reps]
    mul = [[proj[R.mul[x, y]] for y in reps] for x in reps]
    names = tuple(R.names[r] + ("" if len(members) == 1 else "+I") for r in reps)
    Q = FiniteRing(len(reps), _as_table(add), _as_table(mul), proj[R.zero], proj[R.one],
            f"({R.name})/{{{','.join(R.names[x] for x in members)}}}",
            f"quotient of {R.name}", names)
    report = validate_ring_axioms(Q)
    if not report.ok:
        raise InconsistencyError(f"quotient fails {report.first_failure}")
    for x in range(R.order):
        for y in range(R.order):
            if proj[R.add[x, y]] != Q.add[proj[x], proj[y]] or \
                    proj[R.mul[x, y]] != Q.mul[proj[x], proj[y]]:
                raise InconsistencyError("projection is not a homomorphism")
    return Q, proj


def _as_table(rows):
    arr = np.asarray(rows, dtype=np.uint8 if len(rows) <= 256 else np.int32)
    arr.setflags(write=False)
    return arr


def is_regular(R: FiniteRing) -> Check:
    """Von Neumann regularity: every a has x with a*x*a = a."""
    M = R.mul.astype(np.intp)
    axa = M[M[:, :], np.arange(R.order)[:, None]]  # axa[a, x] = (a*x)*a
    ok = (axa == np.arange(R.order)[:, None]).any(axis=1)
    bad = np.flatnonzero(~ok)
    if len(bad):
        a = int(bad[0])
        return Check(False, a, f"no x with {R.names[a]}*x*{R.names[a]} = {R.names[a]}")
    return Check(True)


def is_semiregular(R: FiniteRing, J: Ideal | None = None) -> Check:
    """R/J(R) regular and every idempotent of R/J(R) lifts to one of R."""
    J = J or jacobson_radical(R)
    Q, proj = quotient_ring(R, J)
    reg = is_regular(Q)
    if not reg:
        return Check(False, ("regular", reg.witness), f"R/J not regular: {reg.detail}")
    lifted = {proj[e] for e in idempotents(R)}
    for e in idempotents(Q):
        if e not in lifted:
            return Check(False, ("lifting", e), f"idempotent {Q.names[e]} of R/J does not lift")
    return Check(True)


# -- one-sided structure ------------------------------------------------------

def _absorption_failure(R, I: Ideal):
    """(r, m) with r*m or m*r outside I, whichever side I lacks."""
    for m in I.sorted:
        for r in range(R.order):
            if int(R.mul[r, m]) not in I.elements:
                return ("left", r, m)
            if int(R.mul[m, r]) not in I.elements:
                return ("right", m, r)
    return None


def is_quasi_duo(R: FiniteRing, cap: int | None = None) -> Check:
    for side in (LEFT, RIGHT):
        for M in one_sided_maximal_ideals(R, side, cap):
            fail = _absorption_failure(R, M)
            if fail is not None:
                return Check(False, (side, M.sorted, fail),
                             f"maximal {side} ideal {M.names()} is not two-sided")
    return Check(True)


def is_prime_ideal(R: FiniteRing, P: Ideal) -> Check:
    """aRb in P implies a in P or b in P."""
    if not is_ideal(R, P.elements, TWO_SIDED):
        raise InvalidIdealError(f"{P!r} is not a two-sided ideal")
    if not P.is_proper:
        raise InvalidIdealError("the whole ring is not a prime ideal")
    n = R.order
    M = R.mul.astype(np.intp)
    inP = _mask(R, P.elements)
    arb = M[M[:, :, None], np.arange(n)[None, None, :]]   # [a, r, b] = (a*r)*b
    contained = inP[arb].all(axis=1)                      # [a, b]
    bad = contained & ~inP[:, None] & ~inP[None, :]
    w = np.argwhere(bad)
    if len(w):
        a, b = int(w[0][0]), int(w[0][1])
        return Check(False, (a, b), f"{R.names[a]}R{R.names[b]} inside P")
    return Check(True)


def annihilator(R: FiniteRing, X, side: str) -> frozenset:
    """Right annihilator {c : x*c = 0} (or the left mirror) of the set X."""
    X = sorted(X)
    if not X:
        return frozenset(range(R.order))
    if side == RIGHT:
        ok = (R.mul[X, :] == R.zero).all(axis=0)
    elif side == LEFT:
        ok = (R.mul[:, X] == R.zero).all(axis=1)
    else:
        raise ValueError(f"side must be left or right, got {side!r}")
    return frozenset(int(c) for c in np.flatnonzero(ok))


@dataclass(frozen=True)
class NilStructure:
    nil: frozenset
    prime_radical: Ideal
    prime_ideals: tuple
    two_primal: bool


def nil_structure(R: FiniteRing, cap: int | None = None) -> NilStructure:
    primes = tuple(I for I in all_ideals(R, TWO_SIDED, cap)
                   if I.is_proper and is_prime_ideal(R, I))
    lower = Ideal(R, _intersection(R, primes), TWO_SIDED)
    nil = nilpotent_elements(R)
    return NilStructure(nil, lower, primes, nil == lower.elements)


# -- endomorphisms ------------------------------------------------------------

@dataclass(frozen=True)
class Endomorphism:
    ring: FiniteRing = field(compare=False, repr=False)
    map: tuple

    def __call__(self, x):
        return self.map[x]

    @property
    def is_identity(self):
        return self.map == tuple(range(len(self.map)))

    @property
    def is_bijective(self):
        return len(set(self.map)) == len(self.map)

    def compose(self, other: "Endomorphism") -> "Endomorphism":
        """self after other."""
        return Endomorphism(self.ring, tuple(self.map[other.map[x]] for x in range(len(self.map))))

    def inverse(self) -> "Endomorphism":
        inv = [0] * len(self.map)
        for x, y in enumerate(self.map):
            inv[y] = x
        return Endomorphism(self.ring, tuple(inv))

    def __repr__(self):
        return f"Endomorphism({list(self.map)})"


def identity_endomorphism(R):
    return Endomorphism(R, tuple(range(R.order)))


def is_endomorphism(R: FiniteRing, f) -> bool:
    f = np.asarray(f, dtype=np.intp)
    if f[R.one] != R.one:
        return False
    return bool(np.array_equal(f[R.add], R.add[f[:, None], f[None, :]]) and
                np.array_equal(f[R.mul], R.mul[f[:, None], f[None, :]]))


def ring_generators(R: FiniteRing) -> list[int]:
    """Greedy generating set: each element added is outside the subring so far."""
    gens: list[int] = []
    sub = _subring(R, gens)
    for a in range(R.order):
        if a not in sub:
            gens.append(a)
            sub = _subring(R, gens)
    return gens


def _subring(R, gens):
    S = {R.zero, R.one, *gens}
    while True:
        idx = sorted(S)
        new = S | set(int(x) for x in R.add[np.ix_(idx, idx)].ravel()) \
            | set(int(x) for x in R.mul[np.ix_(idx, idx)].ravel())
        if new == S:
            return S
        S = new


def _extend(R, gens, images):
    """Extend generator images to a homomorphism, or None on conflict."""
    f = {R.zero: R.zero, R.one: R.one}
    for g, im in zip(gens, images):
        if f.get(g, im) != im:
            return None
        f[g] = im
    changed = True
    while changed:
        changed = False
        items = list(f.items())
        for x, fx in items:
            for y, fy in items:
                for op in (R.add, R.mul):
                    z, fz = int(op[x, y]), int(op[fx, fy])
                    old = f.get(z)
                    if old is None:
                        f[z] = fz
                        changed = True
                    elif old != fz:
                        return None
    return tuple(f[x] for x in range(R.order))


def enumerate_endomorphisms(R: FiniteRing, cap: int | None = None) -> list[Endomorphism]:
    """All unital ring endomorphisms, identity first, then by image tuple."""
    _check_cap(R, ENDO_CAP if cap is None else cap, "endomorphism enumeration")
    gens = ring_generators(R)
    found = set()
    for images in itertools.product(range(R.order), repeat=len(gens)):
        f = _extend(R, gens, images)
        if f is not None and is_endomorphism(R, f):
            found.add(f)
    ident = tuple(range(R.order))
    ordered = sorted(found, key=lambda f: (f != ident, f))
    return [Endomorphism(R, f) for f in ordered]


# -- aggregate profile --------------------------------------------------------

@dataclass(frozen=True)
class PropertyProfile:
    ring: str
    abelian: Check
    regular: Check
    semiregular: Check
    quasi_duo: Check
    two_primal: Check
    radical: Ideal
    radical_nilpotency_index: int | None
    idempotents: dict
    maximal_left_ideals: list
    maximal_right_ideals: list
    nil: NilStructure

    @property
    def radical_nilpotent(self):
        return self.radical_nilpotency_index is not None


def ring_profile(R: FiniteRing, cap: int | None = None) -> PropertyProfile:
    J = jacobson_radical(R, cap)
    nil = nil_structure(R, cap)
    if nil.two_primal:
        tp = Check(True)
    else:
        extra = sorted(nil.nil - nil.prime_radical.elements)
        tp = Check(False, extra[0] if extra else None,
                   "nilpotent element outside the prime radical")
    return PropertyProfile(
        ring=R.name,
        abelian=is_abelian(R),
        regular=is_regular(R),
        semiregular=is_semiregular(R, J),
        quasi_duo=is_quasi_duo(R, cap),
        two_primal=tp,
        radical=J,
        radical_nilpotency_index=nilpotency_index(J),
        idempotents=idempotents(R),
        maximal_left_ideals=one_sided_maximal_ideals(R, LEFT, cap),
        maximal_right_ideals=one_sided_maximal_ideals(R, RIGHT, cap),
        nil=nil,
    )
