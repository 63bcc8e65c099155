"""Finitely supported elements of the skew series ring R[[S, omega]].

A series is a finite map from monoid elements to nonzero ring element ids.
Multiplication is the twisted convolution

    (f g)(s) = sum over u*v = s of f(u) * omega_u(g(v)),

where ``omega_u`` is the ring endomorphism attached to ``u`` by the action.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import ActionError, InvalidSpecError
from .omonoid import OrderedMonoid
from .rings import FiniteRing
from .structure import Check, Endomorphism, is_endomorphism


@dataclass(frozen=True, eq=False)
class MonoidAction:
    """A monoid homomorphism S -> End(R) given by one image per generator.

    For ``N`` the single image sigma gives omega_n = sigma^n; for ``Z`` sigma must
    be bijective and omega_{-n} = (sigma^-1)^n; for ``N^k lex`` the k images
    must commute pairwise.
    """

    ring: FiniteRing
    monoid: OrderedMonoid
    generators: tuple
    _cache: dict = field(default_factory=dict, repr=False)

    def _power(self, g: int, k: int) -> np.ndarray:
        key = (g, k)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        if k < 0:
            base = np.asarray(self.generators[g].inverse().map, dtype=np.intp)
            k = -k
        else:
            base = np.asarray(self.generators[g].map, dtype=np.intp)
        out = np.arange(self.ring.order)
        while k:
            if k & 1:
                out = base[out]
            base = base[base]
            k >>= 1
        out.setflags(write=False)
        self._cache[key] = out
        return out

    def omega(self, s) -> np.ndarray:
        """The endomorphism attached to s, as a lookup array."""
        hit = self._cache.get(("s", s))
        if hit is not None:
            return hit
        if self.monoid.rank == 1:
            out = self._power(0, s)
        else:
            out = np.arange(self.ring.order)
            for g, k in enumerate(s):
                out = self._power(g, k)[out]
            out.setflags(write=False)
        self._cache[("s", s)] = out
        return out

    def apply(self, s, r: int) -> int:
        return int(self.omega(s)[r])

    def images(self, include_inverses=True):
        """Generator images (and their inverses when S is a group)."""
        out = [np.asarray(g.map, dtype=np.intp) for g in self.generators]
        if include_inverses and self.monoid.is_group:
            out += [np.asarray(g.inverse().map, dtype=np.intp) for g in self.generators]
        return out

    @property
    def is_trivial(self):
        return all(g.is_identity for g in self.generators)

    def describe(self):
        return ", ".join("[" + " ".join(self.ring.names[v] for v in g.map) + "]"
                         for g in self.generators)


def build_action(R: FiniteRing, S: OrderedMonoid, images) -> MonoidAction:
    images = [im if isinstance(im, Endomorphism) else Endomorphism(R, tuple(im)) for im in images]
    if len(images) != len(S.generators):
        raise ActionError(f"{S.name} needs {len(S.generators)} generator image(s), got {len(images)}")
    for k, im in enumerate(images):
        if len(im.map) != R.order or not is_endomorphism(R, im.map):
            raise ActionError(f"generator image {k} is not a unital endomorphism of {R.name}")
        if S.is_group and not im.is_bijective:
            x = next(x for x in range(R.order) if im.map.count(im.map[x]) > 1)
            raise ActionError(f"action of Z needs an automorphism; image {k} collapses "
                              f"{R.names[x]}", )
    for i in range(len(images)):
        for j in range(i + 1, len(images)):
            a, b = images[i].compose(images[j]), images[j].compose(images[i])
            if a != b:
                x = next(x for x in range(R.order) if a.map[x] != b.map[x])
                raise ActionError(f"generator images {i} and {j} do not commute at "
                                  f"{R.names[x]}")
    return MonoidAction(R, S, tuple(images))


def trivial_action(R: FiniteRing, S: OrderedMonoid) -> MonoidAction:
    ident = Endomorphism(R, tuple(range(R.order)))
    return MonoidAction(R, S, (ident,) * len(S.generators))


def is_compatible(action: MonoidAction):
    """(ab = 0) iff (a * sigma(b) = 0) for each generator image sigma.

    Compositions of compatible endomorphisms are compatible, so checking the
    generators (and inverses for Z) covers every omega_s.
    """
    R = action.ring
    zero_ab = R.mul == R.zero
    for k, sigma in enumerate(action.images()):
        twisted = R.mul[:, sigma] == R.zero           # [a, b] -> a*sigma(b) == 0
        bad = np.argwhere(zero_ab != twisted)
        if len(bad):
            a, b = int(bad[0][0]), int(bad[0][1])
            return Check(False, (a, b, k),
                         f"a={R.names[a]}, b={R.names[b]}: ab={R.names[R.mul[a, b]]}, "
                         f"a*sigma(b)={R.names[R.mul[a, sigma[b]]]}")
    return Check(True)


@dataclass(frozen=True, eq=False)
class SkewSeries:
    action: MonoidAction
    terms: tuple          # ((s, coefficient), ...) sorted by s, coefficients nonzero

    @classmethod
    def from_dict(cls, action, coeffs: dict):
        zero = action.ring.zero
        for s in coeffs:
            if not action.monoid.contains(s):
                raise InvalidSpecError(f"{s!r} is not an element of {action.monoid.name}")
        return cls(action, tuple(sorted((s, int(c)) for s, c in coeffs.items() if c != zero)))

    @classmethod
    def zero(cls, action):
        return cls(action, ())

    def __getitem__(self, s):
        return dict(self.terms).get(s, self.action.ring.zero)

    def __eq__(self, other):
        return (isinstance(other, SkewSeries) and other.action is self.action
                and other.terms == self.terms)

    def __hash__(self):
        return hash(self.terms)

    def __bool__(self):
        return bool(self.terms)

    @property
    def support(self):
        return tuple(s for s, _ in self.terms)

    def __add__(self, other):
        return series_add(self, other)

    def __mul__(self, other):
        return series_mul(self, other)

    def __neg__(self):
        neg = self.action.ring.neg
        return SkewSeries(self.action, tuple((s, int(neg[c])) for s, c in self.terms))

    def __sub__(self, other):
        return series_add(self, -other)

    def __repr__(self):
        return f"SkewSeries({format_series(self)!r})"


def _same(f, g):
    if f.action is not g.action:
        raise ActionError("series belong to different actions")


def series_add(f: SkewSeries, g: SkewSeries) -> SkewSeries:
    _same(f, g)
    R = f.action.ring
    out = dict(f.terms)
    for s, c in g.terms:
        out[s] = R.a(out.get(s, R.zero), c)
    return SkewSeries.from_dict(f.action, out)


def factorizations(f: SkewSeries, g: SkewSeries, s) -> list:
    """X_s(f, g): pairs (u, v) in Supp f x Supp g with u*v = s.

    Walks Supp f and solves u*v = s for v.
    """
    M = f.action.monoid
    gsupp = dict(g.terms)
    out = []
    for u, _ in f.terms:
        v = M.solve_right(u, s)
        if v is not None and v in gsupp:
            out.append((u, v))
    return out


def series_mul(f: SkewSeries, g: SkewSeries) -> SkewSeries:
    _same(f, g)
    act = f.action
    R, M = act.ring, act.monoid
    fd, gd = dict(f.terms), dict(g.terms)
    targets = {M.op(u, v) for u in fd for v in gd}
    out = {}
    for s in targets:
        acc = R.zero
        for u, v in factorizations(f, g, s):
            acc = R.a(acc, R.m(fd[u], act.apply(u, gd[v])))
        out[s] = acc
    return SkewSeries.from_dict(act, out)


def truncated_mul(f: SkewSeries, g: SkewSeries, degree: int) -> SkewSeries:
    """Product with every term of exponent above ``degree`` discarded.

    Diagnostic only: a vanishing truncation does not certify fg = 0, so no
    verdict is ever based on it.
    """
    if f.action.monoid.rank != 1 or f.action.monoid.is_group:
        raise InvalidSpecError("truncated products are defined for S = N only")
    full = series_mul(f, g)
    return SkewSeries(f.action, tuple((s, c) for s, c in full.terms if s <= degree))


def embed_const(action: MonoidAction, r: int) -> SkewSeries:
    """c_r: the constant series r at the monoid identity."""
    return SkewSeries.from_dict(action, {action.monoid.identity: r})


def embed_monoid(action: MonoidAction, s) -> SkewSeries:
    """e_s: coefficient 1 at s."""
    return SkewSeries.from_dict(action, {s: action.ring.one})


def coefficient_set(*fs: SkewSeries) -> frozenset:
    return frozenset(c for f in fs for _, c in f.terms)


def scale_right_const(f: SkewSeries, c: int) -> SkewSeries:
    """f * c_c, whose coefficient at s is f(s) * omega_s(c)."""
    act = f.action
    R = act.ring
    return SkewSeries.from_dict(act, {s: R.m(a, act.apply(s, c)) for s, a in f.terms})


def scale_left_const(c: int, g: SkewSeries) -> SkewSeries:
    """c_c * g; omega of the identity is trivial, so coefficients are c * g(s)."""
    R = g.action.ring
    return SkewSeries.from_dict(g.action, {s: R.m(c, b) for s, b in g.terms})


# -- text form ----------------------------------------------------------------

def _fmt_exp(M, s):
    if M.rank == 1:
        return str(s)
    return "(" + ",".join(map(str, s)) + ")"


def format_series(f: SkewSeries) -> str:
    """``coef*x^e + ...`` in increasing exponent order; ``0`` for the zero series."""
    R, M = f.action.ring, f.action.monoid
    if not f.terms:
        return "0"
    return " + ".join(f"{R.names[c]}*x^{_fmt_exp(M, s)}" for s, c in f.terms)


def parse_series(action: MonoidAction, text: str) -> SkewSeries:
    R, M = action.ring, action.monoid
    text = text.strip()
    if text in ("", "0"):
        return SkewSeries.zero(action)
    out: dict = {}
    for term in text.split(" + "):
        term = term.strip()
        if "*x" in term:
            coef, _, exp = term.rpartition("*x")
            if not exp:
                s = M.generators[0] if M.rank == 1 else None
                if s is None:
                    raise InvalidSpecError(f"exponent required in {term!r}")
            elif exp.startswith("^"):
                body = exp[1:].strip()
                try:
                    if body.startswith("("):
                        s = tuple(int(v) for v in body.strip("()").split(","))
                    else:
                        s = int(body)
                except ValueError:
                    raise InvalidSpecError(f"bad exponent in {term!r}") from None
            else:
                raise InvalidSpecError(f"bad term {term!r}")
        elif term.endswith("x") and term[:-1] in ("", "1"):
            coef, s = "1", M.generators[0]
        else:
            coef, s = term, M.identity
        if not M.contains(s):
            raise InvalidSpecError(f"exponent {s!r} not in {M.name}")
        c = R.element(coef or "1")
        out[s] = R.a(out.get(s, R.zero), c)
    return SkewSeries.from_dict(action, out)
