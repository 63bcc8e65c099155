"""Finite unital rings stored as Cayley tables.

Element ids are ``0..order-1``.  Every constructor fixes a canonical id
layout so witnesses printed in reports are stable between runs: an element
with natural coordinates ``(c0, c1, ..., c_{k-1})`` over a base of size ``b``
gets id ``c0 + c1*b + ... + c_{k-1}*b**(k-1)`` (first coordinate varies
fastest).  For ``gf`` the coordinates are the polynomial coefficients from
the constant term up, for matrix rings they are the free entries in
row-major order (the shared diagonal first for ``smatrix``).
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import InvalidSpecError, RingAxiomError


def _table(rows, n):
    dtype = np.uint8 if n <= 256 else np.int32
    arr = np.asarray(rows, dtype=np.int64)
    if arr.shape != (n, n) or arr.min(initial=0) < 0 or arr.max(initial=0) >= n:
        raise InvalidSpecError(f"table must be {n}x{n} with entries in 0..{n - 1}")
    arr = arr.astype(dtype)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class FiniteRing:
    """A finite unital ring.

    ``add`` and ``mul`` are read-only ``order x order`` numpy tables.  Use
    :func:`build_ring` or the named constructors rather than building one
    directly; those validate the axioms.
    """

    order: int
    add: np.ndarray
    mul: np.ndarray
    zero: int
    one: int
    name: str
    provenance: str = ""
    names: tuple = ()
    neg: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        if not self.names:
            object.__setattr__(self, "names", tuple(str(i) for i in range(self.order)))
        neg = np.empty(self.order, dtype=self.add.dtype)
        for a in range(self.order):
            hits = np.flatnonzero(self.add[a] == self.zero)
            neg[a] = hits[0] if len(hits) else self.zero
        neg.setflags(write=False)
        object.__setattr__(self, "neg", neg)

    def __repr__(self):
        return f"FiniteRing({self.name!r}, order={self.order})"

    @property
    def elements(self):
        return range(self.order)

    @property
    def nonzero(self):
        return [a for a in range(self.order) if a != self.zero]

    def a(self, x, y):
        return int(self.add[x, y])

    def m(self, x, y):
        return int(self.mul[x, y])

    def sub(self, x, y):
        return int(self.add[x, self.neg[y]])

    def power(self, x, k):
        r = self.one
        for _ in range(k):
            r = int(self.mul[r, x])
        return r

    def element(self, name):
        """Element id for a canonical name (or a decimal id)."""
        name = name.strip()
        try:
            return self.names.index(name)
        except ValueError:
            pass
        if name.isdigit() and int(name) < self.order:
            return int(name)
        raise InvalidSpecError(f"{name!r} is not an element of {self.name}")

    def is_commutative(self):
        return bool(np.array_equal(self.mul, self.mul.T))


@dataclass(frozen=True)
class AxiomCheck:
    law: str
    passed: bool
    witness: tuple | None = None
    informational: bool = False


@dataclass(frozen=True)
class AxiomReport:
    ring: str
    checks: tuple

    @property
    def ok(self):
        return all(c.passed for c in self.checks if not c.informational)

    @property
    def first_failure(self):
        for c in self.checks:
            if not c.passed and not c.informational:
                return c
        return None

    def __getitem__(self, law):
        for c in self.checks:
            if c.law == law:
                return c
        raise KeyError(law)


def _first(mask):
    idx = np.argwhere(mask)
    return tuple(int(i) for i in idx[0]) if len(idx) else None


def validate_ring_axioms(R: FiniteRing) -> AxiomReport:
    """Exhaustively check every ring axiom; never raises."""
    n = R.order
    A, M = R.add.astype(np.intp), R.mul.astype(np.intp)
    i = np.arange(n)
    a3, b3, c3 = i[:, None, None], i[None, :, None], i[None, None, :]
    checks = []

    def record(law, bad, informational=False):
        w = _first(bad)
        checks.append(AxiomCheck(law, w is None, w, informational))

    record("add_associative", A[A[a3, b3], c3] != A[a3, A[b3, c3]])
    record("add_commutative", A != A.T)
    record("add_identity", (A[R.zero] != i) | (A[:, R.zero] != i))
    has_inv = (A == R.zero).any(axis=1)
    record("add_inverses", ~has_inv)
    record("mul_associative", M[M[a3, b3], c3] != M[a3, M[b3, c3]])
    record("mul_identity", (M[R.one] != i) | (M[:, R.one] != i))
    record("left_distributive", M[a3, A[b3, c3]] != A[M[a3, b3], M[a3, c3]])
    record("right_distributive", M[A[a3, b3], c3] != A[M[a3, c3], M[b3, c3]])
    record("one_ne_zero", np.array([R.one == R.zero]))
    record("mul_commutative", M != M.T, informational=True)
    return AxiomReport(R.name, tuple(checks))


def _checked(R: FiniteRing) -> FiniteRing:
    report = validate_ring_axioms(R)
    bad = report.first_failure
    if bad is not None:
        raise RingAxiomError(bad.law, bad.witness,
                             f"{R.name}: axiom {bad.law!r} fails at {bad.witness}")
    return R


# -- constructors -------------------------------------------------------------

def zmod(n: int) -> FiniteRing:
    if n < 2:
        raise InvalidSpecError(f"zmod needs n >= 2, got {n}")
    i = np.arange(n)
    R = FiniteRing(n, _table((i[:, None] + i[None, :]) % n, n),
                   _table((i[:, None] * i[None, :]) % n, n), 0, 1,
                   f"zmod {n}", f"integers modulo {n}")
    return _checked(R)


def _prime_power(q):
    for p in range(2, q + 1):
        if q % p == 0:
            k, r = 0, q
            while r % p == 0:
                r //= p
                k += 1
            if r != 1:
                return None
            return p, k
    return None


_TERM = re.compile(r"^(\d*)\*?(?:(x)(?:\^(\d+))?)?$")


def parse_polynomial(text: str, p: int) -> list[int]:
    """Coefficient list (constant term first) of a polynomial in ``x`` mod p."""
    coeffs: dict[int, int] = {}
    for term in text.replace(" ", "").replace("-", "+-").split("+"):
        if not term:
            continue
        sign = 1
        if term.startswith("-"):
            sign, term = -1, term[1:]
        m = _TERM.match(term)
        if not m or (not m.group(1) and not m.group(2)):
            raise InvalidSpecError(f"cannot parse polynomial term {term!r} in {text!r}")
        c = int(m.group(1)) if m.group(1) else 1
        e = (int(m.group(3)) if m.group(3) else 1) if m.group(2) else 0
        coeffs[e] = (coeffs.get(e, 0) + sign * c) % p
    deg = max((e for e, c in coeffs.items() if c), default=-1)
    return [coeffs.get(e, 0) for e in range(deg + 1)]


def _poly_mod(a, m, p):
    a = list(a)
    inv = pow(m[-1], -1, p)
    while len(a) >= len(m):
        c = a[-1] * inv % p
        if c:
            shift = len(a) - len(m)
            for i, mc in enumerate(m):
                a[shift + i] = (a[shift + i] - c * mc) % p
        a.pop()
    return a


def is_irreducible(poly: list[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    k = len(poly) - 1
    if k < 1 or poly[-1] % p == 0:
        return False
    for d in range(1, k // 2 + 1):
        for low in itertools.product(range(p), repeat=d):
            if not any(_poly_mod(poly, list(low) + [1], p)):
                return False
    return True


def _gf_name(coords, p):
    parts = []
    for e in range(len(coords) - 1, -1, -1):
        c = coords[e]
        if not c:
            continue
        mono = "" if e == 0 else ("a" if e == 1 else f"a^{e}")
        if not mono:
            parts.append(str(c))
        else:
            parts.append(mono if c == 1 else f"{c}{mono}")
    return "+".join(parts) or "0"


def _format_poly(coeffs):
    parts = []
    for e in range(len(coeffs) - 1, -1, -1):
        c = coeffs[e]
        if not c:
            continue
        mono = "" if e == 0 else ("x" if e == 1 else f"x^{e}")
        parts.append(str(c) if not mono else (mono if c == 1 else f"{c}{mono}"))
    return "+".join(parts)


def default_irreducible(p: int, k: int) -> list[int]:
    """First monic irreducible of degree k in coefficient-lexicographic order."""
    for low in itertools.product(range(p), repeat=k):
        poly = list(low) + [1]
        if k == 1 or is_irreducible(poly, p):
            return poly
    raise InvalidSpecError(f"no irreducible polynomial of degree {k} over F_{p}")


def gf(q: int, poly: str | None = None) -> FiniteRing:
    """The field with q = p^k elements as F_p[x]/(poly)."""
    pk = _prime_power(q)
    if pk is None:
        raise InvalidSpecError(f"gf order {q} is not a prime power")
    p, k = pk
    if poly is None:
        coeffs = default_irreducible(p, k)
    else:
        coeffs = parse_polynomial(poly, p)
        if len(coeffs) - 1 != k:
            raise InvalidSpecError(f"modulus {poly!r} has degree {len(coeffs) - 1}, need {k}")
        if coeffs[-1] != 1:
            raise InvalidSpecError(f"modulus {poly!r} must be monic")
        if not is_irreducible(coeffs, p):
            raise InvalidSpecError(f"modulus {poly!r} is reducible over F_{p}")
    ordered = [tuple(reversed(c)) for c in itertools.product(range(p), repeat=k)]
    ids = {c: i for i, c in enumerate(ordered)}

    def mulpoly(a, b):
        prod = [0] * (2 * k - 1)
        for i, ai in enumerate(a):
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
        r = _poly_mod(prod, coeffs, p) if k > 1 else [prod[0] % p]
        return tuple(r + [0] * (k - len(r)))

    add = [[ids[tuple((x + y) % p for x, y in zip(a, b))] for b in ordered] for a in ordered]
    mul = [[ids[mulpoly(a, b)] for b in ordered] for a in ordered]
    name = f"gf {q}" if poly is None else f"gf {q} poly={_format_poly(coeffs)}"
    R = FiniteRing(q, _table(add, q), _table(mul, q), 0, 1, name,
                   f"F_{p}[a]/({_format_poly(coeffs).replace('x', 'a')})",
                   tuple(_gf_name(c, p) for c in ordered))
    return _checked(R)


def product(R1: FiniteRing, R2: FiniteRing) -> FiniteRing:
    """Direct product; (x, y) has id x + |R1|*y."""
    n1, n2 = R1.order, R2.order
    pairs = [(x, y) for y in range(n2) for x in range(n1)]
    idx = {pr: i for i, pr in enumerate(pairs)}
    add = [[idx[(R1.a(a[0], b[0]), R2.a(a[1], b[1]))] for b in pairs] for a in pairs]
    mul = [[idx[(R1.m(a[0], b[0]), R2.m(a[1], b[1]))] for b in pairs] for a in pairs]
    n = n1 * n2
    R = FiniteRing(n, _table(add, n), _table(mul, n), idx[(R1.zero, R2.zero)],
                   idx[(R1.one, R2.one)],
                   f"product {_compact(R1)} {_compact(R2)}",
                   f"{R1.name} x {R2.name}",
                   tuple(f"({R1.names[x]},{R2.names[y]})" for x, y in pairs))
    return _checked(R)


def _matrix_ring(base, n, positions, shared_diagonal, name, provenance):
    b = base.order
    k = len(positions)
    coords = [tuple(reversed(c)) for c in itertools.product(range(b), repeat=k)]
    idx = {c: i for i, c in enumerate(coords)}

    def full(c):
        m = [[base.zero] * n for _ in range(n)]
        for (r, col), v in zip(positions, c):
            if shared_diagonal and r == col:
                for d in range(n):
                    m[d][d] = v
            else:
                m[r][col] = v
        return m

    def back(m):
        c = tuple(m[r][col] for r, col in positions)
        if c not in idx or full(c) != m:
            raise RingAxiomError("closure", c, f"{name}: product leaves the matrix set")
        return idx[c]

    mats = [full(c) for c in coords]

    def madd(x, y):
        return [[base.a(x[i][j], y[i][j]) for j in range(n)] for i in range(n)]

    def mmul(x, y):
        out = []
        for i in range(n):
            row = []
            for j in range(n):
                acc = base.zero
                for t in range(n):
                    acc = base.a(acc, base.m(x[i][t], y[t][j]))
                row.append(acc)
            out.append(row)
        return out

    size = len(coords)
    add = [[back(madd(x, y)) for y in mats] for x in mats]
    mul = [[back(mmul(x, y)) for y in mats] for x in mats]
    zero = idx[tuple(base.zero for _ in positions)]
    one_c = tuple(base.one if r == col else base.zero for r, col in positions)
    names = tuple("[" + ";".join(",".join(base.names[v] for v in row) for row in m) + "]"
                  for m in mats)
    R = FiniteRing(size, _table(add, size), _table(mul, size), zero, idx[one_c],
                   name, provenance, names)
    return _checked(R)


def s_matrix(n: int, R: FiniteRing) -> FiniteRing:
    """Upper triangular n x n matrices over R with one shared diagonal entry."""
    if n < 1:
        raise InvalidSpecError("smatrix needs n >= 1")
    positions = [(0, 0)] + [(i, j) for i in range(n) for j in range(i + 1, n)]
    return _matrix_ring(R, n, positions, True, f"smatrix {n} {_compact(R)}",
                        f"constant-diagonal upper triangular {n}x{n} over {R.name}")


def upper_triangular(n: int, R: FiniteRing) -> FiniteRing:
    if n < 1:
        raise InvalidSpecError("uppertri needs n >= 1")
    positions = [(i, j) for i in range(n) for j in range(i, n)]
    return _matrix_ring(R, n, positions, False, f"uppertri {n} {_compact(R)}",
                        f"upper triangular {n}x{n} over {R.name}")


def from_tables(add, mul, one: int, name="table", provenance="explicit tables") -> FiniteRing:
    """Ring from explicit tables; the additive identity is located automatically."""
    n = len(add)
    A = _table(add, n)
    M = _table(mul, n)
    if not 0 <= one < n:
        raise InvalidSpecError(f"one={one} out of range")
    zeros = [z for z in range(n) if np.array_equal(A[z], np.arange(n))]
    if not zeros:
        raise RingAxiomError("add_identity", (0,), f"{name}: no additive identity")
    return _checked(FiniteRing(n, A, M, zeros[0], one, name, provenance))


def read_table_file(path) -> FiniteRing:
    """Header ``n one=<id>`` then the n x n addition and multiplication tables."""
    text = Path(path).read_text()
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise InvalidSpecError(f"{path}: empty table file")
    m = re.fullmatch(r"(\d+)\s+one=(\d+)", lines[0])
    if not m:
        raise InvalidSpecError(f"{path}: header must be 'n one=<id>', got {lines[0]!r}")
    n, one = int(m.group(1)), int(m.group(2))
    nums = " ".join(lines[1:]).split()
    if len(nums) != 2 * n * n:
        raise InvalidSpecError(f"{path}: expected {2 * n * n} table entries, got {len(nums)}")
    vals = [int(v) for v in nums]
    add = [vals[i * n:(i + 1) * n] for i in range(n)]
    mul = [vals[n * n + i * n:n * n + (i + 1) * n] for i in range(n)]
    return from_tables(add, mul, one, name=f"table file={path}",
                       provenance=f"tables read from {path}")


# -- spec strings -------------------------------------------------------------

def _compact(R: FiniteRing) -> str:
    if re.fullmatch(r"zmod \d+", R.name) or re.fullmatch(r"gf \d+", R.name):
        return R.name.replace(" ", "")
    return f"({R.name})"


_TOKEN = re.compile(r"\(|\)|[^\s()]+")


def _parse(tokens, pos):
    if pos >= len(tokens):
        raise InvalidSpecError("unexpected end of ring spec")
    tok = tokens[pos]
    if tok == "(":
        R, pos = _parse(tokens, pos + 1)
        if pos >= len(tokens) or tokens[pos] != ")":
            raise InvalidSpecError("unbalanced parentheses in ring spec")
        return R, pos + 1

    def int_arg(at):
        if at >= len(tokens) or not tokens[at].isdigit():
            raise InvalidSpecError(f"{tok!r} expects an integer argument")
        return int(tokens[at])

    m = re.fullmatch(r"(zmod|gf)(\d+)", tok)
    if m:
        n = int(m.group(2))
        return (zmod(n) if m.group(1) == "zmod" else gf(n)), pos + 1
    if tok == "zmod":
        return zmod(int_arg(pos + 1)), pos + 2
    if tok == "gf":
        q = int_arg(pos + 1)
        pos += 2
        poly = None
        if pos < len(tokens) and tokens[pos].startswith("poly="):
            poly = tokens[pos][5:]
            pos += 1
        return gf(q, poly), pos
    if tok == "product":
        R1, pos = _parse(tokens, pos + 1)
        R2, pos = _parse(tokens, pos)
        return product(R1, R2), pos
    if tok in ("smatrix", "uppertri"):
        n = int_arg(pos + 1)
        base, pos = _parse(tokens, pos + 2)
        return (s_matrix if tok == "smatrix" else upper_triangular)(n, base), pos
    if tok == "table":
        if pos + 1 >= len(tokens) or not tokens[pos + 1].startswith("file="):
            raise InvalidSpecError("table expects file=<path>")
        return read_table_file(tokens[pos + 1][5:]), pos + 2
    raise InvalidSpecError(f"unknown ring kind {tok!r}")


def build_ring(spec: str) -> FiniteRing:
    """Construct a ring from a spec string such as ``"smatrix 2 zmod2"``.

    >>> build_ring("zmod 4").order
    4
    """
    tokens = _TOKEN.findall(spec.strip())
    R, pos = _parse(tokens, 0)
    if pos != len(tokens):
        raise InvalidSpecError(f"trailing tokens in ring spec: {' '.join(tokens[pos:])!r}")
    return R
