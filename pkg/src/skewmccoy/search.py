"""Vectorised enumeration of window series and their pairwise products.

A *window* is a finite, sorted tuple D of monoid elements.  Every series with
support inside D is a coefficient vector indexed by D; the enumeration order
is lexicographic in those vectors (coefficient at the smallest exponent most
significant, compared by element id).
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from .errors import CapacityError, InvalidSpecError
from .omonoid import OrderedMonoid
from .series import MonoidAction, SkewSeries

BUDGET = int(os.environ.get("SKEWMCCOY_BUDGET", 10**7))
_BLOCK_CELLS = 1 << 22


def default_window(M: OrderedMonoid, degree: int) -> tuple:
    if degree < 0:
        raise InvalidSpecError("window degree must be >= 0")
    return tuple(M.box(degree))


def pair_count(order: int, size: int) -> int:
    return (order ** size - 1) ** 2


def fit_window(M: OrderedMonoid, degree: int, order: int, budget: int = BUDGET):
    """Largest window of the requested shape whose exhaustive pair count fits.

    N and N^k shrink the degree; Z drops exponents alternately from the top
    and the bottom.  Returns ``(window, shrunk)``.
    """
    D = list(default_window(M, degree))
    shrunk = False
    top = True
    while len(D) > 1 and pair_count(order, len(D)) > budget:
        shrunk = True
        if M.kind == "Z":
            if top and D[-1] != 0:
                D.pop()
            elif D[0] != 0:
                D.pop(0)
            else:
                D.pop()
            top = not top
        else:
            degree -= 1
            D = list(default_window(M, degree))
    if pair_count(order, len(D)) > budget:
        raise CapacityError(f"no nonempty window fits budget {budget}")
    return tuple(D), shrunk


class WindowSpace:
    """All series of an action with support in a window, plus product tables."""

    def __init__(self, action: MonoidAction, window, budget: int | None = BUDGET,
                 enumerate_all: bool = True):
        M = action.monoid
        self.action = action
        self.ring = R = action.ring
        self.window = tuple(sorted(set(window)))
        for s in self.window:
            if not M.contains(s):
                raise InvalidSpecError(f"window element {s!r} not in {M.name}")
        m = len(self.window)
        if m == 0:
            raise InvalidSpecError("window must be nonempty")
        self.size = R.order ** m
        if enumerate_all and budget is not None and pair_count(R.order, m) > budget:
            raise CapacityError(
                f"exhaustive search over {R.name} with |D|={m} needs "
                f"{pair_count(R.order, m)} pairs > budget {budget}; "
                "shrink the window or use random mode")
        sums = sorted({M.op(u, v) for u in self.window for v in self.window})
        self.products = tuple(sums)
        where = {s: k for k, s in enumerate(sums)}
        self.pos = [[where[M.op(u, v)] for v in self.window] for u in self.window]
        self.omegas = [action.omega(u) for u in self.window]
        self.mul = R.mul.astype(np.intp)
        self.add = R.add.astype(np.intp)
        self._zero_matrix = None
        if enumerate_all:
            self.coeffs = np.array(list(itertools.product(range(R.order), repeat=m)),
                                   dtype=np.intp).reshape(-1, m)
            self.nonzero = (self.coeffs != R.zero).any(axis=1)

    def series(self, row) -> SkewSeries:
        return self.from_vector(self.coeffs[row])

    def from_vector(self, vec) -> SkewSeries:
        return SkewSeries.from_dict(self.action, {s: int(c) for s, c in zip(self.window, vec)})

    # -- kernels ----------------------------------------------------------

    def outer_products(self, F, G) -> np.ndarray:
        """Coefficients of f*g for every f in F and g in G: shape (|F|, |G|, K)."""
        R = self.ring
        B, N = len(F), len(G)
        res = np.full((B, N, len(self.products)), R.zero, dtype=np.intp)
        for i in range(len(self.window)):
            fi = F[:, i][:, None]
            twisted = self.omegas[i][G]                      # omega_{D_i}(g(D_j))
            for j in range(len(self.window)):
                p = self.pos[i][j]
                term = self.mul[fi, twisted[:, j][None, :]]
                res[:, :, p] = self.add[res[:, :, p], term]
        return res

    def paired_products(self, F, G) -> np.ndarray:
        """Coefficients of F[k]*G[k] for each k: shape (|F|, K)."""
        R = self.ring
        res = np.full((len(F), len(self.products)), R.zero, dtype=np.intp)
        for i in range(len(self.window)):
            twisted = self.omegas[i][G]
            for j in range(len(self.window)):
                p = self.pos[i][j]
                res[:, p] = self.add[res[:, p], self.mul[F[:, i], twisted[:, j]]]
        return res

    def zero_matrix(self, workers: int = 1) -> np.ndarray:
        """Boolean Z[f, g] = (f*g == 0) over the whole enumeration.

        Rows are split into disjoint blocks; the result does not depend on
        ``workers``.
        """
        if self._zero_matrix is not None:
            return self._zero_matrix
        N = self.size
        G = self.coeffs
        zero = self.ring.zero
        block = max(1, _BLOCK_CELLS // max(1, N * len(self.products)))
        starts = list(range(0, N, block))
        out = np.empty((N, N), dtype=bool)

        def run(start):
            stop = min(N, start + block)
            res = self.outer_products(self.coeffs[start:stop], G)
            out[start:stop] = (res == zero).all(axis=2)

        if workers > 1 and len(starts) > 1:
            with ThreadPoolExecutor(max_workers=workers) as pool:
                list(pool.map(run, starts))
        else:
            for s in starts:
                run(s)
        out.setflags(write=False)
        self._zero_matrix = out
        return out

    # -- witness equations ----------------------------------------------------

    def right_witness_table(self, F) -> np.ndarray:
        """ok[f, c] = (f(s) * omega_s(c) == 0 for every s in D)."""
        R = self.ring
        cs = np.arange(R.order)
        ok = np.ones((len(F), R.order), dtype=bool)
        for i in range(len(self.window)):
            ok &= self.mul[F[:, i][:, None], self.omegas[i][cs][None, :]] == R.zero
        return ok

    def left_witness_table(self, G) -> np.ndarray:
        """ok[g, c] = (c * g(s) == 0 for every s in D)."""
        R = self.ring
        cs = np.arange(R.order)
        ok = np.ones((len(G), R.order), dtype=bool)
        for j in range(len(self.window)):
            ok &= self.mul[cs[None, :], G[:, j][:, None]] == R.zero
        return ok

    def first_witness(self, ok) -> np.ndarray:
        """Smallest nonzero c per row with ok[row, c]; -1 when none."""
        R = self.ring
        ok = ok.copy()
        ok[:, R.zero] = False
        has = ok.any(axis=1)
        return np.where(has, ok.argmax(axis=1), -1)
