"""Plain-dict views of structural results for the JSON report."""

from __future__ import annotations


def _check(c, R=None):
    out = {"holds": bool(c.holds)}
    if not c.holds:
        w = c.witness
        if R is not None and isinstance(w, tuple) and all(isinstance(x, int) for x in w):
            w = [R.names[x] for x in w]
        elif R is not None and isinstance(w, int):
            w = R.names[w]
        out["witness"] = w if w is None or isinstance(w, (str, list)) else str(w)
        out["detail"] = c.detail
    return out


def profile_dict(p, R=None) -> dict:
    R = R or p.radical.ring
    return {
        "ring": p.ring,
        "order": R.order,
        "commutative": R.is_commutative(),
        "abelian": _check(p.abelian, R),
        "regular": _check(p.regular, R),
        "semiregular": _check(p.semiregular, R),
        "quasi_duo": _check(p.quasi_duo, R),
        "two_primal": _check(p.two_primal, R),
        "radical": p.radical.names(),
        "radical_nilpotency_index": p.radical_nilpotency_index,
        "idempotents": {R.names[e]: bool(c) for e, c in sorted(p.idempotents.items())},
        "maximal_left_ideals": [I.names() for I in p.maximal_left_ideals],
        "maximal_right_ideals": [I.names() for I in p.maximal_right_ideals],
        "nilpotent_elements": [R.names[x] for x in sorted(p.nil.nil)],
        "prime_radical": p.nil.prime_radical.names(),
    }
