import numpy as np
import pytest

import oracle as O
from skewmccoy import (InvalidSpecError, RingAxiomError, build_ring, from_tables, gf,
                       product, read_table_file, s_matrix, upper_triangular,
                       validate_ring_axioms, zmod)
from skewmccoy.structure import units

ORACLE_RINGS = {
    "zmod 4": lambda: O.zmod(4),
    "zmod 6": lambda: O.zmod(6),
    "zmod 8": lambda: O.zmod(8),
    "gf 4 poly=x^2+x+1": O.gf4,
    "product zmod2 zmod2": lambda: O.product(O.zmod(2), O.zmod(2)),
    "smatrix 2 zmod2": lambda: O.s_matrix(2, O.zmod(2)),
    "smatrix 3 zmod2": lambda: O.s_matrix(3, O.zmod(2)),
    "uppertri 2 zmod2": lambda: O.upper_triangular(2, O.zmod(2)),
    "smatrix 2 zmod4": lambda: O.s_matrix(2, O.zmod(4)),
}


@pytest.mark.parametrize("spec", sorted(ORACLE_RINGS))
def test_tables_match_oracle(spec):
    R, o = build_ring(spec), ORACLE_RINGS[spec]()
    assert R.order == o.n
    assert R.add.tolist() == o.add
    assert R.mul.tolist() == o.mul
    assert (R.zero, R.one) == (o.zero, o.one)


def test_zmod4_arithmetic():
    R = zmod(4)
    assert R.order == 4
    assert R.a(2, 2) == 0 and R.m(2, 2) == 0


def test_smatrix_2_over_z2_has_square_zero_generator():
    R = s_matrix(2, zmod(2))
    assert R.order == 4
    E = R.element("[0,1;0,0]")
    assert R.m(E, E) == R.zero
    # every element is aI + bE
    assert sorted(R.names) == sorted(["[0,0;0,0]", "[1,0;0,1]", "[0,1;0,0]", "[1,1;0,1]"])


def test_gf4_every_nonzero_is_unit():
    R = gf(4, "x^2+x+1")
    assert sorted(units(R)) == [1, 2, 3]
    assert R.names == ("0", "1", "a", "a+1")
    a = R.element("a")
    assert R.m(a, a) == R.element("a+1")


def test_gf_rejects_reducible_modulus():
    with pytest.raises(InvalidSpecError, match="reducible"):
        gf(4, "x^2+1")
    with pytest.raises(InvalidSpecError):
        gf(6)


def test_sizes():
    assert s_matrix(3, zmod(2)).order == 16
    assert s_matrix(2, zmod(4)).order == 16
    assert upper_triangular(2, zmod(2)).order == 8
    assert product(zmod(2), zmod(3)).order == 6


def test_little_endian_ids():
    P = product(zmod(2), zmod(2))
    assert P.names == ("(0,0)", "(1,0)", "(0,1)", "(1,1)")
    T = upper_triangular(2, zmod(2))
    assert T.names[1] == "[1,0;0,0]" and T.names[2] == "[0,1;0,0]" and T.names[4] == "[0,0;0,1]"


@pytest.mark.parametrize("spec", ["zmod 6", "uppertri 2 zmod2", "smatrix 3 zmod2",
                                  "product (gf 4) zmod3"])
def test_axioms_pass(spec):
    rep = validate_ring_axioms(build_ring(spec))
    assert rep.ok and rep.first_failure is None


def test_uppertri_mul_commutativity_is_informational():
    rep = validate_ring_axioms(upper_triangular(2, zmod(2)))
    assert rep.ok
    assert rep["mul_commutative"].passed is False
    assert rep["mul_commutative"].informational


def test_broken_associativity_is_reported_with_triple():
    R = zmod(3)
    mul = R.mul.astype(int).tolist()
    mul[2][2] = 2          # 2*2 should be 1
    with pytest.raises(RingAxiomError) as exc:
        from_tables(R.add.tolist(), mul, 1)
    assert exc.value.law in ("mul_associative", "left_distributive", "right_distributive")
    a, b, c = exc.value.witness
    m, ad = np.array(mul), R.add
    if exc.value.law == "mul_associative":
        assert m[m[a, b], c] != m[a, m[b, c]]


def test_from_tables_reports_first_failed_law():
    add = [[0, 1], [1, 0]]
    with pytest.raises(RingAxiomError) as exc:
        from_tables(add, [[0, 0], [0, 0]], 1)       # no multiplicative identity
    assert exc.value.law == "mul_identity"


def test_table_file_roundtrip(tmp_path):
    R = zmod(3)
    lines = ["3 one=1"] + [" ".join(map(str, r)) for r in R.add.tolist()] \
        + [" ".join(map(str, r)) for r in R.mul.tolist()]
    p = tmp_path / "z3.tbl"
    p.write_text("\n".join(lines) + "\n")
    T = build_ring(f"table file={p}")
    assert T.add.tolist() == R.add.tolist() and T.mul.tolist() == R.mul.tolist()
    p.write_text("3 one=1\n0 1 2\n")
    with pytest.raises(InvalidSpecError, match="expected 18"):
        read_table_file(p)


@pytest.mark.parametrize("spec,name", [
    ("zmod4", "zmod 4"), ("gf 4 poly=x^2+x+1", "gf 4 poly=x^2+x+1"),
    ("product zmod2 zmod2", "product zmod2 zmod2"),
    ("smatrix 2 (product zmod2 zmod2)", "smatrix 2 (product zmod2 zmod2)"),
])
def test_spec_names_roundtrip(spec, name):
    R = build_ring(spec)
    assert R.name == name
    assert build_ring(R.name).mul.tolist() == R.mul.tolist()


@pytest.mark.parametrize("bad", ["zmod 1", "ring 4", "zmod", "product zmod2", "zmod 4 extra",
                                 "(zmod 4", "gf 4 poly=x^3+x+1"])
def test_bad_specs(bad):
    with pytest.raises(InvalidSpecError):
        build_ring(bad)
