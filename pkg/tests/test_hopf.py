from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hopfgal import hopf, zoo
from hopfgal.errors import AxiomError, FormatError, UnsupportedDomainError
from hopfgal.linalg import GF, QQ, ZZ, Matrix

import oracles


import functools


@functools.lru_cache(maxsize=1)
def builtin_zoo():
    return {
        "QC2": zoo.qc2(),
        "F2C2": zoo.fpc2(2),
        "dual(QC2)": hopf.dual(zoo.qc2()),
        "sweedler(Q)": hopf.sweedler(QQ),
        "sweedler(F5)": hopf.sweedler(GF(5)),
        "taft(3,2,F7)": hopf.taft(GF(7), 3, 2),
    }


# verification -----------------------------------------------------------------


def test_group_algebra_verifies():
    assert hopf.verify_hopf(zoo.qc2()).passed


def test_sweedler_verifies_by_axiom_scan():
    report = hopf.verify_hopf(hopf.sweedler(QQ))
    assert [c.name for c in report.checks] == [
        "associativity",
        "unit",
        "coassociativity",
        "counit",
        "bialgebra",
        "antipode",
    ]
    assert report.passed


def test_corrupted_antipode_witnessed_at_x():
    sw = hopf.sweedler(QQ)
    cols = [sw.antipode.col(j) for j in range(4)]
    cols[2] = tuple(-v for v in cols[2])  # flip alpha(x) = -gx to gx
    bad = hopf.HopfAlgebraData(sw.algebra, sw.comult, sw.counit, Matrix.from_cols(QQ, cols, 4))
    report = hopf.verify_hopf(bad)
    assert not report.passed
    failures = report.failures()
    assert [c.name for c in failures] == ["antipode"]
    assert failures[0].witness == (2,)  # basis index of x


def test_hand_checked_sweedler_relations():
    # direct substitution oracle: mu (alpha (x) id) Delta(x) must be 0
    sw = hopf.sweedler(QQ)
    # Delta(x) = x (x) 1 + g (x) x; alpha(x) = -gx, alpha(g) = g
    assert sw.comult_sparse(2) == [(1, 2, Fraction(1)), (2, 0, Fraction(1))]
    assert sw.antipode.col(2) == (0, 0, 0, Fraction(-1))
    left = sw.algebra.mul_vec(sw.antipode.col(2), (1, 0, 0, 0))
    right = sw.algebra.mul_vec(sw.antipode.col(1), (0, 0, 1, 0))
    total = tuple(a + b for a, b in zip(left, right))
    assert total == (0, 0, 0, 0)


# builtins ----------------------------------------------------------------------


def test_group_algebra_rejects_non_group():
    with pytest.raises(AxiomError):
        hopf.group_algebra(QQ, [[0, 1], [0, 1]])


def test_group_algebra_c3_over_f2_semisimple():
    # counit of the integral 1 + g + g^2 is 3 = 1 in F2
    h = hopf.group_algebra(GF(2), zoo.cyclic_table(3))
    integral = hopf.left_integrals(h).basis[0]
    assert integral == (1, 1, 1)
    assert h.counit_vec(integral) == 1
    assert hopf.is_semisimple(h)


def test_sweedler_char2_rejected():
    with pytest.raises(UnsupportedDomainError):
        hopf.sweedler(GF(2))


def test_taft_matches_sweedler():
    sw = hopf.sweedler(QQ)
    t = hopf.taft(QQ, 2, -1, labels=sw.labels)
    assert t.algebra.mult == sw.algebra.mult
    assert t.comult == sw.comult
    assert t.counit == sw.counit
    assert t.antipode == sw.antipode


def test_taft_3_2_f7():
    # oracle: 2^3 = 8 = 1 mod 7 while 2, 4 != 1, so 2 is a primitive cube root
    assert pow(2, 3, 7) == 1 and pow(2, 1, 7) != 1 and pow(2, 2, 7) != 1
    t = builtin_zoo()["taft(3,2,F7)"]
    assert t.dim == 9
    assert hopf.verify_hopf(t).passed


def test_taft_rejects_non_primitive_root():
    with pytest.raises(AxiomError) as err:
        hopf.taft(QQ, 3, 1)
    assert err.value.witness == (1,)


# dual --------------------------------------------------------------------------


def test_dual_group_algebra_is_pointwise_product():
    d = hopf.dual(zoo.qc2())
    # transpose of Delta(g) = g (x) g by hand: delta_a delta_b = [a = b] delta_a
    for a in range(2):
        for b in range(2):
            expected = tuple(
                Fraction(1) if (a == b and k == a) else Fraction(0) for k in range(2)
            )
            assert d.algebra.mult[a][b] == expected


def test_dual_is_involutive_on_builtins():
    for name, h in builtin_zoo().items():
        dd = hopf.dual(hopf.dual(h))
        assert dd.algebra.mult == h.algebra.mult, name
        assert dd.algebra.unit == h.algebra.unit, name
        assert dd.comult == h.comult, name
        assert dd.counit == h.counit, name
        assert dd.antipode == h.antipode, name


def test_dual_needs_field():
    h = hopf.group_algebra(ZZ, zoo.cyclic_table(2))
    with pytest.raises(UnsupportedDomainError):
        hopf.dual(h)


# integrals ----------------------------------------------------------------------


def integral_property_oracle(h, vec, side):
    """Direct substitution of the defining identity on every basis element."""
    for a in range(h.dim):
        basis_a = tuple(h.domain.one if i == a else h.domain.zero for i in range(h.dim))
        if side == "left":
            prod = h.algebra.mul_vec(basis_a, vec)
        else:
            prod = h.algebra.mul_vec(vec, basis_a)
        scaled = tuple(h.domain.mul(h.counit[a], v) for v in vec)
        if tuple(prod) != scaled:
            return False
    return True


def test_qc2_integral_is_one_plus_sigma():
    h = zoo.qc2()
    left = hopf.left_integrals(h)
    assert left.basis == ((Fraction(1), Fraction(1)),)
    assert integral_property_oracle(h, left.basis[0], "left")


def test_sweedler_integral_is_x_plus_gx():
    h = hopf.sweedler(QQ)
    left = hopf.left_integrals(h)
    assert left.basis == ((0, 0, Fraction(1), Fraction(1)),)
    assert integral_property_oracle(h, left.basis[0], "left")
    right = hopf.right_integrals(h)
    assert integral_property_oracle(h, right.basis[0], "right")
    assert left.basis != right.basis  # sweedler is not unimodular


def test_dual_qc2_integral_is_delta_e():
    d = hopf.dual(zoo.qc2())
    assert hopf.left_integrals(d).basis == ((Fraction(1), Fraction(0)),)


def test_larson_sweedler_dimensions_across_builtins():
    for name, h in builtin_zoo().items():
        assert hopf.left_integrals(h).dim == 1, name
        assert hopf.right_integrals(h).dim == 1, name


# semisimplicity and structure ----------------------------------------------------


def test_semisimple_flags():
    assert hopf.is_semisimple(zoo.qc2())
    assert not hopf.is_semisimple(zoo.fpc2(2))
    assert not hopf.is_semisimple(hopf.sweedler(QQ))


@pytest.mark.parametrize("p", [2, 3, 5, 7])
@pytest.mark.parametrize("name", sorted(zoo.GROUP_TABLES))
def test_group_algebra_semisimple_iff_p_does_not_divide_order(p, name):
    table = zoo.GROUP_TABLES[name]
    h = hopf.group_algebra(GF(p), table)
    assert hopf.is_semisimple(h) == (len(table) % p != 0)


def test_cocommutative_antipode_is_involution():
    for name, h in builtin_zoo().items():
        if h.is_cocommutative():
            assert h.antipode @ h.antipode == Matrix.identity(h.domain, h.dim), name


def test_antipode_bijective():
    assert hopf.antipode_bijective(zoo.qc2())
    assert hopf.antipode_bijective(hopf.sweedler(QQ))
    sw = hopf.sweedler(QQ)
    zeroed = hopf.HopfAlgebraData(
        sw.algebra, sw.comult, sw.counit, Matrix.zeros(QQ, 4, 4)
    )
    assert not hopf.antipode_bijective(zeroed)


def test_antipode_rank_matches_minor_oracle():
    sw = hopf.sweedler(GF(5))
    rows = [list(r) for r in sw.antipode.rows]
    assert oracles.minor_rank(rows, oracles.mod_p_nonzero(5)) == 4
    assert hopf.antipode_bijective(sw)
    # taft antipode: monomial matrix (one nonzero per row and column),
    # hence invertible by inspection
    t = builtin_zoo()["taft(3,2,F7)"]
    for j in range(9):
        assert sum(1 for v in t.antipode.col(j) if v != 0) == 1
    for i in range(9):
        assert sum(1 for v in t.antipode.rows[i] if v != 0) == 1
    assert hopf.antipode_bijective(t)


def test_locality():
    assert hopf.is_local(zoo.fpc2(2))
    assert hopf.is_local(zoo.divided_power_hopf())
    assert not hopf.is_local(zoo.qc2())
    assert not hopf.is_local(hopf.sweedler(QQ))
    assert not hopf.is_local(hopf.dual(zoo.fpc2(2)))


# fuzzing: bad structure constants must be rejected -------------------------------


@given(
    st.lists(
        st.tuples(
            st.integers(0, 1), st.integers(0, 1), st.integers(0, 1), st.integers(-2, 2)
        ),
        max_size=5,
    )
)
def test_random_multiplication_tensors_rejected_or_associative(entries):
    try:
        alg = hopf.algebra_from_triples(QQ, 2, ("a", "b"), entries, (1, 0))
    except AxiomError:
        return
    assert alg.associativity_witness() is None
    assert alg.unit_witness() is None


def test_malformed_triple_reports_offender():
    with pytest.raises(FormatError) as err:
        hopf.algebra_from_triples(QQ, 2, ("a", "b"), [(0, 0, 5, 1)], (1, 0))
    assert "(0, 0, 5" in str(err.value).replace("[", "(")
