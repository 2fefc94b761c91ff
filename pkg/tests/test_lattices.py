import functools
from fractions import Fraction

import pytest

from hopfgal import hopf, lattices, zoo
from hopfgal.errors import PreconditionError
from hopfgal.linalg import QQ, Matrix

import oracles


@functools.lru_cache(maxsize=None)
def zi():
    return zoo.gaussian_integers_lattice()


@functools.lru_cache(maxsize=None)
def zzeta3():
    return zoo.eisenstein_integers_lattice()


def half():
    return Fraction(1, 2)


# lattice basics ------------------------------------------------------------------


def test_canonical_basis_is_representation_independent():
    a = lattices.IntegerLattice.from_generators(2, [(1, 0), (half(), half())])
    b = lattices.IntegerLattice.from_generators(2, [(half(), half()), (0, 1)])
    assert a == b
    assert a.contains((1, 0)) and a.contains((half(), half()))
    assert not a.contains((half(), 0))


def test_membership_via_coordinates():
    lat = lattices.IntegerLattice.from_generators(2, [(2, 0), (0, 3)])
    assert lat.contains((4, 3))
    assert not lat.contains((1, 0))
    assert lat.coords((4, 3)) == (Fraction(2), Fraction(1))


# associated orders ----------------------------------------------------------------


def test_associated_order_gaussian_hand_oracle():
    # h = a + b s integral on Z[i] forces a + b and a - b integral; the
    # Hermite form of the condition rows gives the dual basis by hand
    order = lattices.associated_order(zoo.qc2(), zi())
    expected = lattices.IntegerLattice.from_generators(
        2, [(1, 0), (half(), half())], tag="order-in-hopf-algebra"
    )
    assert order.lattice == expected


def test_associated_order_eisenstein_is_group_ring():
    order = lattices.associated_order(zoo.qc2(), zzeta3())
    assert order.lattice == lattices.standard_lattice(2, tag="order-in-hopf-algebra")


def test_associated_order_contains_group_ring():
    # the action is integral on both lattices, so ZC2 sits inside
    group_ring = lattices.group_ring_order(zoo.qc2()).lattice
    for module in (zi(), zzeta3()):
        order = lattices.associated_order(zoo.qc2(), module)
        assert order.lattice.contains_lattice(group_ring)


def test_associated_order_trivial_hopf():
    h = hopf.group_algebra(QQ, [[0]])
    module = lattices.LatticeModuleData(
        hopf=h,
        lattice=lattices.standard_lattice(1),
        action=(Matrix.identity(QQ, 1),),
        unit=(1,),
    )
    order = lattices.associated_order(h, module)
    assert order.lattice.generators() == [(Fraction(1),)]


# Hopf order checks ----------------------------------------------------------------


def test_half_trace_idempotent_is_hopf_order():
    order = lattices.associated_order(zoo.qc2(), zi())
    report = lattices.is_hopf_order(order)
    assert report.is_hopf_order
    # hand check: Delta((1+s)/2) = 1(x)1 + 2e(x)e - e(x)1 - 1(x)e stays inside
    e = (half(), half())
    h = zoo.qc2()
    image = h.comult_vec(e)
    assert image == {(0, 0): half(), (1, 1): half()}


def test_group_ring_is_hopf_order():
    assert lattices.is_hopf_order(lattices.group_ring_order(zoo.qc2())).is_hopf_order


def test_half_sigma_is_not_multiplicatively_closed():
    bad = lattices.OrderData(
        zoo.qc2(),
        lattices.IntegerLattice.from_generators(
            2, [(1, 0), (0, half())], tag="order-in-hopf-algebra"
        ),
    )
    report = lattices.is_hopf_order(bad)
    assert not report.mult_closed
    assert not report.is_hopf_order


# integral lattices ----------------------------------------------------------------


def test_lattice_integral_group_ring():
    gen, lat = lattices.lattice_integrals(lattices.group_ring_order(zoo.qc2()))
    assert gen == (Fraction(1), Fraction(1))
    assert lat.rank == 1


def test_lattice_integral_for_half_trace_order():
    order = lattices.associated_order(zoo.qc2(), zi())
    gen, _ = lattices.lattice_integrals(order)
    assert gen == (half(), half())


def test_lattice_integral_trivial_order():
    h = hopf.group_algebra(QQ, [[0]])
    gen, _ = lattices.lattice_integrals(lattices.group_ring_order(h))
    assert gen == (Fraction(1),)


# tameness over Z ------------------------------------------------------------------


def test_group_ring_on_gaussian_integers_wild_at_two():
    # trace(a + bi) = 2a, so the quotient is Z/2, by hand
    report = lattices.tame_check_integral(lattices.group_ring_order(zoo.qc2()), zi())
    assert not report.tame
    assert report.invariant_factors == (2,)
    assert report.obstructed_primes == (2,)
    assert report.fixed_is_base and report.rank_equal and report.faithful
    assert report.rational_tame is True


def test_group_ring_on_eisenstein_integers_tame():
    # trace(a + b zeta) = 2a - b hits 1, by hand
    report = lattices.tame_check_integral(lattices.group_ring_order(zoo.qc2()), zzeta3())
    assert report.tame
    assert report.invariant_factors == ()
    assert report.rational_tame is True


def test_half_trace_order_on_gaussian_integers_tame():
    order = lattices.associated_order(zoo.qc2(), zi())
    report = lattices.tame_check_integral(order, zi())
    assert report.tame
    assert report.invariant_factors == ()


def test_tame_iff_no_invariant_factors_on_instances():
    cases = [
        (lattices.group_ring_order(zoo.qc2()), zi()),
        (lattices.group_ring_order(zoo.qc2()), zzeta3()),
        (lattices.associated_order(zoo.qc2(), zi()), zi()),
        (lattices.associated_order(zoo.qc2(), zzeta3()), zzeta3()),
    ]
    for order, module in cases:
        report = lattices.tame_check_integral(order, module)
        hypotheses = report.fixed_is_base and report.rank_equal and report.faithful
        assert hypotheses
        trivial_quotient = not report.invariant_factors and report.quotient_free_rank == 0
        assert report.tame == trivial_quotient


def test_image_always_in_fixed_lattice():
    for order, module in [
        (lattices.group_ring_order(zoo.qc2()), zi()),
        (lattices.group_ring_order(zoo.qc2()), zzeta3()),
    ]:
        assert lattices.tame_check_integral(order, module).image_in_fixed


# freeness certificates ------------------------------------------------------------


def test_free_generator_one_plus_i():
    order = lattices.associated_order(zoo.qc2(), zi())
    result = lattices.free_rank_one_generator(order, zi(), [(1, 0), (0, 1), (1, 1)])
    assert result.generator == (Fraction(1), Fraction(1))
    assert abs(result.determinant) == 1
    # the certificate matrix columns are 1 . z and e . z in Z[i]-coordinates
    assert abs(oracles.leibniz_det(result.certificate.rows)) == 1


def test_free_generator_zeta3():
    order = lattices.group_ring_order(zoo.qc2())
    result = lattices.free_rank_one_generator(order, zzeta3(), [(0, 1)])
    assert result.generator == (Fraction(0), Fraction(1))


def test_order_must_act_integrally():
    # (1+s)/2 sends zeta3 to -1/2, outside Z[zeta3]
    order = lattices.associated_order(zoo.qc2(), zi())
    with pytest.raises(PreconditionError):
        lattices.tame_check_integral(order, zzeta3())


def test_unfaithful_action_has_no_associated_order_lattice():
    from hopfgal.errors import InconsistencyError

    trivial = lattices.LatticeModuleData(
        hopf=zoo.qc2(),
        lattice=lattices.standard_lattice(2),
        action=(Matrix.identity(QQ, 2), Matrix.identity(QQ, 2)),
        unit=(1, 0),
    )
    with pytest.raises(InconsistencyError):
        lattices.associated_order(zoo.qc2(), trivial)


def test_free_generator_requires_tame():
    with pytest.raises(PreconditionError):
        lattices.free_rank_one_generator(
            lattices.group_ring_order(zoo.qc2()), zi(), [(1, 1)]
        )


def test_free_generator_inconclusive_absence():
    order = lattices.associated_order(zoo.qc2(), zi())
    result = lattices.free_rank_one_generator(order, zi(), [(1, 0)])
    assert result.generator is None
