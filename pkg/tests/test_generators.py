from leibniz3 import GF, QQ, CentralFamilySpec, abelian, central_family, direct_sum, filippov4
from leibniz3.algebra3 import validate
from leibniz3.generators import A2_SEED, SplitMix64, a2
from leibniz3.linalg import span, standard_vector
from leibniz3.structure import CenterKind, center, derived_ideal
from leibniz3.bounds import schur_report


def test_splitmix_reference_values():
    # published SplitMix64 outputs for seed 0
    rng = SplitMix64(0)
    assert [rng.next() for _ in range(3)] == [
        0xE220A8397B1DCDAF, 0x6E789E6AA1B965F4, 0x06C45D188009454F]


def test_abelian_examples():
    assert abelian(0).dim == 0
    a = abelian(3, GF(2))
    assert a.dim == 3 and derived_ideal(a).dim == 0
    rep = schur_report(abelian(1))
    assert (rep.d, rep.r, rep.d0, rep.dim_derived) == (0, 0, 0, 0)


def test_a2_from_central_family():
    a = central_family(CentralFamilySpec(1, 1, A2_SEED, QQ))
    assert a == a2(QQ)
    assert a.brackets == {(0, 0, 0): (0, 1)}


def test_central_family_examples():
    assert central_family(CentralFamilySpec(0, 3, 9)) == abelian(3)
    a = central_family(CentralFamilySpec(2, 1, 42, GF(3)))
    assert a.dim == 3 and validate(a) == []
    assert derived_ideal(a) <= span([(0, 0, 1)], GF(3))


def test_central_family_properties():
    for field in (QQ, GF(2), GF(3), GF(5)):
        for p in range(5):
            for q in range(4):
                spec = CentralFamilySpec(p, q, 100 * p + q, field)
                a = central_family(spec)
                assert a == central_family(spec)
                cent = span([standard_vector(field, p + q, p + t) for t in range(q)], field, p + q)
                assert derived_ideal(a) <= cent
                assert cent <= center(a, CenterKind.FULL)


def test_filippov_center_and_report():
    f = filippov4(QQ)
    assert center(f, CenterKind.FULL).dim == 0
    rep = schur_report(f)
    assert (rep.d0, rep.bound_cor2, rep.dim_derived) == (4, 4, 4)


def test_direct_sum_examples():
    assert direct_sum(abelian(1), abelian(2)) == abelian(3)
    s = direct_sum(a2(), abelian(1))
    assert derived_ideal(s).dim == 1 and center(s, CenterKind.FULL).dim == 2
    assert validate(s) == []
