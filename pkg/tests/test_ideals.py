"""Groebner engine, ideal calculus, colengths."""

import itertools
import random

import pytest

from triplepoint.errors import ColengthBudgetError
from triplepoint.ideals import IdealHandle, PresentedQuotient, minors, spair_audit
from triplepoint.polyring import Ring

R = Ring(("x", "y", "z", "t"))
x, y, z, t = R.gens()

A123_GENS = ["x*y - t^5", "x*z - t^6 - z*t^2", "y*z + y*t^4 - z*t^3"]


def A123():
    return PresentedQuotient(R, IdealHandle(R, A123_GENS))


def test_buchberger_monomial_pair():
    gb = IdealHandle(R, ["x^2", "x*y"]).groebner()
    assert [str(g) for g in gb] == ["x*y", "x^2"]


def test_buchberger_variables():
    gb = IdealHandle(R, ["x", "y", "z", "t"]).groebner()
    assert {str(g) for g in gb} == {"x", "y", "z", "t"}


def test_buchberger_a123_membership_and_audit():
    I = IdealHandle(R, A123_GENS)
    assert I.contains(R.polynomial("x*y - t^5"))
    assert spair_audit(I.groebner())


def test_spair_audit_rejects_non_basis():
    assert not spair_audit([x * y - t**5, x * z - t**6 - z * t**2])


def test_member_trivial():
    assert IdealHandle(R, ["x"]).contains(x**2)
    assert not IdealHandle(R, ["x", "y", "z", "t"]).contains(R.one())


def test_ideal_equal():
    assert IdealHandle(R, ["x", "x+y"]).equals(IdealHandle(R, ["x", "y"]))
    assert IdealHandle(R, ["x", "y", "z", "t^2", "t^3"]).equals(
        IdealHandle(R, ["x", "y", "z", "t^2"])
    )


def test_trace_equals_entry_ideal_a123():
    # entry ideal of the defining matrix plus the relations = (x,y,z,t^2)
    entries = ["x", "t^3", "t^4 + z", "t^2", "y", "z"]
    lhs = IdealHandle(R, entries + A123_GENS)
    rhs = IdealHandle(R, ["x", "y", "z", "t^2"] + A123_GENS)
    assert lhs.equals(rhs)


def test_ideal_equal_random_shuffle_and_units():
    rng = random.Random(7)
    I = IdealHandle(R, A123_GENS)
    units = [(0, 1, 1), (2, 0, 1), (-1, 0, 1), (0, -2, 1)]
    for _ in range(6):
        gens = [R.polynomial(s) for s in A123_GENS]
        rng.shuffle(gens)
        gens = [g * rng.choice(units) for g in gens]
        assert IdealHandle(R, gens).equals(I)


def test_sum_product_power():
    assert (IdealHandle(R, ["x"]) + IdealHandle(R, ["y"])).equals(
        IdealHandle(R, ["x", "y"])
    )
    xy = IdealHandle(R, ["x", "y"])
    assert xy.product(xy).equals(IdealHandle(R, ["x^2", "x*y", "y^2"]))
    m = IdealHandle(R, ["x", "y", "z", "t"])
    assert m.power(2).quotient_dim() == 5


def test_colon():
    assert IdealHandle(R, ["x^2"]).colon(IdealHandle(R, ["x"])).equals(
        IdealHandle(R, ["x"])
    )
    xy = IdealHandle(R, ["x", "y"])
    assert xy.colon(IdealHandle(R, [R.one()])).equals(xy)


def test_colon_good_ideal_identity_a123():
    # (Q1 : J1) = J1 inside the quotient, consequence of Ulrich => good
    A = A123()
    J1 = IdealHandle(R, ["x", "y", "z", "t"])
    Q1 = IdealHandle(R, ["t", "x + y + z"])
    assert A.image(Q1).colon(J1).equals(A.image(J1))


def test_minors_entry_ideal_sample():
    # 1x1 minors of the sample matrix generate (x, y, z, t^(n+1))
    n = 2
    M = [
        [R.polynomial("x"), R.polynomial(f"t^{n+1}"), R.polynomial(f"t^{n+1} + z")],
        [R.polynomial(f"t^{n+1}"), R.polynomial("y"), R.polynomial("z")],
    ]
    assert minors(M, 1).equals(IdealHandle(R, ["x", "y", "z", f"t^{n+1}"]))


def test_minors_2x2_is_determinant():
    M = [[x, y], [z, t]]
    assert minors(M, 2).equals(IdealHandle(R, [x * t - y * z]))


def test_minors_out_of_range():
    with pytest.raises(ValueError):
        minors([[x, y]], 2)


def test_quotient_dim():
    assert IdealHandle(R, ["x", "y", "z", "t"]).quotient_dim() == 1
    assert IdealHandle(R, ["x"]).quotient_dim() is None
    R2 = Ring(("x", "y"))
    assert IdealHandle(R2, ["x"]).quotient_dim() is None


def _brute_standard_count(lead_exps, n, box):
    count = 0
    for e in itertools.product(*(range(b + 1) for b in box)):
        if not any(all(le[k] <= e[k] for k in range(n)) for le in lead_exps):
            count += 1
    return count


def test_quotient_dim_brute_force_oracle():
    rng = random.Random(11)
    R3 = Ring(("x", "y", "z"))
    for _ in range(25):
        pures = [rng.randint(1, 4) for _ in range(3)]
        gens = [R3.monomial(tuple(p if k == i else 0 for k in range(3)))
                for i, p in enumerate(pures)]
        for _ in range(rng.randint(0, 3)):
            e = tuple(rng.randint(0, 3) for _ in range(3))
            if any(e):
                gens.append(R3.monomial(e))
        I = IdealHandle(R3, gens)
        expected = _brute_standard_count(
            [g.terms[0][1] for g in I.groebner()], 3, [max(pures)] * 3
        )
        assert I.quotient_dim() == expected


def test_local_length_examples():
    A = A123()
    m = IdealHandle(R, ["x", "y", "z", "t"])
    assert A.colength(m) == 1
    for i in (1, 2, 3):
        Ji = IdealHandle(R, ["x", "y", "z", f"t^{i}"])
        assert A.colength(Ji) == i


def test_local_length_sees_only_the_origin():
    # (x, y, z, t^2 - t) cuts out the origin and a point at t = 1;
    # the local length ignores the distant point
    A = A123()
    I = IdealHandle(R, ["x", "y", "z", "t^2 - t"])
    assert A.colength(I) == 1


def test_local_length_budget_error():
    # (x, y) leaves a curve through the origin: no stabilization
    A = A123()
    with pytest.raises(ColengthBudgetError):
        A.colength(IdealHandle(R, ["x", "y"]))


def test_local_length_monotone():
    A = A123()
    I = IdealHandle(R, ["x", "y", "z", "t^3"])
    J = IdealHandle(R, ["x", "y", "z", "t^3", "t^2"])
    assert A.colength(I) >= A.colength(J)


def test_min_gens():
    A = A123()
    m = IdealHandle(R, ["x", "y", "z", "t"])
    assert A.min_gens(m) == 4
    for i in (1, 2):
        assert A.min_gens(IdealHandle(R, ["x", "y", "z", f"t^{i}"])) == 4


def test_presented_quotient_rejects_low_degree():
    with pytest.raises(ValueError):
        PresentedQuotient(R, IdealHandle(R, ["x - t^2"]))


def test_gb_cache_is_stable():
    I = IdealHandle(R, A123_GENS)
    assert I.groebner() is I.groebner()
