"""Distance machinery: bracket shadows, root runs, Vandermonde, Singleton."""

import pytest

from skewcodes.field import Automorphism, Field, FieldError
from skewcodes.linear import BudgetExceeded
from skewcodes.skewpoly import SkewPoly
from skewcodes.constacyclic import ConstacyclicSpec, SkewCyclicCode, enumerate_right_divisors
from skewcodes.bounds import (
    BchBoundQuery,
    BracketContext,
    bch_bound,
    best_bch_bound,
    bracket_code,
    bracket_map,
    distance_transfer,
    mds_scan,
    vandermonde_full_rank,
)

import rand_suites


F4 = Field(2, 2)
F8 = Field(2, 3)
F9 = Field(3, 2)
TH4 = Automorphism(F4, 1)
CTX4 = BracketContext(F4, 1)


def g4(digits):
    return SkewPoly.from_digits(TH4, digits)


def test_bracket_values_base_2():
    # base p^s = 2: [i] = 2^i - 1
    assert [CTX4.bracket(i) for i in range(6)] == [0, 1, 3, 7, 15, 31]


def test_bracket_values_other_bases():
    ctx8 = BracketContext(F8, 2)  # base 4
    assert ctx8.base == 4
    assert ctx8.bracket(2) == 5 and ctx8.bracket(3) == 21
    ctx9 = BracketContext(F9, 1)  # base 3
    assert ctx9.bracket(2) == 4 and ctx9.bracket(3) == 13
    # closed form vs geometric sum
    for ctx in (CTX4, ctx8, ctx9):
        for i in range(1, 8):
            assert ctx.bracket(i) == sum(ctx.base**t for t in range(i))


def test_bracket_refusals():
    with pytest.raises(FieldError):
        BracketContext(F4, 0)
    with pytest.raises(FieldError):
        CTX4.bracket(-1)
    with pytest.raises(BudgetExceeded):
        CTX4.bracket(64)


def test_bracket_map_places_coefficients_at_bracket_exponents():
    # 1 + w t + t^2 maps to 1 + w x + x^3 (exponents [0], [1], [2])
    w = F4.generator
    f = SkewPoly(TH4, [1, w, 1])
    image = bracket_map(CTX4, f)
    assert image.to_digits() == (1, 2, 0, 1)
    assert image.aut.s == 0
    # weight is carried verbatim
    assert sum(1 for c in image.coeffs if c) == sum(1 for c in f.coeffs if c)


def test_bracket_map_zero_and_mismatches():
    assert bracket_map(CTX4, SkewPoly.zero(TH4)).is_zero()
    with pytest.raises(FieldError):
        bracket_map(CTX4, SkewPoly.from_digits(Automorphism(F8, 1), (1, 1)))
    with pytest.raises(FieldError):
        bracket_map(CTX4, SkewPoly.from_digits(Automorphism(F4, 0), (1, 1)))
    with pytest.raises(BudgetExceeded):
        bracket_map(CTX4, SkewPoly.monomial(TH4, 17))  # [17] > dense cap


def test_bracket_code_on_the_8_2_generator():
    sp = ConstacyclicSpec(8, F4.generator, TH4)
    g = g4((1, 0, 3, 0, 2, 0, 1))
    shadow = bracket_code(sp, g)
    assert shadow.length == 255  # [8]
    assert shadow.gen.degree == 63  # [6]
    assert shadow.dim == 255 - 63
    assert shadow.code is not None
    assert shadow.code.k == shadow.dim


def test_bracket_code_divisibility_for_every_divisor_of_x8_minus_w():
    sp = ConstacyclicSpec(8, F4.generator, TH4)
    count = 0
    for g in enumerate_right_divisors(sp):
        shadow = bracket_code(sp, g, build_matrix=False)
        assert shadow.code is None
        assert shadow.length == 255
        assert shadow.gen.degree == CTX4.bracket(g.degree)
        count += 1
    assert count > 0


def test_bracket_code_refusals():
    sp0 = ConstacyclicSpec(8, 1, Automorphism(F4, 0))
    with pytest.raises(FieldError):
        bracket_code(sp0, SkewPoly.from_digits(Automorphism(F4, 0), (1, 1)))
    sp = ConstacyclicSpec(4, 1, TH4)
    with pytest.raises(FieldError):
        bracket_code(sp, g4((1, 1, 1)))  # not a right divisor
    # [10] = 1023 exceeds the matrix cap unless the matrix is skipped
    sp10 = ConstacyclicSpec(10, 1, TH4)
    with pytest.raises(BudgetExceeded):
        bracket_code(sp10, g4((1, 1)))
    assert bracket_code(sp10, g4((1, 1)), build_matrix=False).length == 1023


def test_distance_transfer_all_length_4_instances():
    sp = ConstacyclicSpec(4, 1, TH4)
    for g in enumerate_right_divisors(sp):
        rep = distance_transfer(sp, g)
        assert rep.inequality_holds
        # every one of these instances realizes equality, with a witness
        assert rep.equality and rep.witness is not None
        assert rep.d_bracket == rep.d_skew
        weight = sum(1 for e in rep.witness if e)
        assert weight == rep.d_bracket


def test_bch_bound_pinned_values_length_6():
    sp = ConstacyclicSpec(6, 1, TH4)
    expected = {
        (1, 0, 1, 0, 1): 3,
        (1, 1, 0, 1, 1): 4,
        (1, 2, 0, 2, 1): 4,
        (1, 3, 0, 3, 1): 4,
        (2, 0, 3, 0, 1): 3,
        (3, 0, 2, 0, 1): 3,
    }
    for digits, delta in expected.items():
        g = g4(digits)
        got, l, c = best_bch_bound(BchBoundQuery(6, 1, g))
        assert got == delta, digits
        # the reported (l, c) reproduces the bound through the direct query
        assert bch_bound(BchBoundQuery(6, 1, g, c=c, l=l)) == delta
        # and the bound is honest against the true distance
        d = SkewCyclicCode(sp, g).code.min_weight()
        assert delta <= d


def test_bch_bound_never_beats_the_distance_on_length_6():
    sp = ConstacyclicSpec(6, 1, TH4)
    checked = 0
    for g in enumerate_right_divisors(sp, degrees=(4,)):
        delta, _, _ = best_bch_bound(BchBoundQuery(6, 1, g))
        d = SkewCyclicCode(sp, g).code.min_weight()
        assert delta <= d
        checked += 1
    assert checked == 6


def test_bch_query_validation():
    g = g4((1, 0, 1, 0, 1))
    with pytest.raises(FieldError):
        BchBoundQuery(6, 1, g, c=3).validate()  # gcd(3, 63) > 1
    with pytest.raises(FieldError):
        BchBoundQuery(6, 1, g, l=-1).validate()
    with pytest.raises(FieldError):
        BchBoundQuery(4, 1, g4((1, 1, 1, 1, 1))).validate()  # no dimension left
    # size condition: k = 1 gives q^[1] - 1 = 3 < [6] = 63
    with pytest.raises(FieldError):
        BchBoundQuery(6, 1, g4((1, 1, 0, 1, 1, 1))).validate()


def test_best_bound_stride_sweep_cap():
    # GF(8), s = 1, g = x + w divides x^4 - w: k = 3, [3] = 7, and the
    # group order 8^7 - 1 is past the sweep cap, so the default sweep is
    # refused before any root scan starts
    th8 = Automorphism(F8, 1)
    g = SkewPoly.from_digits(th8, (2, 1))
    query = BchBoundQuery(4, F8.generator, g)
    with pytest.raises(BudgetExceeded, match="explicit strides"):
        best_bch_bound(query)


def test_best_bound_explicit_strides():
    # restricting the sweep to c = 1 can only lose against the full sweep,
    # and rejects strides sharing a factor with the group order (63 here)
    g = g4((1, 0, 1, 0, 1))
    query = BchBoundQuery(6, 1, g)
    full = best_bch_bound(query)
    delta1, l1, c1 = best_bch_bound(query, strides=(1,))
    assert c1 == 1 and delta1 <= full[0]
    assert bch_bound(BchBoundQuery(6, 1, g, c=1, l=l1)) == delta1
    with pytest.raises(FieldError):
        best_bch_bound(query, strides=(3,))


def test_vandermonde_rank_tracks_the_size_inequality():
    # k = 2 over base 2: group order 4^3 - 1 = 63 fits [6] = 63 exactly,
    # and fails [7] = 127
    assert vandermonde_full_rank(CTX4, 2, 6) is True
    assert vandermonde_full_rank(CTX4, 2, 7) is False
    with pytest.raises(BudgetExceeded):
        vandermonde_full_rank(CTX4, 2, 10)  # [10] past the matrix cap
    ext, _ = F4.extension(CTX4.bracket(2))
    with pytest.raises(FieldError):
        vandermonde_full_rank(CTX4, 2, 6, omega=ext.one)


def test_mds_scan_small_lengths_all_strict():
    w = F4.generator
    report = mds_scan(CTX4, 3, (1, w, F4.mul(w, w)))
    assert report  # n = 3, degree 2 instances exist
    for inst in report:
        assert not inst.is_mds
        assert inst.shadow_d < inst.singleton
    with pytest.raises(FieldError):
        mds_scan(CTX4, 3, (1,), min_degree=1)


def test_bulk_random_suite():
    cases, failures = rand_suites.bracket_suite(seed=20260822, cases=600)
    assert failures == [] and cases >= 600
