"""Skew constacyclic codes: generators, duals, divisor enumeration."""

import pytest

from skewcodes.field import Automorphism, Field, FieldError
from skewcodes.linear import BudgetExceeded, LinearCode
from skewcodes.skewpoly import SkewPoly, x_pow_minus
from skewcodes.constacyclic import (
    ConstacyclicSpec,
    SkewCyclicCode,
    dual_generator,
    enumerate_right_divisors,
    gen_matrix,
    is_right_divisor,
    self_dual_check,
)

import rand_suites


F4 = Field(2, 2)
F8 = Field(2, 3)
TH4 = Automorphism(F4, 1)
TH8 = Automorphism(F8, 1)


def spec4(n, alpha_digit=1, s=1):
    return ConstacyclicSpec(n, F4.digit_decode(alpha_digit), Automorphism(F4, s))


def g_of(aut, digits):
    return SkewPoly.from_digits(aut, digits)


def test_spec_validation():
    with pytest.raises(FieldError):
        ConstacyclicSpec(1, 1, TH4)
    with pytest.raises(FieldError):
        ConstacyclicSpec(4, 0, TH4)


def test_inverse_spec_inverts_alpha():
    w = F4.generator
    sp = ConstacyclicSpec(6, w, TH4)
    assert sp.inverse_spec().alpha == F4.inv(w)
    assert sp.inverse_spec().n == 6 and sp.inverse_spec().aut is TH4


def test_shift_action_twists_and_wraps():
    w = F4.generator
    sp = ConstacyclicSpec(4, w, TH4)
    v = (1, 0, w, 0)
    # (v0..v3) -> (alpha*theta(v3), theta(v0), theta(v1), theta(v2))
    assert sp.shift(v) == (0, 1, 0, TH4(w))
    v2 = (0, 0, 0, 1)
    assert sp.shift(v2) == (w, 0, 0, 0)
    with pytest.raises(FieldError):
        sp.shift((1, 0))


def test_shift_map_agrees_with_shift():
    sp = spec4(5, alpha_digit=2)
    mp = sp.shift_map()
    for v in ((1, 2, 3, 0, 1), (0, 0, 0, 0, 3)):
        raw = tuple(F4.digit_decode(d) for d in v)
        assert mp(raw) == sp.shift(raw)


def test_gen_matrix_rows_are_twisted_shifts_of_g():
    g = g_of(TH4, (1, 0, 1))
    sp4 = spec4(4)
    assert is_right_divisor(sp4, g)
    m = gen_matrix(sp4, g)
    assert m.nrows == 2 and m.ncols == 4
    # row i holds the coefficients of x^i * g; no wraparound below degree n
    x = SkewPoly.monomial(TH4, 1)
    row1 = (x * g).coeffs
    assert m.rows[0] == tuple(list(g.coeffs) + [0] * (4 - len(g.coeffs)))
    assert m.rows[1] == tuple(list(row1) + [0] * (4 - len(row1)))


def test_gen_matrix_of_the_7_3_code():
    # x^4 + x^2 + w^2 x + 1 twisted by alpha = w: successive rows push the
    # coefficients through theta while shifting one slot right
    sp = ConstacyclicSpec(7, F4.generator, TH4)
    g = g_of(TH4, (1, 3, 1, 0, 1))
    m = gen_matrix(sp, g)
    assert m.to_digit_rows() == (
        (1, 3, 1, 0, 1, 0, 0),
        (0, 1, 2, 1, 0, 1, 0),
        (0, 0, 1, 3, 1, 0, 1),
    )


def test_code_dimensions_follow_degree():
    sp = spec4(8, alpha_digit=2)
    g = g_of(TH4, (1, 0, 3, 0, 2, 0, 1))
    assert is_right_divisor(sp, g)
    sc = SkewCyclicCode(sp, g)
    assert sc.n == 8 and sc.k == 2


def test_non_divisor_and_non_monic_rejected():
    sp = spec4(4)
    w = F4.generator
    # every monic linear x + u with u != 0 divides x^4 - 1 here (the norm of
    # any unit has order dividing 2), so the non-divisor must be quadratic
    bad = g_of(TH4, (1, 1, 1))
    assert not is_right_divisor(sp, bad)
    with pytest.raises(FieldError):
        SkewCyclicCode(sp, bad)
    good = g_of(TH4, (1, 1))
    assert is_right_divisor(sp, good)
    with pytest.raises(FieldError):
        SkewCyclicCode(sp, good.scale(w))  # right divisor, but not monic


def test_known_8_2_code_and_its_dual():
    # degree-6 divisor of x^8 - w over GF(4) with the order-2 twist
    g = g_of(TH4, (1, 0, 3, 0, 2, 0, 1))
    sp = spec4(8, alpha_digit=2)
    assert is_right_divisor(sp, g)
    sc = SkewCyclicCode(sp, g)
    assert (sc.n, sc.k) == (8, 2)
    assert sc.code.min_weight() == 4
    h = dual_generator(sp, g)
    assert h.to_digits() == (3, 0, 1)
    dual_sc = sc.dual()
    assert (dual_sc.n, dual_sc.k) == (8, 6)
    assert dual_sc.code.min_weight() == 2
    # the two sides are genuine linear-algebra duals of each other
    assert dual_sc.code.same_code(sc.code.dual())


def test_dual_generator_divides_the_inverse_constant_modulus():
    g = g_of(TH4, (1, 0, 3, 0, 2, 0, 1))
    sp = spec4(8, alpha_digit=2)
    h = dual_generator(sp, g)
    assert is_right_divisor(sp.inverse_spec(), h)
    assert h.is_monic()
    assert h.degree == sp.n - g.degree


def test_dual_generator_matches_linear_dual_across_a_family():
    # every proper divisor of x^6 - 1 over GF(4), both twists
    for s in (0, 1):
        sp = spec4(6, s=s)
        for g in enumerate_right_divisors(sp):
            sc = SkewCyclicCode(sp, g)
            if sc.k == sc.n:
                continue
            h = dual_generator(sp, g)
            hedge = SkewCyclicCode(sp.inverse_spec(), h)
            assert hedge.code.same_code(sc.code.dual()), g.to_digits()


def test_dual_generator_of_trivial_factor_refused():
    sp = spec4(4)
    full = sp.modulus_poly()
    with pytest.raises(FieldError):
        dual_generator(sp, full)


def test_shift_invariance_under_the_right_constant():
    # the [7,3] code twisted by alpha = w is invariant under the w-shift
    # and not under the plain cyclic one
    w = F4.generator
    sp = ConstacyclicSpec(7, w, TH4)
    g = g_of(TH4, (1, 3, 1, 0, 1))
    assert is_right_divisor(sp, g)
    sc = SkewCyclicCode(sp, g)
    assert sc.code.invariant_under(sp.shift_map())
    plain = ConstacyclicSpec(7, 1, TH4)
    assert not sc.code.invariant_under(plain.shift_map())


def test_enumerate_counts_for_x4_minus_1():
    sp = spec4(4)
    divs = enumerate_right_divisors(sp)
    assert len(divs) == 13
    # canonical order: by degree, then digit-lexicographic
    degs = [g.degree for g in divs]
    assert degs == sorted(degs)
    for g in divs:
        assert g.is_monic() and is_right_divisor(sp, g)
    tuples = [g.to_digits() for g in divs]
    assert len(tuples) == len(set(tuples))


def test_divisor_census_small_lengths():
    # totals 3, 13, 33, 81 for n = 2, 4, 6, 8 under the order-2 twist;
    # the commutative count at n = 8 collapses to 7
    totals = {}
    for n in (2, 4, 6, 8):
        totals[n] = len(enumerate_right_divisors(spec4(n)))
    assert totals == {2: 3, 4: 13, 6: 33, 8: 81}
    per_deg = {}
    for g in enumerate_right_divisors(spec4(6)):
        per_deg[g.degree] = per_deg.get(g.degree, 0) + 1
    assert [per_deg[d] for d in range(1, 6)] == [3, 6, 15, 6, 3]
    assert len(enumerate_right_divisors(spec4(8, s=0))) == 7


def test_enumerate_duality_shortcut_matches_brute_force():
    sp = spec4(4)
    fast = enumerate_right_divisors(sp, use_duality=True)
    slow = enumerate_right_divisors(sp, use_duality=False)
    assert [g.to_digits() for g in fast] == [g.to_digits() for g in slow]
    two_only = enumerate_right_divisors(sp, degrees=(2,))
    assert all(g.degree == 2 for g in two_only)
    assert [g.to_digits() for g in two_only] == [
        g.to_digits() for g in fast if g.degree == 2
    ]


def test_enumerate_rejects_out_of_band_degrees():
    sp = spec4(4)
    with pytest.raises(FieldError):
        enumerate_right_divisors(sp, degrees=(0,))
    with pytest.raises(FieldError):
        enumerate_right_divisors(sp, degrees=(4,))


def test_enumerate_candidate_cap():
    sp = spec4(8)
    with pytest.raises(BudgetExceeded):
        enumerate_right_divisors(sp, degrees=(4,), candidate_cap=10)


def test_enumerate_parallel_matches_serial():
    sp = spec4(6)
    a = enumerate_right_divisors(sp, workers=2)
    b = enumerate_right_divisors(sp, workers=1)
    assert [g.to_digits() for g in a] == [g.to_digits() for g in b]


def test_self_dual_census_length_2():
    # all three linear divisors x + u of x^2 - 1 exist, but only x + 1 meets
    # itself under the form; the other two are dual to each other
    sp = spec4(2)
    divs = enumerate_right_divisors(sp, degrees=(1,))
    assert [g.to_digits() for g in divs] == [(1, 1), (2, 1), (3, 1)]
    found = [g.to_digits() for g in divs if self_dual_check(SkewCyclicCode(sp, g))]
    assert found == [(1, 1)]


def test_self_dual_counts_lengths_4_and_6():
    hits = {}
    for n in (4, 6):
        sp = spec4(n)
        hits[n] = [
            g.to_digits()
            for g in enumerate_right_divisors(sp, degrees=(n // 2,))
            if self_dual_check(SkewCyclicCode(sp, g))
        ]
    assert hits[4] == [(1, 0, 1), (2, 3, 1), (3, 2, 1)]
    assert hits[6] == [(1, 0, 0, 1), (1, 2, 2, 1), (1, 3, 3, 1)]


def test_self_dual_needs_half_dimension():
    sp = spec4(4)
    g = g_of(TH4, (1, 1))
    if not is_right_divisor(sp, g):
        pytest.skip("fixture divisor changed")
    assert not self_dual_check(SkewCyclicCode(sp, g))


def test_self_dual_agrees_with_linear_algebra():
    sp = spec4(4)
    for g in enumerate_right_divisors(sp, degrees=(2,)):
        sc = SkewCyclicCode(sp, g)
        assert self_dual_check(sc) == sc.code.same_code(sc.code.dual())


def test_commutative_twist_gives_classical_cyclic():
    # s = 0, alpha = 1: the code is invariant under the plain cyclic shift
    sp = spec4(6, s=0)
    for g in enumerate_right_divisors(sp, degrees=(2, 3)):
        sc = SkewCyclicCode(sp, g)
        assert sc.code.invariant_under(sp.shift_map())
