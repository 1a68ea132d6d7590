"""Bracket exponents, bracket codes, and distance bounds transferred there.

For theta = Frobenius^s the exponents [i] = ((p^s)^i - 1)/(p^s - 1) linearize
the twist: substituting x^[i] for t^i sends a skew polynomial to an ordinary
one, and right divisibility in F_q[t;theta] becomes plain divisibility in
F_q[x].  A skew constacyclic code of length n therefore casts a commutative
alpha-cyclic shadow of length [n], whose minimum distance lower-bounds
nothing and upper-bounds everything: d(shadow) <= d(code), with classical
BCH-style root counting available on the shadow side.  The helpers here keep
every comparison exact; thresholds that the source material phrases with
logarithms are implemented as the equivalent integer inequalities.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Sequence

from .field import BudgetExceeded, Field, FieldError
from .linear import Matrix
from .skewpoly import SkewPoly, cp_find_roots, x_pow_minus
from .constacyclic import ConstacyclicSpec, SkewCyclicCode, enumerate_right_divisors

# dense commutative expansion blows up exponentially in i; hard caps
DENSE_CAP = 1 << 16
MATRIX_CAP = 512
ROOT_SCAN_CAP = 1 << 24
BEST_SCAN_CAP = 1 << 16


@dataclass(frozen=True)
class BracketContext:
    """Base field together with the Frobenius power s >= 1 of the twist."""

    field: Field
    s: int

    def __post_init__(self) -> None:
        if self.s < 1:
            raise FieldError(
                "bracket exponents need s >= 1; s = 0 has no geometric series"
            )

    @property
    def base(self) -> int:
        return self.field.p ** self.s

    def bracket(self, i: int) -> int:
        """[i] = (base^i - 1)/(base - 1) = 1 + base + ... + base^(i-1)."""
        if i < 0:
            raise FieldError(f"bracket index {i} must be >= 0")
        value = (self.base ** i - 1) // (self.base - 1)
        if value > (1 << 62):
            raise BudgetExceeded(f"[{i}] at base {self.base} exceeds the integer cap")
        return value

    def aut(self):
        return self.field.automorphism(self.s)


def _check_ctx_poly(ctx: BracketContext, f: SkewPoly) -> None:
    fa, fb = f.field, ctx.field
    if (fa.p, fa.r, fa.modulus) != (fb.p, fb.r, fb.modulus):
        raise FieldError("polynomial field does not match the bracket context")
    if f.aut.s != ctx.s:
        raise FieldError(
            f"polynomial twist s={f.aut.s} does not match context s={ctx.s}"
        )


def bracket_map(ctx: BracketContext, f: SkewPoly) -> SkewPoly:
    """The commutative image sum a_i x^[i] of f = sum a_i t^i.

    Coefficients are carried verbatim, so Hamming weight is preserved; the
    result lives in the s = 0 (untwisted) ring over the same field.
    """
    _check_ctx_poly(ctx, f)
    aut0 = ctx.field.automorphism(0)
    if f.is_zero():
        return SkewPoly.zero(aut0)
    top = ctx.bracket(f.degree)
    if top > DENSE_CAP:
        raise BudgetExceeded(
            f"dense bracket image of degree [{f.degree}] = {top} exceeds the cap"
        )
    coeffs = [0] * (top + 1)
    for i, c in enumerate(f.coeffs):
        if c:
            coeffs[ctx.bracket(i)] = c
    return SkewPoly(aut0, coeffs)


@dataclass(frozen=True)
class BracketCode:
    """The alpha-cyclic shadow of a skew constacyclic code."""

    ctx: BracketContext
    source_spec: ConstacyclicSpec
    source_gen: SkewPoly
    spec: ConstacyclicSpec       # commutative, length [n]
    gen: SkewPoly                # bracket image of the source generator
    code: SkewCyclicCode | None  # None when the matrix was not materialized

    @property
    def length(self) -> int:
        return self.spec.n

    @property
    def dim(self) -> int:
        return self.spec.n - self.gen.degree


def bracket_code(
    cspec: ConstacyclicSpec, g: SkewPoly, build_matrix: bool = True
) -> BracketCode:
    """Shadow code of length [n] generated by bracket_map(g).

    The divisibility transfer (bracket image divides x^[n] - alpha in the
    plain polynomial ring) is verified by an actual division, never assumed;
    a failure would contradict the transfer theorem and raises with the full
    reproduction data.  Pass build_matrix=False to skip materializing the
    generator matrix when [n] is large and only the arithmetic is needed.
    """
    if cspec.aut.s == 0:
        raise FieldError("the bracket construction needs a genuinely twisted ring")
    ctx = BracketContext(cspec.field, cspec.aut.s)
    if not g.right_divides(x_pow_minus(cspec.aut, cspec.n, cspec.alpha)):
        raise FieldError("g does not right-divide x^n - alpha")
    image = bracket_map(ctx, g)
    big_n = ctx.bracket(cspec.n)
    aut0 = cspec.field.automorphism(0)
    modulus = x_pow_minus(aut0, big_n, cspec.alpha)
    _, rem = modulus.right_divmod(image)
    if not rem.is_zero():
        raise AssertionError(
            "divisibility transfer failed: bracket image does not divide "
            f"x^{big_n} - alpha; GF({cspec.field.q}) modulus "
            f"{cspec.field.modulus}, s={ctx.s}, n={cspec.n}, "
            f"alpha digit {cspec.field.digit_encode(cspec.alpha)}, "
            f"g digits {g.to_digits()}, image digits {image.to_digits()}"
        )
    shadow_spec = ConstacyclicSpec(big_n, cspec.alpha, aut0)
    code = None
    if build_matrix:
        if big_n > MATRIX_CAP:
            raise BudgetExceeded(
                f"[n] = {big_n} exceeds the matrix cap; "
                "pass build_matrix=False for arithmetic-only use"
            )
        code = SkewCyclicCode(shadow_spec, image)
    return BracketCode(ctx, cspec, g, shadow_spec, image, code)


@dataclass(frozen=True)
class TransferReport:
    d_bracket: int
    d_skew: int
    inequality_holds: bool
    equality: bool
    witness: tuple[int, ...] | None  # a minimal-weight shadow codeword
                                     # supported on bracket exponents


def distance_transfer(
    cspec: ConstacyclicSpec, g: SkewPoly, budget: int | None = None
) -> TransferReport:
    """Exact d of code and shadow, asserting d(shadow) <= d(code).

    On equality the skew side hands over the witness: any minimal-weight
    skew codeword maps, weight for weight, to a shadow codeword supported
    on the bracket exponents, realizing the equality criterion.
    """
    shadow = bracket_code(cspec, g, build_matrix=True)
    skew = SkewCyclicCode(cspec, g)
    kwargs = {} if budget is None else {"budget": budget}
    d_b = shadow.code.code.min_weight(**kwargs)
    d_s = skew.code.min_weight(**kwargs)
    if d_b > d_s:
        raise AssertionError(
            f"distance transfer violated: d(shadow)={d_b} > d(code)={d_s} for "
            f"g digits {g.to_digits()}, n={cspec.n}"
        )
    witness = None
    if d_b == d_s:
        ctx = shadow.ctx
        _, word = skew.code.min_weight_word(**kwargs)
        image = bracket_map(ctx, SkewPoly(cspec.aut, list(word)))
        padded = list(image.coeffs) + [0] * (shadow.length - len(image.coeffs))
        if not shadow.code.code.contains(padded):
            raise AssertionError(
                "equality witness escaped the shadow code; divisibility "
                f"transfer is inconsistent for g digits {g.to_digits()}"
            )
        witness = tuple(padded)
    return TransferReport(d_b, d_s, d_b <= d_s, d_b == d_s, witness)


@dataclass(frozen=True)
class BchBoundQuery:
    """Root-run query on the shadow of a skew constacyclic code.

    The shadow's roots live among the powers of omega, a generator of the
    multiplicative group of GF(q^[k]); the stride c must be invertible
    modulo that group order, and the group must be big enough to see all
    [n] shadow positions: q^[k] - 1 >= [n], the integer form of the
    logarithmic threshold.
    """

    n: int
    alpha: int
    g: SkewPoly
    c: int = 1
    l: int = 0

    def context(self) -> BracketContext:
        return BracketContext(self.g.field, self.g.aut.s)

    def validate(self) -> tuple[int, int]:
        """Returns ([k], group order) after checking every precondition."""
        ctx = self.context()
        if self.l < 0:
            raise FieldError(f"offset l={self.l} must be >= 0")
        k = self.n - self.g.degree
        if k < 1:
            raise FieldError("generator degree leaves no dimension")
        bk = ctx.bracket(k)
        order = self.g.field.q ** bk - 1
        if order > ROOT_SCAN_CAP:
            raise BudgetExceeded(
                f"GF(q^[{k}]) has group order {order}, beyond the root-scan cap"
            )
        if order < ctx.bracket(self.n):
            raise FieldError(
                f"size condition fails: q^[k] - 1 = {order} < [n] = "
                f"{ctx.bracket(self.n)}"
            )
        if gcd(self.c, order) != 1:
            raise FieldError(f"stride c={self.c} shares a factor with {order}")
        return bk, order


def _shadow_roots(query: BchBoundQuery) -> tuple[int, set[int]]:
    """Group order and the exponent set of the shadow generator's roots."""
    bk, order = query.validate()
    cspec = ConstacyclicSpec(query.n, query.alpha, query.g.aut)
    shadow = bracket_code(cspec, query.g, build_matrix=False)
    ext, embed = query.g.field.extension(bk)
    roots = cp_find_roots(shadow.gen, ext, embed, cap=ROOT_SCAN_CAP)
    return order, roots


def _run_length(order: int, roots: set[int], l: int, c: int) -> int:
    run = 0
    while run < order and (l + c * run) % order in roots:
        run += 1
    return run


def bch_bound(query: BchBoundQuery) -> int:
    """Delta = 1 + length of the root run omega^l, omega^(l+c), ...

    Consecutive (in stride c) roots of the shadow generator force minimum
    distance >= Delta on the skew side, exactly as consecutive roots do for
    classical BCH codes.  Delta = 1 is the vacuous bound.
    """
    order, roots = _shadow_roots(query)
    return 1 + _run_length(order, roots, query.l, query.c)


def best_bch_bound(
    query: BchBoundQuery, strides: Sequence[int] | None = None
) -> tuple[int, int, int]:
    """(Delta, l, c) maximizing the run over the offsets and strides.

    A run longer than zero must start at a root, so only root exponents
    are tried as offsets.  By default every stride coprime to the group
    order is swept, which is refused beyond BEST_SCAN_CAP; passing an
    explicit stride list (classically (1,)) keeps large orders feasible.
    """
    if strides is None:
        _, order = query.validate()
        if order > BEST_SCAN_CAP:
            raise BudgetExceeded(
                f"stride sweep over group order {order} exceeds the cap; "
                "pass explicit strides, e.g. (1,)"
            )
        strides = [c for c in range(1, order) if gcd(c, order) == 1]
    order, roots = _shadow_roots(query)
    best = (1, query.l, query.c)
    for c in strides:
        if gcd(c, order) != 1:
            raise FieldError(f"stride c={c} shares a factor with {order}")
        for l in sorted(roots):
            delta = 1 + _run_length(order, roots, l, c)
            if delta > best[0]:
                best = (delta, l, c)
    return best


def vandermonde_full_rank(
    ctx: BracketContext, k: int, n: int, omega: int | None = None
) -> bool:
    """Rank test of the [n] x [n] Vandermonde on omega, omega^2, ..., omega^[n].

    Full rank is equivalent to the integer inequality [n] <= q^[k] - 1
    (distinct nodes), and the equivalence is asserted, not trusted.
    """
    bn = ctx.bracket(n)
    bk = ctx.bracket(k)
    if bn > MATRIX_CAP:
        raise BudgetExceeded(f"[n] = {bn} exceeds the matrix cap")
    ext, _ = ctx.field.extension(bk)
    if omega is None:
        omega = ext.generator
    elif ext.order(omega) != ext.q - 1:
        raise FieldError("omega does not generate the multiplicative group")
    nodes = [ext.pow(omega, j + 1) for j in range(bn)]
    rows = []
    for i in range(bn):
        rows.append(tuple(ext.pow(node, i) for node in nodes))
    full = Matrix(ext, rows).rank() == bn
    if full != (bn <= ext.q - 1):
        raise AssertionError(
            f"Vandermonde rank disagrees with the size inequality: [n]={bn}, "
            f"group order {ext.q - 1}"
        )
    return full


@dataclass(frozen=True)
class MdsInstance:
    n: int
    alpha_digit: int
    g_digits: tuple[int, ...]
    shadow_length: int
    shadow_dim: int
    shadow_d: int
    singleton: int  # [n] - dim + 1

    @property
    def is_mds(self) -> bool:
        return self.shadow_d == self.singleton


def mds_scan(
    ctx: BracketContext, n_max: int, alpha_set: Sequence[int], min_degree: int = 2
) -> list[MdsInstance]:
    """Shadow codes with n <= n_max and deg g >= 2 never meet Singleton.

    The strictness argument runs through [deg g] > deg g, which holds for
    every degree except 1 ([1] = 1).  Degree-1 generators genuinely escape
    it: their shadows are parity-check codes [m, m-1, 2], which are MDS,
    so the scan covers the proven domain deg g >= min_degree = 2 and
    asserts no instance in it meets the bound.
    """
    if min_degree < 2:
        raise FieldError(
            "degree-1 shadows are parity-check codes and genuinely MDS; "
            "the Singleton strictness only holds from degree 2 up"
        )
    aut = ctx.aut()
    F = ctx.field
    report = []
    for n in range(2, n_max + 1):
        for alpha in alpha_set:
            cspec = ConstacyclicSpec(n, alpha, aut)
            degrees = [d for d in range(min_degree, n)]
            if not degrees:
                continue
            for g in enumerate_right_divisors(cspec, degrees=degrees):
                shadow = bracket_code(cspec, g, build_matrix=True)
                d = shadow.code.code.min_weight()
                inst = MdsInstance(
                    n,
                    F.digit_encode(alpha),
                    g.to_digits(),
                    shadow.length,
                    shadow.dim,
                    d,
                    shadow.length - shadow.dim + 1,
                )
                if inst.is_mds:
                    raise AssertionError(
                        f"shadow code met the Singleton bound: {inst}"
                    )
                report.append(inst)
    return report
