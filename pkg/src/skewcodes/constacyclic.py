"""Skew (alpha, theta)-cyclic codes and their dual generators.

A code of length n is skew alpha-cyclic when it is stable under

    (c_0, ..., c_(n-1)) -> (alpha*theta(c_(n-1)), theta(c_0), ..., theta(c_(n-2))),

equivalently when it is R*g / R*(x^n - alpha) for a monic right divisor g of
x^n - alpha in R = F_q[x;theta].  The dimension is n - deg g and the rows
x^i * g give a generator matrix whose i-th row carries theta^i of the
coefficients of g, shifted i places.

Divisor enumeration scans monic candidates with nonzero constant term (a
right divisor of x^n - alpha with alpha a unit cannot be divisible by x).
Degrees above n/2 are reached through duality instead of brute force: the
dual-generator map is a degree-reversing bijection between right divisors of
x^n - alpha and of x^n - alpha^(-1), which turns the exponentially larger
half of the scan into a pushforward of the smaller half.  Every candidate
emitted by either route is certified by an actual division.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Sequence

from .field import Automorphism, BudgetExceeded, Field, FieldError
from .linear import LinearCode, Matrix, SemiLinearMap
from .skewpoly import SkewPoly, x_pow_minus

ENUM_CAP = 1 << 24


@dataclass(frozen=True)
class ConstacyclicSpec:
    """Length, twist constant and automorphism of one constacyclic family."""

    n: int
    alpha: int
    aut: Automorphism

    def __post_init__(self):
        if self.n < 2:
            raise FieldError("length must be at least 2")
        if self.field.check(self.alpha) == 0:
            raise FieldError("alpha must be a unit")

    @property
    def field(self) -> Field:
        return self.aut.field

    def modulus_poly(self) -> SkewPoly:
        return x_pow_minus(self.aut, self.n, self.alpha)

    def inverse_spec(self) -> "ConstacyclicSpec":
        """Same length and twist power, constant alpha^(-1) (the dual side)."""
        return ConstacyclicSpec(self.n, self.field.inv(self.alpha), self.aut)

    def shift(self, v: Sequence[int]) -> tuple[int, ...]:
        if len(v) != self.n:
            raise FieldError("vector length mismatch")
        F, th = self.field, self.aut
        return (F.mul(self.alpha, th(v[-1])),) + tuple(th(e) for e in v[:-1])

    def shift_matrix(self) -> Matrix:
        n, F = self.n, self.field
        rows = [[0] * n for _ in range(n)]
        for i in range(n - 1):
            rows[i][i + 1] = 1
        rows[n - 1][0] = self.alpha
        return Matrix(F, rows)

    def shift_map(self) -> SemiLinearMap:
        return SemiLinearMap(self.aut, self.shift_matrix())


def is_right_divisor(cspec: ConstacyclicSpec, g: SkewPoly) -> bool:
    return cspec.modulus_poly().right_divmod(g)[1].is_zero()


def gen_matrix(cspec: ConstacyclicSpec, g: SkewPoly) -> Matrix:
    """The (n - deg g) x n matrix with rows g, x*g, x^2*g, ... (raw rows)."""
    _check_generator(cspec, g)
    n = cspec.n
    k = n - g.degree
    rows = []
    for i in range(k):
        row = list(g.left_monomial_mul(i).coeffs)
        rows.append(row + [0] * (n - len(row)))
    return Matrix(cspec.field, rows)


def _check_generator(cspec: ConstacyclicSpec, g: SkewPoly) -> None:
    if g.is_zero() or not g.is_monic():
        raise FieldError("generator must be monic")
    if g.aut.s != cspec.aut.s or g.field != cspec.field:
        raise FieldError("generator over the wrong ring")
    if g.degree >= cspec.n:
        raise FieldError("generator degree must be below the length")
    if not is_right_divisor(cspec, g):
        raise FieldError("g is not a right divisor of x^n - alpha")


class SkewCyclicCode:
    """A skew constacyclic code carried by its generator polynomial."""

    __slots__ = ("cspec", "g", "code")

    def __init__(self, cspec: ConstacyclicSpec, g: SkewPoly):
        _check_generator(cspec, g)
        object.__setattr__(self, "cspec", cspec)
        object.__setattr__(self, "g", g)
        object.__setattr__(self, "code", LinearCode(cspec.field, gen_matrix(cspec, g).rows))
        assert self.code.k == cspec.n - g.degree

    def __setattr__(self, *_):  # pragma: no cover
        raise AttributeError("SkewCyclicCode is immutable")

    @property
    def n(self) -> int:
        return self.cspec.n

    @property
    def k(self) -> int:
        return self.cspec.n - self.g.degree

    def gen_rows(self) -> Matrix:
        return gen_matrix(self.cspec, self.g)

    def dual(self) -> "SkewCyclicCode":
        h = dual_generator(self.cspec, self.g)
        return SkewCyclicCode(self.cspec.inverse_spec(), h)

    def __repr__(self) -> str:
        return f"SkewCyclicCode(n={self.n}, k={self.k}, q={self.cspec.field.q})"


def dual_generator(cspec: ConstacyclicSpec, g: SkewPoly) -> SkewPoly:
    """Generator of the dual code: the twisted reciprocal of the cofactor.

    With k = n - deg g, left-divide x^n - theta^(-k)(alpha) by g; the
    quotient's reciprocal is monic of degree k and right-divides
    x^n - alpha^(-1), generating the dual as a skew alpha^(-1)-cyclic code.
    """
    _check_generator(cspec, g)
    th = cspec.aut
    k = cspec.n - g.degree
    c = th.apply(cspec.alpha, -k)
    quo, rem = x_pow_minus(th, cspec.n, c).left_divmod(g)
    if not rem.is_zero():
        raise FieldError("left division left a remainder; inconsistent generator")
    h = quo.reciprocal()
    assert is_right_divisor(cspec.inverse_spec(), h)
    return h


def self_dual_check(scode: SkewCyclicCode) -> bool:
    """C = C-perp; a true result forces n even and alpha^2 = 1."""
    n, k = scode.n, scode.k
    if 2 * k != n:
        return False
    equal = scode.code.same_code(scode.code.dual())
    if equal:
        F = scode.cspec.field
        if n % 2 != 0 or F.mul(scode.cspec.alpha, scode.cspec.alpha) != F.one:
            raise AssertionError(
                "self-dual code with odd length or alpha^2 != 1; "
                f"n={n} alpha={scode.cspec.alpha}"
            )
    return equal


# -- enumeration of right divisors

def enumerate_right_divisors(
    cspec: ConstacyclicSpec,
    degrees: Iterable[int] | None = None,
    workers: int = 1,
    use_duality: bool = True,
    candidate_cap: int = ENUM_CAP,
) -> list[SkewPoly]:
    """All monic right divisors of x^n - alpha of the given degrees.

    Output in canonical order: degree, then digit-lexicographic coefficient
    tuples.  Deterministic for any worker count.
    """
    n, q = cspec.n, cspec.field.q
    degs = sorted(set(degrees)) if degrees is not None else list(range(1, n))
    if any(d < 1 or d > n - 1 for d in degs):
        raise FieldError("divisor degrees must lie in [1, n-1]")
    out: list[SkewPoly] = []
    inv_spec = cspec.inverse_spec()
    for d in degs:
        if use_duality and d > n - d:
            # push degree-(n-d) divisors of x^n - alpha^(-1) through duality
            small = _brute_degree(inv_spec, n - d, workers, candidate_cap)
            found = []
            for gp in small:
                h = dual_generator(inv_spec, gp)
                assert h.degree == d
                if is_right_divisor(cspec, h):
                    found.append(h)
            found = sorted(set(found), key=lambda f: f.to_digits())
        else:
            found = _brute_degree(cspec, d, workers, candidate_cap)
        out.extend(found)
    return out


def _brute_degree(
    cspec: ConstacyclicSpec, d: int, workers: int, candidate_cap: int
) -> list[SkewPoly]:
    q = cspec.field.q
    total = (q - 1) * q ** (d - 1)
    if total > candidate_cap:
        raise BudgetExceeded(
            f"{total} monic degree-{d} candidates exceed cap {candidate_cap}"
        )
    F = cspec.field
    if workers <= 1 or total < 1 << 12:
        coeff_lists = _divisor_scan((F.p, F.r, F.modulus, cspec.aut.s, cspec.n, cspec.alpha, d, 0, total))
    else:
        chunk = -(-total // workers)
        spans = [(lo, min(lo + chunk, total)) for lo in range(0, total, chunk)]
        args = [
            (F.p, F.r, F.modulus, cspec.aut.s, cspec.n, cspec.alpha, d, lo, hi)
            for lo, hi in spans
        ]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            coeff_lists = [c for part in pool.map(_divisor_scan, args) for c in part]
    polys = [SkewPoly(cspec.aut, cs) for cs in coeff_lists]
    return sorted(polys, key=lambda f: f.to_digits())


def _divisor_scan(args) -> list[tuple[int, ...]]:
    from .linear import _worker_field

    p, r, modulus, s, n, alpha, d, lo, hi = args
    F = _worker_field(p, r, modulus)
    aut = F.automorphism(s)
    target = x_pow_minus(aut, n, alpha)
    q = F.q
    tail = q ** (d - 1)
    hits: list[tuple[int, ...]] = []
    for idx in range(lo, hi):
        c0 = 1 + idx // tail
        rest = idx % tail
        coeffs = [c0]
        v = rest
        for _ in range(d - 1):
            v, e = divmod(v, q)
            coeffs.append(e)
        coeffs.append(1)
        g = SkewPoly(aut, coeffs)
        if target.right_divmod(g)[1].is_zero():
            hits.append(g.coeffs)
    return hits
