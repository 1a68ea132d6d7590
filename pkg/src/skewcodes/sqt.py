"""Companion orbits, parity-check matrices and 1-generator SQT codes.

The companion matrix T_g of a monic degree-k skew polynomial induces the
semi-linear map tau = Theta o T_g on row vectors of F_q^k.  Iterating the
start point P = (1,0,...,0) writes down a parity-check matrix of the skew
constacyclic code of g column by column; iterating further points of
P^(k-1)(F_q) and concatenating the blocks assembles the generator matrix of
a 1-generator skew quasi-twisted code, [g^(n_1)] + P_2^(n_2) + ... in the
compact notation used for the code tables.

Points are tracked projectively (first nonzero coordinate normalized to 1)
for orbit bookkeeping, but assembled matrices use the literal start vectors:
the displayed fixtures scale blocks by the chosen representative, so
normalizing on input would produce an equivalent but entrywise different
matrix.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Sequence

from .field import Automorphism, Field, FieldError
from .linear import LinearCode, Matrix, SemiLinearMap
from .skewpoly import SkewPoly, x_pow_minus


def normalize_point(field: Field, v: Sequence[int]) -> tuple[int, ...]:
    """Scale so the first nonzero coordinate is 1 (canonical representative)."""
    vv = tuple(field.check(e) for e in v)
    for e in vv:
        if e:
            if e == field.one:
                return vv
            inv = field.inv(e)
            return tuple(field.mul(inv, c) for c in vv)
    raise FieldError("zero vector has no projective class")


def projective_points(field: Field, k: int) -> Iterator[tuple[int, ...]]:
    """All normalized points of P^(k-1)(F_q) in canonical order."""
    q = field.q
    for lead in range(k):
        tail_len = k - 1 - lead
        for t in range(q**tail_len):
            tail = []
            v = t
            for _ in range(tail_len):
                v, d = divmod(v, q)
                tail.append(d)
            yield (0,) * lead + (1,) + tuple(reversed(tail))


def companion(g: SkewPoly) -> Matrix:
    """k x k companion matrix: identity superdiagonal, last row -g_0..-g_(k-1)."""
    if g.is_zero() or not g.is_monic():
        raise FieldError("companion matrix needs a monic polynomial")
    k = g.degree
    if k < 1:
        raise FieldError("companion matrix needs degree >= 1")
    F = g.field
    rows = [[0] * k for _ in range(k)]
    for i in range(k - 1):
        rows[i][i + 1] = 1
    for j in range(k):
        rows[k - 1][j] = F.neg(g.coeff(j))
    return Matrix(F, rows)


def companion_map(g: SkewPoly) -> SemiLinearMap:
    """tau = Theta o T_g; needs g_0 != 0 so that T_g is invertible."""
    return SemiLinearMap(g.aut, companion(g))


def orbit(
    tau: SemiLinearMap, start: Sequence[int], cap: int | None = None
) -> tuple[list[tuple[int, ...]], int]:
    """Projective orbit of [start] under tau: (points, length).

    Returns the smallest L > 0 with [start * tau^L] = [start]; the list holds
    the L distinct normalized points visited.
    """
    F = tau.aut.field
    k = tau.dim
    limit = (F.q**k - 1) // (F.q - 1)
    if cap is not None:
        limit = min(limit, cap)
    p0 = normalize_point(F, start)
    pts = [p0]
    p = p0
    for _ in range(limit):
        p = normalize_point(F, tau.apply(p))
        if p == p0:
            return pts, len(pts)
        pts.append(p)
    raise FieldError(f"orbit did not close within {limit} steps")


def all_orbits(tau: SemiLinearMap) -> list[list[tuple[int, ...]]]:
    """Every projective orbit, in canonical order of first-visited point."""
    F = tau.aut.field
    seen: set[tuple[int, ...]] = set()
    out = []
    for p in projective_points(F, tau.dim):
        if p in seen:
            continue
        pts, _ = orbit(tau, p)
        seen.update(pts)
        out.append(pts)
    return out


def vector_iterates(tau: SemiLinearMap, start: Sequence[int], count: int) -> list[tuple[int, ...]]:
    """start, start*tau, ..., start*tau^(count-1) as literal vectors."""
    F = tau.aut.field
    v = tuple(F.check(e) for e in start)
    out = [v]
    for _ in range(count - 1):
        v = tau.apply(v)
        out.append(v)
    return out


def pcm(n: int, g: SkewPoly) -> tuple[Matrix, Matrix, int]:
    """(T_g, H, alpha) for the skew constacyclic code of g in length n.

    H has k = deg g rows; column j is (1,0,...,0) * tau^j.  The twist
    constant alpha is recovered from the closing relation P*tau^n = alpha*P,
    equivalently alpha = x^n mod g, which must be a nonzero constant.
    """
    alpha = derive_alpha(g, n)
    T = companion(g)
    tau = SemiLinearMap(g.aut, T)
    k = g.degree
    e1 = (1,) + (0,) * (k - 1)
    cols = vector_iterates(tau, e1, n)
    F = g.field
    closing = tau.apply(cols[-1])
    assert closing == tuple(F.mul(alpha, e) for e in e1)
    H = Matrix(F, cols).transpose()
    return T, H, alpha


def derive_alpha(g: SkewPoly, n: int) -> int:
    """The unique alpha with g right-dividing x^n - alpha, if any."""
    if g.is_zero() or not g.is_monic() or g.degree < 1:
        raise FieldError("generator must be monic of degree >= 1")
    if g.degree >= n:
        raise FieldError("generator degree must be below the length")
    rem = SkewPoly.monomial(g.aut, n).right_divmod(g)[1]
    if rem.degree not in (None, 0) or rem.constant_term() == 0:
        raise FieldError("x^n mod g is not a nonzero constant; g generates no constacyclic block")
    return rem.constant_term()


# -- quasi-twisted assembly

@dataclass(frozen=True)
class SqtSpec:
    """One quasi-twisted construction: [g^(n_1)] + P_2^(n_2) + ... + P_m^(n_m).

    `points` holds the literal start vectors of blocks 2..m (block 1 always
    starts at (1,0,...,0)); `blocks` holds every n_i including n_1 = N.
    """

    aut: Automorphism
    g: SkewPoly
    N: int
    alpha: int
    points: tuple[tuple[int, ...], ...]
    blocks: tuple[int, ...]

    def __post_init__(self):
        F = self.aut.field
        k = self.g.degree
        if k is None or k < 1 or not self.g.is_monic():
            raise FieldError("block generator must be monic of degree >= 1")
        if self.blocks[0] != self.N:
            raise FieldError("first block length must be N")
        if len(self.blocks) != len(self.points) + 1:
            raise FieldError("one block length per point plus the leading block")
        if F.check(self.alpha) == 0:
            raise FieldError("alpha must be a unit")
        for pt in self.points:
            if len(pt) != k:
                raise FieldError("point coordinate count must equal deg g")
            if not any(F.check(e) for e in pt):
                raise FieldError("zero point")

    @property
    def m(self) -> int:
        return len(self.blocks)

    @property
    def length(self) -> int:
        return sum(self.blocks)

    @property
    def field(self) -> Field:
        return self.aut.field


_GROUP = re.compile(r"^(\d+)\^(\d+)$")
_BRACKET = re.compile(r"^\[(\d+)\]\^(\d+)$")


def parse_shorthand(aut: Automorphism, text: str) -> SqtSpec:
    """Parse '[a_0...a_(k-1)]^N+coords^n_2+...' into an SqtSpec.

    Bracket digits are the low coefficients of g = x^k - sum a_i x^i in
    ascending order; the other groups are literal point coordinate vectors.
    Single-character digits limit this notation to q <= 10.
    """
    F = aut.field
    if F.q > 10:
        raise FieldError("shorthand digits are single characters; q must be <= 10")
    groups = text.replace(" ", "").split("+")
    if not groups:
        raise FieldError("empty shorthand")
    mb = _BRACKET.match(groups[0])
    if not mb:
        raise FieldError(f"malformed leading group {groups[0]!r}; expected [digits]^int")
    bracket_digits = [int(c) for c in mb.group(1)]
    N = int(mb.group(2))
    if any(d >= F.q for d in bracket_digits):
        raise FieldError("digit out of range for the field")
    k = len(bracket_digits)
    coeffs = [F.neg(F.digit_decode(d)) for d in bracket_digits] + [1]
    g = SkewPoly(aut, coeffs)
    if g.degree != k:
        raise FieldError("bracket group does not define a degree-k polynomial")
    alpha = derive_alpha(g, N)
    points = []
    blocks = [N]
    for grp in groups[1:]:
        mg = _GROUP.match(grp)
        if not mg:
            raise FieldError(f"malformed group {grp!r}; expected digits^int")
        digs = [int(c) for c in mg.group(1)]
        if any(d >= F.q for d in digs):
            raise FieldError("digit out of range for the field")
        if len(digs) != k:
            raise FieldError(f"point {grp!r} has {len(digs)} coordinates, expected {k}")
        points.append(tuple(F.digit_decode(d) for d in digs))
        blocks.append(int(mg.group(2)))
    return SqtSpec(aut, g, N, alpha, tuple(points), tuple(blocks))


def emit_shorthand(spec: SqtSpec) -> str:
    F = spec.field
    a_digits = "".join(str(F.digit_encode(F.neg(spec.g.coeff(i)))) for i in range(spec.g.degree))
    parts = [f"[{a_digits}]^{spec.N}"]
    for pt, n_i in zip(spec.points, spec.blocks[1:]):
        parts.append("".join(str(F.digit_encode(e)) for e in pt) + f"^{n_i}")
    return "+".join(parts)


def sqt_assemble(spec: SqtSpec) -> tuple[Matrix, LinearCode]:
    """The k x (sum n_i) block matrix of orbit columns, and its row space.

    Block 1 must close exactly: the orbit of (1,0,...,0) has projective
    length N and P*tau^N = alpha*P as vectors.  Every other block length
    must be a multiple of its point's projective orbit length.
    """
    F = spec.field
    tau = companion_map(spec.g)
    k = spec.g.degree
    e1 = (1,) + (0,) * (k - 1)
    _, L1 = orbit(tau, e1)
    if L1 != spec.N:
        raise FieldError(f"orbit of (1,0,...,0) has length {L1}, not N={spec.N}")
    closing = tau.iterate(e1, spec.N)
    if closing != tuple(F.mul(spec.alpha, e) for e in e1):
        raise FieldError("P*tau^N != alpha*P; inconsistent alpha")
    col_blocks = [vector_iterates(tau, e1, spec.N)]
    for pt, n_i in zip(spec.points, spec.blocks[1:]):
        _, L = orbit(tau, pt)
        if n_i % L:
            raise FieldError(
                f"block length {n_i} is not a multiple of the orbit length {L}"
            )
        col_blocks.append(vector_iterates(tau, pt, n_i))
    cols = [c for block in col_blocks for c in block]
    mat = Matrix(F, cols).transpose()
    return mat, LinearCode(F, mat.rows)


# -- the 1-generator module form

def sqt_one_generator(spec: SqtSpec) -> list[SkewPoly]:
    """Module generators (h*, b_2.h*, ..., b_m.h*) over R/R(x^N - alpha^(-1)).

    h* is the reciprocal of the left cofactor of g in x^N - theta^(-k)(alpha),
    the same polynomial dual_generator produces.  Its shifts span the
    dual-side code, which is alpha^(-1)-twisted, so the residue ring
    carries the inverse unit.  A point P_i = sum_j lambda_j
    e_(j+1) contributes b_i = sum_j lambda_j x^(-j), where x^(-1) advances
    the orbit evaluation one step: coefficient h of x^(-j).c is c_(h+j),
    closed around the end by c_(e+N) = theta^e(alpha) c_e.  When theta
    fixes alpha this is right multiplication by alpha x^(N-1), the ring
    inverse of x; in general the closing twist makes it a different (still
    linear) operator, so it is applied coefficientwise here.

    Two hypotheses make the module equal the assembled matrix code, and
    both are checked up front: the coordinates lambda_j lie in the fixed
    subfield of theta, so they commute with the block shift, and
    theta^j(alpha) = alpha on every support index j, so all blocks wrap
    with the one constant alpha^(-1).
    """
    F, aut = spec.field, spec.aut
    for pt in spec.points:
        for e in pt:
            if not aut.fixes(e):
                raise FieldError(
                    "point coordinate outside the fixed subfield; "
                    "the 1-generator form is only established there"
                )
        for j, lam in enumerate(pt):
            if lam and aut.apply(spec.alpha, j) != spec.alpha:
                raise FieldError(
                    f"theta^{j}(alpha) != alpha on a support index of the point; "
                    "the blocks would wrap with different constants and the "
                    "1-generator form breaks down"
                )
    k = spec.N - spec.g.degree
    c = aut.apply(spec.alpha, -k)
    quo, rem = x_pow_minus(aut, spec.N, c).left_divmod(spec.g)
    if not rem.is_zero():
        raise FieldError(
            "g does not left-divide x^N - theta^(-k)(alpha); no cofactor h"
        )
    hstar = quo.reciprocal()
    N = spec.N
    hv = list(hstar.coeffs) + [0] * (N - len(hstar.coeffs))

    def closed(idx: int) -> int:
        if idx < N:
            return hv[idx]
        return F.mul(aut.apply(spec.alpha, idx - N), hv[idx - N])

    gens = [hstar]
    for pt in spec.points:
        vec = []
        for h in range(N):
            acc = 0
            for j, lam in enumerate(pt):
                if lam:
                    acc = F.add(acc, F.mul(lam, closed(h + j)))
            vec.append(acc)
        gens.append(SkewPoly(aut, vec))
    return gens


def one_generator_code(spec: SqtSpec) -> LinearCode:
    """The module {(r.g_1, ..., r.g_m) : r in R} as a code.

    Left multiplication by x on a residue mod x^N - alpha^(-1) is the
    alpha^(-1)-twisted cyclic shift of its coefficient vector, so the row
    space of the first N simultaneous shifts of the generator row is the
    whole module.
    """
    gens = sqt_one_generator(spec)
    F, aut, N = spec.field, spec.aut, spec.N
    c = F.inv(spec.alpha)
    def shift(b: tuple[int, ...]) -> tuple[int, ...]:
        return (F.mul(c, aut(b[-1])),) + tuple(aut(e) for e in b[:-1])
    blocks = [tuple(g.coeffs) + (0,) * (N - len(g.coeffs)) for g in gens]
    rows = [tuple(e for b in blocks for e in b)]
    for _ in range(N - 1):
        blocks = [shift(b) for b in blocks]
        rows.append(tuple(e for b in blocks for e in b))
    return LinearCode(F, rows)
