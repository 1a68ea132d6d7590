"""Skew polynomials over GF(p^r) twisted by a power of Frobenius.

Multiplication follows the Ore rule ``x * b = theta(b) * x``, so
``(a x^i)(b x^j) = a theta^i(b) x^(i+j)``.  With the identity automorphism
(s = 0) everything here collapses to the ordinary commutative polynomial ring
and the classical constacyclic theory.

The ring is left- and right-Euclidean; both divisions are implemented.  Only
right division is needed to recognise generator polynomials, left division
produces the cofactor used to build dual generators.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .field import Automorphism, BudgetExceeded, Field, FieldError


class SkewPoly:
    """Immutable skew polynomial: coefficient tuple (ascending) + twist."""

    __slots__ = ("field", "aut", "coeffs")

    def __init__(self, aut: Automorphism, coeffs: Iterable[int]):
        field = aut.field
        cs = [field.check(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "aut", aut)
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *_):  # pragma: no cover
        raise AttributeError("SkewPoly is immutable")

    # -- constructors

    @classmethod
    def zero(cls, aut: Automorphism) -> "SkewPoly":
        return cls(aut, ())

    @classmethod
    def one(cls, aut: Automorphism) -> "SkewPoly":
        return cls(aut, (1,))

    @classmethod
    def monomial(cls, aut: Automorphism, deg: int, coeff: int = 1) -> "SkewPoly":
        return cls(aut, (0,) * deg + (coeff,))

    @classmethod
    def from_digits(cls, aut: Automorphism, digits: Sequence[int]) -> "SkewPoly":
        field = aut.field
        return cls(aut, [field.digit_decode(d) for d in digits])

    # -- basic queries

    @property
    def degree(self) -> int | None:
        """Degree, or None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == self.field.one

    def constant_term(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def leading(self) -> int:
        if not self.coeffs:
            raise FieldError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def coeff(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def to_digits(self) -> tuple[int, ...]:
        return tuple(self.field.digit_encode(c) for c in self.coeffs)

    # -- equality / hashing / rendering

    def _same_ring(self, other: "SkewPoly") -> None:
        if self.field != other.field or self.aut.s != other.aut.s:
            raise FieldError("mixed fields or automorphisms in skew polynomial arithmetic")

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, SkewPoly)
            and self.field == other.field
            and self.aut.s == other.aut.s
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.field, self.aut.s, self.coeffs))

    def __repr__(self) -> str:
        return f"SkewPoly(s={self.aut.s}, {render_poly(self)!r})"

    # -- ring operations

    def __add__(self, other: "SkewPoly") -> "SkewPoly":
        self._same_ring(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = F.add(out[i], c)
        return SkewPoly(self.aut, out)

    def __neg__(self) -> "SkewPoly":
        F = self.field
        return SkewPoly(self.aut, [F.neg(c) for c in self.coeffs])

    def __sub__(self, other: "SkewPoly") -> "SkewPoly":
        return self + (-other)

    def scale(self, c: int) -> "SkewPoly":
        """Left multiplication by the scalar c."""
        F = self.field
        return SkewPoly(self.aut, [F.mul(c, a) for a in self.coeffs])

    def __mul__(self, other: "SkewPoly") -> "SkewPoly":
        self._same_ring(other)
        if self.is_zero() or other.is_zero():
            return SkewPoly.zero(self.aut)
        F, aut = self.field, self.aut
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, fi in enumerate(self.coeffs):
            if fi == 0:
                continue
            for j, gj in enumerate(other.coeffs):
                if gj:
                    out[i + j] = F.add(out[i + j], F.mul(fi, aut.apply(gj, i)))
        return SkewPoly(self.aut, out)

    def left_monomial_mul(self, deg: int, coeff: int = 1) -> "SkewPoly":
        """(coeff * x^deg) * self, the twist applied to our coefficients."""
        F, aut = self.field, self.aut
        out = [0] * deg + [F.mul(coeff, aut.apply(c, deg)) for c in self.coeffs]
        return SkewPoly(self.aut, out)

    def monic(self) -> "SkewPoly":
        if self.is_zero():
            raise FieldError("cannot normalise the zero polynomial")
        lc = self.leading()
        if lc == self.field.one:
            return self
        return self.scale(self.field.inv(lc))

    # -- division

    def right_divmod(self, g: "SkewPoly") -> tuple["SkewPoly", "SkewPoly"]:
        """(q, r) with self = q*g + r and deg r < deg g."""
        self._same_ring(g)
        if g.is_zero():
            raise FieldError("division by the zero polynomial")
        F, aut = self.field, self.aut
        dg = g.degree
        rem = list(self.coeffs)
        if len(rem) - 1 < dg:
            return SkewPoly.zero(self.aut), self
        quo = [0] * (len(rem) - dg)
        g_lead = g.leading()
        d = len(rem) - 1
        while d >= dg:
            c = rem[d]
            if c:
                e = d - dg
                t = F.mul(c, F.inv(aut.apply(g_lead, e)))
                quo[e] = t
                for j, gj in enumerate(g.coeffs):
                    if gj:
                        rem[e + j] = F.sub(rem[e + j], F.mul(t, aut.apply(gj, e)))
            d -= 1
        return SkewPoly(self.aut, quo), SkewPoly(self.aut, rem[:dg])

    def left_divmod(self, g: "SkewPoly") -> tuple["SkewPoly", "SkewPoly"]:
        """(q, r) with self = g*q + r and deg r < deg g."""
        self._same_ring(g)
        if g.is_zero():
            raise FieldError("division by the zero polynomial")
        F, aut = self.field, self.aut
        dg = g.degree
        rem = list(self.coeffs)
        if len(rem) - 1 < dg:
            return SkewPoly.zero(self.aut), self
        quo = [0] * (len(rem) - dg)
        g_lead_inv = F.inv(g.leading())
        d = len(rem) - 1
        while d >= dg:
            c = rem[d]
            if c:
                e = d - dg
                t = aut.apply(F.mul(g_lead_inv, c), -dg)
                quo[e] = t
                for j, gj in enumerate(g.coeffs):
                    if gj:
                        rem[e + j] = F.sub(rem[e + j], F.mul(gj, aut.apply(t, j)))
            d -= 1
        return SkewPoly(self.aut, quo), SkewPoly(self.aut, rem[:dg])

    def right_divides(self, f: "SkewPoly") -> bool:
        """True when f = q * self for some q."""
        return f.right_divmod(self)[1].is_zero()

    def mod_x_pow_minus(self, n: int, alpha: int) -> "SkewPoly":
        """Canonical representative modulo the left ideal of x^n - alpha.

        Folds a*x^(n+j) down to a*theta^j(alpha)*x^j; agrees with the
        remainder of right division by x^n - alpha.
        """
        F, aut = self.field, self.aut
        if F.check(alpha) == 0:
            raise FieldError("alpha must be nonzero")
        if n < 1:
            raise FieldError("modulus degree must be >= 1")
        c = list(self.coeffs)
        for d in range(len(c) - 1, n - 1, -1):
            v = c[d]
            if v:
                j = d - n
                c[j] = F.add(c[j], F.mul(v, aut.apply(alpha, j)))
                c[d] = 0
        return SkewPoly(self.aut, c[:n])

    # -- derived constructions

    def reciprocal(self) -> "SkewPoly":
        """Monic skew reciprocal: theta^d(h_0)^(-1) * sum theta^i(h_(d-i)) x^i.

        Requires a nonzero constant term; the reciprocal of a generator of a
        code is a generator of the mirrored code and drives dual generators.
        """
        if self.is_zero():
            raise FieldError("zero polynomial has no reciprocal")
        h = self.coeffs
        if h[0] == 0:
            raise FieldError("reciprocal needs a nonzero constant term")
        F, aut = self.field, self.aut
        d = len(h) - 1
        out = [aut.apply(h[d - i], i) for i in range(d + 1)]
        scale = F.inv(aut.apply(h[0], d))
        return SkewPoly(self.aut, [F.mul(scale, c) for c in out])

    def evaluate(self, point: int, target: Field | None = None, embed=None) -> int:
        """Horner evaluation; commutative polynomials only (s = 0).

        With `target`/`embed` given, coefficients are pushed through `embed`
        and the evaluation happens in `target` (used for root scans in
        extension fields).
        """
        if self.aut.s != 0:
            raise FieldError("evaluation is only defined for commutative polynomials")
        F = target if target is not None else self.field
        emb = embed if embed is not None else (lambda a: a)
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, point), emb(c))
        return acc


def x_pow_minus(aut: Automorphism, n: int, alpha: int) -> SkewPoly:
    """The modulus polynomial x^n - alpha."""
    field = aut.field
    if field.check(alpha) == 0:
        raise FieldError("alpha must be a unit")
    if n < 1:
        raise FieldError("n must be >= 1")
    coeffs = [field.neg(alpha)] + [0] * (n - 1) + [1]
    return SkewPoly(aut, coeffs)


def cp_find_roots(
    f: SkewPoly,
    ext: Field,
    embed,
    omega: int | None = None,
    cap: int = 1 << 24,
) -> set[int]:
    """Exponents e with f(omega^e) = 0, for commutative f over a subfield.

    Scans the cyclic group generated by omega inside `ext`; omega defaults to
    the extension's primitive element.  The scan is capped to keep runtimes
    at desk scale.
    """
    if f.aut.s != 0:
        raise FieldError("root scan needs a commutative polynomial")
    if omega is None:
        omega = ext.generator
    n = ext.order(omega)
    if n > cap:
        raise BudgetExceeded(f"group order {n} exceeds root-scan cap {cap}")
    coeffs = [embed(c) for c in f.coeffs]
    roots: set[int] = set()
    point = ext.one
    for e in range(n):
        acc = 0
        for c in reversed(coeffs):
            acc = ext.add(ext.mul(acc, point), c)
        if acc == 0:
            roots.add(e)
        point = ext.mul(point, omega)
    return roots


def render_poly(f: SkewPoly, var: str = "x") -> str:
    """Human-readable sum like '1 + w*x^2 + x^6' (digit names for elements)."""
    if f.is_zero():
        return "0"
    F = f.field
    parts = []
    for i, c in enumerate(f.coeffs):
        if c == 0:
            continue
        d = F.digit_encode(c)
        if F.r == 1:
            name = str(c)
        elif d == 1:
            name = "1"
        elif d == 2:
            name = "w"
        else:
            name = f"w^{d - 1}"
        if i == 0:
            parts.append(name)
        else:
            xs = var if i == 1 else f"{var}^{i}"
            parts.append(xs if name == "1" else f"{name}*{xs}")
    return " + ".join(parts)
