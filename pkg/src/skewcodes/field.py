"""Exact arithmetic in finite fields GF(p^r).

Field elements are plain Python ints in ``[0, q)``: the base-p digits of the
integer are the coordinates of the element in the polynomial basis
``1, x, ..., x^(r-1)`` of ``GF(p)[x]/(modulus)``.  A :class:`Field` owns the
modulus and implements all arithmetic; fields with at most ``2**16`` elements
get discrete log/exp tables over a verified primitive element, larger ones
fall back to schoolbook polynomial arithmetic so that fields of desk scale
remain constructible without quadratic tables.

The default modulus comes from a built-in Conway-polynomial table for small
``p^r``, so digit strings and matrices printed here are reproducible against
other computer algebra systems.  Beyond the table the first irreducible monic
polynomial (lower coefficients enumerated in base-p counting order) is used.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator


class FieldError(ValueError):
    """Invalid field construction, element encoding, or operation."""


class BudgetExceeded(RuntimeError):
    """An exact computation would exceed the configured enumeration budget."""


# ------------------------------------------------------------------ integers

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin; exact for every n below 3.3e24."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def factorize(n: int, trial_limit: int = 1_000_000) -> dict[int, int]:
    """Prime factorization by trial division plus a primality-checked cofactor.

    Raises FieldError when a composite cofactor survives trial division; the
    callers that need this (primitive-element search) treat that as a
    desk-scale limit rather than pulling in a general-purpose factorer.
    """
    if n < 1:
        raise FieldError(f"cannot factor {n}")
    out: dict[int, int] = {}
    for p in (2, 3, 5):
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
    f = 7
    # wheel over 7, 11, 13, ... avoiding multiples of 2/3/5 would be nicer;
    # plain odd stepping is fine at this scale
    while f * f <= n and f <= trial_limit:
        while n % f == 0:
            out[f] = out.get(f, 0) + 1
            n //= f
        f += 2
    if n > 1:
        if not is_prime(n):
            raise FieldError(f"composite cofactor {n} beyond factoring limit")
        out[n] = out.get(n, 0) + 1
    return out


# ------------------------------------------------- polynomials over GF(p)
# Coefficient lists are ascending, ints reduced mod p, no trailing zeros.


def _pp_trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _pp_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                if bj:
                    out[i + j] = (out[i + j] + ai * bj) % p
    return _pp_trim(out)


def _pp_divmod(a: list[int], b: list[int], p: int) -> tuple[list[int], list[int]]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    inv_lb = pow(lb, -1, p)
    q = [0] * max(len(a) - db, 0)
    while len(a) - 1 >= db and a:
        c = a[-1] * inv_lb % p
        e = len(a) - 1 - db
        q[e] = c
        for j, bj in enumerate(b):
            if bj:
                a[e + j] = (a[e + j] - c * bj) % p
        _pp_trim(a)
    return q, a


def _pp_powmod(base: list[int], e: int, mod: list[int], p: int) -> list[int]:
    result = [1]
    base = _pp_divmod(base, mod, p)[1]
    while e:
        if e & 1:
            result = _pp_divmod(_pp_mul(result, base, p), mod, p)[1]
        base = _pp_divmod(_pp_mul(base, base, p), mod, p)[1]
        e >>= 1
    return result


def _pp_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = list(a), list(b)
    while b:
        a, b = b, _pp_divmod(a, b, p)[1]
    if a:
        inv = pow(a[-1], -1, p)
        a = [c * inv % p for c in a]
    return a


def is_irreducible(coeffs: tuple[int, ...] | list[int], p: int) -> bool:
    """Rabin's test over GF(p) for a monic polynomial of degree >= 1."""
    f = list(coeffs)
    r = len(f) - 1
    if r < 1 or f[-1] != 1:
        raise FieldError("irreducibility test expects a monic polynomial of degree >= 1")
    if r == 1:
        return True
    x = [0, 1]
    # x^(p^r) == x mod f, and gcd(x^(p^(r/l)) - x, f) == 1 for prime l | r
    for ell in factorize(r):
        h = _pp_powmod(x, p ** (r // ell), f, p)
        h = _pp_trim([(c - d) % p for c, d in zip_longest_zeros(h, x)])
        if len(_pp_gcd(h, f, p)) != 1:
            return False
    h = _pp_powmod(x, p**r, f, p)
    h = _pp_trim([(c - d) % p for c, d in zip_longest_zeros(h, x)])
    return not h


def zip_longest_zeros(a: list[int], b: list[int]) -> Iterator[tuple[int, int]]:
    n = max(len(a), len(b))
    for i in range(n):
        yield (a[i] if i < len(a) else 0, b[i] if i < len(b) else 0)


# Conway polynomials, ascending coefficients, for the sizes this package
# actually exercises plus the rest of the small range.  Every entry is checked
# by the test suite to be irreducible with x primitive.
CONWAY: dict[tuple[int, int], tuple[int, ...]] = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 1, 1, 0, 1),
    (2, 7): (1, 1, 0, 0, 0, 0, 0, 1),
    (2, 8): (1, 0, 1, 1, 1, 0, 0, 0, 1),
    (2, 9): (1, 0, 0, 0, 1, 0, 0, 0, 0, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (3, 4): (2, 0, 0, 2, 1),
    (3, 5): (1, 2, 0, 0, 0, 1),
    (3, 6): (2, 2, 1, 0, 2, 0, 1),
    (5, 2): (2, 4, 1),
    (5, 3): (3, 3, 0, 1),
    (5, 4): (2, 4, 4, 0, 1),
    (7, 2): (3, 6, 1),
    (7, 3): (4, 0, 6, 1),
    (11, 2): (2, 7, 1),
    (13, 2): (2, 12, 1),
    (17, 2): (3, 16, 1),
    (19, 2): (2, 18, 1),
    (23, 2): (5, 21, 1),
}


def default_modulus(p: int, r: int) -> tuple[int, ...]:
    """Conway polynomial when tabulated, else first irreducible monic."""
    if r == 1:
        # x - g for the smallest primitive root g; arithmetic never uses it
        # but it keeps the class-of-x-generates invariant.
        g = _smallest_primitive_root(p)
        return ((-g) % p, 1)
    got = CONWAY.get((p, r))
    if got is not None:
        return got
    for low in range(p**r):
        cand = _int_digits(low, p, r) + [1]
        if is_irreducible(cand, p):
            return tuple(cand)
    raise FieldError(f"no irreducible polynomial found for GF({p}^{r})")  # pragma: no cover


def _smallest_primitive_root(p: int) -> int:
    if p == 2:
        return 1
    fac = factorize(p - 1)
    for g in range(2, p):
        if all(pow(g, (p - 1) // ell, p) != 1 for ell in fac):
            return g
    raise FieldError(f"no primitive root mod {p}")  # pragma: no cover


def _int_digits(n: int, p: int, width: int) -> list[int]:
    out = []
    for _ in range(width):
        n, d = divmod(n, p)
        out.append(d)
    return out


# ------------------------------------------------------------------ fields


class Field:
    """GF(p^r) with explicit modulus, primitive element, and Frobenius maps.

    Elements are ints in [0, q).  The instance is immutable in spirit; all
    tables are built at construction.
    """

    TABLE_LIMIT = 1 << 16
    SIZE_LIMIT = 1 << 62

    def __init__(self, p: int, r: int = 1, modulus: tuple[int, ...] | None = None):
        if not is_prime(p):
            raise FieldError(f"characteristic {p} is not prime")
        if r < 1:
            raise FieldError(f"extension degree {r} must be >= 1")
        q = p**r
        if q > self.SIZE_LIMIT:
            raise FieldError(f"field size {p}^{r} beyond desk-scale limit")
        self.p = p
        self.r = r
        self.q = q
        if modulus is None:
            modulus = default_modulus(p, r)
        modulus = tuple(c % p for c in modulus)
        if len(modulus) != r + 1 or modulus[-1] != 1:
            raise FieldError(f"modulus must be monic of degree {r}")
        if not is_irreducible(modulus, p):
            raise FieldError(f"modulus {modulus} is reducible over GF({p})")
        self.modulus = modulus
        self.zero = 0
        self.one = 1 % q

        self._pp = [p**i for i in range(r + 1)]
        self._exp: list[int] | None = None
        self._log: list[int | None] | None = None
        self._frob_tables: dict[int, list[int]] = {}
        self._unit_order_factors = factorize(q - 1) if q > 2 else {}

        self.generator = self._find_generator()
        if q - 1 and q <= self.TABLE_LIMIT:
            self._build_tables()

    # -- construction internals

    def _raw_mul(self, a: int, b: int) -> int:
        p, r = self.p, self.r
        ca = _int_digits(a, p, r)
        cb = _int_digits(b, p, r)
        prod = _pp_mul(ca, cb, p)
        rem = _pp_divmod(prod, list(self.modulus), p)[1]
        return sum(c * self._pp[i] for i, c in enumerate(rem))

    def _raw_pow(self, a: int, e: int) -> int:
        result, base = self.one, a
        while e:
            if e & 1:
                result = self._raw_mul(result, base)
            base = self._raw_mul(base, base)
            e >>= 1
        return result

    def _order_raw(self, a: int) -> int:
        if a == 0:
            raise FieldError("0 has no multiplicative order")
        n = self.q - 1
        for ell in self._unit_order_factors:
            while n % ell == 0 and self._raw_pow(a, n // ell) == self.one:
                n //= ell
        return n

    def _find_generator(self) -> int:
        if self.q == 2:
            return 1
        for a in range(1, self.q):
            if self._order_raw(a) == self.q - 1:
                return a
        raise FieldError("no primitive element found")  # pragma: no cover

    def _build_tables(self) -> None:
        q = self.q
        exp = [self.one] * (q - 1)
        for i in range(1, q - 1):
            exp[i] = self._raw_mul(exp[i - 1], self.generator)
        log: list[int | None] = [None] * q
        for i, v in enumerate(exp):
            if log[v] is not None:
                raise FieldError("generator order check failed")  # pragma: no cover
            log[v] = i
        self._exp = exp
        self._log = log

    # -- identity

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Field)
            and other.p == self.p
            and other.r == self.r
            and other.modulus == self.modulus
        )

    def __hash__(self) -> int:
        return hash((self.p, self.r, self.modulus))

    def __repr__(self) -> str:
        return f"Field(p={self.p}, r={self.r}, modulus={self.modulus})"

    # -- element checks and codecs

    def check(self, a: int) -> int:
        if not isinstance(a, int) or not 0 <= a < self.q:
            raise FieldError(f"{a!r} is not an element of GF({self.p}^{self.r})")
        return a

    def coeffs(self, a: int) -> tuple[int, ...]:
        """Polynomial-basis coordinates of a, ascending, length r."""
        return tuple(_int_digits(self.check(a), self.p, self.r))

    def from_coeffs(self, coords) -> int:
        coords = list(coords)
        if len(coords) > self.r or any(not 0 <= c < self.p for c in coords):
            raise FieldError(f"bad coordinate vector {coords} for GF({self.p}^{self.r})")
        return sum(c * self._pp[i] for i, c in enumerate(coords))

    def digit_encode(self, a: int) -> int:
        """0 -> 0, 1 -> 1, generator^e -> e+1.  Bijection [0,q) -> [0,q)."""
        self.check(a)
        if a == 0:
            return 0
        return self.log(a) + 1

    def digit_decode(self, d: int) -> int:
        if not 0 <= d < self.q:
            raise FieldError(f"digit {d} out of range for field of size {self.q}")
        if d == 0:
            return 0
        return self.pow(self.generator, d - 1)

    def elements(self) -> Iterator[int]:
        return iter(range(self.q))

    def units(self) -> Iterator[int]:
        return iter(range(1, self.q))

    # -- arithmetic

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.r == 1:
            return (a + b) % self.p
        p, out, mul = self.p, 0, 1
        while a or b:
            out += ((a + b) % p) * mul
            a //= p
            b //= p
            mul *= p
        return out

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        if self.r == 1:
            return (-a) % self.p
        p, out, mul = self.p, 0, 1
        while a:
            out += ((p - a % p) % p) * mul
            a //= p
            mul *= p
        return out

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self._log is not None:
            return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]
        return self._raw_mul(a, b)

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e > 0:
                return 0
            if e == 0:
                return self.one
            raise FieldError("0 has no negative powers")
        if self._log is not None:
            return self._exp[self._log[a] * e % (self.q - 1)]
        if e < 0:
            a = self.inv(a)
            e = -e
        return self._raw_pow(a, e)

    def inv(self, a: int) -> int:
        if a == 0:
            raise FieldError("0 is not invertible")
        if self._log is not None:
            return self._exp[-self._log[a] % (self.q - 1)]
        # extended Euclid over GF(p)[x]
        p = self.p
        r0, r1 = list(self.modulus), _pp_trim(_int_digits(a, p, self.r))
        t0: list[int] = []
        t1: list[int] = [1]
        while r1:
            q, rem = _pp_divmod(r0, r1, p)
            r0, r1 = r1, rem
            t0, t1 = t1, _pp_trim([(c - d) % p for c, d in zip_longest_zeros(t0, _pp_mul(q, t1, p))])
        if len(r0) != 1:
            raise FieldError("modulus is not irreducible")  # pragma: no cover
        scale = pow(r0[0], -1, p)
        t0 = [c * scale % p for c in t0]
        return sum(c * self._pp[i] for i, c in enumerate(t0))

    def log(self, a: int) -> int:
        """Discrete log base generator.  Table-backed fields only."""
        if a == 0:
            raise FieldError("log of 0")
        if self._log is None:
            raise FieldError(f"no log table for field of size {self.q}")
        return self._log[self.check(a)]

    def order(self, a: int) -> int:
        if a == 0:
            raise FieldError("0 has no multiplicative order")
        if self._log is not None:
            n = self.q - 1
            from math import gcd

            return n // gcd(n, self._log[a])
        return self._order_raw(a)

    # -- Frobenius

    def frob_pow_table(self, u: int) -> list[int]:
        """Lookup table for a -> a^(p^u); table-backed fields only."""
        u %= self.r
        tab = self._frob_tables.get(u)
        if tab is None:
            if self._exp is None:
                raise FieldError(f"no Frobenius table for field of size {self.q}")
            q1 = self.q - 1
            pu = pow(self.p, u, q1) if q1 else 0
            tab = [0] * self.q
            for a in range(1, self.q):
                tab[a] = self._exp[self._log[a] * pu % q1]
            self._frob_tables[u] = tab
        return tab

    def frob_pow(self, u: int, a: int) -> int:
        """a^(p^u) for any integer u (negative meaning inverse powers)."""
        u %= self.r
        if a == 0 or u == 0:
            return a
        if self.q <= self.TABLE_LIMIT:
            return self.frob_pow_table(u)[a]
        return self._raw_pow(a, pow(self.p, u))

    def automorphism(self, s: int) -> "Automorphism":
        return Automorphism(self, s)

    # -- subfields and extensions

    def extension(self, m: int) -> tuple["Field", Callable[[int], int]]:
        """GF(p^(r*m)) together with an injective ring homomorphism into it.

        The embedding sends the class of x to a fixed root of this field's
        modulus inside the extension (the root with the smallest integer
        encoding, so repeated runs agree).
        """
        if m < 1:
            raise FieldError(f"extension degree {m} must be >= 1")
        if m == 1:
            return self, lambda a: a
        if self.p ** (self.r * m) > self.SIZE_LIMIT:
            raise FieldError(f"extension GF({self.p}^{self.r * m}) beyond desk-scale limit")
        ext = Field(self.p, self.r * m)
        t = (ext.q - 1) // (self.q - 1)
        # roots of our modulus lie in the unique subfield of order q
        candidates = sorted(ext.pow(ext.generator, t * j) for j in range(self.q - 1))
        beta = None
        for c in candidates:
            acc = 0
            for coef in reversed(self.modulus):
                acc = ext.add(ext.mul(acc, c), coef % self.p)
            if acc == 0:
                beta = c
                break
        if beta is None:
            raise FieldError("no root of modulus in extension")  # pragma: no cover
        powers = [ext.one]
        for _ in range(self.r - 1):
            powers.append(ext.mul(powers[-1], beta))

        def embed(a: int, _powers=tuple(powers), _ext=ext, _self=self) -> int:
            out = 0
            for i, c in enumerate(_self.coeffs(a)):
                if c:
                    out = _ext.add(out, _ext.mul(c, _powers[i]))
            return out

        return ext, embed


@dataclass(frozen=True)
class Automorphism:
    """The field automorphism a -> a^(p^s) of GF(p^r), 0 <= s < r.

    s = 0 is the identity; every skew construction in this package degenerates
    to its commutative classical counterpart under it.
    """

    field: Field
    s: int

    def __post_init__(self) -> None:
        if not 0 <= self.s < self.field.r:
            raise FieldError(f"automorphism exponent {self.s} outside [0, {self.field.r})")

    @property
    def order(self) -> int:
        from math import gcd

        return self.field.r // gcd(self.field.r, self.s) if self.s else 1

    def apply(self, a: int, power: int = 1) -> int:
        """theta^power applied to a; power may be negative."""
        if self.s == 0:
            return a
        u = self.s * (power % self.order) % self.field.r
        return self.field.frob_pow(u, a)

    def __call__(self, a: int) -> int:
        return self.apply(a)

    def fixes(self, a: int) -> bool:
        return self.apply(a) == a

    def fixed_subfield_size(self) -> int:
        from math import gcd

        return self.field.p ** gcd(self.field.r, self.s) if self.s else self.field.q

    def is_identity(self) -> bool:
        return self.s == 0
