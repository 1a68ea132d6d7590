"""Seeded bulk checks of the algebra laws.

Each driver runs a fixed number of randomized cases from one seed and
returns (cases_run, failures); a failure is a reproduction string, and
the callers assert the list is empty.  The drivers live outside the
test modules so the per-suite tests and the acceptance gate can share
them without re-rolling the dice differently.
"""

from __future__ import annotations

import random

from skewcodes.constacyclic import ConstacyclicSpec
from skewcodes.field import Field
from skewcodes.linear import LinearCode, Matrix
from skewcodes.skewpoly import SkewPoly
from skewcodes.sqt import all_orbits, companion_map, orbit
from skewcodes.bounds import BracketContext, bracket_map

# one shared pool keeps Field construction out of the per-case loop
def _field_pool() -> list[tuple[Field, int]]:
    pool = []
    for p, r in ((2, 2), (2, 3), (3, 2), (5, 1), (7, 1), (3, 3)):
        F = Field(p, r)
        for s in range(r):
            pool.append((F, s))
    return pool


def field_suite(seed: int, cases: int = 1500) -> tuple[int, list[str]]:
    """Field axioms, Frobenius homomorphism laws, codec round-trips."""
    rng = random.Random(seed)
    pool = _field_pool()
    fails: list[str] = []
    for i in range(cases):
        F, s = rng.choice(pool)
        aut = F.automorphism(s)
        a = rng.randrange(F.q)
        b = rng.randrange(F.q)
        c = rng.randrange(F.q)
        ident = f"case {i}: GF({F.q}) s={s} a={a} b={b} c={c}"
        if F.add(a, b) != F.add(b, a) or F.mul(a, b) != F.mul(b, a):
            fails.append(f"{ident}: commutativity")
        if F.add(F.add(a, b), c) != F.add(a, F.add(b, c)):
            fails.append(f"{ident}: additive associativity")
        if F.mul(F.mul(a, b), c) != F.mul(a, F.mul(b, c)):
            fails.append(f"{ident}: multiplicative associativity")
        if F.mul(a, F.add(b, c)) != F.add(F.mul(a, b), F.mul(a, c)):
            fails.append(f"{ident}: distributivity")
        if F.add(a, F.neg(a)) != 0:
            fails.append(f"{ident}: additive inverse")
        if a and F.mul(a, F.inv(a)) != 1:
            fails.append(f"{ident}: multiplicative inverse")
        if aut(F.add(a, b)) != F.add(aut(a), aut(b)):
            fails.append(f"{ident}: automorphism additivity")
        if aut(F.mul(a, b)) != F.mul(aut(a), aut(b)):
            fails.append(f"{ident}: automorphism multiplicativity")
        if aut.apply(a, aut.order) != a:
            fails.append(f"{ident}: automorphism order")
        if F.digit_decode(F.digit_encode(a)) != a:
            fails.append(f"{ident}: digit codec round-trip")
        e = rng.randrange(-5, 9)
        if a:
            manual = 1
            for _ in range(abs(e)):
                manual = F.mul(manual, a)
            if e < 0:
                manual = F.inv(manual)
            if F.pow(a, e) != manual:
                fails.append(f"{ident}: pow e={e}")
    return cases, fails


def _random_poly(rng: random.Random, F: Field, aut, max_deg: int,
                 monic: bool = False) -> SkewPoly:
    deg = rng.randrange(max_deg + 1)
    coeffs = [rng.randrange(F.q) for _ in range(deg)]
    coeffs.append(1 if monic else rng.randrange(1, F.q))
    return SkewPoly(aut, coeffs)


def skewpoly_suite(seed: int, cases: int = 1200) -> tuple[int, list[str]]:
    """Division identities, ring associativity, the twist rule itself."""
    rng = random.Random(seed)
    pool = _field_pool()
    fails: list[str] = []
    for i in range(cases):
        F, s = rng.choice(pool)
        aut = F.automorphism(s)
        f = _random_poly(rng, F, aut, 6)
        g = _random_poly(rng, F, aut, 3)
        h = _random_poly(rng, F, aut, 2)
        ident = f"case {i}: GF({F.q}) s={s} f={f.to_digits()} g={g.to_digits()}"
        q, rem = f.right_divmod(g)
        if q * g + rem != f:
            fails.append(f"{ident}: right division identity")
        if not rem.is_zero() and rem.degree >= g.degree:
            fails.append(f"{ident}: right remainder degree")
        ql, reml = f.left_divmod(g)
        if g * ql + reml != f:
            fails.append(f"{ident}: left division identity")
        if not reml.is_zero() and reml.degree >= g.degree:
            fails.append(f"{ident}: left remainder degree")
        if (f * g) * h != f * (g * h):
            fails.append(f"{ident}: associativity")
        if f * (g + h) != f * g + f * h:
            fails.append(f"{ident}: left distributivity")
        b = rng.randrange(F.q)
        x = SkewPoly.monomial(aut, 1)
        const = SkewPoly(aut, [b])
        if x * const != SkewPoly(aut, [0, aut(b)]):
            fails.append(f"{ident}: twist rule x*b = theta(b)*x, b={b}")
        if s == 0 and f * g != g * f:
            fails.append(f"{ident}: commutativity at s=0")
    return cases, fails


def linear_suite(seed: int, cases: int = 1000) -> tuple[int, list[str]]:
    """Row-space soundness of rref, dual orthogonality and dimensions."""
    rng = random.Random(seed)
    pool = _field_pool()
    fails: list[str] = []
    for i in range(cases):
        F, _ = rng.choice(pool)
        n = rng.randrange(2, 7)
        m = rng.randrange(1, 5)
        rows = [[rng.randrange(F.q) for _ in range(n)] for _ in range(m)]
        ident = f"case {i}: GF({F.q}) rows={rows}"
        mat = Matrix(F, rows)
        red, pivots = mat.rref()
        if len(pivots) != mat.rank():
            fails.append(f"{ident}: rank != pivot count")
        if any(any(e != 0 for e in red.rows[j]) for j in range(len(pivots), m)):
            fails.append(f"{ident}: nonzero rows below the staircase")
        if not any(any(r) for r in rows):
            continue
        code = LinearCode(F, rows)
        for row in rows:
            if any(row) and not code.contains(row):
                fails.append(f"{ident}: original row outside the row space")
        if code.k == n:
            # the zero code has no representation here; dual() must refuse
            try:
                code.dual()
                fails.append(f"{ident}: dual of the full space did not refuse")
            except Exception:
                pass
            continue
        dual = code.dual()
        if code.k + dual.k != n:
            fails.append(f"{ident}: dim + dual dim != n")
        u = rng.choice(code.basis)
        v = rng.choice(dual.basis)
        acc = 0
        for x, y in zip(u, v):
            acc = F.add(acc, F.mul(x, y))
        if acc != 0:
            fails.append(f"{ident}: dual basis not orthogonal")
        if not dual.dual().same_code(code):
            fails.append(f"{ident}: double dual differs")
    return cases, fails


def orbit_suite(seed: int, cases: int = 1000) -> tuple[int, list[str]]:
    """Orbit partitions of projective space and the closing scalars."""
    rng = random.Random(seed)
    pool = [(F, s) for F, s in _field_pool() if F.q <= 9]
    fails: list[str] = []
    taus = []
    while len(taus) < 40:
        F, s = rng.choice(pool)
        aut = F.automorphism(s)
        deg = rng.randrange(2, 4)
        coeffs = [rng.randrange(1, F.q)]
        coeffs += [rng.randrange(F.q) for _ in range(deg - 1)]
        coeffs.append(1)
        g = SkewPoly(aut, coeffs)
        taus.append((F, g, companion_map(g)))
    done = 0
    for i in range(cases):
        F, g, tau = taus[i % len(taus)]
        k = g.degree
        ident = f"case {i}: GF({F.q}) s={g.aut.s} g={g.to_digits()}"
        if i < len(taus):
            # partition check once per map, point checks for the rest
            orbs = all_orbits(tau)
            total = sum(len(o) for o in orbs)
            expect = (F.q**k - 1) // (F.q - 1)
            if total != expect:
                fails.append(f"{ident}: orbit lengths sum {total} != {expect}")
            if len(set().union(*map(set, orbs))) != total:
                fails.append(f"{ident}: orbits overlap")
        start = tuple(rng.randrange(F.q) for _ in range(k))
        if not any(start):
            start = (1,) + (0,) * (k - 1)
        pts, length = orbit(tau, start)
        if len(pts) != length or len(set(pts)) != length:
            fails.append(f"{ident}: orbit of {start} not simple")
        closing = tau.iterate(start, length)
        lam = None
        for a, b in zip(closing, start):
            if (b == 0) != (a == 0):
                fails.append(f"{ident}: closing support mismatch at {start}")
                break
            if b != 0:
                ratio = F.mul(a, F.inv(b))
                if lam is None:
                    lam = ratio
                elif ratio != lam:
                    fails.append(f"{ident}: closing not scalar at {start}")
                    break
        done += 1
    return done, fails


def bracket_suite(seed: int, cases: int = 1200) -> tuple[int, list[str]]:
    """Bracket growth laws and weight preservation of the exponent map."""
    rng = random.Random(seed)
    pool = [(F, s) for F, s in _field_pool() if s >= 1]
    fails: list[str] = []
    for i in range(cases):
        F, s = rng.choice(pool)
        ctx = BracketContext(F, s)
        aut = F.automorphism(s)
        ident = f"case {i}: GF({F.q}) s={s}"
        j = rng.randrange(1, 12)
        if not ctx.bracket(j) < ctx.bracket(j + 1):
            fails.append(f"{ident}: bracket not increasing at {j}")
        if j >= 2 and not ctx.bracket(j) > j:
            fails.append(f"{ident}: bracket({j}) <= {j}")
        base = ctx.base
        if ctx.bracket(j) != sum(base**t for t in range(j)):
            fails.append(f"{ident}: bracket({j}) closed form")
        f = _random_poly(rng, F, aut, 5)
        image = bracket_map(ctx, f)
        wt_f = sum(1 for c in f.coeffs if c)
        wt_i = sum(1 for c in image.coeffs if c)
        if wt_f != wt_i:
            fails.append(f"{ident}: weight changed under bracket map")
        for e, c in enumerate(f.coeffs):
            if c and image.coeff(ctx.bracket(e)) != c:
                fails.append(f"{ident}: coefficient misplaced at {e}")
        if image.aut.s != 0:
            fails.append(f"{ident}: image not commutative")
    return cases, fails


ALL_SUITES = {
    "field": field_suite,
    "skewpoly": skewpoly_suite,
    "linear": linear_suite,
    "orbit": orbit_suite,
    "bracket": bracket_suite,
}
