"""Command line front end for the skew constacyclic toolkit.

Subcommands mirror the workflows the library exposes: divisor census
(``sd``), dual computation (``dual``), companion/parity-check assembly
(``pcm``), quasi-twisted construction and search (``sqt``), shadow-root
distance bounds (``bound``), the catalog reproduction sweep (``table``),
and a direct minimum-weight query (``minweight``).

Conventions shared by every subcommand: polynomials and moduli are given
as coefficient digit strings in ascending order (comma-separated, or one
character per digit when q <= 10), alpha as a single digit in the field's
digit codec.  Exit codes: 0 success, 1 a requested verification failed,
2 bad input, 3 a computation hit its budget cap.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from dataclasses import dataclass
from typing import Sequence

from .bounds import BchBoundQuery, bch_bound, best_bch_bound
from .catalog import reproduce_all
from .constacyclic import (
    ConstacyclicSpec,
    SkewCyclicCode,
    dual_generator,
    enumerate_right_divisors,
)
from .field import Automorphism, BudgetExceeded, Field, FieldError
from .linear import DEFAULT_BUDGET, Matrix
from .skewpoly import SkewPoly, render_poly
from .sqt import (
    SqtSpec,
    all_orbits,
    companion_map,
    derive_alpha,
    emit_shorthand,
    normalize_point,
    orbit,
    parse_shorthand,
    pcm,
    sqt_assemble,
)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_BAD_INPUT = 2
EXIT_BUDGET = 3


@dataclass(frozen=True)
class CliConfig:
    """Field and run parameters shared by every subcommand."""

    p: int = 2
    r: int = 2
    s: int = 1
    modulus: tuple[int, ...] | None = None
    output: str = "text"
    threads: int = 1
    seed: int | None = None

    def __post_init__(self) -> None:
        # Field() re-checks primality; failing early gives a cleaner message.
        if not 0 <= self.s < self.r:
            raise FieldError(f"need 0 <= s < r, got s={self.s}, r={self.r}")
        if self.threads < 1:
            raise FieldError(f"thread count {self.threads} must be >= 1")
        if self.output not in ("text", "json"):
            raise FieldError(f"unknown output mode {self.output!r}")

    def field(self) -> Field:
        return Field(self.p, self.r, modulus=self.modulus)

    def aut(self, field: Field) -> Automorphism:
        return field.automorphism(self.s)


# -- digit codec helpers

def parse_digit_seq(text: str) -> tuple[int, ...]:
    """'1,0,3' or '103' -> (1, 0, 3).  Compact form needs one char per digit."""
    parts = [t.strip() for t in text.split(",")] if "," in text else list(text.strip())
    if not parts:
        raise FieldError("empty digit string")
    try:
        return tuple(int(t) for t in parts)
    except ValueError:
        raise FieldError(f"bad digit string {text!r}") from None


def parse_poly(aut: Automorphism, text: str) -> SkewPoly:
    digits = parse_digit_seq(text)
    if any(d >= aut.field.q for d in digits):
        raise FieldError(f"digit out of range for GF({aut.field.q}) in {text!r}")
    return SkewPoly.from_digits(aut, digits)


def parse_alpha(field: Field, digit: int) -> int:
    if not 0 <= digit < field.q:
        raise FieldError(f"alpha digit {digit} out of range for GF({field.q})")
    alpha = field.digit_decode(digit)
    if alpha == 0:
        raise FieldError("alpha must be a nonzero field element")
    return alpha


def digit_str(field: Field, digits: Sequence[int]) -> str:
    if field.q <= 10:
        return "".join(str(d) for d in digits)
    return ",".join(str(d) for d in digits)


def poly_digit_str(f: SkewPoly) -> str:
    return digit_str(f.field, f.to_digits())


def matrix_digit_rows(mat: Matrix) -> list[list[int]]:
    return [list(row) for row in mat.to_digit_rows()]


def matrix_lines(mat: Matrix) -> list[str]:
    return [digit_str(mat.field, row) for row in mat.to_digit_rows()]


def code_payload(code, mat: Matrix, d: int | None) -> dict:
    return {"n": code.n, "k": code.k, "d": d, "rows": matrix_digit_rows(mat)}


def leading_one_rows(mat: Matrix) -> Matrix:
    """Each row scaled so its first nonzero entry is 1 (display form)."""
    F = mat.field
    rows = []
    for row in mat.rows:
        pivot = next((e for e in row if e != 0), 0)
        if pivot in (0, 1):
            rows.append(row)
        else:
            inv = F.inv(pivot)
            rows.append(tuple(F.mul(inv, e) for e in row))
    return Matrix(F, rows)


def _emit(cfg: CliConfig, lines: list[str], payload: dict) -> None:
    if cfg.output == "json":
        print(json.dumps(payload, indent=2))
    else:
        for line in lines:
            print(line)


def _fail(cfg: CliConfig, message: str) -> None:
    print(f"error: {message}", file=sys.stderr)
    if cfg.output == "json":
        print(json.dumps({"error": message}, indent=2))


def _min_weight_or_none(code, cfg: CliConfig, budget: int = DEFAULT_BUDGET) -> int | None:
    try:
        return code.min_weight(workers=cfg.threads, budget=budget)
    except BudgetExceeded:
        return None


def _fmt_d(d: int | None) -> str:
    return "?" if d is None else str(d)


# -- subcommands

def cmd_sd(cfg: CliConfig, ns: argparse.Namespace) -> int:
    """All monic right divisors of x^n - alpha in the requested degree band."""
    F = cfg.field()
    aut = cfg.aut(F)
    alpha = parse_alpha(F, ns.alpha)
    cspec = ConstacyclicSpec(ns.n, alpha, aut)
    lo = ns.min_deg if ns.min_deg is not None else 1
    hi = ns.max_deg if ns.max_deg is not None else ns.n - 1
    if not 1 <= lo <= hi <= ns.n - 1:
        raise FieldError(f"degree band {lo}..{hi} outside 1..{ns.n - 1}")
    divisors = enumerate_right_divisors(
        cspec, degrees=range(lo, hi + 1), workers=cfg.threads
    )
    strings = [poly_digit_str(g) for g in divisors]
    lines = list(strings)
    lines.append(f"count: {len(strings)}")
    payload = {
        "n": ns.n,
        "alpha_digit": ns.alpha,
        "s": cfg.s,
        "q": F.q,
        "degrees": [lo, hi],
        "divisors": strings,
        "count": len(strings),
    }
    _emit(cfg, lines, payload)
    return EXIT_OK


def cmd_dual(cfg: CliConfig, ns: argparse.Namespace) -> int:
    """Code and dual from one generator; checks G * H^T = 0 on the way out."""
    F = cfg.field()
    aut = cfg.aut(F)
    alpha = parse_alpha(F, ns.alpha)
    cspec = ConstacyclicSpec(ns.n, alpha, aut)
    g = parse_poly(aut, ns.g)
    scode = SkewCyclicCode(cspec, g)
    h = dual_generator(cspec, g)
    dual = scode.dual()

    # Rows are displayed scaled monic from the left; scaling changes neither
    # the row space nor the zero-product verdict.
    G = leading_one_rows(scode.gen_rows())
    H = leading_one_rows(dual.gen_rows())
    product = G * H.transpose()
    clean = all(e == 0 for row in product.rows for e in row)

    d_code = _min_weight_or_none(scode.code, cfg)
    d_dual = _min_weight_or_none(dual.code, cfg)
    a_inv_digit = F.digit_encode(F.inv(alpha))

    lines = [
        f"code: [{scode.n}, {scode.k}, {_fmt_d(d_code)}] over GF({F.q}), "
        f"alpha digit {ns.alpha}",
        f"g = {render_poly(g)}",
        f"g digits: {poly_digit_str(g)}",
        "generator matrix:",
        *matrix_lines(G),
        f"dual: [{dual.n}, {dual.k}, {_fmt_d(d_dual)}], alpha digit {a_inv_digit}",
        f"h = {render_poly(h)}",
        f"h digits: {poly_digit_str(h)}",
        "parity check matrix:",
        *matrix_lines(H),
        f"G * H^T = 0: {clean}",
    ]
    payload = {
        "alpha_digit": ns.alpha,
        "g_digits": poly_digit_str(g),
        "code": code_payload(scode, G, d_code),
        "dual_alpha_digit": a_inv_digit,
        "h_digits": poly_digit_str(h),
        "dual": code_payload(dual, H, d_dual),
        "zero_product": clean,
    }
    _emit(cfg, lines, payload)
    return EXIT_OK if clean else EXIT_MISMATCH


def cmd_pcm(cfg: CliConfig, ns: argparse.Namespace) -> int:
    """Companion matrix of g and the orbit-column parity check matrix."""
    F = cfg.field()
    aut = cfg.aut(F)
    g = parse_poly(aut, ns.g)
    T, H, alpha = pcm(ns.n, g)
    a_digit = F.digit_encode(alpha)
    lines = [
        f"g = {render_poly(g)}  over GF({F.q}), s={cfg.s}",
        f"alpha digit: {a_digit}",
        "companion matrix:",
        *matrix_lines(T),
        "parity check matrix:",
        *matrix_lines(H),
    ]
    payload = {
        "n": ns.n,
        "g_digits": poly_digit_str(g),
        "alpha_digit": a_digit,
        "companion": matrix_digit_rows(T),
        "parity": matrix_digit_rows(H),
    }
    _emit(cfg, lines, payload)
    return EXIT_OK


def _sqt_search_spec(cfg: CliConfig, aut: Automorphism, m: int, N: int,
                     g: SkewPoly) -> SqtSpec | None:
    """First m-1 length-N orbit representatives in canonical order.

    Replaces random point selection: representatives are scanned in the
    canonical projective order, and --seed (when given) shuffles that list
    deterministically before the picks.  Returns None when too few orbits
    of length N exist.
    """
    F = aut.field
    alpha = derive_alpha(g, N)
    tau = companion_map(g)
    k = g.degree
    e1 = normalize_point(F, (1,) + (0,) * (k - 1))
    reps = []
    for orb in all_orbits(tau):
        if len(orb) == N and e1 not in orb:
            reps.append(orb[0])
    if len(reps) < m - 1:
        return None
    if cfg.seed is not None:
        random.Random(cfg.seed).shuffle(reps)
    points = tuple(reps[: m - 1])
    return SqtSpec(aut, g, N, alpha, points, (N,) * m)


def cmd_sqt(cfg: CliConfig, ns: argparse.Namespace) -> int:
    """Quasi-twisted construction: exact from shorthand, or orbit search."""
    F = cfg.field()
    aut = cfg.aut(F)
    if len(ns.args) == 1:
        spec = parse_shorthand(aut, ns.args[0])
    elif len(ns.args) == 3:
        try:
            m, N = int(ns.args[0]), int(ns.args[1])
        except ValueError:
            raise FieldError(
                f"search mode takes integers m N, got {ns.args[:2]!r}"
            ) from None
        if m < 1 or N < 1:
            raise FieldError("m and N must be positive")
        g = parse_poly(aut, ns.args[2])
        if g.degree is None or g.degree < 1 or not g.is_monic():
            raise FieldError("g must be monic of degree >= 1")
        e1 = (1,) + (0,) * (g.degree - 1)
        _, L1 = orbit(companion_map(g), e1)
        if L1 != N:
            raise FieldError(f"orbit of (1,0,...,0) has length {L1}, not N={N}")
        spec = _sqt_search_spec(cfg, aut, m, N, g)
        if spec is None:
            message = f"There are not enough orbits of length {N}"
            if cfg.output == "json":
                print(json.dumps({"error": message}, indent=2))
            else:
                print(message)
            return EXIT_BAD_INPUT
    else:
        raise FieldError("sqt takes either a shorthand string or: m N g_digits")

    mat, code = sqt_assemble(spec)
    d = _min_weight_or_none(code, cfg)
    shorthand = emit_shorthand(spec)
    lines = [
        f"skew quasi twisted code of type: [{spec.length}, {code.k}, {_fmt_d(d)}] "
        f"over GF({F.q})",
        f"g = {render_poly(spec.g)}",
        f"shorthand: {shorthand}",
        "generator matrix:",
        *matrix_lines(mat),
    ]
    payload = {
        "type": [spec.length, code.k, d],
        "shorthand": shorthand,
        "spec": {
            "g_digits": list(spec.g.to_digits()),
            "N": spec.N,
            "alpha_digit": F.digit_encode(spec.alpha),
            "points": [[F.digit_encode(e) for e in pt] for pt in spec.points],
            "blocks": list(spec.blocks),
        },
        "rows": matrix_digit_rows(mat),
    }
    _emit(cfg, lines, payload)
    return EXIT_OK


def cmd_bound(cfg: CliConfig, ns: argparse.Namespace) -> int:
    """Shadow-root distance bound, compared against exact d when feasible."""
    F = cfg.field()
    aut = cfg.aut(F)
    alpha = parse_alpha(F, ns.alpha)
    g = parse_poly(aut, ns.g)
    query = BchBoundQuery(ns.n, alpha, g, c=ns.c or 1, l=ns.l or 0)
    bk, order = query.validate()

    if ns.l is None and ns.c is None:
        delta, l, c = best_bch_bound(query)
    else:
        l, c = query.l, query.c
        delta = bch_bound(query)
    run = [(l + i * c) % order for i in range(delta - 1)]

    cspec = ConstacyclicSpec(ns.n, alpha, aut)
    scode = SkewCyclicCode(cspec, g)
    d = _min_weight_or_none(scode.code, cfg, budget=ns.budget)
    verified = None if d is None else delta <= d

    lines = [
        f"bound query: n={ns.n}, alpha digit {ns.alpha}, "
        f"g digits {poly_digit_str(g)}, s={cfg.s} over GF({F.q})",
        f"code dimension k = {scode.k}, [k] = {bk}, root group order = {order}",
        f"delta = {delta}  (l={l}, c={c})",
        f"shadow root run: {run}",
        f"exact d = {_fmt_d(d)}" + ("  (budget exceeded)" if d is None else ""),
        f"delta <= d: {verified}",
    ]
    payload = {
        "n": ns.n,
        "alpha_digit": ns.alpha,
        "g_digits": poly_digit_str(g),
        "k": scode.k,
        "bracket_k": bk,
        "order": order,
        "delta": delta,
        "l": l,
        "c": c,
        "run": run,
        "d": d,
        "verified": verified,
    }
    _emit(cfg, lines, payload)
    if verified is False:
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_table(cfg: CliConfig, ns: argparse.Namespace) -> int:
    """Reproduce every catalog row from its printed data; nonzero on misses."""
    results = reproduce_all(workers=cfg.threads)
    lines = []
    rows_payload = []
    matched = 0
    for i, res in enumerate(results, start=1):
        row = res.row
        claimed = list(row.claimed)
        att = res.chosen
        computed = list(att.outcome) if att and att.outcome else None
        reading = att.label if att else "none"
        ok = res.match
        matched += ok
        verdict = "ok" if ok else "MISMATCH"
        comp_s = computed if computed else "unbuildable"
        lines.append(
            f"{i:2d}  GF({row.p ** row.r})  claimed {claimed}  "
            f"computed {comp_s}  {verdict}  [{reading}]"
        )
        if not ok and row.note:
            lines.append(f"      note: {row.note}")
        rows_payload.append(
            {
                "row": i,
                "q": row.p ** row.r,
                "printed": row.printed,
                "claimed": claimed,
                "computed": computed,
                "reading": reading,
                "match": ok,
                "match_nk": res.match_nk,
                "match_d": res.match_d,
                "note": row.note,
            }
        )
    lines.append(f"matched {matched} of {len(results)} rows")
    payload = {"rows": rows_payload, "matched": matched, "total": len(results)}
    _emit(cfg, lines, payload)
    return EXIT_OK if matched == len(results) else EXIT_MISMATCH


def cmd_minweight(cfg: CliConfig, ns: argparse.Namespace) -> int:
    """Exact minimum weight of the code generated by g."""
    F = cfg.field()
    aut = cfg.aut(F)
    alpha = parse_alpha(F, ns.alpha)
    cspec = ConstacyclicSpec(ns.n, alpha, aut)
    g = parse_poly(aut, ns.g)
    scode = SkewCyclicCode(cspec, g)
    d = scode.code.min_weight(workers=cfg.threads, budget=ns.budget)
    lines = [f"[{scode.n}, {scode.k}, {d}] over GF({F.q})"]
    payload = {
        "n": scode.n,
        "k": scode.k,
        "d": d,
        "alpha_digit": ns.alpha,
        "g_digits": poly_digit_str(g),
    }
    _emit(cfg, lines, payload)
    return EXIT_OK


# -- wiring

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="skewcodes",
        description="Skew constacyclic and quasi-twisted codes over GF(p^r), "
        "with theta the s-th Frobenius power.",
    )
    ap.add_argument("--p", type=int, default=2, help="field characteristic (prime)")
    ap.add_argument("--r", type=int, default=2, help="extension degree, field GF(p^r)")
    ap.add_argument("--s", type=int, default=1,
                    help="twist exponent: theta(a) = a^(p^s), 0 <= s < r")
    ap.add_argument("--modulus", default=None,
                    help="field modulus digits, ascending and monic, "
                    "e.g. 1,0,1,1 for the x^3+x^2+1 presentation of GF(8)")
    ap.add_argument("--output", choices=("text", "json"), default="text")
    ap.add_argument("--threads", type=int, default=1, help="worker processes")
    ap.add_argument("--seed", type=int, default=None,
                    help="deterministic shuffle of orbit picks in sqt search "
                    "mode; reconstruction from shorthand ignores it")
    sub = ap.add_subparsers(dest="command", required=True)

    p_sd = sub.add_parser("sd", help="census of monic right divisors of x^n - alpha")
    p_sd.add_argument("n", type=int)
    p_sd.add_argument("alpha", type=int, help="alpha as a digit")
    p_sd.add_argument("--min-deg", dest="min_deg", type=int, default=None)
    p_sd.add_argument("--max-deg", dest="max_deg", type=int, default=None)
    p_sd.set_defaults(func=cmd_sd)

    p_dual = sub.add_parser("dual", help="code, dual code, and zero-product check")
    p_dual.add_argument("n", type=int)
    p_dual.add_argument("alpha", type=int, help="alpha as a digit")
    p_dual.add_argument("g", help="generator digits, ascending")
    p_dual.set_defaults(func=cmd_dual)

    p_pcm = sub.add_parser("pcm", help="companion and parity check matrices")
    p_pcm.add_argument("n", type=int)
    p_pcm.add_argument("g", help="generator digits, ascending")
    p_pcm.set_defaults(func=cmd_pcm)

    p_sqt = sub.add_parser(
        "sqt", help="quasi-twisted code from shorthand, or search: m N g_digits"
    )
    p_sqt.add_argument("args", nargs="+",
                       help="either one shorthand like '[4130]^7+0501^7' "
                       "or three arguments m N g_digits")
    p_sqt.set_defaults(func=cmd_sqt)

    p_bound = sub.add_parser("bound", help="shadow-root lower bound on distance")
    p_bound.add_argument("n", type=int)
    p_bound.add_argument("alpha", type=int, help="alpha as a digit")
    p_bound.add_argument("g", help="generator digits, ascending")
    p_bound.add_argument("--l", type=int, default=None, help="run offset")
    p_bound.add_argument("--c", type=int, default=None, help="run stride")
    p_bound.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                         help="cap on the exact-distance comparison")
    p_bound.set_defaults(func=cmd_bound)

    p_table = sub.add_parser("table", help="reproduce the known-code catalog")
    p_table.set_defaults(func=cmd_table)

    p_mw = sub.add_parser("minweight", help="exact minimum weight of one code")
    p_mw.add_argument("n", type=int)
    p_mw.add_argument("alpha", type=int, help="alpha as a digit")
    p_mw.add_argument("g", help="generator digits, ascending")
    p_mw.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p_mw.set_defaults(func=cmd_minweight)

    return ap


def main(argv: Sequence[str] | None = None) -> int:
    ns = build_parser().parse_args(argv)
    cfg = None
    try:
        cfg = CliConfig(
            p=ns.p,
            r=ns.r,
            s=ns.s,
            modulus=parse_digit_seq(ns.modulus) if ns.modulus else None,
            output=ns.output,
            threads=ns.threads,
            seed=ns.seed,
        )
        return ns.func(cfg, ns)
    except BudgetExceeded as e:
        _fail(cfg or CliConfig(output=ns.output), str(e))
        return EXIT_BUDGET
    except FieldError as e:
        _fail(cfg or CliConfig(output=ns.output), str(e))
        return EXIT_BAD_INPUT
    except ValueError as e:
        _fail(cfg or CliConfig(output=ns.output), str(e))
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
