"""Linear codes over GF(q) as row spaces, with exact minimum weight.

Vectors are rows and maps act on the right, v -> theta(v) * T, so orbit
computations read the same way as the generator-matrix conventions used
throughout the package.  Everything is exact integer arithmetic on encoded
field elements; matrices are immutable tuples of row tuples.

Minimum weight is computed by walking projective representatives (one word
per scalar class).  When the dual side is exponentially cheaper the weight
distribution of the dual is enumerated instead and transformed back; both
paths are exact and the crossover is invisible to callers.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, Iterator, Sequence

from .field import Automorphism, BudgetExceeded, Field, FieldError

# direct enumeration is preferred below this many codewords; the hard budget
# is what callers may raise it to before we refuse outright
DIRECT_LIMIT = 1 << 22
DEFAULT_BUDGET = 1 << 28


class Matrix:
    """Immutable matrix over a Field; entries are encoded field elements."""

    __slots__ = ("field", "rows")

    def __init__(self, field: Field, rows: Iterable[Iterable[int]]):
        rs = tuple(tuple(field.check(e) for e in row) for row in rows)
        if not rs or not rs[0]:
            raise FieldError("matrix needs at least one row and one column")
        ncols = len(rs[0])
        if any(len(r) != ncols for r in rs):
            raise FieldError("ragged rows")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "rows", rs)

    def __setattr__(self, *_):  # pragma: no cover
        raise AttributeError("Matrix is immutable")

    @classmethod
    def identity(cls, field: Field, n: int) -> "Matrix":
        return cls(field, [[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def from_digit_rows(cls, field: Field, rows: Iterable[Iterable[int]]) -> "Matrix":
        return cls(field, [[field.digit_decode(d) for d in row] for row in rows])

    def to_digit_rows(self) -> tuple[tuple[int, ...], ...]:
        F = self.field
        return tuple(tuple(F.digit_encode(e) for e in row) for row in self.rows)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0])

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Matrix) and self.field == other.field and self.rows == other.rows

    def __hash__(self) -> int:
        return hash((self.field, self.rows))

    def __repr__(self) -> str:
        return f"Matrix({self.nrows}x{self.ncols} over GF({self.field.q}))"

    def transpose(self) -> "Matrix":
        return Matrix(self.field, zip(*self.rows))

    def __mul__(self, other: "Matrix") -> "Matrix":
        if self.field != other.field:
            raise FieldError("mixed fields")
        if self.ncols != other.nrows:
            raise FieldError("inner dimensions differ")
        F = self.field
        cols = other.transpose().rows
        return Matrix(
            self.field,
            [[_dot(F, r, c) for c in cols] for r in self.rows],
        )

    def row_vec_mul(self, v: Sequence[int]) -> tuple[int, ...]:
        """v * self for a row vector v."""
        if len(v) != self.nrows:
            raise FieldError("vector length mismatch")
        F = self.field
        cols = zip(*self.rows)
        return tuple(_dot(F, v, c) for c in cols)

    def rref(self) -> tuple["Matrix", tuple[int, ...]]:
        """Reduced row echelon form and its pivot columns (canonical)."""
        F = self.field
        rows = [list(r) for r in self.rows]
        pivots: list[int] = []
        lead = 0
        for col in range(self.ncols):
            pr = None
            for i in range(lead, len(rows)):
                if rows[i][col] != 0:
                    pr = i
                    break
            if pr is None:
                continue
            rows[lead], rows[pr] = rows[pr], rows[lead]
            inv = F.inv(rows[lead][col])
            rows[lead] = [F.mul(inv, e) for e in rows[lead]]
            for i in range(len(rows)):
                if i != lead and rows[i][col] != 0:
                    f = rows[i][col]
                    rows[i] = [F.sub(e, F.mul(f, p)) for e, p in zip(rows[i], rows[lead])]
            pivots.append(col)
            lead += 1
            if lead == len(rows):
                break
        return Matrix(F, rows), tuple(pivots)

    def rank(self) -> int:
        return len(self.rref()[1])

    def is_invertible(self) -> bool:
        return self.nrows == self.ncols and self.rank() == self.nrows


def _dot(F: Field, a: Sequence[int], b: Sequence[int]) -> int:
    acc = 0
    for x, y in zip(a, b):
        if x and y:
            acc = F.add(acc, F.mul(x, y))
    return acc


def _apply_entrywise(aut: Automorphism, v: Sequence[int], power: int = 1) -> tuple[int, ...]:
    return tuple(aut.apply(e, power) for e in v)


class SemiLinearMap:
    """v -> theta(v) * T with T invertible; the right-action convention."""

    __slots__ = ("aut", "matrix")

    def __init__(self, aut: Automorphism, matrix: Matrix):
        if aut.field != matrix.field:
            raise FieldError("automorphism and matrix over different fields")
        if matrix.nrows != matrix.ncols:
            raise FieldError("map matrix must be square")
        if not matrix.is_invertible():
            raise FieldError("map matrix must be invertible")
        object.__setattr__(self, "aut", aut)
        object.__setattr__(self, "matrix", matrix)

    def __setattr__(self, *_):  # pragma: no cover
        raise AttributeError("SemiLinearMap is immutable")

    @property
    def dim(self) -> int:
        return self.matrix.nrows

    def apply(self, v: Sequence[int]) -> tuple[int, ...]:
        return self.matrix.row_vec_mul(_apply_entrywise(self.aut, v))

    def iterate(self, v: Sequence[int], times: int) -> tuple[int, ...]:
        out = tuple(v)
        for _ in range(times):
            out = self.apply(out)
        return out

    def __call__(self, v: Sequence[int]) -> tuple[int, ...]:
        return self.apply(v)


class LinearCode:
    """An [n, k]_q code stored by its canonical reduced-echelon basis."""

    __slots__ = ("field", "n", "k", "basis", "pivots")

    def __init__(self, field: Field, rows: Iterable[Iterable[int]]):
        m = Matrix(field, rows)
        red, pivots = m.rref()
        k = len(pivots)
        if k == 0:
            raise FieldError("rows span only the zero code")
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "n", m.ncols)
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "basis", red.rows[:k])
        object.__setattr__(self, "pivots", pivots)

    def __setattr__(self, *_):  # pragma: no cover
        raise AttributeError("LinearCode is immutable")

    @classmethod
    def from_digit_rows(cls, field: Field, rows: Iterable[Iterable[int]]) -> "LinearCode":
        return cls(field, [[field.digit_decode(d) for d in row] for row in rows])

    def gen_matrix(self) -> Matrix:
        return Matrix(self.field, self.basis)

    def __repr__(self) -> str:
        return f"LinearCode([{self.n},{self.k}] over GF({self.field.q}))"

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, LinearCode)
            and self.field == other.field
            and self.n == other.n
            and self.basis == other.basis
        )

    def __hash__(self) -> int:
        return hash((self.field, self.n, self.basis))

    def same_code(self, other: "LinearCode") -> bool:
        """Row spaces coincide (canonical bases are unique, so compare them)."""
        if self.field != other.field or self.n != other.n:
            raise FieldError("codes live in different ambient spaces")
        return self.basis == other.basis

    def contains(self, word: Sequence[int]) -> bool:
        F = self.field
        if len(word) != self.n:
            raise FieldError("word length mismatch")
        v = [F.check(e) for e in word]
        for row, p in zip(self.basis, self.pivots):
            c = v[p]
            if c:
                v = [F.sub(e, F.mul(c, r)) for e, r in zip(v, row)]
        return not any(v)

    def invariant_under(self, m: SemiLinearMap) -> bool:
        """C invariant under the map; containment of basis images suffices
        because the map is invertible and the code finite."""
        if m.dim != self.n:
            raise FieldError("map dimension mismatch")
        return all(self.contains(m.apply(row)) for row in self.basis)

    def dual(self) -> "LinearCode":
        """The [n, n-k] orthogonal complement of the literal code.

        Free columns of the reduced basis index a kernel basis directly, so
        no column permutation is ever applied to the ambient space.
        """
        if self.k >= self.n:
            raise FieldError("dual of the full space is the zero code")
        F = self.field
        pivset = set(self.pivots)
        free = [c for c in range(self.n) if c not in pivset]
        rows = []
        for f in free:
            v = [0] * self.n
            v[f] = F.one
            for row, p in zip(self.basis, self.pivots):
                v[p] = F.neg(row[f])
            rows.append(v)
        return LinearCode(F, rows)

    # -- enumeration

    def _message_from_index(self, idx: int) -> tuple[int, ...] | None:
        """idx-th projective representative message, first nonzero entry 1."""
        q, k = self.field.q, self.k
        block = q ** (k - 1)
        lead = 0
        while idx >= block and lead < k:
            idx -= block
            block //= q
            lead += 1
        if lead >= k:
            return None
        tail_len = k - 1 - lead
        tail = []
        for _ in range(tail_len):
            idx, d = divmod(idx, q)
            tail.append(d)
        return (0,) * lead + (1,) + tuple(reversed(tail))

    def _num_projective(self) -> int:
        q = self.field.q
        return (q**self.k - 1) // (q - 1)

    def _scan(self, start: int, stop: int, want_word: bool) -> tuple[int, tuple[int, ...] | None, int]:
        """Min weight over representative indices [start, stop); returns
        (weight, word or None, index) with the smallest-index tie-break."""
        F = self.field
        n = self.n
        # scalar-times-row tables: q*k*n ints, tiny for every code in scope
        scaled = [
            {c: tuple(F.mul(c, e) for e in row) for c in range(1, F.q)} for row in self.basis
        ]
        best_w = n + 1
        best_word: tuple[int, ...] | None = None
        best_idx = -1
        add = F.add
        for idx in range(start, stop):
            msg = self._message_from_index(idx)
            if msg is None:
                break
            word: Sequence[int] | None = None
            for m, table in zip(msg, scaled):
                if not m:
                    continue
                row = table[m]
                word = row if word is None else tuple(map(add, word, row))
            wt = sum(1 for e in word if e)
            if wt < best_w:
                best_w = wt
                best_idx = idx
                best_word = tuple(word) if want_word else None
                if wt == 1:
                    break
        return best_w, best_word, best_idx

    def min_weight(self, workers: int = 1, budget: int = DEFAULT_BUDGET) -> int:
        return self._min_weight_impl(workers, budget, want_word=False)[0]

    def min_weight_word(self, workers: int = 1, budget: int = DEFAULT_BUDGET) -> tuple[int, tuple[int, ...]]:
        """(weight, witness codeword); always the direct enumeration path."""
        size = self.field.q**self.k
        if size > budget:
            raise BudgetExceeded(f"{size} codewords exceed budget {budget} and a witness needs enumeration")
        w, word, _ = self._scan_parallel(workers, want_word=True)
        assert word is not None
        return w, word

    def _min_weight_impl(self, workers: int, budget: int, want_word: bool) -> tuple[int, tuple[int, ...] | None]:
        q = self.field.q
        size = q**self.k
        dual_size = q ** (self.n - self.k)
        if size <= DIRECT_LIMIT:
            w, word, _ = self._scan_parallel(workers, want_word)
            return w, word
        if dual_size <= DIRECT_LIMIT and self.k < self.n and not want_word:
            return self._min_weight_via_dual(workers), None
        if size <= budget:
            w, word, _ = self._scan_parallel(workers, want_word)
            return w, word
        raise BudgetExceeded(
            f"{size} codewords (dual {dual_size}) exceed enumeration budget {budget}"
        )

    def _scan_parallel(self, workers: int, want_word: bool) -> tuple[int, tuple[int, ...] | None, int]:
        total = self._num_projective()
        if workers <= 1 or total < 1 << 14:
            return self._scan(0, total, want_word)
        chunk = -(-total // workers)
        spans = [(lo, min(lo + chunk, total)) for lo in range(0, total, chunk)]
        F = self.field
        args = [
            (F.p, F.r, F.modulus, self.basis, lo, hi, want_word) for lo, hi in spans
        ]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_scan_worker, args))
        # commutative min-reduction with deterministic (weight, index) tie-break
        best = min(parts, key=lambda t: (t[0], t[2]))
        return best

    def _min_weight_via_dual(self, workers: int) -> int:
        dual = self.dual()
        dist = dual.weight_distribution(workers=workers)
        full = macwilliams_transform(dist, self.n, self.field.q)
        for j in range(1, self.n + 1):
            if full[j]:
                return j
        raise AssertionError("nonzero code with no nonzero weight")  # pragma: no cover

    def weight_distribution(self, workers: int = 1, budget: int = DEFAULT_BUDGET) -> tuple[int, ...]:
        """(A_0, ..., A_n) by direct enumeration of projective classes."""
        q = self.field.q
        if q**self.k > budget:
            raise BudgetExceeded(f"{q**self.k} codewords exceed budget {budget}")
        total = self._num_projective()
        F = self.field
        if workers <= 1 or total < 1 << 14:
            counts = _dist_scan((F.p, F.r, F.modulus, self.basis, 0, total, self.n))
        else:
            chunk = -(-total // workers)
            spans = [(lo, min(lo + chunk, total)) for lo in range(0, total, chunk)]
            args = [(F.p, F.r, F.modulus, self.basis, lo, hi, self.n) for lo, hi in spans]
            with ProcessPoolExecutor(max_workers=workers) as pool:
                parts = list(pool.map(_dist_scan, args))
            counts = [sum(col) for col in zip(*parts)]
        dist = [c * (q - 1) for c in counts]
        dist[0] = 1
        return tuple(dist)

    def words(self) -> Iterator[tuple[int, ...]]:
        """Every codeword, zero first; only sensible for tiny codes."""
        F = self.field
        q, k = F.q, self.k
        for m_int in range(q**k):
            msg = []
            v = m_int
            for _ in range(k):
                v, d = divmod(v, q)
                msg.append(d)
            word = [0] * self.n
            for m, row in zip(msg, self.basis):
                if m:
                    word = [F.add(e, F.mul(m, r)) for e, r in zip(word, row)]
            yield tuple(word)


# -- process-pool workers (module level so they pickle)

_WORKER_FIELDS: dict[tuple[int, int, tuple[int, ...]], Field] = {}


def _worker_field(p: int, r: int, modulus: tuple[int, ...]) -> Field:
    key = (p, r, modulus)
    f = _WORKER_FIELDS.get(key)
    if f is None:
        f = Field(p, r, modulus)
        _WORKER_FIELDS[key] = f
    return f


def _scan_worker(args) -> tuple[int, tuple[int, ...] | None, int]:
    p, r, modulus, basis, lo, hi, want_word = args
    code = LinearCode(_worker_field(p, r, modulus), basis)
    return code._scan(lo, hi, want_word)


def _dist_scan(args) -> list[int]:
    p, r, modulus, basis, lo, hi, n = args
    F = _worker_field(p, r, modulus)
    code = LinearCode(F, basis)
    counts = [0] * (n + 1)
    add = F.add
    scaled = [{c: tuple(F.mul(c, e) for e in row) for c in range(1, F.q)} for row in code.basis]
    for idx in range(lo, hi):
        msg = code._message_from_index(idx)
        if msg is None:
            break
        word = None
        for m, table in zip(msg, scaled):
            if not m:
                continue
            row = table[m]
            word = row if word is None else tuple(map(add, word, row))
        counts[sum(1 for e in word if e)] += 1
    return counts


# -- MacWilliams

def krawtchouk(n: int, q: int, j: int, w: int) -> int:
    """K_j(w) = sum_i (-1)^i (q-1)^(j-i) C(w,i) C(n-w,j-i), exact."""
    acc = 0
    for i in range(0, j + 1):
        acc += (-1) ** i * (q - 1) ** (j - i) * math.comb(w, i) * math.comb(n - w, j - i)
    return acc


def macwilliams_transform(dual_dist: Sequence[int], n: int, q: int) -> tuple[int, ...]:
    """Weight distribution of C from that of its dual, exact integers.

    A_j(C) = |C^perp|^(-1) * sum_w A'_w K_j(w); the division must be exact,
    anything else indicates a corrupted distribution.
    """
    size_dual = sum(dual_dist)
    out = []
    for j in range(n + 1):
        s = sum(aw * krawtchouk(n, q, j, w) for w, aw in enumerate(dual_dist))
        quot, rem = divmod(s, size_dual)
        if rem:
            raise FieldError("MacWilliams sum not divisible by dual size")
        out.append(quot)
    return tuple(out)
