"""Exact linear algebra over fraction fields of integer polynomials.

Kernel computations clear denominators row by row and run fraction-free
(Bareiss) elimination on flint ``fmpz_mpoly`` entries, so every division
performed is exact.
"""

from __future__ import annotations

from typing import Mapping

from .frac import QZ, Frac
from .polyz import PolyZ
from .ratfunc import RatFunc
from .sparse import SparseMatrix


def as_frac(x, ctx=QZ) -> Frac:
    """Coerce int, Fraction, RatFunc or Frac into a Frac of ``ctx``."""
    if isinstance(x, Frac):
        return x
    if isinstance(x, RatFunc):
        return _laurent_to_frac(x.numerator, ctx) / _laurent_to_frac(x.denominator, ctx)
    return Frac.const(ctx, x)


def _laurent_to_frac(p, ctx) -> Frac:
    out = Frac.const(ctx, 0)
    for e, c in p.terms.items():
        out = out + Frac.monomial(ctx, {"q": e}, c)
    return out


def _one(ctx):
    return ctx.from_dict({(0,) * ctx.nvars(): 1})


def _clear_row(row: Mapping[int, Frac], ctx):
    """Scale a Frac row to a row of polynomials (primitive up to sign)."""
    den = _one(ctx)
    for v in row.values():
        if not v.den.is_one():
            den = den * (v.den / den.gcd(v.den))
    out = {}
    for j, v in row.items():
        out[j] = v.num * (den / v.den)
    g = None
    for p in out.values():
        g = p if g is None else g.gcd(p)
        if g.is_one():
            break
    if g is not None and not g.is_one():
        out = {j: p / g for j, p in out.items()}
    return out


def bareiss_echelon(rows: list[dict[int, object]], ncols: int, ctx):
    """Fraction-free row echelon form.

    Returns (echelon_rows, pivot_columns); rows are dicts of fmpz_mpoly.
    """
    work = [dict(r) for r in rows if r]
    pivots: list[int] = []
    out: list[dict] = []
    prev = _one(ctx)
    for c in range(ncols):
        if not work:
            break
        piv_idx = None
        best = None
        for k, r in enumerate(work):
            v = r.get(c)
            if v is not None and not v.is_zero():
                size = len(r)
                if best is None or size < best:
                    piv_idx, best = k, size
        if piv_idx is None:
            continue
        prow = work.pop(piv_idx)
        p = prow[c]
        nxt = []
        for r in work:
            a = r.get(c)
            new = {}
            if a is None or a.is_zero():
                for j, v in r.items():
                    t = p * v
                    new[j] = t if prev.is_one() else t / prev
            else:
                keys = set(r) | set(prow)
                keys.discard(c)
                for j in keys:
                    v = r.get(j)
                    w = prow.get(j)
                    t = p * v if v is not None else None
                    if w is not None:
                        t = -(a * w) if t is None else t - a * w
                    if t is None or t.is_zero():
                        continue
                    new[j] = t if prev.is_one() else t / prev
            new = {j: v for j, v in new.items() if not v.is_zero()}
            if new:
                nxt.append(new)
        work = nxt
        prev = p
        pivots.append(c)
        out.append(prow)
    return out, pivots


def _matrix_rows(M: SparseMatrix, ctx) -> list[dict]:
    rows = []
    for i in sorted(M.rows):
        r = {j: as_frac(v, ctx) for j, v in M.rows[i].items()}
        rows.append(_clear_row(r, ctx))
    return rows


def rank(M: SparseMatrix, ctx=QZ) -> int:
    _, piv = bareiss_echelon(_matrix_rows(M, ctx), M.ncols, ctx)
    return len(piv)


def solve_nullspace(M: SparseMatrix, ctx=QZ) -> list[dict[int, Frac]]:
    """Basis of {v : M v = 0}, each vector a sparse {column: Frac} map."""
    ech, piv = bareiss_echelon(_matrix_rows(M, ctx), M.ncols, ctx)
    pivset = set(piv)
    free = [c for c in range(M.ncols) if c not in pivset]
    basis = []
    for f in free:
        x: dict[int, Frac] = {f: Frac.const(ctx, 1)}
        for r, c in zip(reversed(ech), reversed(piv)):
            acc = None
            for j, a in r.items():
                if j == c:
                    continue
                xj = x.get(j)
                if xj is not None:
                    t = xj * Frac(ctx, a)
                    acc = t if acc is None else acc + t
            if acc is not None and acc:
                x[c] = -acc / Frac(ctx, r[c])
        basis.append({j: v for j, v in x.items() if v})
    return basis


def column_space_basis(M: SparseMatrix, ctx=QZ) -> list[dict[int, Frac]]:
    """Independent columns of M spanning its image (as sparse vectors)."""
    cols = M.columns()
    span = EchelonSpan(ctx)
    out = []
    for j in sorted(cols):
        vec = {i: as_frac(v, ctx) for i, v in cols[j].items()}
        if span.add(vec):
            out.append(vec)
    return out


class EchelonSpan:
    """Incrementally maintained reduced row echelon basis of a subspace.

    Each inserted vector may carry a payload vector that undergoes the same
    row operations, which lets a linear map be recovered from its values on
    a spanning set.
    """

    def __init__(self, ctx=QZ):
        self.ctx = ctx
        self.rows: dict[int, dict[int, Frac]] = {}  # pivot -> row (pivot entry 1)
        self.payload: dict[int, dict[int, Frac]] = {}

    def __len__(self):
        return len(self.rows)

    def reduce(self, vec: Mapping[int, Frac], pay: Mapping[int, Frac] | None = None):
        v = dict(vec)
        p = dict(pay) if pay is not None else None
        # rows are fully reduced, so one pass over the pivots hit suffices
        for c in [c for c in v if c in self.rows]:
            a = v[c]
            _axpy(v, self.rows[c], -a)
            if p is not None:
                _axpy(p, self.payload[c], -a)
        return v, p

    def contains(self, vec: Mapping[int, Frac]) -> bool:
        v, _ = self.reduce(vec)
        return not v

    def add(self, vec: Mapping[int, Frac], pay: Mapping[int, Frac] | None = None) -> bool:
        v, p = self.reduce(vec, pay if pay is not None else {})
        if not v:
            if p:
                raise InconsistentPayload("dependent vector carries a nonzero payload residue")
            return False
        c = min(v)
        inv = v[c].inverse()
        v = {j: x * inv for j, x in v.items()}
        p = {j: x * inv for j, x in p.items()}
        for c2, row in self.rows.items():
            a = row.get(c)
            if a:
                _axpy(row, v, -a)
                _axpy(self.payload[c2], p, -a)
        self.rows[c] = v
        self.payload[c] = p
        return True


class InconsistentPayload(ArithmeticError):
    """A linear dependency among inputs is not matched by their payloads."""


def _axpy(y: dict, x: Mapping, a):
    for j, xv in x.items():
        t = xv * a
        if j in y:
            s = y[j] + t
            if s:
                y[j] = s
            else:
                del y[j]
        elif t:
            y[j] = t


def lcm_denominators(M: SparseMatrix) -> PolyZ:
    """Monic-in-z lcm of the z-dependence of all entry denominators.

    Entries are Frac values in (q, z).  Factors involving only q are units in
    Q(q) and drop out.
    """
    ctx = None
    lcm = None
    for _, v in M.items():
        v = as_frac(v)
        ctx = v.ctx
        d = v.den
        if d.is_one():
            continue
        lcm = d if lcm is None else lcm * (d / lcm.gcd(d))
    if lcm is None:
        return PolyZ([1])
    zi = ctx.names().index("z")
    qi = ctx.names().index("q")
    return PolyZ.from_mpoly(lcm, z_index=zi, q_index=qi).monic()
