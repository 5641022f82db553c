"""Multigraded free complexes over the polynomial ring.

Covers the resolution machinery: Taylor complexes of monomial ideals, tensor
products with the Koszul sign, the wedge-concatenation chain isomorphism for
disjoint-support pairs, d.d = 0 and lcm-lattice acyclicity verification,
minimality pruning by unit-entry cancellation, and K-polynomial certificates.
All matrix arithmetic is exact over the session field.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .errors import (CapExceededError, InternalConsistencyError,
                     PreconditionError)
from .fields import QQ
from .monomial_ideals import MonomialIdeal
from .rings import (Polynomial, VarContext, mono_div, mono_divides,
                    mono_is_one, mono_lcm, mono_mul)

TAYLOR_GEN_CAP = 20  # rank 2^p guard


@dataclass(frozen=True)
class BasisLabel:
    """A free-module basis element: a hashable tag plus its multidegree."""

    tag: tuple
    mdeg: tuple[int, ...]


class PolyMatrix:
    """Sparse matrix of polynomials; rows index the target basis."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: dict | None = None):
        self.rows = rows
        self.cols = cols
        self.entries: dict[tuple[int, int], Polynomial] = {}
        if entries:
            for (r, c), p in entries.items():
                if p:
                    self.entries[(r, c)] = p

    def entry(self, r: int, c: int) -> Polynomial | None:
        return self.entries.get((r, c))

    def by_column(self) -> dict[int, list[tuple[int, Polynomial]]]:
        out: dict[int, list[tuple[int, Polynomial]]] = {}
        for (r, c), p in self.entries.items():
            out.setdefault(c, []).append((r, p))
        return out

    def matmul(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.cols != other.rows:
            raise PreconditionError("matrix shape mismatch")
        acc: dict[tuple[int, int], Polynomial] = {}
        left_by_col = self.by_column()
        for (k, j), q in other.entries.items():
            for i, p in left_by_col.get(k, ()):
                prod = p * q
                if not prod:
                    continue
                cur = acc.get((i, j))
                acc[(i, j)] = prod if cur is None else cur + prod
        return PolyMatrix(self.rows, other.cols, acc)

    def is_zero(self) -> bool:
        return not self.entries

    def __eq__(self, other) -> bool:
        if not isinstance(other, PolyMatrix):
            return NotImplemented
        return (self.rows, self.cols) == (other.rows, other.cols) \
            and self.entries == other.entries


class FreeComplex:
    """Levels of labelled free modules with polynomial differentials.

    ``diffs[k]`` is the matrix of d_{k+1}: level k+1 -> level k.  Constructors
    in this module produce complexes that pass :func:`verify_complex`.
    """

    __slots__ = ("ctx", "levels", "diffs")

    def __init__(self, ctx: VarContext, levels: Sequence[Sequence[BasisLabel]],
                 diffs: Sequence[PolyMatrix]):
        self.ctx = ctx
        self.levels = tuple(tuple(lvl) for lvl in levels)
        self.diffs = tuple(diffs)
        if len(self.diffs) != max(len(self.levels) - 1, 0):
            raise PreconditionError("need one differential per adjacent level pair")

    @property
    def length(self) -> int:
        return len(self.levels) - 1

    def rank(self, i: int) -> int:
        return len(self.levels[i]) if 0 <= i < len(self.levels) else 0

    def ranks(self) -> list[int]:
        return [len(lvl) for lvl in self.levels]

    def diff(self, i: int) -> PolyMatrix:
        """The matrix of d_i: level i -> level i-1 (i >= 1)."""
        return self.diffs[i - 1]

    def __repr__(self) -> str:
        return f"<free complex ranks {self.ranks()} over {self.ctx!r}>"


# ---------------------------------------------------------------------------
# Taylor complexes
# ---------------------------------------------------------------------------

def taylor_on_generators(ctx: VarContext,
                         gens: Sequence[tuple[int, ...]]) -> FreeComplex:
    """Taylor complex on an explicit ordered sequence of minimal generators.

    Level i is free on the i-element subsets of the generator list with
    multidegree the lcm of the chosen generators; removing the k-th chosen
    generator contributes the sign (-1)^(k-1) and the lcm-quotient monomial.
    """
    p = len(gens)
    if p == 0:
        raise PreconditionError("Taylor complex needs a nonzero ideal")
    if p > TAYLOR_GEN_CAP:
        raise CapExceededError(f"Taylor complex capped at {TAYLOR_GEN_CAP} generators")
    for g in gens:
        if mono_is_one(g):
            raise PreconditionError("Taylor complex needs a proper ideal")
    one = ctx.field.one

    def lcm_of(subset: tuple[int, ...]) -> tuple[int, ...]:
        m = ctx.unit_monomial
        for idx in subset:
            m = mono_lcm(m, gens[idx])
        return m

    levels: list[list[BasisLabel]] = []
    subsets_per_level: list[list[tuple[int, ...]]] = []
    for i in range(p + 1):
        subs = list(combinations(range(p), i))
        subsets_per_level.append(subs)
        levels.append([BasisLabel(s, lcm_of(s)) for s in subs])

    diffs: list[PolyMatrix] = []
    for i in range(1, p + 1):
        tgt_index = {s: r for r, s in enumerate(subsets_per_level[i - 1])}
        entries: dict[tuple[int, int], Polynomial] = {}
        for c, s in enumerate(subsets_per_level[i]):
            num = lcm_of(s)
            for k in range(i):
                t = s[:k] + s[k + 1:]
                mono = mono_div(num, lcm_of(t))
                coeff = one if k % 2 == 0 else -one
                entries[(tgt_index[t], c)] = Polynomial(ctx, {mono: coeff})
        diffs.append(PolyMatrix(len(subsets_per_level[i - 1]),
                                len(subsets_per_level[i]), entries))
    return FreeComplex(ctx, levels, diffs)


def taylor(M: MonomialIdeal) -> FreeComplex:
    """Taylor complex of a proper nonzero monomial ideal on its canonical
    minimal generators."""
    if M.is_zero():
        raise PreconditionError("Taylor complex needs a nonzero ideal")
    if M.is_unit():
        raise PreconditionError("Taylor complex needs a proper ideal")
    return taylor_on_generators(M.ctx, M.gens)


# ---------------------------------------------------------------------------
# tensor products
# ---------------------------------------------------------------------------

def tensor(C: FreeComplex, D: FreeComplex) -> FreeComplex:
    """Tensor product complex: d(a@b) = d(a)@b + (-1)^|a| a@d(b)."""
    C.ctx.check_same(D.ctx)
    ctx = C.ctx
    lc, ld = C.length, D.length
    total = lc + ld

    index: list[dict[tuple[int, int, int], int]] = []
    levels: list[list[BasisLabel]] = []
    for r in range(total + 1):
        lvl: list[BasisLabel] = []
        pos: dict[tuple[int, int, int], int] = {}
        for i in range(max(0, r - ld), min(r, lc) + 1):
            j = r - i
            for ai, a in enumerate(C.levels[i]):
                for bi, b in enumerate(D.levels[j]):
                    pos[(i, ai, bi)] = len(lvl)
                    lvl.append(BasisLabel((a.tag, b.tag), mono_mul(a.mdeg, b.mdeg)))
        levels.append(lvl)
        index.append(pos)

    one = ctx.field.one
    diffs: list[PolyMatrix] = []
    for r in range(1, total + 1):
        entries: dict[tuple[int, int], Polynomial] = {}
        src, tgt = index[r], index[r - 1]
        for (i, ai, bi), col in src.items():
            j = r - i
            if i >= 1:
                col_entries = [(rr, p) for (rr, cc), p in C.diff(i).entries.items()
                               if cc == ai]
                for rr, p in col_entries:
                    entries[(tgt[(i - 1, rr, bi)], col)] = p
            if j >= 1:
                sign = one if i % 2 == 0 else -one
                col_entries = [(rr, p) for (rr, cc), p in D.diff(j).entries.items()
                               if cc == bi]
                for rr, p in col_entries:
                    entries[(tgt[(i, ai, rr)], col)] = p * sign
        diffs.append(PolyMatrix(len(levels[r - 1]), len(levels[r]), entries))
    return FreeComplex(ctx, levels, diffs)


# ---------------------------------------------------------------------------
# verification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ComplexCheck:
    ok: bool
    position: int | None = None  # differential index d_i of the first failure
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def verify_complex(C: FreeComplex) -> ComplexCheck:
    """Exact check of shapes, multigraded homogeneity of every entry, and
    d_{i-1} . d_i = 0 for all i."""
    for i in range(1, C.length + 1):
        d = C.diff(i)
        if d.rows != C.rank(i - 1) or d.cols != C.rank(i):
            return ComplexCheck(False, i, "matrix shape mismatch")
        for (r, c), p in d.entries.items():
            src = C.levels[i][c].mdeg
            tgt = C.levels[i - 1][r].mdeg
            for m in p.terms:
                if mono_mul(m, tgt) != src:
                    return ComplexCheck(False, i, "entry not multigraded")
    for i in range(2, C.length + 1):
        if not C.diff(i - 1).matmul(C.diff(i)).is_zero():
            return ComplexCheck(False, i, "d.d != 0")
    return ComplexCheck(True)


# ---------------------------------------------------------------------------
# multigraded acyclicity over the lcm lattice
# ---------------------------------------------------------------------------

def lcm_lattice(M: MonomialIdeal) -> list[tuple[int, ...]]:
    """All subset lcms of G(M), deduplicated (includes 1 for the empty set)."""
    if M.num_gens() > TAYLOR_GEN_CAP:
        raise CapExceededError(f"lcm lattice capped at 2^{TAYLOR_GEN_CAP}")
    degs = {M.ctx.unit_monomial}
    for g in M.gens:
        degs |= {mono_lcm(d, g) for d in degs}
    return sorted(degs)


def _strand_matrix(C: FreeComplex, i: int, rows: list[int], cols: list[int]):
    """Scalar matrix of d_i restricted to the degree-b strand."""
    field = C.ctx.field
    row_pos = {r: k for k, r in enumerate(rows)}
    out = [[field.zero] * len(cols) for _ in rows]
    d = C.diff(i)
    for cj, c in enumerate(cols):
        for r in rows:
            p = d.entry(r, c)
            if p is None:
                continue
            if len(p.terms) != 1:
                raise InternalConsistencyError(
                    "homogeneous entry with several terms in a strand")
            out[row_pos[r]][cj] = next(iter(p.terms.values()))
    return out


def _rank_exact(mat: list[list], field) -> int:
    """Rank of a small scalar matrix by exact elimination.

    Over the rationals rows are scaled to integers and reduced fraction-free
    (Bareiss); over a prime field plain division works.
    """
    if not mat or not mat[0]:
        return 0
    if field == QQ:
        rows = []
        for row in mat:
            den = 1
            for c in row:
                den_c = c.denominator
                den = den * den_c // _gcd(den, den_c)
            rows.append([int(c * den) for c in row])
        return _bareiss_rank(rows)
    m = [row[:] for row in mat]
    nrows, ncols = len(m), len(m[0])
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, nrows) if m[r][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = field.one / m[rank][col]
        for r in range(rank + 1, nrows):
            if m[r][col]:
                factor = m[r][col] * inv
                m[r] = [a - factor * b for a, b in zip(m[r], m[rank])]
        rank += 1
        if rank == nrows:
            break
    return rank


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a) if a else 1


def _bareiss_rank(m: list[list[int]]) -> int:
    nrows, ncols = len(m), len(m[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        piv = next((r for r in range(rank, nrows) if m[r][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(rank + 1, nrows):
            for c in range(col + 1, ncols):
                m[r][c] = (m[rank][col] * m[r][c] - m[r][col] * m[rank][c]) // prev
            m[r][col] = 0
        prev = m[rank][col]
        rank += 1
        if rank == nrows:
            break
    return rank


def is_acyclic_multigraded(C: FreeComplex, M: MonomialIdeal) -> bool:
    """Whether the strand of C in every lcm-lattice degree of G(M) is exact
    at positions >= 1 (level 0 resolves R/M by convention)."""
    field = C.ctx.field
    L = C.length
    for b in lcm_lattice(M):
        include = [[idx for idx, lbl in enumerate(C.levels[i])
                    if mono_divides(lbl.mdeg, b)]
                   for i in range(L + 1)]
        # ranks[i-1] = rank of the degree-b strand of d_i
        ranks = [_rank_exact(_strand_matrix(C, i, include[i - 1], include[i]), field)
                 for i in range(1, L + 1)]
        for i in range(1, L + 1):
            h = len(include[i]) - ranks[i - 1] - (ranks[i] if i < L else 0)
            if h != 0:
                return False
    return True


# ---------------------------------------------------------------------------
# the wedge-concatenation isomorphism for disjoint-support pairs
# ---------------------------------------------------------------------------

def taylor_iso_check(I: MonomialIdeal, J: MonomialIdeal) -> bool:
    """Verify that wedge concatenation is a multidegree-preserving basis
    bijection and a chain map from taylor(I) (x) taylor(J) onto the Taylor
    complex of I+J built on the concatenated generator list.

    Requires disjoint generator supports (the transversality hypothesis).
    """
    I.ctx.check_same(J.ctx)
    if I.support() & J.support():
        raise PreconditionError("generator supports must be disjoint")
    ctx = I.ctx
    p, q = I.num_gens(), J.num_gens()
    concat = I.gens + J.gens
    union = MonomialIdeal(ctx, concat)
    if set(union.gens) != set(concat):
        raise InternalConsistencyError(
            "G(I) and G(J) with disjoint supports must minimally generate I+J")

    T = tensor(taylor(I), taylor(J))
    TK = taylor_on_generators(ctx, concat)

    # psi: (S, T) wedge labels -> S + (T shifted by p), already sorted
    for r in range(T.length + 1):
        if T.rank(r) != TK.rank(r):
            return False
    psis: list[dict[int, int]] = []  # per level: source index -> target index
    for r in range(T.length + 1):
        tk_index = {lbl.tag: idx for idx, lbl in enumerate(TK.levels[r])}
        psi: dict[int, int] = {}
        seen: set[int] = set()
        for s_idx, lbl in enumerate(T.levels[r]):
            s_tag, t_tag = lbl.tag
            target_tag = tuple(s_tag) + tuple(t + p for t in t_tag)
            if target_tag not in tk_index:
                return False
            t_idx = tk_index[target_tag]
            if t_idx in seen:
                return False
            seen.add(t_idx)
            if TK.levels[r][t_idx].mdeg != lbl.mdeg:
                return False
            psi[s_idx] = t_idx
        psis.append(psi)

    # chain map: psi_{r-1} . d_r == delta_r . psi_r, entrywise
    for r in range(1, T.length + 1):
        lhs = {(psis[r - 1][i], c): pol
               for (i, c), pol in T.diff(r).entries.items()}
        rhs = {(i, src): pol
               for (i, c), pol in TK.diff(r).entries.items()
               for src, t_idx in psis[r].items() if t_idx == c}
        if lhs != rhs:
            return False
    return True


# ---------------------------------------------------------------------------
# minimality and pruning
# ---------------------------------------------------------------------------

def is_minimal(C: FreeComplex) -> bool:
    """Minimal complexes have every differential entry inside the irrelevant
    maximal ideal: no nonzero constant terms."""
    for d in C.diffs:
        for p in d.entries.values():
            if p.constant_term():
                return False
    return True


def prune(C: FreeComplex) -> FreeComplex:
    """Cancel unit entries until none remain, yielding a homotopy-equivalent
    minimal complex.  Cancellation order is the lexicographically smallest
    (level, row, column), making the output deterministic."""
    check = verify_complex(C)
    if not check:
        raise PreconditionError(f"prune needs a complex (d_{check.position}: {check.reason})")
    levels = [list(lvl) for lvl in C.levels]
    diffs = [dict(d.entries) for d in C.diffs]

    def find_unit():
        for k, d in enumerate(diffs):
            best = None
            for (r, c), p in d.items():
                if p.constant_term():
                    if best is None or (r, c) < best:
                        best = (r, c)
            if best is not None:
                return k, best
        return None

    while True:
        found = find_unit()
        if found is None:
            break
        k, (r, c) = found
        u_poly = diffs[k][(r, c)]
        if not u_poly.is_constant():
            raise InternalConsistencyError(
                "unit entry of a multigraded complex must be constant")
        u = u_poly.constant_term()

        d = diffs[k]
        row_r = {cc: p for (rr, cc), p in d.items() if rr == r and cc != c}
        col_c = {rr: p for (rr, cc), p in d.items() if cc == c and rr != r}
        new_d: dict[tuple[int, int], Polynomial] = {}
        for (rr, cc), p in d.items():
            if rr == r or cc == c:
                continue
            new_d[(rr, cc)] = p
        for rr, b in col_c.items():
            scale = b * (C.ctx.field.one / u)
            for cc, a in row_r.items():
                corr = scale * a
                cur = new_d.get((rr, cc))
                val = (cur - corr) if cur is not None else -corr
                if val:
                    new_d[(rr, cc)] = val
                elif cur is not None:
                    del new_d[(rr, cc)]
        diffs[k] = _reindex(new_d, drop_row=r, drop_col=c)
        if k + 1 < len(diffs):
            diffs[k + 1] = _reindex(diffs[k + 1], drop_row=c, drop_col=None)
        if k - 1 >= 0:
            diffs[k - 1] = _reindex(diffs[k - 1], drop_row=None, drop_col=r)
        del levels[k + 1][c]
        del levels[k][r]

    out = FreeComplex(C.ctx,
                      levels,
                      [PolyMatrix(len(levels[i]), len(levels[i + 1]), diffs[i])
                       for i in range(len(diffs))])
    if not is_minimal(out):
        raise InternalConsistencyError("pruning left a unit entry")
    return out


def _reindex(entries: dict[tuple[int, int], Polynomial], drop_row: int | None,
             drop_col: int | None) -> dict[tuple[int, int], Polynomial]:
    out: dict[tuple[int, int], Polynomial] = {}
    for (r, c), p in entries.items():
        if drop_row is not None:
            if r == drop_row:
                continue
            if r > drop_row:
                r -= 1
        if drop_col is not None:
            if c == drop_col:
                continue
            if c > drop_col:
                c -= 1
        out[(r, c)] = p
    return out


def betti_numbers(C: FreeComplex) -> list[int]:
    """Level ranks after pruning; for resolutions these are the Betti numbers."""
    pruned = C if is_minimal(C) else prune(C)
    ranks = pruned.ranks()
    while ranks and ranks[-1] == 0:
        ranks.pop()
    return ranks


def betti_table(C: FreeComplex) -> dict[int, dict[int, int]]:
    """Multigraded rank counts collapsed by total degree, per homological level."""
    pruned = C if is_minimal(C) else prune(C)
    table: dict[int, dict[int, int]] = {}
    for i, lvl in enumerate(pruned.levels):
        row: dict[int, int] = {}
        for lbl in lvl:
            d = sum(lbl.mdeg)
            row[d] = row.get(d, 0) + 1
        table[i] = dict(sorted(row.items()))
    return table


# ---------------------------------------------------------------------------
# K-polynomials
# ---------------------------------------------------------------------------

def k_polynomial(C: FreeComplex) -> Polynomial:
    """Alternating sum of the basis multidegrees: sum_i (-1)^i sum_b x^mdeg(b).
    A homotopy invariant, so pruning preserves it."""
    ctx = C.ctx
    terms: dict = {}
    one = ctx.field.one
    for i, lvl in enumerate(C.levels):
        sign = one if i % 2 == 0 else -one
        for lbl in lvl:
            cur = terms.get(lbl.mdeg)
            val = sign if cur is None else cur + sign
            if val:
                terms[lbl.mdeg] = val
            elif cur is not None:
                del terms[lbl.mdeg]
    return Polynomial(ctx, terms)


# ---------------------------------------------------------------------------
# serialization
# ---------------------------------------------------------------------------

def _tag_to_json(tag):
    if isinstance(tag, tuple):
        return [_tag_to_json(t) for t in tag]
    return tag


def complex_to_json(C: FreeComplex) -> dict:
    return {
        "ranks": C.ranks(),
        "levels": [
            [{"label": _tag_to_json(lbl.tag), "mdeg": list(lbl.mdeg)} for lbl in lvl]
            for lvl in C.levels
        ],
        "diffs": [
            [[r, c, str(p)] for (r, c), p in sorted(d.entries.items())]
            for d in C.diffs
        ],
    }
