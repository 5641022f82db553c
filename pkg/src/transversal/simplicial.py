"""Simplicial complexes, joins, chain-complex frames, homogenization, and the
union-of-faces chain isomorphism for joins.

A frame is a complex of finite vector spaces with a fixed basis whose level-1
basis vectors map to 1; homogenizing a frame against a monomial list lifts it
to a multigraded free complex by the lcm rule.  Chain complexes of simplicial
complexes are frames, and for the standard simplex the homogenization
reproduces the Taylor complex.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Sequence

from .complexes import (BasisLabel, FreeComplex, PolyMatrix, is_acyclic_multigraded,
                        is_minimal, verify_complex)
from .errors import PreconditionError
from .fields import Field, QQ
from .monomial_ideals import MonomialIdeal
from .rings import Polynomial, VarContext, mono_div, mono_lcm


class SimplicialComplex:
    """A simplicial complex, determined by its vertex set and facet family.

    Facets are kept sorted and pairwise incomparable; faces are all subsets
    of facets, so the empty face is always present.
    """

    __slots__ = ("vertices", "facets")

    def __init__(self, facets: Iterable[Iterable[int]],
                 vertices: Iterable[int] | None = None):
        cleaned = sorted({tuple(sorted(set(f))) for f in facets}, key=lambda f: (len(f), f))
        maximal: list[tuple[int, ...]] = []
        for f in cleaned:
            fs = set(f)
            if not any(fs <= set(g) for g in cleaned if g != f):
                maximal.append(f)
        if not maximal:
            maximal = [()]
        self.facets = tuple(sorted(set(maximal)))
        used = {v for f in self.facets for v in f}
        if vertices is None:
            self.vertices = tuple(sorted(used))
        else:
            vertices = tuple(sorted(set(vertices)))
            if not used <= set(vertices):
                raise PreconditionError("facets use vertices outside the vertex set")
            self.vertices = vertices

    @classmethod
    def standard(cls, m: int, start: int = 1) -> "SimplicialComplex":
        """The full (m-1)-simplex on vertices start..start+m-1."""
        return cls([tuple(range(start, start + m))])

    @property
    def dim(self) -> int:
        return max(len(f) for f in self.facets) - 1

    def faces(self, i: int) -> list[tuple[int, ...]]:
        """All i-dimensional faces (cardinality i+1), sorted; i = -1 gives
        the empty face."""
        if i < -1 or i > self.dim:
            return []
        if i == -1:
            return [()]
        out = {sub for f in self.facets if len(f) >= i + 1
               for sub in combinations(f, i + 1)}
        return sorted(out)

    def has_face(self, face: Iterable[int]) -> bool:
        fs = set(face)
        return any(fs <= set(f) for f in self.facets)

    def join(self, other: "SimplicialComplex") -> "SimplicialComplex":
        """Join: facets are pairwise unions; vertex sets must be disjoint."""
        if set(self.vertices) & set(other.vertices):
            raise PreconditionError("join needs disjoint vertex sets")
        return SimplicialComplex(
            [f + g for f in self.facets for g in other.facets],
            vertices=self.vertices + other.vertices)

    def relabel(self, mapping: dict[int, int]) -> "SimplicialComplex":
        """Explicit vertex relabeling (no silent renumbering anywhere else)."""
        if len(set(mapping.values())) != len(mapping):
            raise PreconditionError("relabeling must be injective")
        return SimplicialComplex(
            [tuple(mapping[v] for v in f) for f in self.facets],
            vertices=[mapping[v] for v in self.vertices])

    def __eq__(self, other) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.vertices == other.vertices and self.facets == other.facets

    def __repr__(self) -> str:
        inner = ",".join("{" + ",".join(map(str, f)) + "}" for f in self.facets)
        return "{" + inner + "}"


class Frame:
    """A complex of finite vector spaces with a fixed labelled basis.

    Level 0 is one-dimensional (the empty-face slot) and every level-1 basis
    vector maps to 1 there.  ``diffs[k]`` maps level k+1 to level k; entries
    are field scalars stored sparsely.
    """

    __slots__ = ("field", "levels", "diffs")

    def __init__(self, field: Field, levels: Sequence[Sequence[tuple]],
                 diffs: Sequence[dict]):
        self.field = field
        self.levels = tuple(tuple(lvl) for lvl in levels)
        self.diffs = tuple(dict(d) for d in diffs)

    @property
    def length(self) -> int:
        return len(self.levels) - 1

    def rank(self, i: int) -> int:
        return len(self.levels[i]) if 0 <= i < len(self.levels) else 0

    def ranks(self) -> list[int]:
        return [len(lvl) for lvl in self.levels]

    def verify(self) -> bool:
        """Frame axioms plus d.d = 0 with exact scalar arithmetic."""
        if self.rank(0) != 1:
            return False
        if self.length >= 1:
            d1 = self.diffs[0]
            for j in range(self.rank(1)):
                if d1.get((0, j)) != self.field.one:
                    return False
        for k in range(len(self.diffs) - 1):
            a, b = self.diffs[k], self.diffs[k + 1]
            acc: dict[tuple[int, int], object] = {}
            by_col: dict[int, list[tuple[int, object]]] = {}
            for (r, c), v in a.items():
                by_col.setdefault(c, []).append((r, v))
            for (kk, j), w in b.items():
                for r, v in by_col.get(kk, ()):
                    cur = acc.get((r, j), self.field.zero)
                    acc[(r, j)] = cur + v * w
            if any(val for val in acc.values()):
                return False
        return True


def chain_complex(delta: SimplicialComplex, field: Field = QQ) -> Frame:
    """The simplicial chain complex as a frame: a face of dimension i sits at
    level i+1, so the empty face is level 0.  The boundary of a face removes
    its t-th smallest vertex with sign (-1)^(t-1)."""
    levels = [delta.faces(i - 1) for i in range(delta.dim + 2)]
    one = field.one
    diffs: list[dict] = []
    for k in range(len(levels) - 1):
        tgt_index = {f: r for r, f in enumerate(levels[k])}
        d: dict[tuple[int, int], object] = {}
        for c, face in enumerate(levels[k + 1]):
            for t, v in enumerate(face):
                sub = face[:t] + face[t + 1:]
                d[(tgt_index[sub], c)] = one if t % 2 == 0 else -one
        diffs.append(d)
    return Frame(field, levels, diffs)


def frame_tensor(U: Frame, V: Frame) -> Frame:
    """Tensor product of frames with the Koszul sign (-1)^|a| on a (x) d(b)."""
    if U.field != V.field:
        raise PreconditionError("frames over different fields")
    total = U.length + V.length
    levels: list[list[tuple]] = []
    index: list[dict[tuple[int, int, int], int]] = []
    for r in range(total + 1):
        lvl: list[tuple] = []
        pos: dict[tuple[int, int, int], int] = {}
        for i in range(max(0, r - V.length), min(r, U.length) + 1):
            j = r - i
            for ai, a in enumerate(U.levels[i]):
                for bi, b in enumerate(V.levels[j]):
                    pos[(i, ai, bi)] = len(lvl)
                    lvl.append((a, b))
        levels.append(lvl)
        index.append(pos)
    one = U.field.one
    diffs: list[dict] = []
    for r in range(1, total + 1):
        d: dict[tuple[int, int], object] = {}
        src, tgt = index[r], index[r - 1]
        for (i, ai, bi), col in src.items():
            j = r - i
            if i >= 1:
                for (rr, cc), v in U.diffs[i - 1].items():
                    if cc == ai:
                        d[(tgt[(i - 1, rr, bi)], col)] = v
            if j >= 1:
                sign = one if i % 2 == 0 else -one
                for (rr, cc), v in V.diffs[j - 1].items():
                    if cc == bi:
                        d[(tgt[(i, ai, rr)], col)] = v * sign
        diffs.append(d)
    return Frame(U.field, levels, diffs)


def join_iso_check(d1: SimplicialComplex, d2: SimplicialComplex,
                   field: Field = QQ) -> bool:
    """Verify that mapping e_g (x) e_s to e_(g union s) is a basis bijection
    and a chain map from the tensor of the chain complexes onto the chain
    complex of the join.

    The sign-free map needs every vertex of the first complex below every
    vertex of the second (the standard layout 1..r, r+1..r+s); use
    ``relabel`` to arrange that.
    """
    if set(d1.vertices) & set(d2.vertices):
        raise PreconditionError("vertex sets must be disjoint")
    if d1.vertices and d2.vertices and max(d1.vertices) > min(d2.vertices):
        raise PreconditionError(
            "first complex's vertices must all precede the second's; relabel first")
    T = frame_tensor(chain_complex(d1, field), chain_complex(d2, field))
    J = chain_complex(d1.join(d2), field)
    if T.ranks() != J.ranks():
        return False
    thetas: list[dict[int, int]] = []
    for r in range(T.length + 1):
        j_index = {f: idx for idx, f in enumerate(J.levels[r])}
        theta: dict[int, int] = {}
        seen: set[int] = set()
        for s_idx, (g, s) in enumerate(T.levels[r]):
            target = tuple(g) + tuple(s)
            if target not in j_index:
                return False
            t_idx = j_index[target]
            if t_idx in seen:
                return False
            seen.add(t_idx)
            theta[s_idx] = t_idx
        thetas.append(theta)
    for r in range(1, T.length + 1):
        lhs = {(thetas[r - 1][i], c): v for (i, c), v in T.diffs[r - 1].items()}
        rhs = {(i, src): v
               for (i, c), v in J.diffs[r - 1].items()
               for src, t_idx in thetas[r].items() if t_idx == c}
        if lhs != rhs:
            return False
    return True


def homogenize(U: Frame, monomials: Sequence[tuple[int, ...]],
               ctx: VarContext) -> FreeComplex:
    """Lift a frame to a multigraded free complex over ``ctx``.

    Level-1 basis vectors get the given monomials as multidegrees (and map to
    them); higher multidegrees are assigned inductively as the lcm of the
    targets hit with nonzero coefficient, with lcm of nothing = 1.  Entries
    are rescaled by the multidegree quotient, coefficients carried verbatim.
    """
    if ctx.field != U.field:
        raise PreconditionError("frame field differs from the context field")
    if not U.verify():
        raise PreconditionError("input is not a frame (axioms or d.d failed)")
    if U.length >= 1 and len(monomials) != U.rank(1):
        raise PreconditionError(
            f"need {U.rank(1)} monomials for the level-1 basis, got {len(monomials)}")

    unit = ctx.unit_monomial
    mdegs: list[list[tuple[int, ...]]] = [[unit] * U.rank(0)]
    if U.length >= 1:
        mdegs.append([tuple(m) for m in monomials])
    for k in range(2, U.length + 1):
        d = U.diffs[k - 1]
        level_mdegs: list[tuple[int, ...]] = []
        for j in range(U.rank(k)):
            m = None
            for (r, c), v in d.items():
                if c == j and v:
                    m = mdegs[k - 1][r] if m is None else mono_lcm(m, mdegs[k - 1][r])
            level_mdegs.append(m if m is not None else unit)
        mdegs.append(level_mdegs)

    levels = [[BasisLabel(tuple(lbl) if isinstance(lbl, tuple) else (lbl,), mdegs[i][j])
               for j, lbl in enumerate(U.levels[i])]
              for i in range(U.length + 1)]
    diffs: list[PolyMatrix] = []
    for k in range(U.length):
        entries: dict[tuple[int, int], Polynomial] = {}
        for (r, c), v in U.diffs[k].items():
            if not v:
                continue
            mono = mono_div(mdegs[k + 1][c], mdegs[k][r])
            entries[(r, c)] = Polynomial(ctx, {mono: v})
        diffs.append(PolyMatrix(U.rank(k), U.rank(k + 1), entries))
    return FreeComplex(ctx, levels, diffs)


def supported_resolution_check(I: MonomialIdeal, delta: SimplicialComplex) -> bool:
    """Whether the G(I)-homogenization of the chain complex of ``delta`` is a
    minimal free resolution of R/I: it must be a complex, acyclic across the
    lcm lattice, and minimal.  Vertex k (in sorted order) is matched with the
    k-th canonical generator."""
    if I.num_gens() != len(delta.vertices):
        raise PreconditionError(
            f"ideal has {I.num_gens()} generators but the complex has "
            f"{len(delta.vertices)} vertices")
    C = homogenize(chain_complex(delta, I.ctx.field), I.gens, I.ctx)
    return bool(verify_complex(C)) and is_acyclic_multigraded(C, I) and is_minimal(C)
