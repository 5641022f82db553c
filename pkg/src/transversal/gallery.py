"""Named ideal families and the verification driver that replays each
transversality statement at chosen sizes.

Families:

* ``rational_normal_curve(n)``: the 2x2 minors of the Hankel matrix in
  x1..x(n+1) (the rational normal curve of degree n).
* ``family_J(n, a, b, c)``: <x1^a + x(n+1)^b, xn^c> in the same ring.
* ``xy_ideal(n)``: the n bilinear forms f_r = sum_s x_rs * y_s cut out by a
  generic n x n matrix times a generic column.
* ``hankel_h(n, p, q, i)``: 2x2 minors of the Hankel-style matrix on row i of
  X with the diagonal entry deleted and x_pq appended.

``verify`` runs the pipeline for a case (regular-sequence preconditions,
elimination-intersection vs product, dimension/height, leading-term-support
certificates) and emits a structured pass/fail report.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .errors import PreconditionError, TransversalError
from .groebner import (Ideal, check_regular_sequence, dimension,
                       lt_support_transversal, normal_form, power_transversal,
                       s_polynomial, transversal)
from .orders import GrevLex, Lex, MonomialOrder, WeightOrder
from .rings import Polynomial, VarContext

_GREVLEX = GrevLex()

# desk-scale caps: every case finishes well under a minute except the full
# n=3 bilinear check, whose budget the acceptance criteria call out separately
RNC_N_CAP = 4
ABC_CAP = 3
POWER_CAP = 3
XY_N_CAP = 3
HANKEL_N_CAP = 4

CASES = ("rnc", "rnc-sum", "xy", "hankel-h", "power")


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------

def rnc_context(n: int) -> VarContext:
    return VarContext([f"x{i}" for i in range(1, n + 2)])


def rational_normal_curve(n: int, ctx: VarContext | None = None) -> Ideal:
    """All 2x2 minors x_i x_(j+1) - x_(i+1) x_j, 1 <= i < j <= n."""
    if n < 2:
        raise PreconditionError("rational normal curve needs n >= 2")
    ctx = ctx or rnc_context(n)
    if ctx.nvars != n + 1:
        raise PreconditionError(f"context must have {n + 1} variables")
    x = [ctx.var(f"x{i}") for i in range(1, n + 2)]
    gens = [x[i - 1] * x[j] - x[i] * x[j - 1]
            for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    return Ideal(ctx, gens)


def family_J(n: int, a: int, b: int, c: int, ctx: VarContext | None = None) -> Ideal:
    """<x1^a + x(n+1)^b, xn^c> in the rational-normal-curve ring."""
    if n < 2 or min(a, b, c) < 1:
        raise PreconditionError("need n >= 2 and a, b, c >= 1")
    ctx = ctx or rnc_context(n)
    x1 = ctx.var("x1", a)
    xlast = ctx.var(f"x{n + 1}", b)
    xn = ctx.var(f"x{n}", c)
    return Ideal(ctx, [x1 + xlast, xn])


def xy_context(n: int) -> VarContext:
    """x_rs row-major, then y_1..y_n."""
    names = [f"x{r}{s}" for r in range(1, n + 1) for s in range(1, n + 1)]
    names += [f"y{s}" for s in range(1, n + 1)]
    return VarContext(names)


def xy_ideal(n: int, ctx: VarContext | None = None) -> Ideal:
    """The n bilinear forms f_r = sum_s x_rs y_s."""
    if n < 2:
        raise PreconditionError("bilinear family needs n >= 2")
    ctx = ctx or xy_context(n)
    gens = []
    for r in range(1, n + 1):
        f = ctx.zero()
        for s in range(1, n + 1):
            f = f + ctx.var(f"x{r}{s}") * ctx.var(f"y{s}")
        gens.append(f)
    return Ideal(ctx, gens)


def xy_order(n: int) -> MonomialOrder:
    """A weight order completing the partially specified diagonal-heavy order:
    x11 > x22 > ... > xnn > every off-diagonal x_rs and every y_s, ties broken
    by grevlex.  Under it each f_r leads with x_rr * y_r."""
    weights = []
    for r in range(1, n + 1):
        for s in range(1, n + 1):
            weights.append(10 * (n - r + 1) if r == s else 1)
    weights += [1] * n
    return WeightOrder(tuple(weights))


def hankel_h(n: int, p: int, q: int, i: int, ctx: VarContext | None = None) -> Ideal:
    """2x2 minors of the 2x(n-1) Hankel-style matrix on the deleted row i.

    The row sequence is x_i1..x_in with x_ii deleted, extended by x_pq; the
    top row is the first n-1 entries and the bottom row the sequence shifted
    by one.  Valid parameters: 1 <= p, q, i <= n with p != i and p != q.
    n = 2 is rejected: the matrix is a single column with no 2x2 minors.
    """
    if not (1 <= p <= n and 1 <= q <= n and 1 <= i <= n):
        raise PreconditionError("need 1 <= p, q, i <= n")
    if p == i or p == q:
        raise PreconditionError("need p != i and p != q")
    if n < 3:
        raise PreconditionError(
            "n = 2 is degenerate: the Hankel matrix has no 2x2 minors")
    ctx = ctx or xy_context(n)
    seq = [ctx.var(f"x{i}{s}") for s in range(1, n + 1) if s != i]
    seq.append(ctx.var(f"x{p}{q}"))
    # rows: top = seq[0..n-2], bottom = seq[1..n-1]
    gens = []
    for k in range(n - 1):
        for l in range(k + 1, n - 1):
            gens.append(seq[k] * seq[l + 1] - seq[l] * seq[k + 1])
    return Ideal(ctx, gens)


def parametrization_images(n: int, I: Ideal) -> list[Polynomial]:
    """Images of the generators under x_i -> s^(n-i+1) t^(i-1)."""
    ctx2 = VarContext(["s", "t"], I.ctx.field)
    out = []
    for f in I.gens:
        terms: dict = {}
        for m, coeff in f.terms.items():
            se = sum(e * (n - i) for i, e in enumerate(m))  # x_(i+1) -> s^(n-i)
            te = sum(e * i for i, e in enumerate(m))
            key = (se, te)
            cur = terms.get(key)
            val = coeff if cur is None else cur + coeff
            if val:
                terms[key] = val
            elif cur is not None:
                del terms[key]
        out.append(Polynomial(ctx2, terms))
    return out


# ---------------------------------------------------------------------------
# verification driver
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FamilySpec:
    case: str
    n: int = 2
    a: int = 1
    b: int = 1
    c: int = 1
    r: int = 1
    p: int | None = None
    q: int | None = None
    i: int | None = None

    def params(self) -> dict:
        out = {"n": self.n}
        if self.case in ("rnc-sum", "power"):
            out.update(a=self.a, b=self.b, c=self.c)
        if self.case == "power":
            out["r"] = self.r
        if self.case in ("xy", "hankel-h") and self.p is not None:
            out.update(p=self.p, q=self.q, i=self.i)
        return out


@dataclass
class CheckResult:
    name: str
    status: str  # "pass" | "fail" | "error"
    detail: str = ""
    certificate: dict | None = None

    def to_json(self) -> dict:
        out = {"name": self.name, "status": self.status}
        if self.detail:
            out["detail"] = self.detail
        if self.certificate is not None:
            out["certificate"] = self.certificate
        return out


@dataclass
class VerifyReport:
    case: str
    params: dict
    checks: list[CheckResult] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.status == "pass" for c in self.checks)

    def to_json(self) -> dict:
        return {
            "case": self.case,
            "params": self.params,
            "checks": [c.to_json() for c in self.checks],
            "passed": self.passed,
            "wall_time": round(self.wall_time, 3),
        }


def verify(spec: FamilySpec) -> VerifyReport:
    """Replay the statements relevant to one family instance and report."""
    if spec.case not in CASES:
        raise PreconditionError(f"unknown case {spec.case!r}; choose from {CASES}")
    started = time.monotonic()
    report = VerifyReport(spec.case, spec.params())
    runner = {
        "rnc": _verify_rnc,
        "rnc-sum": _verify_rnc_sum,
        "power": _verify_power,
        "xy": _verify_xy,
        "hankel-h": _verify_hankel,
    }[spec.case]
    runner(spec, report)
    report.wall_time = time.monotonic() - started
    return report


def _guard(report: VerifyReport, name: str):
    """Run a check body, mapping library errors to an error status."""
    def run(body):
        try:
            ok, detail, cert = body()
        except TransversalError as exc:
            report.checks.append(CheckResult(name, "error", str(exc)))
            return
        report.checks.append(
            CheckResult(name, "pass" if ok else "fail", detail, cert))
    return run


def _check_rnc_caps(n: int) -> None:
    if not 2 <= n <= RNC_N_CAP:
        raise PreconditionError(f"rnc cases support 2 <= n <= {RNC_N_CAP}")


def _verify_rnc(spec: FamilySpec, report: VerifyReport) -> None:
    _check_rnc_caps(spec.n)
    n = spec.n
    I = rational_normal_curve(n)

    def minors():
        want = n * (n - 1) // 2
        return len(I.gens) == want, f"{len(I.gens)} minors (expected {want})", None
    _guard(report, "minor_count")(minors)

    def param():
        images = parametrization_images(n, I)
        ok = all(im.is_zero() for im in images)
        return ok, "all generators vanish under the monomial parametrization", None
    _guard(report, "parametrization_vanishes")(param)

    def dim():
        d = dimension(I)
        return d == 2, f"dim R/I = {d} (curve cone expects 2)", None
    _guard(report, "dimension_2")(dim)


def _verify_rnc_sum(spec: FamilySpec, report: VerifyReport) -> None:
    _check_rnc_caps(spec.n)
    if max(spec.a, spec.b, spec.c) > ABC_CAP:
        raise PreconditionError(f"exponents capped at {ABC_CAP}")
    n = spec.n
    I = rational_normal_curve(n)
    J = family_J(n, spec.a, spec.b, spec.c, I.ctx)

    def regseq():
        rep = check_regular_sequence(J.gens, I)
        detail = ("regular sequence on R/I" if rep.ok
                  else f"stage {rep.failed_stage}: {rep.reason}")
        return rep.ok, detail, None
    _guard(report, "regular_sequence")(regseq)

    def trans():
        cert = transversal(I, J)
        return cert.result, "elimination intersection equals product", cert.to_json()
    _guard(report, "transversal")(trans)

    def height():
        vals = {str(o): dimension(I + J, o) for o in (_GREVLEX, Lex())}
        ok = set(vals.values()) == {0}
        detail = f"dim R/(I+J) = {vals} (height {n + 1} = n+1 expects 0)"
        return ok, detail, None
    _guard(report, "height_n_plus_1")(height)


def _verify_power(spec: FamilySpec, report: VerifyReport) -> None:
    _check_rnc_caps(spec.n)
    if max(spec.a, spec.b, spec.c) > ABC_CAP or spec.r > POWER_CAP:
        raise PreconditionError(f"exponents capped at {ABC_CAP}, power at {POWER_CAP}")
    I = rational_normal_curve(spec.n)
    gs = family_J(spec.n, spec.a, spec.b, spec.c, I.ctx).gens

    def regseq():
        rep = check_regular_sequence(gs, I)
        detail = ("regular sequence on R/I" if rep.ok
                  else f"stage {rep.failed_stage}: {rep.reason}")
        return rep.ok, detail, None
    _guard(report, "regular_sequence")(regseq)

    def power():
        ok = power_transversal(I, gs, spec.r)
        return ok, f"I cap J^{spec.r} = I * J^{spec.r}", None
    _guard(report, f"power_transversal_r{spec.r}")(power)


def _default_hankel_params(n: int) -> tuple[int, int, int]:
    return 2, 1, 1  # p, q, i


def _verify_xy(spec: FamilySpec, report: VerifyReport) -> None:
    n = spec.n
    if not 2 <= n <= XY_N_CAP:
        raise PreconditionError(f"xy case supports 2 <= n <= {XY_N_CAP}")
    ctx = xy_context(n)
    I = xy_ideal(n, ctx)
    order = xy_order(n)

    def gb():
        for r, f in enumerate(I.gens, start=1):
            lt = f.leading_monomial(order)
            want = ctx.monomial(**{f"x{r}{r}": 1, f"y{r}": 1})
            if lt != want:
                return False, f"Lt(f_{r}) != x{r}{r}*y{r}", None
        for a in range(len(I.gens)):
            for b in range(a + 1, len(I.gens)):
                s = s_polynomial(I.gens[a], I.gens[b], order)
                if not normal_form(s, list(I.gens), order).is_zero():
                    return False, f"S-pair ({a + 1},{b + 1}) does not reduce to 0", None
        return True, "generators form a Groebner basis under the weight order", None
    _guard(report, "groebner_certified")(gb)

    p, q, i = (spec.p, spec.q, spec.i)
    if p is None:
        p, q, i = _default_hankel_params(n)
    if n == 2:
        # the Hankel matrix is a single column: I_2(H) = (0), and the zero
        # ideal meets everything transversally (I cap 0 = 0 = I*0)
        J = Ideal(ctx, ())
        degenerate = " (degenerate: J = (0) at n = 2)"
    else:
        J = hankel_h(n, p, q, i, ctx)
        degenerate = ""

    def ltsup():
        ok = lt_support_transversal(I, J, order)
        return ok, "supp Lt(I) and supp Lt(J) disjoint" + degenerate, None
    _guard(report, "lt_support_disjoint")(ltsup)

    def trans():
        cert = transversal(I, J)
        return cert.result, "elimination intersection equals product" + degenerate, \
            cert.to_json()
    _guard(report, "transversal")(trans)


def _verify_hankel(spec: FamilySpec, report: VerifyReport) -> None:
    n = spec.n
    if not 3 <= n <= HANKEL_N_CAP:
        raise PreconditionError(f"hankel-h case supports 3 <= n <= {HANKEL_N_CAP}")
    p, q, i = (spec.p, spec.q, spec.i)
    if p is None:
        p, q, i = _default_hankel_params(n)
    ctx = xy_context(n)
    J = hankel_h(n, p, q, i, ctx)

    def minors():
        want = (n - 1) * (n - 2) // 2
        return len(J.gens) == want, f"{len(J.gens)} minors (expected {want})", None
    _guard(report, "minor_count")(minors)

    def supp():
        diag = {ctx.index(f"x{r}{r}") for r in range(1, n + 1)}
        ys = {ctx.index(f"y{r}") for r in range(1, n + 1)}
        used = set()
        for g in J.gens:
            used |= g.support()
        ok = not (used & (diag | ys))
        return ok, "generators avoid the diagonal and y variables", None
    _guard(report, "support_avoids_diagonal")(supp)
