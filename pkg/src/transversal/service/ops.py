"""Service operations: the single implementation behind the HTTP endpoints
and the in-process CLI.  Each operation parses the request's session text,
dispatches to the library, and shapes a response model; library exceptions
propagate and are mapped to transport errors (HTTP status / exit code) by the
caller."""

from __future__ import annotations

from .. import complexes as cx
from .. import groebner as gb
from ..errors import ParseError, PreconditionError
from ..gallery import FamilySpec, verify
from ..monomial_ideals import MonomialIdeal, is_transversal_monomial
from ..parsing import Session, order_to_text, parse_session
from ..rings import Polynomial
from ..selftest import run_selftest
from ..simplicial import chain_complex, homogenize
from . import schemas as sc


def _session(req: sc.SessionRequest) -> Session:
    session = parse_session(req.session)
    if req.max_vars is not None and session.ctx is not None \
            and session.ctx.nvars > req.max_vars:
        raise PreconditionError(
            f"session declares {session.ctx.nvars} variables, --max-vars is {req.max_vars}")
    return session


def _as_monomial_ideal(I: gb.Ideal) -> MonomialIdeal | None:
    """The monomial-ideal view of an ideal whose generators are all terms."""
    if not all(g.is_term() for g in I.gens):
        return None
    return MonomialIdeal(I.ctx, (next(iter(g.terms)) for g in I.gens))


def _require_monomial(I: gb.Ideal, name: str) -> MonomialIdeal:
    M = _as_monomial_ideal(I)
    if M is None:
        raise PreconditionError(f"ideal {name!r} is not a monomial ideal")
    if M.is_zero():
        raise PreconditionError(f"ideal {name!r} is zero")
    return M


def _verdict(result: bool, detail: str = "", certificate: dict | None = None
             ) -> sc.VerdictResponse:
    return sc.VerdictResponse(verdict=result, exit_code=0 if result else 1,
                              detail=detail, certificate=certificate)


def check_transversal(req: sc.PairRequest) -> sc.VerdictResponse:
    s = _session(req)
    I = s.lookup_ideal(req.lhs)
    J = s.lookup_ideal(req.rhs)
    MI, MJ = _as_monomial_ideal(I), _as_monomial_ideal(J)
    if MI is not None and MJ is not None:
        res = is_transversal_monomial(MI, MJ)
        cert = {
            "route": "monomial",
            "support_disjoint": res.support_disjoint,
            "intersection": [I.ctx.mono_str(m) for m in MI.intersect(MJ).gens],
            "product": [I.ctx.mono_str(m) for m in MI.multiply(MJ).gens],
        }
        return _verdict(res.transversal, "support-disjointness criterion", cert)
    cert = gb.transversal(I, J, s.order)
    return _verdict(cert.result, "elimination intersection vs product",
                    cert.to_json())


def intersect(req: sc.PairRequest) -> sc.GeneratorsResponse:
    s = _session(req)
    I = s.lookup_ideal(req.lhs)
    J = s.lookup_ideal(req.rhs)
    MI, MJ = _as_monomial_ideal(I), _as_monomial_ideal(J)
    if MI is not None and MJ is not None:
        gens = [I.ctx.mono_str(m) for m in MI.intersect(MJ).gens]
        return sc.GeneratorsResponse(generators=gens, detail="pairwise lcms")
    inter = gb.elim_intersect(I, J, s.order)
    return sc.GeneratorsResponse(
        generators=[g.to_str(s.order) for g in inter.gens],
        detail="elimination intersection")


def product(req: sc.PairRequest) -> sc.GeneratorsResponse:
    s = _session(req)
    I = s.lookup_ideal(req.lhs)
    J = s.lookup_ideal(req.rhs)
    MI, MJ = _as_monomial_ideal(I), _as_monomial_ideal(J)
    if MI is not None and MJ is not None:
        gens = [I.ctx.mono_str(m) for m in MI.multiply(MJ).gens]
        return sc.GeneratorsResponse(generators=gens, detail="minimalized products")
    prod = gb.product_ideal(I, J)
    return sc.GeneratorsResponse(generators=[str(g) for g in prod.gens],
                                 detail="generator products")


def groebner(req: sc.IdealRequest) -> sc.BasisResponse:
    s = _session(req)
    basis = s.lookup_ideal(req.name).groebner(s.order)
    return sc.BasisResponse(basis=[p.to_str(s.order) for p in basis.polys],
                            order=order_to_text(s.order, s.ctx))


def quotient(req: sc.QuotientRequest) -> sc.GeneratorsResponse:
    s = _session(req)
    I = s.lookup_ideal(req.ideal)
    f = _parse_poly(s, req.by)
    out = gb.ideal_quotient(I, f, s.order)
    return sc.GeneratorsResponse(generators=[g.to_str(s.order) for g in out.gens])


def nzd(req: sc.NzdRequest) -> sc.VerdictResponse:
    s = _session(req)
    I = s.lookup_ideal(req.ideal)
    f = _parse_poly(s, req.poly)
    ok = gb.is_nzd(f, I, s.order)
    return _verdict(ok, "nonzerodivisor" if ok else "zero divisor")


def regseq(req: sc.RegseqRequest) -> sc.VerdictResponse:
    s = _session(req)
    I = s.lookup_ideal(req.ideal)
    fs = [_parse_poly(s, text) for text in req.seq]
    report = gb.check_regular_sequence(fs, I, s.order)
    detail = ("regular sequence" if report.ok
              else f"failed at stage {report.failed_stage}: {report.reason}")
    return _verdict(report.ok, detail)


def _parse_poly(s: Session, text: str) -> Polynomial:
    return s.require_ctx().parse(text)


def taylor(req: sc.IdealRequest) -> sc.ComplexResponse:
    s = _session(req)
    M = _require_monomial(s.lookup_ideal(req.name), req.name)
    T = cx.taylor(M)
    data = cx.complex_to_json(T)
    return sc.ComplexResponse(ranks=data["ranks"], levels=data["levels"],
                              diffs=data["diffs"], detail="Taylor complex")


def tensor(req: sc.PairRequest) -> sc.ComplexResponse:
    s = _session(req)
    A = _require_monomial(s.lookup_ideal(req.lhs), req.lhs)
    B = _require_monomial(s.lookup_ideal(req.rhs), req.rhs)
    T = cx.tensor(cx.taylor(A), cx.taylor(B))
    data = cx.complex_to_json(T)
    return sc.ComplexResponse(ranks=data["ranks"], levels=data["levels"],
                              diffs=data["diffs"],
                              detail="tensor of Taylor complexes")


def prune(req: sc.IdealRequest) -> sc.ComplexResponse:
    s = _session(req)
    M = _require_monomial(s.lookup_ideal(req.name), req.name)
    P = cx.prune(cx.taylor(M))
    data = cx.complex_to_json(P)
    return sc.ComplexResponse(ranks=data["ranks"], levels=data["levels"],
                              diffs=data["diffs"], betti=cx.betti_numbers(P),
                              detail="pruned Taylor complex")


def acyclic(req: sc.AcyclicRequest) -> sc.VerdictResponse:
    s = _session(req)
    against = _require_monomial(s.lookup_ideal(req.against), req.against)
    if req.name in s.complexes:
        delta = s.complexes[req.name]
        if against.num_gens() != len(delta.vertices):
            raise PreconditionError(
                f"ideal {req.against!r} has {against.num_gens()} generators but "
                f"complex {req.name!r} has {len(delta.vertices)} vertices")
        C = homogenize(chain_complex(delta, against.ctx.field), against.gens,
                       against.ctx)
        what = "homogenized chain complex"
    else:
        C = cx.taylor(_require_monomial(s.lookup_ideal(req.name), req.name))
        what = "Taylor complex"
    ok = bool(cx.verify_complex(C)) and cx.is_acyclic_multigraded(C, against)
    return _verdict(ok, f"{what} acyclic across the lcm lattice" if ok
                    else f"{what} not acyclic")


def dimension(req: sc.IdealRequest) -> sc.DimensionResponse:
    s = _session(req)
    return sc.DimensionResponse(
        dimension=gb.dimension(s.lookup_ideal(req.name), s.order))


def verify_case(req: sc.VerifyRequest) -> sc.VerifyResponse:
    spec = FamilySpec(case=req.case, n=req.n, a=req.a, b=req.b, c=req.c,
                      r=req.r, p=req.p, q=req.q, i=req.i)
    report = verify(spec)
    return sc.VerifyResponse(
        case=report.case,
        params=report.params,
        checks=[sc.CheckModel(**c.to_json()) for c in report.checks],
        passed=report.passed,
        wall_time=round(report.wall_time, 3),
        exit_code=0 if report.passed else 1,
    )


def selftest(req: sc.SelftestRequest) -> sc.SelftestResponse:
    checks = run_selftest(req.seed)
    passed = all(c.status == "pass" for c in checks)
    return sc.SelftestResponse(
        seed=req.seed,
        checks=[sc.CheckModel(**c.to_json()) for c in checks],
        passed=passed,
        exit_code=0 if passed else 1,
    )
