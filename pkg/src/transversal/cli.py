"""Command-line frontend: a thin client over the service operations.

Each subcommand builds the same request model the HTTP endpoint accepts and
either executes it in process (default) or posts it to a running server via
``--server``.  One session file per invocation; no REPL.

Exit codes: 0 = true/verified, 1 = false/refuted, 2 = usage/parse error or
timeout, 3 = internal-consistency violation.  The code depends only on the
mathematical verdict, never on output format flags.
"""

from __future__ import annotations

import argparse
import json
import signal
import sys
from dataclasses import dataclass
from typing import Callable

from .errors import (ExactDivisionError, InternalConsistencyError,
                     TransversalError)
from .service import ops
from .service import schemas as sc

EXIT_TRUE = 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------

def _render_verdict(resp: sc.VerdictResponse, label: str) -> str:
    lines = [f"{label}: {'true' if resp.verdict else 'false'}"]
    if resp.detail:
        lines.append(f"  {resp.detail}")
    cert = resp.certificate or {}
    for side in ("intersection", "product", "lhs_basis", "rhs_basis"):
        if side in cert:
            lines.append(f"  {side}: {', '.join(cert[side]) or '0'}")
    return "\n".join(lines)


def _render_generators(resp: sc.GeneratorsResponse) -> str:
    lines = [f"generators ({resp.detail}):" if resp.detail else "generators:"]
    lines += [f"  {g}" for g in resp.generators] or ["  0"]
    return "\n".join(lines)


def _render_basis(resp: sc.BasisResponse) -> str:
    lines = [f"reduced Groebner basis ({resp.order}):"]
    lines += [f"  {p}" for p in resp.basis] or ["  0"]
    return "\n".join(lines)


def _render_complex(resp: sc.ComplexResponse) -> str:
    lines = [f"{resp.detail or 'complex'}",
             f"  level ranks: {' '.join(map(str, resp.ranks))}"]
    if resp.betti is not None:
        lines.append(f"  betti: {' '.join(map(str, resp.betti))}")
    return "\n".join(lines)


def _render_dimension(resp: sc.DimensionResponse) -> str:
    return f"dimension: {resp.dimension}"


def _render_checks(checks: list[sc.CheckModel]) -> list[str]:
    out = []
    for c in checks:
        line = f"  [{c.status}] {c.name}"
        if c.detail:
            line += f": {c.detail}"
        out.append(line)
    return out


def _render_verify(resp: sc.VerifyResponse) -> str:
    lines = [f"verify {resp.case} {resp.params}"]
    lines += _render_checks(resp.checks)
    lines.append("verified" if resp.passed else "refuted")
    return "\n".join(lines)


def _render_selftest(resp: sc.SelftestResponse) -> str:
    lines = [f"selftest (seed {resp.seed})"]
    lines += _render_checks(resp.checks)
    lines.append("all suites passed" if resp.passed else "FAILURES")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# command table
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Command:
    path: str
    build: Callable[[argparse.Namespace], object]
    op: Callable
    response_model: type
    render: Callable[[object], str]


def _session_text(args: argparse.Namespace) -> str:
    try:
        with open(args.session, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise _Usage(f"cannot read session file: {exc}") from None


class _Usage(Exception):
    pass


def _pair(args) -> sc.PairRequest:
    return sc.PairRequest(session=_session_text(args), lhs=args.lhs,
                          rhs=args.rhs, max_vars=args.max_vars)


def _ideal(args) -> sc.IdealRequest:
    return sc.IdealRequest(session=_session_text(args), name=args.name,
                           max_vars=args.max_vars)


COMMANDS: dict[str, Command] = {
    "check-transversal": Command(
        "/check-transversal", _pair, ops.check_transversal,
        sc.VerdictResponse, lambda r: _render_verdict(r, "transversal")),
    "intersect": Command(
        "/intersect", _pair, ops.intersect, sc.GeneratorsResponse,
        _render_generators),
    "product": Command(
        "/product", _pair, ops.product, sc.GeneratorsResponse,
        _render_generators),
    "groebner": Command(
        "/groebner", _ideal, ops.groebner, sc.BasisResponse, _render_basis),
    "quotient": Command(
        "/quotient",
        lambda a: sc.QuotientRequest(session=_session_text(a), ideal=a.ideal,
                                     by=a.by, max_vars=a.max_vars),
        ops.quotient, sc.GeneratorsResponse, _render_generators),
    "nzd": Command(
        "/nzd",
        lambda a: sc.NzdRequest(session=_session_text(a), ideal=a.ideal,
                                poly=a.poly, max_vars=a.max_vars),
        ops.nzd, sc.VerdictResponse,
        lambda r: _render_verdict(r, "nonzerodivisor")),
    "regseq": Command(
        "/regseq",
        lambda a: sc.RegseqRequest(session=_session_text(a), ideal=a.ideal,
                                   seq=[s for s in a.seq.split(",") if s.strip()],
                                   max_vars=a.max_vars),
        ops.regseq, sc.VerdictResponse,
        lambda r: _render_verdict(r, "regular sequence")),
    "taylor": Command(
        "/taylor", _ideal, ops.taylor, sc.ComplexResponse, _render_complex),
    "tensor": Command(
        "/tensor", _pair, ops.tensor, sc.ComplexResponse, _render_complex),
    "prune": Command(
        "/prune", _ideal, ops.prune, sc.ComplexResponse, _render_complex),
    "acyclic": Command(
        "/acyclic",
        lambda a: sc.AcyclicRequest(session=_session_text(a), name=a.name,
                                    against=a.against, max_vars=a.max_vars),
        ops.acyclic, sc.VerdictResponse,
        lambda r: _render_verdict(r, "acyclic")),
    "dimension": Command(
        "/dimension", _ideal, ops.dimension, sc.DimensionResponse,
        _render_dimension),
    "verify": Command(
        "/verify",
        lambda a: sc.VerifyRequest(case=a.case, n=a.n, a=a.a, b=a.b, c=a.c,
                                   r=a.r, p=a.p, q=a.q, i=a.i),
        ops.verify_case, sc.VerifyResponse, _render_verify),
    "selftest": Command(
        "/selftest",
        lambda a: sc.SelftestRequest(seed=a.seed),
        ops.selftest, sc.SelftestResponse, _render_selftest),
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="transversal",
        description="Exact certificates for transversal intersection of "
                    "polynomial ideals.")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true",
                        help="emit the JSON response instead of text")
    common.add_argument("--server", metavar="URL",
                        help="post the request to a running service instead "
                             "of computing in process")
    common.add_argument("--timeout-secs", type=float, default=None,
                        help="abort with exit code 2 after this many seconds")

    session = argparse.ArgumentParser(add_help=False)
    session.add_argument("--session", required=True, metavar="FILE",
                         help="session file (ring/order/ideal declarations)")
    session.add_argument("--max-vars", type=int, default=None,
                         help="reject sessions with more variables")

    def add(name: str, help_: str, *parents) -> argparse.ArgumentParser:
        return sub.add_parser(name, help=help_, parents=[common, *parents])

    p = add("check-transversal", "decide I cap J = I*J", session)
    p.add_argument("--lhs", required=True)
    p.add_argument("--rhs", required=True)
    p = add("intersect", "generators of I cap J", session)
    p.add_argument("--lhs", required=True)
    p.add_argument("--rhs", required=True)
    p = add("product", "generators of I*J", session)
    p.add_argument("--lhs", required=True)
    p.add_argument("--rhs", required=True)
    p = add("groebner", "reduced Groebner basis of a named ideal", session)
    p.add_argument("name")
    p = add("quotient", "ideal quotient (I : f)", session)
    p.add_argument("--ideal", required=True)
    p.add_argument("--by", required=True, metavar="POLY")
    p = add("nzd", "nonzerodivisor test modulo an ideal", session)
    p.add_argument("--ideal", required=True)
    p.add_argument("--poly", required=True)
    p = add("regseq", "regular-sequence test modulo an ideal", session)
    p.add_argument("--ideal", required=True)
    p.add_argument("--seq", required=True, metavar="f1,f2,...")
    p = add("taylor", "Taylor complex of a monomial ideal", session)
    p.add_argument("name")
    p = add("tensor", "tensor of the Taylor complexes of two monomial ideals",
            session)
    p.add_argument("lhs")
    p.add_argument("rhs")
    p = add("prune", "minimal complex pruned from the Taylor complex", session)
    p.add_argument("name")
    p = add("acyclic", "lcm-lattice acyclicity of a complex against an ideal",
            session)
    p.add_argument("name", help="monomial ideal (Taylor) or simplicial complex "
                               "(homogenized chain complex)")
    p.add_argument("--against", required=True, metavar="IDEAL")
    p = add("dimension", "Krull dimension of R/I", session)
    p.add_argument("name")
    p = add("verify", "replay a named family's transversality statements")
    p.add_argument("--case", required=True,
                   choices=["rnc", "rnc-sum", "xy", "hankel-h", "power"])
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--a", type=int, default=1)
    p.add_argument("--b", type=int, default=1)
    p.add_argument("--c", type=int, default=1)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--p", type=int, default=None)
    p.add_argument("--q", type=int, default=None)
    p.add_argument("--i", type=int, default=None)
    p = add("selftest", "seeded randomized property suites")
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    return parser


# ---------------------------------------------------------------------------
# execution
# ---------------------------------------------------------------------------

class _Timeout(Exception):
    pass


def _with_timeout(seconds: float | None, fn: Callable, *args):
    if not seconds or seconds <= 0:
        return fn(*args)

    def handler(signum, frame):
        raise _Timeout()

    old = signal.signal(signal.SIGALRM, handler)
    signal.setitimer(signal.ITIMER_REAL, seconds)
    try:
        return fn(*args)
    finally:
        signal.setitimer(signal.ITIMER_REAL, 0)
        signal.signal(signal.SIGALRM, old)


def _emit(resp, command: Command, as_json: bool) -> int:
    if as_json:
        print(json.dumps(resp.model_dump(), indent=2))
    else:
        print(command.render(resp))
    return resp.exit_code


def _run_remote(command: Command, req, args) -> int:
    import httpx

    url = args.server.rstrip("/") + command.path
    try:
        http_resp = httpx.post(url, json=req.model_dump(),
                               timeout=args.timeout_secs or 600.0)
    except httpx.TimeoutException:
        print(f"error: timeout after {args.timeout_secs} s", file=sys.stderr)
        return EXIT_USAGE
    except httpx.HTTPError as exc:
        print(f"error: cannot reach server: {exc}", file=sys.stderr)
        return EXIT_USAGE
    data = http_resp.json()
    if http_resp.status_code != 200:
        err = sc.ErrorResponse.model_validate(data)
        print(f"error: {err.error}", file=sys.stderr)
        return err.exit_code
    resp = command.response_model.model_validate(data)
    return _emit(resp, command, args.json)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)

    if args.command == "serve":
        import uvicorn

        from .service.app import app
        uvicorn.run(app, host=args.host, port=args.port)
        return EXIT_TRUE

    command = COMMANDS[args.command]
    try:
        req = command.build(args)
        if args.server:
            return _run_remote(command, req, args)
        resp = _with_timeout(args.timeout_secs, command.op, req)
        return _emit(resp, command, args.json)
    except _Timeout:
        print(f"error: timeout after {args.timeout_secs} s", file=sys.stderr)
        return EXIT_USAGE
    except _Usage as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InternalConsistencyError, ExactDivisionError) as exc:
        print(f"internal-consistency violation: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except TransversalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
