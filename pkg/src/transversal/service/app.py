"""FastAPI application exposing the certificate engine.

Mathematical verdicts are HTTP 200 payloads (the ``verdict`` field and
``exit_code`` carry the outcome); parse/usage problems map to 400 and
internal-consistency violations to 500, mirroring the CLI exit codes 2 and 3.
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from ..errors import (CapExceededError, ExactDivisionError,
                      InternalConsistencyError, ParseError, PreconditionError,
                      TransversalError)
from . import ops
from . import schemas as sc

app = FastAPI(
    title="transversal",
    description="Exact certificates for transversal intersection of polynomial "
                "ideals, Taylor complexes, and simplicial resolution supports.",
    version="0.1.0",
)


@app.exception_handler(TransversalError)
async def _library_error(request: Request, exc: TransversalError) -> JSONResponse:
    if isinstance(exc, (InternalConsistencyError, ExactDivisionError)):
        status, exit_code = 500, 3
    elif isinstance(exc, (ParseError, PreconditionError, CapExceededError)):
        status, exit_code = 400, 2
    else:
        status, exit_code = 400, 2
    body = sc.ErrorResponse(
        error=getattr(exc, "message", None) or str(exc),
        kind=type(exc).__name__,
        line=getattr(exc, "line", None) or None,
        col=getattr(exc, "col", None) or None,
        exit_code=exit_code,
    )
    return JSONResponse(status_code=status, content=body.model_dump())


@app.get("/health")
def health() -> dict:
    return {"status": "ok"}


@app.post("/check-transversal", response_model=sc.VerdictResponse)
def check_transversal(req: sc.PairRequest):
    return ops.check_transversal(req)


@app.post("/intersect", response_model=sc.GeneratorsResponse)
def intersect(req: sc.PairRequest):
    return ops.intersect(req)


@app.post("/product", response_model=sc.GeneratorsResponse)
def product(req: sc.PairRequest):
    return ops.product(req)


@app.post("/groebner", response_model=sc.BasisResponse)
def groebner(req: sc.IdealRequest):
    return ops.groebner(req)


@app.post("/quotient", response_model=sc.GeneratorsResponse)
def quotient(req: sc.QuotientRequest):
    return ops.quotient(req)


@app.post("/nzd", response_model=sc.VerdictResponse)
def nzd(req: sc.NzdRequest):
    return ops.nzd(req)


@app.post("/regseq", response_model=sc.VerdictResponse)
def regseq(req: sc.RegseqRequest):
    return ops.regseq(req)


@app.post("/taylor", response_model=sc.ComplexResponse)
def taylor(req: sc.IdealRequest):
    return ops.taylor(req)


@app.post("/tensor", response_model=sc.ComplexResponse)
def tensor(req: sc.PairRequest):
    return ops.tensor(req)


@app.post("/prune", response_model=sc.ComplexResponse)
def prune(req: sc.IdealRequest):
    return ops.prune(req)


@app.post("/acyclic", response_model=sc.VerdictResponse)
def acyclic(req: sc.AcyclicRequest):
    return ops.acyclic(req)


@app.post("/dimension", response_model=sc.DimensionResponse)
def dimension(req: sc.IdealRequest):
    return ops.dimension(req)


@app.post("/verify", response_model=sc.VerifyResponse)
def verify(req: sc.VerifyRequest):
    return ops.verify_case(req)


@app.post("/selftest", response_model=sc.SelftestResponse)
def selftest(req: sc.SelftestRequest):
    return ops.selftest(req)
