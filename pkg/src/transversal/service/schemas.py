"""Pydantic request/response models shared by the HTTP service and the CLI.

Every request carries the session source text, so the service is stateless.
Numeric content in responses is exact strings, never floats (wall times are
the only floats and are informational).
"""

from __future__ import annotations

from pydantic import BaseModel, Field


class SessionRequest(BaseModel):
    session: str
    max_vars: int | None = Field(default=None, ge=1, le=64)


class PairRequest(SessionRequest):
    lhs: str
    rhs: str


class IdealRequest(SessionRequest):
    name: str


class QuotientRequest(SessionRequest):
    ideal: str
    by: str


class NzdRequest(SessionRequest):
    ideal: str
    poly: str


class RegseqRequest(SessionRequest):
    ideal: str
    seq: list[str]


class AcyclicRequest(SessionRequest):
    name: str
    against: str


class VerifyRequest(BaseModel):
    case: str
    n: int = 2
    a: int = 1
    b: int = 1
    c: int = 1
    r: int = 1
    p: int | None = None
    q: int | None = None
    i: int | None = None


class SelftestRequest(BaseModel):
    seed: int = 0


class VerdictResponse(BaseModel):
    verdict: bool
    exit_code: int
    detail: str = ""
    certificate: dict | None = None


class GeneratorsResponse(BaseModel):
    generators: list[str]
    detail: str = ""
    exit_code: int = 0


class BasisResponse(BaseModel):
    basis: list[str]
    order: str
    exit_code: int = 0


class ComplexResponse(BaseModel):
    ranks: list[int]
    levels: list
    diffs: list
    betti: list[int] | None = None
    detail: str = ""
    exit_code: int = 0


class DimensionResponse(BaseModel):
    dimension: int
    exit_code: int = 0


class CheckModel(BaseModel):
    name: str
    status: str
    detail: str = ""
    certificate: dict | None = None


class VerifyResponse(BaseModel):
    case: str
    params: dict
    checks: list[CheckModel]
    passed: bool
    wall_time: float
    exit_code: int


class SelftestResponse(BaseModel):
    seed: int
    checks: list[CheckModel]
    passed: bool
    exit_code: int


class ErrorResponse(BaseModel):
    error: str
    kind: str
    line: int | None = None
    col: int | None = None
    exit_code: int = 2
