"""FastAPI service wrapping the operations layer.

Run with: uvicorn pshelix.service:app
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse, PlainTextResponse

from . import __version__, ops
from .schemas import (
    ClassifyRequestModel,
    ClassifyResponseModel,
    ProfileRequestModel,
    SolveRequestModel,
    SolveResponseModel,
    SurfaceRequestModel,
    TableRequestModel,
    TableResponseModel,
    VerifyRequestModel,
    VerifyResponseModel,
)

app = FastAPI(title="pshelix", version=__version__)


@app.exception_handler(ValueError)
async def domain_error_handler(request: Request, exc: ValueError):
    return JSONResponse(status_code=400, content={"detail": str(exc)})


@app.exception_handler(ArithmeticError)
async def numeric_error_handler(request: Request, exc: ArithmeticError):
    return JSONResponse(status_code=500, content={"detail": str(exc)})


@app.get("/")
def root() -> dict:
    return {"name": "pshelix", "version": __version__}


@app.post("/solve", response_model=SolveResponseModel)
def solve(req: SolveRequestModel) -> SolveResponseModel:
    return ops.solve_op(req)


@app.post("/classify", response_model=ClassifyResponseModel)
def classify(req: ClassifyRequestModel) -> ClassifyResponseModel:
    return ops.classify_op(req)


@app.post("/table", response_model=TableResponseModel)
def table(req: TableRequestModel) -> TableResponseModel:
    return ops.table_op(req)


@app.post("/verify", response_model=VerifyResponseModel)
def verify(req: VerifyRequestModel) -> VerifyResponseModel:
    return ops.verify_op(req)


@app.post("/profile.csv")
def profile_csv(req: ProfileRequestModel) -> PlainTextResponse:
    return PlainTextResponse(ops.profile_csv_op(req), media_type="text/csv")


@app.post("/surface.obj")
def surface_obj(req: SurfaceRequestModel) -> PlainTextResponse:
    return PlainTextResponse(ops.surface_obj_op(req), media_type="text/plain")
