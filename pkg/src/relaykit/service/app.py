"""FastAPI service wrapping the toolkit: corpus generation, feature export,
cascade training, evaluation, and record classification.

Run it with: uvicorn relaykit.service.app:app
"""

from __future__ import annotations

from fastapi import FastAPI, Request
from fastapi.responses import JSONResponse

from .. import __version__
from . import ops, schemas

app = FastAPI(title="relaykit", version=__version__,
              description="Protection analytics: transient corpus generation, "
                          "cascade training, and relay decisions")

#: process exit codes the CLI maps service failures onto
EXIT_CODES = {ops.ConfigError: 2, ops.DataError: 3, ops.ModelError: 4}


@app.exception_handler(ops.ConfigError)
@app.exception_handler(ops.DataError)
@app.exception_handler(ops.ModelError)
async def operation_error(_: Request, exc: Exception) -> JSONResponse:
    return JSONResponse(status_code=400,
                        content={"error": str(exc), "exit_code": EXIT_CODES[type(exc)]})


@app.get("/health")
def health() -> dict:
    return {"status": "ok", "version": __version__}


@app.get("/schemas")
def request_schemas() -> dict:
    return {
        "gen": schemas.GenRequest.model_json_schema(),
        "features": schemas.FeaturesRequest.model_json_schema(),
        "train": schemas.TrainRequest.model_json_schema(),
        "eval": schemas.EvalRequest.model_json_schema(),
        "classify": schemas.ClassifyRequest.model_json_schema(),
    }


@app.post("/gen", response_model=schemas.GenReport)
def gen(req: schemas.GenRequest) -> schemas.GenReport:
    return ops.op_gen(req)


@app.post("/features", response_model=schemas.FeaturesReport)
def features(req: schemas.FeaturesRequest) -> schemas.FeaturesReport:
    return ops.op_features(req)


@app.post("/train", response_model=schemas.TrainReport)
def train(req: schemas.TrainRequest) -> schemas.TrainReport:
    return ops.op_train(req)


@app.post("/eval", response_model=schemas.EvalReport)
def evaluate(req: schemas.EvalRequest) -> schemas.EvalReport:
    return ops.op_eval(req)


@app.post("/classify", response_model=schemas.ClassifyReport)
def classify(req: schemas.ClassifyRequest) -> schemas.ClassifyReport:
    return ops.op_classify(req)
