from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, ConfigDict, Field
import uvicorn
from typing import Any, Dict, Optional
import argparse
import sys
import os

# --- Path Correction ---
ROOT_PATH = os.path.abspath(os.path.join(os.path.dirname(__file__), '..', '..'))
sys.path.insert(0, ROOT_PATH)

from src.config import SERVER_HOST, load_settings
from src.conv import conv_tool
from src.ktheory import ktheory_tool
from src.scenarios import scenario_tool

# --- FastAPI App ---
app = FastAPI(
    title="Fell Lab",
    description="Solve six-term sequences, verify projections and run the example scenarios over HTTP.",
    version="1.0.1",
)


# --- Pydantic Models ---
class SolveRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")
    extension: Dict[str, Any]


class VerifyRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")
    document: Dict[str, Any]
    samples: Optional[int] = Field(default=None, ge=1)
    tol: Optional[float] = Field(default=None, gt=0)
    workers: int = Field(default=1, ge=1)


class ExampleRequest(BaseModel):
    model_config = ConfigDict(extra="forbid")
    name: str
    params: Dict[str, Any] = {}


# --- Helper ---
def raise_for_status(result: dict) -> dict:
    """Bad input maps to 400; a failed verification is still a valid answer."""
    if result["status"] in ("error", "unsupported"):
        raise HTTPException(status_code=400, detail=result["message"])
    return result


# --- API Endpoints ---

@app.post("/ktheory/solve", summary="Solve the six-term sequence of an extension")
def solve_extension(request: SolveRequest):
    try:
        return raise_for_status(ktheory_tool.solve_ses_data(request.extension))
    except HTTPException:
        raise
    except Exception as e:
        raise HTTPException(status_code=500, detail=str(e))


@app.post("/verify", summary="Verify that an element is a projection")
def verify_element(request: VerifyRequest):
    try:
        return raise_for_status(conv_tool.verify_data(
            request.document, samples=request.samples, tol=request.tol, workers=request.workers
        ))
    except HTTPException:
        raise
    except Exception as e:
        raise HTTPException(status_code=500, detail=str(e))


@app.post("/example", summary="Run a named example scenario")
def run_example(request: ExampleRequest):
    try:
        return raise_for_status(scenario_tool.run_example(request.name, request.params))
    except HTTPException:
        raise
    except Exception as e:
        raise HTTPException(status_code=500, detail=str(e))


def main():
    """This function is the entry point for the command-line script."""
    parser = argparse.ArgumentParser(description="Fell Lab solver server")
    parser.add_argument("--port", type=int, default=load_settings().port, help="Port to run the server on")
    args = parser.parse_args()
    uvicorn.run(app, host=SERVER_HOST, port=args.port)


if __name__ == "__main__":
    main()
