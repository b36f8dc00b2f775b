"""
Public API facade for the K-theory package.
It re-exports the main functions from the internal modules and wraps the
file-level solve in a status dictionary.
"""
import logging

from src.errors import FellLabError, UnsupportedInputError
from .groups import FgAbGroup, cokernel, kernel
from .intmatrix import IntMatrix
from .pinch import MANIFOLD_K, pinch_k_theory, pinch_strata_oracle
from .reference_data import REFERENCES, reference
from .ses_file import load_ses, parse_ses, ses_to_dict
from .six_term import DualityResult, TwoStrataSES, duality_check, k_homology, solve_six_term
from .snf import SNFResult, smith_normal_form
from .stratified import Edge, OneDStratified, two_strata_ses, vertex_class_boundary

logger = logging.getLogger(__name__)


def solve_ses_file(path: str) -> dict:
    """Loads an extension description and solves it. status: success | unsupported | error."""
    try:
        ses = load_ses(path)
        K0, K1 = solve_six_term(ses)
        return {
            "status": "success",
            "message": f"K0 = {K0}, K1 = {K1}",
            "K0": str(K0),
            "K1": str(K1),
            "extension": ses_to_dict(ses),
        }
    except UnsupportedInputError as e:
        return {"status": "unsupported", "message": str(e)}
    except FellLabError as e:
        return {"status": "error", "message": str(e)}
    except (ValueError, TypeError) as e:
        logger.warning("malformed input: %s", e)
        return {"status": "error", "message": f"Malformed input: {e}"}


def solve_ses_data(data: dict) -> dict:
    """Same as solve_ses_file for already decoded JSON."""
    try:
        ses = parse_ses(data)
        K0, K1 = solve_six_term(ses)
        return {"status": "success", "message": f"K0 = {K0}, K1 = {K1}", "K0": str(K0), "K1": str(K1)}
    except UnsupportedInputError as e:
        return {"status": "unsupported", "message": str(e)}
    except FellLabError as e:
        return {"status": "error", "message": str(e)}
    except (ValueError, TypeError) as e:
        logger.warning("malformed input: %s", e)
        return {"status": "error", "message": f"Malformed input: {e}"}


__all__ = [
    'DualityResult',
    'Edge',
    'FgAbGroup',
    'IntMatrix',
    'MANIFOLD_K',
    'OneDStratified',
    'REFERENCES',
    'SNFResult',
    'TwoStrataSES',
    'cokernel',
    'duality_check',
    'k_homology',
    'kernel',
    'load_ses',
    'parse_ses',
    'pinch_k_theory',
    'pinch_strata_oracle',
    'reference',
    'ses_to_dict',
    'smith_normal_form',
    'solve_ses_data',
    'solve_ses_file',
    'solve_six_term',
    'two_strata_ses',
    'vertex_class_boundary',
]
