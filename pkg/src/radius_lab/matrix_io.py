"""Matrix JSON format: {"dim": n, "entries": [[[re, im], ...], ...]} with row-major entries."""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .errors import MatrixFormatError
from .linalg import as_matrix


def matrix_to_dict(A) -> dict:
    A = as_matrix(A)
    return {
        "dim": int(A.shape[0]),
        "entries": [[[float(z.real), float(z.imag)] for z in row] for row in A],
    }


def matrix_from_dict(payload) -> np.ndarray:
    if not isinstance(payload, dict) or set(payload) != {"dim", "entries"}:
        raise MatrixFormatError('expected an object with exactly the keys "dim" and "entries"')
    dim = payload["dim"]
    if not isinstance(dim, int) or isinstance(dim, bool) or dim < 1:
        raise MatrixFormatError(f"dim must be a positive integer, got {dim!r}")
    try:
        arr = np.array(payload["entries"], dtype=float)
    except (TypeError, ValueError) as exc:
        raise MatrixFormatError(f"entries are not numeric [re, im] pairs: {exc}") from None
    if arr.shape != (dim, dim, 2):
        raise MatrixFormatError(f"entries must have shape ({dim}, {dim}, 2), got {arr.shape}")
    return as_matrix(arr[..., 0] + 1j * arr[..., 1])


def dumps_matrix(A) -> str:
    return json.dumps(matrix_to_dict(A))


def loads_matrix(text: str) -> np.ndarray:
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MatrixFormatError(f"invalid JSON: {exc}") from None
    return matrix_from_dict(payload)


def read_matrix(path) -> np.ndarray:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise MatrixFormatError(f"cannot read {path}: {exc}") from None
    return loads_matrix(text)


def write_matrix(path, A) -> None:
    Path(path).write_text(dumps_matrix(A) + "\n", encoding="utf-8")
