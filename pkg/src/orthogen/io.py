"""File and text formats: fixed-decimal tables, JSON, C headers, PGM blocks.

Pretty and CSV renderings use a fixed 7 decimal places, matching the
precision of published transform tables; JSON carries full double precision
for lossless pipelines.
"""

from __future__ import annotations

import json
import re

import numpy as np

from .core import OrthoMatrix
from .quantize import IntMatrix

DECIMALS = 7


def format_fixed(value: float) -> str:
    text = f"{value:.{DECIMALS}f}"
    if text == f"-0.{'0' * DECIMALS}":
        text = text[1:]
    return text


def matrix_to_csv(entries: np.ndarray) -> str:
    """Comma-separated rows, one line per row, no header, 7 decimals."""
    lines = [",".join(format_fixed(v) for v in row) for row in np.asarray(entries)]
    return "\n".join(lines) + "\n"


def int_matrix_to_csv(entries: np.ndarray) -> str:
    lines = [",".join(str(int(v)) for v in row) for row in np.asarray(entries)]
    return "\n".join(lines) + "\n"


def matrix_to_pretty(entries: np.ndarray) -> str:
    """Right-aligned fixed-decimal table for terminal display."""
    cells = [[format_fixed(v) for v in row] for row in np.asarray(entries)]
    width = max(len(c) for row in cells for c in row)
    return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells) + "\n"


def int_matrix_to_pretty(entries: np.ndarray) -> str:
    cells = [[str(int(v)) for v in row] for row in np.asarray(entries)]
    width = max(len(c) for row in cells for c in row)
    return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells) + "\n"


def ortho_matrix_to_json(matrix: OrthoMatrix) -> str:
    payload = {
        "n": matrix.n,
        "values": list(matrix.values),
        "entries": [list(row) for row in matrix.entries],
        "normScales": list(matrix.norm_scales),
    }
    return json.dumps(payload, indent=2) + "\n"


def int_matrix_to_json(im: IntMatrix) -> str:
    payload = {
        "n": im.n,
        "values": list(im.source.values),
        "entries": [[int(v) for v in row] for row in im.entries],
        "scale": im.scale,
    }
    return json.dumps(payload, indent=2) + "\n"


def int_matrix_to_c_header(
    im: IntMatrix, var_name: str = "g_mat", macro_name: str | None = None
) -> str:
    """Render an integer matrix as a C table, optionally behind a macro."""
    n = im.n
    width = max(len(str(int(v))) for row in im.entries for v in row)
    rows = [
        "{ " + ", ".join(str(int(v)).rjust(width) for v in row) + " }"
        for row in im.entries
    ]
    if macro_name is None:
        body = ",\n".join("  " + r for r in rows)
        return f"static const int {var_name}[{n}][{n}] =\n{{\n{body}\n}};\n"
    body = ", \\\n".join("  " + r for r in rows)
    return (
        f"#define {macro_name} \\\n"
        f"{{ \\\n{body} \\\n}}\n\n"
        f"static const int {var_name}[{n}][{n}] = {macro_name};\n"
    )


def parse_matrix_csv(text: str) -> np.ndarray:
    rows = []
    for line in text.splitlines():
        line = line.strip()
        if not line:
            continue
        try:
            rows.append([float(cell) for cell in line.split(",")])
        except ValueError as exc:
            raise ValueError(f"could not parse CSV row {line!r}") from exc
    if not rows:
        raise ValueError("empty matrix file")
    if any(len(r) != len(rows[0]) for r in rows):
        raise ValueError("ragged rows in matrix file")
    return np.array(rows, dtype=float)


def parse_matrix_json(text: str) -> np.ndarray:
    data = json.loads(text)
    if not isinstance(data, dict) or "entries" not in data:
        raise ValueError("matrix JSON must be an object with an 'entries' key")
    return np.array(data["entries"], dtype=float)


def read_matrix(path: str) -> np.ndarray:
    """Load a matrix from a CSV or JSON file (sniffed by content)."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return parse_matrix_json(text)
    return parse_matrix_csv(text)


def _read_pgm(data: bytes) -> np.ndarray:
    # Header: magic, width, height, maxval, separated by whitespace/comments.
    tokens: list[bytes] = []
    pos = 0
    while len(tokens) < 4:
        if pos >= len(data):
            raise ValueError("truncated PGM header")
        chunk = data[pos:]
        match = re.match(rb"\s*(#[^\n]*\n|\S+)", chunk)
        if match is None:
            raise ValueError("malformed PGM header")
        token = match.group(1)
        pos += match.end()
        if not token.startswith(b"#"):
            tokens.append(token)
    magic, width, height, maxval = tokens[0], int(tokens[1]), int(tokens[2]), int(tokens[3])
    if maxval <= 0 or maxval > 65535:
        raise ValueError(f"unsupported PGM maxval {maxval}")
    count = width * height
    if magic == b"P2":
        samples = np.array(data[pos:].split()[:count], dtype=float)
    elif magic == b"P5":
        pos += 1  # single whitespace byte after maxval
        dtype = ">u2" if maxval > 255 else "u1"
        samples = np.frombuffer(data, dtype=dtype, count=count, offset=pos).astype(float)
    else:
        raise ValueError(f"unsupported PGM magic {magic!r}")
    if samples.size != count:
        raise ValueError("truncated PGM payload")
    return samples.reshape(height, width)


def write_pgm(path: str, samples: np.ndarray, maxval: int = 255, binary: bool = True) -> None:
    """Write an integer grayscale block as P5 (binary) or P2 (ASCII)."""
    arr = np.asarray(samples)
    if arr.ndim != 2:
        raise ValueError("PGM payload must be 2-D")
    if (arr < 0).any() or (arr > maxval).any():
        raise ValueError(f"samples outside 0..{maxval}")
    header = f"{'P5' if binary else 'P2'}\n{arr.shape[1]} {arr.shape[0]}\n{maxval}\n"
    with open(path, "wb") as fh:
        fh.write(header.encode("ascii"))
        if binary:
            dtype = ">u2" if maxval > 255 else "u1"
            fh.write(arr.astype(dtype).tobytes())
        else:
            fh.write("\n".join(" ".join(str(int(v)) for v in row) for row in arr).encode("ascii"))
            fh.write(b"\n")


def read_block(path: str) -> np.ndarray:
    """Load a sample block from CSV or PGM (sniffed by magic bytes)."""
    with open(path, "rb") as fh:
        data = fh.read()
    if data[:2] in (b"P2", b"P5"):
        return _read_pgm(data)
    return parse_matrix_csv(data.decode("utf-8"))
