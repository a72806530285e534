"""Model files: a magic line, one line of JSON header, then raw little-endian tensors.

Header fields: ``version``, ``spec`` (canonical string with explicit filter
counts), ``codec`` (list of characters, blank excluded), ``hyper`` and
``tensors``: ``[name, dtype, shape, offset, nbytes]`` in body order.
"""

from __future__ import annotations

import json
import os
import tempfile
from pathlib import Path

import numpy as np

from .codec import Codec
from .model import Model, layer_shapes
from .netspec import SpecError, parse_spec, render_spec
from .nn.layers import LayerParams

MAGIC = b"LINEOCR-MODEL\n"
VERSION = 1
_DTYPES = {"f4": np.dtype("<f4"), "f8": np.dtype("<f8")}


class ModelFileError(ValueError):
    pass


class NotAModelFile(ModelFileError):
    pass


class VersionMismatch(ModelFileError):
    pass


class TruncatedBody(ModelFileError):
    pass


class UnknownTensor(ModelFileError):
    pass


def _dtype_code(a: np.ndarray) -> str:
    for code, dt in _DTYPES.items():
        if a.dtype == dt or a.dtype == dt.newbyteorder("="):
            return code
    raise ModelFileError(f"unsupported tensor dtype {a.dtype}")


def model_bytes(model: Model) -> bytes:
    index, blobs, offset = [], [], 0
    for name, w in model.named_weights():
        code = _dtype_code(w)
        blob = np.ascontiguousarray(w, dtype=_DTYPES[code]).tobytes()
        index.append([name, code, list(w.shape), offset, len(blob)])
        blobs.append(blob)
        offset += len(blob)
    header = {
        "version": VERSION,
        "spec": render_spec(model.spec, explicit_filters=True),
        "codec": list(model.codec.chars),
        "hyper": model.hyper,
        "tensors": index,
    }
    head = json.dumps(header, sort_keys=True, ensure_ascii=False, separators=(",", ":"), default=float)
    return MAGIC + head.encode("utf-8") + b"\n" + b"".join(blobs)


def save_model(model: Model, path) -> None:
    """Write atomically: a temporary file in the target directory is renamed into place."""
    path = Path(path)
    data = model_bytes(model)
    try:
        fd, tmp = tempfile.mkstemp(prefix=f".{path.name}.", dir=path.parent)
    except OSError as exc:
        raise OSError(f"cannot write model to {path}: {exc}") from exc
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        Path(tmp).unlink(missing_ok=True)
        raise


def load_model(path) -> Model:
    data = Path(path).read_bytes()
    if not data.startswith(MAGIC):
        raise NotAModelFile(f"{path}: not a model file")
    nl = data.find(b"\n", len(MAGIC))
    if nl < 0:
        raise TruncatedBody(f"{path}: truncated header")
    try:
        header = json.loads(data[len(MAGIC) : nl].decode("utf-8"))
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise NotAModelFile(f"{path}: unreadable header ({exc})") from None
    if header.get("version") != VERSION:
        raise VersionMismatch(f"{path}: format version {header.get('version')}, expected {VERSION}")
    try:
        spec = parse_spec(header["spec"])
    except SpecError as exc:
        raise ModelFileError(f"{path}: bad network spec: {exc}") from None
    codec = Codec(tuple(header["codec"]))
    body = memoryview(data)[nl + 1 :]

    expected = layer_shapes(spec, len(codec))
    weights: dict[str, dict[str, np.ndarray]] = {name: {} for name in expected}
    end = 0
    for name, code, shape, offset, nbytes in header["tensors"]:
        layer, _, key = name.partition("/")
        if layer not in expected or key not in expected[layer]:
            raise UnknownTensor(f"{path}: unknown tensor {name!r}")
        if tuple(shape) != tuple(expected[layer][key]):
            raise ModelFileError(f"{path}: tensor {name} has shape {shape}, expected {expected[layer][key]}")
        if key in weights[layer]:
            raise ModelFileError(f"{path}: tensor {name} stored twice")
        if offset != end:
            raise ModelFileError(f"{path}: tensor {name} at offset {offset}, expected {end}")
        dt = _DTYPES.get(code)
        if dt is None or nbytes != dt.itemsize * int(np.prod(shape)):
            raise ModelFileError(f"{path}: tensor {name} has inconsistent dtype/size")
        if offset + nbytes > len(body):
            raise TruncatedBody(f"{path}: truncated body")
        arr = np.frombuffer(body[offset : offset + nbytes], dtype=dt).reshape(shape)
        weights[layer][key] = arr.astype(dt.newbyteorder("="), copy=True)
        end = offset + nbytes
    if end != len(body):
        raise ModelFileError(f"{path}: {len(body) - end} trailing bytes after the last tensor")
    layers = []
    for name, shapes in expected.items():
        missing = shapes.keys() - weights[name].keys()
        if missing:
            raise ModelFileError(f"{path}: missing tensors {sorted(f'{name}/{k}' for k in missing)}")
        layers.append(LayerParams(name, {k: weights[name][k] for k in shapes}))
    return Model(spec, codec, layers, header.get("hyper", {}))
