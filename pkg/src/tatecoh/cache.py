"""Disk cache for complete-resolution windows.

A window is keyed by (algebra, module content hash, n_min, n_max) and
stored as one .npz holding every cover on both sides of the splice:
the cover's module actions, the cover matrix pi and its kernel rows.
A sha256 over the array bytes (in a fixed order) is stored alongside
and re-checked on load, and the payload carries a format version; a
stale or corrupt file is reported, never silently used.

Loading restores the covers into the in-process resolution registry, so
subsequent ``resolution_of``/``complete_resolution`` calls on an equal
module see the precomputed window.  Only the generic minimal resolution
is cached; the labelled resolution of k is formula-driven and needs no
cache.
"""
from __future__ import annotations

import hashlib
import io
import json
import os
from pathlib import Path

import numpy as np

from .algebra import ModuleRep
from .resolution import CompleteResolution, Cover, complete_resolution

CACHE_FORMAT = 1
ENV_CACHE_DIR = "TATECOH_CACHE_DIR"


class CacheError(RuntimeError):
    """Unusable cache file (bad version, bad integrity, wrong module)."""


def cache_dir(explicit=None) -> Path:
    """Resolve the cache directory: argument, then env var, then default."""
    if explicit is not None:
        return Path(explicit)
    env = os.environ.get(ENV_CACHE_DIR)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "tatecoh"


def window_path(module: ModuleRep, n_min: int, n_max: int,
                directory=None) -> Path:
    name = f"res-{module.content_key()[:24]}-{n_min}-{n_max}.npz"
    return cache_dir(directory) / name


def _cover_arrays(tag: str, cov: Cover) -> dict[str, np.ndarray]:
    out = {f"{tag}-pi": cov.pi, f"{tag}-ker": cov.kernel_rows}
    for i, a in enumerate(cov.module.actions):
        out[f"{tag}-act{i}"] = a
    return out


def _integrity(arrays: dict[str, np.ndarray]) -> str:
    h = hashlib.sha256()
    for name in sorted(arrays):
        h.update(name.encode())
        h.update(str(arrays[name].shape).encode())
        h.update(np.ascontiguousarray(arrays[name], dtype=np.int64).tobytes())
    return h.hexdigest()


def save_window(res: CompleteResolution, n_min: int, n_max: int,
                directory=None) -> Path:
    """Write the covers backing [n_min, n_max] for later restoration."""
    res.ensure(n_min, n_max)
    spec = res.spec
    arrays: dict[str, np.ndarray] = {}
    n_pos = max(0, n_max) + 1
    n_neg = max(0, -n_min) + 1
    for j in range(n_pos):
        arrays.update(_cover_arrays(f"pos{j}", res._pos[j]))
    for j in range(n_neg):
        arrays.update(_cover_arrays(f"neg{j}", res._neg[j]))
    header = {
        "format": CACHE_FORMAT,
        "p": spec.p,
        "rank": spec.rank,
        "names": list(spec.names),
        "module": res.module.content_key(),
        "n_min": n_min,
        "n_max": n_max,
        "n_pos": n_pos,
        "n_neg": n_neg,
        "integrity": _integrity(arrays),
    }
    path = window_path(res.module, n_min, n_max, directory)
    path.parent.mkdir(parents=True, exist_ok=True)
    buf = io.BytesIO()
    np.savez(buf, header=np.frombuffer(
        json.dumps(header, sort_keys=True).encode(), dtype=np.uint8),
        **arrays)
    path.write_bytes(buf.getvalue())
    return path


def _restore_cover(spec, arrays, tag: str) -> Cover:
    acts = []
    i = 0
    while f"{tag}-act{i}" in arrays:
        acts.append(np.asarray(arrays[f"{tag}-act{i}"], dtype=np.int64))
        i += 1
    mod = ModuleRep(spec, tuple(acts))
    cov = object.__new__(Cover)
    cov.module = mod
    cov.pi = np.asarray(arrays[f"{tag}-pi"], dtype=np.int64)
    cov.rank = cov.pi.shape[1] // spec.dim
    cov.kernel_rows = np.asarray(arrays[f"{tag}-ker"], dtype=np.int64)
    cov._syzygy = None
    return cov


def load_window(module: ModuleRep, n_min: int, n_max: int,
                directory=None) -> CompleteResolution | None:
    """Restore a saved window into the resolution for ``module``.

    Returns None when no file exists for this exact key.  Raises
    CacheError on version/integrity/module mismatch — a damaged file is
    an error, not a miss, so corruption cannot silently degrade to
    recomputation of something else.
    """
    path = window_path(module, n_min, n_max, directory)
    if not path.exists():
        return None
    with np.load(path) as data:
        arrays = {name: data[name] for name in data.files}
    header = json.loads(bytes(arrays.pop("header")).decode())
    if header.get("format") != CACHE_FORMAT:
        raise CacheError(f"{path}: cache format {header.get('format')!r}, "
                         f"expected {CACHE_FORMAT}")
    if header["module"] != module.content_key():
        raise CacheError(f"{path}: cached module does not match")
    if header["integrity"] != _integrity(arrays):
        raise CacheError(f"{path}: integrity hash mismatch")
    res = complete_resolution(module)
    spec = module.spec
    for j in range(len(res._pos), header["n_pos"]):
        res._pos.append(_restore_cover(spec, arrays, f"pos{j}"))
    for j in range(len(res._neg), header["n_neg"]):
        res._neg.append(_restore_cover(spec, arrays, f"neg{j}"))
    return res
