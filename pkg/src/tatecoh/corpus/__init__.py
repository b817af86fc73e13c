"""Worked-example corpus: module presentations, golden data, reproductions.

Each entry ships as a presentation file under ``data/`` and is loaded
through the ordinary text parser, so the corpus exercises the same
input path a user would.  ``manifest()`` returns the frozen golden data
(dimension tables, verified readings of ambiguous formulas) keyed by
entry id; every table carries a ``source`` field saying where the
numbers come from ("example-text" for values transcribed from the
worked write-ups, "engine" for values this implementation computed and
froze, "definition" for immediate consequences of the construction).
"""
from __future__ import annotations

import json
from functools import lru_cache
from importlib import resources

import numpy as np

from ..algebra import ModuleRep, Presentation, presentation_class_map
from ..presentation import parse_presentation

__all__ = [
    "entry_ids",
    "manifest",
    "presentation",
    "module",
    "module_with_projection",
]


def _read(name: str) -> str:
    return (resources.files(__package__) / name).read_text(encoding="utf-8")


@lru_cache(maxsize=None)
def manifest() -> dict:
    return json.loads(_read("manifest.json"))


def entry_ids() -> tuple[str, ...]:
    return tuple(sorted(manifest()["entries"]))


def _entry(example_id: str) -> dict:
    entries = manifest()["entries"]
    if example_id not in entries:
        known = ", ".join(sorted(entries))
        raise KeyError(f"unknown corpus entry {example_id!r}; known: {known}")
    return entries[example_id]


@lru_cache(maxsize=None)
def presentation(example_id: str) -> Presentation:
    return parse_presentation(_read(_entry(example_id)["file"]))


@lru_cache(maxsize=None)
def _module_data(example_id: str):
    mod, proj = presentation_class_map(presentation(example_id))
    proj.setflags(write=False)
    return mod, proj


def module(example_id: str) -> ModuleRep:
    return _module_data(example_id)[0]


def module_with_projection(example_id: str) -> tuple[ModuleRep, np.ndarray]:
    """The quotient module and the class map from free-module coordinates."""
    return _module_data(example_id)
