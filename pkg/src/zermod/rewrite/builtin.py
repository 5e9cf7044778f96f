"""The three bundled rewrite systems, loaded from the package fixtures."""
from __future__ import annotations

import functools
import os
from importlib import resources
from pathlib import Path

from .rules import RewriteSystem, parse_rules

FIXTURE_ENV = "ZERMOD_FIXTURE_DIR"
BUILTIN = {"zermod": "zermod.rules", "arith": "arith.rules", "naive": "naive.rules"}


def fixture_text(filename: str) -> str:
    """Read a bundled fixture, honouring the optional directory override."""
    override = os.environ.get(FIXTURE_ENV)
    if override:
        p = Path(override) / filename
        if p.exists():
            return p.read_text(encoding="utf-8")
    return (resources.files("zermod") / "data" / filename).read_text(encoding="utf-8")


@functools.lru_cache(maxsize=None)
def _load(name, override):
    return parse_rules(fixture_text(BUILTIN[name]), name=name)


def _get(name):
    return _load(name, os.environ.get(FIXTURE_ENV))


def zermod_rules() -> RewriteSystem:
    return _get("zermod")


def arith_rules() -> RewriteSystem:
    return _get("arith")


def naive_comprehension_rules() -> RewriteSystem:
    return _get("naive")


def load_system(fsig: str) -> RewriteSystem:
    """A built-in system by name, or a rule file by path."""
    if fsig in BUILTIN:
        return _get(fsig)
    path = Path(fsig)
    return parse_rules(path.read_text(encoding="utf-8"), name=path.stem)
