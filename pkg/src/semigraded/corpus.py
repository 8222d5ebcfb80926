"""Presentations shipped with the package (``.sga`` files under ``data/``)."""

from __future__ import annotations

from importlib import resources

from .presentation import Presentation, parse_presentation

# the six algebras every release is validated against
CORE = ("quantum_plane", "weyl_q", "weyl_gf5", "jordan_gf3", "3dim", "homogenized_weyl")


def path(name: str):
    return resources.files("semigraded") / "data" / f"{name}.sga"


def names() -> list:
    return sorted(p.name[:-4] for p in (resources.files("semigraded") / "data").iterdir() if p.name.endswith(".sga"))


def load(name: str) -> Presentation:
    return parse_presentation(path(name).read_text(encoding="utf-8"))
