"""Translations between the object theories."""
from .dagger import dagger
from .star import star, relativization_predicates, SORT_IMAGE
from .circle import circle, in_circle, mem_circle
from .zskol import DEFINITIONS, expand, unfold, abbreviations_used, simplify
from .zst import fixed_axioms, comprehension, strong_extensionality
from .common import Fresh

TRANSLATIONS = {"dagger": ("zst", "zermod"), "star": ("zermod", "zskol"), "circle": ("zskol", "zclass")}

__all__ = [
    "dagger", "star", "relativization_predicates", "SORT_IMAGE", "circle", "in_circle",
    "mem_circle", "DEFINITIONS", "expand", "unfold", "abbreviations_used", "simplify", "fixed_axioms",
    "comprehension", "strong_extensionality", "Fresh", "TRANSLATIONS",
]
