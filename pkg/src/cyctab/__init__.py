"""Cyclic descent maps on skew standard Young tableaux."""
from .cyclic import cdes, orbit, orbits, path_lemma_suite, phi, phi_inverse, verify_cdm
from .dynamics import Path, demote, demotion_path, promote, promotion_path, pseudo_promotion_path
from .errors import CyctabError
from .rotation import analyze, balance_points, is_unimodal, non_interference, rotate, rotate_inverse
from .shape import SkewShape, boundary, canonicalize, enumerate_shapes, format_shape, parse_shape
from .special_cases import classify, coincidence_suite
from .tableau import Tableau, descent_set, enumerate_syt, format_tableau, parse_tableau, render

__all__ = [
    "CyctabError", "Path", "SkewShape", "Tableau", "analyze", "balance_points", "boundary",
    "canonicalize", "cdes", "classify", "coincidence_suite", "demote", "demotion_path",
    "descent_set", "enumerate_shapes", "enumerate_syt", "format_shape", "format_tableau",
    "is_unimodal", "non_interference", "orbit", "orbits", "parse_shape", "parse_tableau",
    "path_lemma_suite", "phi", "phi_inverse", "promote", "promotion_path",
    "pseudo_promotion_path", "render", "rotate", "rotate_inverse", "verify_cdm",
]
