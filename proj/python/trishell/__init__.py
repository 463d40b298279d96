# Copyright (c) 2026 The trishell authors.
# SPDX-License-Identifier: Apache-2.0
"""Combinatorial triangulations of closed 3-manifolds: validation,
intersection matrices, isomorphism reconstruction from facet bijections,
and exhaustive shell classification."""

from trishell._core import (
    Complex,
    Error,
    are_isomorphic,
    canonical_key,
    catalog,
    catalog_names,
    certify,
    check_pseudo_manifold,
    detect_shell,
    enumerate_shells,
    find_maps,
    generate,
    intersection_matrix,
    is_intersection_preserving,
    lift_2_shell,
    parse,
    reconstruct,
    relabel,
    surface_is_orientable,
    surface_is_sphere,
    to_text,
    validate,
    verify_classification,
    wheel_shell,
)

__version__ = "0.1.0"

__all__ = [
    "Complex",
    "Error",
    "are_isomorphic",
    "canonical_key",
    "catalog",
    "catalog_names",
    "certify",
    "check_pseudo_manifold",
    "detect_shell",
    "enumerate_shells",
    "find_maps",
    "generate",
    "intersection_matrix",
    "is_intersection_preserving",
    "lift_2_shell",
    "parse",
    "reconstruct",
    "relabel",
    "surface_is_orientable",
    "surface_is_sphere",
    "to_text",
    "validate",
    "verify_classification",
    "wheel_shell",
]
