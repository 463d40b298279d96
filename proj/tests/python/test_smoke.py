# Copyright (c) 2026 The trishell authors.
# SPDX-License-Identifier: Apache-2.0
"""Smoke tests for the Python bindings."""

import random

import pytest

import trishell


def shuffled_relabeling(c, seed):
    labels = list(c.vertices)
    shuffled = labels[:]
    random.Random(seed).shuffle(shuffled)
    return dict(zip(labels, shuffled))


def test_complex_basics():
    c = trishell.Complex([["a", "b", "c", "d"]])
    assert c.facet_count == 1
    assert c.vertex_count == 4
    assert len(c.faces_of_rank(3)) == 4
    assert c.has_face(["a", "b"])

    absorbed = trishell.Complex([["a", "b"], ["a", "b", "c"]])
    assert absorbed.facet_count == 1

    with pytest.raises(trishell.Error):
        trishell.Complex([])


def test_validation():
    sphere = trishell.generate("simplex_boundary_4")
    assert trishell.validate(sphere)["verdict"] is True

    tet = trishell.Complex([["a", "b", "c", "d"]])
    report = trishell.validate(tet)
    assert report["verdict"] is False
    assert "pseudo_manifold" in report["failed_checks"]

    link = sphere.vertex_link("0")
    assert trishell.surface_is_sphere(link)["is_sphere"] is True
    assert trishell.surface_is_orientable(trishell.catalog("CE_5")) is False


def test_enumeration_counts():
    summary = trishell.enumerate_shells("cyclic", 3, 8)
    counts = [entry["count"] for entry in summary]
    assert counts == [1, 1, 2, 3, 1, 2]
    assert trishell.verify_classification(3, 9)["ok"] is True


def test_reconstruction_round_trip():
    t = trishell.generate("cycle_join", p=3, q=4)
    rho = shuffled_relabeling(t, seed=7)
    t2 = trishell.relabel(t, rho)

    maps = trishell.find_maps(t, t2, limit=1)
    assert len(maps) == 1

    report = trishell.reconstruct(t, t2)
    assert report["phi_verified"] is True
    assert trishell.certify(t, t2, report["phi"], [tuple(p) for p in report["map"]])


def test_shell_detection_and_canonical_forms():
    ls5 = trishell.catalog("LS_5")
    witness = trishell.detect_shell(ls5)
    assert witness["kind"] == "lineal"
    assert witness["catalog_id"] == "LS_5"

    key = trishell.canonical_key(ls5)
    relabeled = trishell.relabel(ls5, shuffled_relabeling(ls5, seed=3))
    assert trishell.canonical_key(relabeled) == key
    assert trishell.are_isomorphic(ls5, relabeled) is not None
    assert trishell.are_isomorphic(ls5, trishell.catalog("3LW_5")) is None

    order, entries = trishell.intersection_matrix(trishell.generate("simplex_boundary_4"))
    assert len(order) == 5
    assert all(entries[i][i] == 4 for i in range(5))


def test_text_round_trip():
    c = trishell.generate("cross_polytope_3")
    text = trishell.to_text(c, "cross")
    assert trishell.parse(text) == c
