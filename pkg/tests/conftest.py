from __future__ import annotations

import json
from pathlib import Path

import pytest

from csstress import SimplicialComplex, instance_from_json

CORPUS_DIR = Path(__file__).resolve().parent.parent / "corpus"


def corpus_paths():
    return sorted(CORPUS_DIR.glob("*.json"))


def load_corpus():
    return [
        instance_from_json(p.read_text(), fallback_name=p.stem)
        for p in corpus_paths()
    ]


@pytest.fixture(scope="session")
def corpus():
    return load_corpus()


@pytest.fixture(scope="session")
def corpus_by_name(corpus):
    return {inst.name: inst for inst in corpus}


@pytest.fixture(scope="session")
def corpus_json():
    return {p.stem: json.loads(p.read_text()) for p in corpus_paths()}


@pytest.fixture
def octahedron():
    from csstress import cross_polytope_boundary

    return cross_polytope_boundary(3)


@pytest.fixture
def hexagon():
    from csstress import polygon

    return polygon(3)


@pytest.fixture
def noncm():
    return SimplicialComplex.from_facets([(1, 2), (-1, -2)])
