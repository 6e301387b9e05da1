"""
Shared fixtures for the regfiber test suite
"""

import json
import random
from importlib import resources

import pytest

from regfiber.algebra.codec import parse_elem
from regfiber.algebra.polylinalg import MatrixF
from regfiber.core.schema import fiber_from_json
from regfiber.lattice.rootcomb import LeviDatum
from regfiber.lattice.springer import FiberDatum


def elem(text):
    return parse_elem(text)


def matrix(rows):
    """MatrixF from rows of field-element text"""
    return MatrixF([[parse_elem(e) for e in r] for r in rows])


def diagonal(*entries):
    return MatrixF.diagonal([parse_elem(e) for e in entries])


def load_fixture(name):
    text = (resources.files("regfiber") / "fixtures" / name).read_text(encoding="utf-8")
    return json.loads(text)


@pytest.fixture
def rng():
    return random.Random(20240611)


@pytest.fixture
def sl2_u():
    """u = diag(ε, -ε) with M = A"""
    return FiberDatum.create(diagonal("eps", "-1*eps"), LeviDatum.torus(2))


@pytest.fixture
def split_gl3_u():
    """u = diag(ε, 2ε, 4ε) with M = A"""
    return FiberDatum.create(diagonal("eps", "2*eps", "4*eps"), LeviDatum.torus(3))


@pytest.fixture
def elliptic_gl4_u():
    """Two ramified blocks λ² - ε and λ² - 4ε"""
    return fiber_from_json(load_fixture("gl4_elliptic.json")["fiber"])
