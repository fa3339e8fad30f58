import json
from pathlib import Path

import pytest

from exciton_decoherence import CrystalliteConfig, decoherence_profile, get_material

DATA = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def golden():
    return json.loads((DATA / "golden_tau.json").read_text())


@pytest.fixture(scope="session")
def cds():
    return get_material("CdS")


@pytest.fixture(scope="session")
def gaas():
    return get_material("GaAs")


@pytest.fixture(scope="session")
def cds300(cds):
    return CrystalliteConfig(cds, 300.0)


@pytest.fixture(scope="session")
def profile(cds300):
    return decoherence_profile(cds300)
