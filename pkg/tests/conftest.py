import base64
from pathlib import Path

import pytest

from athos_forge.document import parse_form
from athos_forge.model import default_registry

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

# Smallest valid PNG (1x1 transparent pixel).
PNG_1X1 = base64.b64decode(
    "iVBORw0KGgoAAAANSUhEUgAAAAEAAAABCAQAAAC1HAwCAAAAC0lEQVR4nGNgYAAAAAMAAWgmWQ0AAAAASUVORK5CYII="
)


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def sample_bytes() -> bytes:
    return (FIXTURES / "sample.athos.json").read_bytes()


@pytest.fixture()
def sample_doc(sample_bytes):
    return parse_form(sample_bytes)


@pytest.fixture()
def registry():
    return default_registry()
