import pytest

from rscodec import CodeParams, Field


@pytest.fixture(scope="session")
def gf8() -> Field:
    return Field(3)


@pytest.fixture(scope="session")
def gf16() -> Field:
    return Field(4)


@pytest.fixture(scope="session")
def gf256() -> Field:
    return Field(8)


@pytest.fixture(scope="session")
def rs73(gf8) -> CodeParams:
    return CodeParams(gf8, 3)


@pytest.fixture(scope="session")
def rs157(gf16) -> CodeParams:
    return CodeParams(gf16, 7)
