import pytest

from mfnrel import fig3_fixture


@pytest.fixture(scope="session")
def fig3():
    return fig3_fixture()


@pytest.fixture()
def fig3_net(fig3):
    return fig3.network


@pytest.fixture()
def fig3_cat(fig3):
    return fig3.catalog
