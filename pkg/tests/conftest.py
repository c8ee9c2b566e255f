import pytest

from hazardrisk import default_catalog, joint_probability, normalize_marginals


@pytest.fixture(scope="session")
def catalog():
    return default_catalog()


@pytest.fixture(scope="session")
def joint_table(catalog):
    p_f = normalize_marginals(list(catalog.friction_bands))
    p_v = normalize_marginals(list(catalog.visibility_bands))
    return joint_probability(p_f, p_v)
