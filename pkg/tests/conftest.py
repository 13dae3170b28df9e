"""Shared fixtures.

The expensive classification checks are computed once per session; the
classify module additionally caches profiles and fusion rings, so repeated
use across test files is cheap.
"""

import pytest

from hopf16 import classify


@pytest.fixture(scope="session")
def table1():
    return classify.reproduce_table1()


@pytest.fixture(scope="session")
def group_ring_report():
    return classify.group_ring_checks()


@pytest.fixture(scope="session")
def theorem_report():
    return classify.theorem_instance_checks()


@pytest.fixture(scope="session")
def character_report():
    return classify.character_action_checks()


@pytest.fixture(scope="session")
def quotient_report():
    return classify.quotient_checks()


@pytest.fixture(scope="session")
def twist_report():
    return classify.twist_cocycle_checks()


@pytest.fixture(scope="session")
def alternate_report():
    return classify.alternate_construction_checks()


@pytest.fixture(scope="session")
def iso_reports():
    return classify.parameter_isomorphism_checks()
