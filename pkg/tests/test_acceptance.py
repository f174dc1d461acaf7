"""Acceptance checklist.

Each test runs one numbered criterion from lecalc.selftest — the same code
path as `lecalc selftest` — so `pytest -v` prints one pass/fail line per
criterion.  All comparisons inside the criteria are exact (no tolerances).
"""

import pytest

from lecalc.selftest import (SelfTestEnv, criterion_brieskorn,
                             criterion_gamma1, criterion_ilm,
                             criterion_le_numbers, criterion_polar_ideal,
                             criterion_polar_ratio, criterion_properties,
                             criterion_suspension, criterion_verdict,
                             criterion_weights)


@pytest.fixture(scope="module")
def env():
    environment = SelfTestEnv(seed=0)
    environment.load_corpus()
    return environment


def test_01_weights_of_the_nonupper_base(env):
    assert criterion_weights(env)


def test_02_generic_polar_ideal_mutual_membership(env):
    assert criterion_polar_ideal(env)


def test_03_polar_number_gamma1_at_both_slices(env):
    assert criterion_gamma1(env)


def test_04_orders_and_cmt3_contrapositive(env):
    assert criterion_verdict(env)


def test_05_le_numbers_and_intersection_cross_check(env):
    assert criterion_le_numbers(env)


def test_06_polar_ratio_lemma(env):
    assert criterion_polar_ratio(env)


def test_07_augmentation_identity_tables(env):
    assert criterion_ilm(env)


def test_08_suspension_family_and_mt2(env):
    assert criterion_suspension(env)


def test_09_brieskorn_milnor_numbers(env):
    assert criterion_brieskorn(env)


def test_10_property_suites(env):
    assert criterion_properties(env)
