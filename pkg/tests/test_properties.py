"""Standalone runs of the randomized property suites."""

from property_suites import (
    run_colength_monotonicity,
    run_division_recombination,
    run_laufer_order_independence,
    run_minimality_oracle,
    run_spair_audit,
)


def test_spair_audit_suite():
    assert run_spair_audit() == 200


def test_division_recombination_suite():
    assert run_division_recombination() == 300


def test_laufer_order_independence_suite():
    assert run_laufer_order_independence() == 200


def test_minimality_oracle_suite():
    assert run_minimality_oracle() == 100


def test_colength_monotonicity_suite():
    assert run_colength_monotonicity() == 200
