"""Euler-integral target counting on sensor grids."""

from ._core import (
    asymptotic_integral,
    calibrate,
    corrected_b,
    error_type_counts,
    euler_integral,
    invert_estimate,
    make_field,
    one_layer_h,
    predicted_integral,
    run_experiment,
    run_trial,
    second_order_c,
    simulate_field,
)

__all__ = [
    "asymptotic_integral",
    "calibrate",
    "corrected_b",
    "error_type_counts",
    "euler_integral",
    "invert_estimate",
    "make_field",
    "one_layer_h",
    "predicted_integral",
    "run_experiment",
    "run_trial",
    "second_order_c",
    "simulate_field",
]
