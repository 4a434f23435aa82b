"""Exact enumerative series of punctual Quot schemes of curves in threefolds."""

from ._core import (
    HeightConfig,
    aut_order,
    check_wallcross,
    chi_F,
    chi_quot_series,
    chi_quot_stratified,
    config_space_euler,
    count_one_leg,
    count_plane_partitions,
    dt_series,
    enumerate_one_leg,
    enumerate_plane_partitions,
    hilb_series,
    local_model_dt,
    local_model_series,
    macmahon,
    partitions_of,
    pt_series,
    sym_series,
    weighted_chi_quot_series,
)

__version__ = "0.1.0"

__all__ = [
    "HeightConfig",
    "aut_order",
    "check_wallcross",
    "chi_F",
    "chi_quot_series",
    "chi_quot_stratified",
    "config_space_euler",
    "count_one_leg",
    "count_plane_partitions",
    "dt_series",
    "enumerate_one_leg",
    "enumerate_plane_partitions",
    "hilb_series",
    "local_model_dt",
    "local_model_series",
    "macmahon",
    "partitions_of",
    "pt_series",
    "sym_series",
    "weighted_chi_quot_series",
]
