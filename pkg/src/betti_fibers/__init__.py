"""Betti fibers: every barcode behind a Betti curve, counted four independent ways."""

from .core import (
    Barcode,
    BettiCurve,
    Interval,
    betti_of,
    interval_to_root,
    root_to_interval,
    unit_barcode,
)
from .fiber import (
    YoungOverlay,
    brute_force_barcodes,
    count_barcodes,
    enumerate_barcodes,
    young_overlays,
)
from .juggling import (
    JugglingSequence,
    JugglingState,
    differential,
    enumerate_sequences,
    is_valid,
    kostant_via_juggling,
    sigma,
    sigma_inverse,
    throws_at,
    truncate,
)
from .kostant import (
    PositiveRoot,
    Weight,
    kostant_count,
    kostant_partitions,
    partition_to_barcode,
    positive_roots,
    weight_of_betti,
)

__all__ = [
    "Barcode", "BettiCurve", "Interval", "betti_of", "interval_to_root", "root_to_interval",
    "unit_barcode",
    "YoungOverlay", "brute_force_barcodes", "count_barcodes", "enumerate_barcodes",
    "young_overlays",
    "JugglingSequence", "JugglingState", "differential", "enumerate_sequences", "is_valid",
    "kostant_via_juggling", "sigma", "sigma_inverse", "throws_at", "truncate",
    "PositiveRoot", "Weight", "kostant_count", "kostant_partitions", "partition_to_barcode",
    "positive_roots", "weight_of_betti",
]
