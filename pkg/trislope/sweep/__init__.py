from .sweeping_families import SweepResult, bound_defect, hyperelliptic_slope, sharp_slope, sweep_even, sweep_genus, sweep_odd, sweeping_bundle

__all__ = ["SweepResult", "bound_defect", "hyperelliptic_slope", "sharp_slope", "sweep_even", "sweep_genus", "sweep_odd", "sweeping_bundle"]
