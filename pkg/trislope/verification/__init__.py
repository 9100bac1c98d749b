from .suite import check_chi, check_chow, check_class, check_row, check_sweeps, run_suite

__all__ = ["check_chi", "check_chow", "check_class", "check_row", "check_sweeps", "run_suite"]
