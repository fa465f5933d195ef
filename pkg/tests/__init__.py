from .timing_utils import measure_time

__all__ = ["measure_time"]
