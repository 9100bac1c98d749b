from .divisor_class import BASES, DivisorClass, SurfaceId
from .surface_model import OrbiPoint, SurfaceModel, intersect, make_surface, with_orbi_points

__all__ = ["BASES", "DivisorClass", "SurfaceId", "OrbiPoint", "SurfaceModel", "intersect", "make_surface", "with_orbi_points"]
