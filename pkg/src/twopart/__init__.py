"""Two-part extremal set systems: constructions, predicates and exact searches."""
__version__ = "0.1.0"
