"""Full-order solvers for the three PDE families."""

from .heat import HeatConfig, heat_initial_condition, solve_heat
from .burgers import BurgersConfig, burgers_source_profile, solve_burgers
from .cavity import CavityConfig, cavity_lid_profile, solve_cavity

__all__ = [
    "HeatConfig",
    "heat_initial_condition",
    "solve_heat",
    "BurgersConfig",
    "burgers_source_profile",
    "solve_burgers",
    "CavityConfig",
    "cavity_lid_profile",
    "solve_cavity",
]
