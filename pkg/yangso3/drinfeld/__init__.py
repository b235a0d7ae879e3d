from yangso3.drinfeld._checks import (
    check_current_relations,
    check_full_roundtrip,
    check_inverse_map,
    check_mode_relations,
    check_mode_roundtrip,
    check_surjectivity,
    current_relations,
)
from yangso3.drinfeld._currents import CURRENT_NAMES, Currents, Modes, currents_from_modes, extract_modes, phi_map

__all__ = [
    "CURRENT_NAMES",
    "Currents",
    "Modes",
    "check_current_relations",
    "check_full_roundtrip",
    "check_inverse_map",
    "check_mode_relations",
    "check_mode_roundtrip",
    "check_surjectivity",
    "current_relations",
    "currents_from_modes",
    "extract_modes",
    "phi_map",
]
