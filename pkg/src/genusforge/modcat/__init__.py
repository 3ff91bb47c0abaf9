"""Modular tensor category data: S/T matrices, fusion, anomaly checks."""

from .data import (
    ModularData,
    build_modular_data,
    from_quadratic_space,
    ising_data,
    modular_data_from_json,
    modular_data_to_json,
    product,
)
from .fusion import FusionTable, genus_dimension, verlinde_fusion
from .relations import RelationReport, verify_relations
from .voa import (
    ExtensionReport,
    VoaGenusSymbol,
    simple_current_extensions,
    voa_genus_equal,
    voa_milgram_check,
)

__all__ = [
    "ModularData",
    "build_modular_data",
    "from_quadratic_space",
    "ising_data",
    "modular_data_from_json",
    "modular_data_to_json",
    "product",
    "FusionTable",
    "genus_dimension",
    "verlinde_fusion",
    "RelationReport",
    "verify_relations",
    "ExtensionReport",
    "VoaGenusSymbol",
    "simple_current_extensions",
    "voa_genus_equal",
    "voa_milgram_check",
]
