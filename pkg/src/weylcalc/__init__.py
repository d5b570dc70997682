"""Exact calculus of differential operators over the rational polynomial ring."""

from .poly import MultiIndex, Poly, monomials_up_to, reduce_by
from .operators import DiffOp, commutator
from .grothendieck import (
    grothendieck_order,
    is_derivation,
    is_order_at_most,
    split_order_one,
)
from .symbols import (
    SymbolElem,
    derivation_symbol,
    principal_symbol,
    quantize,
    symbol_mul,
)
from .jets import JetMap, d_basis, from_jet_map, restriction
from .laws import (
    ACCEPTANCE_CONFIG,
    GenConfig,
    IdealSpec,
    LawReport,
    LAWS,
    run_all,
    run_law,
)

__version__ = "0.1.0"

__all__ = [
    "MultiIndex",
    "Poly",
    "monomials_up_to",
    "reduce_by",
    "DiffOp",
    "commutator",
    "grothendieck_order",
    "is_derivation",
    "is_order_at_most",
    "split_order_one",
    "SymbolElem",
    "derivation_symbol",
    "principal_symbol",
    "quantize",
    "symbol_mul",
    "JetMap",
    "d_basis",
    "from_jet_map",
    "restriction",
    "ACCEPTANCE_CONFIG",
    "GenConfig",
    "IdealSpec",
    "LawReport",
    "LAWS",
    "run_all",
    "run_law",
]
