"""Exact computations with reductive pairs of complex Lie algebras:
root systems, compatible parabolic subalgebras, genericity of k-types,
and k-type multiplicity tables of cohomologically induced series."""

from .fundseries import (
    InducingModule,
    InfinitesimalCharacter,
    MinimalKTypeReport,
    MultiplicityTable,
    PartitionCounter,
    dominant_representative,
    euler_multiplicity,
    inducing_module,
    infinitesimal_character,
    kostant_weights,
    ktype_table,
    multiplicity_bound,
    partition_count,
    verify_minimal_ktype,
)
from .genericity import (
    GenericityReport,
    is_generic,
    iter_submultisets,
    minimal_ktype,
    norm2_shifted,
    sl2_threshold,
)
from .parabolic import CompatibleParabolic, RootSplit, compatible_parabolic, is_regular, split_roots
from .reductive import (
    ReductivePair,
    make_cartan_pair,
    make_explicit_pair,
    make_levi_pair,
    make_sl2_pair,
    restrict,
    t_pair,
)
from .rootsystem import (
    CapExceeded,
    LieType,
    RootSystem,
    WeylElement,
    build_root_system,
    pair,
    weyl_dim,
    weyl_group,
)
from .weights import Weight, WeightMultiset, half_sum, vec, weight

__all__ = [
    "CapExceeded",
    "CompatibleParabolic",
    "GenericityReport",
    "InducingModule",
    "InfinitesimalCharacter",
    "LieType",
    "MinimalKTypeReport",
    "MultiplicityTable",
    "PartitionCounter",
    "ReductivePair",
    "RootSplit",
    "RootSystem",
    "Weight",
    "WeightMultiset",
    "WeylElement",
    "build_root_system",
    "compatible_parabolic",
    "dominant_representative",
    "euler_multiplicity",
    "half_sum",
    "inducing_module",
    "infinitesimal_character",
    "is_generic",
    "is_regular",
    "iter_submultisets",
    "kostant_weights",
    "ktype_table",
    "make_cartan_pair",
    "make_explicit_pair",
    "make_levi_pair",
    "make_sl2_pair",
    "minimal_ktype",
    "multiplicity_bound",
    "norm2_shifted",
    "pair",
    "partition_count",
    "restrict",
    "sl2_threshold",
    "split_roots",
    "t_pair",
    "vec",
    "verify_minimal_ktype",
    "weight",
    "weyl_dim",
    "weyl_group",
]

__version__ = "0.1.0"
