"""Rigorous upper bounds for the homotopy depth of finite polyhedra.

The pipeline: describe a space (sphere wedges/products or an explicit
chain complex with a fundamental-group descriptor), compute integer-exact
homology through Smith normal form, compute the splitting length of the
fundamental group (exhaustive subgroup search for finite groups, closed
forms otherwise), and combine them into a depth bound with the rule and
assumptions recorded.

>>> from polydepth import Sphere, best_bound, wedge
>>> best_bound(wedge(Sphere(1), Sphere(2))).bound
2
"""

from .abelian import (
    TRIVIAL_GROUP,
    FgAbelianGroup,
    direct_sum,
    from_boundary_maps,
    from_cyclic_factors,
    parse_abelian,
    render_abelian,
    sl_abelian,
    tensor_free,
)
from .catalog import (
    alternating4,
    catalog_abelian_factors,
    catalog_group,
    catalog_names,
    cyclic,
    dicyclic,
    dihedral,
    direct_product,
    pauli16,
    semidirect,
    symmetric3,
)
from .depth import (
    CIRCLE_CROSS_SPHERE_PROVENANCE,
    GENERAL_ASSUMPTIONS,
    TWO_DIM_ASSUMPTIONS,
    WEDGE_PROVENANCE,
    DepthBoundReport,
    NoBoundApplicable,
    WedgeDepthResult,
    best_bound,
    bound_2dim,
    bound_general,
    render_report,
    render_subwedge,
    report_to_json,
    sl_of,
    wedge_exact_depth,
)
from .errors import (
    CdNotFinite,
    CompositionNotZero,
    DimensionMismatch,
    DimensionNotTwo,
    NotFinitelyGenerated,
    OrderExceedsCap,
    PolydepthError,
    TorsionNotSupported,
    UnsupportedConstruction,
)
from .finitegroup import (
    DEFAULT_SEARCH_CAP,
    FiniteGroup,
    Prop32Report,
    SeriesResult,
    Subgroup,
    all_subgroups,
    describe_subgroup,
    format_cayley_table,
    is_complement,
    is_normal,
    is_retract,
    n1,
    n2,
    n3,
    parse_cayley_table,
    render_series,
    restrict_to_subgroup,
    subgroup_from_members,
    verify_prop32,
)
from .intlinalg import IntMatrix, SnfResult, determinant, rank, smith_normal_form
from .pi1 import (
    ElementaryAmenable,
    FgAbelian,
    Finite,
    Free,
    Pi1Descriptor,
    Trivial,
    fg_abelian,
    free,
    pi1_from_json,
    pi1_to_json,
    render_pi1,
)
from .topology import (
    EXAMPLE_COMPLEXES,
    ChainComplex,
    Explicit,
    HomologyProfile,
    Product,
    Sphere,
    Wedge,
    complex_from_json,
    complex_to_json,
    dim_of,
    euler_characteristic,
    homology,
    homology_of_complex,
    pi1_of,
    poincare_polynomial,
    product,
    profile_to_json,
    render_profile,
    space_from_json,
    space_to_json,
    universal_cover_homology,
    wedge,
)

__version__ = "0.1.0"

__all__ = [
    # integer linear algebra
    "IntMatrix",
    "SnfResult",
    "smith_normal_form",
    "rank",
    "determinant",
    # finitely generated abelian groups
    "FgAbelianGroup",
    "TRIVIAL_GROUP",
    "from_cyclic_factors",
    "from_boundary_maps",
    "sl_abelian",
    "direct_sum",
    "tensor_free",
    "render_abelian",
    "parse_abelian",
    # finite groups and splitting lengths
    "FiniteGroup",
    "Subgroup",
    "SeriesResult",
    "Prop32Report",
    "DEFAULT_SEARCH_CAP",
    "all_subgroups",
    "subgroup_from_members",
    "is_normal",
    "is_complement",
    "is_retract",
    "restrict_to_subgroup",
    "n1",
    "n2",
    "n3",
    "verify_prop32",
    "describe_subgroup",
    "render_series",
    "parse_cayley_table",
    "format_cayley_table",
    # group catalog
    "catalog_names",
    "catalog_group",
    "catalog_abelian_factors",
    "cyclic",
    "dihedral",
    "dicyclic",
    "direct_product",
    "semidirect",
    "symmetric3",
    "alternating4",
    "pauli16",
    # fundamental-group descriptors
    "Pi1Descriptor",
    "Trivial",
    "Finite",
    "FgAbelian",
    "Free",
    "ElementaryAmenable",
    "free",
    "fg_abelian",
    "render_pi1",
    "pi1_to_json",
    "pi1_from_json",
    # spaces and homology
    "ChainComplex",
    "Sphere",
    "Wedge",
    "Product",
    "Explicit",
    "wedge",
    "product",
    "dim_of",
    "HomologyProfile",
    "homology",
    "homology_of_complex",
    "universal_cover_homology",
    "pi1_of",
    "euler_characteristic",
    "poincare_polynomial",
    "render_profile",
    "profile_to_json",
    "space_to_json",
    "space_from_json",
    "complex_to_json",
    "complex_from_json",
    "EXAMPLE_COMPLEXES",
    # depth bounds
    "sl_of",
    "DepthBoundReport",
    "NoBoundApplicable",
    "bound_general",
    "bound_2dim",
    "best_bound",
    "wedge_exact_depth",
    "WedgeDepthResult",
    "render_subwedge",
    "report_to_json",
    "render_report",
    "GENERAL_ASSUMPTIONS",
    "TWO_DIM_ASSUMPTIONS",
    "WEDGE_PROVENANCE",
    "CIRCLE_CROSS_SPHERE_PROVENANCE",
    # errors
    "PolydepthError",
    "CompositionNotZero",
    "DimensionMismatch",
    "TorsionNotSupported",
    "OrderExceedsCap",
    "UnsupportedConstruction",
    "NotFinitelyGenerated",
    "DimensionNotTwo",
    "CdNotFinite",
]
