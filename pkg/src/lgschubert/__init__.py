"""lg-schubert -- exact Schubert calculus on Lagrangian Grassmannians.

Public API re-exported from sub-modules::

    from lgschubert import parse_class_expr, integrate_lg, quantum_product
"""

try:
    from ._version import __version__
except Exception:
    __version__ = "0.0.0"

from .combinat import (
    SignedAssignment,
    StrictPartition,
    all_strict_partitions,
    dual,
    format_partition,
    is_admissible,
    parse_partition,
    random_admissible_lambdas,
    random_distinct_weights,
    signed_assignments,
    staircase,
    strict_partitions,
)
from .config_runtime import EngineSettings, load_settings
from .config_sources import DictSource, EnvSource, JsonTreeSource, TreeSource, YamlTreeSource, expand_env
from .constants import LOGGER, LOGGER_NAME
from .exceptions import (
    AdmissibilityError,
    ConfigurationError,
    DegreeError,
    ExpressionSyntaxError,
    IntegralityError,
    InvariantViolationError,
    LGSchubertError,
    PartitionError,
    PreconditionError,
    RankLimitError,
    RouteMismatchError,
    SymmetryError,
    UnsupportedDegreeError,
    VariableCountError,
)
from .idlab import (
    IdentityCheck,
    MonicRootSet,
    VerificationReport,
    lemma1_sum,
    lemma2_sum,
    reduction_check,
    remark_check,
    theorem1_check,
    verify_duality,
    verify_identity,
    verify_lemma1,
    verify_lemma2,
    verify_reduction,
    verify_relation,
    verify_routes,
)
from .integrate import (
    CoefficientCertificate,
    Route,
    c_coeff,
    certify,
    integrate,
    integrate_grassmannian,
    integrate_grassmannian_staircase,
    integrate_lg,
    integrate_lg_dp,
    localization_grassmannian,
    localization_lg,
    relation1_check,
)
from .lgcalc import QuantumProduct, degree_lg, degree_lg_via_integral, gw1, quantum_product, structure_constant
from .parser import parse_class_expr
from .polyring import (
    SparsePoly,
    StructuredProducts,
    add,
    coeff,
    coefficient_of_product,
    elem_sym,
    evaluate,
    is_symmetric,
    mul,
    mul_pruned,
    pruned_product,
    structured_products,
)
from .symclasses import (
    ClassExpr,
    qtilde,
    qtilde2,
    qtilde_pfaffian,
    random_class,
    schubert_staircase_poly,
    sigma_monomials,
    special,
    to_chern_roots,
)

__all__ = [
    "__version__",
    "LOGGER",
    "LOGGER_NAME",
    # polynomials
    "SparsePoly",
    "StructuredProducts",
    "add",
    "mul",
    "mul_pruned",
    "pruned_product",
    "coeff",
    "coefficient_of_product",
    "evaluate",
    "is_symmetric",
    "elem_sym",
    "structured_products",
    # partitions and weights
    "StrictPartition",
    "SignedAssignment",
    "dual",
    "strict_partitions",
    "all_strict_partitions",
    "staircase",
    "signed_assignments",
    "parse_partition",
    "format_partition",
    "is_admissible",
    "random_admissible_lambdas",
    "random_distinct_weights",
    # classes
    "ClassExpr",
    "special",
    "qtilde2",
    "qtilde",
    "qtilde_pfaffian",
    "to_chern_roots",
    "schubert_staircase_poly",
    "sigma_monomials",
    "random_class",
    "parse_class_expr",
    # integration
    "Route",
    "CoefficientCertificate",
    "c_coeff",
    "integrate",
    "integrate_lg",
    "integrate_lg_dp",
    "localization_lg",
    "localization_grassmannian",
    "integrate_grassmannian",
    "integrate_grassmannian_staircase",
    "relation1_check",
    "certify",
    # identities
    "MonicRootSet",
    "IdentityCheck",
    "VerificationReport",
    "lemma1_sum",
    "lemma2_sum",
    "theorem1_check",
    "remark_check",
    "reduction_check",
    "verify_identity",
    "verify_lemma1",
    "verify_lemma2",
    "verify_reduction",
    "verify_relation",
    "verify_routes",
    "verify_duality",
    # geometry
    "QuantumProduct",
    "degree_lg",
    "degree_lg_via_integral",
    "structure_constant",
    "gw1",
    "quantum_product",
    # settings
    "EngineSettings",
    "load_settings",
    "TreeSource",
    "DictSource",
    "JsonTreeSource",
    "YamlTreeSource",
    "EnvSource",
    "expand_env",
    # errors
    "LGSchubertError",
    "PreconditionError",
    "VariableCountError",
    "DegreeError",
    "PartitionError",
    "AdmissibilityError",
    "SymmetryError",
    "UnsupportedDegreeError",
    "RankLimitError",
    "ExpressionSyntaxError",
    "ConfigurationError",
    "InvariantViolationError",
    "IntegralityError",
    "RouteMismatchError",
]
