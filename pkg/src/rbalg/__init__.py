"""Exact computations with Rota-Baxter operators on polynomial algebras.

A Rota-Baxter operator of weight w on a commutative algebra is a linear
map R with R(u)R(v) = R(R(u)v + uR(v) + w uv).  This package builds,
verifies, classifies and grades such operators on free commutative
algebras (unital or not) and their finite-dimensional truncations, in
exact arithmetic over the rationals or a prime field.
"""

from .aybe import TensorElement, aybe_grid_search, aybe_residual, operator_from_tensor
from .classify import (
    ClassificationReport,
    CoefficientStrategy,
    FamilyMatch,
    MatchKind,
    check_kernel_obstructions,
    default_strategy,
    enumerate_injective_diagonal,
    enumerate_monomial_rb,
    match_family,
)
from .construct import (
    MultivariateFamilyParams,
    MultivariateKind,
    SplittingSpec,
    WeightOneFamilyParams,
    WeightZeroFamilyParams,
    construct_integral,
    construct_multivariate,
    construct_splitting,
    construct_weight_one_univariate,
    construct_weight_zero,
    split_by_variables,
    split_constant_part,
    split_positive_degree,
)
from .fields import QQ, FieldElement, FieldKind, FieldSpec, prime_field, rationals
from .grading import (
    GradingDecomposition,
    PartialProductKind,
    ProductStatus,
    QuotientFamily,
    grading_decompose,
    partial_product,
    quotient_rb_from_family,
    semigroup_iso_check,
)
from .operators import (
    AutomorphismKind,
    AutomorphismSpec,
    DenseOperator,
    MonomialOperatorTable,
    op_compose,
    op_conjugate,
    op_left_mul,
    op_rescale_weight,
    operator_from_json,
    operators_agree,
)
from .poly import AlgebraSpec, Monomial, Polynomial, linear_combination
from .rbcheck import (
    CheckReport,
    KernelImage,
    RBViolation,
    UnitConstraintResult,
    UnitImageKind,
    check_unit_constraint,
    op_kernel_image,
    rb_check,
    rb_multi_residual,
    rb_power_check,
    rb_residual,
)

__all__ = [
    "AlgebraSpec",
    "AutomorphismKind",
    "AutomorphismSpec",
    "CheckReport",
    "ClassificationReport",
    "CoefficientStrategy",
    "DenseOperator",
    "FamilyMatch",
    "FieldElement",
    "FieldKind",
    "FieldSpec",
    "GradingDecomposition",
    "KernelImage",
    "MatchKind",
    "Monomial",
    "MonomialOperatorTable",
    "MultivariateFamilyParams",
    "MultivariateKind",
    "PartialProductKind",
    "Polynomial",
    "ProductStatus",
    "QQ",
    "QuotientFamily",
    "RBViolation",
    "SplittingSpec",
    "TensorElement",
    "UnitConstraintResult",
    "UnitImageKind",
    "WeightOneFamilyParams",
    "WeightZeroFamilyParams",
    "aybe_grid_search",
    "aybe_residual",
    "check_kernel_obstructions",
    "check_unit_constraint",
    "construct_integral",
    "construct_multivariate",
    "construct_splitting",
    "construct_weight_one_univariate",
    "construct_weight_zero",
    "default_strategy",
    "enumerate_injective_diagonal",
    "enumerate_monomial_rb",
    "grading_decompose",
    "linear_combination",
    "match_family",
    "op_compose",
    "op_conjugate",
    "op_kernel_image",
    "op_left_mul",
    "op_rescale_weight",
    "operator_from_json",
    "operator_from_tensor",
    "operators_agree",
    "partial_product",
    "prime_field",
    "quotient_rb_from_family",
    "rationals",
    "rb_check",
    "rb_multi_residual",
    "rb_power_check",
    "rb_residual",
    "semigroup_iso_check",
    "split_by_variables",
    "split_constant_part",
    "split_positive_degree",
]
