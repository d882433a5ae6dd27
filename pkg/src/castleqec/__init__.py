"""Quantum stabilizer codes from one-point algebraic-geometry codes, exactly.

Everything is exact integer arithmetic over small finite fields: no floats,
no probabilistic shortcuts.  See README.md for the CLI and the library tour.
"""

from .agcodes import (
    CodeSequence,
    DualityCertificate,
    OnePointCode,
    certify_duality,
    dual_distance_bound,
    goppa_bound,
    incomplete_trace_search,
    order_bound,
    self_orthogonality_range,
    trace_code,
    trace_self_orthogonal_range,
)
from .codes import LinearCode, code_from_json, relative_min_weight, work_budget
from .curves import (
    EvaluationSet,
    PointedCurve,
    curve_from_json,
    evaluation_set_from_json,
    hyperelliptic_even,
    hyperelliptic_odd,
    norm_trace_quotient,
    sep_variable_curve,
    suzuki_curve,
)
from .fields import (
    GF,
    Embedding,
    Field,
    FieldElement,
    UnsupportedFieldError,
    embedding,
    field_from_json,
)
from .quantum import (
    QuantumParams,
    construction_a,
    construction_b,
    construction_c,
    css_hermitian,
    css_nested,
    css_self_orthogonal,
    gv_status,
    gv_terms,
)
from .repro import run_all, run_target, target_ids
from .semigroups import NumericalSemigroup, semigroup_from_json

__all__ = [
    "GF",
    "CodeSequence",
    "DualityCertificate",
    "Embedding",
    "EvaluationSet",
    "Field",
    "FieldElement",
    "LinearCode",
    "NumericalSemigroup",
    "OnePointCode",
    "PointedCurve",
    "QuantumParams",
    "UnsupportedFieldError",
    "certify_duality",
    "code_from_json",
    "construction_a",
    "construction_b",
    "construction_c",
    "css_hermitian",
    "css_nested",
    "css_self_orthogonal",
    "curve_from_json",
    "dual_distance_bound",
    "embedding",
    "evaluation_set_from_json",
    "field_from_json",
    "goppa_bound",
    "gv_status",
    "gv_terms",
    "hyperelliptic_even",
    "hyperelliptic_odd",
    "incomplete_trace_search",
    "norm_trace_quotient",
    "order_bound",
    "relative_min_weight",
    "run_all",
    "run_target",
    "self_orthogonality_range",
    "semigroup_from_json",
    "sep_variable_curve",
    "suzuki_curve",
    "target_ids",
    "trace_code",
    "trace_self_orthogonal_range",
    "work_budget",
]

__version__ = "0.1.0"
