"""Workbench for fraction terms.

Parsing and classifying arithmetic expressions with division, rewriting
them, evaluating them under three division-by-zero policies over concrete
number shapes, and checking fractalk assertion scripts for level confusion.
"""

from . import errors
from .fractalk import Verdict, check, check_text, infer_levels, parse_script
from .ratio import (
    DenomOf,
    NumOf,
    RatioNumber,
    rn_add,
    rn_denom,
    rn_div,
    rn_eval,
    rn_instance_eq,
    rn_inv,
    rn_label_eq,
    rn_mul,
    rn_neg,
    rn_num,
    rn_one,
    rn_zero,
)
from .rewrite import (
    RewriteStep,
    RewriteTrace,
    add_family,
    add_family_all,
    demote,
    flatten,
    simple_fracterm_eq,
    simplify,
)
from .semantics import (
    BOTTOM,
    EvalConfig,
    Fracvalue,
    NumberValue,
    PeripheralValue,
    eval_term,
    value_denom,
    value_eq,
    value_num,
)
from .shapes import (
    Instance,
    NormalityReport,
    ShapeDescriptor,
    convert,
    decode,
    describe,
    encode,
    get_shape,
    instance_eq,
    is_normal,
    label_eq,
    make_instance,
    normality_report,
    shape_add,
    shape_div,
    shape_mul,
    shape_neg,
)
from .terms import (
    Add,
    Div,
    Level,
    Lit,
    Mul,
    Neg,
    Sub,
    TaxonomyFlags,
    Term,
    Var,
    classify,
    denom,
    desugar_literals,
    erase_decorations,
    format_term,
    is_fracterm,
    num,
    parse_term,
)

__version__ = "0.1.0"
