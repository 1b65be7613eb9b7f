"""Exact arithmetic for the polycyclic monoids, the Cuntz inverse monoids,
the Thompson groups G_{n,1}, their Cantor algebras and groupoids."""

from .cantor import (
    GENERATOR,
    Lam,
    Leaf,
    TotalElement,
    alpha_op,
    eval_term,
    lambda_op,
    mpc_of_term,
    t_identity,
    term_of,
    total,
)
from .cuntz import (
    StandardSymbol,
    cn_inv,
    cn_join,
    cn_meet,
    cn_mul,
    complement,
    delete_caret,
    insert_caret,
    is_unit,
    lenz_equal,
    normalize,
)
from .errors import (
    AlgebraError,
    AlphabetMismatch,
    Incompatible,
    NoCaret,
    NotComposable,
    NotIdempotent,
    NotInjective,
    ParseError,
    PreconditionError,
)
from .notation import (
    format_code,
    format_germ,
    format_stream,
    format_symbol,
    format_term,
    format_word,
    parse_code,
    parse_germ,
    parse_stream,
    parse_symbol,
    parse_term,
    parse_word,
)
from .polycyclic import ZERO, PnElement, pn_inv, pn_leq, pn_mul
from .streams import (
    EvPeriodicString,
    GroupoidElement,
    eps_apply,
    eps_normalize,
    germ_of_unit,
    gp_compose,
    gp_inverse,
    in_basic_open,
)
from .symbols import Symbol, act, compose, invert, join, leq, meet, star
from .thompson import GroupElement, g_eq, g_inv, g_mul, g_order, g_pow, random_unit
from .words import (
    Alphabet,
    caret_expand,
    caret_reduce,
    enumerate_mpc,
    is_maximal_prefix_code,
    is_prefix_code,
    max_reduce,
    refines,
    uniform_mpc,
)

__version__ = "0.1.0"
