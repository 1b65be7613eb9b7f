"""Total maps as a free Cantor algebra on one generator.

lambda glues n total maps under a caret and alpha_i peels one letter off.
Terms built from these operations, evaluated at the identity, give every
total element exactly once up to the two Cantor laws.
"""

import random

from cuntz_monoid.cantor import (
    alpha_op,
    eval_raw,
    eval_term,
    lambda_op,
    random_total,
    t_identity,
    t_mul,
    term_of,
)
from cuntz_monoid.notation import format_symbol, format_term, parse_term

t = parse_term("L(a0(a0(X)), L(a0(a0(X)), a0(a1(X))))")
one = t_identity(2)
print("term         ", format_term(t))
print("as written   ", format_symbol(eval_raw(t, one)))
print("standard form", format_symbol(eval_term(t, one).repr))
print("term of it   ", format_term(term_of(eval_term(t, one))))

rng = random.Random(3)
x = random_total(2, 3, 2, rng)
print("x            ", format_symbol(x.repr))
print("CA1 holds    ", lambda_op([alpha_op(x, 0), alpha_op(x, 1)]) == x)
# evaluating at x is left multiplication by x
print("t(x) = x t(1)", eval_term(t, x) == t_mul(x, eval_term(t, one)))
