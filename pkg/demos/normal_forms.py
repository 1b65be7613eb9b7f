"""Standard symbols and the Boolean inverse monoid C_2.

Symbols that differ by inserting or deleting carets describe the same map
on infinite strings.  normalize picks the unique representative with no
caret left to delete.
"""

import random

from cuntz_monoid.cuntz import (
    cn_join,
    cn_meet,
    cn_mul,
    complement,
    identity,
    insert_caret,
    normalize,
)
from cuntz_monoid.notation import format_symbol, parse_symbol
from cuntz_monoid.selftest import caret_walk

swap = parse_symbol("{0:1,1:0}")
bigger = insert_caret(swap, 0)
print(format_symbol(bigger), "->", format_symbol(normalize(bigger)))
print(format_symbol(parse_symbol("{0:00,10:010,11:011}")), "->",
      format_symbol(normalize(parse_symbol("{0:00,10:010,11:011}"))))

# wander through the class at random: the normal form never changes
rng = random.Random(0)
ends = {format_symbol(normalize(caret_walk(swap, 15, rng))) for _ in range(200)}
print("normal forms reached from 200 walks:", ends)

# the idempotents form a Boolean algebra
e = normalize(parse_symbol("{00:00}"))
ce = complement(e)
print("complement of", format_symbol(e), "is", format_symbol(ce))
print("e meet e' =", format_symbol(cn_meet(e, ce)), " e join e' =", format_symbol(cn_join(e, ce)))
print("swap * swap == 1:", cn_mul(normalize(swap), normalize(swap)) == identity())
