"""Maximal prefix codes over a two-letter alphabet.

Every maximal prefix code is reached from the trivial code {e} by caret
expansions, and the Kraft sum of a maximal code is exactly one.
"""

from cuntz_monoid.notation import format_code
from cuntz_monoid.words import (
    caret_expand,
    enumerate_mpc,
    is_maximal_prefix_code,
    kraft_sum,
    max_reduce,
    refines,
)

codes = enumerate_mpc(2, 5)
for k in range(1, 6):
    sized = [format_code(c) for c in codes if len(c) == k]
    print(f"{k} leaves: {len(sized):2d}  {' '.join(sized)}")

# expanding a caret keeps the code maximal and refines it
code = ("0", "1")
finer = caret_expand(code, 1, 2)
print(format_code(finer), is_maximal_prefix_code(finer, 2), refines(finer, code, 2))

# {0, 10} leaves 11 uncovered, and its Kraft sum falls short of one
print(kraft_sum(["0", "10"], 2), is_maximal_prefix_code(["0", "10"], 2))

# any finite set of words generates the same right ideal as its prefix-minimal words
print(format_code(max_reduce(["010", "01", "0110", "1"])))
