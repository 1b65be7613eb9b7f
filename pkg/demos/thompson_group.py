"""Arithmetic in Thompson's group V = G_{2,1}, the units of C_2."""

from cuntz_monoid.notation import format_symbol
from cuntz_monoid.notation import parse_symbol
from cuntz_monoid.thompson import g_identity, g_order, random_unit, unit

a = unit(parse_symbol("{0:00,10:01,11:1}"))
swap = unit(parse_symbol("{0:1,1:0}"))

for name, g in (("a", a), ("a^-1", ~a), ("a^3", a ** 3), ("swap a swap", swap * a * swap)):
    print(f"{name:12s}", format_symbol(g.repr))

print("order of swap:", g_order(swap))
print("order of a within 500:", g_order(a, 500))

# the word problem is equality of standard symbols
print("a b a^-1 b^-1 for random b:")
for seed in range(3):
    b = random_unit(7, seed)
    comm = a * b * ~a * ~b
    print("  ", format_symbol(b.repr), "->", format_symbol(comm.repr), comm == g_identity())
