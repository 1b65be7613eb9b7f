"""Units acting on eventually periodic points, and their germs."""

from cuntz_monoid.notation import format_germ, format_stream, parse_stream
from cuntz_monoid.notation import parse_symbol
from cuntz_monoid.streams import eps_apply, germ_of_unit, gp_compose
from cuntz_monoid.thompson import unit

a = unit(parse_symbol("{0:00,10:01,11:1}"))
swap = unit(parse_symbol("{0:1,1:0}"))

for text in ("(0)", "(1)", "(01)", "1(0)", "10(110)"):
    s = parse_stream(text)
    print(f"{text:8s} a -> {format_stream(eps_apply(a, s)):10s} germ {format_germ(germ_of_unit(a, s))}")

# germs multiply like the units they come from, and their indices add
s = parse_stream("(01)")
g1 = germ_of_unit(swap, eps_apply(a, s))
g2 = germ_of_unit(a, s)
print(format_germ(gp_compose(g1, g2)))
print(format_germ(germ_of_unit(swap * a, s)))
