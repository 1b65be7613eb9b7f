"""The polycyclic monoid: bijections between principal right ideals."""

from cuntz_monoid.notation import format_pn
from cuntz_monoid.polycyclic import (
    PnElement,
    is_tight_cover,
    pn_compatible,
    pn_inv,
    pn_leq,
    pn_mul,
)

f = PnElement("0", "1")   # 1u -> 0u
g = PnElement("10", "")   # u -> 10u
print("f g    =", format_pn(pn_mul(f, g)))   # u -> 10u -> 00u
print("g f    =", format_pn(pn_mul(g, f)))
print("f f^-1 =", format_pn(pn_mul(f, pn_inv(f))))
print("0:0 * 1:1 =", format_pn(pn_mul(PnElement("0", "0"), PnElement("1", "1"))))

print("01:11 <= 0:1 ?", pn_leq(PnElement("01", "11"), PnElement("0", "1")))
print("0:1 ~ 00:1 ?", pn_compatible(PnElement("0", "1"), PnElement("00", "1")))

# tight covers of 0 0^-1: the remainders after 0 must form a maximal code
for cover in (["00", "01"], ["00"], ["00", "010", "011"]):
    print(cover, is_tight_cover(cover, "0"))
