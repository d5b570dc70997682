#!/usr/bin/env python3
"""A worked tour of the library on one running example.

Prints each step so the output doubles as living documentation; run it
after changes to eyeball the whole pipeline at once.
"""

from weylcalc import (
    DiffOp,
    JetMap,
    Poly,
    commutator,
    derivation_symbol,
    from_jet_map,
    grothendieck_order,
    principal_symbol,
    quantize,
    restriction,
    split_order_one,
)
from weylcalc.parser import parse_jet_map, parse_operator


def main() -> None:
    n = 2
    print("== normal forms ==")
    D = parse_operator("d1*t1*d2 + t2^2")
    print(f"d1*t1*d2 + t2^2  normalizes to  {D}")
    print(f"syntactic order: {D.order}")
    print(f"commutator order recomputation agrees: {grothendieck_order(D)}")

    print()
    print("== the defining relations ==")
    d1 = DiffOp.partial(n, 1)
    t1 = DiffOp.from_poly(Poly.variable(n, 1))
    t2 = DiffOp.from_poly(Poly.variable(n, 2))
    print(f"[d1, t1] = {commutator(d1, t1)}")
    print(f"[d1, t2] = {commutator(d1, t2)}")
    print(f"[t1, t2] = {commutator(t1, t2)}")

    print()
    print("== first-order operators split ==")
    E = parse_operator("t1*d1 + t1^2")
    X, a = split_order_one(E)
    print(f"{E}  =  ({X})  +  multiplication by {a}")
    print(f"the derivation part as a grade-1 symbol: {derivation_symbol(X)}")

    print()
    print("== symbols ==")
    s = principal_symbol(D)
    print(f"principal symbol of {D}:  {s}  (grade {s.grade})")
    lift = quantize(s)
    print(f"normal-ordered lift: {lift}")
    print(f"round trip returns the symbol: {principal_symbol(lift, s.grade) == s}")

    print()
    print("== jets ==")
    table = parse_jet_map("0 -> t1\n", degree=1, n=1)
    G = from_jet_map(table)
    print("table (one variable, degree 1):  1 -> t1, t1 -> 0")
    print(f"interpolating operator: {G}")
    print(f"G(1) = {G.apply(Poly.const(1, 1))},  G(t1) = {G.apply(Poly.variable(1, 1))}")
    again = restriction(D, D.order)
    print(f"tabulating {D} to degree {D.order} and rebuilding it round-trips: "
          f"{from_jet_map(again) == D}")
    print()
    print("zero table edge case:", from_jet_map(JetMap.zero(2, 2)))


if __name__ == "__main__":
    main()
