"""Order of an operator defined inductively through commutators.

An operator has order 0 when it commutes with every multiplication
operator (equivalently, when it is multiplication by some polynomial),
and order at most i when every commutator with a multiplication has
order at most i - 1.  It suffices to test multiplications by the
variables t_1..t_n: D -> [D, m_a] is a derivation in a, so vanishing
(resp. low order) on the generators propagates to all products and
sums.

grothendieck_order recomputes the order by this definition and checks
that it agrees with the syntactic order read off the normal form.  The
agreement is a theorem, so disagreement raises AssertionError rather
than returning either answer.
"""

from __future__ import annotations

from .operators import DiffOp, commutator
from .poly import Poly


def _mult_by_var(n: int, j: int) -> DiffOp:
    return DiffOp.from_poly(Poly.variable(n, j))


def is_order_at_most(D: DiffOp, i: int) -> bool:
    """Does D have inductive order <= i?  Decided on generators only."""
    if i < 0:
        raise ValueError(f"order bound must be nonnegative, got {i}")
    if not D:
        return True
    if i == 0:
        return all(not commutator(D, _mult_by_var(D.n, j)) for j in range(1, D.n + 1))
    return all(
        is_order_at_most(commutator(D, _mult_by_var(D.n, j)), i - 1)
        for j in range(1, D.n + 1)
    )


def grothendieck_order(D: DiffOp) -> int | None:
    """Smallest i with is_order_at_most(D, i); None for the zero operator.

    Cross-checks the result against the syntactic order of the normal
    form and raises AssertionError on disagreement.
    """
    syntactic = D.order
    if syntactic is None:
        return None
    for i in range(syntactic + 1):
        if is_order_at_most(D, i):
            if i != syntactic:
                raise AssertionError(
                    f"inductive order {i} disagrees with syntactic order {syntactic} for {D}"
                )
            return i
    raise AssertionError(
        f"no inductive order up to the syntactic order {syntactic} for {D}"
    )


def is_derivation(D: DiffOp) -> bool:
    """Is D a polynomial vector field (every derivative word of length 1)?"""
    return all(J.degree == 1 for J in D.terms)


def split_order_one(D: DiffOp) -> tuple[DiffOp, Poly]:
    """Write an operator of order <= 1 as X + m_a with X a derivation.

    a = D(1) and X = D - m_a; the pair is unique.  Raises ValueError
    when D has order 2 or more.
    """
    order = D.order
    if order is not None and order > 1:
        raise ValueError(f"cannot split an operator of order {order}, need order <= 1")
    a = D.apply(Poly.const(D.n, 1))
    X = D - DiffOp.from_poly(a)
    return X, a
