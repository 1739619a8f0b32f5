"""Multiplier ideals on quotient surfaces, exactly.

Three computations on top of the resolution:

  * the numerical multiplier ideal, from the round-up of
    K^num - pullback(lambda Z);
  * the m-limiting approximations, which climb up to it and stabilize
    once m is divisible by the Cartier index of K_X;
  * the jumping numbers of lambda -> J(lambda Z).

Ideals are printed through their minimal monomial generators in the
invariant lattice of the quotient.
"""

from fractions import Fraction

from surfideals import (
    PairSpec,
    cartier_index,
    hj_resolve,
    jumping_numbers,
    multiplier_ideal,
    multiplier_m_limiting,
)
from surfideals.divisors import DivisorVector


def show(label, ideal):
    body = "unit ideal" if ideal.is_unit() else f"generators {list(ideal.gens)}"
    print(f"  {label}: {body}")


# -- a log terminal example -------------------------------------------------
model = hj_resolve(3, 1)
pair = PairSpec(model, DivisorVector.zero(), Fraction(0))
print("1/3(1,1), Z = 0 (discrepancy -1/3, klt):")
show("J(X)", multiplier_ideal(pair))
print(f"  Cartier index of K_X: {cartier_index(model)}")
for m in (1, 2, 3, 4, 6):
    show(f"J_{m}", multiplier_m_limiting(pair, m))
print("  J_1 is the maximal ideal; from m = 3 on, 3 | m gives J_m = J(X) as 3 K_X is Cartier")
print()

# -- scaling a boundary divisor ----------------------------------------------
model = hj_resolve(5, 2)
z = model.boundary_divisor()
print("1/5(1,2), Z = full toric boundary, scaling lambda:")
for lam in (Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2)):
    show(f"J({lam} Z)", multiplier_ideal(PairSpec(model, z, lam)))
print()

print("jumping numbers up to 3:")
for t, ideal in jumping_numbers(PairSpec(model, z, 1), 3):
    show(f"lambda = {t}", ideal)
