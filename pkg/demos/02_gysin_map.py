# %% [markdown]
# # The Gysin map of the universal sphere bundle
#
# BSO(d) is the unit sphere bundle of the universal (d+1)-plane bundle over
# BSO(d+1).  Pulling back keeps the Pontrjagin classes that still exist and
# kills the Euler class of the base; pushing forward lowers degree by d and
# sends e to the Euler characteristic of the fiber sphere.

# %%
from charclass import GradedClass, make_ring, parse_expr, pullback, pushforward
from charclass.ring import basis_up_to

for d in range(1, 7):
    ring = make_ring(d)
    if d >= 2:
        print(f"d={d}: pi_!(e) =", pushforward(d, parse_expr(ring, "e")))
    else:
        print(f"d={d}: no Euler class")

# %%
base = make_ring(4)
print("pull p1 :", pullback(3, parse_expr(base, "p1")))
print("pull p2 :", pullback(3, parse_expr(base, "p2")))
print("pull e  :", pullback(3, parse_expr(base, "e")))

# %% [markdown]
# Projection formula pi_!(pi^*a * b) = a * pi_!(b), checked on every pair of
# basis monomials of total degree at most 24.

# %%
for d in range(0, 9):
    fiber = make_ring(d)
    base = fiber.at(d + 1)
    pairs = 0
    for a in basis_up_to(base, 24):
        alpha = GradedClass(base, {a: 1})
        for b in basis_up_to(fiber, 24 - base.degree(a)):
            beta = GradedClass(fiber, {b: 1})
            assert pushforward(d, pullback(d, alpha) * beta) == alpha * pushforward(d, beta)
            pairs += 1
    print(f"d={d}: {pairs} pairs ok")
