# %% [markdown]
# # MMM classes and the handlebody group
#
# For surface bundles, kappa_i is the universal class of e^(i+1) in degree 2i.
# Under delta* (restriction from bundles of 3-manifolds with boundary) the odd
# kappa classes die and kappa_{2i} goes to 2 rho_i, where rho_i = sigma*(p1^i).

# %%
from charclass import delta_star, format_table, kappa, kappa_table, rho, vanishes_on_boundary

for i in range(1, 7):
    k = kappa(i)
    print(f"kappa_{i}: integrand {k.x}, degree {k.degree}, delta* = {delta_star(k)}")

assert delta_star(kappa(4)) == 2 * rho(2)

# %% [markdown]
# Boundary verdicts for a genus-g handlebody (dim W = 3):

# %%
print(format_table(kappa_table(8)))

# %% [markdown]
# A "not-guaranteed" row carries its nonzero delta* value as a witness.  It
# does not claim that the class survives on the handlebody group.

# %%
from charclass import GradedClass, make_ring

surface = make_ring(2)
print(vanishes_on_boundary(3, GradedClass.gen(surface, "e", 5)))
