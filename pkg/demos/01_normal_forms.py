# %% [markdown]
# # Normal forms of characteristic classes
#
# The oriented ring in dimension d is generated by the Pontrjagin classes
# p1 .. p_{d//2} (degree 4k) and the Euler class e (degree d).  The Euler
# class squares to the top Pontrjagin class when d is even and to zero when
# d is odd, so every class has a normal form with at most one factor of e.

# %%
from charclass import basis_of_degree, make_ring, parse_expr

for d in (2, 3, 4, 5):
    ring = make_ring(d)
    print(ring, "generators:", dict(zip(ring.generators, ring.degrees)))

# %% [markdown]
# Rewriting powers of e:

# %%
surface = make_ring(2)
for k in range(1, 7):
    print(f"e^{k} =", parse_expr(surface, f"e^{k}"))

four = make_ring(4)
print("d=4:  e^3 + 3*p2 =", parse_expr(four, "e^3 + 3*p2"))
print("d=3:  e^2 =", parse_expr(make_ring(3), "e^2"))

# %% [markdown]
# For odd d over the integers the Euler class is 2-torsion.  The default
# `standard` torsion mode imposes 2e = 0; `paper` mode only imposes e^2 = 0.

# %%
for mode in ("standard", "paper"):
    ring = make_ring(3, torsion_mode=mode)
    x = parse_expr(ring, "p1*e")
    print(f"{mode:9s} 2*p1*e = {2 * x}")

# %% [markdown]
# A basis of each degree, in canonical order:

# %%
for n in range(0, 17, 4):
    print(n, [four.format_monomial(m) for m in basis_of_degree(four, n)])

# %% [markdown]
# The unoriented ring H*(BO(d); F2) is a polynomial ring on w1 .. wd.

# %%
bo3 = make_ring(3, "O")
print([bo3.format_monomial(m) for m in basis_of_degree(bo3, 4)])
print(parse_expr(bo3, "w1^2 + w2 + w1^2"))
