# %% [markdown]
# # Which generalized MMM classes vanish on BDiff(W)?
#
# For W of dimension d+1 the universal class of X vanishes after restriction
# from BDiff(dW) when dim W is even, when X involves no odd power of e, and
# always with mod-2 coefficients.

# %%
import json

from charclass import enumerate_table, format_table, make_ring
from charclass.serialize import dumps, row_to_json

print(format_table(enumerate_table(make_ring(4), 8)))

# %%
print(format_table(enumerate_table(make_ring(3), 8)))

# %% [markdown]
# Counting, per fiber dimension, how many monomials of class degree <= 24 are
# forced to vanish.

# %%
for d in range(1, 9):
    rows = [r for r in enumerate_table(make_ring(d), 24) if not r.degenerate]
    killed = sum(r.verdict.guaranteed_zero for r in rows)
    print(f"dim W = {d + 1}: {killed}/{len(rows)} guaranteed zero")

# %% [markdown]
# Mod-2 tables: every Stiefel-Whitney monomial is killed.

# %%
rows = enumerate_table(make_ring(3, "O"), 3)
print(format_table(rows))
print(json.dumps(json.loads(dumps(row_to_json(rows[-1]))), indent=2))
