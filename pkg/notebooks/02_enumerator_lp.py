# %% [markdown]
# # The enumerator LP
#
# Feasibility of the weight-enumerator constraints for an ((n, K, w)) code,
# solved with an exact phase-1 simplex.  Infeasible instances come with a
# Farkas vector that can be checked independently.

# %%
from qbound.enum_lp import lp_feasible, lp_max_K

# %%
res = lp_feasible(5, 2, 3)
print(res.feasible, res.verify())
print(res.enumerators())

# %%
res = lp_feasible(5, 3, 3)
print(res.feasible, res.verify(), res.farkas)

# %% [markdown]
# A small table of the largest feasible K.

# %%
for n in range(3, 9):
    print(n, [lp_max_K(n, w) for w in range(1, 5)])
