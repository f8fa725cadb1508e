# %% [markdown]
# # Stabilizer types and mixed codes
#
# A stabilizer code of type 4^k0 2^k1 shortens to a mixed GF(2)/GF(4) group
# code, where Plotkin and sphere-packing bounds apply.

# %%
import random

from qbound.mixed import random_mixed_code, mixed_hamming_max_d, mixed_plotkin, stabilizer_hamming, stabilizer_plotkin

# %%
print(stabilizer_plotkin(5, 1, 0), stabilizer_hamming(5, 1, 0))
print(stabilizer_plotkin(6, 2, 2), stabilizer_hamming(6, 2, 2))

# %% [markdown]
# Random codes never beat either bound.

# %%
rng = random.Random(7)
for _ in range(5):
    code = random_mixed_code(rng, 2, 5, 3)
    k = code.k_bin
    print(k, code.min_distance(), mixed_plotkin(2, 5, k) if k else None, mixed_hamming_max_d(2, 5, k))
