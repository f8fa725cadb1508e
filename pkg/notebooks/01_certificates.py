# %% [markdown]
# # Dual certificates for small codes
#
# A certificate is a coefficient vector f_0..f_n in the Krawtchouk basis.
# Everything below is exact rational arithmetic, and every bound is
# recomputed from the coefficients alone.

# %%
from qbound import hamming_certificate, singleton_certificate, first_lp_binary_certificate
from qbound.formats import certificate_to_json

# %% [markdown]
# The Singleton-type polynomial gives K <= 2^(n-2w+2) on the nose.

# %%
for n, w in [(5, 3), (10, 4), (20, 11)]:
    c = singleton_certificate(n, w)
    print(n, w, c.bound, 2 ** (n - 2 * w + 2))

# %% [markdown]
# Squaring a Krawtchouk row gives the Hamming-type certificate.  For the
# five-qubit code it yields K <= 32/15, so K <= 2, which the [[5,1,3]] code meets.

# %%
c = hamming_certificate(5, 3)
print(c.coeffs, c.values(), c.bound)
print(certificate_to_json(c))

# %% [markdown]
# The binary first-LP certificate searches over the degree t and a rational
# point a between consecutive first roots; the best verified bound wins.

# %%
c = first_lp_binary_certificate(20, 4)
print(float(c.bound), c.info)
