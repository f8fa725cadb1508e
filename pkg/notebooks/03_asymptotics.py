# %% [markdown]
# # Asymptotic curves
#
# Exponents (log2 K)/n against delta = w/n, plus the machinery behind them.

# %%
from qbound.asymptotics import (
    binary_lp_scan,
    gv_zero,
    hamming_exponent_scan,
    hamming_validity_limit,
    hamming_zero,
    kalai_log_kraw,
    exact_log_kraw,
    tabulate_curve,
)

# %%
print("GV zero", gv_zero())
print("Hamming range ends at", hamming_validity_limit())
print("Hamming zero", hamming_zero())

# %% [markdown]
# Log-Krawtchouk limit against exact big integers: the error shrinks with n.

# %%
for n in (100, 200, 400):
    print(n, exact_log_kraw(4, n, n // 10, n // 10), kalai_log_kraw(4, 0.1, 0.1))

# %% [markdown]
# Scans over xi.  The Hamming objective peaks at xi = 0.  The binary
# first-LP objective peaks at zero from about tau = 0.1105 on, and has an
# interior maximum just below that.

# %%
for d in (0.1, 0.2, 0.3):
    print(d, hamming_exponent_scan(d))
for tau in (0.10, 0.11, 0.12):
    print(tau, binary_lp_scan(tau))

# %%
for p in tabulate_curve("hamming", 0.0, 0.34, 0.05):
    print(p)
