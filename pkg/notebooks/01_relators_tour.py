# %% [markdown]
# # A tour of the relators
#
# Elements of the skein module of the genus-2 handlebody are written in the
# Chebyshev basis S_i(a1) S_j(a2) S_k(a3) with Laurent coefficients in A.
# The relators C(m,n)S_q(a2) and Cbar(q,n)S_m(a1) are built two ways
# (closed four-term formula and the kink recurrences) and must agree.

# %%
from kbsm import c_closed, c_via_recurrence, cbar_closed, relator, relator_bar
from kbsm.laurent import quantum_minus
from kbsm.relators import SequenceCache, lemma_b_diagnostic

# %%
# the smallest nonzero relators
for m, n in [(1, 0), (1, 1), (2, 0), (2, -1)]:
    print(f"C({m},{n}) =", c_closed(m, n))

# %%
# closed form vs recurrence on a small grid
cache = SequenceCache()
bad = [(m, n) for m in range(-5, 6) for n in range(-5, 6)
       if c_closed(m, n) != c_via_recurrence(m, n, cache)]
print("closed-form mismatches:", bad)

# %%
# antisymmetry and the vanishing diagonal
print(all(c_closed(-m, -n) == -c_closed(m, n) for m in range(5) for n in range(-4, 5)))
print([c_closed(m, -m).is_zero() for m in range(5)])

# %%
# the c(k) coefficients: c(k) = -A^k + A^-k
for k in range(4):
    print(k, quantum_minus(k))

# %%
# leading terms under grlex a1 > a3 > a2
for m, n, q in [(3, -1, 2), (2, 1, 0), (1, -1, 3)]:
    r = relator(m, n, q)
    print(r.label, r.leading)

# %%
print(relator_bar(2, 1, 1).label, cbar_closed(2, 1))

# %%
# only one reading of the P(m,-1) rule reproduces the closed form
for variant, failures in lemma_b_diagnostic(4, 4).items():
    print(f"{variant:8s} mismatches={len(failures)}")
