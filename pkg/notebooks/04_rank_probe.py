# %% [markdown]
# # Rank of specialised relator matrices
#
# Specialise A to a number and stack all relators of degree <= D as rows.
# At A = 2 the rank is one less than the number of basis monomials, i.e.
# the empty link alone survives. At A = +-1 every relator vanishes.

# %%
from fractions import Fraction

from kbsm import RelatorSet, rank_table, reduce
from kbsm.reduction import audit_unindexed, rank_table_csv

# %%
rows = rank_table(2, 6)
print(rank_table_csv(rows))

# %%
monomials = lambda d: (d + 1) * (d + 2) * (d + 3) // 6
print([(r.degree, r.rank, monomials(r.degree) - 1) for r in rows])

# %%
print(rank_table(Fraction(1, 3), 4)[-1])
print(rank_table(3, 6, prime=65537)[-1])
print(rank_table(-1, 6)[-1])

# %%
# relators left out of the leading-term index: do they reduce?
rs = RelatorSet.up_to_degree(6)
report = audit_unindexed(rs)
print(len(rs), "relators,", len(rs.index), "indexed,", len(report), "audited")
print("reduce to zero:", sum(r.reduces_to_zero for r in report))
print("degenerate:", sum(r.degenerate for r in report))

# %%
cert = reduce(rs[rs.indexed()[5]].element, rs)
print(cert.is_member, len(cert.steps))
