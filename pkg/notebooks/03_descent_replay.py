# %% [markdown]
# # Replaying the non-splitting descent
#
# Write the class of the empty link in the quotient as a combination with
# unknown coefficients alpha. Each relator forces a linear constraint on
# the alphas; the descent derives alpha_{m,m,p} = 0 for p > m and then a
# recurrence chain whose Laurent breadth drops by 4 per step.

# %%
import sys

from kbsm import extract_constraint, verify_descent
from kbsm.obstruction import lemma_mmn_bookkeeping
from kbsm.relators import make_relator

# %%
print(extract_constraint(make_relator("C", 1, 1, 2)))

# %%
cert = verify_descent(3)
print(cert.trace())

# %%
print("tight edges:", cert.tight_edges)
for link in cert.chain:
    print(link.n, link.u.breadth(), link.v.breadth(), link.decrement)

# %%
# which relators the t = 4 induction step touches
print(lemma_mmn_bookkeeping(4))

# %%
# deeper runs stay fast
for d in (5, 10):
    c = verify_descent(d)
    print(d, len(c.steps), file=sys.stdout)
