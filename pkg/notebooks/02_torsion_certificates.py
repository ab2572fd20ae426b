# %% [markdown]
# # Torsion certificates
#
# tau(m,n,q) is a Laurent combination whose multiple by (-A + A^-1) is the
# relator C(m,n)S_q(a2); so (1 - A^2) tau lies in the relator span while
# tau itself is nonzero modulo relators (every relator vanishes at A = +-1,
# tau does not).

# %%
from kbsm import certify_eprime, certify_tau, relator, tau
from kbsm.laurent import A
from kbsm.torsion import CertificateError

# %%
e = tau(2, 1, 1)
print(e)
print(e.scale(-A + A**-1) == relator(2, 1, 1).element)

# %%
cert = certify_tau(2, 1, 1)
print("annihilator:", cert.annihilator)
print("witness:", cert.nonzero)
print("strictness:", cert.strictness)
print("verifies:", cert.verify())

# %%
# degenerate parameters have tau == 0 and are rejected
for params in [(0, 0, 3), (1, -1, 2)]:
    try:
        certify_tau(*params)
    except CertificateError as exc:
        print(params, "->", exc)

# %%
# the a1-axis family e'_i, annihilated by 1 - A^(2i+4)
for i in range(1, 6):
    c = certify_eprime(i)
    print(i, c.annihilator, "steps:", len(c.membership.steps), "ok:", c.verify())
