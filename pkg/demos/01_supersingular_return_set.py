"""The return set of a translation on E x E, y^2 = x^3 + 1 over F_5(t).

g = (P, Q) with x(P) = t + 1 and x(Q) = t; V is the Segre hyperplane
z02 = z20 + z22, i.e. x(nP) = x(nQ) + 1.  Every power of 5 returns, and any
other return n has prime-to-5 part = +-1 mod 10.
"""

# %% the curve is supersingular: 6 = p + 1 points over F_5, trace 0
from retset.checks import example36_setup, prime_to_p
from retset.groups import group_mul
from retset.scan import orbit_scan
from retset.subvariety import contains

group, g, V = example36_setup()
E = group.components[0].curve
print("points over F_5:", E.count_points(1), " trace:", E.trace, " supersingular:", E.supersingular)

# %% p^j in S, exactly: 5^j * P is a Frobenius image, so x(5^j P) = x(P)^(5^2j)
for j in range(7):
    v = contains(V, group_mul(5 ** j, g), "exact")
    print("n = 5^%d: %s" % (j, v.verdict))

# %% a Monte Carlo scan of [0, 3000]: five specializations over GF(5^18)
rep = orbit_scan(group, g, V, 3000, s=5, seed=1)
print("members:", rep.members)
print("max false-accept bound per member: %.2e" % rep.max_member_bound())
for n in rep.members[1:]:
    m = prime_to_p(n, 5)
    print("  n = %5d  prime-to-5 part %4d  = %d mod 10" % (n, m, m % 10))

# %% the ordinary curve y^2 = x^3 + x + 1 breaks the Frobenius identity and check (a)
group2, g2, V2 = example36_setup(curve=(1, 1))
print("ordinary curve, n = 5:", contains(V2, group_mul(5, g2), "exact").verdict)
