"""Widely p-normal sets, good cosets and two-exponential equations."""

# %% set expressions: parse, enumerate, transform
from retset.cosets import GoodCoset, GoodSubgroup, Double, Eq, Mult, format_canonical, intersect
from retset.psets import (affine, classify, equal_up_to_finite, parse_setexpr,
                          two_exponential_decompose, window)

E = parse_setexpr("PS(5;-1;[1]) + AP(1,6)")
print(E, "->", window(E, 130))
print("3E + 2 ->", window(affine(3, 2, parse_setexpr("PS(5;-1;[1])")), 400))
print("classify:", classify(E), "/", classify(parse_setexpr("PS(25;0;[1,1])")))

# %% membership is three-valued; mixed signs are searched, not certified
T = parse_setexpr("PS(5;0;[1|-1])").terms[0]
print("24 in 5^a - 5^b:", T.member(24).verdict, T.member(24).witness)
print(" 3 in 5^a - 5^b:", T.member(3).verdict)

# %% finite differences are evidence, never proof
print(equal_up_to_finite(parse_setexpr("PS(5;-1;[1])"),
                         parse_setexpr("PS(5;-1;[1]) add{17}"), 0, 200))

# %% good subgroups: n1 = n2 and n3 = 2 n1 is generated by (1, 1, 2)
H = GoodSubgroup(3, [Eq(1, 2), Double(3, 1)])
print("canonical:", format_canonical(H.canonical()))
A = GoodCoset((0, 0), (0, 0), GoodSubgroup(2, [Eq(1, 2)]))
B = GoodCoset((0, 0), (0, 0), GoodSubgroup(2, [Mult(1, 2)]))
print("intersection:", intersect(A, B))

# %% two-exponential equations c1 q^n1 + c2 q^n2 = e0 + sum e_i q^m_i
for args in [(1, 1, 0, [2]), (2, 3, 1, [4]), (1, 1, 0, [1, 1]), (-1, 1, -1, [1])]:
    D = two_exponential_decompose(*args, q=5, N=10)
    print(args, "->", [(c.form, c.offset) for c in D.components], D.status)
