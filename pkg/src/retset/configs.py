"""Built-in group and equation descriptions for the worked examples.

All texts use the group-file and equation-file formats, so they double as
templates for user configs.
"""


def example36_group(p=5, A=0, B=1):
    """E x E with P = (t+1, sqrt((t+1)^3+A(t+1)+B)) and Q = (t, sqrt(t^3+At+B))."""
    return """[group]
curve p={p} A={A} B={B}
curve p={p} A={A} B={B}
[point]
curve x = t + 1 adjoin sqrt((t+1)^3 + {A}*(t+1) + {B})
curve x = t adjoin sqrt(t^3 + {A}*t + {B})
""".format(p=p, A=A, B=B)


# Segre hyperplane z02 = z20 + z22 on E x E: x(P)/z(P) = x(Q)/z(Q) + 1
EXAMPLE36_EQUATIONS = """[coordinates]
curve x0 x1 x2
curve y0 y1 y2
[equations]
x0*y2 - x2*y0 - x2*y2
"""

# negative control: an ordinary curve over F_5 (trace -3)
ORDINARY_CURVE = (1, 1)


def torus_group(p=5):
    """G_m^3 over F_{p^2} with g = (t + alpha, t - alpha, t)."""
    return """[group]
field p={p} k=2
const alpha = u + 1
torus dim=3
[point]
torus t + alpha, t - alpha, t
""".format(p=p)


TORUS_EQUATIONS = """[coordinates]
torus x y z
[equations]
x + y - 2*z - 2*alpha^2
"""


def example54_group(p=5):
    """G_m^2 x E x E with g0 = ((t+1, t), P, Q)."""
    return """[group]
torus dim=2
curve p={p} A=0 B=1
curve p={p} A=0 B=1
[point]
torus t + 1, t
curve x = t + 1 adjoin sqrt((t+1)^3 + 1)
curve x = t adjoin sqrt(t^3 + 1)
""".format(p=p)


_FACTOR_HEAD = """[coordinates]
torus u1 u2
curve x0 x1 x2
curve y0 y1 y2
[equations]
"""

# C1: u1 = u2 + 1 with both curve points at O
# C2: u1 = u2 = 1, curve part on the Segre hyperplane
# C3: the graph of the torus point over the curve x-coordinates, u1 = u2 + 1
EXAMPLE54_FACTORS = [
    _FACTOR_HEAD + "u1 - u2 - 1\nx0\nx2\ny0\ny2\n",
    _FACTOR_HEAD + "u1 - 1\nu2 - 1\nx0*y2 - x2*y0 - x2*y2\n",
    _FACTOR_HEAD + "x0 - u1*x2\ny0 - u2*y2\nu1 - u2 - 1\n",
]
