"""Tiny expression language shared by the text formats.

Expressions are sums of products of integers, names, powers with integer
literal exponents, parentheses, ``/`` and function calls such as
``sqrt(t^3+1)``.  Parsing produces a tuple AST that is evaluated against
any ring supplied by the caller.
"""

import re

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^(),]))")


class ExprSyntaxError(ValueError):
    pass


def tokenize(text):
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ExprSyntaxError("unexpected character at %d in %r" % (pos, text))
        num, name, op = m.groups()
        if num is not None:
            out.append(("num", int(num)))
        elif name is not None:
            out.append(("name", name))
        else:
            out.append(("op", "^" if op == "**" else op))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text):
        self.toks = tokenize(text)
        self.i = 0
        self.text = text

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else (None, None)

    def take(self, kind=None, value=None):
        tok = self.peek()
        if tok[0] is None or (kind and tok[0] != kind) or (value and tok[1] != value):
            raise ExprSyntaxError("expected %s in %r" % (value or kind, self.text))
        self.i += 1
        return tok

    def parse(self):
        node = self.expr()
        if self.i != len(self.toks):
            raise ExprSyntaxError("trailing input in %r" % self.text)
        return node

    def expr(self):
        node = self.term()
        while self.peek() in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            node = ("add" if op == "+" else "sub", node, self.term())
        return node

    def term(self):
        node = self.unary()
        while self.peek() in (("op", "*"), ("op", "/")):
            op = self.take()[1]
            node = ("mul" if op == "*" else "div", node, self.unary())
        return node

    def unary(self):
        if self.peek() == ("op", "-"):
            self.take()
            return ("neg", self.unary())
        if self.peek() == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self):
        node = self.atom()
        if self.peek() == ("op", "^"):
            self.take()
            if self.peek() == ("op", "("):
                self.take()
                exp = self.take("num")[1]
                self.take("op", ")")
            else:
                exp = self.take("num")[1]
            node = ("pow", node, exp)
        return node

    def atom(self):
        kind, val = self.peek()
        if kind == "num":
            self.take()
            return ("num", val)
        if kind == "name":
            self.take()
            if self.peek() == ("op", "("):
                self.take()
                arg = self.expr()
                self.take("op", ")")
                return ("call", val, arg)
            return ("var", val)
        if (kind, val) == ("op", "("):
            self.take()
            node = self.expr()
            self.take("op", ")")
            return node
        raise ExprSyntaxError("unexpected token %r in %r" % (val, self.text))


def parse(text):
    return _Parser(text).parse()


def evaluate(node, env, const, funcs=None):
    """Evaluate an AST; ``const(int)`` lifts integer literals into the ring."""
    tag = node[0]
    if tag == "num":
        return const(node[1])
    if tag == "var":
        try:
            return env[node[1]]
        except KeyError:
            raise KeyError("undeclared name %r" % node[1]) from None
    if tag == "neg":
        return -evaluate(node[1], env, const, funcs)
    if tag == "pow":
        return evaluate(node[1], env, const, funcs) ** node[2]
    if tag == "call":
        if not funcs or node[1] not in funcs:
            raise KeyError("unknown function %r" % node[1])
        return funcs[node[1]](node[2])
    a = evaluate(node[1], env, const, funcs)
    b = evaluate(node[2], env, const, funcs)
    if tag == "add":
        return a + b
    if tag == "sub":
        return a - b
    if tag == "mul":
        return a * b
    if tag == "div":
        return a / b
    raise ValueError("bad node %r" % (tag,))


def names(node):
    """Set of variable names referenced by the AST."""
    tag = node[0]
    if tag == "var":
        return {node[1]}
    if tag == "num":
        return set()
    if tag in ("neg", "pow"):
        return names(node[1])
    if tag == "call":
        return names(node[2])
    return names(node[1]) | names(node[2])


def degree_bounds(node):
    """Upper bound on the degree of each variable after expansion."""
    tag = node[0]
    if tag == "var":
        return {node[1]: 1}
    if tag == "num":
        return {}
    if tag == "neg":
        return degree_bounds(node[1])
    if tag == "pow":
        return {v: d * node[2] for v, d in degree_bounds(node[1]).items()}
    if tag == "call":
        raise ValueError("function calls have no polynomial degree")
    a, b = degree_bounds(node[1]), degree_bounds(node[2])
    if tag in ("add", "sub"):
        return {v: max(a.get(v, 0), b.get(v, 0)) for v in set(a) | set(b)}
    if tag == "mul":
        return {v: a.get(v, 0) + b.get(v, 0) for v in set(a) | set(b)}
    raise ValueError("division is not polynomial")


def to_string(node):
    tag = node[0]
    if tag == "num":
        return str(node[1])
    if tag == "var":
        return node[1]
    if tag == "neg":
        return "-(%s)" % to_string(node[1])
    if tag == "pow":
        return "(%s)^%d" % (to_string(node[1]), node[2])
    if tag == "call":
        return "%s(%s)" % (node[1], to_string(node[2]))
    sym = {"add": " + ", "sub": " - ", "mul": "*", "div": "/"}[tag]
    return "(%s%s%s)" % (to_string(node[1]), sym, to_string(node[2]))
