"""This module contains visitor classes (see the visitor pattern) for printing."""

from nltk.tree import Tree

from forumlib.syntax import category
from forumlib.syntax.struct import free_vars, symbol_names, goal_to_formula, clause_to_formula

__all__ = [
    'ASCII',
    'UNICODE',
    'PRECEDENCE',
    'StrVisitor',
    'TreeVisitor',
    'print_formula',
    'print_term',
    'print_goal',
    'print_clause',
    'formula_to_tree',
]

ASCII = {
    category.ONE: '1',
    category.BOT: 'bot',
    category.TOP: 'top',
    category.ZERO: '0',
    category.TENSOR: '*',
    category.PAR: 'par',
    category.AMP: '&',
    category.PLUS: '+',
    category.LOLLI: '-o',
    category.IMPLIES: '=>',
    category.BANG: '!',
    category.WHYNOT: '?',
    category.DUAL: '~',
    category.FORALL: 'forall',
    category.EXISTS: 'exists',
}

UNICODE = dict(ASCII)
UNICODE.update({
    category.BOT: '⊥',
    category.TOP: '⊤',
    category.TENSOR: '⊗',
    category.PAR: '⅋',
    category.PLUS: '⊕',
    category.LOLLI: '⊸',
    category.IMPLIES: '⇒',
    category.FORALL: '∀',
    category.EXISTS: '∃',
})

# binding strength: implications are the weakest, negation the strongest
PRECEDENCE = {
    category.LOLLI: 1,
    category.IMPLIES: 1,
    category.AMP: 2,
    category.PLUS: 2,
    category.TENSOR: 3,
    category.PAR: 3,
    category.BANG: 4,
    category.WHYNOT: 4,
    category.FORALL: 4,
    category.EXISTS: 4,
    category.DUAL: 5,
}
ATOMIC = 6
PREFIX = PRECEDENCE[category.BANG]

right_associative = {category.LOLLI, category.IMPLIES}


class StrVisitor(object):
    """Print formulae with the minimal number of parentheses.

    Display names of bound variables are chosen so that they never clash
    with each other or with the names of free symbols, hence the output
    parses back to an α-equivalent formula.

    """

    def __init__(self, symbols=ASCII, taken=None):
        self.symbols = symbols
        self.taken = set(taken or ())
        self.scope = {}

    def show(self, node, prec=0):
        text = node.accept(self)
        if PRECEDENCE.get(node.category, ATOMIC) < prec:
            return '({0})'.format(text)
        return text

    def term(self, t):
        if t.category == category.VAR:
            if t in self.scope:
                return self.scope[t]
            if t.role == category.BOUND:
                return t.name
            prefix = '$' if t.role == category.EIGEN else '?'
            return '{0}{1}@{2}:{3}'.format(prefix, t.name.rstrip("'") or 'v', t.level, t.uid)
        if not t.args:
            return t.name
        return '{0}({1})'.format(t.name, ', '.join(self.term(a) for a in t.args))

    def atom(self, node):
        if not node.args:
            return node.pred
        return '{0}({1})'.format(node.pred, ', '.join(self.term(a) for a in node.args))

    def constant(self, node):
        return self.symbols[node.category]

    one = bot = top = zero = constant

    def binary(self, node):
        prec = PRECEDENCE[node.category]
        if node.category in right_associative:
            left, right = self.show(node.left, prec + 1), self.show(node.right, prec)
        else:
            left, right = self.show(node.left, prec), self.show(node.right, prec + 1)
        return '{0} {1} {2}'.format(left, self.symbols[node.category], right)

    tensor = par = amp = plus = lolli = implies = binary

    def unary(self, node):
        # every prefix operator takes a prefix-level operand
        return self.symbols[node.category] + self.show(node.body, PREFIX)

    bang = whynot = dual = unary

    def quantifier(self, node):
        name = self._pick_name(node.var.name)
        outer = self.scope.get(node.var)
        self.scope[node.var] = name
        try:
            body = self.show(node.body, PRECEDENCE[node.category])
        finally:
            if outer is None:
                del self.scope[node.var]
            else:
                self.scope[node.var] = outer
        sep = ' ' if self.symbols is ASCII else ''
        return '{0}{1}{2}. {3}'.format(self.symbols[node.category], sep, name, body)

    forall = exists = quantifier

    def _pick_name(self, name):
        in_use = self.taken | set(self.scope.values())
        while name in in_use or name in ASCII.values():
            name += "'"
        return name


class TreeVisitor(object):
    """Convert a formula into an nltk `Tree` for pretty printing."""

    def __init__(self, symbols=UNICODE):
        self.printer = StrVisitor(symbols)

    def atom(self, node):
        return self.printer.atom(node)

    def constant(self, node):
        return self.printer.symbols[node.category]

    one = bot = top = zero = constant

    def binary(self, node):
        return Tree(self.printer.symbols[node.category], [node.left.accept(self), node.right.accept(self)])

    tensor = par = amp = plus = lolli = implies = binary

    def unary(self, node):
        return Tree(self.printer.symbols[node.category], [node.body.accept(self)])

    bang = whynot = dual = unary

    def quantifier(self, node):
        label = '{0}{1}'.format(self.printer.symbols[node.category], node.var.name)
        return Tree(label, [node.body.accept(self)])

    forall = exists = quantifier


def _taken_names(f):
    names = symbol_names(f)
    names |= set(v.name for v in free_vars(f) if v.role == category.BOUND)
    return names


def print_formula(f, symbols=ASCII):
    """Return the text of formula `f`.

    >>> from forumlib.syntax import parse_formula
    >>> print_formula(parse_formula('(a par b) par c'))
    'a par b par c'

    """
    return StrVisitor(symbols, _taken_names(f)).show(f)


def print_term(t):
    return StrVisitor().term(t)


def print_goal(g, symbols=ASCII):
    return print_formula(goal_to_formula(g), symbols)


def print_clause(c, symbols=ASCII):
    return print_formula(clause_to_formula(c), symbols)


def formula_to_tree(f):
    return f.accept(TreeVisitor())
