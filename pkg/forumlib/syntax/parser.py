"""Parser for the ASCII text of formulae and terms.

The grammar follows the usual conventions of linear logic: `~` binds
tightest, then the modalities and quantifiers, then the multiplicatives
`*` and `par`, then the additives `&` and `+` and finally the
implications `-o` and `=>`, which associate to the right. The binary
multiplicatives and additives associate to the left.

"""

import logging
import threading

from lark import Lark, Transformer, v_args
from lark.exceptions import UnexpectedInput, VisitError

from forumlib.errors import FormulaSyntaxError, ArityError
from forumlib.syntax import category
from forumlib.syntax.struct import (
    Var, App, Atom, Binary, Unary, Quantifier, ONE, BOT, TOP, ZERO, map_terms, subterms, atoms
)

__all__ = ['GRAMMAR', 'Parser', 'parse_formula', 'parse_atom', 'parse_term']

GRAMMAR = r"""
formula_text: formula
atom_text: atom
term_text: term

?formula: implication

?implication: additive
    | additive "-o" implication     -> lolli
    | additive "=>" implication     -> implies

?additive: multiplicative
    | additive "&" multiplicative   -> amp
    | additive "+" multiplicative   -> plus

?multiplicative: prefix
    | multiplicative "*" prefix     -> tensor
    | multiplicative "par" prefix   -> par

?prefix: negation
    | "!" prefix                    -> bang
    | "?" prefix                    -> whynot
    | "forall" NAME+ "." prefix     -> forall
    | "exists" NAME+ "." prefix     -> exists

?negation: primary
    | "~" prefix                    -> dual

?primary: atom
    | "1"                           -> one
    | "bot"                         -> bot
    | "top"                         -> top
    | "0"                           -> zero
    | "(" formula ")"

atom: NAME args?

term: NAME args?                    -> app
    | EIGEN                         -> eigen
    | META                          -> meta

args: "(" term ("," term)* ")"

NAME: /[A-Za-z_][A-Za-z0-9_']*/
EIGEN: /\$[A-Za-z_][A-Za-z0-9_']*@[0-9]+:[0-9]+/
META: /\?[A-Za-z_][A-Za-z0-9_']*@[0-9]+:[0-9]+/
COMMENT: /#[^\n]*/

%import common.WS
%ignore WS
%ignore COMMENT
"""

_lark = None
_lark_lock = threading.Lock()


def _get_lark():
    global _lark
    with _lark_lock:
        if _lark is None:
            _lark = Lark(GRAMMAR, parser='lalr', maybe_placeholders=False,
                         start=['formula_text', 'atom_text', 'term_text'])
        return _lark


class _Binder(object):
    """Replace the free occurrences of a name by a variable."""

    def __init__(self, name, var):
        self.name = name
        self.var = var

    def __call__(self, t):
        if t.category == category.APP:
            if t.name == self.name and not t.args:
                return self.var
            return App(t.name, [self(a) for a in t.args])
        return t


@v_args(inline=True)
class _ToStruct(Transformer):
    """Build formulae from the parse tree."""

    def __init__(self, variables):
        super(_ToStruct, self).__init__()
        self.variables = variables

    def formula_text(self, f):
        return f

    atom_text = term_text = formula_text

    def args(self, *terms):
        return list(terms)

    def app(self, name, args=()):
        return App(str(name), args)

    def atom(self, name, args=()):
        return Atom(str(name), args)

    def eigen(self, token):
        return self._var(category.EIGEN, str(token)[1:])

    def meta(self, token):
        return self._var(category.META, str(token)[1:])

    def _var(self, role, text):
        name, _, rest = text.partition('@')
        level, _, uid = rest.partition(':')
        key = (role, int(uid))
        if key not in self.variables:
            self.variables[key] = Var(name, role=role, level=int(level), uid=int(uid))
        return self.variables[key]

    def one(self):
        return ONE

    def bot(self):
        return BOT

    def top(self):
        return TOP

    def zero(self):
        return ZERO

    def tensor(self, left, right):
        return Binary(category.TENSOR, left, right)

    def par(self, left, right):
        return Binary(category.PAR, left, right)

    def amp(self, left, right):
        return Binary(category.AMP, left, right)

    def plus(self, left, right):
        return Binary(category.PLUS, left, right)

    def lolli(self, left, right):
        return Binary(category.LOLLI, left, right)

    def implies(self, left, right):
        return Binary(category.IMPLIES, left, right)

    def bang(self, body):
        return Unary(category.BANG, body)

    def whynot(self, body):
        return Unary(category.WHYNOT, body)

    def dual(self, body):
        return Unary(category.DUAL, body)

    def forall(self, *items):
        return self._quantify(category.FORALL, items[:-1], items[-1])

    def exists(self, *items):
        return self._quantify(category.EXISTS, items[:-1], items[-1])

    def _quantify(self, cat, names, body):
        for name in reversed(names):
            var = Var(str(name))
            body = Quantifier(cat, var, map_terms(body, _Binder(str(name), var)))
        return body


class Parser(object):
    """A parser with its own table of symbol arities.

    Every symbol has to be used with the same number of arguments in all
    texts read by one parser; predicates and function symbols have
    separate tables. The parser can be shared between threads.

    """

    def __init__(self, logger=None):
        self.logger = logger or logging.getLogger(__name__)
        self.predicates = {}
        self.functions = {}
        self.variables = {}
        self._lock = threading.Lock()

    def parse(self, text, start='formula'):
        try:
            tree = _get_lark().parse(text, start=start + '_text')
        except UnexpectedInput as e:
            raise FormulaSyntaxError('unexpected input', getattr(e, 'line', None), getattr(e, 'column', None))
        with self._lock:
            try:
                rv = _ToStruct(self.variables).transform(tree)
            except VisitError as e:
                raise FormulaSyntaxError(str(e.orig_exc))
            self._check_arities(rv)
        self.logger.debug('parsed "{0}"'.format(text))
        return rv

    def formula(self, text):
        return self.parse(text, 'formula')

    def atom(self, text):
        return self.parse(text, 'atom')

    def term(self, text):
        return self.parse(text, 'term')

    def _check_arities(self, obj):
        pending_preds = dict(self.predicates)
        pending_funs = dict(self.functions)
        for a in atoms(obj):
            _record(pending_preds, a.pred, a.arity, 'predicate')
        for t in subterms(obj):
            if t.category == category.APP:
                _record(pending_funs, t.name, t.arity, 'function symbol')
        self.predicates = pending_preds
        self.functions = pending_funs


def _record(table, name, arity, kind):
    known = table.get(name)
    if known is None:
        table[name] = arity
    elif known != arity:
        raise ArityError('{0} "{1}" used with {2} arguments, previously with {3}'
                         .format(kind, name, arity, known))


def parse_formula(text, parser=None):
    """Parse `text` into a formula.

    >>> parse_formula('a -o b -o c') == parse_formula('a -o (b -o c)')
    True

    """
    return (parser or Parser()).formula(text)


def parse_atom(text, parser=None):
    return (parser or Parser()).atom(text)


def parse_term(text, parser=None):
    return (parser or Parser()).term(text)
