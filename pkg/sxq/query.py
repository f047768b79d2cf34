"""
The textual query language and its compilation into patterns

Query syntax is s-expression syntax with a few reserved forms:

    _                    matches anything
    ?name                binds name; later occurrences on the same branch must be equal
    ()                   matches the empty list
    (%or p q ...)        any of the branches, in order
    (%and p q ...)       all of the branches
    (%suffix p)          p matches the target or one of its iterated cdrs
    (%elem p)            p matches some element of a list
    (p1 p2 ... [. pt])   list template, proper unless a dotted tail is given

Any other atom matches structurally equal values. Symbols starting with '%'
are reserved for operators.
"""
import itertools
import logging
from collections import OrderedDict
from dataclasses import dataclass

from .core import Pattern, Variable, any_, conj, disj, eq, traced
from .pairs import is_empty, nth, nthcdr, pair_pattern
from .reader import DECIMAL_REGEX, INTEGER_REGEX, ReadError, read_syntax
from .values import EMPTY, Symbol

logger = logging.getLogger(__name__)


class QueryError(ReadError):
    """Malformed query text; carries the SourcePosition of the offending form"""


# syntax tree

@dataclass(frozen=True)
class Wildcard:
    pass


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Literal:
    value: object


@dataclass(frozen=True)
class PairPat:
    car: object
    cdr: object


@dataclass(frozen=True)
class EmptyPat:
    pass


@dataclass(frozen=True)
class OrPat:
    branches: tuple


@dataclass(frozen=True)
class AndPat:
    branches: tuple


@dataclass(frozen=True)
class SuffixPat:
    inner: object


@dataclass(frozen=True)
class ElemPat:
    inner: object


# operator name : (node class, minimum arguments, maximum arguments or None)
OPERATORS = {
    "%or": (OrPat, 2, None),
    "%and": (AndPat, 2, None),
    "%suffix": (SuffixPat, 1, 1),
    "%elem": (ElemPat, 1, 1),
}


def _check_variable_name(name, position):
    bad = ((name == "") or name[0] in "?%" or name == "_"
           or INTEGER_REGEX.match(name) or DECIMAL_REGEX.match(name)
           or name.startswith("#"))
    if (bad):
        raise QueryError("malformed variable name '?{}'".format(name), position)


def _convert(node):
    """Translate a Syntax node into a query node"""
    if (not node.is_list):
        value = node.atom
        if (value is EMPTY):
            return EmptyPat()
        if (isinstance(value, Symbol)):
            if (value.name == "_"):
                return Wildcard()
            if (value.name.startswith("?")):
                _check_variable_name(value.name[1:], node.position)
                return Var(value.name[1:])
            if (value.name.startswith("%")):
                err = "reserved operator '{}' outside head position"
                raise QueryError(err.format(value.name), node.position)
        return Literal(value)

    head = node.items[0]
    if ((not head.is_list) and isinstance(head.atom, Symbol) and head.atom.name.startswith("%")):
        return _convert_operator(head.atom.name, node)

    # list template, built from the right
    result = EmptyPat() if node.tail is None else _convert(node.tail)
    for item in reversed(node.items):
        result = PairPat(_convert(item), result)
    return result


def _convert_operator(name, node):
    if (name not in OPERATORS):
        raise QueryError("unknown operator '{}'".format(name), node.position)
    if (node.tail is not None):
        raise QueryError("operator form '{}' must be a proper list".format(name),
                         node.tail.position)

    cls, low, high = OPERATORS[name]
    args = [_convert(item) for item in node.items[1:]]
    if ((len(args) < low) or (high is not None and len(args) > high)):
        if (high == low):
            expected = "exactly {}".format(low)
        else:
            expected = "at least {}".format(low)
        err = "operator '{}' takes {} argument(s), got {}"
        raise QueryError(err.format(name, expected, len(args)), node.position)

    if (high is None):
        return cls(tuple(args))
    return cls(args[0])


def parse_query(text):
    """
    Parse query text into a query syntax tree

    Raises
    ------
    QueryError
        The text is not a well-formed s-expression or misuses reserved forms
    """
    try:
        node = read_syntax(text)
    except QueryError:
        raise
    except ReadError as e:
        raise QueryError(e.message, e.position) from None
    return _convert(node)


# compilation

class _Binder:
    """
    Per-name binding state shared by all occurrences of a query variable
    """
    def __init__(self, name):
        self.name = name
        self.variable = Variable(name)
        self.bound = False
        self.stamp = 0  # order of binding within the current solution


class _Occurrence(Pattern):
    """
    One occurrence of a query variable

    Binds if the name is not yet bound on the current branch, otherwise checks
    for structural equality. A binding is undone when this occurrence is
    backtracked over.
    """
    def __init__(self, binder, clock):
        super().__init__("?" + binder.name)
        self.binder = binder
        self.clock = clock
        self._owner = False

    def _start(self, target):
        self._owner = False
        if (self.binder.bound):
            return self.binder.variable.get_value() == target
        self.binder.variable.match(target)
        self.binder.bound = True
        self.binder.stamp = next(self.clock)
        self._owner = True
        return True

    def _retry(self):
        if (self._owner):
            self.binder.bound = False
            self._owner = False
        return False


class CompiledQuery:
    """
    A query compiled to a pattern, with its variable table

    Attributes
    ----------
    ast : query node
        The query syntax tree
    pattern : Pattern
        The compiled pattern
    binders : OrderedDict
        Variable name to binding state, in order of first occurrence
    """
    def __init__(self, ast, trace=False):
        self.ast = ast
        self.trace = trace
        self.binders = OrderedDict()
        self._clock = itertools.count()
        self.pattern = self._compile(ast)

    def __repr__(self):
        return "CompiledQuery({})".format(self.pattern.name)

    @property
    def variables(self):
        """Variable name to core Variable, in order of first occurrence"""
        return OrderedDict((name, b.variable) for name, b in self.binders.items())

    def _compile(self, node):
        pattern = self._compile_node(node)
        if (self.trace):
            pattern = traced(pattern)
        return pattern

    def _compile_node(self, node):
        if (isinstance(node, Wildcard)):
            return any_()
        if (isinstance(node, Var)):
            if (node.name not in self.binders):
                self.binders[node.name] = _Binder(node.name)
            return _Occurrence(self.binders[node.name], self._clock)
        if (isinstance(node, Literal)):
            return eq(node.value)
        if (isinstance(node, EmptyPat)):
            return is_empty()
        if (isinstance(node, PairPat)):
            return pair_pattern(self._compile(node.car), self._compile(node.cdr))
        if (isinstance(node, OrPat)):
            return disj(*[self._compile(b) for b in node.branches])
        if (isinstance(node, AndPat)):
            return conj(*[self._compile(b) for b in node.branches])
        if (isinstance(node, SuffixPat)):
            return nthcdr().apply(self._compile(node.inner))
        if (isinstance(node, ElemPat)):
            return nth().apply(self._compile(node.inner))
        raise TypeError("not a query node: {!r}".format(node))

    def _reset(self):
        for binder in self.binders.values():
            binder.bound = False

    def snapshot(self):
        """
        Bindings of the current solution

        Returns
        -------
        bindings : OrderedDict
            Name to Value for every variable bound on the successful branch,
            in binding order
        """
        bound = [b for b in self.binders.values() if b.bound]
        bound.sort(key=lambda b: b.stamp)
        return OrderedDict((b.name, b.variable.get_value()) for b in bound)

    def match(self, target):
        self._reset()
        return self.pattern.match(target)

    def match_again(self):
        return self.pattern.match_again()

    def first(self, target):
        """
        Bindings of the first solution, or None if there is none

        Never asks for a second solution.
        """
        if (self.match(target)):
            return self.snapshot()
        return None


def compile_query(ast, trace=False):
    """
    Compile a query syntax tree

    Args
    ----
    ast : query node
        Result of parse_query
    trace : bool, optional
        Wrap every compiled node so its attempts are logged at DEBUG level

    Returns
    -------
    query : CompiledQuery
    """
    return CompiledQuery(ast, trace=trace)


def collect_bindings(query, target, max_solutions=None):
    """
    Drain the solutions of a compiled query

    Args
    ----
    query : CompiledQuery
        The compiled query
    target : Value
        The data to match
    max_solutions : int, optional
        Stop after this many solutions

    Returns
    -------
    solutions : list
        One OrderedDict of bindings per solution, in solution order
    """
    if (max_solutions is not None and max_solutions < 1):
        raise ValueError("max_solutions must be at least 1, got {}".format(max_solutions))

    solutions = []
    success = query.match(target)
    while (success):
        bindings = query.snapshot()
        logger.debug("solution %d: %s", len(solutions), dict(bindings))
        solutions.append(bindings)
        if (max_solutions is not None and len(solutions) >= max_solutions):
            break
        success = query.match_again()
    return solutions
