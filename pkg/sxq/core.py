"""
Main pattern classes: backtracking sessions, variables, tests and combinators

A Pattern is matched against a target with match(), which opens a session and
reports whether a first solution exists. Further solutions are obtained by
calling match_again() for as long as it reports success. Data flows out of a
match only through side effects: Variable bindings and continuation actions.
"""
import itertools
import logging

logger = logging.getLogger(__name__)

# names handed out to anonymous variables, "v1", "v2", ...
_anonymous = itertools.count(1)


class MatchFailure(Exception):
    """
    Raised by ensure() when a clause expression reports failure
    """
    def __init__(self, message="pattern did not match"):
        super().__init__(message)
        self.message = message


class UnboundVariableError(LookupError):
    """
    Raised when the value of a Variable is read before any match bound it
    """
    def __init__(self, variable):
        message = "variable '{}' is unbound (read before a successful match)"
        super().__init__(message.format(variable.name))
        self.variable = variable


class Pattern:
    """
    A restartable matcher with explicit backtracking

    Subclasses implement _start(target) and _retry(); the public match() and
    match_again() take care of the session bookkeeping.

    Attributes
    ----------
    name : str
        Diagnostic name used in reprs and traces
    target : object
        Target of the current session, only meaningful while a session is open
    """
    def __init__(self, name=None):
        self.name = name if name is not None else type(self).__name__.lower()
        self.target = None
        self._open = False  # True between a successful solution and exhaustion

    def __repr__(self):
        return "<{} {}>".format(type(self).__name__, self.name)

    def match(self, target):
        """
        Open a new session and look for the first solution

        Any prior session of this pattern is discarded.

        Args
        ----
        target : object
            The data to match against

        Returns
        -------
        success : bool
            True if at least one solution exists
        """
        self.target = target
        self._open = False
        try:
            self._open = bool(self._start(target))
        except BaseException:
            self._open = False
            raise
        return self._open

    def match_again(self):
        """
        Advance the current session to its next solution

        Returns False without a session, and keeps returning False once the
        session has been exhausted.

        Returns
        -------
        success : bool
            True if another solution exists
        """
        if (not self._open):
            return False
        try:
            self._open = bool(self._retry())
        except BaseException:
            self._open = False
            raise
        return self._open

    def _start(self, target):
        raise NotImplementedError

    def _retry(self):
        return False

    # combinators, all returning new patterns

    def conj(self, other):
        """Both patterns must match; other is restarted for every solution of self"""
        return Conjunction(self, other)

    def disj(self, other):
        """All solutions of self, followed by all solutions of other"""
        return Disjunction(self, other)

    __and__ = conj
    __or__ = disj

    def and_then(self, action):
        """Run action after every solution of this pattern"""
        return AndThen(self, action)

    def or_else(self, action):
        """Run action when the initial match of this pattern fails"""
        return OrElse(self, action)


class Variable(Pattern):
    """
    A pattern that always succeeds once and binds the matched target

    Attributes
    ----------
    is_bound : bool
        A value has been recorded by some earlier match
    """
    def __init__(self, name=None):
        if (name is None):
            name = "v{}".format(next(_anonymous))
        super().__init__(name)
        self.is_bound = False
        self._value = None

    def _start(self, target):
        self._value = target
        self.is_bound = True
        return True

    def get_value(self):
        """
        Return the most recently bound target

        Raises
        ------
        UnboundVariableError
            No match has ever bound this variable
        """
        if (not self.is_bound):
            raise UnboundVariableError(self)
        return self._value

    value = property(get_value)


class Test(Pattern):
    """
    A pattern with exactly one solution whenever a predicate holds
    """
    def __init__(self, predicate, name=None):
        super().__init__(name or getattr(predicate, "__name__", "test"))
        self.predicate = predicate

    def _start(self, target):
        return self.predicate(target)


class Conjunction(Pattern):
    """
    Dependent sum of two patterns over the same target

    For each solution of the left pattern (in order) all solutions of the
    right pattern are produced; the right side varies fastest.
    """
    def __init__(self, left, right):
        super().__init__("({} & {})".format(left.name, right.name))
        self.left = left
        self.right = right

    def _start(self, target):
        if (not self.left.match(target)):
            return False
        return self._advance_left(restart_right=True)

    def _retry(self):
        if (self.right.match_again()):
            return True
        return self._advance_left(restart_right=False)

    def _advance_left(self, restart_right):
        # restart the right side against the target for every left solution
        while True:
            if (restart_right and self.right.match(self.target)):
                return True
            restart_right = True
            if (not self.left.match_again()):
                return False


class Disjunction(Pattern):
    """
    All solutions of the left pattern, then all of the right pattern
    """
    def __init__(self, left, right):
        super().__init__("({} | {})".format(left.name, right.name))
        self.left = left
        self.right = right
        self._on_right = False

    def _start(self, target):
        self._on_right = False
        if (self.left.match(target)):
            return True
        self._on_right = True
        return self.right.match(target)

    def _retry(self):
        if (not self._on_right):
            if (self.left.match_again()):
                return True
            self._on_right = True
            return self.right.match(self.target)
        return self.right.match_again()


class AndThen(Pattern):
    """
    Behaves like the wrapped pattern, running an action after each solution
    """
    def __init__(self, pattern, action):
        super().__init__(pattern.name)
        self.pattern = pattern
        self.action = action

    def _start(self, target):
        if (self.pattern.match(target)):
            self.action()
            return True
        return False

    def _retry(self):
        if (self.pattern.match_again()):
            self.action()
            return True
        return False


class OrElse(Pattern):
    """
    Behaves like the wrapped pattern, running an action if the initial match fails

    Exhausting the session with match_again() does not run the action.
    """
    def __init__(self, pattern, action):
        super().__init__(pattern.name)
        self.pattern = pattern
        self.action = action

    def _start(self, target):
        if (self.pattern.match(target)):
            return True
        self.action()
        return False

    def _retry(self):
        return self.pattern.match_again()


class Traced(Pattern):
    """
    Log every attempt of the wrapped pattern at DEBUG level
    """
    def __init__(self, pattern, name=None):
        super().__init__(name or pattern.name)
        self.pattern = pattern

    def _start(self, target):
        success = self.pattern.match(target)
        logger.debug("match %s against %r: %s", self.name, target, success)
        return success

    def _retry(self):
        success = self.pattern.match_again()
        logger.debug("match_again %s: %s", self.name, success)
        return success


# factories

def test(predicate, name=None):
    """
    Lift a predicate to a pattern with one solution when it holds

    Args
    ----
    predicate : callable
        Function of the target returning a truth value
    name : str, optional
        Diagnostic name, defaults to the predicate's __name__
    """
    return Test(predicate, name)


def any_():
    """The pattern that matches every target exactly once"""
    return Test(lambda target: True, "_")


def fail():
    """The pattern without solutions"""
    return Test(lambda target: False, "fail")


def eq(reference):
    """Match targets structurally equal to reference"""
    return Test(lambda target: target == reference, "eq({!r})".format(reference))


def is_instance_of(*types):
    """Match targets that are instances of any of the given types"""
    names = "|".join(t.__name__ for t in types)
    return Test(lambda target: isinstance(target, types), "is({})".format(names))


def variable(name=None):
    """A fresh unbound Variable"""
    return Variable(name)


def conj(*patterns):
    """Left fold of Pattern.conj over one or more patterns"""
    if (not patterns):
        raise ValueError("conj needs at least one pattern")
    result = patterns[0]
    for p in patterns[1:]:
        result = result.conj(p)
    return result


def disj(*patterns):
    """Left fold of Pattern.disj over one or more patterns"""
    if (not patterns):
        raise ValueError("disj needs at least one pattern")
    result = patterns[0]
    for p in patterns[1:]:
        result = result.disj(p)
    return result


def traced(pattern, name=None):
    """Wrap pattern so its attempts are logged at DEBUG level"""
    return Traced(pattern, name)


# clause operators: glue between patterns and ordinary control flow

def test_then(target, pattern, action):
    """
    Match pattern against target and run action on success

    Equivalent to pattern.and_then(action).match(target).
    """
    return pattern.and_then(action).match(target)


def otherwise(action):
    """Run action and report success, closing a chain of clause expressions"""
    action()
    return True


def ensure(success):
    """
    Turn a failed clause expression into a MatchFailure

    Raises
    ------
    MatchFailure
        success is false
    """
    if (not success):
        raise MatchFailure()
