"""
Pattern transformers

A Motif turns a pattern over one kind of data into a pattern over another.
Lifting a projection f : B -> A gives a Motif from patterns over A to patterns
over B (contravariant lifting). Endo-motifs compose under a Kleene algebra
with star and plus.
"""
from .core import Pattern, Variable


class Lifted(Pattern):
    """
    Match the inner pattern against a projection of the target

    Attributes
    ----------
    projection : callable
        Function applied to the target before matching the inner pattern
    partial : bool
        The projection may return None, in which case there is no solution
    """
    def __init__(self, projection, pattern, partial=False, name=None):
        super().__init__("{}({})".format(name or "lift", pattern.name))
        self.projection = projection
        self.pattern = pattern
        self.partial = partial

    def _start(self, target):
        projected = self.projection(target)
        if (self.partial and projected is None):
            return False
        return self.pattern.match(projected)

    def _retry(self):
        return self.pattern.match_again()


class Star(Pattern):
    """
    Zero or more iterations of an endo-motif around a pattern

    Solutions at iteration depth 0 come first, followed by those reached
    through one more application of the motif, depth-first. The deeper level is
    only built once the shallower solutions are exhausted.

    When the motif is a plain chain of projections (steps), the levels are
    walked in a loop instead of nesting one pattern per level.
    """
    def __init__(self, motif, pattern, depth=0, max_depth=None, steps=None):
        super().__init__("{}*({})".format(motif.name, pattern.name))
        self.motif = motif
        self.pattern = pattern
        self.depth = depth
        self.max_depth = max_depth
        self.steps = steps
        self._deeper = None
        self._on_deeper = False
        self._current = None
        self._level = 0

    def _start(self, target):
        if (self.steps is not None):
            self._current = target
            self._level = self.depth
            return self._walk(self.pattern.match(target))
        self._on_deeper = False
        if (self.pattern.match(target)):
            return True
        return self._descend()

    def _retry(self):
        if (self.steps is not None):
            return self._walk(self.pattern.match_again())
        if (not self._on_deeper):
            if (self.pattern.match_again()):
                return True
            return self._descend()
        return self._deeper.match_again()

    def _walk(self, success):
        while (not success):
            if (self.max_depth is not None and self._level >= self.max_depth):
                return False
            value = self._current
            for projection, partial in self.steps:
                value = projection(value)
                if (partial and value is None):
                    return False
            self._current = value
            self._level += 1
            success = self.pattern.match(value)
        return True

    def _descend(self):
        self._on_deeper = True
        if (self.max_depth is not None and self.depth >= self.max_depth):
            return False
        if (self._deeper is None):
            inner = Star(self.motif, self.pattern, self.depth + 1, self.max_depth)
            self._deeper = self.motif.apply(inner)
        return self._deeper.match(self.target)


def _projection_steps(motif):
    """
    The (projection, partial) pairs of a motif made only of Lifted wrappers,
    outermost first, or None for any other motif
    """
    hole = Pattern("hole")
    pattern = motif.apply(hole)
    steps = []
    while (isinstance(pattern, Lifted)):
        steps.append((pattern.projection, pattern.partial))
        pattern = pattern.pattern
    if (pattern is not hole or not steps):
        return None
    return steps


class Motif:
    """
    An immutable pattern transformer

    Attributes
    ----------
    name : str
        Diagnostic name
    """
    def __init__(self, build, name="motif"):
        """
        Args
        ----
        build : callable
            Function from a Pattern to a new Pattern
        name : str, optional
            Diagnostic name
        """
        self._build = build
        self.name = name

    def __repr__(self):
        return "Motif('{}')".format(self.name)

    def apply(self, pattern):
        """
        Transform a pattern

        Args
        ----
        pattern : Pattern
            Pattern over the inner data

        Returns
        -------
        pattern : Pattern
            Pattern over the outer data
        """
        return self._build(pattern)

    __call__ = apply

    def then(self, inner):
        """
        Compose with another motif, which is applied first

        m.then(n).apply(p) is m.apply(n.apply(p))
        """
        return Motif(lambda p: self.apply(inner.apply(p)),
                     "{}.{}".format(self.name, inner.name))

    def eager_bindings(self, target):
        """
        Collect every value the motif exposes on target

        Returns
        -------
        values : list
            One entry per solution, in solution order, duplicates kept
        """
        return list(self.lazy_bindings(target))

    def lazy_bindings(self, target):
        """
        Yield the exposed values one solution at a time

        The returned generator drives its own session and supports a single
        consumer.
        """
        var = Variable()
        pattern = self.apply(var)
        success = pattern.match(target)
        while (success):
            yield var.get_value()
            success = pattern.match_again()


def transform(function, name=None):
    """
    Lift a total function B -> A to a Motif from patterns over A to patterns over B
    """
    name = name or getattr(function, "__name__", "transform")
    return Motif(lambda p: Lifted(function, p, name=name), name)


def transform_partial(function, name=None):
    """
    Lift a partial function B -> A, returning None outside its domain

    The lifted pattern has no solution where the function returns None.
    """
    name = name or getattr(function, "__name__", "transform")
    return Motif(lambda p: Lifted(function, p, partial=True, name=name), name)


def for_instances_of(*types):
    """Motif that only passes on targets that are instances of one of types"""
    def cast(target):
        return target if isinstance(target, types) else None
    return transform_partial(cast, "as({})".format("|".join(t.__name__ for t in types)))


def identity():
    """The motif that returns its pattern unchanged"""
    return Motif(lambda p: p, "id")


def star(motif):
    """Zero or more iterations of an endo-motif"""
    steps = _projection_steps(motif)
    return Motif(lambda p: Star(motif, p, steps=steps), "{}*".format(motif.name))


def star_bounded(motif, max_depth):
    """Like star, but never iterates the motif more than max_depth times"""
    if (max_depth < 0):
        raise ValueError("max_depth must be non-negative, got {}".format(max_depth))
    steps = _projection_steps(motif)
    return Motif(lambda p: Star(motif, p, max_depth=max_depth, steps=steps),
                 "{}*{}".format(motif.name, max_depth))


def plus(motif):
    """One or more iterations of an endo-motif, motif.apply(star(motif).apply(p))"""
    steps = _projection_steps(motif)
    return Motif(lambda p: motif.apply(Star(motif, p, steps=steps)), "{}+".format(motif.name))
