"""
Pattern bindings for LISP pairs

Type tests, the pair view motif with its projections, the pair construction
pattern, list navigation motifs, the list clause vocabulary, and the
continuation-based clause operators and pattern wrappers.
"""
from dataclasses import dataclass
from operator import attrgetter

from .core import Variable, any_, eq, is_instance_of, test, test_then
from .motifs import star, transform, transform_partial
from .values import (EMPTY, ATOM_TYPES, Boolean, Number, Pair, String,
                     Symbol)


@dataclass(frozen=True)
class PairView:
    """The components of a Pair, exposed by as_pair()"""
    car: object
    cdr: object


# type tests

def is_pair():
    return is_instance_of(Pair)


def is_empty():
    return eq(EMPTY)


def is_symbol():
    return is_instance_of(Symbol)


def is_number():
    return is_instance_of(Number)


def is_string():
    return is_instance_of(String)


def is_boolean():
    return is_instance_of(Boolean)


def is_atom():
    return is_instance_of(*ATOM_TYPES)


# view and projections

def _view_pair(value):
    if (isinstance(value, Pair)):
        return PairView(value.car, value.cdr)
    return None


def as_pair():
    """Motif exposing the PairView of a Pair; no solution on other values"""
    return transform_partial(_view_pair, "as_pair")


def car_proj():
    return transform(attrgetter("car"), "car")


def cdr_proj():
    return transform(attrgetter("cdr"), "cdr")


def pair_pattern(pcar, pcdr):
    """
    Match a Pair whose car matches pcar and whose cdr matches pcdr

    Solutions follow conjunction order: the cdr side varies fastest.
    """
    return as_pair().apply(car_proj().apply(pcar).conj(cdr_proj().apply(pcdr)))


# navigation

def pair_car():
    return as_pair().then(car_proj())


def pair_cdr():
    return as_pair().then(cdr_proj())


def nthcdr():
    """The target itself and each of its iterated cdrs, including the final tail"""
    return star(pair_cdr())


def nth():
    """Each element of a list, left to right"""
    return nthcdr().then(pair_car())


# vocabulary

def triple(x, y, z):
    """Proper lists of exactly three elements"""
    return pair_pattern(x, pair_pattern(y, pair_pattern(z, is_empty())))


def singleton(x):
    """Proper lists of exactly one element"""
    return pair_pattern(x, is_empty())


def singleton_then(target, action):
    """Run action if target is a one-element list"""
    return test_then(target, singleton(any_()), action)


def singleton_cont(action):
    """Pattern wrapper around singleton_then"""
    return test(lambda target: singleton_then(target, action), "singleton_cont")


# clause operators and pattern wrappers

def pair_then(target, cont):
    """
    Deconstruct a Pair and pass its components to a continuation

    Args
    ----
    target : Value
        The value to test
    cont : callable
        Called once with (car, cdr) if target is a Pair

    Returns
    -------
    success : bool
        target is a Pair
    """
    car, cdr = Variable("car"), Variable("cdr")
    if (pair_pattern(car, cdr).match(target)):
        cont(car.get_value(), cdr.get_value())
        return True
    return False


def pair_then_simple(target, action):
    """Run a parameterless action if target is a Pair"""
    return test_then(target, is_pair(), action)


def pair_cont(cont):
    """Pattern that succeeds exactly when pair_then(target, cont) does"""
    return test(lambda target: pair_then(target, cont), "pair_cont")


def pair_cont_simple(action):
    """Pattern that succeeds exactly when pair_then_simple(target, action) does"""
    return test(lambda target: pair_then_simple(target, action), "pair_cont")
