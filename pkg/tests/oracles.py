"""
Brute-force oracles and data generators shared by the tests

Nothing here uses the pattern machinery: the walkers and the query interpreter
work directly on Values so they can be compared against it.
"""
import itertools
import string
from decimal import Decimal

import hypothesis.strategies as st

from sxq.query import (AndPat, ElemPat, EmptyPat, Literal, OrPat, PairPat,
                       SuffixPat, Var, Wildcard)
from sxq.values import EMPTY, Boolean, Number, Pair, String, Symbol, make_list

A, B = Symbol("a"), Symbol("b")
ALPHABET = (A, B)


def drain(pattern, target):
    """Number of solutions of pattern on target"""
    count = 0
    success = pattern.match(target)
    while (success):
        count += 1
        success = pattern.match_again()
    return count


def suffixes(value):
    """The value and each of its iterated cdrs"""
    result = [value]
    while (isinstance(value, Pair)):
        value = value.cdr
        result.append(value)
    return result


def elements(value):
    result = []
    while (isinstance(value, Pair)):
        result.append(value.car)
        value = value.cdr
    return result


def list_length(value):
    """Length of a proper list, None for anything else"""
    n = 0
    while (isinstance(value, Pair)):
        n += 1
        value = value.cdr
    return n if value is EMPTY else None


def all_values(depth, atoms=(A, B, EMPTY)):
    """Every value over atoms with pair nesting depth at most depth"""
    values = list(atoms)
    for _ in range(depth):
        values = list(atoms) + [Pair(car, cdr) for car in values for cdr in values]
    return values


def all_lists(max_length, alphabet=ALPHABET):
    """Every proper list over alphabet of length 0..max_length"""
    for n in range(max_length + 1):
        for items in itertools.product(alphabet, repeat=n):
            yield make_list(*items)


# hypothesis strategies

SYMBOL_CHARS = string.ascii_letters + "-+*/<>=!?_"

symbols = st.text(alphabet=SYMBOL_CHARS, min_size=1, max_size=8).map(Symbol)
integers = st.integers().map(Number)
decimals = st.builds(lambda whole, frac: Number(Decimal("{}.{}".format(whole, frac))),
                     st.integers(-10**6, 10**6), st.integers(0, 10**4))
strings = st.text(max_size=10).map(String)
booleans = st.booleans().map(Boolean)
atoms = st.one_of(symbols, integers, decimals, strings, booleans, st.just(EMPTY))


def values(depth=5):
    """Random Values with pair nesting depth at most depth"""
    if (depth == 0):
        return atoms
    inner = values(depth - 1)
    return st.one_of(atoms, st.builds(Pair, inner, inner))


def small_values(depth=3):
    """Random Values over the two-symbol alphabet and the empty list"""
    leaves = st.sampled_from([A, B, EMPTY])
    if (depth == 0):
        return leaves
    inner = small_values(depth - 1)
    return st.one_of(leaves, st.builds(Pair, inner, inner))


def queries(depth=3):
    """Random query syntax trees over the two-symbol alphabet"""
    leaves = st.one_of(st.just(Wildcard()), st.sampled_from([Var("x"), Var("y")]),
                       st.sampled_from([Literal(A), Literal(B)]), st.just(EmptyPat()))
    if (depth == 0):
        return leaves
    inner = queries(depth - 1)
    return st.one_of(
        leaves,
        st.builds(PairPat, inner, inner),
        st.lists(inner, min_size=2, max_size=3).map(lambda bs: OrPat(tuple(bs))),
        st.lists(inner, min_size=2, max_size=2).map(lambda bs: AndPat(tuple(bs))),
        st.builds(SuffixPat, inner),
        st.builds(ElemPat, inner),
    )


# independent query interpreter

def interpret(node, target, env=()):
    """
    Yield the binding environment of every solution of node on target

    Environments are tuples of (name, value) pairs in binding order.
    """
    if (isinstance(node, Wildcard)):
        yield env
    elif (isinstance(node, Var)):
        bound = dict(env)
        if (node.name in bound):
            if (bound[node.name] == target):
                yield env
        else:
            yield env + ((node.name, target),)
    elif (isinstance(node, Literal)):
        if (node.value == target):
            yield env
    elif (isinstance(node, EmptyPat)):
        if (target is EMPTY):
            yield env
    elif (isinstance(node, PairPat)):
        if (isinstance(target, Pair)):
            for env1 in interpret(node.car, target.car, env):
                yield from interpret(node.cdr, target.cdr, env1)
    elif (isinstance(node, OrPat)):
        for branch in node.branches:
            yield from interpret(branch, target, env)
    elif (isinstance(node, AndPat)):
        envs = [env]
        for branch in node.branches:
            envs = [e2 for e1 in envs for e2 in interpret(branch, target, e1)]
        yield from envs
    elif (isinstance(node, SuffixPat)):
        for s in suffixes(target):
            yield from interpret(node.inner, s, env)
    elif (isinstance(node, ElemPat)):
        for e in elements(target):
            yield from interpret(node.inner, e, env)
    else:
        raise TypeError(node)
