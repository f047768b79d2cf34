"""
The s-expression data model: immutable LISP-style values

A Value is one of Symbol, Number, String, Boolean, Pair or the empty list
EMPTY. Equality is structural. A proper list is EMPTY or a Pair whose cdr is
a proper list; any other atom in cdr position makes a dotted (improper) list.
"""
from dataclasses import dataclass
from decimal import Decimal


@dataclass(frozen=True)
class Symbol:
    name: str

    def __repr__(self):
        return "Symbol({!r})".format(self.name)


@dataclass(frozen=True, eq=False)
class Number:
    """
    An exact integer or a decimal literal

    Integers and decimals never compare equal to each other, so 1 and 1.0 are
    different values.
    """
    value: object

    def __post_init__(self):
        if (isinstance(self.value, bool) or not isinstance(self.value, (int, Decimal))):
            raise TypeError("Number holds int or Decimal, got {!r}".format(self.value))

    @property
    def is_integer(self):
        return isinstance(self.value, int)

    def __eq__(self, other):
        if (not isinstance(other, Number)):
            return NotImplemented
        return (self.is_integer == other.is_integer) and (self.value == other.value)

    def __hash__(self):
        return hash((Number, self.is_integer, self.value))

    def __repr__(self):
        return "Number({!r})".format(self.value)


@dataclass(frozen=True)
class String:
    text: str

    def __repr__(self):
        return "String({!r})".format(self.text)


@dataclass(frozen=True)
class Boolean:
    flag: bool

    def __repr__(self):
        return "Boolean({!r})".format(self.flag)


class EmptyList:
    """
    The empty list, a unique atom distinct from every Pair
    """
    _instance = None

    def __new__(cls):
        if (cls._instance is None):
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "EMPTY"

    def __reduce__(self):
        return (EmptyList, ())


EMPTY = EmptyList()


@dataclass(frozen=True, eq=False)
class Pair:
    """
    A cons cell

    Equality and hashing walk the structure with an explicit stack, so long
    and deeply nested lists compare without recursion.
    """
    car: object
    cdr: object

    def __eq__(self, other):
        if (not isinstance(other, Pair)):
            return NotImplemented
        stack = [(self, other)]
        while (stack):
            left, right = stack.pop()
            if (left is right):
                continue
            if (isinstance(left, Pair) and isinstance(right, Pair)):
                stack.append((left.cdr, right.cdr))
                stack.append((left.car, right.car))
            elif (isinstance(left, Pair) or isinstance(right, Pair) or left != right):
                return False
        return True

    def __hash__(self):
        atoms = []
        stack = [self]
        while (stack):
            value = stack.pop()
            if (isinstance(value, Pair)):
                atoms.append(Pair)
                stack.append(value.cdr)
                stack.append(value.car)
            else:
                atoms.append(value)
        return hash(tuple(atoms))

    def __repr__(self):
        return "Pair({!r}, {!r})".format(self.car, self.cdr)


ATOM_TYPES = (Symbol, Number, String, Boolean, EmptyList)

TRUE = Boolean(True)
FALSE = Boolean(False)


def sym(name):
    return Symbol(name)


def num(value):
    """Number from an int, a Decimal or a decimal string such as "2.5" """
    if (isinstance(value, str)):
        value = Decimal(value)
    return Number(value)


def make_list(*items, tail=EMPTY):
    """
    Build right-nested pairs from items, terminated by tail

    Args
    ----
    items : Value
        List elements, left to right
    tail : Value, optional
        Final cdr, EMPTY for a proper list
    """
    result = tail
    for item in reversed(items):
        result = Pair(item, result)
    return result


def to_list(value):
    """
    Walk the cdr chain of value

    Returns
    -------
    elements : list
        The cars encountered, in order
    tail : Value
        The first non-pair cdr, EMPTY for a proper list
    """
    elements = []
    while (isinstance(value, Pair)):
        elements.append(value.car)
        value = value.cdr
    return elements, value


def is_proper_list(value):
    return to_list(value)[1] is EMPTY
