"""
Read s-expression text into Values and write Values back in canonical form

Grammar:

    + symbols: runs of characters other than whitespace, parentheses, '"' and ';'
      that do not read as numbers or booleans
    + integers: optional sign and digits, e.g. -12
    + decimals: optional sign, digits '.' digits, e.g. 3.25
    + strings: double quoted, with \\" and \\\\ as the only escapes
    + booleans: #t and #f
    + lists: ( elements ) with an optional dotted tail ( a b . c ); () is EMPTY
    + ';' starts a comment running to the end of the line

Exactly one expression is read from a text; anything but whitespace and comments
after it is an error.
"""
import re
from collections import namedtuple
from decimal import Decimal

from .values import (EMPTY, FALSE, TRUE, Boolean, EmptyList, Number, Pair,
                     String, Symbol, make_list, to_list)

INTEGER_REGEX = re.compile(r"^[+-]?[0-9]+$")
DECIMAL_REGEX = re.compile(r"^[+-]?[0-9]+\.[0-9]+$")

DELIMITERS = '()";'


class SourcePosition(namedtuple("SourcePosition", ["line", "column"])):
    """1-based line and column of a character in the source text"""

    def __str__(self):
        return "line {}, column {}".format(self.line, self.column)


class ReadError(ValueError):
    """
    Malformed s-expression text

    Attributes
    ----------
    message : str
        What went wrong
    position : SourcePosition
        Where it went wrong
    """
    def __init__(self, message, position):
        super().__init__("{}: {}".format(position, message))
        self.message = message
        self.position = position


class Syntax:
    """
    A node of the position-annotated syntax tree

    Attributes
    ----------
    position : SourcePosition
        Start of the node in the source text
    atom : Value or None
        The value of an atom node, None for lists
    items : list or None
        Element nodes of a list node, None for atoms
    tail : Syntax or None
        Dotted tail of a list node, None for proper list syntax
    """
    def __init__(self, position, atom=None, items=None, tail=None):
        self.position = position
        self.atom = atom
        self.items = items
        self.tail = tail

    @property
    def is_list(self):
        return self.items is not None

    def __repr__(self):
        if (not self.is_list):
            return "Syntax({!r} at {})".format(self.atom, self.position)
        return "Syntax(list of {} at {})".format(len(self.items), self.position)

    def to_value(self):
        """Convert to a Value, dropping positions"""
        results = []
        stack = [(self, False)]
        while (stack):
            node, children_done = stack.pop()
            if (not node.is_list):
                results.append(node.atom)
            elif (not children_done):
                stack.append((node, True))
                children = node.items if node.tail is None else node.items + [node.tail]
                stack.extend((child, False) for child in reversed(children))
            else:
                n = len(node.items) + (node.tail is not None)
                values = results[-n:]
                del results[-n:]
                tail = values.pop() if node.tail is not None else EMPTY
                results.append(make_list(*values, tail=tail))
        return results[0]


# token kinds
OPEN, CLOSE, DOT, ATOM, END = "(", ")", ".", "atom", "end of input"

Token = namedtuple("Token", ["kind", "value", "position"])


class _OpenList:
    """A list whose closing parenthesis has not been read yet"""
    def __init__(self, start):
        self.start = start
        self.items = []
        self.tail = None
        self.expect_tail = False

    def add(self, node):
        if (self.expect_tail):
            self.tail = node
        else:
            self.items.append(node)

    def finish(self):
        if (not self.items):
            return Syntax(self.start, atom=EMPTY)
        return Syntax(self.start, items=self.items, tail=self.tail)


class _Reader:
    """
    Single-use tokenizer and stack-driven parser over one text
    """
    def __init__(self, text):
        self.text = text
        self.index = 0
        self.line = 1
        self.column = 1
        self.peeked = None

    def position(self):
        return SourcePosition(self.line, self.column)

    def advance(self):
        c = self.text[self.index]
        self.index += 1
        if (c == "\n"):
            self.line += 1
            self.column = 1
        else:
            self.column += 1
        return c

    def skip_blanks(self):
        while (self.index < len(self.text)):
            c = self.text[self.index]
            if (c == ";"):  # comment to end of line
                while (self.index < len(self.text) and self.text[self.index] != "\n"):
                    self.advance()
            elif (c.isspace()):
                self.advance()
            else:
                break

    def next_token(self):
        if (self.peeked is not None):
            token, self.peeked = self.peeked, None
            return token

        self.skip_blanks()
        start = self.position()
        if (self.index >= len(self.text)):
            return Token(END, None, start)

        c = self.text[self.index]
        if (c in "()"):
            self.advance()
            return Token(c, None, start)
        if (c == '"'):
            return Token(ATOM, self.read_string(start), start)

        chars = []
        while (self.index < len(self.text)):
            c = self.text[self.index]
            if (c.isspace() or c in DELIMITERS):
                break
            chars.append(self.advance())
        word = "".join(chars)
        if (word == "."):
            return Token(DOT, None, start)
        return Token(ATOM, self.convert_atom(word, start), start)

    def peek_token(self):
        if (self.peeked is None):
            self.peeked = self.next_token()
        return self.peeked

    def read_string(self, start):
        self.advance()  # opening quote
        chars = []
        while (self.index < len(self.text)):
            c = self.advance()
            if (c == '"'):
                return String("".join(chars))
            if (c == "\\"):
                escape_position = self.position()
                if (self.index >= len(self.text)):
                    break
                e = self.advance()
                if (e not in '"\\'):
                    raise ReadError("unknown string escape '\\{}'".format(e), escape_position)
                chars.append(e)
            else:
                chars.append(c)
        raise ReadError("unterminated string", start)

    def convert_atom(self, word, start):
        if (INTEGER_REGEX.match(word)):
            return Number(int(word))
        if (DECIMAL_REGEX.match(word)):
            return Number(Decimal(word))
        if (word == "#t"):
            return TRUE
        if (word == "#f"):
            return FALSE
        if (word.startswith("#")):
            raise ReadError("unknown '#' syntax '{}'".format(word), start)
        return Symbol(word)

    def read_expression(self):
        # open lists are kept on an explicit stack, innermost last
        stack = []
        while True:
            token = self.next_token()
            frame = stack[-1] if stack else None

            if (frame is not None and frame.tail is not None):
                if (token.kind == END):
                    raise ReadError("unclosed '('", frame.start)
                if (token.kind != CLOSE):
                    raise ReadError("more than one expression after '.'", token.position)
                node = stack.pop().finish()
            elif (token.kind == ATOM):
                node = Syntax(token.position, atom=token.value)
            elif (token.kind == OPEN):
                stack.append(_OpenList(token.position))
                continue
            elif (token.kind == CLOSE):
                if (frame is None):
                    raise ReadError("unexpected ')'", token.position)
                node = stack.pop().finish()
            elif (token.kind == DOT):
                if (frame is None):
                    raise ReadError("unexpected '.' outside a list", token.position)
                if (not frame.items):
                    raise ReadError("dotted tail without preceding elements", token.position)
                if (self.peek_token().kind in (CLOSE, END, DOT)):
                    raise ReadError("missing expression after '.'", token.position)
                frame.expect_tail = True
                continue
            elif (frame is None):
                raise ReadError("expected an expression, found end of input", token.position)
            else:
                raise ReadError("unclosed '('", frame.start)

            if (not stack):
                return node
            stack[-1].add(node)

    def read_single(self):
        node = self.read_expression()
        token = self.next_token()
        if (token.kind != END):
            raise ReadError("trailing garbage after expression", token.position)
        return node


def read_syntax(text):
    """
    Parse exactly one s-expression into a position-annotated Syntax tree

    Raises
    ------
    ReadError
        The text is not exactly one well-formed s-expression
    """
    return _Reader(text).read_single()


def read(text):
    """
    Parse exactly one s-expression into a Value

    Args
    ----
    text : str
        The source text, optionally surrounded by whitespace and comments

    Returns
    -------
    value : Value
        The expression read

    Raises
    ------
    ReadError
        The text is not exactly one well-formed s-expression
    """
    return read_syntax(text).to_value()


def _write_atom(value):
    if (isinstance(value, Symbol)):
        return value.name
    if (isinstance(value, Number)):
        if (value.is_integer):
            return str(value.value)
        text = format(value.value, "f")
        if ("." not in text):
            text += ".0"
        return text
    if (isinstance(value, String)):
        return '"{}"'.format(value.text.replace("\\", "\\\\").replace('"', '\\"'))
    if (isinstance(value, Boolean)):
        return "#t" if value.flag else "#f"
    if (isinstance(value, EmptyList)):
        return "()"
    raise TypeError("not an s-expression value: {!r}".format(value))


def write(value):
    """
    Canonical printed form of a Value

    Single spaces separate list elements, proper lists are printed without
    dots and a dotted tail is printed as " . tail".
    """
    out = []
    # pending Values, and str pieces of punctuation to emit as they are
    stack = [value]
    while (stack):
        item = stack.pop()
        if (isinstance(item, str)):
            out.append(item)
        elif (not isinstance(item, Pair)):
            out.append(_write_atom(item))
        else:
            elements, tail = to_list(item)
            pieces = ["("]
            for i, element in enumerate(elements):
                if (i > 0):
                    pieces.append(" ")
                pieces.append(element)
            if (tail is not EMPTY):
                pieces.append(" . ")
                pieces.append(_write_atom(tail))
            pieces.append(")")
            stack.extend(reversed(pieces))
    return "".join(out)
