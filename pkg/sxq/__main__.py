"""
Run queries against s-expression data from the command line

Usage:
    sxq match [--trace] [--verbose] <query> [<file>]
    sxq all [--trace] [--verbose] [--max=<n>] [--format=<fmt>] <query> [<file>]
    sxq (-h | --help)
    sxq --version

    <query> is written in the query language, e.g. "(?x ?y ?z)" or "(%elem ?e)".
    <file> holds exactly one s-expression; standard input is read when omitted.

    Exit status is 0 when the query matched, 1 when it did not, and 2 on
    malformed input, malformed queries and usage errors.

Options:
    --max=<n>       Report at most n solutions (all only)
    --format=<fmt>  Output format of all, text or json [default: text]
    --trace         Log every attempt of every query node to standard error
    --verbose       Log each solution to standard error
    -h --help       Print this message
    --version       Print the version
"""
from __future__ import print_function
import json
import logging
import sys

from docopt import DocoptExit, docopt

from . import __version__
from .query import collect_bindings, compile_query, parse_query
from .reader import ReadError, read, write

EXIT_MATCH = 0
EXIT_NO_MATCH = 1
EXIT_ERROR = 2

FORMATS = ("text", "json")


class UsageError(ValueError):
    pass


def format_record(bindings, fmt="text"):
    """
    Render one solution

    Args
    ----
    bindings : OrderedDict
        Variable name to Value, in binding order
    fmt : str
        "text" for space separated name=value pairs, "json" for a JSON object

    Returns
    -------
    line : str
    """
    printed = [(name, write(value)) for name, value in bindings.items()]
    if (fmt == "json"):
        return json.dumps(dict(printed), ensure_ascii=False)
    return " ".join("{}={}".format(name, value) for name, value in printed)


def read_input(filename):
    """Read the single s-expression held by filename, or by standard input"""
    source = "<stdin>" if filename is None else filename
    try:
        if (filename is None):
            text = sys.stdin.read()
        else:
            with open(filename, "r", encoding="utf-8") as f:
                text = f.read()
    except OSError as e:
        raise UsageError("cannot read {}: {}".format(filename, e.strerror))
    except UnicodeDecodeError as e:
        err = "{}: not valid UTF-8 (byte 0x{:02x} at offset {})"
        raise UsageError(err.format(source, e.object[e.start], e.start))
    try:
        return read(text)
    except ReadError as e:
        raise UsageError("{}: {}".format(source, e))


def parse_max(value):
    if (value is None):
        return None
    try:
        n = int(value)
    except ValueError:
        n = 0
    if (n < 1):
        raise UsageError("--max must be a positive integer, got '{}'".format(value))
    return n


def cmd_match(query, filename, trace=False, out=None):
    """
    Report the first solution of query on the input

    Returns
    -------
    status : int
        EXIT_MATCH or EXIT_NO_MATCH
    """
    out = out or sys.stdout
    compiled = compile_query(parse_query(query), trace=trace)
    target = read_input(filename)

    bindings = compiled.first(target)
    if (bindings is None):
        return EXIT_NO_MATCH
    print(format_record(bindings), file=out)
    return EXIT_MATCH


def cmd_all(query, filename, max_solutions=None, fmt="text", trace=False, out=None):
    """
    Report every solution (or the first max_solutions) of query on the input

    Returns
    -------
    status : int
        EXIT_MATCH if there was at least one solution, else EXIT_NO_MATCH
    """
    out = out or sys.stdout
    if (fmt not in FORMATS):
        raise UsageError("--format must be one of {}, got '{}'".format(", ".join(FORMATS), fmt))
    compiled = compile_query(parse_query(query), trace=trace)
    target = read_input(filename)

    solutions = collect_bindings(compiled, target, max_solutions)
    for bindings in solutions:
        print(format_record(bindings, fmt), file=out)
    return EXIT_MATCH if solutions else EXIT_NO_MATCH


def main(argv=None):
    """
    Command line entry point

    Args
    ----
    argv : list, optional
        Arguments without the program name, defaults to sys.argv[1:]

    Returns
    -------
    status : int
    """
    try:
        args = docopt(__doc__, argv=argv, version=__version__)
    except DocoptExit as e:
        print(str(e), file=sys.stderr)
        return EXIT_ERROR

    if (args["--verbose"] or args["--trace"]):
        logging.basicConfig(level=logging.DEBUG, stream=sys.stderr,
                            format="%(name)s: %(message)s")

    try:
        if (args["match"]):
            return cmd_match(args["<query>"], args["<file>"], trace=args["--trace"])
        return cmd_all(args["<query>"], args["<file>"],
                       max_solutions=parse_max(args["--max"]),
                       fmt=args["--format"], trace=args["--trace"])
    except (ReadError, UsageError) as e:
        print("sxq: {}".format(e), file=sys.stderr)
        return EXIT_ERROR
    except RecursionError:
        print("sxq: input too deeply nested", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
