import pytest
from hypothesis import given

from sxq import core
from sxq.core import Pattern, any_, eq, ensure, otherwise, variable
from sxq.pairs import (as_pair, car_proj, is_atom, is_boolean, is_empty,
                       is_number, is_pair, is_string, is_symbol, nth, nthcdr,
                       pair_car, pair_cont, pair_cont_simple, pair_pattern,
                       pair_then, pair_then_simple, singleton, singleton_cont,
                       singleton_then, triple)
from sxq.reader import read
from sxq.values import EMPTY, Pair, Symbol

from oracles import all_lists, all_values, drain, list_length, values

a, b, c = Symbol("a"), Symbol("b"), Symbol("c")


class Recorder:
    """Records every continuation call as (case name, arguments)"""
    def __init__(self):
        self.calls = []

    def __getattr__(self, case):
        return lambda *args: self.calls.append((case, args))


def test_type_tests():
    assert is_pair().match(read("(a)"))
    assert not is_pair().match(a)
    assert not is_pair().match(EMPTY)
    assert is_empty().match(read("()"))
    assert not is_empty().match(read("(a)"))
    assert is_symbol().match(a)
    assert is_number().match(read("1.5"))
    assert is_string().match(read('"s"'))
    assert is_boolean().match(read("#f"))
    assert is_atom().match(EMPTY)
    assert not is_atom().match(read("(a)"))


def test_as_pair_with_projection():
    var = variable()
    assert as_pair().then(car_proj()).apply(var).match(read("(a b)"))
    assert var.get_value() == a
    assert pair_car().apply(variable()).match(read("(a b)"))


def test_pair_pattern():
    assert pair_pattern(eq(a), eq(b)).match(read("(a . b)"))
    assert not pair_pattern(any_(), any_()).match(EMPTY)
    assert not pair_pattern(eq(a), eq(b)).match(read("(a b)"))


def test_pair_pattern_order_follows_conjunction():
    seen = []
    car = core.disj(eq(a).and_then(lambda: seen.append("car a")),
                    any_().and_then(lambda: seen.append("car _")))
    cdr = core.disj(any_().and_then(lambda: seen.append("cdr 1")),
                    any_().and_then(lambda: seen.append("cdr 2")))
    assert drain(pair_pattern(car, cdr), read("(a . b)")) == 4
    assert seen == ["car a", "cdr 1", "cdr 2", "car _", "cdr 1", "cdr 2"]


def test_triple_binds_elements():
    x, y, z = variable("x"), variable("y"), variable("z")
    assert triple(x, y, z).match(read("(a b c)"))
    assert (x.get_value(), y.get_value(), z.get_value()) == (a, b, c)
    assert pair_pattern(x, pair_pattern(y, pair_pattern(z, is_empty()))).match(read("(a b c)"))


def test_triple_rejects_other_lengths():
    for text in ["(a b)", "(a b c d)", "(a b . c)", "()", "a"]:
        assert not triple(any_(), any_(), any_()).match(read(text))


def test_vocabulary_shapes():
    for value in all_values(3):
        assert triple(any_(), any_(), any_()).match(value) == (list_length(value) == 3)
        assert singleton(any_()).match(value) == (list_length(value) == 1)


def test_singleton_then():
    calls = []
    assert singleton_then(read("(v)"), lambda: calls.append(1))
    assert calls == [1]
    assert not singleton_then(read("(v w)"), lambda: calls.append(2))
    assert calls == [1]

    assert singleton_cont(lambda: calls.append(3)).match(read("(v)"))
    assert not singleton_cont(lambda: calls.append(4)).match(EMPTY)
    assert calls == [1, 3]


def test_navigation_examples():
    assert nth().eager_bindings(read("(1 2 3)")) == [read("1"), read("2"), read("3")]
    assert nthcdr().eager_bindings(EMPTY) == [EMPTY]
    assert nth().eager_bindings(read("(a . b)")) == [a]
    assert nthcdr().eager_bindings(read("(a . b)")) == [read("(a . b)"), b]


@pytest.mark.parametrize("n", range(9))
def test_nth_follows_list_order(n):
    items = [Symbol("s{}".format(i)) for i in range(n)]
    assert nth().eager_bindings(read("({})".format(" ".join(s.name for s in items)))) == items


def test_pair_then():
    rec = Recorder()
    assert pair_then(read("(a . b)"), rec.cell)
    assert rec.calls == [("cell", (a, b))]
    assert not pair_then(EMPTY, rec.cell)
    assert not pair_then(a, rec.cell)
    assert len(rec.calls) == 1


def test_pair_then_simple():
    calls = []
    assert pair_then_simple(read("(a)"), lambda: calls.append(1))
    assert not pair_then_simple(EMPTY, lambda: calls.append(2))
    assert calls == [1]
    assert pair_cont_simple(lambda: calls.append(3)).match(read("(a)"))
    assert calls == [1, 3]


def test_pair_cont():
    rec = Recorder()
    assert pair_cont(rec.cell).match(read("(a . b)"))
    assert rec.calls == [("cell", (a, b))]

    rec = Recorder()
    assert not pair_cont(rec.cell).or_else(rec.otherwise).match(EMPTY)
    assert rec.calls == [("otherwise", ())]


def test_pair_cont_agrees_with_pair_then():
    for value in all_values(2):
        left, right = Recorder(), Recorder()
        r1 = pair_then(value, left.cell)
        r2 = pair_cont(right.cell).match(value)
        assert (r1, left.calls) == (r2, right.calls)


@given(values(3), values(3))
def test_deconstruction_inverts_construction(car, cdr):
    rec = Recorder()
    assert pair_then(Pair(car, cdr), rec.cell)
    assert rec.calls == [("cell", (car, cdr))]


# the four equivalent ways of telling lists of length 0, 1, 2 and 3+ apart

def operators_statements(list1, rec):
    def one(x, list2):
        def two(y, list3):
            def three(z, list4):
                rec.case3(x, y, z)
            if (not pair_then(list3, three)):
                rec.case2(x, y)
        if (not pair_then(list2, two)):
            rec.case1(x)
    if (not pair_then(list1, one)):
        rec.case0()


def wrappers_statements(list1, rec):
    def one(x, list2):
        def two(y, list3):
            def three(z, list4):
                rec.case3(x, y, z)
            if (not pair_cont(three).match(list3)):
                rec.case2(x, y)
        if (not pair_cont(two).match(list2)):
            rec.case1(x)
    if (not pair_cont(one).match(list1)):
        rec.case0()


def operators_expression(list1, rec):
    return (pair_then(list1, lambda x, list2: ensure(
                pair_then(list2, lambda y, list3: ensure(
                    pair_then(list3, lambda z, list4: rec.case3(x, y, z))
                    or otherwise(lambda: rec.case2(x, y))))
                or otherwise(lambda: rec.case1(x))))
            or otherwise(lambda: rec.case0()))


def wrappers_expression(list1, rec):
    return (pair_cont(lambda x, list2:
                pair_cont(lambda y, list3:
                    pair_cont(lambda z, list4: rec.case3(x, y, z))
                    .or_else(lambda: rec.case2(x, y)).match(list3))
                .or_else(lambda: rec.case1(x)).match(list2))
            .or_else(lambda: rec.case0()).match(list1))


STYLES = [operators_statements, wrappers_statements, operators_expression,
          wrappers_expression]


def expected_case(items):
    if (len(items) == 0):
        return ("case0", ())
    if (len(items) == 1):
        return ("case1", (items[0],))
    if (len(items) == 2):
        return ("case2", (items[0], items[1]))
    return ("case3", tuple(items[:3]))


@pytest.fixture
def match_again_calls(monkeypatch):
    calls = []
    original = Pattern.match_again

    def counting(self):
        calls.append(self)
        return original(self)
    monkeypatch.setattr(Pattern, "match_again", counting)
    return calls


@pytest.mark.parametrize("style", STYLES, ids=lambda s: s.__name__)
def test_clause_styles_dispatch_one_case(style, match_again_calls):
    for value in all_lists(5):
        rec = Recorder()
        style(value, rec)
        items = []
        v = value
        while (isinstance(v, Pair)):
            items.append(v.car)
            v = v.cdr
        assert rec.calls == [expected_case(items)]
    assert match_again_calls == []


def test_clause_styles_agree():
    for value in all_lists(5):
        transcripts = []
        for style in STYLES:
            rec = Recorder()
            style(value, rec)
            transcripts.append(rec.calls)
        assert all(t == transcripts[0] for t in transcripts)
