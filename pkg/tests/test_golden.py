import os

import pytest

import run_tests

HERE = os.path.dirname(os.path.abspath(__file__))


@pytest.mark.parametrize("tdir", list(run_tests.tests))
def test_cli_fixture(tdir):
    status, expected_status, output, solution = run_tests.run_one(os.path.join(HERE, tdir))
    assert status == expected_status
    assert output == solution
