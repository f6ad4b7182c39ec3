import doctest

from free_arrangements import Verdict


def test_exit_codes() -> None:
    assert [v.exit_code for v in Verdict] == [0, 1, 2]
    assert Verdict.of(True) is Verdict.POSITIVE
    assert Verdict("negative") is Verdict.NEGATIVE


def test_docstring() -> None:
    import free_arrangements.verdict

    results: doctest.TestResults = doctest.testmod(free_arrangements.verdict, verbose=True)
    assert results.failed == 0
