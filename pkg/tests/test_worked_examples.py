import pytest

from skewrs import run_example


@pytest.mark.parametrize("which", [1, 2, 3])
def test_worked_example_transcript(which):
    transcript = run_example(which)
    failed = [c for c in transcript.checks if not c.ok]
    assert not failed, transcript.render()


def test_unknown_example_rejected():
    with pytest.raises(ValueError):
        run_example(4)
