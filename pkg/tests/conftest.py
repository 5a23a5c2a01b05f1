import pytest


# -- Control skipping of tests according to command line option
def pytest_addoption(parser):
    parser.addoption(
        "--run",
        default="fast",
        help="Select tests to run, e.g. 'fast' or 'fast,slow'.",
    )


def pytest_collection_modifyitems(config, items):

    selected_marks = set(config.getoption("--run").split(","))
    get_markers = lambda item: {m.name for m in item.iter_markers()}

    skip_mark = pytest.mark.skip(reason="need --run with compatible marks to run")
    for item in items:
        item_marks = get_markers(item) & {"fast", "slow"}
        if not (item_marks.issubset(selected_marks)):
            item.add_marker(skip_mark)
