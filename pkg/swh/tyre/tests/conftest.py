import pytest


def pytest_configure(config):
    config.addinivalue_line("markers", "tyre_bench: parsing-time scaling test")


def pytest_addoption(parser):
    parser.addoption(
        "--tyre-bench-n0",
        type=int,
        help="Base input size of the star2 scaling test",
        default=2000,
    )
    parser.addoption(
        "--tyre-bench-alt-n0",
        type=int,
        help="Base regex size of the alternation scaling tests",
        default=100,
    )
    parser.addoption(
        "--tyre-bench-samples",
        type=int,
        help="Number of samples per size in scaling tests",
        default=5,
    )


@pytest.fixture
def bench_options(request):
    return {
        "n0": request.config.getoption("--tyre-bench-n0"),
        "alt_n0": request.config.getoption("--tyre-bench-alt-n0"),
        "samples": request.config.getoption("--tyre-bench-samples"),
    }
