import numpy as np
import pytest

from lineocr.datagen import NoiseParams, gen_dataset
from lineocr.train import TrainConfig, load_dataset, train_loop

TINY_SPEC = "C(4),Mp(2x2),LSTM(8)"
TINY_TEXTS = ["ab", "ba ab", "abc", "cab", "bca", "a bc"]


@pytest.fixture(scope="session")
def tiny_dir(tmp_path_factory):
    d = tmp_path_factory.mktemp("tiny")
    gen_dataset(TINY_TEXTS, len(TINY_TEXTS), d, NoiseParams.level(0.2), seed=0)
    return d


@pytest.fixture(scope="session")
def tiny_ds(tiny_dir):
    return load_dataset(tiny_dir)


@pytest.fixture(scope="session")
def tiny_model(tiny_ds):
    """A briefly trained tiny model; its accuracy is irrelevant."""
    cfg = TrainConfig(spec=TINY_SPEC, checkpoint_interval=10, max_iterations=20, dropout=0.0)
    model, _ = train_loop(tiny_ds, tiny_ds, cfg)
    return model


@pytest.fixture
def rng():
    return np.random.default_rng(0)


def pytest_terminal_summary(terminalreporter):
    from _report import LINES

    if LINES:
        terminalreporter.section("acceptance criteria")
        for line in LINES:
            terminalreporter.write_line(line)
