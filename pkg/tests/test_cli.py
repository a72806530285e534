import json

import pytest

from lineocr.cli import EXIT_DATA, EXIT_NUMERIC, EXIT_OK, EXIT_USAGE, build_parser, main
from lineocr.model_io import load_model, save_model


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_usage_errors(capsys):
    code, _, err = run(capsys, "train", "--bogus")
    assert code == EXIT_USAGE and "usage:" in err
    code, _, err = run(capsys)
    assert code == EXIT_USAGE
    code, _, _ = run(capsys, "train", "--data", "x", "--output", "y", "--spec", "C,Foo")
    assert code in (EXIT_USAGE, EXIT_DATA)


def test_train_defaults():
    args = build_parser().parse_args(["train", "--data", "d", "--output", "o"])
    assert args.batch == 5 and args.lr == 0.001 and args.dropout == 0.5
    assert args.checkpoint_interval == 100 and args.patience == 10 and args.val_fraction == 0.2


def test_datagen_train_predict_eval_bench(tmp_path, capsys):
    text = tmp_path / "src.txt"
    text.write_text("ab\nba ab\nabc\ncab\nbca\na bc\n", encoding="utf-8")
    data = tmp_path / "data"
    assert run(capsys, "datagen", "--text", text, "--out", data, "--count", 6, "--noise", 0.2)[0] == EXIT_OK
    assert len(list(data.glob("*.pgm"))) == 6

    model = tmp_path / "m.model"
    code, out, _ = run(
        capsys, "train", "--data", data, "--output", model, "--spec", "C,Mp(2x2),LSTM(8)", "--filters", "4",
        "--checkpoint-interval", 5, "--max-iterations", 10,
    )
    assert code == EXIT_OK and model.exists() and "best CER" in out
    assert load_model(model).hyper["batch_size"] == 5

    pred = tmp_path / "pred"
    code, out, _ = run(capsys, "predict", "--model", model, "--model", model, "--data", data, "--output", pred,
                       "--extended", "--jobs", 2)
    assert code == EXIT_OK and "voting 2 models" in out
    assert len(list(pred.glob("*.pred.txt"))) == 6
    rec = json.loads((pred / "line0000.pred.ext").read_text(encoding="utf-8"))
    assert set(rec) == {"text", "chars"}
    assert rec["text"] == (pred / "line0000.pred.txt").read_text(encoding="utf-8")

    code, out, _ = run(capsys, "eval", "--gt", data, "--pred", pred, "--confusions", 3, "--worst", 2,
                       "--json", tmp_path / "r.json")
    assert code == EXIT_OK and "CER" in out
    assert "corpus_cer" in json.loads((tmp_path / "r.json").read_text())

    code, out, _ = run(capsys, "eval", "--gt", data, "--pred", data)
    assert code == EXIT_OK and "CER: 0.000%" in out

    code, out, _ = run(capsys, "bench", "--model", model, "--data", data, "--steps", 2)
    assert code == EXIT_OK and "ms/line" in out and "train step" in out


def test_folds_and_finetune(tmp_path, capsys, tiny_dir, tiny_model):
    out_dir = tmp_path / "folds"
    code, _, _ = run(capsys, "folds", "--data", tiny_dir, "--output-dir", out_dir, "--k", 2,
                     "--spec", "C(4),Mp(2x2),LSTM(8)", "--checkpoint-interval", 2, "--max-iterations", 2)
    assert code == EXIT_OK and sorted(p.name for p in out_dir.iterdir()) == ["fold0.model", "fold1.model"]
    base = tmp_path / "base.model"
    save_model(tiny_model, base)
    code, _, _ = run(capsys, "finetune", "--base", base, "--data", tiny_dir, "--output", tmp_path / "ft.model",
                     "--checkpoint-interval", 2, "--max-iterations", 2, "--whitelist", "xyz", "--keep-all")
    assert code == EXIT_OK and (tmp_path / "ft.model").exists()


def test_data_errors(tmp_path, capsys, tiny_dir):
    code, _, err = run(capsys, "train", "--data", tmp_path / "nowhere", "--output", tmp_path / "m")
    assert code == EXIT_DATA
    (tmp_path / "junk.model").write_bytes(b"junk")
    code, _, err = run(capsys, "predict", "--model", tmp_path / "junk.model", "--data", tiny_dir, "--output", tmp_path)
    assert code == EXIT_DATA and "not a model file" in err
    code, _, _ = run(capsys, "datagen", "--text", tmp_path / "missing.txt", "--out", tmp_path / "o")
    assert code == EXIT_DATA


def test_infeasible_training_exit_code(tmp_path, capsys, tiny_dir):
    # 8x horizontal downsampling leaves too few timesteps for any line
    code, _, err = run(capsys, "train", "--data", tiny_dir, "--output", tmp_path / "m",
                       "--spec", "C(2)," + "Mp(2x1)," * 6 + "LSTM(2)", "--max-iterations", 1)
    assert code == EXIT_NUMERIC and "numerical error" in err
