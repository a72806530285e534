"""Command line entry point: ``lineocr <command> [flags]``.

Exit codes: 0 success, 1 usage error, 2 data error, 3 numerical or
infeasibility error.

Extended prediction records (``<name>.pred.ext``) hold one JSON object per
line: ``{"text": str, "chars": [[char, confidence, start_px, end_px], ...]}``
with pixel positions in the coordinates of the original image.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict
from pathlib import Path

import numpy as np

from . import __version__
from .bench import bench
from .codec import CodecError
from .ctc import CTCInfeasibleError
from .datagen import NoiseParams, gen_dataset, get_font
from .datagen.render import GlyphError
from .evaluate import evaluate, format_report
from .model_io import ModelFileError, load_model, save_model
from .netspec import DEFAULT_SPEC
from .nn.layers import ShapeError
from .predict import Ensemble, EnsembleError, vote_lines
from .preprocess import ImageError, TextNormRules, preprocess_image, preprocess_text, read_pgm
from .train import (
    DataError,
    TrainConfig,
    TrainingError,
    finetune,
    load_dataset,
    split_train_val,
    train_folds,
    train_loop,
)

log = logging.getLogger("lineocr")

EXIT_OK, EXIT_USAGE, EXIT_DATA, EXIT_NUMERIC = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_help(sys.stderr)
        raise UsageError(message)


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}") from None


def _add_train_flags(p):
    p.add_argument("--data", required=True, help="directory of <name>.pgm + <name>.gt.txt pairs")
    p.add_argument("--val", help="explicit validation directory (default: split off --val-fraction)")
    p.add_argument("--spec", default=DEFAULT_SPEC, help="network spec, e.g. %(default)s")
    p.add_argument("--filters", type=_int_list, help="filter counts for bare C tokens, e.g. 64,128")
    p.add_argument("--batch", type=int, default=5)
    p.add_argument("--lr", type=float, default=0.001)
    p.add_argument("--checkpoint-interval", type=int, default=100)
    p.add_argument("--patience", type=int, default=10)
    p.add_argument("--val-fraction", type=float, default=0.2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--clip", type=float, default=5.0)
    p.add_argument("--dropout", type=float, default=0.5)
    p.add_argument("--max-iterations", type=int)
    p.add_argument("--target-cer", type=float, help="stop as soon as validation CER reaches this")
    p.add_argument("--text-rules", help="pattern<TAB>replacement file applied to GT text")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lineocr", description="Line-based OCR with CNN-BiLSTM networks trained by CTC.")
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("train", help="train one model")
    _add_train_flags(p)
    p.add_argument("--output", required=True, help="model file to write")

    p = sub.add_parser("finetune", help="continue training a base model on new data")
    _add_train_flags(p)
    p.add_argument("--output", required=True)
    p.add_argument("--base", required=True, help="model to start from")
    p.add_argument("--whitelist", default="", help="characters kept in the codec even if unseen")
    p.add_argument("--keep-all", action="store_true", help="never remove characters from the codec")

    p = sub.add_parser("folds", help="train k cross-fold voters")
    _add_train_flags(p)
    p.add_argument("--k", type=int, default=5)
    p.add_argument(
        "--independent-seeds", action="store_true", help="seed fold i with SEED+i instead of sharing SEED"
    )
    p.add_argument("--output-dir", required=True)

    p = sub.add_parser(
        "predict",
        help="recognize lines; two or more --model flags vote",
        description="Writes <name>.pred.txt and, with --extended, <name>.pred.ext: one JSON "
        "record {text, chars: [[char, confidence, start_px, end_px], ...]}.",
    )
    p.add_argument("--model", action="append", required=True)
    p.add_argument("--data", required=True, help="directory of <name>.pgm line images")
    p.add_argument("--output", required=True, help="directory for predictions")
    p.add_argument("--extended", action="store_true")
    p.add_argument("--probs", action="store_true", help="also write <name>.probs.npy")
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("eval", help="CER and confusion statistics")
    p.add_argument("--gt", required=True, help="directory of <name>.gt.txt")
    p.add_argument("--pred", required=True, help="directory of <name>.pred.txt")
    p.add_argument("--confusions", type=int, default=10)
    p.add_argument("--worst", type=int, default=0)
    p.add_argument("--json", help="also write the report as JSON")
    p.add_argument("--text-rules")
    p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("datagen", help="render synthetic lines")
    p.add_argument("--text", required=True, help="UTF-8 text file, one line of text per line")
    p.add_argument("--out", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--text-seed", type=int, help="draw lines at random with this seed")
    p.add_argument("--count", type=int, default=50)
    p.add_argument("--noise", type=float, default=0.0, help="noise level in [0, 1]")
    p.add_argument("--font", default="A", choices=["A", "B", "C", "a", "b", "c"])

    p = sub.add_parser("bench", help="prediction and training-step throughput")
    p.add_argument("--model", required=True)
    p.add_argument("--data", required=True)
    p.add_argument("--steps", type=int, default=5)
    return parser


def _config(args) -> TrainConfig:
    return TrainConfig(
        spec=args.spec,
        filters=args.filters,
        batch_size=args.batch,
        lr=args.lr,
        checkpoint_interval=args.checkpoint_interval,
        patience=args.patience,
        val_fraction=args.val_fraction,
        seed=args.seed,
        clip=args.clip,
        dropout=args.dropout,
        max_iterations=args.max_iterations,
        target_cer=args.target_cer,
    )


def _rules(args) -> TextNormRules:
    return TextNormRules.from_file(args.text_rules) if args.text_rules else TextNormRules()


def _train_val(args, cfg):
    ds = load_dataset(args.data, _rules(args))
    if args.val:
        return ds, load_dataset(args.val, _rules(args))
    return split_train_val(ds, cfg.val_fraction, cfg.seed)


def _print_report(report, path):
    print(
        f"{path}: {report.iterations} iterations, best CER {report.best_cer:.4f} "
        f"at check {report.best_check + 1} ({report.stop_reason}), {report.skipped} lines skipped"
    )


def cmd_train(args):
    cfg = _config(args)
    train, val = _train_val(args, cfg)
    model, report = train_loop(train, val, cfg)
    save_model(model, args.output)
    _print_report(report, args.output)


def cmd_finetune(args):
    cfg = _config(args)
    base = load_model(args.base)
    if args.val:
        train, val = _train_val(args, cfg)
    else:
        train, val = load_dataset(args.data, _rules(args)), None
    model, report = finetune(base, train, cfg, set(args.whitelist), args.keep_all, val=val)
    save_model(model, args.output)
    _print_report(report, args.output)


def cmd_folds(args):
    cfg = _config(args)
    ds = load_dataset(args.data, _rules(args))
    out = Path(args.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    for i, (model, report) in enumerate(train_folds(ds, args.k, cfg, args.independent_seeds)):
        path = out / f"fold{i}.model"
        save_model(model, path)
        _print_report(report, path)


def cmd_predict(args):
    models = [load_model(p) for p in args.model]
    ensemble = Ensemble(models)
    data = Path(args.data)
    paths = sorted(data.glob("*.pgm"))
    if not paths:
        raise DataError(f"no .pgm images in {data}")
    names = [p.name[: -len(".pgm")] for p in paths]
    lines = [preprocess_image(read_pgm(p)) for p in paths]
    chunks = [list(range(i, len(lines), args.jobs)) for i in range(max(1, args.jobs))]

    def run(idx):
        return idx, vote_lines(ensemble, [lines[i] for i in idx], extended=args.extended or args.probs)

    with ThreadPoolExecutor(max_workers=max(1, args.jobs)) as pool:
        results = list(pool.map(run, chunks))
    out = Path(args.output)
    out.mkdir(parents=True, exist_ok=True)
    for idx, preds in results:
        for i, pred in zip(idx, preds):
            (out / f"{names[i]}.pred.txt").write_text(pred.text, encoding="utf-8")
            if args.extended:
                (out / f"{names[i]}.pred.ext").write_text(
                    json.dumps(pred.to_record(), ensure_ascii=False) + "\n", encoding="utf-8"
                )
            if args.probs:
                np.save(out / f"{names[i]}.probs.npy", pred.probs)
    mode = f"voting {len(models)} models" if len(models) > 1 else "single model"
    print(f"predicted {len(lines)} lines ({mode}) into {out}")


def cmd_eval(args):
    gt_dir, pred_dir = Path(args.gt), Path(args.pred)
    rules = _rules(args)
    gts = {p.name[: -len(".gt.txt")]: p for p in gt_dir.glob("*.gt.txt")}
    if not gts:
        raise DataError(f"no .gt.txt files in {gt_dir}")
    names = sorted(gts)

    def load(name):
        pred_path = pred_dir / f"{name}.pred.txt"
        if not pred_path.exists():
            # allow evaluating a directory of GT against itself
            pred_path = pred_dir / f"{name}.gt.txt"
        if not pred_path.exists():
            raise DataError(f"missing prediction for {name}")
        return (
            preprocess_text(gts[name].read_text(encoding="utf-8"), rules),
            preprocess_text(pred_path.read_text(encoding="utf-8"), rules),
        )

    with ThreadPoolExecutor(max_workers=max(1, args.jobs)) as pool:
        pairs = list(pool.map(load, names))
    report = evaluate(pairs, args.confusions, args.worst, names)
    print(format_report(report))
    if args.json:
        Path(args.json).write_text(json.dumps(report.as_dict(), ensure_ascii=False, indent=1), encoding="utf-8")


def cmd_datagen(args):
    noise = NoiseParams.level(args.noise)
    written = gen_dataset(
        args.text, args.count, args.out, noise, args.seed, get_font(args.font), args.text_seed
    )
    print(f"wrote {len(written)} lines to {args.out}")


def cmd_bench(args):
    model = load_model(args.model)
    data = Path(args.data)
    paths = sorted(data.glob("*.pgm"))
    if not paths:
        raise DataError(f"no .pgm images in {data}")
    lines = [preprocess_image(read_pgm(p)) for p in paths]
    gt = [p.with_name(p.name[: -len(".pgm")] + ".gt.txt") for p in paths]
    texts = [preprocess_text(g.read_text(encoding="utf-8")) for g in gt] if all(g.exists() for g in gt) else None
    res = bench(model, lines, texts, train_steps=args.steps)
    print(f"lines: {res.lines}")
    print(f"predict: {res.predict_ms_per_line:.2f} ms/line ({res.lines_per_second:.1f} lines/s)")
    if res.train_ms_per_line is not None:
        print(f"train step: {res.train_ms_per_line:.2f} ms/line")
    return asdict(res)


COMMANDS = {
    "train": cmd_train,
    "finetune": cmd_finetune,
    "folds": cmd_folds,
    "predict": cmd_predict,
    "eval": cmd_eval,
    "datagen": cmd_datagen,
    "bench": cmd_bench,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"lineocr: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    logging.basicConfig(
        level=logging.WARNING - 10 * min(args.verbose, 2), format="%(levelname)s %(name)s: %(message)s"
    )
    try:
        COMMANDS[args.command](args)
    except (DataError, CodecError, ImageError, ModelFileError, GlyphError, OSError) as exc:
        print(f"lineocr: data error: {exc}", file=sys.stderr)
        return EXIT_DATA
    except (TrainingError, CTCInfeasibleError, ShapeError, EnsembleError, FloatingPointError) as exc:
        print(f"lineocr: numerical error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except ValueError as exc:  # bad flag values, spec syntax
        print(f"lineocr: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_OK


def main_exit() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
