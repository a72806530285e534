"""Datasets, splits, cross-fold voters, the early-stopped training loop and finetuning."""

from __future__ import annotations

import logging
import math
import time
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Callable, Iterable, Sequence

import numpy as np

from .codec import Codec, CodecDelta, build_codec, resize_codec
from .ctc import ctc_loss_from_log_probs
from .evaluate import corpus_cer
from .model import Model, init_model, init_output_rows
from .netspec import min_width_check, parse_spec
from .nn.network import network_backward, network_forward_batch
from .nn.optim import AdamState, adam_step, clip_global_norm
from .predict import predict_texts
from .preprocess import DEFAULT_RULES, LineImage, TextNormRules, preprocess_image, preprocess_text, read_pgm

log = logging.getLogger(__name__)

IMAGE_SUFFIX = ".pgm"
GT_SUFFIX = ".gt.txt"


class DataError(ValueError):
    pass


class TrainingError(RuntimeError):
    pass


@dataclass
class LineSample:
    name: str
    image: LineImage
    text: str


@dataclass
class Dataset:
    samples: list[LineSample]
    sources: list[Path] = field(default_factory=list)

    def __len__(self):
        return len(self.samples)

    def __getitem__(self, i):
        return self.samples[i]

    def subset(self, indices: Iterable[int]) -> "Dataset":
        idx = list(indices)
        return Dataset([self.samples[i] for i in idx], [self.sources[i] for i in idx] if self.sources else [])

    @property
    def texts(self) -> list[str]:
        return [s.text for s in self.samples]

    @property
    def images(self) -> list[LineImage]:
        return [s.image for s in self.samples]


def _pairs_in(directory: Path) -> list[tuple[str, Path, Path]]:
    images = {p.name[: -len(IMAGE_SUFFIX)]: p for p in directory.glob("*" + IMAGE_SUFFIX)}
    gts = {p.name[: -len(GT_SUFFIX)]: p for p in directory.glob("*" + GT_SUFFIX)}
    for name in sorted(images.keys() - gts.keys()):
        raise DataError(f"missing GT for {name}")
    for name in sorted(gts.keys() - images.keys()):
        raise DataError(f"missing image for {name}")
    return [(n, images[n], gts[n]) for n in sorted(images)]


def load_dataset(source, rules: TextNormRules = DEFAULT_RULES) -> Dataset:
    """Load ``<name>.pgm`` / ``<name>.gt.txt`` pairs from a directory or a list of image paths."""
    if isinstance(source, (str, Path)):
        if not Path(source).is_dir():
            raise DataError(f"no such data directory: {source}")
        pairs = _pairs_in(Path(source))
    else:
        pairs = []
        for p in map(Path, source):
            name = p.name[: -len(IMAGE_SUFFIX)] if p.name.endswith(IMAGE_SUFFIX) else p.stem
            gt = p.with_name(name + GT_SUFFIX)
            if not gt.exists():
                raise DataError(f"missing GT for {name}")
            pairs.append((name, p, gt))
        pairs.sort(key=lambda x: x[0])
    samples = []
    for name, img_path, gt_path in pairs:
        try:
            raw = read_pgm(img_path)
            text = preprocess_text(gt_path.read_text(encoding="utf-8"), rules)
        except (OSError, UnicodeDecodeError, ValueError) as exc:
            raise DataError(f"cannot read {name}: {exc}") from exc
        if not text:
            raise DataError(f"empty GT for {name}")
        samples.append(LineSample(name, preprocess_image(raw), text))
    return Dataset(samples, [p for _, p, _ in pairs])


def split_train_val(ds: Dataset, fraction: float = 0.2, seed: int = 0) -> tuple[Dataset, Dataset]:
    if not 0.0 < fraction < 1.0:
        raise ValueError(f"validation fraction must be in (0, 1), got {fraction}")
    if len(ds) < 2:
        raise DataError("need at least two lines to split off a validation set")
    n_val = min(max(int(math.floor(fraction * len(ds) + 0.5)), 1), len(ds) - 1)
    perm = np.random.default_rng(seed).permutation(len(ds))
    return ds.subset(sorted(perm[n_val:])), ds.subset(sorted(perm[:n_val]))


def make_folds(ds: Dataset, k: int, seed: int = 0) -> list[tuple[Dataset, Dataset]]:
    """``k`` (train, val) pairs; the validation parts partition the dataset."""
    if k < 2:
        raise ValueError("need at least two folds")
    if k > len(ds):
        raise DataError(f"cannot make {k} folds from {len(ds)} lines")
    perm = np.random.default_rng(seed).permutation(len(ds))
    folds = np.array_split(perm, k)
    out = []
    for i in range(k):
        val = sorted(folds[i])
        train = sorted(np.concatenate([f for j, f in enumerate(folds) if j != i]))
        out.append((ds.subset(train), ds.subset(val)))
    return out


@dataclass
class TrainConfig:
    spec: str = "C,Mp(2x2),C,Mp(2x2),LSTM(200)"
    filters: list[int] | None = None
    batch_size: int = 5
    lr: float = 0.001
    checkpoint_interval: int = 100
    patience: int = 10
    val_fraction: float = 0.2
    seed: int = 0
    clip: float = 5.0
    dropout: float = 0.5
    max_iterations: int | None = None
    target_cer: float | None = None

    def __post_init__(self):
        if not 0.0 < self.val_fraction < 1.0:
            raise ValueError("val_fraction must be in (0, 1)")
        if self.batch_size < 1 or self.patience < 1 or self.checkpoint_interval < 1:
            raise ValueError("batch_size, patience and checkpoint_interval must be >= 1")

    @property
    def iteration_cap(self) -> int:
        return self.max_iterations if self.max_iterations is not None else 100 * self.checkpoint_interval


@dataclass
class TrainReport:
    iterations: int = 0
    history: list[float] = field(default_factory=list)
    check_iterations: list[int] = field(default_factory=list)
    best_check: int = -1
    best_cer: float = math.inf
    wall_time: float = 0.0
    skipped: int = 0
    reached_target: bool = False
    stop_reason: str = ""
    model_path: str | None = None

    @property
    def best_iteration(self) -> int:
        return self.check_iterations[self.best_check] if self.best_check >= 0 else 0

    def as_dict(self):
        return asdict(self)


def validation_cer(model: Model, val: Dataset) -> float:
    preds = predict_texts(model, val.images)
    return corpus_cer(list(zip(val.texts, preds)))


def train_loop(
    train: Dataset,
    val: Dataset,
    cfg: TrainConfig,
    init: Model | None = None,
    val_cer_fn: Callable[[Model, Dataset], float] | None = None,
) -> tuple[Model, TrainReport]:
    """Train with Adam + global-norm clipping; return the best validation snapshot.

    Every ``checkpoint_interval`` iterations the validation CER is measured;
    training stops after ``patience`` consecutive checks without a strictly
    lower CER, when ``target_cer`` is reached, or at the iteration cap.
    """
    start = time.perf_counter()
    val_cer_fn = val_cer_fn or validation_cer
    if init is not None:
        model = init.copy()
    else:
        spec = parse_spec(cfg.spec, cfg.filters)
        model = init_model(spec, build_codec(train.texts), seed=cfg.seed)
    model.hyper.update(
        batch_size=cfg.batch_size, lr=cfg.lr, clip=cfg.clip, dropout=cfg.dropout, seed=cfg.seed
    )
    model.zero_grad()

    report = TrainReport()
    items = []
    for s in train.samples:
        labels = model.codec.encode(s.text)
        check = min_width_check(model.spec, labels, s.image.width)
        if not check.feasible:
            log.warning(
                "skipping %s: %d timesteps < %d required", s.name, check.timesteps, check.required_timesteps
            )
            report.skipped += 1
            continue
        items.append((s.image.pixels, labels))
    if not items:
        raise TrainingError("no trainable lines: every sample is too narrow for its transcription")

    rng = np.random.default_rng(cfg.seed)
    drop_rng = np.random.default_rng([cfg.seed, 1])
    state = AdamState(lr=cfg.lr)
    best = None
    bad_checks = 0
    order: list[int] = []
    cap = cfg.iteration_cap
    it = 0
    while it < cap:
        if not order:
            order = list(rng.permutation(len(items)))[::-1]
        batch = [items[order.pop()] for _ in range(min(cfg.batch_size, len(order)))]
        result = network_forward_batch(
            model, [b[0] for b in batch], training=True, rng=drop_rng, dropout=cfg.dropout
        )
        dlogits = np.zeros(result.logits.shape, dtype=np.float64)
        loss = 0.0
        for i, (_, labels) in enumerate(batch):
            li, gi = ctc_loss_from_log_probs(result.log_probs(i), labels)
            if not np.isfinite(li):
                raise TrainingError(f"non-finite CTC loss at iteration {it}")
            loss += li / len(batch)
            dlogits[i, : result.lengths[i]] = gi / len(batch)
        network_backward(dlogits.astype(model.dtype), result)
        clip_global_norm([g for p in model.layers for g in p.grads.values()], cfg.clip)
        adam_step(model.layers, state)
        it += 1

        if it % cfg.checkpoint_interval == 0 or it == cap:
            cer_now = float(val_cer_fn(model, val))
            report.history.append(cer_now)
            report.check_iterations.append(it)
            log.info("iteration %d: loss %.4f, validation CER %.4f", it, loss, cer_now)
            if cer_now < report.best_cer:
                report.best_cer = cer_now
                report.best_check = len(report.history) - 1
                best = model.copy()
                bad_checks = 0
            else:
                bad_checks += 1
            if cfg.target_cer is not None and cer_now <= cfg.target_cer:
                report.reached_target = True
                report.stop_reason = "target"
                break
            if bad_checks >= cfg.patience:
                report.stop_reason = "patience"
                break
    else:
        report.stop_reason = "cap"

    report.iterations = it
    report.wall_time = time.perf_counter() - start
    best = best if best is not None else model.copy()
    best.zero_grad()
    best.hyper.update(val_cer=report.best_cer, iterations=report.best_iteration)
    return best, report


# -- finetuning ----------------------------------------------------------------


def adapt_output_layer(base: Model, codec: Codec, delta: CodecDelta, seed: int = 0) -> Model:
    """Copy of ``base`` whose output layer is re-indexed for ``codec``.

    Rows of kept characters (and blank) are copied verbatim; rows of added
    characters are freshly initialized; rows of removed characters are dropped.
    """
    model = base.copy()
    out = model.layer("output")
    kernel, bias = out.weights["kernel"], out.weights["bias"]
    rng = np.random.default_rng(seed)
    new_kernel = init_output_rows(rng, len(codec), kernel.shape[1], len(codec), kernel.dtype)
    new_bias = np.zeros(len(codec), dtype=bias.dtype)
    for old, new in delta.kept:
        new_kernel[new] = kernel[old]
        new_bias[new] = bias[old]
    out.weights = {"kernel": new_kernel, "bias": new_bias}
    out.zero_grad()
    model.codec = codec
    return model


def finetune(
    base: Model,
    new_train: Dataset,
    cfg: TrainConfig,
    whitelist: Iterable[str] = (),
    keep_all: bool = False,
    val: Dataset | None = None,
    val_cer_fn=None,
) -> tuple[Model, TrainReport]:
    """Resize the codec, perform the output-layer surgery and continue training.

    Without an explicit ``val`` set, ``cfg.val_fraction`` of ``new_train`` is
    split off for validation.
    """
    if len(new_train) == 0:
        raise DataError("finetuning needs at least one line")
    if val is None:
        new_train, val = split_train_val(new_train, cfg.val_fraction, cfg.seed)
    texts = new_train.texts + val.texts
    codec, delta = resize_codec(base.codec, texts, whitelist, keep_all)
    log.info("codec: kept %d, added %r, removed %r", len(delta.kept) - 1, "".join(delta.added), "".join(delta.removed))
    adapted = adapt_output_layer(base, codec, delta, cfg.seed)
    return train_loop(new_train, val, cfg, init=adapted, val_cer_fn=val_cer_fn)


def train_folds(
    ds: Dataset, k: int, cfg: TrainConfig, independent_seeds: bool = False
) -> list[tuple[Model, TrainReport]]:
    """Cross-fold voters that differ only in their training folds.

    Every fold starts from the same ``cfg.seed`` so the voters' CTC alignments
    stay close enough for per-timestep voting. ``independent_seeds`` gives
    fold ``i`` the seed ``cfg.seed + i`` instead.
    """
    out = []
    for i, (tr, va) in enumerate(make_folds(ds, k, cfg.seed)):
        fold_cfg = TrainConfig(**{**asdict(cfg), "seed": cfg.seed + i if independent_seeds else cfg.seed})
        log.info("fold %d/%d: %d train, %d validation lines", i + 1, k, len(tr), len(va))
        out.append(train_loop(tr, va, fold_cfg))
    return out
