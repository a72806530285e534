"""Character error rate, confusion statistics and worst-line reports."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numba
import numpy as np


@numba.njit(cache=True)
def levenshtein(a, b):
    """Unit-cost edit distance between two integer sequences."""
    m, n = a.shape[0], b.shape[0]
    prev = np.arange(n + 1)
    cur = np.empty(n + 1, dtype=prev.dtype)
    for i in range(1, m + 1):
        cur[0] = i
        ai = a[i - 1]
        for j in range(1, n + 1):
            best = prev[j - 1] + (0 if ai == b[j - 1] else 1)
            if prev[j] + 1 < best:
                best = prev[j] + 1
            if cur[j - 1] + 1 < best:
                best = cur[j - 1] + 1
            cur[j] = best
        prev, cur = cur, prev
    return prev[n]


def _codes(s: str) -> np.ndarray:
    return np.frombuffer(s.encode("utf-32-le"), dtype=np.uint32)


def edit_distance(s1: str, s2: str) -> int:
    return int(levenshtein(_codes(s1), _codes(s2)))


def align(s1: str, s2: str) -> list[tuple[str, str]]:
    """Minimal-cost alignment of ``s1`` (ground truth) against ``s2`` (prediction).

    Returns ``(gt, pred)`` pairs; deletions have ``pred == ""`` and insertions
    ``gt == ""``. Backtrace prefers match/substitution, then deletion, then
    insertion.
    """
    m, n = len(s1), len(s2)
    d = np.zeros((m + 1, n + 1), dtype=np.int64)
    d[:, 0] = np.arange(m + 1)
    d[0, :] = np.arange(n + 1)
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            d[i, j] = min(
                d[i - 1, j - 1] + (s1[i - 1] != s2[j - 1]),
                d[i - 1, j] + 1,
                d[i, j - 1] + 1,
            )
    ops = []
    i, j = m, n
    while i > 0 or j > 0:
        if i > 0 and j > 0 and d[i, j] == d[i - 1, j - 1] + (s1[i - 1] != s2[j - 1]):
            ops.append((s1[i - 1], s2[j - 1]))
            i, j = i - 1, j - 1
        elif i > 0 and d[i, j] == d[i - 1, j] + 1:
            ops.append((s1[i - 1], ""))
            i -= 1
        else:
            ops.append(("", s2[j - 1]))
            j -= 1
    ops.reverse()
    return ops


def cer(gt: str, pred: str) -> float:
    """Edit distance normalized by the longer string; two empty strings give 0."""
    longest = max(len(gt), len(pred))
    if longest == 0:
        return 0.0
    return edit_distance(gt, pred) / longest


def corpus_cer(pairs: Sequence[tuple[str, str]]) -> float:
    """Summed edit distance over summed max-lengths."""
    if not pairs:
        raise ValueError("corpus_cer needs at least one (gt, pred) pair")
    errors = sum(edit_distance(g, p) for g, p in pairs)
    total = sum(max(len(g), len(p)) for g, p in pairs)
    return errors / total if total else 0.0


def mean_line_cer(pairs: Sequence[tuple[str, str]]) -> float:
    return float(np.mean([cer(g, p) for g, p in pairs]))


@dataclass
class Confusion:
    gt: str
    pred: str
    count: int
    pct: float


@dataclass
class ConfusionStats:
    top: list[Confusion]
    remaining_count: int
    remaining_pct: float
    total_errors: int


def confusion_stats(pairs: Iterable[tuple[str, str]], top_n: int = 20) -> ConfusionStats:
    counts: Counter = Counter()
    for g, p in pairs:
        for a, b in align(g, p):
            if a != b:
                counts[(a, b)] += 1
    total = sum(counts.values())
    # count descending, then by fragments for a stable table
    ranked = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    top = [Confusion(a, b, c, 100.0 * c / total) for (a, b), c in ranked[:top_n]]
    rest = sum(c for _, c in ranked[top_n:])
    return ConfusionStats(top, rest, 100.0 * rest / total if total else 0.0, total)


@dataclass
class LineError:
    index: int
    errors: int
    gt: str
    pred: str
    name: str = ""


def worst_lines(pairs: Sequence[tuple[str, str]], n: int, names: Sequence[str] | None = None) -> list[LineError]:
    """The ``n`` lines with the most edit operations, ties in input order."""
    rows = [
        LineError(i, edit_distance(g, p), g, p, names[i] if names else "")
        for i, (g, p) in enumerate(pairs)
    ]
    rows.sort(key=lambda r: -r.errors)
    return rows[:n]


@dataclass
class EvalReport:
    total_chars: int
    corpus_cer: float
    mean_line_cer: float
    line_cers: list[float]
    confusions: ConfusionStats
    worst: list[LineError] = field(default_factory=list)

    def as_dict(self) -> dict:
        return {
            "total_chars": self.total_chars,
            "corpus_cer": self.corpus_cer,
            "mean_line_cer": self.mean_line_cer,
            "line_cers": self.line_cers,
            "total_errors": self.confusions.total_errors,
            "confusions": [[c.gt, c.pred, c.count, c.pct] for c in self.confusions.top],
            "remaining": [self.confusions.remaining_count, self.confusions.remaining_pct],
            "worst": [[w.name or w.index, w.errors, w.gt, w.pred] for w in self.worst],
        }


def evaluate(pairs, top_n: int = 20, worst_n: int = 10, names=None) -> EvalReport:
    pairs = list(pairs)
    return EvalReport(
        total_chars=sum(len(g) for g, _ in pairs),
        corpus_cer=corpus_cer(pairs),
        mean_line_cer=mean_line_cer(pairs),
        line_cers=[cer(g, p) for g, p in pairs],
        confusions=confusion_stats(pairs, top_n),
        worst=worst_lines(pairs, worst_n, names),
    )


def _show(s: str) -> str:
    return "{ }" if s == " " else s


def format_report(report: EvalReport) -> str:
    """Plain-text report: summary lines, then GT / PRED / COUNT / PERCENT."""
    out = [
        f"chars: {report.total_chars}",
        f"errors: {report.confusions.total_errors}",
        f"CER: {100 * report.corpus_cer:.3f}%",
        f"mean line CER: {100 * report.mean_line_cer:.3f}%",
        "",
        f"{'GT':<6}{'PRED':<6}{'COUNT':>7}{'PERCENT':>10}",
    ]
    for c in report.confusions.top:
        out.append(f"{_show(c.gt):<6}{_show(c.pred):<6}{c.count:>7}{c.pct:>9.2f}%")
    out.append(
        f"{'remaining':<12}{report.confusions.remaining_count:>7}{report.confusions.remaining_pct:>9.2f}%"
    )
    if report.worst:
        out += ["", "worst lines:"]
        for w in report.worst:
            out.append(f"  {w.name or w.index}\t{w.errors}\t{w.gt!r}\t{w.pred!r}")
    return "\n".join(out)
