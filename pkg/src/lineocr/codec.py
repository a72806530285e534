"""Character codec: label 0 is the CTC blank, labels 1.. are characters."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable


class CodecError(ValueError):
    pass


@dataclass(frozen=True)
class Codec:
    chars: tuple[str, ...]
    _index: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        chars = tuple(self.chars)
        object.__setattr__(self, "chars", chars)
        if len(set(chars)) != len(chars):
            raise CodecError("codec contains duplicate characters")
        if any(len(c) != 1 for c in chars):
            raise CodecError("codec entries must be single characters")
        object.__setattr__(self, "_index", {c: i + 1 for i, c in enumerate(chars)})

    def __len__(self):
        """Number of output classes, blank included."""
        return len(self.chars) + 1

    def __contains__(self, ch):
        return ch in self._index

    def index(self, ch: str) -> int:
        return self._index[ch]

    def encode(self, text: str) -> list[int]:
        try:
            return [self._index[c] for c in text]
        except KeyError:
            for offset, c in enumerate(text):
                if c not in self._index:
                    raise CodecError(f"character {c!r} at offset {offset} is not in the codec") from None
            raise

    def decode(self, labels: Iterable[int]) -> str:
        out = []
        for k in labels:
            k = int(k)
            if not 1 <= k <= len(self.chars):
                raise CodecError(f"label {k} out of range [1, {len(self.chars)}]")
            out.append(self.chars[k - 1])
        return "".join(out)


def build_codec(texts: Iterable[str]) -> Codec:
    chars = set()
    for t in texts:
        chars.update(t)
    if not chars:
        raise CodecError("no characters in the training texts")
    return Codec(tuple(sorted(chars)))


@dataclass(frozen=True)
class CodecDelta:
    kept: tuple[tuple[int, int], ...]  # (old label, new label), blank first
    added: tuple[str, ...]
    removed: tuple[str, ...]


def resize_codec(
    base: Codec, new_texts: Iterable[str], whitelist: Iterable[str] = (), keep_all: bool = False
) -> tuple[Codec, CodecDelta]:
    """Adapt ``base`` to a new corpus.

    The new alphabet holds the characters of ``new_texts``, the whitelisted
    characters already known to ``base`` and, with ``keep_all``, every base
    character.
    """
    wanted = set()
    for t in new_texts:
        wanted.update(t)
    wanted |= set(whitelist) & set(base.chars)
    if keep_all:
        wanted |= set(base.chars)
    new = Codec(tuple(sorted(wanted)))
    kept = [(0, 0)] + [(base.index(c), new.index(c)) for c in new.chars if c in base]
    added = tuple(c for c in new.chars if c not in base)
    removed = tuple(c for c in base.chars if c not in new)
    return new, CodecDelta(tuple(kept), added, removed)
