# -*- coding: utf-8 -*-
r"""Module defines the record, threshold and limit types of a corpus.

Records travel through the library in two shapes:

* :class:`RawRecord` holds an article as provided upstream (title, abstract,
  list of keywords) before any cleaning;
* :class:`PaperRecord` holds the lowercased token views and the keyphrase
  string of a record that passed filtering.

Both serialize to the same line-delimited object with string fields
``title``, ``abstract`` and ``keywords``, so processed corpora can be fed back
to every command.
"""
from dataclasses import asdict, dataclass, field
from typing import Optional, Tuple

from ..helpers.codec import join, parse
from ..helpers.tokenizer import tokenize


SPLITS = ("train", "val", "test")


def _parse_all(keywords):
    """Parse every keyword and flatten the clean phrases in order."""
    return [phrase for keyword in keywords for phrase in parse(keyword)]


@dataclass(frozen=True)
class RawRecord:
    """Article metadata as provided upstream; any field may be empty."""

    title: str = ""
    abstract: str = ""
    keywords: Tuple[str, ...] = ()

    @classmethod
    def from_mapping(cls, data):
        """Build a record from a decoded corpus line.

        ``keywords`` may be a list of phrases or a keyphrase string.

        Raises
        ------
        :obj:`ValueError`
            If ``data`` is not a mapping or a field has an unexpected type.

        """
        if not isinstance(data, dict):
            raise ValueError("malformed_record: expected an object")

        title = data.get("title") or ""
        abstract = data.get("abstract") or ""
        keywords = data.get("keywords") or ()

        if not isinstance(title, str) or not isinstance(abstract, str):
            raise ValueError("malformed_record: 'title' and 'abstract' must be text")

        if isinstance(keywords, str):
            keywords = parse(keywords)
        elif isinstance(keywords, (list, tuple)) and all(
            isinstance(keyword, str) for keyword in keywords
        ):
            keywords = _parse_all(keywords)
        else:
            raise ValueError("malformed_record: 'keywords' must be text or a list")

        return cls(
            title=title,
            abstract=abstract,
            keywords=tuple(keyword for keyword in keywords if keyword),
        )

    @property
    def keyphrase_string(self):
        """:obj:`str` Keywords joined into a keyphrase string."""
        return join(_parse_all(self.keywords))

    @property
    def cased_text(self):
        """:obj:`str` Title and abstract before lowercasing."""
        return "{} {}".format(self.title, self.abstract).strip()


@dataclass(frozen=True)
class PaperRecord:
    """Lowercased, tokenized record with its keyphrase string."""

    title_tokens: Tuple[str, ...]
    abstract_tokens: Tuple[str, ...]
    keyphrase_string: str
    split: str = "train"

    @classmethod
    def from_raw(cls, raw, split="train"):
        """Tokenize and lowercase ``raw`` without applying any filter."""
        return cls(
            title_tokens=tuple(tokenize(raw.title.lower())),
            abstract_tokens=tuple(tokenize(raw.abstract.lower())),
            keyphrase_string=raw.keyphrase_string,
            split=split,
        )

    @property
    def doc_tokens(self):
        """:obj:`tuple` Title tokens followed by abstract tokens."""
        return self.title_tokens + self.abstract_tokens

    @property
    def keyphrases(self):
        """:obj:`list` Keyphrase list parsed from the keyphrase string."""
        return parse(self.keyphrase_string)

    def to_mapping(self):
        """Return the line-delimited object form of the record."""
        return {
            "title": " ".join(self.title_tokens),
            "abstract": " ".join(self.abstract_tokens),
            "keywords": self.keyphrase_string,
            "split": self.split,
        }


@dataclass(frozen=True)
class FilterThresholds:
    """Inclusive minimum token counts a record must reach to be kept."""

    min_abstract_tokens: int = 20
    min_title_tokens: int = 2
    min_keyword_tokens: int = 2

    def __post_init__(self):
        """Validate that every threshold is at least one."""
        if min(asdict(self).values()) < 1:
            raise ValueError("invalid_config: thresholds must be >= 1")

    @classmethod
    def for_split(cls, split):
        """Return the preset thresholds of ``split``."""
        try:
            return SPLIT_THRESHOLDS[split]
        except KeyError:
            raise ValueError("invalid_config: unknown split '{}'".format(split))


SPLIT_THRESHOLDS = {
    "train": FilterThresholds(20, 2, 2),
    "val": FilterThresholds(20, 2, 2),
    "test": FilterThresholds(27, 3, 2),
}


@dataclass(frozen=True)
class ModelTextLimits:
    """Length and vocabulary limits of model-ready examples."""

    max_source_tokens: int = 270
    max_target_tokens: int = 21
    vocab_cap: int = 90000

    def __post_init__(self):
        """Validate that every limit is positive."""
        if min(asdict(self).values()) < 1:
            raise ValueError("invalid_config: limits must be > 0")


@dataclass(frozen=True)
class ModelExample:
    """Source and target token sequences of one model-ready example."""

    source: Tuple[str, ...]
    target: Tuple[str, ...]


@dataclass(frozen=True)
class FilterOutcome:
    """Result of filtering one record: the kept record or a rejection reason."""

    record: Optional[PaperRecord] = None
    reason: Optional[str] = None
    counts: dict = field(default_factory=dict)

    @property
    def kept(self):
        """:obj:`bool` :obj:`True`, if the record passed every filter."""
        return self.record is not None
