# -*- coding: utf-8 -*-
r"""Module implements a deterministic rule-based tokenizer and word list loaders.

Tokens are produced by splitting text on Unicode whitespace and then detaching
punctuation characters as standalone single-character tokens. Hyphens and
periods flanked by alphanumeric characters stay inside the token, so
``state-of-the-art`` and ``3.5`` are single tokens. A trailing period is kept
on abbreviations made of single letters separated by periods (``e.g.``,
``U.S.``).

Example
-------
::

    from keyphrase_bench.helpers.tokenizer import tokenize

    tokenize("Deep Learning improves NLP.")
    # ['Deep', 'Learning', 'improves', 'NLP', '.']

"""
import re
from functools import lru_cache
from logging import getLogger
from pathlib import Path


_logger = getLogger(__name__)

RESOURCES_DIR = Path(__file__).parent / "resources"

DEFAULT_STOPWORDS_PATH = RESOURCES_DIR / "stopwords_en.txt"
DEFAULT_FUNCTION_WORDS_PATH = RESOURCES_DIR / "function_words_en.txt"

SENTENCE_END_TOKENS = frozenset({".", "!", "?"})

_INNER_JOINERS = frozenset({"-", "."})

_ABBREVIATION = re.compile(r"^(?:[^\W\d_]\.)+[^\W\d_]$")

# layout markers left over in texts extracted from full articles
_SECTION_TAGS = re.compile(r"(?:(?<=\s)|^)--[A-Z](?=\s|$)|\bFigure\s+\d+[a-z]?\b")


def is_punctuation(token):
    """Check whether ``token`` has no alphanumeric character at all.

    Parameters
    ----------
    token : :obj:`str`
        Token to check.

    Returns
    -------
    :obj:`bool`
        :obj:`True`, if every character of a non-empty ``token`` is punctuation
        or symbol.

    """
    return bool(token) and not any(char.isalnum() for char in token)


def _split_chunk(chunk):
    """Split a whitespace-free chunk into word and punctuation tokens."""
    tokens = []
    word = []

    last = len(chunk) - 1

    for pos, char in enumerate(chunk):
        if char.isalnum():
            word.append(char)
            continue

        if (
            char in _INNER_JOINERS
            and word
            and pos < last
            and chunk[pos + 1].isalnum()
        ):
            word.append(char)
            continue

        if (
            char == "."
            and word
            and (pos == last or not chunk[pos + 1].isalnum())
            and _ABBREVIATION.match("".join(word))
        ):
            word.append(char)
            continue

        if word:
            tokens.append("".join(word))
            word = []

        tokens.append(char)

    if word:
        tokens.append("".join(word))

    return tokens


def tokenize(text):
    """Split ``text`` into a deterministic list of tokens.

    Parameters
    ----------
    text : :obj:`str`
        UTF-8 text to tokenize.

    Returns
    -------
    :obj:`list` of :obj:`str`
        Tokens in text order, empty for empty or blank input.

    """
    tokens = []

    for chunk in text.split():
        tokens.extend(_split_chunk(chunk))

    return tokens


def strip_section_tags(text):
    """Remove layout markers like ``--T``, ``--A`` or ``Figure 3`` from ``text``."""
    return " ".join(_SECTION_TAGS.sub(" ", text).split())


@lru_cache(maxsize=8)
def load_word_list(path=DEFAULT_STOPWORDS_PATH):
    """Load a word list with one lowercased entry per line.

    Lines starting with ``#`` are comments; a ``# version: N`` comment is
    logged for audit purposes.

    Parameters
    ----------
    path : :obj:`str` or :class:`~pathlib.Path`, optional
        Word list to read.
        (default bundled English stopword list)

    Returns
    -------
    :obj:`frozenset` of :obj:`str`
        Words from the list.

    """
    path = Path(path)
    words = set()
    version = None

    with path.open(encoding="utf-8") as handle:
        for line in handle:
            line = line.strip()

            if not line:
                continue

            if line.startswith("#"):
                if line[1:].strip().startswith("version:"):
                    version = line.split(":", 1)[1].strip()
                continue

            words.add(line.lower())

    _logger.debug(
        "loaded %d words from '%s' (version %s)", len(words), path.name, version
    )

    return frozenset(words)


def load_stopwords(path=None):
    """Load stopwords from ``path`` or the bundled English list."""
    return load_word_list(Path(path) if path else DEFAULT_STOPWORDS_PATH)


def load_function_words(path=None):
    """Load function words from ``path`` or the bundled English list."""
    return load_word_list(Path(path) if path else DEFAULT_FUNCTION_WORDS_PATH)
