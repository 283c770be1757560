# -*- coding: utf-8 -*-
r"""Module converts keyphrase strings to keyphrase lists and canonical forms.

A *keyphrase string* joins the keyphrases of one article with separators. Real
predictions are noisy, so :func:`parse` splits on both ``,`` and ``;``, drops
empty segments and drops punctuation-only tokens inside segments. Canonical
forms used for comparison are lowercased, Porter-stemmed per token and
single-space joined; :func:`normalize` deduplicates them keeping the first
occurrence.

Example
-------
::

    from keyphrase_bench.helpers.codec import normalize, parse

    phrases = parse("health care,,,,immune system; human -; metabolism")
    # ['health care', 'immune system', 'human', 'metabolism']

    normalize(["Neural Networks", "neural network"])
    # ['neural network']

Note
----
Porter stemming is not idempotent for a handful of words (``agreed`` stems to
``agre``, which stems to ``agr``). Canonical forms therefore iterate the
stemmer to a fixed point, so normalizing an already normalized list returns it
unchanged. :func:`porter_stem` stays the single-pass reference algorithm.

"""
import re
from functools import lru_cache

from nltk.stem.porter import PorterStemmer

from .tokenizer import is_punctuation


SEPARATORS = re.compile(r"[,;]")

JOINER = ", "

# matches the reference vocabulary published with the algorithm
_stemmer = PorterStemmer(mode=PorterStemmer.MARTIN_EXTENSIONS)


def parse(keyphrase_string):
    """Split a keyphrase string into a list of clean surface phrases.

    Parameters
    ----------
    keyphrase_string : :obj:`str`
        Keyphrases separated by ``,`` or ``;``.

    Returns
    -------
    :obj:`list` of :obj:`str`
        Phrases in input order, each a single-space joined sequence of tokens
        that are not punctuation-only.

    """
    phrases = []

    for segment in SEPARATORS.split(keyphrase_string or ""):
        tokens = [token for token in segment.split() if not is_punctuation(token)]

        if tokens:
            phrases.append(" ".join(tokens))

    return phrases


def join(phrases):
    """Join ``phrases`` into a keyphrase string with ``", "``."""
    return JOINER.join(phrases)


@lru_cache(maxsize=65536)
def porter_stem(word):
    """Stem a single token with the Porter algorithm.

    Parameters
    ----------
    word : :obj:`str`
        Non-empty token; it is lowercased before stemming.

    Returns
    -------
    :obj:`str`
        Porter stem of the lowercased token.

    """
    return _stemmer.stem(word.lower())


@lru_cache(maxsize=65536)
def canonical_stem(word):
    """Return the Porter stem of ``word`` iterated until it no longer changes."""
    current = word.lower()

    for _ in range(len(current) + 1):
        stem = porter_stem(current)

        if stem == current:
            break

        current = stem

    return current


def canonical_form(phrase):
    """Return the canonical comparison form of a surface ``phrase``."""
    return " ".join(canonical_stem(token) for token in phrase.split())


def normalize(phrases):
    """Canonicalize ``phrases`` and remove duplicates keeping the first one.

    Parameters
    ----------
    phrases : :obj:`list` of :obj:`str`
        Keyphrase list, e.g. from :func:`parse`.

    Returns
    -------
    :obj:`list` of :obj:`str`
        Canonical phrases without duplicates, in first-occurrence order.

    """
    seen = set()
    canonical = []

    for phrase in phrases:
        form = canonical_form(phrase)

        if form and form not in seen:
            seen.add(form)
            canonical.append(form)

    return canonical
