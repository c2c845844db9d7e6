"""Text normalization: tokenization, stopword removal, stemming.

The whole engine runs every piece of text (documents, topic titles,
ad-hoc queries) through the same tokenize -> stop -> stem pipeline so
that index terms, query terms, and embedding keys always agree.
"""

from __future__ import annotations

import re
from importlib import resources
from typing import Callable, Iterable, Sequence

# Letters/digits, with hyphens and periods allowed only between such
# runs; leading/trailing punctuation never makes it into a token.
_TOKEN_RE = re.compile(r"[^\W_]+(?:[-.][^\W_]+)*", re.UNICODE)


def tokenize(text: str) -> list[str]:
    """Lowercase and split text into normalized tokens.

    Internal hyphens and periods survive ("anti-missile", "u.s", "2.5");
    surrounding punctuation is stripped.
    """
    return _TOKEN_RE.findall(text.lower())


def remove_stopwords(tokens: Iterable[str], stoplist: set[str]) -> list[str]:
    """Order-preserving removal of stoplisted tokens."""
    return [t for t in tokens if t not in stoplist]


def load_stoplist(path) -> set[str]:
    """Read a one-term-per-line stoplist file. Lines starting with '#'
    and blank lines are ignored."""
    stoplist = set()
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            term = line.strip()
            if term and not term.startswith("#"):
                stoplist.add(term.lower())
    return stoplist


def default_stoplist() -> set[str]:
    """The bundled SMART-style stopword list."""
    data = resources.files("aqe.data").joinpath("smart_stopwords.txt")
    stoplist = set()
    for line in data.read_text(encoding="utf-8").splitlines():
        term = line.strip()
        if term and not term.startswith("#"):
            stoplist.add(term.lower())
    return stoplist


# ---------------------------------------------------------------------------
# Stemmers

Stemmer = Callable[[str], str]


def identity_stem(token: str) -> str:
    return token


# (suffix, replacement, min length of the remaining stem). Checked
# longest-suffix-first; at most one rule fires per call. Rules are
# chosen so that every output is itself a fixed point, which keeps
# stemming idempotent without a dictionary.
_SUFFIX_RULES: list[tuple[str, str, int]] = [
    ("ational", "", 4),
    ("ations", "", 3),
    ("ative", "", 3),
    ("ation", "", 3),
    ("sses", "ss", 2),
    ("ance", "", 3),
    ("ence", "", 3),
    ("ions", "", 4),
    ("ies", "i", 2),
    ("ism", "", 3),
    ("ity", "", 3),
    ("ion", "", 4),
    ("ing", "", 3),
    ("ogy", "og", 3),
]

_SIBILANTS = ("s", "z", "x", "sh", "ch")


def suffix_stem(token: str) -> str:
    """Simple deterministic suffix-stripping stemmer (default).

    Not Krovetz: no dictionary, so derivational strips are approximate,
    but output is stable and idempotent, e.g. "defenses" -> "defens",
    "anti-missile" -> "anti-missil".
    """
    stem = token
    for suffix, repl, min_stem in sorted(_SUFFIX_RULES, key=lambda r: -len(r[0])):
        if stem.endswith(suffix) and len(stem) - len(suffix) >= min_stem:
            stem = stem[: len(stem) - len(suffix)] + repl
            break
    else:
        if stem.endswith("ic") and len(stem) - 2 >= 6:
            # long stems only, so e.g. "generic" survives
            stem = stem[:-2]
        elif stem.endswith("es") and stem[:-2].endswith(_SIBILANTS) and len(stem) >= 5:
            # epenthetic plural after a sibilant: boxes, defenses
            stem = stem[:-2]
        elif (
            stem.endswith("s")
            and len(stem) > 3
            and not stem.endswith(("ss", "us", "is", "es", "ens"))
        ):
            stem = stem[:-1]
    # final -e drop after any other rule ("defense" -> "defens",
    # "articles" -> "article" -> "articl")
    if stem.endswith("e") and len(stem) >= 5:
        stem = stem[:-1]
    return stem


_STEMMERS: dict[str, Stemmer] = {
    "suffix": suffix_stem,
    "identity": identity_stem,
    "none": identity_stem,
}


def get_stemmer(name: str) -> Stemmer:
    try:
        return _STEMMERS[name]
    except KeyError:
        raise ValueError(
            f"unknown stemmer {name!r}; choose from {sorted(_STEMMERS)}"
        ) from None


def preprocess(
    text: str,
    stoplist: set[str] | None = None,
    stemmer: Stemmer = suffix_stem,
) -> list[str]:
    """Full pipeline: tokenize, stop, stem."""
    tokens = tokenize(text)
    if stoplist:
        tokens = remove_stopwords(tokens, stoplist)
    return [stemmer(t) for t in tokens]
