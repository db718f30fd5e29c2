"""Bundled data files: stopwords, lexicons, phrase corpus, desk-scale
lexical database."""

from importlib import resources


def asset_path(name: str):
    """Traversable handle for a bundled asset file."""
    return resources.files(__name__).joinpath(name)


def read_asset(name: str) -> str:
    """Contents of a bundled asset file as UTF-8 text."""
    return asset_path(name).read_text(encoding="utf-8")
