"""
Corpus package initialization.
"""

from .eta import classical_eisenstein, eta_product, euler_product, series_power
from .loader import CorpusLoader, corpus_get, get_corpus_loader, list_entries, reset_corpus_loader

__all__ = [
    "CorpusLoader",
    "get_corpus_loader",
    "reset_corpus_loader",
    "corpus_get",
    "list_entries",
    "eta_product",
    "euler_product",
    "series_power",
    "classical_eisenstein",
]
