"""Anagram-free colourings of graphs: words, colourers, gadgets and an exact solver."""

from .core import AnagramWitness, Colouring, Graph, contains_k_anagram, is_k_anagram_free

__version__ = "0.1.0"

__all__ = ["AnagramWitness", "Colouring", "Graph", "contains_k_anagram", "is_k_anagram_free"]
