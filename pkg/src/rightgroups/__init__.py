"""Cayley graphs of finite right groups and their surface embeddings."""

__version__ = "0.1.0"
