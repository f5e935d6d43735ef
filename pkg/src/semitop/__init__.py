"""Finite semimodules, their subsemimodule lattices and closed-subbasis spaces."""
