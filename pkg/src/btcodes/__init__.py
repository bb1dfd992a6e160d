"""Block-transitive algebraic-geometry codes: finite fields, asymptotic
bounds, tower parameters, polynomial searches and code construction."""

__version__ = "0.1.0"
