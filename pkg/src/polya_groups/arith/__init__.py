"""
Pure integer arithmetic: primes and factorization, ramification-index
identities and finite abelian group structure.

Submodules are imported explicitly by their consumers.
"""
