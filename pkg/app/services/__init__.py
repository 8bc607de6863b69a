"""
Service layer: exact q-series arithmetic, family enumeration, counting,
generating functions and the identity registry.
"""
