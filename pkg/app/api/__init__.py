"""
API package containing versioned routes and related components.
"""


