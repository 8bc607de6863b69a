"""
Configuration, logging and error types shared by the services, CLI and API.
"""
