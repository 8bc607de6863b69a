"""
Pydantic schemas used for request/response models across the API.
"""


