"""
Collection of versioned API routers.
"""


from .counting import router as counting_router  # noqa: F401
from .families import router as families_router  # noqa: F401
from .genfun import router as genfun_router  # noqa: F401
from .identities import router as identities_router  # noqa: F401
from .series import router as series_router  # noqa: F401
