from typing import Annotated

from pydantic import PlainSerializer


# Exact integers outgrow JSON number precision; they travel as decimal strings.
BigInt = Annotated[int, PlainSerializer(str, return_type=str, when_used="json")]
