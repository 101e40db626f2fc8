# bcinverse_engine/engine/engine.py
from typing import Optional

from bcinverse_engine.backends.matrix import backend_for
from bcinverse_engine.config.settings import Settings
from bcinverse_engine.engine.one_sided import OneSidedMixin
from bcinverse_engine.engine.specializations import SpecializationMixin
from bcinverse_engine.rings.base import RingHandle


class InverseEngine(SpecializationMixin, OneSidedMixin):
    """Every generalized-inverse operation over one backend."""


def engine_for(ring: RingHandle, settings: Optional[Settings] = None) -> InverseEngine:
    return InverseEngine(backend_for(ring, settings), settings)
