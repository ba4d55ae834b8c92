from functools import lru_cache

from injector import Injector

from .commands import CommandModule
from .config import provide_config


@lru_cache
def provide_injector() -> Injector:
    return Injector(modules=[provide_config, CommandModule])
